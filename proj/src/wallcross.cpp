#include "curvecount/wallcross.hpp"

#include "curvecount/invariants.hpp"
#include "curvecount/numtheory.hpp"
#include "curvecount/partitions.hpp"

namespace curvecount {

namespace {

template <Ring R>
MultiSeries<R> grid_series(const std::map<GridKey, R>& table, const Profile& box) {
    MultiSeries<R> s(box);
    for (const auto& [key, value] : table) {
        auto [n, d] = key;
        s.add_clipped(box.exps({{Var::q, static_cast<int>(n)}, {Var::t, d}}), value);
    }
    return s;
}

} // namespace

std::map<GridKey, Rational> dual_assemble(const WallcrossInput& input) {
    if (input.n_max < 1 || input.d_max < 0)
        throw SeriesDomainError("dual_assemble: empty grid");
    for (const auto& [key, value] : input.n_red)
        if (key.first < 1)
            throw SeriesDomainError("dual_assemble: N^red defined only for n >= 1");

    Profile box({{Var::q, 0, static_cast<int>(input.n_max)}, {Var::t, 0, input.d_max}});

    MultiSeries<DualNumber> exponent(box);
    for (const auto& [key, value] : input.n_red) {
        auto [n, d] = key;
        Rational weight = Rational(n % 2 == 1 ? 1 : -1) * Rational(Integer(n)) * value;
        exponent.add_clipped(box.exps({{Var::q, static_cast<int>(n)}, {Var::t, d}}),
                             DualNumber(Rational(0), weight));
    }

    MultiSeries<DualNumber> lpart(box);
    for (long n = 0; n <= input.n_max; ++n)
        for (int d = 0; d <= input.d_max; ++d) {
            auto l = input.l.find({n, d});
            auto lr = input.l_red.find({n, d});
            DualNumber v(l == input.l.end() ? Rational(0) : l->second,
                         lr == input.l_red.end() ? Rational(0) : lr->second);
            lpart.add_clipped(box.exps({{Var::q, static_cast<int>(n)}, {Var::t, d}}), v);
        }

    MultiSeries<DualNumber> assembled = exp_series(exponent) * lpart;

    std::map<GridKey, Rational> out;
    for (long n = 0; n <= input.n_max; ++n)
        for (int d = 0; d <= input.d_max; ++d)
            out[{n, d}] =
                assembled.coeff({{Var::q, static_cast<int>(n)}, {Var::t, d}}).eps();
    return out;
}

std::map<GridKey, BiDualNumber> bidual_assemble(const BiWallcrossInput& input) {
    if (input.n_max < 1 || input.d_max < 0)
        throw SeriesDomainError("bidual_assemble: empty grid");
    for (const auto& [key, value] : input.n_bullet)
        if (key.first < 1)
            throw SeriesDomainError("bidual_assemble: N defined only for n >= 1");

    Profile box({{Var::q, 0, static_cast<int>(input.n_max)}, {Var::t, 0, input.d_max}});

    MultiSeries<BiDualNumber> exponent(box);
    for (const auto& [key, value] : input.n_bullet) {
        auto [n, d] = key;
        BiDualNumber w =
            BiDualNumber(Rational(n % 2 == 1 ? 1 : -1) * Rational(Integer(n))) * value;
        exponent.add_clipped(box.exps({{Var::q, static_cast<int>(n)}, {Var::t, d}}), w);
    }

    MultiSeries<BiDualNumber> assembled =
        exp_series(exponent) * grid_series(input.l_bullet, box);

    std::map<GridKey, BiDualNumber> out;
    for (long n = 0; n <= input.n_max; ++n)
        for (int d = 0; d <= input.d_max; ++d)
            out[{n, d}] = assembled.coeff({{Var::q, static_cast<int>(n)}, {Var::t, d}});
    return out;
}

WallcrossInput k3xe_wallcross_input(long n_max, int d_max) {
    WallcrossInput in;
    in.n_max = n_max;
    in.d_max = d_max;
    EulerTable a = euler_hilb_k3(d_max);
    for (long n = 1; n <= n_max; ++n)
        for (int d = 0; d <= d_max; ++d)
            in.n_red[{n, d}] = n_red_k3xe(n, d);
    for (int d = 0; d <= d_max; ++d)
        in.l[{0, d}] = Rational(a.at(d));
    return in;
}

BiWallcrossInput abelian_wallcross_input(long n_max, int d_max) {
    BiWallcrossInput in;
    in.n_max = n_max;
    in.d_max = d_max;
    for (long n = 1; n <= n_max; ++n)
        for (int d = 0; d <= d_max; ++d) {
            Rational v = Rational(sigma(2, gcd_nonneg(n, d))) /
                         Rational(Integer(n) * Integer(n));
            in.n_bullet[{n, d}] = BiDualNumber(Rational(0), Rational(0), Rational(0), v);
        }
    in.l_bullet[{0, 0}] = BiDualNumber::one();
    for (int d = 1; d <= d_max; ++d)
        in.l_bullet[{0, d}] =
            BiDualNumber(Rational(0), hilb_quotient_euler(d), Rational(0), Rational(0));
    return in;
}

Rational hilb_quotient_euler(int d) {
    if (d < 1) throw SeriesDomainError("hilb_quotient_euler: d must be >= 1");
    auto lg = log_series(partition_series(2, d));
    return lg.coeff({{Var::q, d}});
}

} // namespace curvecount
