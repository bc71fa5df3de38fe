#include "curvecount/jacobi.hpp"

#include "curvecount/numtheory.hpp"

namespace curvecount {

RSeries weierstrass_p(int p_min, int p_max, int t_max) {
    if (p_max < 1 || p_min > 0)
        throw SeriesDomainError("weierstrass_p: p window must contain [0, 1]");
    Profile box({{Var::p, p_min, p_max}, {Var::t, 0, t_max}});
    RSeries s(box);
    s.add_to(box.exps({}), Rational(1, 12));
    for (int j = 1; j <= p_max; ++j)
        s.add_to(box.exps({{Var::p, j}}), Rational(j));
    for (int d = 1; d <= t_max; ++d) {
        for (long k : divisors(d)) {
            s.add_clipped(box.exps({{Var::p, static_cast<int>(k)}, {Var::t, d}}),
                          Rational(Integer(k)));
            s.add_clipped(box.exps({{Var::t, d}}), Rational(-2 * Integer(k)));
            s.add_clipped(box.exps({{Var::p, static_cast<int>(-k)}, {Var::t, d}}),
                          Rational(Integer(k)));
        }
    }
    return s;
}

RSeries phi_m21(int p_min, int p_max, int t_max) {
    if (p_min > -(t_max + 1) || p_max < t_max + 1)
        throw SeriesDomainError("phi_m21: p window too narrow for t_max = " +
                                std::to_string(t_max));
    Profile box({{Var::p, p_min, p_max}, {Var::t, 0, t_max}});
    std::vector<Factor<Rational>> fs;
    for (int m = 1; m <= t_max; ++m) {
        fs.push_back({Rational(1), box.exps({{Var::p, 1}, {Var::t, m}}), 2});
        fs.push_back({Rational(1), box.exps({{Var::p, -1}, {Var::t, m}}), 2});
        fs.push_back({Rational(1), box.exps({{Var::t, m}}), -4});
    }
    RSeries prod = product_eval(fs, box);
    RSeries pre(box);
    pre.add_to(box.exps({{Var::p, 1}}), Rational(1));
    pre.add_to(box.exps({}), Rational(-2));
    pre.add_to(box.exps({{Var::p, -1}}), Rational(1));
    return pre * prod;
}

namespace {

Integer coeff_as_integer(const RSeries& s, const ExpVec& e) {
    return s.coeff(e).to_integer();
}

/// Reads a table indexed by m = 4d - k^2 off a (p, t) series, asserting
/// well-definedness on the whole grid and vanishing below m = -1.
QuadraticCoeffTable read_quadratic(const RSeries& s, const std::string& name, long m_bound,
                                   int d_grid, int k_grid) {
    std::map<long, Integer> values;
    const Profile& box = s.profile();
    for (int d = 0; d <= d_grid; ++d) {
        for (int k = -k_grid; k <= k_grid; ++k) {
            Integer v = coeff_as_integer(s, box.exps({{Var::p, k}, {Var::t, d}}));
            long m = 4L * d - static_cast<long>(k) * k;
            if (m < -1) {
                if (v != 0)
                    throw SeriesDomainError(name + "(" + std::to_string(m) +
                                            ") nonzero below -1: series engine bug");
                continue;
            }
            auto [it, inserted] = values.emplace(m, v);
            if (!inserted && it->second != v)
                throw SeriesDomainError(name + "(" + std::to_string(m) +
                                        ") inconsistent across the grid: series engine bug");
        }
    }
    return QuadraticCoeffTable(name, std::move(values), m_bound, d_grid, k_grid);
}

} // namespace

QuadraticCoeffTable c_table(long m_bound, int k_grid) {
    if (m_bound < -1) throw SeriesDomainError("c_table: bound must be >= -1");
    int d_grid = static_cast<int>((m_bound + 1L * k_grid * k_grid) / 4 + 1);
    d_grid = std::max(d_grid, 1);
    k_grid = std::max(k_grid, 1);
    RSeries w = Rational(24) * (phi_m21(-(d_grid + 1), d_grid + 1, d_grid) *
                                weierstrass_p(-(d_grid + 1), d_grid + 1, d_grid));
    return read_quadratic(w, "c", m_bound, d_grid, k_grid);
}

QuadraticCoeffTable a_table(long m_bound, int k_grid) {
    if (m_bound < -1) throw SeriesDomainError("a_table: bound must be >= -1");
    int d_grid = static_cast<int>((m_bound + 1L * k_grid * k_grid) / 4 + 1);
    d_grid = std::max(d_grid, 1);
    k_grid = std::max(k_grid, 1);
    RSeries w = -phi_m21(-(d_grid + 1), d_grid + 1, d_grid);
    return read_quadratic(w, "a", m_bound, d_grid, k_grid);
}

MRowTable m_direct(int d_max, long n_min, long n_max) {
    if (d_max < 0 || n_min > n_max) throw SeriesDomainError("m_direct: empty request");
    int lo = static_cast<int>(std::min<long>(n_min, -d_max));
    int hi = static_cast<int>(std::max<long>(n_max, 1));
    RSeries wp = weierstrass_p(lo, hi, d_max);
    Profile box = wp.profile();
    std::vector<Factor<Rational>> fs;
    for (int m = 1; m <= d_max; ++m)
        fs.push_back({Rational(1), box.exps({{Var::t, m}}), -24});
    RSeries series = Rational(-24) * (wp * product_eval(fs, box));

    std::map<std::pair<int, long>, Integer> values;
    for (int d = 0; d <= d_max; ++d)
        for (long n = n_min; n <= n_max; ++n) {
            Integer v = coeff_as_integer(
                series, box.exps({{Var::p, static_cast<int>(n)}, {Var::t, d}}));
            if (v != 0) values[{d, n}] = v;
        }
    return MRowTable(std::move(values), d_max, n_min, n_max);
}

RSeries macmahon(int q_max) {
    Profile box({{Var::q, 0, q_max}});
    std::vector<Factor<Rational>> fs;
    for (int m = 1; m <= q_max; ++m)
        fs.push_back({Rational(1), box.exps({{Var::q, m}}), -m});
    return product_eval(fs, box);
}

RSeries eta24_inverse(int t_max) {
    Profile box({{Var::t, 0, t_max}});
    std::vector<Factor<Rational>> fs;
    for (int m = 1; m <= t_max; ++m)
        fs.push_back({Rational(1), box.exps({{Var::t, m}}), -24});
    return product_eval(fs, box);
}

EulerTable euler_hilb_k3(int d_max) {
    RSeries s = eta24_inverse(d_max);
    std::vector<Integer> a;
    a.reserve(d_max + 1);
    for (int d = 0; d <= d_max; ++d)
        a.push_back(s.coeff({{Var::t, d}}).to_integer());
    return EulerTable(std::move(a));
}

} // namespace curvecount
