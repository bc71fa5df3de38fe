#include "curvecount/igusa.hpp"

#include <cmath>

namespace curvecount {

namespace {

long isqrt_floor(long x) {
    if (x < 0) return -1;
    long r = static_cast<long>(std::sqrt(static_cast<double>(x)));
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

void require_c_bound(const IgusaConfig& cfg, const QuadraticCoeffTable& c) {
    long needed = 4L * cfg.h_max * cfg.d_max;
    if (c.certified_bound() < needed)
        throw TableRangeError("igusa: c table certified to " +
                              std::to_string(c.certified_bound()) + ", need " +
                              std::to_string(needed));
}

/// Factors (1 - p^k t^h tt^d)^{sign * c(4hd - k^2)} over (h,d) != (0,0),
/// sorted by grading h + d.
std::vector<Factor<Rational>> cusp_factors(const Profile& box, const IgusaConfig& cfg,
                                           const QuadraticCoeffTable& c, int sign) {
    std::vector<Factor<Rational>> fs;
    for (int s = 1; s <= cfg.h_max + cfg.d_max; ++s) {
        for (int h = std::max(0, s - cfg.d_max); h <= std::min(cfg.h_max, s); ++h) {
            int d = s - h;
            long kcap = isqrt_floor(4L * h * d + 1);
            for (long k = -kcap; k <= kcap; ++k) {
                long m = 4L * h * d - k * k;
                Integer e = c.at(m);
                if (e == 0) continue;
                fs.push_back({Rational(1),
                              box.exps({{Var::p, static_cast<int>(k)}, {Var::t, h}, {Var::tt, d}}),
                              sign > 0 ? e : Integer(-e)});
            }
        }
    }
    return fs;
}

} // namespace

MultiSeries<Rational> igusa_chi10(const IgusaConfig& cfg, const QuadraticCoeffTable& c) {
    require_c_bound(cfg, c);
    long pad = cfg.pad();
    long lo = std::min(cfg.n_min, 0L) - pad;
    long hi = std::max(cfg.n_max, 0L) + pad;
    Profile box({{Var::p, static_cast<int>(lo), static_cast<int>(hi)},
                 {Var::t, 0, cfg.h_max},
                 {Var::tt, 0, cfg.d_max}});

    RSeries acc = product_eval(cusp_factors(box, cfg, c, +1), box);

    // p t tt (1 - 1/p)^2 = (p - 2 + 1/p) t tt
    RSeries pre(box);
    pre.add_to(box.exps({{Var::p, 1}, {Var::t, 1}, {Var::tt, 1}}), Rational(1));
    pre.add_to(box.exps({{Var::t, 1}, {Var::tt, 1}}), Rational(-2));
    pre.add_to(box.exps({{Var::p, -1}, {Var::t, 1}, {Var::tt, 1}}), Rational(1));

    Profile requested({{Var::p, static_cast<int>(cfg.n_min), static_cast<int>(cfg.n_max)},
                       {Var::t, 0, cfg.h_max},
                       {Var::tt, 0, cfg.d_max}});
    return (pre * acc).restrict(requested);
}

MTable igusa_m_table(const IgusaConfig& cfg, const QuadraticCoeffTable& c) {
    require_c_bound(cfg, c);
    long pad = cfg.pad();
    long lo = std::min(cfg.n_min, 0L) - pad;
    long hi = std::max(cfg.n_max, 0L) + pad;
    // Accumulation box spans both the unshifted factor degrees [0, h_max]
    // and the final degrees [-1, h_max - 1] reached after the prefactor
    // shift; clipping to the final window too early would drop factor terms
    // the shift pulls back in.
    Profile box({{Var::p, static_cast<int>(lo), static_cast<int>(hi)},
                 {Var::t, -1, cfg.h_max},
                 {Var::tt, -1, cfg.d_max}});

    RSeries acc = product_eval(cusp_factors(box, cfg, c, -1), box);

    // -(sum_{j>=1} j p^j) t^-1 tt^-1: the region-correct expansion of the
    // reciprocal h = d = 0 part.
    RSeries pre(box);
    for (long j = 1; j <= hi; ++j)
        pre.add_to(box.exps({{Var::p, static_cast<int>(j)}, {Var::t, -1}, {Var::tt, -1}}),
                   Rational(-Integer(j)));

    RSeries recip = pre * acc;

    std::map<std::tuple<int, int, long>, Integer> values;
    for (int h = 0; h <= cfg.h_max; ++h)
        for (int d = 0; d <= cfg.d_max; ++d)
            for (long n = cfg.n_min; n <= cfg.n_max; ++n) {
                Integer v = recip.coeff(box.exps({{Var::p, static_cast<int>(n)},
                                                  {Var::t, h - 1},
                                                  {Var::tt, d - 1}}))
                                .to_integer();
                if (v != 0) values[{h, d, n}] = v;
            }
    return MTable(std::move(values), cfg.h_max, cfg.d_max, cfg.n_min, cfg.n_max, lo, hi);
}

} // namespace curvecount
