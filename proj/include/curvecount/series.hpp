#ifndef CURVECOUNT_SERIES_HPP
#define CURVECOUNT_SERIES_HPP

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "curvecount/errors.hpp"
#include "curvecount/numtheory.hpp"
#include "curvecount/rational.hpp"

namespace curvecount {

template <typename R>
concept Ring = requires(const R a, const R b) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_one() } -> std::convertible_to<bool>;
    { a.inv() } -> std::convertible_to<R>;
    { a.to_string() } -> std::convertible_to<std::string>;
    requires std::constructible_from<R, Rational>;
    requires std::constructible_from<R, long>;
};

/// Series variables. p is Laurent with an arbitrary window; q, t, tt are
/// power-series variables allowed one negative step (the reciprocal of the
/// three-variable cusp-form product needs exactly t^-1 tt^-1).
enum class Var : std::uint8_t { p = 0, q = 1, t = 2, tt = 3 };

inline const char* var_name(Var v) {
    switch (v) {
        case Var::p: return "p";
        case Var::q: return "q";
        case Var::t: return "t";
        case Var::tt: return "tt";
    }
    return "?";
}

inline Var var_from_name(const std::string& s) {
    if (s == "p") return Var::p;
    if (s == "q") return Var::q;
    if (s == "t") return Var::t;
    if (s == "tt") return Var::tt;
    throw SeriesDomainError("unknown variable name '" + s + "'");
}

/// Grading used for product termination and expansion order: q, t, tt have
/// weight 1, p has weight 0.
inline int grade_weight(Var v) { return v == Var::p ? 0 : 1; }

struct VarSpec {
    Var var;
    int min_deg;
    int max_deg;

    friend bool operator==(const VarSpec&, const VarSpec&) = default;
};

using ExpVec = std::vector<int>;

/// Ordered list of variable windows; the truncation box is per-variable,
/// not total-degree.
class Profile {
public:
    Profile() = default;

    explicit Profile(std::vector<VarSpec> specs) : specs_(std::move(specs)) {
        validate();
        for (const VarSpec& s : specs_)
            if (s.var != Var::p && s.min_deg < -1)
                throw SeriesDomainError(std::string(var_name(s.var)) +
                                        " window may not go below -1");
    }

    /// Internal working boxes (shifted or widened during inversion) may dip
    /// below the -1 floor of the power-series variables.
    static Profile unchecked(std::vector<VarSpec> specs) {
        Profile p;
        p.specs_ = std::move(specs);
        p.validate();
        return p;
    }

    std::size_t size() const { return specs_.size(); }
    const VarSpec& operator[](std::size_t i) const { return specs_[i]; }
    const std::vector<VarSpec>& specs() const { return specs_; }

    std::optional<std::size_t> index_of(Var v) const {
        for (std::size_t i = 0; i < specs_.size(); ++i)
            if (specs_[i].var == v) return i;
        return std::nullopt;
    }

    bool same_vars(const Profile& o) const {
        if (specs_.size() != o.specs_.size()) return false;
        for (std::size_t i = 0; i < specs_.size(); ++i)
            if (specs_[i].var != o.specs_[i].var) return false;
        return true;
    }

    Profile intersect(const Profile& o) const {
        if (!same_vars(o))
            throw SeriesDomainError("incompatible variable sets: " + to_string() + " vs " +
                                    o.to_string());
        std::vector<VarSpec> out;
        out.reserve(specs_.size());
        for (std::size_t i = 0; i < specs_.size(); ++i) {
            int lo = std::max(specs_[i].min_deg, o.specs_[i].min_deg);
            int hi = std::min(specs_[i].max_deg, o.specs_[i].max_deg);
            if (lo > hi)
                throw SeriesDomainError("empty intersection box for " +
                                        std::string(var_name(specs_[i].var)));
            out.push_back({specs_[i].var, lo, hi});
        }
        return Profile(out);
    }

    bool contains(const ExpVec& e) const {
        if (e.size() != specs_.size()) return false;
        for (std::size_t i = 0; i < specs_.size(); ++i)
            if (e[i] < specs_[i].min_deg || e[i] > specs_[i].max_deg) return false;
        return true;
    }

    /// Builds an exponent vector from (var, exponent) pairs; unlisted
    /// variables get exponent 0.
    ExpVec exps(std::initializer_list<std::pair<Var, int>> xs) const {
        ExpVec e(specs_.size(), 0);
        for (const auto& [v, d] : xs) {
            auto idx = index_of(v);
            if (!idx) throw SeriesDomainError("variable not in profile");
            e[*idx] = d;
        }
        return e;
    }

    long grade(const ExpVec& e) const {
        long g = 0;
        for (std::size_t i = 0; i < specs_.size(); ++i) g += grade_weight(specs_[i].var) * e[i];
        return g;
    }

    long pdeg(const ExpVec& e) const {
        long g = 0;
        for (std::size_t i = 0; i < specs_.size(); ++i)
            if (specs_[i].var == Var::p) g += e[i];
        return g;
    }

    /// Lexicographic key (grading, p-degree): the expansion order in which
    /// truncated geometric series terminate inside the box.
    std::pair<long, long> key(const ExpVec& e) const { return {grade(e), pdeg(e)}; }

    static bool key_positive(const std::pair<long, long>& k) {
        return k.first > 0 || (k.first == 0 && k.second > 0);
    }

    long grade_span() const {
        long lo = 0, hi = 0;
        for (const VarSpec& s : specs_) {
            if (grade_weight(s.var) == 0) continue;
            lo += s.min_deg;
            hi += s.max_deg;
        }
        return hi - lo;
    }

    long p_span() const {
        long span = 0;
        for (const VarSpec& s : specs_)
            if (s.var == Var::p) span += s.max_deg - s.min_deg;
        return span;
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < specs_.size(); ++i) {
            if (i) s += ", ";
            s += var_name(specs_[i].var);
            s += ":[" + std::to_string(specs_[i].min_deg) + "," +
                 std::to_string(specs_[i].max_deg) + "]";
        }
        return s + "]";
    }

    friend bool operator==(const Profile&, const Profile&) = default;

private:
    std::vector<VarSpec> specs_;

    void validate() const {
        for (std::size_t i = 0; i < specs_.size(); ++i) {
            const VarSpec& s = specs_[i];
            if (s.min_deg > s.max_deg)
                throw SeriesDomainError("variable window empty for " +
                                        std::string(var_name(s.var)));
            for (std::size_t j = 0; j < i; ++j)
                if (specs_[j].var == s.var)
                    throw SeriesDomainError("duplicate variable in profile");
        }
    }
};

/// Sparse truncated multivariate Laurent series over a coefficient ring.
/// Immutable in spirit: all operations return new values; stored zero
/// coefficients are dropped eagerly.
template <Ring R>
class MultiSeries {
public:
    MultiSeries() = default;
    explicit MultiSeries(Profile profile) : profile_(std::move(profile)) {}

    static MultiSeries constant(const Profile& profile, const R& c) {
        MultiSeries s(profile);
        s.add_to(ExpVec(profile.size(), 0), c);
        return s;
    }

    static MultiSeries monomial(const Profile& profile, const ExpVec& e, const R& c) {
        MultiSeries s(profile);
        s.add_to(e, c);
        return s;
    }

    const Profile& profile() const { return profile_; }
    const std::map<ExpVec, R>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Stored coefficient or zero; querying outside the box is an error,
    /// never zero.
    R coeff(const ExpVec& e) const {
        if (!profile_.contains(e))
            throw TruncationError("exponent " + exp_to_string(e) + " outside box " +
                                  profile_.to_string());
        auto it = terms_.find(e);
        return it == terms_.end() ? R(0L) : it->second;
    }

    R coeff(std::initializer_list<std::pair<Var, int>> xs) const {
        return coeff(profile_.exps(xs));
    }

    R constant_term() const {
        ExpVec zero(profile_.size(), 0);
        if (!profile_.contains(zero)) return R(0L);
        auto it = terms_.find(zero);
        return it == terms_.end() ? R(0L) : it->second;
    }

    void add_to(const ExpVec& e, const R& c) {
        if (c.is_zero()) return;
        if (!profile_.contains(e))
            throw TruncationError("exponent " + exp_to_string(e) + " outside box " +
                                  profile_.to_string());
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// add_to that silently drops out-of-box terms; used by truncating
    /// arithmetic where discarding is the contract.
    void add_clipped(const ExpVec& e, const R& c) {
        if (c.is_zero() || !profile_.contains(e)) return;
        add_to(e, c);
    }

    MultiSeries restrict(const Profile& box) const {
        MultiSeries out(profile_.intersect(box));
        for (const auto& [e, c] : terms_) out.add_clipped(e, c);
        return out;
    }

    /// Copies the terms into another box over the same variables (terms
    /// falling outside are discarded). Widening the box does not recover
    /// coefficients this series already truncated away.
    MultiSeries reprofile(const Profile& box) const {
        if (!profile_.same_vars(box))
            throw SeriesDomainError("reprofile: incompatible variable sets");
        MultiSeries out(box);
        for (const auto& [e, c] : terms_) out.add_clipped(e, c);
        return out;
    }

    template <Ring R2>
    MultiSeries<R2> map_coefficients(const std::function<R2(const R&)>& fn) const {
        MultiSeries<R2> out(profile_);
        for (const auto& [e, c] : terms_) out.add_clipped(e, fn(c));
        return out;
    }

    MultiSeries operator-() const {
        MultiSeries out(profile_);
        for (const auto& [e, c] : terms_) out.add_to(e, -c);
        return out;
    }

    friend MultiSeries operator+(const MultiSeries& a, const MultiSeries& b) {
        MultiSeries out(a.profile_ == b.profile_ ? a.profile_
                                                 : a.profile_.intersect(b.profile_));
        for (const auto& [e, c] : a.terms_) out.add_clipped(e, c);
        for (const auto& [e, c] : b.terms_) out.add_clipped(e, c);
        return out;
    }

    friend MultiSeries operator-(const MultiSeries& a, const MultiSeries& b) {
        return a + (-b);
    }

    /// Truncated convolution: product exponents outside the result box are
    /// discarded.
    friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
        MultiSeries out(a.profile_ == b.profile_ ? a.profile_
                                                 : a.profile_.intersect(b.profile_));
        ExpVec e(out.profile_.size());
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.add_clipped(e, ca * cb);
            }
        }
        return out;
    }

    friend MultiSeries operator*(const R& s, const MultiSeries& a) {
        MultiSeries out(a.profile_);
        for (const auto& [e, c] : a.terms_) out.add_clipped(e, s * c);
        return out;
    }

    /// Equality per contract: same variables, and all coefficients agree on
    /// the intersection box.
    friend bool operator==(const MultiSeries& a, const MultiSeries& b) {
        if (!a.profile_.same_vars(b.profile_)) return false;
        Profile common = a.profile_.intersect(b.profile_);
        for (const auto& [e, c] : a.terms_) {
            if (!common.contains(e)) continue;
            auto it = b.terms_.find(e);
            if (it == b.terms_.end() || !(it->second == c)) return false;
        }
        for (const auto& [e, c] : b.terms_) {
            if (!common.contains(e)) continue;
            if (a.terms_.find(e) == a.terms_.end()) return false;
        }
        return true;
    }
    friend bool operator!=(const MultiSeries& a, const MultiSeries& b) { return !(a == b); }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c.to_string() << ")";
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0)
                    os << "*" << var_name(profile_[i].var) << "^" << e[i];
        }
        return os.str();
    }

    static std::string exp_to_string(const ExpVec& e) {
        std::string s = "(";
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(e[i]);
        }
        return s + ")";
    }

private:
    Profile profile_;
    std::map<ExpVec, R> terms_;
};

namespace detail {

inline long power_iteration_cap(const Profile& box) {
    return (box.grade_span() + 2) * (box.p_span() + 2) + 64;
}

/// Verifies every term of u has strictly lex-positive key (grading, pdeg),
/// the condition under which powers of u leave any truncation box.
template <Ring R>
void require_positive_keys(const MultiSeries<R>& u, const char* op) {
    for (const auto& [e, c] : u.terms())
        if (!Profile::key_positive(u.profile().key(e)))
            throw SeriesDomainError(std::string(op) +
                                    ": series has a non-expandable term at exponent " +
                                    MultiSeries<R>::exp_to_string(e));
}

} // namespace detail

/// log(f) for f with constant term exactly 1. Truncated formal logarithm.
template <Ring R>
MultiSeries<R> log_series(const MultiSeries<R>& f) {
    if (!f.constant_term().is_one())
        throw SeriesDomainError("log: constant term must be exactly 1");
    MultiSeries<R> u = f - MultiSeries<R>::constant(f.profile(), R(1L));
    detail::require_positive_keys(u, "log");
    MultiSeries<R> out(f.profile());
    MultiSeries<R> upow = u;
    long k = 1;
    const long cap = detail::power_iteration_cap(f.profile());
    while (!upow.is_zero()) {
        Rational coef = Rational(k % 2 == 1 ? 1 : -1, k);
        out = out + R(coef) * upow;
        upow = upow * u;
        if (++k > cap) throw SeriesDomainError("log: power iteration failed to terminate");
    }
    return out;
}

/// exp(f) for f with constant term exactly 0.
template <Ring R>
MultiSeries<R> exp_series(const MultiSeries<R>& f) {
    if (!f.constant_term().is_zero())
        throw SeriesDomainError("exp: constant term must be exactly 0");
    detail::require_positive_keys(f, "exp");
    MultiSeries<R> out = MultiSeries<R>::constant(f.profile(), R(1L));
    MultiSeries<R> upow = f;
    Rational invfact(1);
    long k = 1;
    const long cap = detail::power_iteration_cap(f.profile());
    while (!upow.is_zero()) {
        out = out + R(invfact) * upow;
        upow = upow * f;
        ++k;
        invfact /= Rational(k);
        if (k > cap) throw SeriesDomainError("exp: power iteration failed to terminate");
    }
    return out;
}

/// f^g = exp(g log f) for a ring element g; the power structure on
/// 1 + (positive-key terms). Agrees with repeated multiplication for
/// integer g.
template <Ring R>
MultiSeries<R> pow_ring(const MultiSeries<R>& f, const R& g) {
    if (!f.constant_term().is_one())
        throw SeriesDomainError("pow: constant term must be exactly 1");
    return exp_series(g * log_series(f));
}

/// Multiplicative inverse of f whose lex-minimal term (in the (grading,
/// p-degree) order) is a single monomial c x^v0 with invertible c. Computed
/// as c^-1 x^-v0 (1+u)^-1 with u of strictly positive key; intermediate
/// windows are widened so escape-and-return exponent paths are kept.
template <Ring R>
MultiSeries<R> invert(const MultiSeries<R>& f) {
    if (f.is_zero()) throw SeriesDomainError("invert: zero series");
    const Profile& box = f.profile();

    auto lead = f.terms().begin();
    auto lead_key = box.key(lead->first);
    int at_min = 1;
    for (auto it = std::next(f.terms().begin()); it != f.terms().end(); ++it) {
        auto k = box.key(it->first);
        if (k < lead_key) {
            lead = it;
            lead_key = k;
            at_min = 1;
        } else if (k == lead_key) {
            ++at_min;
        }
    }
    if (at_min != 1)
        throw SeriesDomainError("invert: lowest-order part is not a single monomial");

    const ExpVec v0 = lead->first;
    R c = lead->second;
    R cinv = c.inv();

    // Working box: hull of (box - v0) and (box + v0), each variable widened
    // by its escape capacity. Grades never decrease along a product chain
    // (every u-term has grade >= 0), so a chain whose final term is wanted
    // carries at most g_hi grade-positive factors; those are the only
    // factors that can lower the p-degree or a grade-variable exponent, and
    // grade-0 factors (positive pure-p by lex-positivity) are bounded by the
    // p-budget. The windows below keep every partial product of every
    // contributing chain representable.
    long neg_p = 0;
    std::vector<long> neg_var(box.size(), 0);
    for (const auto& [e, cc] : f.terms()) {
        for (std::size_t i = 0; i < box.size(); ++i) {
            long d = e[i] - v0[i];
            if (d < 0) neg_var[i] = std::max(neg_var[i], -d);
        }
        long pd = box.pdeg(e) - box.pdeg(v0);
        if (pd < 0) neg_p = std::max(neg_p, -pd);
    }
    long grade_hi = 0;
    for (const VarSpec& s : box.specs())
        if (grade_weight(s.var) != 0) grade_hi += std::max(s.max_deg, 0);
    grade_hi += std::abs(box.grade(v0));
    long descent_p = grade_hi * neg_p;
    long grade0_budget = box.p_span() + 2 * std::abs(box.pdeg(v0)) + descent_p;
    std::vector<VarSpec> wide;
    for (std::size_t i = 0; i < box.size(); ++i) {
        const VarSpec& s = box[i];
        long margin = s.var == Var::p ? descent_p
                                      : neg_var[i] * (grade_hi + grade0_budget);
        int lo = static_cast<int>(std::min(s.min_deg - v0[i], s.min_deg + v0[i]) - margin);
        int hi = static_cast<int>(std::max(s.max_deg - v0[i], s.max_deg + v0[i]) + margin);
        wide.push_back({s.var, lo, hi});
    }
    Profile work = Profile::unchecked(wide);

    MultiSeries<R> u(work);
    for (const auto& [e, cc] : f.terms()) {
        if (e == v0) continue;
        ExpVec shifted(e.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            shifted[i] = e[i] - v0[i];
        u.add_clipped(shifted, cinv * cc);
    }
    detail::require_positive_keys(u, "invert");

    MultiSeries<R> series_sum = MultiSeries<R>::constant(work, R(1L));
    MultiSeries<R> upow = u;
    long k = 1;
    const long cap = detail::power_iteration_cap(work);
    while (!upow.is_zero()) {
        series_sum = series_sum + R(Rational(k % 2 == 1 ? -1 : 1)) * upow;
        upow = upow * u;
        if (++k > cap) throw SeriesDomainError("invert: power iteration failed to terminate");
    }

    MultiSeries<R> out(box);
    ExpVec e2(box.size());
    for (const auto& [e, cc] : series_sum.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i) e2[i] = e[i] - v0[i];
        out.add_clipped(e2, cinv * cc);
    }
    return out;
}

using RSeries = MultiSeries<Rational>;

/// One factor (1 - coeff x^exps)^power of an infinite product.
template <Ring R>
struct Factor {
    R coeff;
    ExpVec exps;
    Integer power;
    bool prefactor = false;
};

/// Generator protocol: returns factors in non-decreasing grading order,
/// std::nullopt when exhausted; only finitely many factors may have grading
/// within any bound (prefactor-flagged ones aside).
template <Ring R>
using FactorStream = std::function<std::optional<Factor<R>>()>;

namespace detail {

template <Ring R>
MultiSeries<R> expand_factor(const Factor<R>& f, const Profile& box) {
    // j_max: largest power of the factor monomial that can still multiply
    // some in-box monomial back into the box.
    long j_max = std::numeric_limits<long>::max();
    bool all_zero = true;
    for (std::size_t i = 0; i < box.size(); ++i) {
        if (f.exps[i] == 0) continue;
        all_zero = false;
        long span = box[i].max_deg - box[i].min_deg;
        j_max = std::min(j_max, span / std::abs(f.exps[i]));
    }
    if (all_zero)
        throw SeriesDomainError("product: factor monomial is constant");

    bool negative = f.power < 0;
    Integer m = negative ? Integer(-f.power) : f.power;
    if (negative && !Profile::key_positive(box.key(f.exps)))
        throw SeriesDomainError(
            "product: negative-exponent factor with non-expandable monomial");
    if (!negative && m.fits_slong_p())
        j_max = std::min(j_max, m.get_si());

    MultiSeries<R> out(box);
    ExpVec e(box.size());
    R cpow(1L);
    for (long j = 0; j <= j_max; ++j) {
        Integer binom;
        if (negative) {
            Integer n = m + j - 1;
            mpz_bin_ui(binom.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(j));
        } else {
            mpz_bin_ui(binom.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(j));
            if (j % 2 == 1) binom = -binom;
        }
        for (std::size_t i = 0; i < box.size(); ++i)
            e[i] = f.exps[i] * static_cast<int>(j);
        out.add_clipped(e, R(Rational(binom)) * cpow);
        cpow = cpow * f.coeff;
    }
    return out;
}

} // namespace detail

/// Truncated evaluation of prod (1 - c x^v)^e over a graded factor stream.
/// Stops once the stream grading exceeds what can reach the box. Factors of
/// grading 0 (pure-p monomials of positive degree) are admissible but do not
/// trigger the stop, so streams of those must be finite.
template <Ring R>
MultiSeries<R> product_eval(const FactorStream<R>& next, const Profile& box) {
    MultiSeries<R> acc = MultiSeries<R>::constant(box, R(1L));
    const long cap = box.grade_span();
    long last_grade = std::numeric_limits<long>::min();
    FactorStream<R> stream = next;
    while (auto fo = stream()) {
        const Factor<R>& f = *fo;
        if (f.power == 0) continue;
        long g = box.grade(f.exps);
        if (g < last_grade)
            throw SeriesDomainError("product: factor stream grading decreased");
        last_grade = g;
        if (g > cap) break;
        if (!f.prefactor && !Profile::key_positive(box.key(f.exps)))
            throw SeriesDomainError("product: non-prefactor factor with non-positive grading");
        if (f.coeff.is_zero()) continue;
        acc = acc * detail::expand_factor(f, box);
    }
    return acc;
}

/// Convenience: evaluate a finite factor list (sorted by the caller).
template <Ring R>
MultiSeries<R> product_eval(std::vector<Factor<R>> factors, const Profile& box) {
    std::size_t i = 0;
    FactorStream<R> stream = [factors = std::move(factors), i]() mutable
        -> std::optional<Factor<R>> {
        if (i >= factors.size()) return std::nullopt;
        return factors[i++];
    };
    return product_eval(stream, box);
}

} // namespace curvecount

#endif
