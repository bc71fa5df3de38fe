#include "curvecount/partitions.hpp"

#include <algorithm>
#include <vector>

#include "curvecount/numtheory.hpp"

namespace curvecount {

namespace {

using Cell = std::vector<int>;

struct Enumerator {
    int dim;
    int target;
    unsigned long count = 0;
    std::vector<Cell> ideal; // kept in increasing lex order

    bool contains(const Cell& c) const {
        return std::binary_search(ideal.begin(), ideal.end(), c);
    }

    bool addable(const Cell& c) const {
        Cell pred = c;
        for (int i = 0; i < dim; ++i) {
            if (c[i] == 0) continue;
            --pred[i];
            if (!contains(pred)) return false;
            ++pred[i];
        }
        return true;
    }

    // Grow by cells lex-greater than the last added one; the lex-sorted
    // prefix of an order ideal is itself an order ideal, so every ideal is
    // reached along exactly one path.
    void grow() {
        if (static_cast<int>(ideal.size()) == target) {
            ++count;
            return;
        }
        std::vector<Cell> cands;
        Cell origin(dim, 0);
        if (ideal.empty()) {
            cands.push_back(origin);
        } else {
            const Cell& last = ideal.back();
            for (const Cell& base : ideal) {
                Cell c = base;
                for (int i = 0; i < dim; ++i) {
                    ++c[i];
                    if (c > last && !contains(c) && addable(c)) cands.push_back(c);
                    --c[i];
                }
            }
            std::sort(cands.begin(), cands.end());
            cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
        }
        for (const Cell& c : cands) {
            ideal.push_back(c);
            grow();
            ideal.pop_back();
        }
    }
};

} // namespace

int partition_guard(int dim) {
    switch (dim) {
        case 1: return 64;
        case 2: return 20;
        case 3: return 12;
        case 4: return 8;
        case 5:
        case 6: return 4;
        default: return -1;
    }
}

unsigned long count_partitions(int dim, int n) {
    if (dim < 1) throw SeriesDomainError("count_partitions: dimension must be >= 1");
    if (n < 0) throw SeriesDomainError("count_partitions: size must be >= 0");
    int guard = partition_guard(dim);
    if (guard < 0 || n > guard)
        throw SeriesDomainError("count_partitions: enumeration guard exceeded for d=" +
                                std::to_string(dim) + ", n=" + std::to_string(n));
    if (n == 0) return 1;
    if (dim == 1) return 1; // one ideal per size: an initial segment
    Enumerator e{dim, n, 0, {}};
    e.grow();
    return e.count;
}

MultiSeries<Rational> partition_series(int dim, int n_max) {
    Profile box({{Var::q, 0, n_max}});
    MultiSeries<Rational> s(box);
    for (int n = 0; n <= n_max; ++n)
        s.add_to(box.exps({{Var::q, n}}), Rational(Integer(count_partitions(dim, n))));
    return s;
}

MultiSeries<DualNumber> kummer_series(int dim, long euler_y, int n_max) {
    auto f = partition_series(dim, n_max).map_coefficients<DualNumber>(
        [](const Rational& c) { return DualNumber(c); });
    return pow_ring(f, DualNumber(Rational(0), Rational(euler_y)));
}

Rational dt_degree0(long n, Threefold variant) {
    if (n < 1) throw SeriesDomainError("dt_degree0: n must be positive");
    Rational v = Rational(n % 2 == 1 ? 1 : -1) * Rational(sigma(2, n)) / Rational(Integer(n));
    return variant == Threefold::k3xe ? Rational(24) * v : v;
}

} // namespace curvecount
