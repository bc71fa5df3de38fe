#ifndef CURVECOUNT_TABLES_HPP
#define CURVECOUNT_TABLES_HPP

#include <map>
#include <string>
#include <tuple>
#include <utility>

#include "curvecount/errors.hpp"
#include "curvecount/rational.hpp"

namespace curvecount {

/// Fourier coefficients read through m = 4*d - k^2 from a two-variable
/// series, with the certified bound and the construction grid recorded.
/// Reads beyond the certified bound are errors, not extrapolations.
class QuadraticCoeffTable {
public:
    QuadraticCoeffTable() = default;
    QuadraticCoeffTable(std::string name, std::map<long, Integer> values, long m_bound,
                        int grid_d_max, int grid_k_max)
        : name_(std::move(name)),
          values_(std::move(values)),
          m_bound_(m_bound),
          grid_d_max_(grid_d_max),
          grid_k_max_(grid_k_max) {}

    /// Value at m; identically zero below -1. Throws TableRangeError above
    /// the certified bound or at an m not of the form 4d - k^2.
    Integer at(long m) const {
        if (m < -1) return 0;
        if (m > m_bound_)
            throw TableRangeError(name_ + "(" + std::to_string(m) + ") beyond certified bound " +
                                  std::to_string(m_bound_));
        auto it = values_.find(m);
        if (it == values_.end())
            throw TableRangeError(name_ + "(" + std::to_string(m) +
                                  ") is not represented as 4d-k^2");
        return it->second;
    }

    long certified_bound() const { return m_bound_; }
    int grid_d_max() const { return grid_d_max_; }
    int grid_k_max() const { return grid_k_max_; }
    const std::map<long, Integer>& values() const { return values_; }
    const std::string& name() const { return name_; }

private:
    std::string name_;
    std::map<long, Integer> values_;
    long m_bound_ = -2;
    int grid_d_max_ = 0;
    int grid_k_max_ = 0;
};

/// The two-variable coefficients m(d, n), certified on a (d, n) rectangle.
class MRowTable {
public:
    MRowTable() = default;
    MRowTable(std::map<std::pair<int, long>, Integer> values, int d_max, long n_min, long n_max)
        : values_(std::move(values)), d_max_(d_max), n_min_(n_min), n_max_(n_max) {}

    Integer at(int d, long n) const {
        if (d < 0 || d > d_max_ || n < n_min_ || n > n_max_)
            throw TableRangeError("m(" + std::to_string(d) + "," + std::to_string(n) +
                                  ") outside certified rectangle");
        auto it = values_.find({d, n});
        return it == values_.end() ? Integer(0) : it->second;
    }

    int d_max() const { return d_max_; }
    long n_min() const { return n_min_; }
    long n_max() const { return n_max_; }
    const std::map<std::pair<int, long>, Integer>& values() const { return values_; }

private:
    std::map<std::pair<int, long>, Integer> values_;
    int d_max_ = -1;
    long n_min_ = 0, n_max_ = -1;
};

/// The three-variable master coefficients m(h, d, n) from the reciprocal of
/// the weight-10 cusp form, with certified bounds and the internal p-window
/// actually used (always padded beyond the requested read range).
class MTable {
public:
    MTable() = default;
    MTable(std::map<std::tuple<int, int, long>, Integer> values, int h_max, int d_max,
           long n_min, long n_max, long window_lo, long window_hi)
        : values_(std::move(values)),
          h_max_(h_max),
          d_max_(d_max),
          n_min_(n_min),
          n_max_(n_max),
          window_lo_(window_lo),
          window_hi_(window_hi) {}

    Integer at(int h, int d, long n) const {
        if (h < 0 || h > h_max_ || d < 0 || d > d_max_ || n < n_min_ || n > n_max_)
            throw TableRangeError("m(" + std::to_string(h) + "," + std::to_string(d) + "," +
                                  std::to_string(n) + ") outside certified box");
        auto it = values_.find({h, d, n});
        return it == values_.end() ? Integer(0) : it->second;
    }

    int h_max() const { return h_max_; }
    int d_max() const { return d_max_; }
    long n_min() const { return n_min_; }
    long n_max() const { return n_max_; }
    long window_lo() const { return window_lo_; }
    long window_hi() const { return window_hi_; }
    const std::map<std::tuple<int, int, long>, Integer>& values() const { return values_; }

private:
    std::map<std::tuple<int, int, long>, Integer> values_;
    int h_max_ = -1, d_max_ = -1;
    long n_min_ = 0, n_max_ = -1;
    long window_lo_ = 0, window_hi_ = -1;
};

/// Euler numbers a_d of the Hilbert schemes of points of a K3 surface,
/// read off the eta^{-24}-type product.
class EulerTable {
public:
    EulerTable() = default;
    EulerTable(std::vector<Integer> values) // index = d
        : values_(std::move(values)) {}

    Integer at(int d) const {
        if (d < 0 || static_cast<std::size_t>(d) >= values_.size())
            throw TableRangeError("a_" + std::to_string(d) + " outside certified range");
        return values_[d];
    }

    int d_max() const { return static_cast<int>(values_.size()) - 1; }
    const std::vector<Integer>& values() const { return values_; }

private:
    std::vector<Integer> values_;
};

} // namespace curvecount

#endif
