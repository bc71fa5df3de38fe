#ifndef CURVECOUNT_ERRORS_HPP
#define CURVECOUNT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace curvecount {

/// Coefficient query outside the truncation box. Never silently zero.
class TruncationError : public std::out_of_range {
public:
    explicit TruncationError(const std::string& what)
        : std::out_of_range("beyond truncation: " + what) {}
};

/// Table read outside the certified bounds recorded at build time.
class TableRangeError : public std::out_of_range {
public:
    explicit TableRangeError(const std::string& what)
        : std::out_of_range("uncertified table read: " + what) {}
};

/// Violated operation precondition (wrong constant term, non-invertible
/// leading coefficient, incompatible variable sets, inadmissible class, ...).
class SeriesDomainError : public std::domain_error {
public:
    explicit SeriesDomainError(const std::string& what)
        : std::domain_error(what) {}
};

} // namespace curvecount

#endif
