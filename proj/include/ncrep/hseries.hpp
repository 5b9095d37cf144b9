#pragma once

// Hilbert series of the form p(t) / (1 - t^e) with integer coefficients.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ncrep {

class FatPoint;

struct RationalSeries {
    std::vector<std::int64_t> numerator;  ///< coefficient of t^i at index i
    int denominator_exponent = 1;         ///< e in 1 - t^e

    /// First `count` coefficients of the power series.
    std::vector<std::int64_t> coefficients(int count) const;
    /// The series multiplied by (1 - t), as a new numerator over the same denominator.
    RationalSeries times_one_minus_t() const;
    std::string to_string() const;
};

/// sum_l m_l t^l / (1 - t^e), e = multiplicities.size().
RationalSeries series_of_multiplicities(const std::vector<int>& multiplicities);
RationalSeries series_of_fatpoint(const FatPoint& f);

/// m if the series equals m / (1 - t) exactly, otherwise nullopt.
std::optional<std::int64_t> multiplicity_check(const RationalSeries& s);

}  // namespace ncrep
