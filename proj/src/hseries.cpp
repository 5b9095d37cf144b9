#include "ncrep/hseries.hpp"

#include <sstream>

#include "ncrep/core.hpp"
#include "ncrep/fatpoint.hpp"

namespace ncrep {

std::vector<std::int64_t> RationalSeries::coefficients(int count) const {
    std::vector<std::int64_t> out(count, 0);
    const int e = denominator_exponent;
    // 1 / (1 - t^e) = sum_j t^{je}
    for (std::size_t i = 0; i < numerator.size(); ++i)
        for (int j = static_cast<int>(i); j < count; j += e) out[j] += numerator[i];
    return out;
}

RationalSeries RationalSeries::times_one_minus_t() const {
    RationalSeries r;
    r.denominator_exponent = denominator_exponent;
    r.numerator.assign(numerator.size() + 1, 0);
    for (std::size_t i = 0; i < numerator.size(); ++i) {
        r.numerator[i] += numerator[i];
        r.numerator[i + 1] -= numerator[i];
    }
    return r;
}

std::string RationalSeries::to_string() const {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (std::size_t i = 0; i < numerator.size(); ++i) {
        if (numerator[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << numerator[i];
        if (i > 0) os << "t" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    if (first) os << "0";
    os << ")/(1 - t" << (denominator_exponent > 1 ? "^" + std::to_string(denominator_exponent) : "") << ")";
    return os.str();
}

RationalSeries series_of_multiplicities(const std::vector<int>& multiplicities) {
    if (multiplicities.empty()) throw InvalidArgument("series: empty multiplicity vector");
    RationalSeries s;
    s.denominator_exponent = static_cast<int>(multiplicities.size());
    for (int m : multiplicities) {
        if (m < 0) throw InvalidArgument("series: negative multiplicity");
        s.numerator.push_back(m);
    }
    return s;
}

RationalSeries series_of_fatpoint(const FatPoint& f) { return series_of_multiplicities(f.multiplicities()); }

std::optional<std::int64_t> multiplicity_check(const RationalSeries& s) {
    const int e = s.denominator_exponent;
    if (e < 1) throw InvalidArgument("series: denominator exponent must be positive");
    // p / (1 - t^e) = m / (1 - t)  <=>  p = m (1 + t + .. + t^{e-1}).
    // Divide p by 1 + t + .. + t^{e-1} (monic), exactly over the integers.
    std::vector<std::int64_t> rem = s.numerator;
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    if (rem.empty()) return 0;
    const int deg_p = static_cast<int>(rem.size()) - 1;
    const int deg_d = e - 1;
    if (deg_p < deg_d) return std::nullopt;
    std::vector<std::int64_t> quot(deg_p - deg_d + 1, 0);
    for (int i = deg_p - deg_d; i >= 0; --i) {
        const std::int64_t c = rem[i + deg_d];
        quot[i] = c;
        for (int j = 0; j <= deg_d; ++j) rem[i + j] -= c;
    }
    for (auto r : rem)
        if (r != 0) return std::nullopt;
    for (std::size_t i = 1; i < quot.size(); ++i)
        if (quot[i] != 0) return std::nullopt;
    return quot[0];
}

}  // namespace ncrep
