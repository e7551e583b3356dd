#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace kemeny {

// Exact rational arithmetic for average ranks and the average pairwise
// Kendall-Tau distance. Keeping these exact avoids float-ceiling
// misclassification right at integer boundaries.
using Rational = boost::rational<std::int64_t>;

inline std::int64_t ceil_rational(const Rational& r) {
    const std::int64_t num = r.numerator();
    const std::int64_t den = r.denominator();  // boost keeps den > 0
    if (num >= 0) return (num + den - 1) / den;
    return num / den;
}

inline double rational_to_double(const Rational& r) {
    return boost::rational_cast<double>(r);
}

inline std::string format_rational(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace kemeny
