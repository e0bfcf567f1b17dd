#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sympl {

/// Exact rational scalar used by all chamber/face combinatorics and the LP core.
using QQ = boost::multiprecision::cpp_rational;
using ZZ = boost::multiprecision::cpp_int;

inline double to_double(const QQ& q) { return q.convert_to<double>(); }

/// Parses "p", "p/q" or a decimal string like "-0.25" into an exact rational.
inline QQ parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        QQ num(s.substr(0, slash));
        QQ den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
        return num / den;
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return QQ(s);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac_len = s.size() - dot - 1;
    QQ value(digits.empty() || digits == "-" || digits == "+" ? "0" : digits);
    QQ den = 1;
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    return value / den;
}

/// Exact rational from a double that is known to carry a small exact value
/// (scenario files store eigenvalue data as IEEE doubles).
inline QQ rational_from_double(double x) {
    if (x != x) throw std::invalid_argument("NaN cannot be converted to a rational");
    return QQ(x);
}

}  // namespace sympl
