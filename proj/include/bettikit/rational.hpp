#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace bettikit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "n", "-n" or "n/d" into an exact rational.
inline Rational parse_rational(const std::string& s) {
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational scalar: '" + s + "'");
    }
}

inline std::string to_string(const Rational& q) {
    return q.str();
}

}  // namespace bettikit
