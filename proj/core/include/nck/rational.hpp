#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace nck {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_string(const Int& v) { return v.str(); }

// "p" or "p/q"; canonical (q > 0, reduced) comes for free from cpp_rational.
inline std::string to_string(const Rat& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

Rat parse_rat(const std::string& s);  // throws SchemaError on malformed input
Int parse_int(const std::string& s);

} // namespace nck
