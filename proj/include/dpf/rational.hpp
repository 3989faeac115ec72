#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace dpf {

// All engine arithmetic is exact. Rationals are arbitrary precision; no
// floating point appears anywhere in the library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

/// Renders "p" for integers and "p/q" otherwise (q > 0).
inline std::string to_frac_string(const Rat& r) { return r.str(); }

/// Narrows an integral rational to long long. Throws on non-integers.
inline long long to_ll(const Rat& r) {
    if (!is_integer(r)) throw std::domain_error("to_ll: non-integral rational " + r.str());
    return static_cast<long long>(numerator(r));
}

}  // namespace dpf
