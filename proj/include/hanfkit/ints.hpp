#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hanfkit {

// Arbitrary-precision integer used for all counting-term values and
// numerical-predicate arguments.  Counting terms are polynomials in |A|,
// so fixed-width arithmetic is not an option.
using Int = boost::multiprecision::cpp_int;

inline std::string to_string(const Int& v) { return v.str(); }

Int pow_int(const Int& base, unsigned exp);

bool is_prime(const Int& n);

} // namespace hanfkit
