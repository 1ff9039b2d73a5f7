// Arbitrary-precision integer support: exact integer square and cube roots.
//
// Everything downstream (perfect-square gates, cube decompositions) relies on
// these being exact for any magnitude; floating point mis-rounds beyond 2^53,
// so the roots are computed by Newton iteration on integers only.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace cubesum {

using Int = boost::multiprecision::cpp_int;

// floor(sqrt(v)) for v >= 0. Throws std::domain_error for v < 0.
Int isqrt(const Int& v);

// true iff v is a perfect square; on success *root is the nonnegative root.
bool perfect_square(const Int& v, Int* root = nullptr);

// floor(cbrt(v)) for v >= 0; for v < 0 returns -ceil(cbrt(-v)) so that
// icbrt(v)^3 <= v in all cases.
Int icbrt(const Int& v);

// true iff v = r^3 for some integer r (v may be negative).
bool perfect_cube(const Int& v, Int* root = nullptr);

inline Int cube(const Int& v) { return v * v * v; }

// Strict decimal parse: optional leading '-', then digits only.
// Throws std::invalid_argument on anything else.
Int parse_int(std::string_view text);

inline std::string to_string(const Int& v) { return v.str(); }

}  // namespace cubesum
