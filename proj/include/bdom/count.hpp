#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace bdom {

/// Exact unbounded integer used for every lattice count.
using Count = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Count& c) { return c.str(); }

/// C(n, k), zero outside 0 <= k <= n.
Count binomial(std::int64_t n, std::int64_t k);

}  // namespace bdom
