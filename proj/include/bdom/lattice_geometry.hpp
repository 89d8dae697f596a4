#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bdom/count.hpp"

namespace bdom {

/// A point of Z^n.
struct LatticePoint {
  std::vector<std::int64_t> coords;

  std::size_t dimension() const noexcept { return coords.size(); }
  std::int64_t l1_norm() const noexcept;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

enum class Sign { plus, minus };

/// One nonzero coordinate: `gap` positions after the previous nonzero one,
/// with absolute value `magnitude`.
struct SignedTuple {
  Sign sign = Sign::plus;
  std::int64_t gap = 1;
  std::int64_t magnitude = 1;

  friend bool operator==(const SignedTuple&, const SignedTuple&) = default;
};

struct TupleSequence {
  std::vector<SignedTuple> tuples;

  std::int64_t dimension_sum() const noexcept;
  std::int64_t distance_sum() const noexcept;

  friend bool operator==(const TupleSequence&, const TupleSequence&) = default;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// |S_n(d)|: points of Z^n at l1 distance exactly d from the origin.
/// S_n(0) = 1 for every n (including n = 0); S_0(d) = 0 for d >= 1.
Count shell_size(int n, int d);

/// |B_n(d)|: points of Z^n at l1 distance at most d.
Count ball_size(int n, int d);

/// Lattice paths (0,0) -> (m,k) with steps E, N and NE.
Count delannoy(int m, int k);

/// All points with l1 norm exactly d, sorted lexicographically.
/// Throws CapExceeded if |B_n(d)| exceeds `cap`.
std::vector<LatticePoint> shell_enumerate(int n, int d, std::uint64_t cap = kDefaultEnumerationCap);

/// All points with l1 norm at most d, sorted lexicographically.
std::vector<LatticePoint> ball_enumerate(int n, int d, std::uint64_t cap = kDefaultEnumerationCap);

enum class GenFuncKind { b_bivariate, s_bivariate, b_fixed_d, b_fixed_n, s_fixed_d, s_fixed_n };

std::optional<GenFuncKind> parse_genfunc_kind(std::string_view name);
std::string_view genfunc_kind_name(GenFuncKind kind);
bool is_bivariate(GenFuncKind kind) noexcept;

/// Power-series coefficients of one of the six ball/shell generating functions,
/// extracted by exact formal division.
///
/// Univariate kinds return a single row of max_index + 1 coefficients; the
/// "fixed_d" kinds expand in the dimension (coefficient i is |B_i(d)| or
/// |S_i(d)|) and the "fixed_n" kinds expand in the radius. Bivariate kinds
/// return the (max_index + 1)^2 table indexed [dimension][radius].
///
/// Throws std::invalid_argument when `fixed` is given for a bivariate kind,
/// missing for a univariate one, or negative.
std::vector<std::vector<Count>> genfunc_coefficients(GenFuncKind kind, std::optional<int> fixed, int max_index);

/// Nonzero coordinates of p as (gap, magnitude) tuples.
TupleSequence tuple_encode(const LatticePoint& p);

/// Inverse of tuple_encode, zero-padded to dimension n.
/// Throws std::invalid_argument if the dimension sum exceeds n or a tuple is not positive.
LatticePoint tuple_decode(const TupleSequence& s, int n);

/// Swaps gap and magnitude in every tuple.
TupleSequence transpose(const TupleSequence& s);

/// Bijection B_n(d) -> B_d(n): encode, transpose each tuple, decode into Z^d.
LatticePoint ball_bijection(const LatticePoint& p, int n, int d);

}  // namespace bdom
