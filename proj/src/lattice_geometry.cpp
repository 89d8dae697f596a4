#include "bdom/lattice_geometry.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "bdom/errors.hpp"

namespace bdom {

Count binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Count result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

std::int64_t LatticePoint::l1_norm() const noexcept {
  std::int64_t sum = 0;
  for (auto c : coords) sum += c < 0 ? -c : c;
  return sum;
}

std::int64_t TupleSequence::dimension_sum() const noexcept {
  std::int64_t sum = 0;
  for (const auto& t : tuples) sum += t.gap;
  return sum;
}

std::int64_t TupleSequence::distance_sum() const noexcept {
  std::int64_t sum = 0;
  for (const auto& t : tuples) sum += t.magnitude;
  return sum;
}

namespace {

void require_nonnegative(int n, int d) {
  if (n < 0 || d < 0) {
    throw std::invalid_argument("dimension and radius must be nonnegative (got n=" + std::to_string(n) +
                                ", d=" + std::to_string(d) + ")");
  }
}

void check_cap(int n, int d, std::uint64_t cap) {
  if (ball_size(n, d) > cap) {
    throw CapExceeded("enumeration of B_" + std::to_string(n) + "(" + std::to_string(d) + ") exceeds cap of " +
                      std::to_string(cap) + " points");
  }
}

// Lexicographic generation: coordinate k takes values in ascending order.
void enumerate_rec(std::vector<std::int64_t>& cur, std::size_t k, std::int64_t remaining, bool exact,
                   std::vector<LatticePoint>& out) {
  if (k == cur.size()) {
    if (!exact || remaining == 0) out.push_back(LatticePoint{cur});
    return;
  }
  if (exact && k + 1 == cur.size()) {
    // last coordinate is forced to +-remaining
    cur[k] = -remaining;
    out.push_back(LatticePoint{cur});
    if (remaining != 0) {
      cur[k] = remaining;
      out.push_back(LatticePoint{cur});
    }
    cur[k] = 0;
    return;
  }
  for (std::int64_t v = -remaining; v <= remaining; ++v) {
    cur[k] = v;
    enumerate_rec(cur, k + 1, remaining - std::llabs(v), exact, out);
  }
  cur[k] = 0;
}

std::vector<LatticePoint> enumerate(int n, int d, bool exact, std::uint64_t cap) {
  require_nonnegative(n, d);
  check_cap(n, d, cap);
  std::vector<LatticePoint> out;
  std::vector<std::int64_t> cur(static_cast<std::size_t>(n), 0);
  enumerate_rec(cur, 0, d, exact, out);
  return out;
}

}  // namespace

Count shell_size(int n, int d) {
  require_nonnegative(n, d);
  if (d == 0) return 1;
  if (n == 0) return 0;
  // Split by the number i of zero coordinates.
  Count total = 0;
  for (int i = 0; i < n; ++i) {
    total += binomial(n, i) * (Count(1) << (n - i)) * binomial(d - 1, n - i - 1);
  }
  return total;
}

Count ball_size(int n, int d) {
  require_nonnegative(n, d);
  Count total = 0;
  for (int k = 0; k <= d; ++k) total += shell_size(n, k);
  return total;
}

Count delannoy(int m, int k) {
  require_nonnegative(m, k);
  std::vector<Count> prev(static_cast<std::size_t>(k) + 1, Count(1));
  for (int i = 1; i <= m; ++i) {
    std::vector<Count> row(prev.size());
    row[0] = 1;
    for (std::size_t j = 1; j < row.size(); ++j) row[j] = prev[j] + row[j - 1] + prev[j - 1];
    prev = std::move(row);
  }
  return prev.back();
}

std::vector<LatticePoint> shell_enumerate(int n, int d, std::uint64_t cap) { return enumerate(n, d, true, cap); }

std::vector<LatticePoint> ball_enumerate(int n, int d, std::uint64_t cap) { return enumerate(n, d, false, cap); }

TupleSequence tuple_encode(const LatticePoint& p) {
  TupleSequence s;
  std::int64_t last = 0;  // 1-based position of the previous nonzero coordinate
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    const auto v = p.coords[i];
    if (v == 0) continue;
    const auto pos = static_cast<std::int64_t>(i) + 1;
    s.tuples.push_back({v > 0 ? Sign::plus : Sign::minus, pos - last, v > 0 ? v : -v});
    last = pos;
  }
  return s;
}

LatticePoint tuple_decode(const TupleSequence& s, int n) {
  if (n < 0) throw std::invalid_argument("dimension must be nonnegative");
  for (const auto& t : s.tuples) {
    if (t.gap < 1 || t.magnitude < 1) throw std::invalid_argument("signed tuples need positive gap and magnitude");
  }
  if (s.dimension_sum() > n) {
    throw std::invalid_argument("tuple sequence has dimension sum " + std::to_string(s.dimension_sum()) +
                                " > ambient dimension " + std::to_string(n));
  }
  LatticePoint p{std::vector<std::int64_t>(static_cast<std::size_t>(n), 0)};
  std::int64_t pos = 0;
  for (const auto& t : s.tuples) {
    pos += t.gap;
    p.coords[static_cast<std::size_t>(pos - 1)] = t.sign == Sign::plus ? t.magnitude : -t.magnitude;
  }
  return p;
}

TupleSequence transpose(const TupleSequence& s) {
  TupleSequence out;
  out.tuples.reserve(s.tuples.size());
  for (const auto& t : s.tuples) out.tuples.push_back({t.sign, t.magnitude, t.gap});
  return out;
}

LatticePoint ball_bijection(const LatticePoint& p, int n, int d) {
  if (n < 0 || d < 0) throw std::invalid_argument("n and d must be nonnegative");
  if (p.dimension() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("point has dimension " + std::to_string(p.dimension()) + ", expected " +
                                std::to_string(n));
  }
  if (p.l1_norm() > d) {
    throw std::invalid_argument("point has l1 norm " + std::to_string(p.l1_norm()) + " > radius " + std::to_string(d));
  }
  return tuple_decode(transpose(tuple_encode(p)), d);
}

}  // namespace bdom
