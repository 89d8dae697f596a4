#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "bdom/count.hpp"
#include "bdom/pattern_engine.hpp"

namespace bdom {

namespace {

using CountMatrix = std::vector<std::vector<Count>>;

Count floor_div(const Count& a, const Count& b) {
  Count q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

// col_dst -= q * col_src
void column_axpy(CountMatrix& a, std::size_t dst, std::size_t src, const Count& q) {
  for (auto& row : a) row[dst] -= q * row[src];
}

void column_swap(CountMatrix& a, std::size_t i, std::size_t j) {
  for (auto& row : a) std::swap(row[i], row[j]);
}

std::int64_t narrow(const Count& c) {
  if (c > std::numeric_limits<std::int64_t>::max() || c < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("lattice basis entry does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(c);
}

}  // namespace

IntMatrix hermite_normal_form(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("lattice basis must be nonempty");
  CountMatrix a(n, std::vector<Count>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("lattice basis must be square");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  }

  // Triangularize from the bottom row up; row k's pivot lands in column k.
  for (std::size_t k = n; k-- > 0;) {
    for (std::size_t j = 0; j < k; ++j) {
      while (a[k][j] != 0) {
        column_axpy(a, k, j, a[k][k] / a[k][j]);
        column_swap(a, j, k);
      }
    }
    if (a[k][k] == 0) throw std::invalid_argument("lattice basis is singular");
    if (a[k][k] < 0) {
      for (auto& row : a) row[k] = -row[k];
    }
  }
  // Reduce entries right of each pivot into [0, pivot).
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Count q = floor_div(a[i][j], a[i][i]);
      if (q != 0) column_axpy(a, j, i, q);
    }
  }

  IntMatrix out(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i][j] = narrow(a[i][j]);
  }
  return out;
}

SublatticePattern::SublatticePattern(IntMatrix hnf) : hnf_(std::move(hnf)) {
  Count index = 1;
  for (std::size_t i = 0; i < hnf_.size(); ++i) index *= hnf_[i][i];
  index_ = narrow(index);
}

SublatticePattern SublatticePattern::from_columns(const IntMatrix& columns) {
  const std::size_t n = columns.size();
  IntMatrix rows(n, std::vector<std::int64_t>(n));
  for (std::size_t j = 0; j < n; ++j) {
    if (columns[j].size() != n) {
      throw std::invalid_argument("basis needs " + std::to_string(n) + " columns of length " + std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) rows[i][j] = columns[j][i];
  }
  return SublatticePattern(hermite_normal_form(rows));
}

SublatticePattern SublatticePattern::from_tower(const TowerPattern& tp) {
  return from_columns({{tp.d(), 0}, {tp.e(), 1}});
}

SublatticePattern SublatticePattern::tower_3d(std::int64_t d, std::int64_t e1, std::int64_t e2) {
  return from_columns({{d, 0, 0}, {e1, 1, 0}, {e2, 0, 1}});
}

std::string SublatticePattern::id() const {
  std::string s = "L[";
  for (std::size_t i = 0; i < hnf_.size(); ++i) {
    if (i) s += ';';
    for (std::size_t j = 0; j < hnf_[i].size(); ++j) {
      if (j) s += ',';
      s += std::to_string(hnf_[i][j]);
    }
  }
  return s + "]";
}

bool SublatticePattern::contains(std::span<const std::int64_t> x) const {
  const std::size_t n = hnf_.size();
  if (x.size() != n) throw std::invalid_argument("point dimension does not match lattice");
  std::vector<std::int64_t> rest(x.begin(), x.end());
  for (std::size_t k = n; k-- > 0;) {
    const auto pivot = hnf_[k][k];
    if (rest[k] % pivot != 0) return false;
    const auto c = rest[k] / pivot;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= k; ++i) rest[i] -= c * hnf_[i][k];
  }
  return true;
}

std::vector<LatticePoint> SublatticePattern::coset_representatives() const {
  const std::size_t n = hnf_.size();
  std::vector<LatticePoint> reps;
  reps.reserve(static_cast<std::size_t>(index_));
  std::vector<std::int64_t> cur(n, 0);
  for (;;) {
    reps.push_back(LatticePoint{cur});
    // odometer with the last coordinate fastest
    std::size_t k = n;
    while (k-- > 0) {
      if (++cur[k] < hnf_[k][k]) break;
      cur[k] = 0;
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  return reps;
}

}  // namespace bdom
