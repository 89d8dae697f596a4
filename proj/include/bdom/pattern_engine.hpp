#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bdom/lattice_geometry.hpp"
#include "bdom/params.hpp"

namespace bdom {

/// Broadcast set T(d,e) = {(m*d + k*e, k) : m, k in Z} in Z^2, density 1/d.
class TowerPattern {
 public:
  TowerPattern(std::int64_t d, std::int64_t e);

  std::int64_t d() const noexcept { return d_; }
  std::int64_t e() const noexcept { return e_; }
  std::string id() const;

  friend bool operator==(const TowerPattern&, const TowerPattern&) = default;

 private:
  std::int64_t d_;
  std::int64_t e_;
};

using IntMatrix = std::vector<std::vector<std::int64_t>>;

inline constexpr std::uint64_t kDefaultIndexCap = 1'000'000;

/// Periodic broadcast set given by a full-rank sublattice of Z^n.
///
/// The basis is kept in column Hermite normal form: upper triangular, positive
/// diagonal, and 0 <= H[i][j] < H[i][i] for j > i. Columns are the generators.
/// Two patterns describe the same set iff their HNFs are equal.
class SublatticePattern {
 public:
  /// Any nonsingular square set of generating columns; throws std::invalid_argument otherwise.
  static SublatticePattern from_columns(const IntMatrix& columns);

  /// Sublattice with the same point set as T(d,e).
  static SublatticePattern from_tower(const TowerPattern& tp);

  /// Basis {(d,0,0), (e1,1,0), (e2,0,1)}.
  static SublatticePattern tower_3d(std::int64_t d, std::int64_t e1, std::int64_t e2);

  int dimension() const noexcept { return static_cast<int>(hnf_.size()); }
  /// Row-major HNF matrix.
  const IntMatrix& hnf() const noexcept { return hnf_; }
  std::int64_t index() const noexcept { return index_; }
  std::string id() const;

  bool contains(std::span<const std::int64_t> x) const;

  /// The box {0 <= v_i < H[i][i]}, lexicographically ordered.
  std::vector<LatticePoint> coset_representatives() const;

  friend bool operator==(const SublatticePattern& a, const SublatticePattern& b) { return a.hnf_ == b.hnf_; }

 private:
  explicit SublatticePattern(IntMatrix hnf);

  IntMatrix hnf_;
  std::int64_t index_ = 1;
};

/// Column Hermite normal form of a square nonsingular integer matrix (row-major input).
IntMatrix hermite_normal_form(const IntMatrix& m);

struct RowContribution {
  std::int64_t y = 0;
  std::vector<std::int64_t> values;
};

/// Reception at each fundamental-domain representative. `rows` is filled for
/// tower patterns only: one entry per broadcast row y = t-1 down to -(t-1).
struct ReceptionProfile {
  std::string pattern_id;
  std::vector<std::int64_t> receptions;
  std::vector<RowContribution> rows;
};

/// Exact reception at (i,0) from every broadcast of T(d,e).
std::int64_t tower_reception(const Params& p, const TowerPattern& tp, std::int64_t i);

/// Reception at (i,0) coming from the broadcasts in row y alone.
std::int64_t tower_row_contribution(const Params& p, const TowerPattern& tp, std::int64_t y, std::int64_t i);

ReceptionProfile reception_table(const Params& p, const TowerPattern& tp);

bool is_dominating_tower(const Params& p, const TowerPattern& tp);

struct SearchOptions {
  unsigned threads = 0;  // 0 = hardware concurrency
  std::ostream* progress = nullptr;
};

struct TowerSearchResult {
  TowerPattern best{1, 0};
  std::int64_t ceiling = 1;                 // max_potential_d(2, p)
  std::uint64_t candidates_before_best = 0;  // in (d desc, e asc) order
};

/// Largest d admitting a dominating T(d,e), and the smallest such e.
TowerSearchResult min_density_search(const Params& p, const SearchOptions& opts = {});

/// Throws CapExceeded if the pattern index exceeds index_cap.
ReceptionProfile lattice_reception_profile(const Params& p, const SublatticePattern& sp,
                                           std::uint64_t index_cap = kDefaultIndexCap);

bool is_dominating_lattice(const Params& p, const SublatticePattern& sp, std::uint64_t index_cap = kDefaultIndexCap);

struct LatticeSearchResult {
  std::optional<SublatticePattern> best;
  std::int64_t start_d = 0;
  std::uint64_t candidates_before_best = 0;
};

/// Searches tower-form bases {(d,0,0),(e1,1,0),(e2,0,1)} with d descending from
/// min(index_cap, max_potential_d(3,p)), then (e1,e2) lexicographically.
LatticeSearchResult lattice_search_3d(const Params& p, std::int64_t index_cap, const SearchOptions& opts = {});

}  // namespace bdom
