#include "bdom/pattern_engine.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "bdom/coverage_bounds.hpp"
#include "bdom/errors.hpp"
#include "parallel.hpp"

namespace bdom {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const auto r = a % m;
  return r < 0 ? r + m : r;
}

// Ordered candidate space: blocks for d = start, start-1, ..., 1 with
// block_size(d) candidates each. Maps a flat index back to (d, offset).
class DescendingBlocks {
 public:
  template <class SizeFn>
  DescendingBlocks(std::int64_t start, SizeFn&& block_size) {
    std::uint64_t total = 0;
    for (std::int64_t d = start; d >= 1; --d) {
      ds_.push_back(d);
      begin_.push_back(total);
      total += block_size(d);
    }
    total_ = total;
  }

  std::uint64_t size() const noexcept { return total_; }

  std::pair<std::int64_t, std::uint64_t> locate(std::uint64_t flat) const {
    const auto it = std::upper_bound(begin_.begin(), begin_.end(), flat);
    const auto k = static_cast<std::size_t>(it - begin_.begin()) - 1;
    return {ds_[k], flat - begin_[k]};
  }

 private:
  std::vector<std::int64_t> ds_;
  std::vector<std::uint64_t> begin_;
  std::uint64_t total_ = 0;
};

std::int64_t to_int64(const Count& c) {
  if (c > std::numeric_limits<std::int64_t>::max()) throw std::overflow_error("value exceeds 64-bit range");
  return static_cast<std::int64_t>(c);
}

}  // namespace

TowerPattern::TowerPattern(std::int64_t d, std::int64_t e) : d_(d), e_(e) {
  if (d < 1) throw std::invalid_argument("tower period d must be >= 1");
  if (e < 0 || e >= d) {
    throw std::invalid_argument("tower shift e must satisfy 0 <= e < d (got d=" + std::to_string(d) +
                                ", e=" + std::to_string(e) + ")");
  }
}

std::string TowerPattern::id() const { return "T(" + std::to_string(d_) + "," + std::to_string(e_) + ")"; }

std::int64_t tower_row_contribution(const Params& p, const TowerPattern& tp, std::int64_t y, std::int64_t i) {
  const std::int64_t t = p.t();
  const std::int64_t reach = t - 1 - std::llabs(y);
  if (reach < 0) return 0;
  // Broadcasts in row y sit at x = y*e (mod d); every one within horizontal reach counts.
  const std::int64_t lo = i - reach;
  std::int64_t sum = 0;
  for (std::int64_t x = lo + floor_mod(y * tp.e() - lo, tp.d()); x <= i + reach; x += tp.d()) {
    sum += t - std::llabs(y) - std::llabs(i - x);
  }
  return sum;
}

std::int64_t tower_reception(const Params& p, const TowerPattern& tp, std::int64_t i) {
  if (i < 0 || i >= tp.d()) {
    throw std::out_of_range("position " + std::to_string(i) + " outside 0.." + std::to_string(tp.d() - 1));
  }
  std::int64_t sum = 0;
  for (std::int64_t y = -(p.t() - 1); y <= p.t() - 1; ++y) sum += tower_row_contribution(p, tp, y, i);
  return sum;
}

ReceptionProfile reception_table(const Params& p, const TowerPattern& tp) {
  ReceptionProfile profile;
  profile.pattern_id = tp.id();
  profile.receptions.assign(static_cast<std::size_t>(tp.d()), 0);
  for (std::int64_t y = p.t() - 1; y >= -(p.t() - 1); --y) {
    RowContribution row{y, std::vector<std::int64_t>(static_cast<std::size_t>(tp.d()))};
    for (std::int64_t i = 0; i < tp.d(); ++i) {
      row.values[static_cast<std::size_t>(i)] = tower_row_contribution(p, tp, y, i);
      profile.receptions[static_cast<std::size_t>(i)] += row.values[static_cast<std::size_t>(i)];
    }
    profile.rows.push_back(std::move(row));
  }
  return profile;
}

bool is_dominating_tower(const Params& p, const TowerPattern& tp) {
  // T(d,e) is symmetric under (x,y) -> (-x,-y), so (i,0) and (d-i,0) receive the
  // same; and the broadcast at the origin alone serves min(i, d-i) <= t-r.
  const std::int64_t d = tp.d();
  for (std::int64_t i = p.t() - p.r() + 1; i <= d / 2; ++i) {
    if (tower_reception(p, tp, i) < p.r()) return false;
  }
  return true;
}

TowerSearchResult min_density_search(const Params& p, const SearchOptions& opts) {
  TowerSearchResult result;
  result.ceiling = to_int64(max_potential_d(2, p));
  const DescendingBlocks space(result.ceiling, [](std::int64_t d) { return static_cast<std::uint64_t>(d); });
  if (opts.progress) {
    *opts.progress << "tower-search (" << p.t() << "," << p.r() << "): d <= " << result.ceiling << ", "
                   << space.size() << " candidates\n";
  }
  const auto hit = detail::first_match(space.size(), opts.threads, [&](std::uint64_t k) {
    const auto [d, e] = space.locate(k);
    return is_dominating_tower(p, TowerPattern(d, static_cast<std::int64_t>(e)));
  });
  // T(1,0) always dominates, so the search cannot come up empty.
  if (!hit) throw std::logic_error("tower search exhausted without T(1,0)");
  const auto [d, e] = space.locate(*hit);
  result.best = TowerPattern(d, static_cast<std::int64_t>(e));
  result.candidates_before_best = *hit;
  return result;
}

namespace {

struct Offset {
  std::vector<std::int64_t> delta;
  std::int64_t strength;  // t - |delta|
};

std::vector<Offset> reach_offsets(const Params& p, int n) {
  std::vector<Offset> out;
  for (auto& w : ball_enumerate(n, p.t() - 1)) {
    const auto norm = w.l1_norm();
    out.push_back({std::move(w.coords), p.t() - norm});
  }
  return out;
}

std::int64_t lattice_reception_at(const SublatticePattern& sp, const std::vector<Offset>& offsets,
                                  const LatticePoint& v, std::vector<std::int64_t>& scratch) {
  std::int64_t sum = 0;
  for (const auto& off : offsets) {
    for (std::size_t k = 0; k < scratch.size(); ++k) scratch[k] = v.coords[k] + off.delta[k];
    if (sp.contains(scratch)) sum += off.strength;
  }
  return sum;
}

void check_index(const SublatticePattern& sp, std::uint64_t index_cap) {
  if (static_cast<std::uint64_t>(sp.index()) > index_cap) {
    throw CapExceeded("lattice index " + std::to_string(sp.index()) + " exceeds cap " + std::to_string(index_cap));
  }
}

bool dominates(const Params& p, const SublatticePattern& sp, const std::vector<Offset>& offsets) {
  std::vector<std::int64_t> scratch(static_cast<std::size_t>(sp.dimension()));
  for (const auto& v : sp.coset_representatives()) {
    if (lattice_reception_at(sp, offsets, v, scratch) < p.r()) return false;
  }
  return true;
}

}  // namespace

ReceptionProfile lattice_reception_profile(const Params& p, const SublatticePattern& sp, std::uint64_t index_cap) {
  check_index(sp, index_cap);
  const auto offsets = reach_offsets(p, sp.dimension());
  std::vector<std::int64_t> scratch(static_cast<std::size_t>(sp.dimension()));
  ReceptionProfile profile;
  profile.pattern_id = sp.id();
  for (const auto& v : sp.coset_representatives()) {
    profile.receptions.push_back(lattice_reception_at(sp, offsets, v, scratch));
  }
  return profile;
}

bool is_dominating_lattice(const Params& p, const SublatticePattern& sp, std::uint64_t index_cap) {
  check_index(sp, index_cap);
  return dominates(p, sp, reach_offsets(p, sp.dimension()));
}

LatticeSearchResult lattice_search_3d(const Params& p, std::int64_t index_cap, const SearchOptions& opts) {
  if (index_cap < 1) throw std::invalid_argument("index cap must be >= 1");
  LatticeSearchResult result;
  const Count ceiling = max_potential_d(3, p);
  result.start_d = ceiling < index_cap ? to_int64(ceiling) : index_cap;

  const DescendingBlocks space(result.start_d,
                               [](std::int64_t d) { return static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(d); });
  if (opts.progress) {
    *opts.progress << "lattice-search3d (" << p.t() << "," << p.r() << "): d <= " << result.start_d << ", "
                   << space.size() << " candidates\n";
  }
  const auto offsets = reach_offsets(p, 3);
  const auto decode = [&](std::uint64_t k) {
    const auto [d, off] = space.locate(k);
    const auto ud = static_cast<std::uint64_t>(d);
    return SublatticePattern::tower_3d(d, static_cast<std::int64_t>(off / ud), static_cast<std::int64_t>(off % ud));
  };
  const auto hit =
      detail::first_match(space.size(), opts.threads, [&](std::uint64_t k) { return dominates(p, decode(k), offsets); });
  if (hit) {
    result.best = decode(*hit);
    result.candidates_before_best = *hit;
  }
  return result;
}

}  // namespace bdom
