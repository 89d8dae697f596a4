#pragma once

#include <cstdint>
#include <vector>

#include "bdom/count.hpp"
#include "bdom/params.hpp"

namespace bdom {

/// Side lengths of a finite grid P_{a1} x ... x P_{an}.
class GridDims {
 public:
  explicit GridDims(std::vector<std::int64_t> dims);

  const std::vector<std::int64_t>& dims() const noexcept { return dims_; }
  int dimension() const noexcept { return static_cast<int>(dims_.size()); }
  Count volume() const;

 private:
  std::vector<std::int64_t> dims_;
};

/// Total unwasted reception one broadcast supplies to Z^n: reception above r
/// at a vertex is discarded, everything below it counts.
Count coverage(int n, const Params& p);

/// Tabulated polynomial form of coverage() for 1 <= n <= 4, evaluated over
/// exact rationals. Throws std::invalid_argument outside that range and
/// std::logic_error if the value is not integral.
Count coverage_closed_form(int n, const Params& p);

/// ceil(r |V| / C_{t,r}(Z^n)), a lower bound on the domination number of the grid.
Count domination_lower_bound(const GridDims& g, const Params& p);

/// floor(C_{t,r}(Z^n) / r): the most vertices one broadcast could fully serve,
/// which caps the period of any dominating tower.
Count max_potential_d(int n, const Params& p);

}  // namespace bdom
