#include "bdom/coverage_bounds.hpp"

#include <stdexcept>
#include <string>

#include "bdom/lattice_geometry.hpp"

namespace bdom {

namespace {

Rational ipow(const Rational& base, int exp) {
  Rational out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

GridDims::GridDims(std::vector<std::int64_t> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw std::invalid_argument("grid needs at least one dimension");
  for (auto a : dims_) {
    if (a < 1) throw std::invalid_argument("grid side lengths must be >= 1 (got " + std::to_string(a) + ")");
  }
}

Count GridDims::volume() const {
  Count v = 1;
  for (auto a : dims_) v *= a;
  return v;
}

Count coverage(int n, const Params& p) {
  if (n < 1) throw std::invalid_argument("dimension must be >= 1");
  const int t = p.t();
  const int r = p.r();
  Count total = r;  // the broadcast vertex itself
  for (int d = 1; d <= t - r; ++d) total += r * shell_size(n, d);
  for (int d = t - r + 1; d <= t - 1; ++d) total += (t - d) * shell_size(n, d);
  return total;
}

Count coverage_closed_form(int n, const Params& p) {
  const Rational t = p.t();
  const Rational r = p.r();
  const Rational third(1, 3);
  Rational value;
  switch (n) {
    case 1:
      value = 2 * t * r - r * r;
      break;
    case 2:
      value = 2 * ipow(r, 3) * third - 2 * r * r * t + 2 * r * t * t + r * third;
      break;
    case 3:
      value = -ipow(r, 4) * third + 4 * ipow(r, 3) * t * third - 2 * r * r * t * t - 2 * r * r * third +
              4 * r * ipow(t, 3) * third + 4 * r * t * third;
      break;
    case 4:
      value = 2 * ipow(r, 5) / Rational(15) - 2 * ipow(r, 4) * t * third + 4 * ipow(r, 3) * t * t * third +
              2 * ipow(r, 3) * third - 4 * r * r * ipow(t, 3) * third - 2 * r * r * t +
              2 * r * ipow(t, 4) * third + 2 * r * t * t + r / Rational(5);
      break;
    default:
      throw std::invalid_argument("closed-form coverage is tabulated only for 1 <= n <= 4 (got " +
                                  std::to_string(n) + ")");
  }
  if (denominator(value) != 1) throw std::logic_error("closed-form coverage is not integral");
  return numerator(value);
}

Count domination_lower_bound(const GridDims& g, const Params& p) {
  const Count c = coverage(g.dimension(), p);
  const Count need = p.r() * g.volume();
  return (need + c - 1) / c;
}

Count max_potential_d(int n, const Params& p) { return coverage(n, p) / p.r(); }

}  // namespace bdom
