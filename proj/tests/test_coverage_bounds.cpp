#include <doctest.h>

#include <stdexcept>

#include "bdom/coverage_bounds.hpp"
#include "bdom/lattice_geometry.hpp"
#include "oracles.hpp"

using namespace bdom;

TEST_CASE("coverage: fixed values") {
  // A (4,3) broadcast in Z^2 gives 3 to itself and to every point within
  // distance 1 (5 points), 2 to the 8 points at distance 2 and 1 to the 12 at
  // distance 3: 15 + 16 + 12 = 43.
  CHECK(coverage(2, Params(4, 3)) == 43);
  CHECK(coverage(2, Params(4, 2)) == 38);
  CHECK(coverage(1, Params(3, 2)) == 8);
  CHECK(coverage(2, Params(3, 2)) == 18);
  CHECK(coverage(3, Params(2, 1)) == 7);
  CHECK(coverage(2, Params(1, 1)) == 1);
}

TEST_CASE("coverage matches the direct sum over the ball") {
  for (int n = 1; n <= 4; ++n) {
    for (int t = 1; t <= (n <= 2 ? 9 : 5); ++t) {
      for (int r = 1; r <= t; ++r) {
        CAPTURE(n);
        CAPTURE(t);
        CAPTURE(r);
        CHECK(coverage(n, Params(t, r)) == oracle::coverage_direct(n, t, r));
      }
    }
  }
}

TEST_CASE("closed forms agree with the coverage sum") {
  CHECK(coverage_closed_form(1, Params(3, 2)) == 8);
  CHECK(coverage_closed_form(2, Params(4, 2)) == 38);
  CHECK(coverage_closed_form(1, Params(1, 1)) == 1);
  for (int n = 1; n <= 4; ++n) {
    for (int t = 1; t <= 12; ++t) {
      for (int r = 1; r <= t; ++r) CHECK(coverage_closed_form(n, Params(t, r)) == coverage(n, Params(t, r)));
    }
  }
  CHECK_THROWS_AS(coverage_closed_form(5, Params(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(coverage_closed_form(0, Params(3, 2)), std::invalid_argument);
}

TEST_CASE("coverage grows with t and equals a ball when r = 1") {
  for (int n = 1; n <= 4; ++n) {
    for (int r = 1; r <= 6; ++r) {
      for (int t = r; t < 12; ++t) CHECK(coverage(n, Params(t + 1, r)) > coverage(n, Params(t, r)));
    }
    for (int t = 1; t <= 10; ++t) CHECK(coverage(n, Params(t, 1)) == ball_size(n, t - 1));
  }
}

TEST_CASE("lower bound") {
  CHECK(domination_lower_bound(GridDims({5, 5}), Params(3, 2)) == 3);
  CHECK(domination_lower_bound(GridDims({1, 1}), Params(4, 2)) == 1);
  CHECK(domination_lower_bound(GridDims({1, 1}), Params(1, 1)) == 1);
  CHECK(domination_lower_bound(GridDims({18, 1}), Params(4, 2)) == 1);
  CHECK(GridDims({3, 4, 5}).volume() == 60);
  CHECK_THROWS_AS(GridDims({}), std::invalid_argument);
  CHECK_THROWS_AS(GridDims({3, 0}), std::invalid_argument);

  for (int a = 1; a <= 8; ++a) {
    for (int b = 1; b <= 8; ++b) {
      for (int t = 1; t <= 5; ++t) {
        for (int r = 1; r <= t; ++r) {
          const auto lb = domination_lower_bound(GridDims({a, b}), Params(t, r));
          CHECK(lb >= 1);
          CHECK(lb <= a * b);
          const Count c = coverage(2, Params(t, r));
          CHECK(lb * c >= Count(r) * a * b);
          CHECK((lb - 1) * c < Count(r) * a * b);
        }
      }
    }
  }
}

TEST_CASE("max potential density") {
  CHECK(max_potential_d(2, Params(4, 2)) == 19);
  CHECK(max_potential_d(2, Params(1, 1)) == 1);
  CHECK(max_potential_d(2, Params(3, 1)) == 13);
  CHECK(max_potential_d(3, Params(2, 1)) == 7);
  const int expected[] = {1, 5, 13, 25, 41, 61, 85, 113, 145};
  for (int t = 1; t <= 9; ++t) CHECK(max_potential_d(2, Params(t, 1)) == expected[t - 1]);
}

TEST_CASE("params validation") {
  CHECK_THROWS_AS(Params(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(Params(0, 0), std::invalid_argument);
  CHECK_NOTHROW(Params(1, 1));
}
