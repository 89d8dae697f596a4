#include <doctest.h>

#include <set>
#include <stdexcept>

#include "bdom/errors.hpp"
#include "bdom/lattice_geometry.hpp"
#include "oracles.hpp"
#include "reference_data.hpp"

using namespace bdom;
using reference::shell_polynomial;

namespace {

LatticePoint pt(std::vector<std::int64_t> c) { return LatticePoint{std::move(c)}; }

SignedTuple plus(std::int64_t g, std::int64_t m) { return {Sign::plus, g, m}; }
SignedTuple minus(std::int64_t g, std::int64_t m) { return {Sign::minus, g, m}; }

}  // namespace

TEST_CASE("shell and ball sizes: fixed values") {
  CHECK(shell_size(2, 3) == 12);
  CHECK(shell_size(3, 2) == 18);
  CHECK(shell_size(5, 0) == 1);
  CHECK(shell_size(0, 0) == 1);
  CHECK(shell_size(0, 4) == 0);
  CHECK(ball_size(2, 2) == 13);
  CHECK(ball_size(0, 5) == 1);
  CHECK(ball_size(4, 3) == 129);
}

TEST_CASE("shell and ball sizes match cube scans") {
  for (int n = 1; n <= 4; ++n) {
    for (int d = 0; d <= 6; ++d) {
      CAPTURE(n);
      CAPTURE(d);
      CHECK(shell_size(n, d) == oracle::cube_count(n, d, true));
      CHECK(ball_size(n, d) == oracle::cube_count(n, d, false));
    }
  }
}

TEST_CASE("ball recursion holds") {
  for (int n = 1; n <= 8; ++n) {
    for (int d = 1; d <= 8; ++d) {
      CHECK(ball_size(n, d) == ball_size(n - 1, d) + ball_size(n, d - 1) + ball_size(n - 1, d - 1));
    }
  }
}

TEST_CASE("ball size is symmetric and equals the Delannoy number") {
  for (int n = 0; n <= 10; ++n) {
    for (int d = 0; d <= 10; ++d) {
      CHECK(ball_size(n, d) == delannoy(n, d));
      CHECK(ball_size(n, d) == ball_size(d, n));
    }
  }
}

TEST_CASE("delannoy numbers match step-sequence enumeration") {
  CHECK(delannoy(0, 0) == 1);
  CHECK(delannoy(2, 2) == 13);
  CHECK(delannoy(3, 3) == 63);
  for (int m = 0; m <= 7; ++m) {
    for (int k = 0; k <= 7; ++k) CHECK(delannoy(m, k) == oracle::delannoy_paths(m, k));
  }
}

TEST_CASE("shell polynomials for n = 1..7") {
  for (int n = 1; n <= 7; ++n) {
    for (int d = 1; d <= 8; ++d) {
      CAPTURE(n);
      CAPTURE(d);
      CHECK(Rational(shell_size(n, d)) == shell_polynomial(n, d));
    }
  }
}

TEST_CASE("shell enumeration") {
  const auto s12 = shell_enumerate(1, 2);
  REQUIRE(s12.size() == 2);
  CHECK(s12[0] == pt({-2}));
  CHECK(s12[1] == pt({2}));

  const auto s21 = shell_enumerate(2, 1);
  const std::vector<LatticePoint> expected{pt({-1, 0}), pt({0, -1}), pt({0, 1}), pt({1, 0})};
  CHECK(s21 == expected);

  const auto s23 = shell_enumerate(2, 3);
  CHECK(s23.size() == 12);
  for (const auto& p : s23) CHECK(p.l1_norm() == 3);
  CHECK(std::is_sorted(s23.begin(), s23.end()));

  const auto b = ball_enumerate(3, 4);
  CHECK(b.size() == static_cast<std::size_t>(ball_size(3, 4)));
  CHECK(std::set<LatticePoint>(b.begin(), b.end()).size() == b.size());

  CHECK_THROWS_AS(ball_enumerate(4, 6, 100), CapExceeded);
  CHECK_THROWS_AS(shell_enumerate(4, 6, 100), CapExceeded);
}

TEST_CASE("generating function coefficients") {
  constexpr int kMax = 10;
  const auto bb = genfunc_coefficients(GenFuncKind::b_bivariate, std::nullopt, kMax);
  const auto sb = genfunc_coefficients(GenFuncKind::s_bivariate, std::nullopt, kMax);
  REQUIRE(bb.size() == kMax + 1);
  REQUIRE(sb.size() == kMax + 1);
  CHECK(bb[2][2] == 13);
  for (int i = 0; i <= kMax; ++i) {
    for (int j = 0; j <= kMax; ++j) {
      CHECK(bb[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == ball_size(i, j));
      CHECK(sb[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == shell_size(i, j));
    }
  }

  for (int f = 0; f <= kMax; ++f) {
    const auto bd = genfunc_coefficients(GenFuncKind::b_fixed_d, f, kMax).at(0);
    const auto bn = genfunc_coefficients(GenFuncKind::b_fixed_n, f, kMax).at(0);
    const auto sd = genfunc_coefficients(GenFuncKind::s_fixed_d, f, kMax).at(0);
    const auto sn = genfunc_coefficients(GenFuncKind::s_fixed_n, f, kMax).at(0);
    for (int i = 0; i <= kMax; ++i) {
      const auto k = static_cast<std::size_t>(i);
      CAPTURE(f);
      CAPTURE(i);
      CHECK(bd[k] == ball_size(i, f));
      CHECK(bn[k] == ball_size(f, i));
      CHECK(sd[k] == shell_size(i, f));
      CHECK(sn[k] == shell_size(f, i));
    }
  }

  CHECK(genfunc_coefficients(GenFuncKind::b_fixed_d, 0, 4).at(0) == std::vector<Count>(5, Count(1)));
  const std::vector<Count> s2{1, 4, 8, 12};
  CHECK(genfunc_coefficients(GenFuncKind::s_fixed_n, 2, 3).at(0) == s2);
}

TEST_CASE("generating function argument errors") {
  CHECK_THROWS_AS(genfunc_coefficients(GenFuncKind::b_fixed_d, std::nullopt, 3), std::invalid_argument);
  CHECK_THROWS_AS(genfunc_coefficients(GenFuncKind::b_bivariate, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(genfunc_coefficients(GenFuncKind::s_fixed_n, -1, 3), std::invalid_argument);
  CHECK_THROWS_AS(genfunc_coefficients(GenFuncKind::s_fixed_n, 1, -1), std::invalid_argument);
  CHECK(parse_genfunc_kind("S_fixed_d") == GenFuncKind::s_fixed_d);
  CHECK_FALSE(parse_genfunc_kind("S_fixed").has_value());
  for (auto k : {GenFuncKind::b_bivariate, GenFuncKind::s_bivariate, GenFuncKind::b_fixed_d, GenFuncKind::b_fixed_n,
                 GenFuncKind::s_fixed_d, GenFuncKind::s_fixed_n}) {
    CHECK(parse_genfunc_kind(genfunc_kind_name(k)) == k);
  }
}

TEST_CASE("tuple encoding worked examples") {
  CHECK(tuple_encode(pt({2, 0, -1, 0})).tuples == std::vector<SignedTuple>{plus(1, 2), minus(2, 1)});
  CHECK(tuple_encode(pt({0, 0, 0, 0})).tuples.empty());
  CHECK(tuple_encode(pt({-1, 0, 1, -1})).tuples == std::vector<SignedTuple>{minus(1, 1), plus(2, 1), minus(1, 1)});

  CHECK(tuple_decode(TupleSequence{{plus(2, 1), minus(1, 2)}}, 3) == pt({0, 1, -2}));
  CHECK(tuple_decode(TupleSequence{}, 3) == pt({0, 0, 0}));
  CHECK(tuple_decode(TupleSequence{{plus(1, 5)}}, 1) == pt({5}));

  const TupleSequence s{{plus(1, 2), minus(2, 1)}};
  CHECK(s.dimension_sum() == 3);
  CHECK(s.distance_sum() == 3);
  CHECK(transpose(s).tuples == std::vector<SignedTuple>{plus(2, 1), minus(1, 2)});

  CHECK_THROWS_AS(tuple_decode(TupleSequence{{plus(3, 1)}}, 2), std::invalid_argument);
  CHECK_THROWS_AS(tuple_decode(TupleSequence{{plus(0, 1)}}, 2), std::invalid_argument);
}

TEST_CASE("ball bijection worked examples") {
  CHECK(ball_bijection(pt({2, 0, -1, 0}), 4, 3) == pt({0, 1, -2}));
  CHECK(ball_bijection(pt({0, 0, 0, 0}), 4, 3) == pt({0, 0, 0}));
  CHECK(ball_bijection(pt({-1, 0, 1, -1}), 4, 3) == pt({-1, 2, -1}));
  CHECK_THROWS_AS(ball_bijection(pt({2, 2, 0, 0}), 4, 3), std::invalid_argument);
  CHECK_THROWS_AS(ball_bijection(pt({1, 0}), 4, 3), std::invalid_argument);
}

TEST_CASE("ball bijection is a bijection for n, d <= 5") {
  for (int n = 0; n <= 5; ++n) {
    for (int d = 0; d <= 5; ++d) {
      std::set<LatticePoint> image;
      for (const auto& p : ball_enumerate(n, d)) {
        const auto q = ball_bijection(p, n, d);
        REQUIRE(q.dimension() == static_cast<std::size_t>(d));
        REQUIRE(q.l1_norm() <= n);
        REQUIRE(ball_bijection(q, d, n) == p);
        image.insert(q);
      }
      CAPTURE(n);
      CAPTURE(d);
      CHECK(image.size() == oracle::cube_count(d, n, false));
      CHECK(Count(image.size()) == ball_size(n, d));
    }
  }
}
