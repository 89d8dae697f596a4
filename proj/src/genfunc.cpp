#include <array>
#include <stdexcept>
#include <string>

#include "bdom/lattice_geometry.hpp"

namespace bdom {

namespace {

using Series = std::vector<Count>;
using Series2 = std::vector<std::vector<Count>>;

constexpr std::array<std::pair<GenFuncKind, std::string_view>, 6> kKindNames{{
    {GenFuncKind::b_bivariate, "B_bivariate"},
    {GenFuncKind::s_bivariate, "S_bivariate"},
    {GenFuncKind::b_fixed_d, "B_fixed_d"},
    {GenFuncKind::b_fixed_n, "B_fixed_n"},
    {GenFuncKind::s_fixed_d, "S_fixed_d"},
    {GenFuncKind::s_fixed_n, "S_fixed_n"},
}};

Series multiply(const Series& a, const Series& b, std::size_t len) {
  Series out(len, Count(0));
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// (1 + sign*x)^k truncated to len terms.
Series binomial_power(int sign, int k, std::size_t len) {
  Series out(len, Count(0));
  for (std::size_t i = 0; i < len && static_cast<int>(i) <= k; ++i) {
    out[i] = binomial(k, static_cast<std::int64_t>(i));
    if (sign < 0 && i % 2 == 1) out[i] = -out[i];
  }
  return out;
}

// num / den as a formal power series; den[0] must be +-1 so the division stays integral.
Series divide(const Series& num, const Series& den, std::size_t len) {
  if (den.empty() || (den[0] != 1 && den[0] != -1)) {
    throw std::logic_error("series divisor must have unit constant term");
  }
  Series out(len, Count(0));
  for (std::size_t k = 0; k < len; ++k) {
    Count acc = k < num.size() ? num[k] : Count(0);
    for (std::size_t j = 1; j <= k && j < den.size(); ++j) acc -= den[j] * out[k - j];
    out[k] = acc * den[0];
  }
  return out;
}

Series2 divide2(const Series2& num, const Series2& den, std::size_t len) {
  Series2 out(len, Series(len, Count(0)));
  auto at = [](const Series2& s, std::size_t i, std::size_t j) {
    return i < s.size() && j < s[i].size() ? s[i][j] : Count(0);
  };
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = 0; j < len; ++j) {
      Count acc = at(num, i, j);
      for (std::size_t a = 0; a <= i && a < den.size(); ++a) {
        for (std::size_t b = 0; b <= j && b < den[a].size(); ++b) {
          if (a == 0 && b == 0) continue;
          acc -= den[a][b] * out[i - a][j - b];
        }
      }
      out[i][j] = acc * den[0][0];
    }
  }
  return out;
}

// (1+x)^k / (1-x)^m
Series ratio(int k, int m, std::size_t len) {
  return divide(binomial_power(+1, k, len), binomial_power(-1, m, len), len);
}

}  // namespace

std::optional<GenFuncKind> parse_genfunc_kind(std::string_view name) {
  for (const auto& [kind, label] : kKindNames) {
    if (label == name) return kind;
  }
  return std::nullopt;
}

std::string_view genfunc_kind_name(GenFuncKind kind) {
  for (const auto& [k, label] : kKindNames) {
    if (k == kind) return label;
  }
  return "?";
}

bool is_bivariate(GenFuncKind kind) noexcept {
  return kind == GenFuncKind::b_bivariate || kind == GenFuncKind::s_bivariate;
}

std::vector<std::vector<Count>> genfunc_coefficients(GenFuncKind kind, std::optional<int> fixed, int max_index) {
  if (max_index < 0) throw std::invalid_argument("max_index must be nonnegative");
  if (is_bivariate(kind) && fixed) {
    throw std::invalid_argument(std::string(genfunc_kind_name(kind)) + " takes no fixed parameter");
  }
  if (!is_bivariate(kind) && !fixed) {
    throw std::invalid_argument(std::string(genfunc_kind_name(kind)) + " requires a fixed parameter");
  }
  if (fixed && *fixed < 0) throw std::invalid_argument("fixed parameter must be nonnegative");

  const auto len = static_cast<std::size_t>(max_index) + 1;
  switch (kind) {
    case GenFuncKind::b_bivariate:
    case GenFuncKind::s_bivariate: {
      // 1 - x - y - xy, indexed [x-degree][y-degree]
      const Series2 den{{Count(1), Count(-1)}, {Count(-1), Count(-1)}};
      const Series2 num = kind == GenFuncKind::b_bivariate ? Series2{{Count(1)}} : Series2{{Count(1), Count(-1)}};
      return divide2(num, den, len);
    }
    case GenFuncKind::b_fixed_d:
    case GenFuncKind::b_fixed_n:
      // symmetric in the two variables
      return {ratio(*fixed, *fixed + 1, len)};
    case GenFuncKind::s_fixed_d: {
      const int d = *fixed;
      if (d == 0) return {ratio(0, 1, len)};
      // 2x(1+x)^(d-1) / (1-x)^(d+1)
      Series num = multiply(Series{Count(0), Count(2)}, binomial_power(+1, d - 1, len), len);
      return {divide(num, binomial_power(-1, d + 1, len), len)};
    }
    case GenFuncKind::s_fixed_n:
      return {ratio(*fixed, *fixed, len)};
  }
  throw std::logic_error("unhandled generating function kind");
}

}  // namespace bdom
