#pragma once

#include <stdexcept>
#include <string>

namespace bdom {

/// Transmission strength t and required reception r, with t >= r >= 1.
class Params {
 public:
  Params(int t, int r) : t_(t), r_(r) {
    if (r < 1 || t < r) {
      throw std::invalid_argument("invalid (t,r) = (" + std::to_string(t) + "," + std::to_string(r) +
                                  "): need t >= r >= 1");
    }
  }

  int t() const noexcept { return t_; }
  int r() const noexcept { return r_; }

  friend bool operator==(const Params&, const Params&) = default;

 private:
  int t_;
  int r_;
};

}  // namespace bdom
