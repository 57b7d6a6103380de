#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "crossbessel/order.hpp"

namespace crossbessel {

enum class ZeroKind { J, Cross };

std::string_view to_string(ZeroKind kind);
ZeroKind zero_kind_from_string(std::string_view text);

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

// Ordered positive zeros of J_nu (kind J) or of the cross-product
// Phi_nu = J_{nu+1} I_nu + J_nu I_{nu+1} (kind Cross), with the bisection
// brackets each zero was refined in.
struct ZeroTable {
  Order nu;
  ZeroKind kind = ZeroKind::J;
  double tol = 1e-12;
  std::vector<double> zeros;
  std::vector<Bracket> brackets;

  std::size_t size() const { return zeros.size(); }
  // 1-based, matching j_{nu,n} / gamma_{nu,n}.
  double operator[](std::size_t n) const { return zeros.at(n - 1); }
};

}  // namespace crossbessel
