#pragma once

#include <cmath>
#include <string>

#include "crossbessel/errors.hpp"

namespace crossbessel {

// Bessel order nu; every result in this library assumes nu > -1.
class Order {
 public:
  Order() = default;
  explicit Order(double nu) : nu_(nu) {
    if (!std::isfinite(nu) || !(nu > -1.0)) {
      throw DomainError("order nu must satisfy nu > -1, got " + std::to_string(nu));
    }
  }

  double value() const { return nu_; }
  Order shifted(double by) const { return Order(nu_ + by); }

  friend bool operator==(Order a, Order b) { return a.nu_ == b.nu_; }

 private:
  double nu_ = 0.0;
};

}  // namespace crossbessel
