#pragma once

// Error-free transformations and a minimal double-double type.
//
// The series in this library alternate in sign and, for the J-type sums,
// cancel by up to ten decimal orders at the upper end of the argument range.
// Carrying each term recurrence and the running sum in double-double keeps
// the result accurate to a few ulps of the *value* rather than of the largest
// term.

#include <cmath>

namespace crossbessel {

struct TwoSumResult {
  double sum;
  double err;
};

// Knuth's branch-free TwoSum: a + b == sum + err exactly.
inline TwoSumResult two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline TwoSumResult fast_two_sum(double a, double b) {  // |a| >= |b|
  const double s = a + b;
  return {s, b - (s - a)};
}

inline TwoSumResult two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

class DoubleDouble {
 public:
  constexpr DoubleDouble() = default;
  constexpr DoubleDouble(double hi) : hi_(hi) {}  // NOLINT: implicit by intent
  constexpr DoubleDouble(double hi, double lo) : hi_(hi), lo_(lo) {}

  constexpr double hi() const { return hi_; }
  constexpr double lo() const { return lo_; }
  constexpr double value() const { return hi_ + lo_; }
  explicit operator double() const { return value(); }

  friend DoubleDouble operator-(DoubleDouble a) { return {-a.hi_, -a.lo_}; }

  friend DoubleDouble operator+(DoubleDouble a, DoubleDouble b) {
    auto s = two_sum(a.hi_, b.hi_);
    auto t = two_sum(a.lo_, b.lo_);
    s.err += t.sum;
    s = fast_two_sum(s.sum, s.err);
    s.err += t.err;
    s = fast_two_sum(s.sum, s.err);
    return {s.sum, s.err};
  }
  friend DoubleDouble operator-(DoubleDouble a, DoubleDouble b) { return a + (-b); }

  friend DoubleDouble operator*(DoubleDouble a, DoubleDouble b) {
    auto p = two_prod(a.hi_, b.hi_);
    p.err += a.hi_ * b.lo_ + a.lo_ * b.hi_;
    p = fast_two_sum(p.sum, p.err);
    return {p.sum, p.err};
  }

  friend DoubleDouble operator/(DoubleDouble a, DoubleDouble b) {
    const double q1 = a.hi_ / b.hi_;
    DoubleDouble r = a - b * DoubleDouble(q1);
    const double q2 = r.hi_ / b.hi_;
    r = r - b * DoubleDouble(q2);
    const double q3 = r.hi_ / b.hi_;
    auto s = fast_two_sum(q1, q2);
    return DoubleDouble(s.sum, s.err) + DoubleDouble(q3);
  }

  DoubleDouble& operator+=(DoubleDouble o) { return *this = *this + o; }
  DoubleDouble& operator-=(DoubleDouble o) { return *this = *this - o; }
  DoubleDouble& operator*=(DoubleDouble o) { return *this = *this * o; }
  DoubleDouble& operator/=(DoubleDouble o) { return *this = *this / o; }

 private:
  double hi_ = 0.0;
  double lo_ = 0.0;
};

inline DoubleDouble abs(DoubleDouble a) { return a.hi() < 0.0 ? -a : a; }

// Neumaier's variant of Kahan summation, for plain double inputs.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  CompensatedSum& operator+=(double x) {
    add(x);
    return *this;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace crossbessel
