#pragma once

// Shah-Trimble sums for the normalised cross-product (Cross) and product
// (Product) functions, the threshold equations in nu, and sampling of
// Re(t f'(t)/f(t)) on the unit disk.

#include <complex>
#include <string_view>

#include "json.hpp"

#include "crossbessel/order.hpp"
#include "crossbessel/zero_table.hpp"

namespace crossbessel {

enum class SumKind { Cross, Product };
enum class SumMethod { Direct, Closed };
enum class EquationId { Th1Paper, Th1Sum, Th2Paper, Th2Sum };

std::string_view to_string(SumKind which);
std::string_view to_string(SumMethod method);
std::string_view to_string(EquationId id);
SumKind sum_kind_from_string(std::string_view text);
SumMethod sum_method_from_string(std::string_view text);
EquationId equation_from_string(std::string_view text);

struct CriterionReport {
  Order nu;
  SumKind which = SumKind::Cross;
  SumMethod method = SumMethod::Closed;
  double sum_value = 0.0;  // partial sum for Direct, full sum for Closed
  int zeros_used = 0;
  double tail_estimate = 0.0;
  bool satisfies_bound = false;
};

struct ThresholdResult {
  EquationId equation_id = EquationId::Th1Paper;
  double root = 0.0;
  Bracket bracket;  // the bracket actually searched
  double residual_at_root = 0.0;
  int iterations = 0;
};

struct DiskGrid {
  int radii = 64;
  int angles = 256;
  double max_radius = 0.999;
  double min_radius = 1e-3;

  void validate() const;
  double radius(int i) const;  // geometric spacing, i in [0, radii)
};

struct StarlikeResult {
  double min_re = 0.0;
  std::complex<double> argmin;
  bool denominator_underflow = false;
  bool passes = false;  // min_re > -1e-12 and no underflow
};

inline constexpr double kStarlikeFloor = -1e-12;
inline constexpr double kDefaultThresholdTol = 1e-10;

// Heuristic tail  2 * sum_{n>N} 1/(b_n^4 - 1),  b_n = (n + nu/2 - 1/4) pi - 1,
// explicit to n = 10^4 and bounded by an integral beyond.
double direct_tail_estimate(Order nu, int zeros_used);

// sum_{n<=N} 1/(gamma_{nu,n}^4 - 1). FirstZeroInsideDiskError if gamma_{nu,1} <= 1.
CriterionReport s1_direct(Order nu, int zeros_used);
// (1/4)(2nu + 1 - Phi_nu'(1)/Phi_nu(1)).
CriterionReport s1_closed(Order nu);
// sum_{n<=N} 1/(j_{nu,n}^4 - 1). FirstZeroInsideDiskError if j_{nu,1} <= 1.
CriterionReport s2_direct(Order nu, int zeros_used);
// (1/4)(J_{nu+1}(1)/J_nu(1) - I_{nu+1}(1)/I_nu(1)).
CriterionReport s2_closed(Order nu);

// (nu-1) Phi_nu(1) - J_nu(1) I_nu(1)
double theorem1_residual(Order nu);
// J_{nu+1}(1) I_nu(1) - J_nu(1) I_{nu+1}(1) - (nu+1) J_nu(1) I_nu(1)
double theorem2_residual(Order nu);
double equation_residual(EquationId id, Order nu);

// The order at which the first zero of Phi_nu (Cross) or J_nu (Product)
// equals 1; the closed sums have a pole there.
double unit_first_zero_order(SumKind which);

// Bisection on the residual. The *_SUM equations are searched only to the
// right of unit_first_zero_order, where the sum is finite.
ThresholdResult solve_threshold(EquationId id, Bracket bracket,
                                double tol = kDefaultThresholdTol);

StarlikeResult starlike_min_re(SumKind which, Order nu, const DiskGrid& grid = {});

struct Th2Comparison {
  ThresholdResult paper;
  ThresholdResult sum;
  double root_difference = 0.0;
  double s2_at_paper_root = 0.0;  // s2_closed at the th2-paper root
};
Th2Comparison compare_th2(Bracket bracket = {-0.9, 0.2});

nlohmann::json to_json(const CriterionReport& r);
nlohmann::json to_json(const ThresholdResult& r);
nlohmann::json to_json(const StarlikeResult& r);
nlohmann::json to_json(const Th2Comparison& c);

}  // namespace crossbessel
