#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "crossbessel/criterion.hpp"
#include "crossbessel/errors.hpp"
#include "oracles.hpp"

using namespace crossbessel;

namespace {

double phi_m(double z) { return (2.0 / oracle::pi) * (std::sin(z) * std::cosh(z) + std::cos(z) * std::sinh(z)) / z; }

// sum over the k <= count roots of tan z + tanh z = 0, with the (n - 1/4) pi tail
double s1_minus_half_oracle(int count) {
  double acc = 0.0;
  for (int n = 1; n <= count; ++n) {
    const double g = oracle::gamma_minus_half(n);
    acc += 1.0 / (std::pow(g, 4) - 1.0);
  }
  return acc + 1.0 / (3.0 * std::pow(oracle::pi, 4) * std::pow(count + 0.25, 3));
}

}  // namespace

TEST_CASE("string conversions") {
  CHECK(sum_kind_from_string("cross") == SumKind::Cross);
  CHECK(sum_kind_from_string("product") == SumKind::Product);
  CHECK(sum_method_from_string("direct") == SumMethod::Direct);
  CHECK(equation_from_string("th2-sum") == EquationId::Th2Sum);
  CHECK(std::string(to_string(EquationId::Th1Paper)) == "th1-paper");
  CHECK_THROWS_AS(sum_kind_from_string("sum"), DomainError);
  CHECK_THROWS_AS(sum_method_from_string("exact"), DomainError);
  CHECK_THROWS_AS(equation_from_string("th3"), DomainError);
}

TEST_CASE("cross sum at nu = -1/2") {
  const CriterionReport d = s1_direct(Order(-0.5), 4);
  const double g1 = oracle::gamma_minus_half(1);
  CHECK(std::fabs(1.0 / (std::pow(g1, 4) - 1.0) - 0.033019) < 1e-6);
  double partial = 0.0;
  for (int n = 1; n <= 4; ++n) partial += 1.0 / (std::pow(oracle::gamma_minus_half(n), 4) - 1.0);
  CHECK(d.sum_value == doctest::Approx(partial).epsilon(1e-12));
  CHECK(std::fabs(d.sum_value - 0.03434) < 1e-5);
  CHECK(d.zeros_used == 4);
  CHECK(std::fabs(d.sum_value + d.tail_estimate - 0.0344) < 1e-4);
  CHECK(d.satisfies_bound);

  const double dphi = (2.0 / oracle::pi) * 2.0 * std::cos(1.0) * std::cosh(1.0) - phi_m(1.0);
  const double closed_ref = 0.25 * (0.0 - dphi / phi_m(1.0));
  const CriterionReport c = s1_closed(Order(-0.5));
  CHECK(c.sum_value == doctest::Approx(closed_ref).epsilon(1e-13));
  CHECK(c.sum_value == doctest::Approx(s1_minus_half_oracle(2000)).epsilon(1e-9));
  CHECK(c.satisfies_bound);
  CHECK(c.method == SumMethod::Closed);
}

TEST_CASE("product sums at nu = +-1/2") {
  const CriterionReport d = s2_direct(Order(0.5), 6);
  double partial = 0.0;
  for (int n = 1; n <= 6; ++n) partial += 1.0 / (std::pow(n * oracle::pi, 4) - 1.0);
  CHECK(d.sum_value == doctest::Approx(partial).epsilon(1e-12));
  CHECK(std::fabs(d.sum_value - 0.01120571) < 1e-8);
  CHECK(std::fabs(d.sum_value + d.tail_estimate - 0.011219) < 2e-5);
  const CriterionReport c = s2_closed(Order(0.5));
  const double ref = 0.25 * ((1.0 - 1.0 / std::tan(1.0)) - (std::cosh(1.0) - std::sinh(1.0)) / std::sinh(1.0));
  CHECK(c.sum_value == doctest::Approx(ref).epsilon(1e-13));
  CHECK(std::fabs(c.sum_value - oracle::sum_npi()) < 1e-12);
  CHECK(c.satisfies_bound);

  const CriterionReport m = s2_closed(Order(-0.5));
  CHECK(m.sum_value == doctest::Approx(0.25 * (std::tan(1.0) - std::tanh(1.0))).epsilon(1e-13));
  CHECK(std::fabs(m.sum_value - 0.198953) < 1e-6);
  const CriterionReport md = s2_direct(Order(-0.5), 6);
  CHECK(std::fabs(1.0 / (std::pow(oracle::pi / 2, 4) - 1.0) - 0.196538) < 1e-6);
  CHECK(std::fabs(md.sum_value + md.tail_estimate - m.sum_value) <= 2.0 * md.tail_estimate);
}

TEST_CASE("closed forms agree with direct sums plus tail") {
  for (double v : {-0.5, -0.25, 0.0, 0.5, 1.0}) {
    const CriterionReport d = s2_direct(Order(v), 6);
    const CriterionReport c = s2_closed(Order(v));
    CHECK(std::fabs(d.sum_value + d.tail_estimate - c.sum_value) <= 2.0 * d.tail_estimate);
    CHECK(d.sum_value < c.sum_value);
  }
  for (double v : {-0.9, -0.5, 0.0, 2.0}) {
    const CriterionReport d = s1_direct(Order(v), 6);
    const CriterionReport c = s1_closed(Order(v));
    CHECK(std::fabs(d.sum_value + d.tail_estimate - c.sum_value) <= 2.0 * d.tail_estimate);
  }
}

TEST_CASE("direct sum preconditions") {
  CHECK_THROWS_AS(s1_direct(Order(0.0), 0), DomainError);
  CHECK_THROWS_AS(s2_direct(Order(0.0), 0), DomainError);
  CHECK_THROWS_AS(s1_direct(Order(-0.99), 3), FirstZeroInsideDiskError);
  CHECK_THROWS_AS(s2_direct(Order(-0.9), 3), FirstZeroInsideDiskError);
  CHECK(direct_tail_estimate(Order(0.0), 6) > direct_tail_estimate(Order(0.0), 12));
  CHECK(direct_tail_estimate(Order(0.0), 6) > 0.0);
}

TEST_CASE("closed sums below the first-zero order") {
  // gamma_{nu,1} < 1: the closed expression no longer equals the sum
  CHECK_FALSE(s1_closed(Order(-0.99)).satisfies_bound);
  CHECK_FALSE(s2_closed(Order(-0.9)).satisfies_bound);
  const double p1 = unit_first_zero_order(SumKind::Cross);
  const double p2 = unit_first_zero_order(SumKind::Product);
  CHECK(std::fabs(oracle::phi(p1, 1.0)) < 1e-12);
  CHECK(std::fabs(oracle::j(p2, 1.0)) < 1e-12);
  CHECK(std::fabs(p1 + 0.970175) < 1e-6);
  CHECK(std::fabs(p2 + 0.774565) < 1e-6);
  CHECK_THROWS_AS(s1_closed(Order(p1)), PoleError);
  CHECK_THROWS_AS(s2_closed(Order(p2)), PoleError);
}

TEST_CASE("threshold residuals") {
  CHECK(theorem1_residual(Order(1.0)) ==
        doctest::Approx(-std::cyl_bessel_j(1.0, 1.0) * std::cyl_bessel_i(1.0, 1.0)).epsilon(1e-13));
  CHECK(std::fabs(theorem1_residual(Order(1.0)) + 0.24872) < 5e-5);
  const double r2 = oracle::j_three_half(1.0) * oracle::i_half(1.0) -
                    oracle::j_half(1.0) * oracle::i_three_half(1.0) -
                    1.5 * oracle::j_half(1.0) * oracle::i_half(1.0);
  CHECK(theorem2_residual(Order(0.5)) == doctest::Approx(r2).epsilon(1e-13));
  CHECK(std::fabs(theorem2_residual(Order(0.5)) + 0.9161) < 5e-5);
  CHECK(equation_residual(EquationId::Th1Paper, Order(0.2)) == theorem1_residual(Order(0.2)));
  CHECK(equation_residual(EquationId::Th2Sum, Order(0.5)) ==
        doctest::Approx(s2_closed(Order(0.5)).sum_value - 1.0));
}

TEST_CASE("threshold solving") {
  const ThresholdResult t1 = solve_threshold(EquationId::Th1Paper, {-0.99, -0.5});
  CHECK(std::fabs(t1.root + 0.9427) < 5e-3);
  CHECK(std::fabs(theorem1_residual(Order(t1.root))) < 1e-10);
  CHECK(t1.iterations > 0);
  // independent bisection on the long-double series residual
  auto th1 = [](double v) {
    return (v - 1) * (oracle::j(v, 1) * oracle::i(v + 1, 1) + oracle::j(v + 1, 1) * oracle::i(v, 1)) -
           oracle::j(v, 1) * oracle::i(v, 1);
  };
  CHECK(std::fabs(t1.root - oracle::bisect(th1, -0.99, -0.5, 1e-13)) < 1e-9);

  const ThresholdResult s1 = solve_threshold(EquationId::Th1Sum, {-0.99, -0.5});
  CHECK(std::fabs(s1.root - t1.root) < 1e-8);
  CHECK(s1.bracket.lo > unit_first_zero_order(SumKind::Cross));
  const double tight = solve_threshold(EquationId::Th1Paper, {-0.99, -0.5}, 1e-14).root;
  CHECK(std::fabs(s1_closed(Order(tight)).sum_value - 1.0) < 1e-10);

  const ThresholdResult t2 = solve_threshold(EquationId::Th2Paper, {-0.9, 0.2});
  CHECK(std::fabs(t2.root + 0.4336) < 5e-3);
  const ThresholdResult s2 = solve_threshold(EquationId::Th2Sum, {-0.9, 0.2});
  CHECK(std::fabs(s2_closed(Order(s2.root)).sum_value - 1.0) < 1e-9);

  CHECK_THROWS_AS(solve_threshold(EquationId::Th1Paper, {0.0, 1.0}), NoSignChangeError);
  CHECK_THROWS_AS(solve_threshold(EquationId::Th1Paper, {-0.5, -0.99}), DomainError);
  CHECK_THROWS_AS(solve_threshold(EquationId::Th1Paper, {-1.0, -0.5}), DomainError);
  CHECK_THROWS_AS(solve_threshold(EquationId::Th1Paper, {-0.99, -0.5}, 0.0), DomainError);
  CHECK_THROWS_AS(solve_threshold(EquationId::Th1Sum, {-0.999, -0.98}), DomainError);
}

TEST_CASE("threshold comparison report") {
  const Th2Comparison c = compare_th2();
  CHECK(c.paper.equation_id == EquationId::Th2Paper);
  CHECK(c.sum.equation_id == EquationId::Th2Sum);
  CHECK(c.root_difference == doctest::Approx(c.paper.root - c.sum.root));
  CHECK(c.s2_at_paper_root == doctest::Approx(s2_closed(Order(c.paper.root)).sum_value));
  const nlohmann::json j = to_json(c);
  CHECK(j.contains("note"));
  CHECK(j.at("th2_paper").at("root") == c.paper.root);
}

TEST_CASE("starlikeness sampling") {
  const StarlikeResult p = starlike_min_re(SumKind::Product, Order(0.5));
  CHECK(p.passes);
  CHECK(p.min_re > 0.0);
  const double root = solve_threshold(EquationId::Th1Sum, {-0.99, -0.5}).root;
  const StarlikeResult c = starlike_min_re(SumKind::Cross, Order(root));
  CHECK(c.min_re >= kStarlikeFloor);
  CHECK_FALSE(c.denominator_underflow);
  // the smallest circle is close to the t -> 0 value 1
  DiskGrid tiny{1, 64, 1e-3, 1e-3};
  CHECK(std::fabs(starlike_min_re(SumKind::Cross, Order(0.0), tiny).min_re - 1.0) < 1e-3);
  // below the threshold the boundary value goes negative
  const StarlikeResult below = starlike_min_re(SumKind::Cross, Order(-0.969));
  CHECK_FALSE(below.passes);
  DiskGrid bad{0, 10, 0.9, 0.1};
  CHECK_THROWS_AS(bad.validate(), DomainError);
  DiskGrid outside{4, 4, 1.0, 0.1};
  CHECK_THROWS_AS(outside.validate(), DomainError);
  DiskGrid g;
  CHECK(g.radius(0) == doctest::Approx(1e-3));
  CHECK(g.radius(63) == doctest::Approx(0.999));
}

TEST_CASE("report JSON keys") {
  const nlohmann::json r = to_json(s2_closed(Order(0.5)));
  for (const char* k : {"nu", "which", "method", "sum", "zeros_used", "tail", "satisfies_bound"}) {
    CHECK(r.contains(k));
  }
  const nlohmann::json t = to_json(solve_threshold(EquationId::Th1Paper, {-0.99, -0.5}));
  CHECK(t.at("bracket").size() == 2);
}
