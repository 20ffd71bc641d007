#include <doctest.h>

#include <cmath>
#include <numbers>

#include "crowns/analysis.hpp"
#include "crowns/curve.hpp"
#include "crowns/errors.hpp"

using namespace crowns;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("zero pairs match the reference table") {
  struct Row {
    int n;
    double z1, z2;
  };
  // n = 1000 frozen from an independent long-double bisection of F (the
  // published table's 1000-row actually holds the n = 1001 pair).
  const Row rows[] = {
      {3, 0.413887932417, 1.619789608802},  {4, 0.697380509876, 1.602408486212},
      {10, 0.963459881269, 1.554123467683}, {100, 0.999674025507, 1.352557858581},
      {1000, 0.999996747797233, 1.256714087412766},
  };
  for (const Row& row : rows) {
    const ZeroPair zp = zeros_of_f(row.n);
    CHECK(std::fabs(zp.z1 - row.z1) < 1e-9);
    CHECK(std::fabs(zp.z2 - row.z2) < 1e-9);
    CHECK(zp.conjecture_verified);
    CHECK(!zp.analytic);
    CHECK(zp.z1 < 1.0);
    CHECK(zp.z2 > 1.0);
  }
}

TEST_CASE("n = 2 zero pair is the analytic segment window") {
  const ZeroPair zp = zeros_of_f(2);
  CHECK(zp.analytic);
  CHECK(zp.z1 == doctest::Approx(0.5773502692).epsilon(1e-10));
  CHECK(zp.z2 == doctest::Approx(1.7320508076).epsilon(1e-10));
  CHECK_THROWS_AS(zeros_of_f(1), DomainError);
}

TEST_CASE("zero-pair side conditions") {
  const ZeroPair z3 = zeros_of_f(3);
  CHECK(z3.z1 > 3.0 / 8.0);
  CHECK(z3.z1 < 7.0 / 16.0);
  CHECK(z3.z2 > 25.0 / 16.0);
  CHECK(z3.z2 < 13.0 / 8.0);
  CHECK(z3.z1 * z3.z2 < 1.0);
  for (int n : {4, 5, 9, 40}) {
    const ZeroPair zp = zeros_of_f(n);
    CHECK(zp.z1 * zp.z2 > 1.0);
    if (n >= 5) {
      CHECK(zp.z1 > 1.0 - 1.0 / n);
      CHECK(zp.z2 > double(n) / (n - 1));
    }
  }
}

TEST_CASE("admissible sets") {
  {
    const IntervalUnion a2 = admissible_set(2);
    REQUIRE(a2.size() == 1);
    CHECK(a2.parts()[0].lo == doctest::Approx(0.5773502692).epsilon(1e-10));
    CHECK(a2.parts()[0].hi == doctest::Approx(1.7320508076).epsilon(1e-10));
  }
  {
    const IntervalUnion a3 = admissible_set(3);
    REQUIRE(a3.size() == 3);
    CHECK(a3.parts()[0].lo == 0.0);
    CHECK(std::fabs(a3.parts()[0].hi - 0.413887932417) < 1e-9);
    CHECK(std::fabs(a3.parts()[1].lo - 0.617364128382) < 1e-9);
    CHECK(std::fabs(a3.parts()[1].hi - 1.619789608802) < 1e-9);
    CHECK(std::fabs(a3.parts()[2].lo - 2.416113) < 1e-6);
    CHECK(a3.parts()[2].unbounded());
  }
  {
    const Interval c4 = central_admissible_interval(4);
    CHECK(std::fabs(c4.lo - 0.697380509876) < 1e-9);
    CHECK(std::fabs(c4.hi - 1.433937406966) < 1e-9);
  }
}

TEST_CASE("admissible set is invariant under a -> 1/a") {
  for (int n : {2, 3, 4, 7}) {
    const IntervalUnion adm = admissible_set(n);
    const IntervalUnion rec = adm.reciprocal();
    REQUIRE(rec.size() == adm.size());
    for (std::size_t i = 0; i < adm.size(); ++i) {
      CHECK(rec.parts()[i].lo == doctest::Approx(adm.parts()[i].lo).epsilon(1e-12));
      if (!adm.parts()[i].unbounded()) {
        CHECK(rec.parts()[i].hi == doctest::Approx(adm.parts()[i].hi).epsilon(1e-12));
      } else {
        CHECK(rec.parts()[i].unbounded());
      }
    }
  }
}

TEST_CASE("bifurcation data for n = 3") {
  const BifurcationData bif = bifurcation_n3();
  CHECK(std::fabs(bif.m_star - 1.0007682) < 1e-6);
  CHECK(std::fabs(bif.m_star_star - 35.70017694) < 1e-6);
  CHECK(bif.a_star > 1.0);
  CHECK(bif.a_star < 25.0 / 16.0);
  CHECK(bif.a_star_star > 3.0);
  CHECK(bif.m_star < bif.m_star_star);
}

TEST_CASE("solve: n = 3 count regimes") {
  {
    const SolutionSet s = solve_for_mass(3, 10.0);
    REQUIRE(s.solutions.size() == 1);
    const ZeroPair zp = zeros_of_f(3);
    CHECK(s.solutions[0].a > 1.0 / zp.z2);
    CHECK(s.solutions[0].a < 1.0);
    CHECK(s.solutions[0].interval_label == "central");
  }
  {
    const SolutionSet s = solve_for_mass(3, 100.0);
    REQUIRE(s.solutions.size() == 3);
    CHECK(s.solutions[0].interval_label == "central");
    CHECK(s.solutions[1].interval_label == "outer");
    CHECK(s.solutions[2].interval_label == "outer");
    CHECK(s.solutions[0].a < 1.0);
  }
  {
    const SolutionSet s = solve_for_mass(3, 1.0004);
    CHECK(s.solutions.size() == 3);
    for (const Solution& sol : s.solutions) CHECK(sol.interval_label == "central");
  }
}

TEST_CASE("solve: equal masses and the reciprocal pair") {
  const SolutionSet s = solve_for_mass(4, 1.0);
  REQUIRE(s.solutions.size() == 3);
  CHECK(s.count_deduplicated == 2);
  CHECK(std::fabs(s.solutions[1].a - 1.0) < 1e-12);
  CHECK(std::fabs(s.solutions[0].a * s.solutions[2].a - 1.0) < 1e-10);
  const double a1 = equal_mass_radius(4);
  CHECK(std::fabs(s.solutions[2].a - a1) < 1e-10);
}

TEST_CASE("solve: one solution per admissible component for n >= 4") {
  const SolutionSet s = solve_for_mass(5, 2.0);
  REQUIRE(s.solutions.size() >= 3);
  CHECK(s.solutions.front().interval_label == "inner");
  CHECK(s.solutions.back().interval_label == "outer");
  bool has_central = false;
  for (const Solution& sol : s.solutions) has_central |= sol.interval_label == "central";
  CHECK(has_central);
}

TEST_CASE("solve validates every solution") {
  for (const Solution& sol : solve_for_mass(6, 3.5).solutions) {
    CHECK(sol.residual <= 1e-9);
    CHECK(std::fabs(h_of_a(6, sol.a) - 3.5) <= 1e-10 * 3.5);
  }
}

TEST_CASE("solve: m < 1 reduces through the reciprocal map") {
  const SolutionSet big = solve_for_mass(3, 10.0);
  const SolutionSet small = solve_for_mass(3, 0.1);
  REQUIRE(small.solutions.size() == big.solutions.size());
  for (std::size_t i = 0; i < small.solutions.size(); ++i) {
    const double mapped = 1.0 / big.solutions[big.solutions.size() - 1 - i].a;
    CHECK(small.solutions[i].a == doctest::Approx(mapped).epsilon(1e-12));
  }
  CHECK(small.mass_ratio == 0.1);
}

TEST_CASE("count_configurations: n = 3 clauses") {
  const BifurcationData bif = bifurcation_n3();
  CHECK(count_configurations(3, 1.0004).count == 3);
  CHECK(count_configurations(3, 10.0).count == 1);
  CHECK(count_configurations(3, 100.0).count == 3);

  const CountResult at_star = count_configurations(3, bif.m_star);
  CHECK(at_star.count == 2);
  CHECK(at_star.boundary);
  const CountResult at_star2 = count_configurations(3, bif.m_star_star);
  CHECK(at_star2.count == 2);
  CHECK(at_star2.boundary);
  const CountResult at_one = count_configurations(3, 1.0);
  CHECK(at_one.count == 2);
  CHECK(at_one.boundary);

  // Just off the bifurcation mass the exact counts reappear.
  CHECK(count_configurations(3, bif.m_star - 1e-7).count == 3);
  CHECK(count_configurations(3, bif.m_star + 1e-7).count == 1);
  CHECK(count_configurations(3, bif.m_star_star - 1e-7).count == 1);
  CHECK(count_configurations(3, bif.m_star_star + 1e-7).count == 3);
}

TEST_CASE("count_configurations: n = 2 and reductions") {
  CHECK(count_configurations(2, 1.7).count == 1);
  CHECK(count_configurations(2, 400.0).count == 1);
  const CountResult reduced = count_configurations(3, 0.1);
  CHECK(reduced.count == count_configurations(3, 10.0).count);
  CHECK(reduced.clause.find("reduced") != std::string::npos);
}

TEST_CASE("count_configurations: n >= 4") {
  CHECK(count_configurations(4, 1.0).count == 2);
  CHECK(count_configurations(6, 1.0).count == 2);
  CHECK(count_configurations(5, 2.0).count >= 3);
  CHECK(count_configurations(7, 33.0).count >= 3);
}

TEST_CASE("equal-mass radius") {
  for (int n : {4, 6}) {
    const double a1 = equal_mass_radius(n);
    CHECK(a1 > 1.0);
    CHECK(std::fabs(h_of_a(n, a1) - 1.0) < 1e-10);
    CHECK(std::fabs(h_of_a(n, 1.0 / a1) - 1.0) < 1e-9);
  }
  CHECK_THROWS_AS(equal_mass_radius(3), DomainError);
}

TEST_CASE("convexity window and membership") {
  const Interval w3 = convexity_window(3);
  CHECK(w3.lo == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(w3.hi == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(!is_convex(4, 1.42));  // 1.42 > 1/cos(pi/4)
  for (int n : {3, 4, 9, 50}) CHECK(is_convex(n, 1.0));
  CHECK_THROWS_AS(convexity_window(2), DomainError);
}

TEST_CASE("convexity classification") {
  {
    const ConvexityReport r = classify_convex(4, 20.0);
    CHECK(std::fabs(r.m_bar - 16.05679941) < 1e-6);
    CHECK(r.convex_count == 0);  // 20 > m_bar
  }
  {
    const ConvexityReport r = classify_convex(4, 16.2);
    CHECK(r.convex_count == 0);
  }
  {
    const ConvexityReport r = classify_convex(4, 2.0);
    CHECK(r.convex_count == 1);
  }
  {
    const ConvexityReport r = classify_convex(3, 1.0);
    CHECK(r.convex_count == 3);
    CHECK(r.solutions.count_deduplicated == 2);
  }
  {
    const ConvexityReport r = classify_convex(7, 2.5);
    CHECK(r.delta_n > 0.0);
    // central-interval solutions are exactly the convex ones
    const Interval central = central_admissible_interval(7);
    for (const Solution& s : r.solutions.solutions) {
      CHECK(s.convex == central.contains(s.a));
    }
  }
}

TEST_CASE("delta_n positivity") {
  CHECK(delta_n(5) == doctest::Approx(0.822182869908 - std::cos(kPi / 5)).epsilon(1e-9));
  CHECK(delta_n(5) > 0.0);
  CHECK(delta_n(100) > 0.0);
  CHECK_THROWS_AS(delta_n(4), DomainError);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(solve_for_mass(3, 0.0), DomainError);
  CHECK_THROWS_AS(solve_for_mass(3, -2.0), DomainError);
  CHECK_THROWS_AS(solve_for_mass(1, 1.0), DomainError);
  CHECK_THROWS_AS(count_configurations(4, 0.0), DomainError);
}
