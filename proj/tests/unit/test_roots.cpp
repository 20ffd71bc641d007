#include <doctest.h>

#include <cmath>
#include <vector>

#include "crowns/curve.hpp"
#include "crowns/errors.hpp"
#include "crowns/roots.hpp"

using namespace crowns;

TEST_CASE("scan finds the single sign change of a linear function") {
  // 101 log-spaced points over [0.5, 2] land exactly on the root at 1, which
  // must come back as a zero-width bracket rather than two sign changes.
  const auto exact = scan_brackets([](double a) { return a - 1.0; }, 0.5, 2.0, 101);
  REQUIRE(exact.size() == 1);
  CHECK(exact[0].lo <= 1.0);
  CHECK(exact[0].hi >= 1.0);

  const auto brs = scan_brackets([](double a) { return a - 1.0; }, 0.5, 2.0, 100);
  REQUIRE(brs.size() == 1);
  CHECK(brs[0].lo < 1.0);
  CHECK(brs[0].hi > 1.0);
}

TEST_CASE("scan finds exactly two sign changes of F") {
  for (int n : {3, 10}) {
    const TwistedCurve& cv = curve_for(n);
    const auto brs = scan_brackets([&cv](double a) { return cv.f(a); }, 1e-3, 1e3, 20000);
    REQUIRE(brs.size() == 2);
    if (n == 3) {
      CHECK(brs[0].lo < 0.413887932417);
      CHECK(brs[0].hi > 0.413887932417);
      CHECK(brs[1].lo < 1.619789608802);
      CHECK(brs[1].hi > 1.619789608802);
    } else {
      CHECK(brs[0].lo < 0.963459881269);
      CHECK(brs[0].hi > 0.963459881269);
      CHECK(brs[1].lo < 1.554123467683);
      CHECK(brs[1].hi > 1.554123467683);
    }
  }
}

TEST_CASE("refine: sqrt(2) to 1e-14") {
  auto fn = [](double a) { return a * a - 2.0; };
  const Root r = refine(make_bracket(fn, 1.0, 2.0), fn);
  CHECK(std::fabs(r.value - std::sqrt(2.0)) < 1e-14);
  CHECK(r.bracket.hi - r.bracket.lo < 1e-13);
  CHECK(r.iterations > 0);
}

TEST_CASE("refine reproduces the n = 3 and n = 5000 zeros from analytic brackets") {
  {
    const TwistedCurve& cv = curve_for(3);
    auto fn = [&cv](double a) { return cv.f(a); };
    const Root r = refine(make_bracket(fn, 3.0 / 8.0, 7.0 / 16.0), fn);
    CHECK(std::fabs(r.value - 0.413887932417) < 1e-9);
  }
  {
    const TwistedCurve& cv = curve_for(5000);
    auto fn = [&cv](double a) { return cv.f(a); };
    const Root r = refine(make_bracket(fn, 1.0 - 1.0 / 5000.0, 1.0), fn);
    CHECK(std::fabs(r.value - 0.999999869916) < 1e-9);
  }
}

TEST_CASE("refine never evaluates outside the bracket") {
  std::vector<double> evals;
  auto fn = [&evals](double a) {
    evals.push_back(a);
    return std::cos(a) - a;  // root near 0.739
  };
  const Bracket br = make_bracket(fn, 0.1, 1.5);
  const Root r = refine(br, fn);
  for (double x : evals) {
    CHECK(x >= 0.1);
    CHECK(x <= 1.5);
  }
  CHECK(r.value == doctest::Approx(0.7390851332151607).epsilon(1e-13));
  // the root stays inside its final (sign-changing) bracket
  CHECK(r.bracket.lo <= r.value);
  CHECK(r.bracket.hi >= r.value);
  CHECK(r.bracket.f_lo * r.bracket.f_hi <= 0.0);
}

TEST_CASE("a grid point landing exactly on a zero yields a zero-width root") {
  // Replicate the scan's own grid formula to pick an exact abscissa.
  const double lo = 0.5, hi = 2.0;
  const int steps = 7;
  const double x3 = lo * std::exp(std::log(hi / lo) / (steps - 1) * 3);
  auto fn = [x3](double a) { return a == x3 ? 0.0 : (a < x3 ? -1.0 : 1.0); };
  const auto brs = scan_brackets(fn, lo, hi, steps);
  REQUIRE(brs.size() == 1);
  CHECK(brs[0].exact());
  CHECK(brs[0].lo == x3);
  const Root r = refine(brs[0], fn);
  CHECK(r.value == x3);
  CHECK(r.residual == 0.0);
}

TEST_CASE("exclusion zones break the sign chain") {
  auto fn = [](double a) { return 1.0 / (a - 1.0); };  // pole, no root
  const auto naive = scan_brackets(fn, 0.5, 2.0, 400);
  CHECK(naive.size() == 1);  // the pole masquerades as a sign change
  IntervalUnion excl;
  excl.add({0.95, 1.05});
  const auto guarded = scan_brackets(fn, 0.5, 2.0, 400, excl);
  CHECK(guarded.empty());
}

TEST_CASE("reflected grid: brackets of G are the reciprocals of brackets of F") {
  const TwistedCurve& cv = curve_for(6);
  // Grid symmetric under a -> 1/a (lo * hi = 1), so the two scans sample
  // reciprocal point sets.
  const auto brf = scan_brackets([&cv](double a) { return cv.f(a); }, 1e-3, 1e3, 4001);
  const auto brg = scan_brackets([&cv](double a) { return cv.g(a); }, 1e-3, 1e3, 4001);
  REQUIRE(brf.size() == 2);
  REQUIRE(brg.size() == 2);
  CHECK(brg[0].lo == doctest::Approx(1.0 / brf[1].hi).epsilon(1e-9));
  CHECK(brg[0].hi == doctest::Approx(1.0 / brf[1].lo).epsilon(1e-9));
  CHECK(brg[1].lo == doctest::Approx(1.0 / brf[0].hi).epsilon(1e-9));
  CHECK(brg[1].hi == doctest::Approx(1.0 / brf[0].lo).epsilon(1e-9));
}

TEST_CASE("expand_upward brackets z2 from its analytic lower bound") {
  const TwistedCurve& cv = curve_for(5);
  auto fn = [&cv](double a) { return cv.f(a); };
  const Bracket br = expand_upward(fn, 5.0 / 4.0, 1e6);
  CHECK(br.lo < 1.597921728909);
  CHECK(br.hi > 1.597921728909);
  const Root r = refine(br, fn);
  CHECK(std::fabs(r.value - 1.597921728909) < 1e-9);
}

TEST_CASE("scan argument validation") {
  auto fn = [](double a) { return a; };
  CHECK_THROWS_AS(scan_brackets(fn, -1.0, 2.0, 10), DomainError);
  CHECK_THROWS_AS(scan_brackets(fn, 2.0, 1.0, 10), DomainError);
  CHECK_THROWS_AS(scan_brackets(fn, 1.0, 2.0, 1), DomainError);
  CHECK_THROWS_AS(refine(Bracket{1.0, 2.0, 1.0, 2.0}, fn), DomainError);
}

TEST_CASE("evaluation failures carry the offending abscissa") {
  auto fn = [](double a) -> double {
    if (a > 1.0) throw std::runtime_error("boom");
    return a - 0.9;
  };
  try {
    scan_brackets(fn, 0.5, 2.0, 50);
    FAIL("expected EvalError");
  } catch (const EvalError& e) {
    CHECK(e.abscissa > 1.0);
  }
}
