#include <catch2/catch_amalgamated.hpp>

#include "cyclecount/closed_forms.hpp"
#include "cyclecount/engine.hpp"
#include "cyclecount/graph.hpp"

using namespace cyclecount;

TEST_CASE("path closed form") {
  CHECK(path_coefficient(5, 3, 2) == 1);
  CHECK(path_coefficient(5, 4, 2) == 3);
  CHECK(path_polynomial(5, 2) == Polynomial{0, 0, 0, 1, 3, 1});
  CHECK(path_total_claim(5, 2) == 3);       // as printed (refuted elsewhere)
  CHECK(path_total_corrected(5, 2) == 5);
  CHECK_THROWS_AS(path_coefficient(5, 3, 0), parameter_error);
}

TEST_CASE("cycle closed forms") {
  CHECK(cycle_coefficient_unrestricted(4, 1) == 2);
  CHECK(cycle_coefficient_unrestricted(4, 2) == 2);
  CHECK(cycle_coefficient_unrestricted(4, 3) == 4);
  CHECK(cycle_coefficient(4, 2, 2) == 1);  // binom(2,2)
  CHECK(cycle_coefficient(4, 2, 1) == 2);  // dispatches to unrestricted
  CHECK(cycle_r_total_claim(4, 2) == fib(5));
  CHECK(consecutive_cycle_fib_polynomial(6, 2) == Polynomial{0, 0, 0, 0, 3, 4, 1});
  CHECK(cycle_lucas_polynomial(7, 2, LucasVariant::matching) ==
        cycle_matching(5).shifted(1));
  CHECK_THROWS_AS(cycle_coefficient_unrestricted(2, 1), parameter_error);
}

TEST_CASE("complete graph closed forms") {
  CHECK(complete_coefficient(4, 3, 1) == 6);
  CHECK(complete_coefficient(4, 2, 1) == 11);
  CHECK(complete_total(5, 2) == 60);
  CHECK(complete_polynomial(4, 2) == Polynomial{0, 0, 6, 5, 1});  // x^2(x+2)(x+3)
}

TEST_CASE("broder recurrence table") {
  const auto t1 = broder_recurrence_table(8, 1);
  CHECK(t1[4][2] == 11);
  CHECK(t1[1][1] == 1);
  const auto t2 = broder_recurrence_table(8, 2);
  CHECK(t2[2][2] == 1);
  CHECK(t2[4][3] == 5);
  for (int r = 0; r <= 3; ++r) {
    const auto t = broder_recurrence_table(12, r);
    for (int n = r; n <= 12; ++n) {
      const auto rf = rising_factorial(r, n);
      for (int k = 0; k <= n; ++k)
        REQUIRE(t[static_cast<size_t>(n)][static_cast<size_t>(k)] == rf.coeff(k));
    }
  }
}

TEST_CASE("path complement products") {
  CHECK(pnc_polynomial(3, 1, PncBound::proof) == Polynomial{0, 0, 1, 1});  // x^3 + x^2
  CHECK(pnc_polynomial(3, 1, PncBound::statement) == Polynomial{0, 0, 1});
  CHECK(pnc_polynomial(1, 1, PncBound::proof) == Polynomial{0, 1});  // empty product
  CHECK(pnc_polynomial(4, 1, PncBound::proof) == Polynomial{0, 0, 2, 3, 1});
}

TEST_CASE("star closed forms") {
  CHECK(star_polynomial(4) == Polynomial{0, 0, 0, 3, 1});
  CHECK(star_r_polynomial(4, 1) == Polynomial{0, 0, 0, 0, 4, 1});
  CHECK(star_r_coefficient(4, 4, 1) == 4);
  CHECK(star_total_claim(4, 1) == 5);
}

TEST_CASE("wheel and fan printed formulas (frozen transcription values)") {
  // These freeze the formula transcription, not ground truth; the registry
  // compares them against the engine.
  CHECK(wheel_coefficient(3, 2, 1) == 16);
  CHECK(wheel_total_claim(3, 1) == fib(5) + fib(4) + 4 * fib(3) + 3 * (fib(3) - 1));
  CHECK(fan_coefficient(1, 1, 1) == 2);
  CHECK(fan_total_claim(3, 1) == fib(4) + fib(3) + 4 * fib(2) + 3 * (fib(2) - 1));
}

TEST_CASE("bridge composite closed forms") {
  CHECK(tadpole_polynomial(3, 1, LucasVariant::full) == Polynomial{0, 0, 3, 4, 1});
  CHECK(tadpole_polynomial(3, 1, LucasVariant::matching) == Polynomial{0, 0, 1, 4, 1});
  CHECK(barbell_polynomial(2) == Polynomial{0, 0, 1, 3, 1});
  CHECK(lollipop_polynomial(3, 1) == Polynomial{0, 0, 3, 4, 1});
  // lollipop(3,1) and tadpole(3,1) are the same graph
  CHECK(lollipop_polynomial(3, 1) == tadpole_polynomial(3, 1, LucasVariant::full));
  CHECK(barbell_polynomial(2) == cycle_polynomial(make_family({Family::barbell, 2})));
}

TEST_CASE("double star printed polynomial") {
  CHECK(double_star_polynomial_claim(2, 2, 1, 1) == Polynomial{0, 0, 1, 3, 1});
  CHECK_THROWS_AS(double_star_polynomial_claim(1, 2, 0, 0), parameter_error);
}
