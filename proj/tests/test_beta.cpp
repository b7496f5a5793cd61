#include <doctest.h>

#include "tsj/beta.hpp"

#include <cmath>

using namespace tsj;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_CASE("base values of the shifted beta integral") {
    CHECK(beta_value(rat(0), rat(0), 0, 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(beta_value(rat(-1, 2), rat(-1, 2), 0, 0) == doctest::Approx(kPi).epsilon(1e-12));
    // Integral_0^1 x^(-1/2) dx = 2
    CHECK(beta_value(rat(-1, 2), rat(0), 0, 0) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("first derivatives against closed forms and high-precision references") {
    // d/da Integral x^a dx at a = -1/2 is -1/(a+1)^2 = -4 exactly
    CHECK(beta_value(rat(-1, 2), rat(0), 1, 0) == doctest::Approx(-4.0).epsilon(1e-11));
    CHECK(beta_value(rat(-1, 2), rat(0), 2, 0) == doctest::Approx(16.0).epsilon(1e-11));
    // reference values computed with 40-digit arithmetic
    CHECK(beta_value(rat(-1, 2), rat(-1, 3), 0, 0) ==
          doctest::Approx(2.587109559229790535).epsilon(1e-12));
    CHECK(beta_value(rat(-1, 2), rat(-1, 3), 1, 0) ==
          doctest::Approx(-4.2205653139249737463).epsilon(1e-12));
    CHECK(beta_value(rat(-1, 2), rat(-1, 3), 1, 1) ==
          doctest::Approx(0.75079079671779730329).epsilon(1e-11));
    CHECK(beta_value(rat(-5, 6), rat(-5, 6), 2, 2) ==
          doctest::Approx(0.57423593017086774482).epsilon(1e-10));
}

TEST_CASE("series route vs quadrature route") {
    const long denominators[] = {1, 2, 3, 6};
    for (long qa : denominators) {
        for (long qb : denominators) {
            Rational a = qa == 1 ? rat(0) : rat(-1, qa);
            Rational b = qb == 1 ? rat(0) : rat(-1, qb);
            for (int i = 0; i <= 2; ++i)
                for (int j = 0; j <= 2; ++j) {
                    double s = beta_value(a, b, i, j);
                    double q = beta_value_quadrature(a, b, i, j);
                    CHECK(std::fabs(s - q) <= 1e-9 * std::max(1.0, std::fabs(q)));
                }
        }
    }
}

TEST_CASE("twist operator on trivial blocks") {
    BetaTwist t = beta_twist_operator(EigExp(rat(0)), EigExp(rat(0)), 1, 1);
    REQUIRE(t.dim() == 1);
    CHECK(t.at(0, 0).real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(t.at(0, 0).imag() == 0.0);

    BetaTwist p = beta_twist_operator(EigExp(rat(-1, 2)), EigExp(rat(-1, 2)), 1, 1);
    CHECK(p.at(0, 0).real() == doctest::Approx(kPi).epsilon(1e-12));
    CHECK(p.det_abs == doctest::Approx(kPi).epsilon(1e-12));
}

TEST_CASE("twist operator on a (2,1) block pair is lower triangular") {
    BetaTwist t = beta_twist_operator(EigExp(rat(-1, 2)), EigExp(rat(-1, 3)), 2, 1);
    REQUIRE(t.dim() == 2);
    double s = 1.0 / 6.0; // alpha + beta + 1
    double b00 = 2.587109559229790535;
    double b10 = -4.2205653139249737463;
    CHECK(t.at(0, 1).real() == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(t.at(0, 0).real() == doctest::Approx(s * b00).epsilon(1e-11));
    CHECK(t.at(1, 1).real() == doctest::Approx(s * b00).epsilon(1e-11));
    // off-diagonal: -B(alpha,beta) - s * B^{1,0}
    CHECK(t.at(1, 0).real() == doctest::Approx(-b00 - s * b10).epsilon(1e-10));
}

TEST_CASE("twist operator commutes with the tensor nilpotent") {
    const Rational grid[] = {rat(0), rat(-1, 2), rat(-1, 3), rat(-5, 6)};
    for (const Rational& a : grid)
        for (const Rational& b : grid)
            for (long n1 = 1; n1 <= 3; ++n1)
                for (long n2 = 1; n2 <= 3; ++n2) {
                    BetaTwist t = beta_twist_operator(EigExp(a), EigExp(b), n1, n2);
                    CHECK(beta_twist_commutator_norm(t) < 1e-10);
                    CHECK(t.det_abs > 1e-8);
                }
}

TEST_CASE("derivative orders must be admissible") {
    CHECK_THROWS_AS(beta_value(rat(0), rat(0), -1, 0), std::invalid_argument);
    CHECK_THROWS_AS(beta_twist_operator(EigExp(rat(0)), EigExp(rat(0)), 0, 1),
                    std::invalid_argument);
}
