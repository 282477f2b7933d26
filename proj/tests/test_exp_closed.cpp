#include <doctest.h>

#include <cmath>
#include <random>

#include "cl3exp/error.hpp"
#include "cl3exp/exp_closed.hpp"
#include "cl3exp/exp_series.hpp"
#include "cl3exp/expression.hpp"
#include "cl3exp/golden.hpp"
#include "support.hpp"

using namespace cl3;
using cl3::testing::one;
using cl3::testing::random_mv;
using cl3::testing::random_on;

namespace {

const char* kExample1 = "-8 - 6*e2 - 9*e3 + 5*e12 - 5*e13 + 6*e23 - 4*e123";

double rel_err(const Multivector& got, const Multivector& want) {
  return max_abs_diff(got, want) / std::max(1.0, max_abs(want));
}

// e^{a0}(cos a123 + I sin a123) for I^2 = -1, e^{a0}(cosh a123 + I sinh a123) for I^2 = +1.
Multivector centre_factor(Signature sig, double a0, double a123) {
  const Multivector i = Multivector::pseudoscalar(sig);
  if (sig.pseudoscalar_square() < 0) return std::exp(a0) * (std::cos(a123) + std::sin(a123) * i);
  return std::exp(a0) * (std::cosh(a123) + std::sinh(a123) * i);
}

}  // namespace

TEST_SUITE("exp-closed") {
  TEST_CASE("sico cases") {
    SiCo s = sico(25.0);
    CHECK(s.co == doctest::Approx(std::cos(5.0)).epsilon(1e-15));
    CHECK(s.si == doctest::Approx(std::sin(5.0) / 5.0).epsilon(1e-15));
    s = sico(0.0);
    CHECK(s.co == 1.0);
    CHECK(s.si == 1.0);
    s = sico(-11.0);
    CHECK(s.co == doctest::Approx(std::cosh(std::sqrt(11.0))).epsilon(1e-15));
    CHECK(s.si == doctest::Approx(std::sinh(std::sqrt(11.0)) / std::sqrt(11.0)).epsilon(1e-15));
  }

  TEST_CASE("sico is continuous across the series switch") {
    for (double x : {0.99e-8, -0.99e-8, 1.01e-8, -1.01e-8, 1e-12, -1e-12}) {
      const double r = std::sqrt(std::abs(x));
      const double co = x > 0 ? std::cos(r) : std::cosh(r);
      const double si = x > 0 ? std::sin(r) / r : std::sinh(r) / r;
      CHECK(std::abs(sico(x).co - co) < 1e-15);
      CHECK(std::abs(sico(x).si - si) < 1e-15);
    }
  }

  TEST_CASE("Cl(0,3) mixing: example and coordinate forms") {
    const Multivector a = parse_multivector(kExample1, Signature::cl03());
    const MixingScalars m = mixing_cl03(a);
    CHECK(m.a_minus_sq == doctest::Approx(53.0).epsilon(1e-14));
    CHECK(m.a_plus_sq == doctest::Approx(353.0).epsilon(1e-14));
    CHECK(*m.a_minus == doctest::Approx(std::sqrt(53.0)));
    CHECK(*m.a_plus == doctest::Approx(std::sqrt(353.0)));

    const Multivector vec = parse_multivector("1 + 2*e1 - e2 + 3*e3 + e123", Signature::cl03());
    const MixingScalars mv = mixing_cl03(vec);
    CHECK(*mv.a_plus == doctest::Approx(std::sqrt(14.0)));
    CHECK(*mv.a_minus == doctest::Approx(std::sqrt(14.0)));

    std::mt19937_64 rng(21);
    for (int n = 0; n < 1000; ++n) {
      const Multivector r = random_mv(Signature::cl03(), rng);
      const auto& c = r.coeffs();
      // (a3 + a12)^2 + (a2 - a13)^2 + (a1 + a23)^2 and its partner
      const double minus = std::pow(c[3] + c[4], 2) + std::pow(c[2] - c[5], 2) + std::pow(c[1] + c[6], 2);
      const double plus = std::pow(c[3] - c[4], 2) + std::pow(c[2] + c[5], 2) + std::pow(c[1] - c[6], 2);
      const MixingScalars mr = mixing_cl03(r);
      CHECK(std::abs(mr.a_minus_sq - minus) <= 1e-12 * std::max(1.0, minus));
      CHECK(std::abs(mr.a_plus_sq - plus) <= 1e-12 * std::max(1.0, plus));
    }
    CHECK_THROWS_AS(mixing_cl03(Multivector(Signature::cl30())), InvalidArgument);
  }

  TEST_CASE("Cl(3,0)/Cl(1,2) mixing") {
    const Multivector a = parse_multivector(kExample1, Signature::cl30());
    const MixingScalars m = mixing_cl30(a);
    const double root = std::sqrt(23461.0);
    CHECK(*m.a_minus == doctest::Approx(-75.0 * std::sqrt(2.0 / (31.0 + root))).epsilon(1e-14));
    CHECK(*m.a_plus == doctest::Approx(std::sqrt((31.0 + root) / 2.0)).epsilon(1e-14));
    CHECK(m.a_plus_sq + m.a_minus_sq == doctest::Approx(root).epsilon(1e-14));

    const MixingScalars m3 = mixing_cl30(parse_multivector("3 - e1 + 2*e12", Signature::cl12()));
    CHECK(*m3.a_plus == doctest::Approx(std::sqrt(5.0)));
    CHECK(*m3.a_minus == 0.0);

    const MixingScalars trig = mixing_cl30(parse_multivector("e12", Signature::cl30()));
    CHECK(*trig.a_plus == 0.0);
    CHECK(*trig.a_minus == 1.0);

    const MixingScalars zero = mixing_cl30(parse_multivector("2 + 3*e123", Signature::cl30()));
    CHECK(*zero.a_plus == 0.0);
    CHECK(*zero.a_minus == 0.0);

    // a+ a- = -I a^A and a+^2 - a-^2 = a.a + A.A on both branches of the
    // stable evaluation.
    std::mt19937_64 rng(22);
    for (Signature sig : {Signature::cl30(), Signature::cl12()}) {
      for (int n = 0; n < 1000; ++n) {
        const Multivector r = random_mv(sig, rng);
        const MixingScalars mr = mixing_cl30(r);
        const double s = quadratic_scalar(r, 1) + quadratic_scalar(r, 2);
        const double w = wedge_mix_scalar(r);
        CHECK(*mr.a_plus >= 0.0);
        CHECK(std::abs(*mr.a_plus * *mr.a_minus + w) <= 1e-12 * std::max(1.0, std::abs(w)));
        CHECK(std::abs(mr.a_plus_sq - mr.a_minus_sq - s) <= 1e-12 * std::max(1.0, mr.a_plus_sq + mr.a_minus_sq));
        const double root_d = std::sqrt(s * s - 4.0 * wedge_coefficient(r) * wedge_coefficient(r) * sig.pseudoscalar_square());
        CHECK(mr.a_plus_sq + mr.a_minus_sq == doctest::Approx(root_d).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("Cl(2,1) mixing from the examples") {
    struct Case {
      const char* expr;
      double minus_sq;
      double plus_sq;
    };
    for (const Case& c : {Case{kExample1, -141, 159}, Case{"-6*e2 + 5*e12 + e123", -11, -11},
                          Case{"2 + e3 + 6*e12 + 3*e123", 49, 25},
                          Case{"2 - 10*e2 - 10*e3 + 2*e13 + e23 + e123", 35, -45}}) {
      const MixingScalars m = mixing_cl21(parse_multivector(c.expr, Signature::cl21()));
      CHECK(m.a_minus_sq == c.minus_sq);
      CHECK(m.a_plus_sq == c.plus_sq);
      CHECK_FALSE(m.a_plus.has_value());
    }
  }

  TEST_CASE("worked examples match their frozen values") {
    for (const WorkedExample& ex : worked_examples()) {
      CAPTURE(ex.number);
      const Multivector got = exp_closed(parse_multivector(ex.expression, ex.sig));
      const Multivector want(ex.sig, ex.expected);
      for (std::size_t i = 0; i < kBladeCount; ++i) {
        CHECK(std::abs(got[i] - want[i]) <= 1e-12 * std::max(std::abs(want[i]), 1e-3 * max_abs(want)));
      }
    }
  }

  TEST_CASE("Example 3 closed form") {
    const Multivector got = exp_closed(parse_multivector("3 - e1 + 2*e12", Signature::cl12()));
    const double r = std::sqrt(5.0);
    const Multivector vb = parse_multivector("-e1 + 2*e12", Signature::cl12());
    CHECK(rel_err(got, std::exp(3.0) * (std::cosh(r) + vb * (std::sinh(r) / r))) < 1e-14);
  }

  TEST_CASE("Example 5 closed form") {
    const Signature sig = Signature::cl21();
    const Multivector i = Multivector::pseudoscalar(sig);
    const double r = std::sqrt(11.0);
    const Multivector vb = parse_multivector("-6*e2 + 5*e12", sig);
    const Multivector want = 0.5 * ((std::exp(1.0) * (1.0 + i) + std::exp(-1.0) * (1.0 - i)) *
                                    (std::cosh(r) + vb * (std::sinh(r) / r)));
    CHECK(rel_err(exp_closed(parse_multivector("-6*e2 + 5*e12 + e123", sig)), want) < 1e-14);
  }

  TEST_CASE("scalar and pseudoscalar inputs") {
    for (Signature sig : Signature::all()) {
      CHECK(exp_closed(Multivector(sig)) == one(sig));
      CHECK(exp_closed(Multivector::scalar(sig, 1.5)).scalar_part() == doctest::Approx(std::exp(1.5)).epsilon(1e-15));
      const Multivector a = Multivector::scalar(sig, 0.3) + Multivector::pseudoscalar(sig, -1.2);
      CHECK(rel_err(exp_closed(a), centre_factor(sig, 0.3, -1.2)) < 1e-15);
    }
  }

  TEST_CASE("branch errors") {
    CHECK_THROWS_AS(exp_cl03(Multivector(Signature::cl21())), InvalidArgument);
    CHECK_THROWS_AS(exp_cl21(Multivector(Signature::cl03())), InvalidArgument);
    CHECK_THROWS_AS(exp_cl30_cl12(Multivector(Signature::cl03())), InvalidArgument);
    CHECK_THROWS_AS(mixing_cl21(Multivector(Signature::cl30())), InvalidArgument);
    Coefficients c{};
    c[0] = std::nan("");
    CHECK_THROWS_AS(exp_closed(make_unchecked(Signature::cl03(), c)), InvalidArgument);
    CHECK_THROWS_AS(exp_closed(Multivector::scalar(Signature::cl30(), 800.0)), InvalidArgument);
  }

  TEST_CASE("nilpotent vector+bivector") {
    // (e1 + e12)^2 = 0 in Cl(3,0)
    const Multivector n = parse_multivector("e1 + e12", Signature::cl30());
    CHECK(max_abs(n * n) == 0.0);
    const Multivector got = exp_closed(n);
    CHECK(got == one(n.sig()) + n);
    CHECK(max_abs_diff(got, exp_series_scaled(n)) < 1e-15);

    const Multivector shifted = exp_closed(n + 0.5 + Multivector::pseudoscalar(n.sig(), 0.7));
    CHECK(rel_err(shifted, centre_factor(n.sig(), 0.5, 0.7) * (1.0 + n)) < 1e-15);
    const ExpReport r = exp_closed_report(n);
    CHECK(r.branches[0] == Branch::Limit);
    CHECK(r.branches[1] == Branch::Limit);
  }

  TEST_CASE("continuity across the nilpotent switch") {
    // e1 + (1 + d) e12 has (a+A)^2 = 1 - (1 + d)^2, tiny for tiny d.
    const Signature sig = Signature::cl30();
    for (double d : {1e-14, 1e-13, 1e-12, 1e-11, 1e-10, 1e-8, 1e-6}) {
      const Multivector a = parse_multivector("e1", sig) + Multivector::blade(sig, Blade::E12, 1.0 + d);
      CHECK(max_abs_diff(exp_closed(a), exp_series_scaled(a)) < 1e-14);
    }
  }

  TEST_CASE("report branches") {
    const ExpReport r6 = exp_closed_report(parse_multivector("2 + e3 + 6*e12 + 3*e123", Signature::cl21()));
    CHECK(r6.branches[0] == Branch::Trig);
    CHECK(r6.branches[1] == Branch::Trig);
    const ExpReport r7 = exp_closed_report(parse_multivector("2 - 10*e2 - 10*e3 + 2*e13 + e23 + e123", Signature::cl21()));
    CHECK(r7.branches[0] == Branch::Hyperbolic);
    CHECK(r7.branches[1] == Branch::Trig);
    const ExpReport r3 = exp_closed_report(parse_multivector("3 - e1 + 2*e12", Signature::cl12()));
    CHECK(r3.branches[0] == Branch::Hyperbolic);
    CHECK(r3.branches[1] == Branch::Limit);
    CHECK(to_string(Branch::Trig) == "trig");
  }

  TEST_CASE("agrees with the series engine on random inputs") {
    std::mt19937_64 rng(23);
    for (Signature sig : Signature::all()) {
      for (int n = 0; n < 200; ++n) {
        const Multivector a = random_mv(sig, rng);
        CHECK(max_abs_diff(exp_closed(a), exp_series_scaled(a)) < 1e-10);
      }
    }
  }

  TEST_CASE("de Moivre forms for pure blades") {
    std::mt19937_64 rng(24);
    for (Signature sig : Signature::all()) {
      for (int n = 0; n < 100; ++n) {
        for (const Multivector& x : {random_on(sig, rng, {1, 2, 3}), random_on(sig, rng, {4, 5, 6})}) {
          const double sq = (x * x).scalar_part();
          const double r = std::sqrt(std::abs(sq));
          const Multivector want = sq < 0 ? std::cos(r) + x * (std::sin(r) / r)
                                          : std::cosh(r) + x * (std::sinh(r) / r);
          CHECK(rel_err(exp_closed(x), want) < 1e-13);
        }
      }
    }
  }

  TEST_CASE("parallel vector and bivector disentangle") {
    std::mt19937_64 rng(25);
    for (Signature sig : Signature::all()) {
      for (int n = 0; n < 100; ++n) {
        // Project the vector off the normal (a23, -a13, a12) so that a ^ A = 0.
        const Multivector biv = random_on(sig, rng, {4, 5, 6});
        const Multivector vec = random_on(sig, rng, {1, 2, 3});
        const std::array<double, 3> nrm = {biv[Blade::E23], -biv[Blade::E13], biv[Blade::E12]};
        const double dot = vec[1] * nrm[0] + vec[2] * nrm[1] + vec[3] * nrm[2];
        const double nn = nrm[0] * nrm[0] + nrm[1] * nrm[1] + nrm[2] * nrm[2];
        Coefficients c = (vec + biv).coeffs();
        for (int k = 0; k < 3; ++k) c[1 + k] -= dot / nn * nrm[k];
        const Multivector vb(sig, c);
        REQUIRE(std::abs(wedge_coefficient(vb)) < 1e-14);

        const double s = (vb * vb).scalar_part();
        const double r = std::sqrt(std::abs(s));
        const Multivector want = s < 0 ? std::cos(r) + vb * (std::sin(r) / r)
                                       : std::cosh(r) + vb * (std::sinh(r) / r);
        CHECK(rel_err(exp_closed(vb), want) < 1e-12);
      }
    }
  }

  TEST_CASE("determinant identity") {
    std::mt19937_64 rng(26);
    for (Signature sig : {Signature::cl30(), Signature::cl12()}) {
      for (int n = 0; n < 200; ++n) {
        const Multivector vb = random_on(sig, rng, {1, 2, 3, 4, 5, 6});
        const MixingScalars m = mixing_cl30(vb);
        const double want = std::pow(m.a_plus_sq + m.a_minus_sq, 2);
        CHECK(determinant(vb) == doctest::Approx(want).epsilon(1e-10));
      }
    }
  }
}
