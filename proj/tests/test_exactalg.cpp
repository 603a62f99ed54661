#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sigma3/algext.hpp"
#include "sigma3/rational.hpp"
#include "sigma3/rng.hpp"
#include "sigma3/scalar.hpp"
#include "sigma3/sigmalimit.hpp"

using namespace sigma3;

TEST_CASE("rational canonical form and arithmetic") {
  Rational a(2, 4);
  CHECK(a.numerator() == 1);
  CHECK(a.denominator() == 2);
  Rational b(-3, -9);
  CHECK(b == Rational(1, 3));
  Rational c(1, -3);
  CHECK(c.denominator() == 3);
  CHECK(c.numerator() == -1);

  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) * Rational(3, 5) == Rational(1, 5));
  CHECK(Rational(7, 2) / Rational(7, 2) == Rational(1));
  CHECK((-Rational(4, 6)).str() == "-2/3");
  CHECK(Rational(5).str() == "5");
  CHECK(Rational(5).str_slash() == "5/1");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 3).inv() * Rational(0).inv(), std::domain_error);
}

TEST_CASE("rational string round trip") {
  for (const char* s : {"0", "-7", "44/45", "-1/3", "123456789123456789/2"}) {
    Rational r = Rational::from_string(s);
    CHECK(Rational::from_string(r.str()) == r);
  }
  CHECK(Rational::from_string("2/4") == Rational(1, 2));
  CHECK_THROWS(Rational::from_string("one"));
}

TEST_CASE("rational pow is exact") {
  CHECK(Rational(2, 3).pow(10) == Rational(1024, 59049));
  CHECK(Rational(-1, 2).pow(3) == Rational(-1, 8));
  CHECK(Rational(7).pow(0) == Rational(1));
}

TEST_CASE("p field: minimal polynomial reduces to zero and arithmetic is associative") {
  auto f = p_field();
  CHECK(f->degree() == 5);
  AlgElem p = alg_generator(f);
  // p^5 = -45
  Scalar sp{p};
  CHECK(sp.pow(5) == Scalar(Rational(-45)));
  // m(p) == 0
  Scalar m = sp.pow(5) + Scalar(Rational(45));
  CHECK(m.is_zero());

  TrialRng rng(42, 0);
  auto random_elem = [&]() {
    AlgElem e{f, std::vector<Rational>(5)};
    for (auto& c : e.coords)
      c = Rational(static_cast<long>(rng.below(19)) - 9, static_cast<long>(rng.below(6)) + 1);
    return Scalar(e);
  };
  for (int i = 0; i < 20; ++i) {
    Scalar a = random_elem(), b = random_elem(), c = random_elem();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("algebraic inversion via extended Euclid") {
  auto f = q_field();
  Scalar q{alg_generator(f)};
  // q^6 = 15 q^3 + 45
  CHECK(q.pow(6) == Scalar(Rational(15)) * q.pow(3) + Scalar(Rational(45)));
  TrialRng rng(7, 3);
  for (int i = 0; i < 10; ++i) {
    AlgElem e{f, std::vector<Rational>(6)};
    for (auto& c : e.coords) c = Rational(static_cast<long>(rng.below(21)) - 10);
    if (e.is_zero()) continue;
    Scalar s{e};
    CHECK(s * s.inv() == Scalar(Rational(1)));
  }
  CHECK_THROWS_AS(Scalar(alg_from_rational(f, Rational(0))).inv(), std::domain_error);
}

TEST_CASE("field embeddings select the documented real roots") {
  // p = -45^{1/5}
  double p = p_field()->embedded_root().real();
  CHECK(std::abs(p_field()->embedded_root().imag()) < 1e-12);
  CHECK(p == doctest::Approx(-std::pow(45.0, 0.2)).epsilon(1e-12));
  // q: the real root with q^3 = (15 + sqrt(405))/2
  double q = q_field()->embedded_root().real();
  CHECK(std::abs(q_field()->embedded_root().imag()) < 1e-12);
  CHECK(q * q * q == doctest::Approx((15.0 + std::sqrt(405.0)) / 2.0).epsilon(1e-12));
  // roots are sorted by (re, im) and the embedding index is stable
  CHECK(p_field()->embedding_index() == 0);
  CHECK(q_field()->embedding_index() == 5);
}

TEST_CASE("scalar promotion and mixed-field errors") {
  auto fp = p_field();
  auto fq = q_field();
  Scalar p{alg_generator(fp)};
  Scalar r{Rational(1, 3)};
  Scalar sum = r + p;  // promotes the rational side
  CHECK(!sum.is_rational());
  CHECK(sum - p == r);
  Scalar q{alg_generator(fq)};
  CHECK_THROWS_AS(p + q, std::invalid_argument);
  // embedding of a rational scalar
  CHECK(Scalar(Rational(1, 4)).to_complex().real() == doctest::Approx(0.25));
  // numeric embedding respects arithmetic
  std::complex<double> lhs = (p * p).to_complex();
  std::complex<double> rhs = p.to_complex() * p.to_complex();
  CHECK(std::abs(lhs - rhs) < 1e-10);
}

TEST_CASE("trial rng is deterministic and splits by index") {
  TrialRng a(123, 5), b(123, 5), c(123, 6);
  for (int i = 0; i < 5; ++i) {
    double x = a.unit();
    CHECK(x == b.unit());
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
  bool same = true;
  TrialRng a2(123, 5);
  for (int i = 0; i < 5; ++i) same = same && (a2.unit() == c.unit());
  CHECK(!same);
}
