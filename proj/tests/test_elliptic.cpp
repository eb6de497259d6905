#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nfcert/elliptic.hpp"

using namespace nfcert;

// y^2 + y = x^3 - x^2 - 10x - 20, conductor 11
static const WeierstrassCurve kX0_11 = WeierstrassCurve::make(0, -1, 1, -10, -20);
// y^2 + y = x^3 - x^2 - 7x + 10, conductor 121
static const WeierstrassCurve k121D = WeierstrassCurve::make(0, -1, 1, -7, 10);
// y^2 + xy = x^3 - x^2 - 2x - 1, conductor 49
static const WeierstrassCurve kC49 = WeierstrassCurve::make(1, -1, 0, -2, -1);

TEST_CASE("trace of Frobenius tables") {
  long expected_a[] = {-2, -1, 1, -2};
  long expected_b[] = {0, -1, -3, 0};
  long ps[] = {2, 3, 5, 7};
  for (int i = 0; i < 4; ++i) {
    auto ca = count_points(kX0_11, ps[i]);
    auto cb = count_points(k121D, ps[i]);
    REQUIRE(ca.type == ReductionType::good);
    REQUIRE(cb.type == ReductionType::good);
    CHECK(ca.a == expected_a[i]);
    CHECK(cb.a == expected_b[i]);
    CHECK((ca.a - cb.a) % 2 == 0);
  }
  // not congruent mod 4 somewhere
  bool mod4_differs = false;
  for (int i = 0; i < 4; ++i)
    if (((count_points(kX0_11, ps[i]).a - count_points(k121D, ps[i]).a) % 4 + 4) % 4 != 0)
      mod4_differs = true;
  CHECK(mod4_differs);
}

TEST_CASE("bad reduction is a tagged outcome") {
  auto c = count_points(kX0_11, 11);
  CHECK(c.type == ReductionType::multiplicative);
  auto c2 = count_points(k121D, 11);
  CHECK(c2.type == ReductionType::additive);
  auto c3 = count_points(kC49, 7);
  CHECK(c3.type == ReductionType::additive);
}

TEST_CASE("Hasse bound for all good primes up to 1000") {
  for (const auto& e : {kX0_11, k121D, kC49}) {
    for (long q = 2; q <= 1000; ++q) {
      bool prime = true;
      for (long d = 2; d * d <= q; ++d)
        if (q % d == 0) {
          prime = false;
          break;
        }
      if (!prime) continue;
      auto c = count_points(e, q);
      if (c.type != ReductionType::good) continue;
      CAPTURE(q);
      CHECK(static_cast<double>(c.a) * c.a <= 4.0 * q);
    }
  }
}

TEST_CASE("counting is invariant under coordinate changes") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 20; ++trial) {
    long long r = static_cast<long long>(rng() % 7) - 3;
    long long s = static_cast<long long>(rng() % 7) - 3;
    long long t = static_cast<long long>(rng() % 7) - 3;
    const WeierstrassCurve& e = (trial % 2) ? kX0_11 : kC49;
    // (x, y) -> (x + r, y + s x + t), unimodular change of variables
    WeierstrassCurve e2 = WeierstrassCurve::make(
        e.a1 + 2 * s, e.a2 - s * e.a1 + 3 * r - s * s, e.a3 + r * e.a1 + 2 * t,
        e.a4 - s * e.a3 + 2 * r * e.a2 - (t + r * s) * e.a1 + 3 * r * r - 2 * s * t,
        e.a6 + r * e.a4 + r * r * e.a2 + r * r * r - t * e.a3 - t * t - r * t * e.a1);
    CHECK(e2.disc == e.disc);
    for (long q : {3, 5, 13, 101}) {
      auto c1 = count_points(e, q);
      auto c2 = count_points(e2, q);
      REQUIRE(c1.type == c2.type);
      if (c1.type == ReductionType::good) CHECK(c1.a == c2.a);
    }
  }
}

TEST_CASE("two-division cubics") {
  auto c = two_division_cubic(kX0_11);
  CHECK(c.coeffs == std::array<long long, 4>{-79, -40, -4, 4});
  CHECK(c.disc == 16 * kX0_11.disc);
  CHECK(kX0_11.disc == -161051);  // -11^5
  CHECK(c.square_class == -11);

  auto c2 = two_division_cubic(kC49);
  // 4x^3 - 3x^2 - 8x - 4 has the rational root x = 2
  long long x = 2;
  CHECK(c2.coeffs[3] * x * x * x + c2.coeffs[2] * x * x + c2.coeffs[1] * x + c2.coeffs[0] == 0);

  auto c3 = two_division_cubic(WeierstrassCurve::make(0, 0, 0, 1, 0));  // y^2 = x^3 + x
  CHECK(c3.coeffs == std::array<long long, 4>{0, 4, 0, 4});
}

TEST_CASE("splitting field evidence") {
  // 2-division cubic of X0(11) vs x^3 + x^2 + x - 1
  Poly f = {-79, -40, -4, 4};
  Poly g = {-1, 1, 1, 1};
  auto ev = same_splitting_field_evidence(f, g, 10000);
  CHECK(ev.square_class_match);
  CHECK(ev.pass);
  CHECK(ev.primes_checked > 1000);
  CHECK(ev.first_mismatch == 0);

  auto self_ev = same_splitting_field_evidence(g, g, 100);
  CHECK(self_ev.pass);

  // x^3 - 2 vs x^3 - 3: discriminants -108 and -243, classes -3 vs -3... both -3;
  // shapes differ at some prime instead
  auto ev2 = same_splitting_field_evidence(Poly{-2, 0, 0, 1}, Poly{-3, 0, 0, 1}, 1000);
  CHECK_FALSE(ev2.pass);

  CHECK_THROWS(same_splitting_field_evidence(Poly{-1, 0, 0, 1}, g, 100));  // x^3-1 reducible
}

TEST_CASE("conductor exponents at tame primes") {
  CHECK(conductor_exponent(kX0_11, 11) == 1);
  CHECK(conductor_exponent(k121D, 11) == 2);
  CHECK(conductor_exponent(kC49, 7) == 2);
  CHECK(conductor_exponent(kX0_11, 5) == 0);
  CHECK(conductor_exponent(k121D, 7) == 0);
  CHECK_THROWS(conductor_exponent(kX0_11, 2));
  CHECK_THROWS(conductor_exponent(kX0_11, 3));
  // non-minimal model of X0(11): scale (u = 5); exponent at 11 unchanged, at 5 still good
  WeierstrassCurve big = WeierstrassCurve::make(0, -25, 125, -6250, -312500);
  CHECK(conductor_exponent(big, 11) == 1);
  CHECK(conductor_exponent(big, 5) == 0);
}

TEST_CASE("supersingularity") {
  CHECK(is_supersingular(kX0_11, 2));
  CHECK(is_supersingular(k121D, 2));
  CHECK(is_supersingular(kC49, 3) == (count_points(kC49, 3).a % 3 == 0));
  CHECK_THROWS(is_supersingular(kX0_11, 5));
}
