#pragma once

#include <array>
#include <string>

#include "nfcert/order.hpp"

namespace nfcert {

// Long Weierstrass curve y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q
// with the usual derived quantities; discriminant must be nonzero.
struct WeierstrassCurve {
  long long a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;
  long long b2 = 0, b4 = 0, b6 = 0, b8 = 0, c4 = 0, c6 = 0;
  long long disc = 0;

  static WeierstrassCurve make(long long a1, long long a2, long long a3, long long a4,
                               long long a6);
};

enum class ReductionType { good, multiplicative, additive };

struct PointCount {
  long q = 0;
  ReductionType type = ReductionType::good;
  long long points = 0;  // projective points incl. infinity; good reduction only
  long long a = 0;       // q + 1 - points
};

// Exhaustive count over F_q, q <= 10^5 prime.  Bad reduction is a tagged
// outcome (type != good, a/points unset).
PointCount count_points(const WeierstrassCurve& e, long q);

struct TwoDivisionCubic {
  std::array<long long, 4> coeffs;  // ascending: b6, 2*b4, b2, 4
  long long disc = 0;               // cubic discriminant = 16 * curve disc
  long long square_class = 0;       // squarefree part, sign included
};

// The cubic 4x^3 + b2 x^2 + 2 b4 x + b6 whose roots are the x-coordinates of
// the nontrivial 2-torsion.
TwoDivisionCubic two_division_cubic(const WeierstrassCurve& e);

struct SplittingEvidence {
  bool pass = false;
  bool square_class_match = false;
  long primes_checked = 0;
  long first_mismatch = 0;  // 0 if none
};

// Heuristic evidence that two irreducible cubics cut out the same splitting
// field: matching discriminant square-class and identical factorization
// shapes modulo every prime <= prime_bound away from the discriminants.
SplittingEvidence same_splitting_field_evidence(const Poly& f, const Poly& g, long prime_bound);

// 0 good, 1 multiplicative, 2 additive, at q >= 5 (wild primes rejected).
int conductor_exponent(const WeierstrassCurve& e, long q);

// a_q = 0 mod q; requires good reduction at q.
bool is_supersingular(const WeierstrassCurve& e, long q);

}  // namespace nfcert
