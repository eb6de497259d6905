#include "nfcert/elliptic.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace nfcert {

WeierstrassCurve WeierstrassCurve::make(long long a1, long long a2, long long a3, long long a4,
                                        long long a6) {
  WeierstrassCurve e;
  e.a1 = a1;
  e.a2 = a2;
  e.a3 = a3;
  e.a4 = a4;
  e.a6 = a6;
  e.b2 = a1 * a1 + 4 * a2;
  e.b4 = 2 * a4 + a1 * a3;
  e.b6 = a3 * a3 + 4 * a6;
  e.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  e.c4 = e.b2 * e.b2 - 24 * e.b4;
  e.c6 = -e.b2 * e.b2 * e.b2 + 36 * e.b2 * e.b4 - 216 * e.b6;
  e.disc = -e.b2 * e.b2 * e.b8 - 8 * e.b4 * e.b4 * e.b4 - 27 * e.b6 * e.b6 +
           9 * e.b2 * e.b4 * e.b6;
  if (e.disc == 0) throw std::invalid_argument("curve: singular (discriminant 0)");
  if (4 * e.b8 != e.b2 * e.b6 - e.b4 * e.b4 ||
      1728 * e.disc != e.c4 * e.c4 * e.c4 - e.c6 * e.c6)
    throw std::logic_error("curve: derived-quantity relations violated");
  return e;
}

namespace {

long long mod(long long a, long long m) {
  a %= m;
  return a < 0 ? a + m : a;
}

long long vq(long long n, long q) {
  if (n == 0) return 1000;  // effectively infinite
  long long v = 0;
  while (n % q == 0) {
    n /= q;
    ++v;
  }
  return v;
}

ReductionType reduction_type(const WeierstrassCurve& e, long q) {
  if (mod(e.disc, q) != 0) return ReductionType::good;
  if (q >= 5) {
    long long vd = vq(e.disc, q), vc = vq(e.c4, q);
    while (vd >= 12 && vc >= 4) {  // pass to a q-minimal model
      vd -= 12;
      vc -= 4;
    }
    if (vd == 0) return ReductionType::good;
    return vc == 0 ? ReductionType::multiplicative : ReductionType::additive;
  }
  // q in {2,3}: the given model is taken at face value
  return mod(e.c4, q) != 0 ? ReductionType::multiplicative : ReductionType::additive;
}

}  // namespace

PointCount count_points(const WeierstrassCurve& e, long q) {
  if (q < 2 || q > 100000) throw std::invalid_argument("count_points: q out of range");
  PointCount r;
  r.q = q;
  r.type = reduction_type(e, q);
  if (r.type != ReductionType::good) return r;
  long long n = 1;  // point at infinity
  if (q == 2) {
    for (long long x = 0; x < 2; ++x)
      for (long long y = 0; y < 2; ++y) {
        long long lhs = y * y + e.a1 * x * y + e.a3 * y;
        long long rhs = x * x * x + e.a2 * x * x + e.a4 * x + e.a6;
        if (mod(lhs - rhs, 2) == 0) ++n;
      }
  } else {
    // complete the square: (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
    std::vector<signed char> chi(q, -1);
    chi[0] = 0;
    for (long long t = 1; t < q; ++t) chi[t * t % q] = 1;
    long long b2 = mod(e.b2, q), b4 = mod(2 * e.b4, q), b6 = mod(e.b6, q);
    for (long long x = 0; x < q; ++x) {
      long long h = ((4 * x % q) * x % q * x + b2 * x % q * x + b4 * x + b6) % q;
      n += 1 + chi[h];
    }
  }
  r.points = n;
  r.a = q + 1 - n;
  return r;
}

namespace {

long long cubic_disc(long long a, long long b, long long c, long long d) {
  return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c -
         27 * a * a * d * d;
}

long long squarefree_part(long long n) {
  if (n == 0) return 0;
  long long sign = n < 0 ? -1 : 1;
  long long m = std::abs(n), out = 1;
  for (long long p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e % 2) out *= p;
  }
  return sign * out * m;
}

}  // namespace

TwoDivisionCubic two_division_cubic(const WeierstrassCurve& e) {
  TwoDivisionCubic c;
  c.coeffs = {e.b6, 2 * e.b4, e.b2, 4};
  c.disc = cubic_disc(4, e.b2, 2 * e.b4, e.b6);
  c.square_class = squarefree_part(c.disc);
  return c;
}

SplittingEvidence same_splitting_field_evidence(const Poly& f, const Poly& g, long prime_bound) {
  if (poly_degree(f) != 3 || poly_degree(g) != 3)
    throw std::invalid_argument("splitting evidence: cubics required");
  // irreducibility of an integer cubic = no rational root p/q, p | f0, q | f3
  auto check_irreducible = [](const Poly& h) {
    long long lead = h[3], cst = h[0];
    if (cst == 0) throw std::invalid_argument("splitting evidence: cubic has root 0");
    for (long long p = 1; p <= std::abs(cst); ++p) {
      if (std::abs(cst) % p) continue;
      for (long long q = 1; q <= std::abs(lead); ++q) {
        if (std::abs(lead) % q) continue;
        for (long long num : {p, -p}) {
          // h(num/q) = 0  <=>  h3 num^3 + h2 num^2 q + h1 num q^2 + h0 q^3 = 0
          long long v = h[3] * num * num * num + h[2] * num * num * q + h[1] * num * q * q +
                        h[0] * q * q * q;
          if (v == 0)
            throw std::invalid_argument("splitting evidence: cubic is reducible over Q");
        }
      }
    }
  };
  check_irreducible(f);
  check_irreducible(g);
  SplittingEvidence ev;
  long long df = cubic_disc(f[3], f[2], f[1], f[0]);
  long long dg = cubic_disc(g[3], g[2], g[1], g[0]);
  ev.square_class_match = squarefree_part(df) == squarefree_part(dg);
  auto shape = [](const Poly& h, long q) {
    std::vector<int> degs;
    for (const auto& [irr, m] : factor_mod_q(h, q))
      for (int k = 0; k < m; ++k) degs.push_back(poly_degree(irr));
    std::sort(degs.begin(), degs.end());
    return degs;
  };
  long long bad = std::abs(df) * 1LL;  // avoid primes of bad reduction of either cubic
  bool shapes_ok = true;
  for (long q = 2; q <= prime_bound; ++q) {
    bool prime = q >= 2;
    for (long d = 2; d * d <= q; ++d)
      if (q % d == 0) {
        prime = false;
        break;
      }
    if (!prime) continue;
    if (df % q == 0 || dg % q == 0 || f[3] % q == 0 || g[3] % q == 0) continue;
    ++ev.primes_checked;
    if (shape(f, q) != shape(g, q)) {
      shapes_ok = false;
      if (ev.first_mismatch == 0) ev.first_mismatch = q;
      break;
    }
  }
  (void)bad;
  ev.pass = ev.square_class_match && shapes_ok;
  return ev;
}

int conductor_exponent(const WeierstrassCurve& e, long q) {
  if (q < 5) throw std::invalid_argument("conductor_exponent: only q >= 5 (tame primes)");
  switch (reduction_type(e, q)) {
    case ReductionType::good:
      return 0;
    case ReductionType::multiplicative:
      return 1;
    default:
      return 2;
  }
}

bool is_supersingular(const WeierstrassCurve& e, long q) {
  if (q != 2 && q != 3) throw std::invalid_argument("is_supersingular: q in {2,3}");
  PointCount c = count_points(e, q);
  if (c.type != ReductionType::good)
    throw std::invalid_argument("is_supersingular: bad reduction at q");
  return c.a % q == 0;
}

}  // namespace nfcert
