#include "nfcert/order.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace nfcert {

// ---------------------------------------------------------------- poly utils

int poly_degree(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

static Poly trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

Poly poly_mod_q(const Poly& f, long long q) {
  Poly r = f;
  for (auto& c : r) {
    c %= q;
    if (c < 0) c += q;
  }
  return trim(r);
}

static long long mod_inverse(long long a, long long q) {
  long long t = 0, nt = 1, r = q, nr = a % q;
  if (nr < 0) nr += q;
  while (nr != 0) {
    long long qt = r / nr;
    std::swap(t -= qt * nt, nt);
    std::swap(r -= qt * nr, nr);
  }
  if (r != 1) throw std::domain_error("mod_inverse: not invertible");
  return t < 0 ? t + q : t;
}

static Poly poly_mul_q(const Poly& a, const Poly& b, long long q) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % q;
  }
  return trim(r);
}

// Division with remainder; g must have invertible leading coefficient mod q.
static void poly_divmod_q(const Poly& a, const Poly& g, long long q, Poly* quot, Poly* rem) {
  Poly r = poly_mod_q(a, q);
  Poly gq = poly_mod_q(g, q);
  int dg = poly_degree(gq);
  if (dg < 0) throw std::domain_error("poly division by zero");
  long long inv = mod_inverse(gq[dg], q);
  Poly qout;
  while (poly_degree(r) >= dg) {
    int dr = poly_degree(r);
    long long c = r[dr] * inv % q;
    if (static_cast<int>(qout.size()) < dr - dg + 1) qout.resize(dr - dg + 1, 0);
    qout[dr - dg] = c;
    for (int i = 0; i <= dg; ++i) r[dr - dg + i] = ((r[dr - dg + i] - c * gq[i]) % q + q) % q;
    r = trim(r);
  }
  if (quot) *quot = trim(qout);
  if (rem) *rem = r;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& f, long long q) {
  Poly r = poly_mul_q(poly_mod_q(a, q), poly_mod_q(b, q), q);
  Poly rem;
  poly_divmod_q(r, f, q, nullptr, &rem);
  return rem;
}

static Poly poly_gcd_q(Poly a, Poly b, long long q) {
  a = poly_mod_q(a, q);
  b = poly_mod_q(b, q);
  while (poly_degree(b) >= 0) {
    Poly r;
    poly_divmod_q(a, b, q, nullptr, &r);
    a = b;
    b = r;
  }
  int d = poly_degree(a);
  if (d >= 0 && a[d] != 1) {  // make monic
    long long inv = mod_inverse(a[d], q);
    for (auto& c : a) c = c * inv % q;
  }
  return a;
}

static Poly poly_deriv(const Poly& f, long long q) {
  Poly r;
  for (size_t i = 1; i < f.size(); ++i) r.push_back(static_cast<long long>(i) % q * f[i] % q);
  return trim(r);
}

// b^e mod f over F_q, e given in binary as a vector of limbs (little endian bits).
static Poly poly_pow_mod(Poly b, const std::vector<bool>& bits, const Poly& f, long long q) {
  Poly r = {1};
  for (bool bit : bits) {
    if (bit) r = poly_mul_mod(r, b, f, q);
    b = poly_mul_mod(b, b, f, q);
  }
  return r;
}

static std::vector<bool> bits_of_ull(unsigned long long e) {
  std::vector<bool> b;
  while (e) {
    b.push_back(e & 1);
    e >>= 1;
  }
  return b;
}

// bits of (q^d - 1) / 2, little endian, via simple bignum (base 2^32 limbs).
static std::vector<bool> bits_qd_half(long long q, int d) {
  std::vector<unsigned long long> big = {1};  // q^d
  auto mul_small = [&](unsigned long long m) {
    unsigned long long carry = 0;
    for (auto& limb : big) {
      unsigned __int128 t = static_cast<unsigned __int128>(limb) * m + carry;
      limb = static_cast<unsigned long long>(t & 0xffffffffULL);
      carry = static_cast<unsigned long long>(t >> 32);
    }
    while (carry) {
      big.push_back(carry & 0xffffffffULL);
      carry >>= 32;
    }
  };
  for (int i = 0; i < d; ++i) mul_small(static_cast<unsigned long long>(q));
  // subtract 1
  for (auto& limb : big) {
    if (limb) {
      --limb;
      break;
    }
    limb = 0xffffffffULL;
  }
  // divide by 2
  unsigned long long carry = 0;
  for (int i = static_cast<int>(big.size()) - 1; i >= 0; --i) {
    unsigned long long cur = big[i] | (carry << 32);
    carry = cur & 1;
    big[i] = cur >> 1;
  }
  std::vector<bool> bits;
  for (size_t i = 0; i < big.size(); ++i)
    for (int j = 0; j < 32; ++j) bits.push_back((big[i] >> j) & 1);
  while (!bits.empty() && !bits.back()) bits.pop_back();
  return bits;
}

namespace {

// Deterministic pseudo-random polynomial source for equal-degree splitting.
struct PolySource {
  unsigned long long state = 0x9e3779b97f4a7c15ULL;
  long long next(long long q) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<long long>((state >> 17) % static_cast<unsigned long long>(q));
  }
  Poly poly(int deg, long long q) {
    Poly p(deg + 1);
    for (auto& c : p) c = next(q);
    return trim(p);
  }
};

void equal_degree_split(const Poly& f, int d, long long q, PolySource& src,
                        std::vector<Poly>* out) {
  int n = poly_degree(f);
  if (n == d) {
    out->push_back(f);
    return;
  }
  Poly g;
  for (int attempt = 0; attempt < 200; ++attempt) {
    Poly a = src.poly(n - 1, q);
    if (poly_degree(a) < 1) continue;
    Poly c = poly_gcd_q(a, f, q);
    if (poly_degree(c) > 0 && poly_degree(c) < n) {
      g = c;
      break;
    }
    if (q == 2) {
      // trace map a + a^2 + ... + a^{2^{d-1}}
      Poly t = a, cur = a;
      for (int i = 1; i < d; ++i) {
        cur = poly_mul_mod(cur, cur, f, q);
        t.resize(std::max(t.size(), cur.size()), 0);
        for (size_t j = 0; j < cur.size(); ++j) t[j] = (t[j] + cur[j]) % 2;
      }
      Poly c2 = poly_gcd_q(trim(t), f, q);
      if (poly_degree(c2) > 0 && poly_degree(c2) < n) {
        g = c2;
        break;
      }
    } else {
      Poly b = poly_pow_mod(a, bits_qd_half(q, d), f, q);
      if (!b.empty()) b[0] = (b[0] + q - 1) % q;  // b - 1
      Poly c2 = poly_gcd_q(trim(b), f, q);
      if (poly_degree(c2) > 0 && poly_degree(c2) < n) {
        g = c2;
        break;
      }
    }
  }
  if (poly_degree(g) <= 0) throw std::runtime_error("equal-degree splitting failed");
  Poly h;
  poly_divmod_q(f, g, q, &h, nullptr);
  equal_degree_split(g, d, q, src, out);
  equal_degree_split(h, d, q, src, out);
}

// Factors a squarefree monic f over F_q into irreducibles.
std::vector<Poly> factor_squarefree(const Poly& f, long long q) {
  std::vector<Poly> out;
  Poly rem = f;
  Poly h = {0, 1};  // x
  PolySource src;
  int d = 0;
  while (poly_degree(rem) > 0) {
    ++d;
    if (2 * d > poly_degree(rem)) {
      out.push_back(rem);
      break;
    }
    h = poly_pow_mod(h, bits_of_ull(static_cast<unsigned long long>(q)), rem, q);
    Poly hx = h;
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = ((hx[1] - 1) % q + q) % q;  // h - x
    Poly g = poly_gcd_q(trim(hx), rem, q);
    if (poly_degree(g) > 0) {
      equal_degree_split(g, d, q, src, &out);
      Poly quo;
      poly_divmod_q(rem, g, q, &quo, nullptr);
      rem = quo;
      Poly rx;
      poly_divmod_q(h, rem, q, nullptr, &rx);
      h = rx;
    }
  }
  return out;
}

}  // namespace

std::vector<std::pair<Poly, int>> factor_mod_q(const Poly& f, long long q) {
  Poly fq = poly_mod_q(f, q);
  int n = poly_degree(fq);
  if (n <= 0) throw std::invalid_argument("factor_mod_q: degenerate polynomial");
  long long inv = mod_inverse(fq[n], q);
  for (auto& c : fq) c = c * inv % q;
  std::vector<std::pair<Poly, int>> result;
  // squarefree decomposition in characteristic q
  std::function<void(const Poly&, int)> sff = [&](const Poly& poly, int mult) {
    Poly d = poly_deriv(poly, q);
    if (poly_degree(d) < 0) {
      // poly = h(x^q)
      Poly h;
      for (size_t i = 0; i < poly.size(); i += q) h.push_back(poly[i]);
      sff(trim(h), mult * static_cast<int>(q));
      return;
    }
    Poly c = poly_gcd_q(poly, d, q);
    Poly w;
    poly_divmod_q(poly, c, q, &w, nullptr);
    int i = 1;
    while (poly_degree(w) > 0) {
      Poly y = poly_gcd_q(w, c, q);
      Poly z;
      poly_divmod_q(w, y, q, &z, nullptr);
      if (poly_degree(z) > 0)
        for (const Poly& irr : factor_squarefree(z, q)) result.emplace_back(irr, mult * i);
      w = y;
      Poly cn;
      poly_divmod_q(c, y, q, &cn, nullptr);
      c = cn;
      ++i;
    }
    if (poly_degree(c) > 0) sff(c, mult);
  };
  sff(fq, 1);
  std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
    if (poly_degree(a.first) != poly_degree(b.first))
      return poly_degree(a.first) < poly_degree(b.first);
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
  });
  // sanity: degrees and multiplicities reassemble f
  long long total = 0;
  for (const auto& [g, m] : result) total += static_cast<long long>(poly_degree(g)) * m;
  if (total != n) throw std::runtime_error("factor_mod_q: internal degree mismatch");
  return result;
}

Poly cyclotomic_polynomial(long m) {
  if (m < 1) throw std::invalid_argument("cyclotomic: m >= 1 required");
  // Phi_m = prod_{d|m} (x^d - 1)^{mu(m/d)}: build numerator, divide by factors.
  auto xn_minus_1 = [](long d) {
    Poly p(d + 1, 0);
    p[0] = -1;
    p[d] = 1;
    return p;
  };
  auto mobius = [](long n) {
    int mu = 1;
    for (long p = 2; p * p <= n; ++p)
      if (n % p == 0) {
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
      }
    if (n > 1) mu = -mu;
    return mu;
  };
  // exact division over Z
  auto div_exact = [](const Poly& a, const Poly& b) {
    Poly r = a, q;
    int db = poly_degree(b);
    while (poly_degree(r) >= db) {
      int dr = poly_degree(r);
      long long c = r[dr] / b[db];
      if (static_cast<int>(q.size()) < dr - db + 1) q.resize(dr - db + 1, 0);
      q[dr - db] = c;
      for (int i = 0; i <= db; ++i) r[dr - db + i] -= c * b[i];
    }
    if (poly_degree(trim(r)) >= 0) throw std::runtime_error("cyclotomic: inexact division");
    return trim(q);
  };
  Poly num = {1}, den = {1};
  for (long d = 1; d <= m; ++d) {
    if (m % d) continue;
    int mu = mobius(m / d);
    if (mu == 1) {
      Poly f = xn_minus_1(d);
      Poly r(num.size() + f.size() - 1, 0);
      for (size_t i = 0; i < num.size(); ++i)
        for (size_t j = 0; j < f.size(); ++j) r[i + j] += num[i] * f[j];
      num = trim(r);
    } else if (mu == -1) {
      Poly f = xn_minus_1(d);
      Poly r(den.size() + f.size() - 1, 0);
      for (size_t i = 0; i < den.size(); ++i)
        for (size_t j = 0; j < f.size(); ++j) r[i + j] += den[i] * f[j];
      den = trim(r);
    }
  }
  return div_exact(num, den);
}

// ---------------------------------------------------------------- elements

Element parse_element(const std::string& s, int degree) {
  Element e;
  e.num.assign(degree, 0);
  std::vector<std::pair<long long, long long>> coeffs(degree, {0, 1});  // num, den
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto read_uint = [&]() -> long long {
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw std::invalid_argument("element parse: expected number in '" + s + "'");
    return std::stoll(s.substr(start, i - start));
  };
  skip_ws();
  bool any = false;
  while (i < s.size()) {
    long long sign = 1;
    skip_ws();
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -1;
      ++i;
      skip_ws();
    } else if (any) {
      throw std::invalid_argument("element parse: expected '+' or '-' in '" + s + "'");
    }
    long long cnum = 1, cden = 1;
    bool have_coef = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      cnum = read_uint();
      have_coef = true;
      skip_ws();
      if (i < s.size() && s[i] == '/') {
        ++i;
        skip_ws();
        cden = read_uint();
        skip_ws();
      }
    }
    int power = 0;
    if (i < s.size() && s[i] == '*') {
      ++i;
      skip_ws();
    }
    if (i < s.size() && s[i] == 't') {
      ++i;
      power = 1;
      skip_ws();
      if (i < s.size() && s[i] == '^') {
        ++i;
        skip_ws();
        power = static_cast<int>(read_uint());
        skip_ws();
      }
    } else if (!have_coef) {
      throw std::invalid_argument("element parse: dangling term in '" + s + "'");
    }
    if (power >= degree)
      throw std::invalid_argument("element parse: power " + std::to_string(power) +
                                  " exceeds order degree");
    // accumulate sign*cnum/cden onto coefficient `power`
    auto& [an, ad] = coeffs[power];
    long long nn = an * cden + sign * cnum * ad;
    long long nd = ad * cden;
    long long g = std::gcd(std::abs(nn), nd);
    if (g > 1) {
      nn /= g;
      nd /= g;
    }
    an = nn;
    ad = nd;
    any = true;
  }
  if (!any) throw std::invalid_argument("element parse: empty string");
  long long den = 1;
  for (auto& [cn, cd] : coeffs) den = std::lcm(den, cd);
  e.den = den;
  for (int k = 0; k < degree; ++k) e.num[k] = coeffs[k].first * (den / coeffs[k].second);
  return e;
}

// ---------------------------------------------------------------- orders

std::vector<long long> MonogenicOrder::mul(const std::vector<long long>& a,
                                           const std::vector<long long>& b) const {
  std::vector<long long> r(2 * n_ - 1, 0);
  for (int i = 0; i < n_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n_; ++j) r[i + j] += a[i] * b[j];
  }
  for (int d = 2 * n_ - 2; d >= n_; --d) {
    long long c = r[d];
    if (c == 0) continue;
    r[d] = 0;
    for (int k = 0; k < n_; ++k) r[d - n_ + k] -= c * f_[k];
  }
  r.resize(n_);
  return r;
}

namespace {

const long long kSmallPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                  43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

// Complete search for a monic integer factor of degree d, by interpolating
// candidates through signed divisors of f at d+1 small points.
bool has_monic_factor(const Poly& f, int d) {
  int n = poly_degree(f);
  std::vector<long> pts = {0};
  for (int k = 1; static_cast<int>(pts.size()) < d + 1; ++k) {
    pts.push_back(k);
    if (static_cast<int>(pts.size()) < d + 1) pts.push_back(-k);
  }
  std::vector<mpz_class> fv;
  for (long x : pts) {
    mpz_class v = 0, xp = 1;
    for (int i = 0; i <= n; ++i) {
      v += mpz_class(static_cast<long>(f[i])) * xp;
      xp *= x;
    }
    if (v == 0) return true;  // rational root x, so x - pt divides
    fv.push_back(v);
  }
  unsigned long long combos = 1;
  std::vector<std::vector<long>> divs;
  for (const mpz_class& vz : fv) {
    long a = std::abs(vz.get_si());
    std::vector<long> dv;
    for (long t = 1; t * t <= a; ++t)
      if (a % t == 0) {
        dv.push_back(t);
        dv.push_back(-t);
        if (t * t != a) {
          dv.push_back(a / t);
          dv.push_back(-(a / t));
        }
      }
    divs.push_back(dv);
    combos *= dv.size();
    if (combos > 4000000)
      throw std::domain_error("order: cannot certify irreducibility (factor search too large)");
  }
  std::vector<size_t> idx(d + 1, 0);
  while (true) {
    // Lagrange interpolation of the candidate through (pts[j], divs[j][idx[j]])
    std::vector<mpq_class> coef(d + 1, 0);
    for (int j = 0; j <= d; ++j) {
      std::vector<mpq_class> b = {1};
      mpq_class denom = 1;
      for (int k = 0; k <= d; ++k) {
        if (k == j) continue;
        b.push_back(0);
        for (int i = static_cast<int>(b.size()) - 1; i >= 1; --i)
          b[i] = b[i - 1] - pts[k] * b[i];
        b[0] = -pts[k] * b[0];
        denom *= pts[j] - pts[k];
      }
      mpq_class scale = mpq_class(divs[j][idx[j]]) / denom;
      for (int i = 0; i <= d; ++i) coef[i] += scale * b[i];
    }
    bool ok = coef[d] == 1;
    for (int i = 0; ok && i <= d; ++i) ok = coef[i].get_den() == 1;
    if (ok) {
      // exact trial division of f by the monic candidate
      std::vector<mpz_class> r(n + 1);
      for (int i = 0; i <= n; ++i) r[i] = static_cast<long>(f[i]);
      for (int i = n; i >= d; --i) {
        mpz_class c = r[i];
        if (c == 0) continue;
        for (int k = 0; k <= d; ++k) r[i - d + k] -= c * coef[k].get_num();
      }
      if (std::all_of(r.begin(), r.end(), [](const mpz_class& v) { return v == 0; }))
        return true;
    }
    int pos = 0;
    while (pos <= d && ++idx[pos] == divs[pos].size()) idx[pos++] = 0;
    if (pos > d) break;
  }
  return false;
}

// Certifies irreducibility over Q by intersecting the possible proper-factor
// degrees implied by factorization shapes modulo several primes.
void verify_irreducible(const Poly& f) {
  int n = poly_degree(f);
  if (n <= 0) throw std::invalid_argument("order: polynomial must be nonconstant");
  if (f[n] != 1) throw std::invalid_argument("order: polynomial must be monic");
  if (n == 1) return;
  std::set<int> possible;
  for (int d = 1; d < n; ++d) possible.insert(d);
  for (long long q : kSmallPrimes) {
    Poly fq = poly_mod_q(f, q);
    if (poly_degree(fq) != n) continue;  // leading coeff vanished (cannot here)
    if (poly_degree(poly_gcd_q(fq, poly_deriv(fq, q), q)) > 0) continue;  // not squarefree
    auto factors = factor_mod_q(f, q);
    std::vector<int> degs;
    for (const auto& [g, m] : factors)
      for (int k = 0; k < m; ++k) degs.push_back(poly_degree(g));
    // subset sums
    std::set<int> sums = {0};
    for (int d : degs) {
      std::set<int> next = sums;
      for (int s : sums) next.insert(s + d);
      sums = next;
    }
    std::set<int> keep;
    for (int d : possible)
      if (sums.count(d)) keep.insert(d);
    possible = keep;
    if (possible.empty()) return;
  }
  // Modular shapes left some degrees open (e.g. biquadratic quartics).  Any
  // factorization has a factor of degree <= n/2; rule those out exhaustively.
  for (int d : possible) {
    if (d > n / 2) continue;
    if (has_monic_factor(f, d))
      throw std::invalid_argument("order: polynomial is reducible (degree " +
                                  std::to_string(d) + " factor)");
  }
}

}  // namespace

MonogenicOrder::MonogenicOrder(Poly f, std::string label, long long index_obstruction)
    : f_(std::move(f)), label_(std::move(label)), index_obstruction_(index_obstruction) {
  n_ = poly_degree(f_);
  f_.resize(n_ + 1);
  verify_irreducible(f_);
}

MonogenicOrder MonogenicOrder::cyclotomic(long m, std::string label) {
  MonogenicOrder O;
  O.f_ = cyclotomic_polynomial(m);
  O.n_ = poly_degree(O.f_);
  O.m_ = m;
  O.label_ = label.empty() ? ("Q(zeta_" + std::to_string(m) + ")") : label;
  O.index_obstruction_ = 1;  // Z[zeta_m] is the maximal order
  return O;
}

std::vector<PrimeFactor> factor_prime(const MonogenicOrder& O, long long q) {
  if (q < 2) throw std::invalid_argument("factor_prime: q must be prime");
  if (O.cyclotomic_conductor() == 0) {
    long long obs = O.index_obstruction();
    if (obs == 0 || obs % q == 0)
      throw std::domain_error("index-obstructed: prime " + std::to_string(q) +
                              " may divide the index of " + O.label());
  }
  auto factors = factor_mod_q(O.poly(), q);
  std::vector<PrimeFactor> out;
  int g = static_cast<int>(factors.size());
  for (const auto& [poly, mult] : factors) {
    PrimeFactor pf;
    pf.q = q;
    pf.e = mult;
    pf.f = poly_degree(poly);
    pf.g = g;
    pf.genpoly = poly;
    out.push_back(pf);
  }
  if (long m = O.cyclotomic_conductor()) {
    // cross-check against the cyclotomic splitting law
    long mv = m;
    long e_law = 1;
    long qv = 1;
    while (mv % q == 0) {
      mv /= q;
      qv *= q;
    }
    if (qv > 1) e_law = qv - qv / q;  // phi(q^v)
    long f_law = 1;
    long long cur = q % mv;
    while (cur != 1 % mv) {
      cur = cur * q % mv;
      ++f_law;
    }
    for (const auto& pf : out)
      if (pf.e != e_law || pf.f != f_law)
        throw std::runtime_error("factor_prime: cyclotomic law mismatch at q=" +
                                 std::to_string(q));
  }
  return out;
}

// ---------------------------------------------------------------- HNF / rings

namespace {

// Row Hermite normal form of an integer lattice of full rank n.
std::vector<std::vector<long long>> hnf_rows(std::vector<std::vector<long long>> rows, int n) {
  std::vector<std::vector<long long>> M;
  for (auto& r : rows)
    if (std::any_of(r.begin(), r.end(), [](long long v) { return v != 0; })) M.push_back(r);
  std::vector<std::vector<long long>> H;
  for (int col = 0; col < n; ++col) {
    while (true) {
      std::vector<int> nz;
      for (int i = 0; i < static_cast<int>(M.size()); ++i)
        if (M[i][col] != 0) nz.push_back(i);
      if (nz.size() <= 1) break;
      std::sort(nz.begin(), nz.end(),
                [&](int a, int b) { return std::abs(M[a][col]) < std::abs(M[b][col]); });
      int p = nz[0];
      for (size_t k = 1; k < nz.size(); ++k) {
        int i = nz[k];
        long long f = M[i][col] / M[p][col];
        for (int c = 0; c < n; ++c) M[i][c] -= f * M[p][c];
      }
    }
    int pivot = -1;
    for (int i = 0; i < static_cast<int>(M.size()); ++i)
      if (M[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) throw std::runtime_error("hnf: lattice not of full rank");
    std::vector<long long> row = M[pivot];
    M.erase(M.begin() + pivot);
    if (row[col] < 0)
      for (auto& v : row) v = -v;
    H.push_back(row);
    M.erase(std::remove_if(M.begin(), M.end(),
                           [](const std::vector<long long>& r) {
                             return std::all_of(r.begin(), r.end(),
                                                [](long long v) { return v == 0; });
                           }),
            M.end());
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      long long f = H[i][j] / H[j][j];
      if (H[i][j] % H[j][j] < 0) --f;  // floor
      if (f)
        for (int c = 0; c < n; ++c) H[i][c] -= f * H[j][c];
    }
  return H;
}

// Z-module basis (HNF) of the ideal (q, g(theta)).
std::vector<std::vector<long long>> prime_ideal_hnf(const MonogenicOrder& O,
                                                    const PrimeFactor& p) {
  int n = O.degree();
  std::vector<std::vector<long long>> rows;
  std::vector<long long> qv(n, 0), gv(n, 0);
  qv[0] = p.q;
  Poly g = p.genpoly;
  if (poly_degree(g) == n) {  // inert prime: reduce the generator mod f over Z
    g.resize(n + 1, 0);
    for (int i = 0; i <= n; ++i) g[i] -= O.poly()[i];
  }
  for (size_t i = 0; i < g.size() && i < static_cast<size_t>(n); ++i) gv[i] = g[i];
  for (int j = 0; j < n; ++j) {
    std::vector<long long> tj(n, 0);
    tj[j] = 1;
    rows.push_back(O.mul(qv, tj));
    rows.push_back(O.mul(gv, tj));
  }
  return hnf_rows(rows, n);
}

std::vector<std::vector<long long>> ideal_product(const MonogenicOrder& O,
                                                  const std::vector<std::vector<long long>>& A,
                                                  const std::vector<std::vector<long long>>& B) {
  std::vector<std::vector<long long>> rows;
  for (const auto& a : A)
    for (const auto& b : B) rows.push_back(O.mul(a, b));
  return hnf_rows(rows, O.degree());
}

}  // namespace

std::vector<long long> ResidueRing::reduce_vec_by(const std::vector<std::vector<long long>>& H,
                                                  std::vector<long long> v) {
  int n = static_cast<int>(v.size());
  for (int i = 0; i < n; ++i) {
    long long f = v[i] / H[i][i];
    if (v[i] % H[i][i] < 0) --f;
    if (f)
      for (int c = 0; c < n; ++c) v[c] -= f * H[i][c];
  }
  return v;
}

std::vector<long long> ResidueRing::reduce_vec(std::vector<long long> v) const {
  return reduce_vec_by(hnf_, std::move(v));
}

long long ResidueRing::encode(const std::vector<long long>& v) const {
  long long idx = 0;
  for (int i = n_ - 1; i >= 0; --i) idx = idx * diag_[i] + v[i];
  return idx;
}

std::vector<long long> ResidueRing::decode(long long idx) const {
  std::vector<long long> v(n_);
  for (int i = 0; i < n_; ++i) {
    v[i] = idx % diag_[i];
    idx /= diag_[i];
  }
  return v;
}

ResidueRing::ResidueRing(const MonogenicOrder& O, const ModulusSpec& modulus)
    : O_(&O), modulus_(modulus), n_(O.degree()) {
  if (modulus.empty()) {
    // unit modulus (1): trivial ring
    hnf_.assign(n_, std::vector<long long>(n_, 0));
    for (int i = 0; i < n_; ++i) hnf_[i][i] = 1;
  } else {
    std::vector<std::vector<long long>> acc;
    bool first = true;
    for (const auto& [pf, k] : modulus) {
      if (k < 1) throw std::invalid_argument("residue ring: exponent must be >= 1");
      auto P = prime_ideal_hnf(O, pf);
      prime_hnf_.push_back(P);
      auto Pk = P;
      for (int i = 1; i < k; ++i) Pk = ideal_product(O, Pk, P);
      acc = first ? Pk : ideal_product(O, acc, Pk);
      first = false;
    }
    hnf_ = acc;
  }
  diag_.resize(n_);
  size_ = 1;
  for (int i = 0; i < n_; ++i) {
    diag_[i] = hnf_[i][i];
    size_ *= diag_[i];
    if (size_ > 1000000) throw std::domain_error("too-large: residue ring exceeds 10^6 elements");
  }
  std::vector<long long> onev(n_, 0);
  onev[0] = 1;
  one_ = static_cast<int>(encode(reduce_vec(onev)));
}

int ResidueRing::mul(int a, int b) const {
  return static_cast<int>(encode(reduce_vec(O_->mul(decode(a), decode(b)))));
}

int ResidueRing::power(int a, long long k) const {
  int r = one_, b = a;
  while (k) {
    if (k & 1) r = mul(r, b);
    b = mul(b, b);
    k >>= 1;
  }
  return r;
}

bool ResidueRing::is_unit(int a) const {
  std::vector<long long> v = decode(a);
  for (const auto& P : prime_hnf_) {
    std::vector<long long> r = reduce_vec_by(P, v);
    if (std::all_of(r.begin(), r.end(), [](long long x) { return x == 0; })) return false;
  }
  return true;
}

long long ResidueRing::order_of(int a) const {
  long long k = 1;
  int cur = a;
  while (cur != one_) {
    cur = mul(cur, a);
    ++k;
    if (k > size_) throw std::domain_error("not-a-unit: element has no finite order");
  }
  return k;
}

int ResidueRing::inverse(int a) const { return power(a, order_of(a) - 1); }

const std::vector<int>& ResidueRing::units() const {
  if (units_.empty()) {
    for (long long i = 0; i < size_; ++i)
      if (is_unit(static_cast<int>(i))) units_.push_back(static_cast<int>(i));
  }
  return units_;
}

long long ResidueRing::unit_count() const { return static_cast<long long>(units().size()); }

long long ResidueRing::unit_count_formula() const {
  long long r = 1;
  for (const auto& [pf, k] : modulus_) {
    long long qf = 1;
    for (int i = 0; i < pf.f; ++i) qf *= pf.q;
    long long term = qf - 1;
    for (int i = 1; i < k; ++i) term *= qf;
    r *= term;
  }
  return r;
}

int ResidueRing::reduce_int(const std::vector<long long>& v) const {
  std::vector<long long> w(v);
  w.resize(n_, 0);
  return static_cast<int>(encode(reduce_vec(std::move(w))));
}

int ResidueRing::reduce(const Element& x) const {
  if (static_cast<int>(x.num.size()) != n_)
    throw std::invalid_argument("element has wrong degree for this order");
  int num = reduce_int(x.num);
  if (x.den == 1) return num;
  std::vector<long long> dv(n_, 0);
  dv[0] = x.den;
  int d = reduce_int(dv);
  if (!is_unit(d))
    throw std::domain_error("unit-not-coprime: denominator not invertible mod the modulus");
  return mul(num, inverse(d));
}

std::vector<int> ResidueRing::subgroup_closure(const std::vector<int>& gens) const {
  std::set<int> S = {one_};
  std::vector<int> frontier = {one_};
  while (!frontier.empty()) {
    int cur = frontier.back();
    frontier.pop_back();
    for (int g : gens) {
      int nx = mul(cur, g);
      if (S.insert(nx).second) frontier.push_back(nx);
    }
  }
  return std::vector<int>(S.begin(), S.end());
}

namespace {

// Invariant factors of an explicit finite abelian group given by a
// multiplication callback on {0..n-1}.
std::vector<long long> abelian_invariants_rec(int n, const std::function<int(int, int)>& mul,
                                              int one) {
  if (n == 1) return {};
  auto order_of = [&](int g) {
    long long k = 1;
    int cur = g;
    while (cur != one) {
      cur = mul(cur, g);
      ++k;
    }
    return k;
  };
  long long maxo = 0;
  int maxg = one;
  for (int g = 0; g < n; ++g) {
    long long o = order_of(g);
    if (o > maxo) {
      maxo = o;
      maxg = g;
    }
  }
  // cosets modulo <maxg>
  std::vector<int> cyc;
  int cur = one;
  do {
    cyc.push_back(cur);
    cur = mul(cur, maxg);
  } while (cur != one);
  std::vector<int> coset(n, -1);
  std::vector<int> reps;
  for (int g = 0; g < n; ++g) {
    if (coset[g] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(g);
    for (int h : cyc) coset[mul(g, h)] = id;
  }
  std::function<int(int, int)> qmul = [&](int a, int b) { return coset[mul(reps[a], reps[b])]; };
  auto rest = abelian_invariants_rec(static_cast<int>(reps.size()), qmul, coset[one]);
  rest.push_back(maxo);
  return rest;
}

}  // namespace

FiniteAbelianGroup ResidueRing::unit_group() const {
  const std::vector<int>& us = units();
  std::map<int, int> idx;
  for (size_t i = 0; i < us.size(); ++i) idx[us[i]] = static_cast<int>(i);
  std::function<int(int, int)> m = [&](int a, int b) { return idx.at(mul(us[a], us[b])); };
  FiniteAbelianGroup g;
  g.invariants = abelian_invariants_rec(static_cast<int>(us.size()), m, idx.at(one_));
  return g;
}

FiniteAbelianGroup ResidueRing::quotient_invariants(const std::vector<int>& subgroup) const {
  const std::vector<int>& us = units();
  std::map<int, int> coset;
  std::vector<int> reps;
  for (int u : us) {
    if (coset.count(u)) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(u);
    for (int s : subgroup) coset[mul(u, s)] = id;
  }
  std::function<int(int, int)> qmul = [&](int a, int b) {
    return coset.at(mul(reps[a], reps[b]));
  };
  FiniteAbelianGroup g;
  g.invariants = abelian_invariants_rec(static_cast<int>(reps.size()), qmul, coset.at(one_));
  return g;
}

std::string FiniteAbelianGroup::to_string() const {
  if (invariants.empty()) return "trivial";
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < invariants.size(); ++i) {
    if (i) os << ",";
    os << invariants[i];
  }
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------- operations

long long image_order(const MonogenicOrder& O, const PrimeFactor& p, const Element& u) {
  ResidueRing R(O, {{p, 1}});
  int x = R.reduce(u);
  if (!R.is_unit(x)) throw std::domain_error("not-a-unit: element lies in the prime");
  return R.order_of(x);
}

FiniteAbelianGroup ray_class_order(const MonogenicOrder& O, const ModulusSpec& modulus,
                                   const std::vector<Element>& global_units,
                                   long long class_number) {
  if (class_number != 1)
    throw std::invalid_argument("ray_class_order: requires certificate class number 1");
  ResidueRing R(O, modulus);
  std::vector<int> imgs;
  for (const Element& u : global_units) {
    int x = R.reduce(u);
    if (!R.is_unit(x)) throw std::domain_error("unit-not-coprime: global unit not invertible");
    imgs.push_back(x);
  }
  std::vector<int> S = R.subgroup_closure(imgs);
  return R.quotient_invariants(S);
}

bool filtration_generated(const MonogenicOrder& O, const PrimeFactor& p, const Element& u,
                          int i, int j) {
  if (!(0 <= i && i < j)) throw std::invalid_argument("filtration: need 0 <= i < j");
  ResidueRing R(O, {{p, j}});
  ResidueRing Ri(O, {{p, std::max(i, 1)}});
  int x = R.reduce(u);
  // elements of (1 + p^i)/(1 + p^j), realized inside (O/p^j)^*
  std::vector<int> level;
  for (int a : R.units()) {
    std::vector<long long> v = R.decode_public(a);
    Element lift{v, 1};
    if (i == 0 || Ri.reduce(lift) == Ri.one()) level.push_back(a);
  }
  bool member = std::find(level.begin(), level.end(), x) != level.end();
  if (!member) throw std::domain_error("not-in-level: u is not 1 mod p^i");
  std::vector<int> gen = R.subgroup_closure({x});
  for (int a : level)
    if (std::find(gen.begin(), gen.end(), a) == gen.end()) return false;
  return true;
}

}  // namespace nfcert
