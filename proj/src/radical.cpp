#include "nfcert/radical.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace nfcert {

void RadicalNumber::set(const mpz_class& p, const mpq_class& e) {
  if (e == 0) {
    factors_.erase(p);
  } else {
    factors_[p] = e;
  }
}

RadicalNumber RadicalNumber::from_integer(const mpz_class& n) {
  if (n <= 0) throw std::invalid_argument("radical: nonpositive integer");
  RadicalNumber r;
  mpz_class m = n;
  for (mpz_class d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      long e = 0;
      while (m % d == 0) {
        m /= d;
        ++e;
      }
      r.set(d, e);
    }
    if (d > 31623) throw std::domain_error("non-factorable: cofactor above bound");
  }
  if (m > 1) r.set(m, 1);
  return r;
}

RadicalNumber RadicalNumber::from_prime_power(const mpz_class& p, const mpq_class& e) {
  if (p < 2 || !mpz_probab_prime_p(p.get_mpz_t(), 40))
    throw std::invalid_argument("radical: base is not prime");
  RadicalNumber r;
  mpq_class ec = e;
  ec.canonicalize();
  r.set(p, ec);
  return r;
}

RadicalNumber RadicalNumber::operator*(const RadicalNumber& o) const {
  RadicalNumber r = *this;
  for (const auto& [p, e] : o.factors_) {
    mpq_class s = e;
    auto it = r.factors_.find(p);
    if (it != r.factors_.end()) s += it->second;
    r.set(p, s);
  }
  return r;
}

RadicalNumber RadicalNumber::operator/(const RadicalNumber& o) const {
  return *this * o.pow(-1);
}

RadicalNumber RadicalNumber::pow(const mpq_class& e) const {
  RadicalNumber r;
  if (e == 0) return r;
  for (const auto& [p, pe] : factors_) {
    mpq_class s = pe * e;
    s.canonicalize();
    r.set(p, s);
  }
  return r;
}

bool RadicalNumber::is_positive_integer() const {
  for (const auto& [p, e] : factors_)
    if (e.get_den() != 1 || e < 0) return false;
  return true;
}

mpz_class RadicalNumber::to_integer() const {
  if (!is_positive_integer()) throw std::domain_error("radical: not an integer");
  mpz_class r = 1;
  for (const auto& [p, e] : factors_) {
    mpz_class pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), e.get_num().get_ui());
    r *= pk;
  }
  return r;
}

std::string RadicalNumber::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, e] : factors_) {
    if (!first) os << " * ";
    first = false;
    os << p.get_str();
    if (e != 1) os << "^" << e.get_str();
  }
  return os.str();
}

RadicalNumber RadicalNumber::parse(const std::string& s) {
  RadicalNumber r;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto read_int = [&]() -> mpz_class {
    skip_ws();
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      throw std::invalid_argument("radical parse: expected integer at position " +
                                  std::to_string(start) + " in '" + s + "'");
    return mpz_class(s.substr(start, i - start));
  };
  skip_ws();
  if (i >= s.size()) throw std::invalid_argument("radical parse: empty string");
  bool first = true;
  while (true) {
    skip_ws();
    if (i >= s.size()) break;
    if (!first) {
      if (s[i] != '*') throw std::invalid_argument("radical parse: expected '*'");
      ++i;
    }
    first = false;
    mpz_class base = read_int();
    mpq_class exp = 1;
    skip_ws();
    if (i < s.size() && s[i] == '^') {
      ++i;
      mpz_class num = read_int();
      skip_ws();
      mpz_class den = 1;
      if (i < s.size() && s[i] == '/') {
        ++i;
        den = read_int();
      }
      if (den <= 0) throw std::invalid_argument("radical parse: bad exponent denominator");
      exp = mpq_class(num, den);
      exp.canonicalize();
    }
    if (base == 1) {
      continue;  // the literal 1, only valid alone or as a no-op factor
    }
    if (base < 2 || !mpz_probab_prime_p(base.get_mpz_t(), 40))
      throw std::invalid_argument("radical parse: base " + base.get_str() + " is not prime");
    mpq_class cur = exp;
    auto it = r.factors_.find(base);
    if (it != r.factors_.end()) cur += it->second;
    r.set(base, cur);
  }
  return r;
}

namespace {

// Writes a/b as (N, D) with a = prod p^{d e} over positive exponents times
// denominator parts moved across, for a common exponent denominator d.
struct ClearedQuotient {
  mpz_class num = 1;
  mpz_class den = 1;
  unsigned long d = 1;  // the common exponent denominator
};

ClearedQuotient clear_exponents(const RadicalNumber& a) {
  mpz_class lcm = 1;
  for (const auto& [p, e] : a.factors())
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.get_den().get_mpz_t());
  ClearedQuotient q;
  q.d = lcm.get_ui();
  for (const auto& [p, e] : a.factors()) {
    mpq_class ed = e * mpq_class(lcm);
    ed.canonicalize();
    mpz_class k = ed.get_num();  // integer now
    mpz_class pk;
    if (k > 0) {
      mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), mpz_class(k).get_ui());
      q.num *= pk;
    } else {
      mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), mpz_class(-k).get_ui());
      q.den *= pk;
    }
  }
  return q;
}

}  // namespace

Ordering radical_cmp(const RadicalNumber& a, const RadicalNumber& b) {
  ClearedQuotient q = clear_exponents(a / b);
  int c = cmp(q.num, q.den);
  if (c < 0) return Ordering::less;
  if (c > 0) return Ordering::greater;
  return Ordering::equal;
}

namespace {

// v^d = num/den with v > 0.  Compares v against x = m * 10^s exactly:
// sign of v - m*10^s.
int cmp_scaled(const ClearedQuotient& q, const mpz_class& m, long s) {
  if (m <= 0) return 1;
  // v >= m*10^s  <=>  num * 10^{-sd} >= m^d * den  (s < 0)
  //              <=>  num >= m^d * 10^{sd} * den   (s >= 0)
  mpz_class md;
  mpz_pow_ui(md.get_mpz_t(), m.get_mpz_t(), q.d);
  mpz_class lhs = q.num, rhs = md * q.den;
  mpz_class ten10;
  if (s >= 0) {
    mpz_ui_pow_ui(ten10.get_mpz_t(), 10, static_cast<unsigned long>(s) * q.d);
    rhs *= ten10;
  } else {
    mpz_ui_pow_ui(ten10.get_mpz_t(), 10, static_cast<unsigned long>(-s) * q.d);
    lhs *= ten10;
  }
  return cmp(lhs, rhs);
}

}  // namespace

std::string radical_decimal(const RadicalNumber& a, int digits, DecimalMode mode) {
  if (digits < 1 || digits > 50) throw std::invalid_argument("radical_decimal: digits out of range");
  ClearedQuotient q = clear_exponents(a);
  // Decimal exponent E: 10^E <= v < 10^{E+1}.
  long E = 0;
  while (cmp_scaled(q, 1, E) < 0) --E;
  while (cmp_scaled(q, 1, E + 1) >= 0) ++E;
  // v = m * 10^{E-digits+1} with m in [10^{digits-1}, 10^digits).
  long s = E - digits + 1;
  mpz_class lo, hi;
  mpz_ui_pow_ui(lo.get_mpz_t(), 10, digits - 1);
  mpz_ui_pow_ui(hi.get_mpz_t(), 10, digits);
  // Largest m with m*10^s <= v.
  mpz_class a_ = lo, b_ = hi;
  while (a_ < b_) {  // invariant: a_*10^s <= v, b_ is an exclusive upper bound
    mpz_class mid = (a_ + b_ + 1) / 2;
    if (cmp_scaled(q, mid, s) >= 0)
      a_ = mid;
    else
      b_ = mid - 1;
  }
  mpz_class m = a_;
  if (mode == DecimalMode::nearest) {
    // Compare v against (m + 1/2)*10^s, i.e. (2m+1)*10^s / 2.
    ClearedQuotient half = q;
    half.num *= mpz_class(1) << half.d;  // v' = 2v, compare against (2m+1)*10^s
    int c = cmp_scaled(half, 2 * m + 1, s);
    if (c > 0 || (c == 0 && mpz_odd_p(m.get_mpz_t()))) m += 1;
    if (m == hi) {  // carried into one more digit
      m = lo;
      ++E;
      ++s;
    }
  }
  std::string ds = m.get_str();
  std::string out;
  if (E >= digits) {
    out = ds + std::string(E - digits + 1, '0');
  } else if (E >= 0) {
    out = ds.substr(0, E + 1);
    if (E + 1 < digits) out += "." + ds.substr(E + 1);
  } else {
    out = "0." + std::string(-E - 1, '0') + ds;
  }
  return out;
}

PadicPowerClass padic_power_class(const mpz_class& u, long p) {
  if (p < 2) throw std::invalid_argument("padic_power_class: p must be prime");
  if (u % p == 0) throw std::invalid_argument("padic_power_class: u not coprime to p");
  PadicPowerClass r;
  r.p = p;
  r.k = p;
  r.u = u;
  long modulus;
  if (p == 2) {
    modulus = 8;
  } else {
    modulus = p * p;
  }
  mpz_class um = u % modulus;
  if (um < 0) um += modulus;
  long ur = um.get_si();
  r.residue_class = (p == 3) ? (ur % 9) : ur;
  if (p == 2) {
    r.verdict = (ur % 8 == 1);
  } else {
    // u^{p-1} mod p^2
    mpz_class t;
    mpz_class mm(modulus);
    mpz_powm_ui(t.get_mpz_t(), um.get_mpz_t(), p - 1, mm.get_mpz_t());
    r.verdict = (t == 1);
  }
  if (r.verdict) {
    for (long w = 1; w < modulus; ++w) {
      mpz_class t;
      mpz_class wz(w), mm(modulus);
      mpz_powm_ui(t.get_mpz_t(), wz.get_mpz_t(), p, mm.get_mpz_t());
      if (t == um % modulus) {
        r.witness = w;
        break;
      }
    }
  }
  return r;
}

}  // namespace nfcert
