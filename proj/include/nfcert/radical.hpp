#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace nfcert {

// Exact positive real of the form prod p_i^{e_i} with p_i prime and e_i a
// nonzero rational.  The map is the canonical form: keys strictly increasing,
// no zero exponents.
class RadicalNumber {
 public:
  using FactorMap = std::map<mpz_class, mpq_class>;

  RadicalNumber() = default;  // the number 1

  static RadicalNumber one() { return RadicalNumber(); }

  // Factors n by trial division.  Throws for n <= 0 or if a cofactor above
  // the factoring bound (1e9) remains.
  static RadicalNumber from_integer(const mpz_class& n);

  static RadicalNumber from_prime_power(const mpz_class& p, const mpq_class& e);

  // Grammar: `p1^e1 * p2^e2 * ...`, exponent `a/b` or `a` (omitted = 1),
  // `1` for the empty product.  Round-trips with to_string().
  static RadicalNumber parse(const std::string& s);

  std::string to_string() const;

  const FactorMap& factors() const { return factors_; }

  RadicalNumber operator*(const RadicalNumber& o) const;
  RadicalNumber operator/(const RadicalNumber& o) const;
  RadicalNumber pow(const mpq_class& e) const;

  bool is_one() const { return factors_.empty(); }

  // True iff every exponent is a nonnegative integer.
  bool is_positive_integer() const;
  mpz_class to_integer() const;  // requires is_positive_integer()

  bool operator==(const RadicalNumber& o) const { return factors_ == o.factors_; }

 private:
  FactorMap factors_;
  void set(const mpz_class& p, const mpq_class& e);
};

enum class Ordering { less, equal, greater };

// Exact three-way comparison by clearing exponents to a common denominator
// and comparing integers.  Never uses floating point.
Ordering radical_cmp(const RadicalNumber& a, const RadicalNumber& b);

enum class DecimalMode { nearest, truncate };

// Decimal expansion of a to `digits` significant digits (1 <= digits <= 50).
// nearest: correctly rounded (ties to even); truncate: rounded toward zero.
std::string radical_decimal(const RadicalNumber& a, int digits,
                            DecimalMode mode = DecimalMode::nearest);

struct PadicPowerClass {
  long p = 0;            // the prime, also the power being tested
  long k = 0;            // exponent of interest (= p)
  mpz_class u;           // input, coprime to p
  bool verdict = false;  // is u a p-th power in Z_p
  std::optional<long> witness;   // w with w^p = u mod the deciding modulus
  long residue_class = 0;        // u mod 8 (p=2), u mod 9 (p=3), u mod p^2 else
};

// p odd: verdict iff u^{p-1} = 1 mod p^2;  p = 2: verdict iff u = 1 mod 8.
// Throws if p | u.
PadicPowerClass padic_power_class(const mpz_class& u, long p);

}  // namespace nfcert
