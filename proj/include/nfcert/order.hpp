#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nfcert {

using Poly = std::vector<long long>;  // coefficients, ascending degree

// ---- polynomial utilities over Z and F_q (q a word-sized prime) ----

int poly_degree(const Poly& f);
Poly poly_mod_q(const Poly& f, long long q);
Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& f, long long q);
Poly cyclotomic_polynomial(long m);

// Full factorization of the monic image of f over F_q:
// list of (irreducible monic factor, multiplicity), deterministic order.
std::vector<std::pair<Poly, int>> factor_mod_q(const Poly& f, long long q);

// ---- element of the field of fractions of Z[t]/(f): rational coefficients --

struct Element {
  std::vector<long long> num;  // ascending, length = degree of the order
  long long den = 1;           // positive common denominator
};

// Parses `c0 + c1*t + c2*t^2 + ...` with integer or `a/b` coefficients.
Element parse_element(const std::string& s, int degree);

// ---- monogenic orders ----

struct PrimeFactor {
  long long q = 0;  // rational prime below
  int e = 0;        // ramification index
  int f = 0;        // residue degree
  int g = 0;        // number of primes over q
  Poly genpoly;     // prime is (q, genpoly(theta)); coefficients in [0,q)
};

class MonogenicOrder {
 public:
  // General order; f must be monic and irreducible (verified).
  // index_obstruction: a multiple of [O_K : Z[theta]] (0 = not supplied).
  MonogenicOrder(Poly f, std::string label, long long index_obstruction);

  // Cyclotomic order Z[zeta_m]; f is computed and trusted irreducible.
  static MonogenicOrder cyclotomic(long m, std::string label = "");

  const Poly& poly() const { return f_; }
  int degree() const { return n_; }
  const std::string& label() const { return label_; }
  long cyclotomic_conductor() const { return m_; }  // 0 if not cyclotomic
  long long index_obstruction() const { return index_obstruction_; }

  std::vector<long long> mul(const std::vector<long long>& a,
                             const std::vector<long long>& b) const;

 private:
  MonogenicOrder() = default;
  Poly f_;
  int n_ = 0;
  std::string label_;
  long m_ = 0;
  long long index_obstruction_ = 0;
};

// Splits q in O.  Cyclotomic orders use the splitting law as a cross-check of
// the mod-q factorization; other orders refuse primes dividing the declared
// index obstruction ("index-obstructed").
std::vector<PrimeFactor> factor_prime(const MonogenicOrder& O, long long q);

// ---- finite abelian groups ----

struct FiniteAbelianGroup {
  std::vector<long long> invariants;  // d1 | d2 | ... ; empty = trivial
  long long order() const {
    long long r = 1;
    for (long long d : invariants) r *= d;
    return r;
  }
  bool trivial() const { return invariants.empty(); }
  bool cyclic() const { return invariants.size() <= 1; }
  std::string to_string() const;
};

// ---- residue rings O/m by exhaustive enumeration ----

using ModulusSpec = std::vector<std::pair<PrimeFactor, int>>;

class ResidueRing {
 public:
  // |O/m| must not exceed 10^6 ("too-large" otherwise).
  ResidueRing(const MonogenicOrder& O, const ModulusSpec& modulus);

  long long size() const { return size_; }
  long long unit_count() const;
  const std::vector<int>& units() const;  // indices of unit elements

  int one() const { return one_; }
  int mul(int a, int b) const;
  int power(int a, long long k) const;
  long long order_of(int a) const;  // multiplicative order (a must be a unit)
  int inverse(int a) const;
  bool is_unit(int a) const;

  // Reduces an element with rational coefficients; denominator must be
  // invertible mod the modulus ("unit-not-coprime" otherwise).
  int reduce(const Element& x) const;
  int reduce_int(const std::vector<long long>& v) const;

  // Invariant factors of the full unit group.
  FiniteAbelianGroup unit_group() const;

  // The prime-power formula prod (q^f - 1) q^{f(k-1)}; cross-checks the
  // enumeration.
  long long unit_count_formula() const;

  // Canonical coordinate vector of a ring element (mixed-radix index inverse).
  std::vector<long long> decode_public(long long idx) const { return decode(idx); }

  std::vector<int> subgroup_closure(const std::vector<int>& gens) const;
  FiniteAbelianGroup quotient_invariants(const std::vector<int>& subgroup) const;

  const MonogenicOrder& order() const { return *O_; }

 private:
  const MonogenicOrder* O_;
  ModulusSpec modulus_;
  int n_;
  long long size_;
  int one_;
  std::vector<std::vector<long long>> hnf_;          // modulus lattice, row HNF
  std::vector<long long> diag_;
  std::vector<std::vector<std::vector<long long>>> prime_hnf_;  // one per factor
  mutable std::vector<int> units_;  // lazily enumerated
  std::vector<long long> reduce_vec(std::vector<long long> v) const;
  static std::vector<long long> reduce_vec_by(
      const std::vector<std::vector<long long>>& H, std::vector<long long> v);
  long long encode(const std::vector<long long>& v) const;
  std::vector<long long> decode(long long idx) const;
};

// Multiplicative order of the image of u in the residue field O/p.
// Throws "not-a-unit" if u lies in p.
long long image_order(const MonogenicOrder& O, const PrimeFactor& p, const Element& u);

// (O/m)^* modulo the subgroup generated by the global unit images.
// Requires class_number == 1 (certificate-validated input).
FiniteAbelianGroup ray_class_order(const MonogenicOrder& O, const ModulusSpec& modulus,
                                   const std::vector<Element>& global_units,
                                   long long class_number);

// True iff the image of u generates all of (1 + p^i)/(1 + p^j); requires
// i < j and u = 1 mod p^i ("not-in-level" otherwise).
bool filtration_generated(const MonogenicOrder& O, const PrimeFactor& p, const Element& u,
                          int i, int j);

}  // namespace nfcert
