#pragma once

#include <string>
#include <vector>

namespace nfcert {

// Permutation of {0..d-1}; p[i] is the image of i.
using Perm = std::vector<int>;

Perm perm_identity(int degree);
Perm perm_mul(const Perm& a, const Perm& b);  // apply b first, then a
Perm perm_inverse(const Perm& a);
int perm_order(const Perm& a);

// Permutation group given by generators; elements enumerated on demand.
class PermutationGroup {
 public:
  PermutationGroup(int degree, std::vector<Perm> gens);

  int degree() const { return degree_; }
  const std::vector<Perm>& elements() const;  // sorted, closed under product
  long long order() const;
  bool is_abelian() const;
  bool is_cyclic() const;

  // G >= G' >= G'' >= ... down to the stable (perfect) core, as element sets.
  std::vector<std::vector<Perm>> derived_series() const;
  std::vector<Perm> center() const;

  // Invariant factors of G/G'.
  std::vector<long long> abelianization() const;
  // Invariant factors of the multiset {order of g : g in G}.
  std::vector<int> element_order_multiset() const;

 private:
  int degree_;
  std::vector<Perm> gens_;
  mutable std::vector<Perm> elements_;
};

std::vector<Perm> subgroup_closure(int degree, const std::vector<Perm>& gens);
std::vector<Perm> commutator_subgroup(int degree, const std::vector<Perm>& elems);
bool set_is_cyclic(const std::vector<Perm>& elems);
bool quotient_is_cyclic(const std::vector<Perm>& g, const std::vector<Perm>& n);
std::vector<long long> quotient_abelian_invariants(const std::vector<Perm>& g,
                                                   const std::vector<Perm>& n);

struct CatalogEntry {
  int order = 0;
  int index = 0;
  std::string label;
  PermutationGroup group;
};

// All isomorphism classes of order <= 16; validated at load time against the
// per-order class counts (1,1,1,2,1,2,1,5,2,2,1,5,1,2,1,14) and pairwise
// distinguished by invariant fingerprints.
struct GroupCatalog {
  std::vector<CatalogEntry> entries;
};

GroupCatalog load_catalog(const std::string& path);

struct CheckVerdict {
  std::string label;
  bool applicable = false;  // the hypothesis held, so the conclusion was tested
  bool pass = true;
};

// G/Z(G) cyclic => G abelian, for every catalog group.
std::vector<CheckVerdict> center_cyclic_implies_abelian_check(const GroupCatalog& cat);

// Taussky: a 2-group with [G:G'] = 4 has cyclic G'.
std::vector<CheckVerdict> taussky_check(const GroupCatalog& cat);

enum class DeductionChain {
  // |G'| <= 7 and G'/G'' cyclic of order <= 2  =>  G'' trivial
  derived_step_collapses,
  // G abelian  =>  G' trivial
  abelian_has_trivial_derived,
  // |G| <= 14, G' cyclic, G/G' cyclic of order 2  =>  G has a cyclic normal
  // subgroup with cyclic quotient (metacyclic structure)
  metacyclic_structure,
};

struct DeductionResult {
  bool no_counterexample = true;
  std::string counterexample;  // label, empty if none
  int scanned = 0;
  int matched = 0;  // groups satisfying the hypothesis
};

DeductionResult deduction_chain_check(const GroupCatalog& cat, DeductionChain chain);

}  // namespace nfcert
