#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nfcert/radical.hpp"

namespace nfcert {

// One conductor per character of an abelian field, trivial character included.
struct CharacterConductorSet {
  int degree = 0;
  std::vector<long> conductors;  // exactly `degree` entries, at least one 1
};

struct OdlyzkoRow {
  int degree = 0;
  long long scaled = 0;  // bound * 10^precision
};

// Unconditional root-discriminant lower bounds b(n); degrees strictly
// increasing, bounds nondecreasing.
struct OdlyzkoTable {
  int precision = 0;  // decimal places of the bound column
  std::vector<OdlyzkoRow> rows;
};

enum class BudgetMode { semistable, tame };

struct DiscriminantBudget {
  long l = 0;
  long p = 0;
  BudgetMode mode = BudgetMode::semistable;
  RadicalNumber value;
};

// (prod conductors)^{1/n}; "non-factorable" if a conductor resists trial
// division.
RadicalNumber rd_from_conductors(const CharacterConductorSet& c);

// All character conductors of (Z/m)^*, via the cyclic decomposition of each
// prime-power component.  m <= 10^4.
CharacterConductorSet cyclotomic_conductors(long m);

// (norm_rel_disc)^{1/(n*m)} * base_rd, i.e. |d_L| = N(d_{L/K}) |d_K|^m.
RadicalNumber rd_tower(const RadicalNumber& base_rd, int base_deg, int rel_deg,
                       const RadicalNumber& norm_rel_disc);

// semistable: l^{1-1/p} p^{1+1/(p-1)};  tame: l p^{1+1/(p-1)}.  Requires l != p.
DiscriminantBudget budget(long l, long p, BudgetMode mode);

// Largest degree not excluded by the table for root discriminants below delta:
// the first row with b(n) >= delta (delta truncated at table precision) caps
// the degree at n-1.  nullopt = unbounded by this table.
std::optional<int> degree_bound(const OdlyzkoTable& table, const RadicalNumber& delta);

// Parses `#` comments then `degree<ws>bound` rows; parse errors carry line
// numbers; rejects non-monotone tables.
OdlyzkoTable load_odlyzko(const std::string& path);

}  // namespace nfcert
