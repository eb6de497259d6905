#include "nfcert/discbounds.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

namespace nfcert {

RadicalNumber rd_from_conductors(const CharacterConductorSet& c) {
  if (static_cast<int>(c.conductors.size()) != c.degree)
    throw std::invalid_argument("conductor set: entry count differs from degree");
  if (std::find(c.conductors.begin(), c.conductors.end(), 1L) == c.conductors.end())
    throw std::invalid_argument("conductor set: missing trivial character");
  RadicalNumber prod;
  for (long f : c.conductors) {
    if (f < 1) throw std::invalid_argument("conductor set: nonpositive conductor");
    prod = prod * RadicalNumber::from_integer(f);
  }
  return prod.pow(mpq_class(1, c.degree));
}

namespace {

// Conductors of all characters of the cyclic (Z/p^k)^*, p odd prime.
std::vector<long> odd_component_conductors(long p, int k) {
  long phi = (p - 1);
  long pk = p;
  for (int i = 1; i < k; ++i) {
    phi *= p;
    pk *= p;
  }
  std::vector<long> out;
  for (long c = 0; c < phi; ++c) {
    long ord = phi / std::gcd(phi, c);
    if (ord == 1) {
      out.push_back(1);
      continue;
    }
    long ps = p, phis = p - 1;
    while (phis % ord != 0) {  // smallest s with ord | phi(p^s)
      ps *= p;
      phis *= p;
    }
    out.push_back(ps);
  }
  return out;
}

// Conductors of all characters of (Z/2^k)^*.
std::vector<long> two_component_conductors(int k) {
  if (k <= 1) return {1};
  if (k == 2) return {1, 4};
  // <-1> x <5>, the 5-part cyclic of order 2^{k-2}
  long half = 1L << (k - 2);
  std::vector<long> out;
  for (int eps = 0; eps < 2; ++eps)
    for (long c = 0; c < half; ++c) {
      long ord = half / std::gcd(half, c);
      if (ord > 1) {
        long a = 0;
        while ((1L << a) < ord) ++a;  // ord = 2^a
        out.push_back(1L << (a + 2));
      } else {
        out.push_back(eps ? 4 : 1);
      }
    }
  return out;
}

}  // namespace

CharacterConductorSet cyclotomic_conductors(long m) {
  if (m < 1 || m > 10000) throw std::invalid_argument("cyclotomic_conductors: m out of range");
  std::vector<std::vector<long>> components;
  long rest = m;
  for (long p = 2; p <= rest; ++p) {
    if (rest % p) continue;
    int k = 0;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    components.push_back(p == 2 ? two_component_conductors(k) : odd_component_conductors(p, k));
  }
  std::vector<long> conductors = {1};
  for (const auto& comp : components) {
    std::vector<long> next;
    for (long a : conductors)
      for (long b : comp) next.push_back(a * b);
    conductors = next;
  }
  std::sort(conductors.begin(), conductors.end());
  CharacterConductorSet out;
  out.degree = static_cast<int>(conductors.size());
  out.conductors = conductors;
  return out;
}

RadicalNumber rd_tower(const RadicalNumber& base_rd, int base_deg, int rel_deg,
                       const RadicalNumber& norm_rel_disc) {
  if (base_deg < 1 || rel_deg < 1) throw std::invalid_argument("rd_tower: degrees must be >= 1");
  if (!norm_rel_disc.is_positive_integer())
    throw std::invalid_argument("rd_tower: relative discriminant norm must be a positive integer");
  return norm_rel_disc.pow(mpq_class(1, static_cast<long>(base_deg) * rel_deg)) * base_rd;
}

DiscriminantBudget budget(long l, long p, BudgetMode mode) {
  if (l == p) throw std::invalid_argument("budget: l and p must be distinct");
  DiscriminantBudget b;
  b.l = l;
  b.p = p;
  b.mode = mode;
  mpq_class le = (mode == BudgetMode::semistable) ? mpq_class(p - 1, p) : mpq_class(1);
  b.value = RadicalNumber::from_prime_power(l, le) *
            RadicalNumber::from_prime_power(p, mpq_class(p, p - 1));
  return b;
}

std::optional<int> degree_bound(const OdlyzkoTable& table, const RadicalNumber& delta) {
  if (table.rows.empty()) throw std::invalid_argument("degree_bound: empty table");
  if (radical_cmp(delta, RadicalNumber::one()) != Ordering::greater)
    throw std::invalid_argument("degree_bound: delta must exceed 1");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, table.precision);
  RadicalNumber denom = RadicalNumber::from_integer(scale);
  for (const OdlyzkoRow& row : table.rows) {
    // Row excludes degree n when b(n) >= trunc(delta), i.e. delta < b(n)+ulp.
    RadicalNumber cutoff =
        RadicalNumber::from_integer(static_cast<long>(row.scaled + 1)) / denom;
    if (radical_cmp(delta, cutoff) == Ordering::less) return row.degree - 1;
  }
  return std::nullopt;  // table-exhausted: unbounded by this table
}

OdlyzkoTable load_odlyzko(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("odlyzko table: cannot open " + path);
  struct RawRow {
    int degree;
    long long intpart;
    std::string frac;
  };
  std::vector<RawRow> raw;
  std::string line;
  int lineno = 0;
  size_t maxfrac = 0;
  auto fail = [&](const std::string& why) {
    throw std::runtime_error("odlyzko table: line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream ls(line);
    RawRow r;
    std::string bound;
    if (!(ls >> r.degree >> bound)) fail("expected `degree bound`");
    std::string trailing;
    if (ls >> trailing) fail("unexpected trailing token '" + trailing + "'");
    if (r.degree < 1) fail("degree must be positive");
    size_t dot = bound.find('.');
    std::string ip = dot == std::string::npos ? bound : bound.substr(0, dot);
    r.frac = dot == std::string::npos ? "" : bound.substr(dot + 1);
    if (ip.empty() || !std::all_of(ip.begin(), ip.end(), ::isdigit) ||
        !std::all_of(r.frac.begin(), r.frac.end(), ::isdigit))
      fail("malformed bound '" + bound + "'");
    r.intpart = std::stoll(ip);
    maxfrac = std::max(maxfrac, r.frac.size());
    raw.push_back(r);
  }
  if (raw.empty()) throw std::runtime_error("odlyzko table: no data rows in " + path);
  OdlyzkoTable t;
  t.precision = static_cast<int>(maxfrac);
  long long pow10 = 1;
  for (int i = 0; i < t.precision; ++i) pow10 *= 10;
  for (const RawRow& r : raw) {
    std::string frac = r.frac + std::string(maxfrac - r.frac.size(), '0');
    long long scaled = r.intpart * pow10 + (frac.empty() ? 0 : std::stoll(frac));
    t.rows.push_back({r.degree, scaled});
  }
  for (size_t i = 1; i < t.rows.size(); ++i) {
    if (t.rows[i].degree <= t.rows[i - 1].degree)
      throw std::runtime_error("odlyzko table: degrees not strictly increasing at row " +
                               std::to_string(i + 1));
    if (t.rows[i].scaled < t.rows[i - 1].scaled)
      throw std::runtime_error("odlyzko table: bound decreases at degree " +
                               std::to_string(t.rows[i].degree));
  }
  return t;
}

}  // namespace nfcert
