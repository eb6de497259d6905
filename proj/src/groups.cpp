#include "nfcert/groups.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nfcert {

Perm perm_identity(int degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_mul(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm perm_inverse(const Perm& a) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
  return r;
}

int perm_order(const Perm& a) {
  Perm id = perm_identity(static_cast<int>(a.size()));
  Perm cur = a;
  int k = 1;
  while (cur != id) {
    cur = perm_mul(cur, a);
    ++k;
  }
  return k;
}

std::vector<Perm> subgroup_closure(int degree, const std::vector<Perm>& gens) {
  std::set<Perm> seen = {perm_identity(degree)};
  std::vector<Perm> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    Perm cur = frontier.back();
    frontier.pop_back();
    for (const Perm& g : gens) {
      Perm nx = perm_mul(cur, g);
      if (seen.insert(nx).second) frontier.push_back(nx);
    }
  }
  return std::vector<Perm>(seen.begin(), seen.end());
}

std::vector<Perm> commutator_subgroup(int degree, const std::vector<Perm>& elems) {
  std::vector<Perm> comms;
  for (const Perm& a : elems)
    for (const Perm& b : elems)
      comms.push_back(perm_mul(perm_mul(perm_inverse(a), perm_inverse(b)), perm_mul(a, b)));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return subgroup_closure(degree, comms);
}

bool set_is_cyclic(const std::vector<Perm>& elems) {
  for (const Perm& g : elems)
    if (perm_order(g) == static_cast<int>(elems.size())) return true;
  return elems.size() == 1;
}

namespace {

// Coset decomposition of g modulo the (normal) subgroup n: returns coset ids
// per element of g plus representative indices.
struct Cosets {
  std::map<Perm, int> id;
  std::vector<Perm> reps;
};

Cosets cosets_of(const std::vector<Perm>& g, const std::vector<Perm>& n) {
  Cosets c;
  for (const Perm& x : g) {
    if (c.id.count(x)) continue;
    int k = static_cast<int>(c.reps.size());
    c.reps.push_back(x);
    for (const Perm& h : n) c.id[perm_mul(x, h)] = k;
  }
  return c;
}

std::vector<long long> abelian_invariants_table(int size,
                                                const std::vector<std::vector<int>>& mul,
                                                int one) {
  if (size == 1) return {};
  auto order_of = [&](int g) {
    long long k = 1;
    int cur = g;
    while (cur != one) {
      cur = mul[cur][g];
      ++k;
    }
    return k;
  };
  long long maxo = 0;
  int maxg = one;
  for (int g = 0; g < size; ++g) {
    long long o = order_of(g);
    if (o > maxo) {
      maxo = o;
      maxg = g;
    }
  }
  std::vector<int> cyc;
  int cur = one;
  do {
    cyc.push_back(cur);
    cur = mul[cur][maxg];
  } while (cur != one);
  std::vector<int> coset(size, -1);
  std::vector<int> reps;
  for (int g = 0; g < size; ++g) {
    if (coset[g] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(g);
    for (int h : cyc) coset[mul[g][h]] = id;
  }
  int qn = static_cast<int>(reps.size());
  std::vector<std::vector<int>> qmul(qn, std::vector<int>(qn));
  for (int a = 0; a < qn; ++a)
    for (int b = 0; b < qn; ++b) qmul[a][b] = coset[mul[reps[a]][reps[b]]];
  auto rest = abelian_invariants_table(qn, qmul, coset[one]);
  rest.push_back(maxo);
  return rest;
}

}  // namespace

bool quotient_is_cyclic(const std::vector<Perm>& g, const std::vector<Perm>& n) {
  Cosets c = cosets_of(g, n);
  int qn = static_cast<int>(c.reps.size());
  for (const Perm& x : g) {
    // order of the coset of x
    Perm cur = x;
    int k = 1;
    while (c.id.at(cur) != c.id.at(perm_identity(static_cast<int>(x.size())))) {
      cur = perm_mul(cur, x);
      ++k;
    }
    if (k == qn) return true;
  }
  return qn == 1;
}

std::vector<long long> quotient_abelian_invariants(const std::vector<Perm>& g,
                                                   const std::vector<Perm>& n) {
  Cosets c = cosets_of(g, n);
  int qn = static_cast<int>(c.reps.size());
  std::vector<std::vector<int>> mul(qn, std::vector<int>(qn));
  for (int a = 0; a < qn; ++a)
    for (int b = 0; b < qn; ++b) mul[a][b] = c.id.at(perm_mul(c.reps[a], c.reps[b]));
  int one = c.id.at(perm_identity(static_cast<int>(g[0].size())));
  return abelian_invariants_table(qn, mul, one);
}

PermutationGroup::PermutationGroup(int degree, std::vector<Perm> gens)
    : degree_(degree), gens_(std::move(gens)) {
  for (const Perm& g : gens_) {
    if (static_cast<int>(g.size()) != degree)
      throw std::invalid_argument("permutation group: generator degree mismatch");
    Perm s = g;
    std::sort(s.begin(), s.end());
    if (s != perm_identity(degree))
      throw std::invalid_argument("permutation group: generator is not a permutation");
  }
}

const std::vector<Perm>& PermutationGroup::elements() const {
  if (elements_.empty()) {
    elements_ = subgroup_closure(degree_, gens_);
    if (elements_.size() > 10000)
      throw std::domain_error("permutation group: order exceeds 10^4");
  }
  return elements_;
}

long long PermutationGroup::order() const { return static_cast<long long>(elements().size()); }

bool PermutationGroup::is_abelian() const {
  const auto& es = elements();
  for (const Perm& a : es)
    for (const Perm& b : es)
      if (perm_mul(a, b) != perm_mul(b, a)) return false;
  return true;
}

bool PermutationGroup::is_cyclic() const { return set_is_cyclic(elements()); }

std::vector<std::vector<Perm>> PermutationGroup::derived_series() const {
  std::vector<std::vector<Perm>> series = {elements()};
  while (true) {
    std::vector<Perm> next = commutator_subgroup(degree_, series.back());
    if (next.size() == series.back().size()) break;
    series.push_back(next);
    if (next.size() == 1) break;
  }
  return series;
}

std::vector<Perm> PermutationGroup::center() const {
  const auto& es = elements();
  std::vector<Perm> z;
  for (const Perm& a : es) {
    bool central = true;
    for (const Perm& b : es)
      if (perm_mul(a, b) != perm_mul(b, a)) {
        central = false;
        break;
      }
    if (central) z.push_back(a);
  }
  return z;
}

std::vector<long long> PermutationGroup::abelianization() const {
  return quotient_abelian_invariants(elements(), commutator_subgroup(degree_, elements()));
}

std::vector<int> PermutationGroup::element_order_multiset() const {
  std::vector<int> orders;
  for (const Perm& g : elements()) orders.push_back(perm_order(g));
  std::sort(orders.begin(), orders.end());
  return orders;
}

namespace {

Perm parse_cycles(const std::string& s, int* max_point) {
  // cycle notation over 1-based points, e.g. "(1 2 3)(4 5)"; "()" = identity
  std::vector<std::vector<int>> cycles;
  size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    if (s[i] != '(') throw std::runtime_error("catalog: expected '(' in '" + s + "'");
    ++i;
    std::vector<int> cyc;
    while (i < s.size() && s[i] != ')') {
      if (std::isspace(static_cast<unsigned char>(s[i]))) {
        ++i;
        continue;
      }
      size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == start) throw std::runtime_error("catalog: bad cycle token in '" + s + "'");
      int pt = std::stoi(s.substr(start, i - start));
      if (pt < 1) throw std::runtime_error("catalog: points are 1-based");
      cyc.push_back(pt - 1);
      *max_point = std::max(*max_point, pt);
    }
    if (i >= s.size()) throw std::runtime_error("catalog: unterminated cycle in '" + s + "'");
    ++i;  // ')'
    if (!cyc.empty()) cycles.push_back(cyc);
  }
  int d = std::max(*max_point, 1);
  Perm p = perm_identity(d);
  for (const auto& cyc : cycles)
    for (size_t k = 0; k < cyc.size(); ++k) p[cyc[k]] = cyc[(k + 1) % cyc.size()];
  return p;
}

}  // namespace

GroupCatalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("catalog: cannot open " + path);
  GroupCatalog cat;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream ls(line);
    std::string order_s, index_s, label, gens_s;
    if (!std::getline(ls, order_s, ';') || !std::getline(ls, index_s, ';') ||
        !std::getline(ls, label, ';') || !std::getline(ls, gens_s))
      throw std::runtime_error("catalog: line " + std::to_string(lineno) +
                               ": expected `order;index;label;gens`");
    int order = std::stoi(order_s), index = std::stoi(index_s);
    std::vector<std::string> gen_strs;
    std::string cur;
    int depth = 0;
    for (char ch : gens_s) {
      if (ch == ',' && depth == 0) {
        gen_strs.push_back(cur);
        cur.clear();
        continue;
      }
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      cur += ch;
    }
    if (!cur.empty()) gen_strs.push_back(cur);
    int max_point = 1;
    std::vector<Perm> raw;
    for (const std::string& gs : gen_strs) raw.push_back(parse_cycles(gs, &max_point));
    for (Perm& p : raw) {  // pad to common degree
      int old = static_cast<int>(p.size());
      p.resize(max_point);
      for (int k = old; k < max_point; ++k) p[k] = k;
    }
    PermutationGroup g(max_point, raw);
    if (g.order() != order)
      throw std::runtime_error("catalog: line " + std::to_string(lineno) + ": group '" + label +
                               "' has order " + std::to_string(g.order()) + ", declared " +
                               std::to_string(order));
    cat.entries.push_back({order, index, label, std::move(g)});
  }
  // class counts per order must match the classification
  const int expected[17] = {0, 1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14};
  std::map<int, int> counts;
  for (const auto& e : cat.entries) ++counts[e.order];
  for (int n = 1; n <= 16; ++n)
    if (counts[n] != expected[n])
      throw std::runtime_error("catalog: order " + std::to_string(n) + " has " +
                               std::to_string(counts[n]) + " classes, expected " +
                               std::to_string(expected[n]));
  // pairwise non-isomorphism via invariant fingerprints
  std::set<std::string> fingerprints;
  for (const auto& e : cat.entries) {
    std::ostringstream fp;
    fp << e.order << "|";
    for (long long d : e.group.abelianization()) fp << d << ",";
    fp << "|";
    for (int o : e.group.element_order_multiset()) fp << o << ",";
    fp << "|" << e.group.derived_series().size() << "|" << e.group.center().size();
    if (!fingerprints.insert(fp.str()).second)
      throw std::runtime_error("catalog: duplicate isomorphism class at '" + e.label + "'");
  }
  return cat;
}

std::vector<CheckVerdict> center_cyclic_implies_abelian_check(const GroupCatalog& cat) {
  std::vector<CheckVerdict> out;
  for (const auto& e : cat.entries) {
    CheckVerdict v{e.label, false, true};
    if (quotient_is_cyclic(e.group.elements(), e.group.center())) {
      v.applicable = true;
      v.pass = e.group.is_abelian();
    }
    out.push_back(v);
  }
  return out;
}

std::vector<CheckVerdict> taussky_check(const GroupCatalog& cat) {
  std::vector<CheckVerdict> out;
  for (const auto& e : cat.entries) {
    CheckVerdict v{e.label, false, true};
    bool two_group = (e.order & (e.order - 1)) == 0;
    if (two_group) {
      auto derived = commutator_subgroup(e.group.degree(), e.group.elements());
      if (e.order / static_cast<int>(derived.size()) == 4) {
        v.applicable = true;
        v.pass = set_is_cyclic(derived);
      }
    }
    out.push_back(v);
  }
  return out;
}

DeductionResult deduction_chain_check(const GroupCatalog& cat, DeductionChain chain) {
  DeductionResult r;
  for (const auto& e : cat.entries) {
    ++r.scanned;
    const auto& g = e.group.elements();
    auto d1 = commutator_subgroup(e.group.degree(), g);
    bool hypothesis = false, conclusion = true;
    switch (chain) {
      case DeductionChain::derived_step_collapses: {
        auto d2 = commutator_subgroup(e.group.degree(), d1);
        long long q = static_cast<long long>(d1.size()) / d2.size();
        if (d1.size() <= 7 && q <= 2 && quotient_is_cyclic(d1, d2)) {
          hypothesis = true;
          conclusion = d2.size() == 1;
        }
        break;
      }
      case DeductionChain::abelian_has_trivial_derived:
        if (e.group.is_abelian()) {
          hypothesis = true;
          conclusion = d1.size() == 1;
        }
        break;
      case DeductionChain::metacyclic_structure:
        if (e.order <= 14 && set_is_cyclic(d1) &&
            static_cast<long long>(g.size()) / d1.size() == 2) {
          hypothesis = true;
          // look for a cyclic normal subgroup with cyclic quotient
          bool metacyclic = false;
          for (const Perm& x : g) {
            std::vector<Perm> n = subgroup_closure(e.group.degree(), {x});
            bool normal = true;
            for (const Perm& h : g) {
              Perm conj = perm_mul(perm_mul(h, x), perm_inverse(h));
              if (!std::binary_search(n.begin(), n.end(), conj)) {
                normal = false;
                break;
              }
            }
            if (normal && quotient_is_cyclic(g, n)) {
              metacyclic = true;
              break;
            }
          }
          conclusion = metacyclic;
        }
        break;
    }
    if (hypothesis) {
      ++r.matched;
      if (!conclusion) {
        r.no_counterexample = false;
        if (r.counterexample.empty()) r.counterexample = e.label;
      }
    }
  }
  return r;
}

}  // namespace nfcert
