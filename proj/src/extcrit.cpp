#include "nfcert/extcrit.hpp"

#include <stdexcept>
#include <vector>

namespace nfcert {

namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void check_pair(long l, long p) {
  if (!is_prime(l) || !is_prime(p))
    throw std::invalid_argument("ext criterion: l and p must be prime");
  if (l == p) throw std::invalid_argument("ext criterion: l and p must be distinct");
}

long valuation(long n, long p) {
  long v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

// Rank over F_p of a small matrix given as rows.
int rank_mod_p(std::vector<std::vector<long>> m, long p) {
  int rank = 0;
  size_t cols = m.empty() ? 0 : m[0].size();
  for (size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    size_t piv = rank;
    while (piv < m.size() && m[piv][c] % p == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[rank], m[piv]);
    long inv = 1;
    while (inv * m[rank][c] % p != 1 % p) ++inv;
    for (auto& v : m[rank]) v = v * inv % p;
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == static_cast<size_t>(rank)) continue;
      long f = m[r][c] % p;
      for (size_t k = 0; k < cols; ++k) m[r][k] = ((m[r][k] - f * m[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

ExtDimension ext_dimension(long l, long p) {
  check_pair(l, p);
  ExtDimension d{l, p, 0, ExtRoute::closed_form};
  // (l^2-1)/24 = 0 mod p  <=>  v_p(l^2-1) >= v_p(24) + 1
  d.dimension = valuation(l * l - 1, p) >= valuation(24, p) + 1 ? 1 : 0;
  return d;
}

ExtDimension ext_dimension_congruence(long l, long p) {
  check_pair(l, p);
  long mod = p >= 5 ? p : (p == 3 ? 9 : 8);
  long r = l % mod;
  ExtDimension d{l, p, (r == 1 || r == mod - 1) ? 1 : 0, ExtRoute::congruence};
  return d;
}

ExtDimension local_kernel_dimension(long l, long p) {
  check_pair(l, p);
  if (p != 2 && p != 3)
    throw std::invalid_argument("local kernel route: only p in {2, 3}");
  ExtDimension d{l, p, 0, ExtRoute::local_kernel};
  if (p == 2) {
    // coordinates: (valuation mod 2, exponent of -1 mod 8, exponent of 5 mod 8)
    auto coords = [](long u) -> std::vector<long> {
      long v = valuation(u, 2);
      long r = (u >> v) % 8;
      // r = (-1)^a 5^b mod 8: 1 -> (0,0), 7 -> (1,0), 5 -> (0,1), 3 -> (1,1)
      long a = (r == 7 || r == 3) ? 1 : 0;
      long b = (r == 5 || r == 3) ? 1 : 0;
      return {v % 2, a, b};
    };
    std::vector<std::vector<long>> m = {coords(2), {0, 1, 0} /* -1 */, coords(l)};
    d.dimension = 3 - rank_mod_p(m, 2);
  } else {
    // coordinates: (valuation mod 3, cube-class exponent c with u = +-4^c mod 9)
    auto coords = [](long u) -> std::vector<long> {
      long v = valuation(u, 3);
      long r = u;
      for (long i = 0; i < v; ++i) r /= 3;
      r %= 9;
      long c = 0;
      // classes mod cubes: {1,8}, {4,5}, {7,2}
      if (r == 4 || r == 5) c = 1;
      if (r == 7 || r == 2) c = 2;
      return {v % 3, c};
    };
    std::vector<std::vector<long>> m = {coords(3), coords(l)};
    d.dimension = 2 - rank_mod_p(m, 3);
  }
  return d;
}

}  // namespace nfcert
