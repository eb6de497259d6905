#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "nfcert/extcrit.hpp"

using namespace nfcert;

static std::vector<long> primes_below(long n) {
  std::vector<long> ps;
  for (long k = 2; k < n; ++k) {
    bool p = true;
    for (long d = 2; d * d <= k; ++d)
      if (k % d == 0) {
        p = false;
        break;
      }
    if (p) ps.push_back(k);
  }
  return ps;
}

TEST_CASE("closed-form dimension") {
  CHECK(ext_dimension(11, 2).dimension == 0);
  CHECK(ext_dimension(17, 2).dimension == 1);
  CHECK(ext_dimension(13, 2).dimension == 0);
  CHECK(ext_dimension(7, 2).dimension == 1);
  CHECK(ext_dimension(19, 3).dimension == 1);
  CHECK(ext_dimension(7, 3).dimension == 0);
  CHECK(ext_dimension(11, 5).dimension == 1);
  CHECK(ext_dimension(13, 7).dimension == 1);
  CHECK_THROWS(ext_dimension(5, 5));
  CHECK_THROWS(ext_dimension(4, 3));
}

TEST_CASE("congruence route") {
  CHECK(ext_dimension_congruence(7, 3).dimension == 0);
  CHECK(ext_dimension_congruence(19, 3).dimension == 1);
  CHECK(ext_dimension_congruence(3, 2).dimension == 0);
  CHECK(ext_dimension_congruence(17, 2).dimension == 1);
  CHECK(ext_dimension_congruence(11, 5).dimension == 1);
}

TEST_CASE("local kernel route, p = 2 and p = 3") {
  CHECK(local_kernel_dimension(7, 2).dimension == 1);
  CHECK(local_kernel_dimension(5, 2).dimension == 0);
  CHECK(local_kernel_dimension(2, 3).dimension == 0);
  CHECK(local_kernel_dimension(19, 3).dimension == 1);
  CHECK_THROWS(local_kernel_dimension(11, 5));
}

TEST_CASE("the six instantiated pairs all have dimension 0") {
  for (auto [l, p] : std::vector<std::pair<long, long>>{
           {2, 3}, {3, 2}, {5, 2}, {7, 3}, {13, 2}, {11, 2}}) {
    CAPTURE(l);
    CAPTURE(p);
    CHECK(ext_dimension(l, p).dimension == 0);
  }
}

TEST_CASE("all routes agree for l, p < 1000") {
  auto ps = primes_below(1000);
  for (long p : ps)
    for (long l : ps) {
      if (l == p) continue;
      int closed = ext_dimension(l, p).dimension;
      CAPTURE(l);
      CAPTURE(p);
      REQUIRE(closed == ext_dimension_congruence(l, p).dimension);
      if (p == 2 || p == 3) REQUIRE(closed == local_kernel_dimension(l, p).dimension);
    }
}
