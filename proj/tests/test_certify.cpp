#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "nfcert/certify.hpp"

using namespace nfcert;
using nlohmann::json;

static const std::string kCertDir = NFCERT_CERT_DIR;
static const std::string kDataDir = NFCERT_DATA_DIR;

static OdlyzkoTable table() { return load_odlyzko(kDataDir + "/odlyzko_bounds.txt"); }
static GroupCatalog catalog() { return load_catalog(kDataDir + "/groups_order16.cat"); }

TEST_CASE("degree gap arithmetic") {
  CHECK(degree_gap(6, 23) == 3);
  CHECK(degree_gap(12, 43) == 3);
  CHECK(degree_gap(4, 59) == 14);
  CHECK(degree_gap(7, 7) == 1);
  CHECK_THROWS(degree_gap(8, 7));  // bound below base degree: contradiction
  CHECK_THROWS(degree_gap(0, 7));
  for (long long n = 1; n <= 20; ++n)
    for (long long N = n; N <= 60; ++N) CHECK(degree_gap(n, N) * n <= N);
}

TEST_CASE("base field degrees of the instantiated cases") {
  CHECK(base_field_degree(2, 3, "tame", std::nullopt) == 6);
  CHECK(base_field_degree(3, 2, "tame", std::nullopt) == 4);
  CHECK(base_field_degree(5, 2, "tame", std::nullopt) == 8);
  CHECK(base_field_degree(7, 3, "semistable", std::nullopt) == 18);
  CHECK(base_field_degree(13, 2, "semistable", std::nullopt) == 4);
  CHECK(base_field_degree(11, 2, "semistable", std::nullopt) == 12);
  // declared degree must match a built-in value where one exists
  CHECK_THROWS(base_field_degree(13, 2, "semistable", 8));
  // no built-in value: the declared degree is required and taken as is
  CHECK_THROWS(base_field_degree(19, 5, "semistable", std::nullopt));
  CHECK(base_field_degree(19, 5, "semistable", 40) == 40);
}

TEST_CASE("certificate parsing and validation") {
  CHECK_THROWS(parse_certificate(kCertDir + "/no_such_file.json"));
  CHECK_THROWS_WITH_AS(parse_certificate_text("{not json", "bad"),
                       doctest::Contains("JSON parse error"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_certificate_text("[1,2]", "bad"),
                       doctest::Contains("not an object"), std::runtime_error);
  CHECK_THROWS_WITH_AS(
      parse_certificate_text(R"({"case":"x","l":3,"p":2,"mode":"bogus","claims":[]})", "bad"),
      doctest::Contains("mode"), std::runtime_error);

  // vacuous certificate: valid, and verifies to PASS
  Certificate empty = parse_certificate_text(
      R"({"case":"vacuous","l":3,"p":2,"mode":"tame","claims":[]})", "mem");
  CHECK(empty.case_label == "vacuous");
  auto t = table();
  auto cat = catalog();
  Report rep = verify(empty, t, cat);
  CHECK(rep.overall == "PASS");
  CHECK(rep.claims.empty());

  // claim referencing an undeclared field is a parse error naming the reference
  std::string bad_ref = R"({"case":"x","l":3,"p":2,"mode":"tame","fields":[],
    "claims":[{"kind":"prime_splitting","anchor":"a","field":"Missing","q":2,
               "expected":{"e":1,"f":1,"g":1}}]})";
  CHECK_THROWS_WITH_AS(parse_certificate_text(bad_ref, "bad"),
                       doctest::Contains("undeclared field \"Missing\""), std::runtime_error);

  CHECK_THROWS_WITH_AS(
      parse_certificate_text(
          R"({"case":"x","l":3,"p":2,"mode":"tame","claims":[{"kind":"no_such","anchor":"a"}]})",
          "bad"),
      doctest::Contains("unknown kind"), std::runtime_error);
  CHECK_THROWS_WITH_AS(
      parse_certificate_text(
          R"({"case":"x","l":3,"p":2,"mode":"tame","claims":[{"kind":"ext_dim","anchor":""}]})",
          "bad"),
      doctest::Contains("empty anchor"), std::runtime_error);
}

TEST_CASE("bundled case_13_2 has at least 8 claims and verifies") {
  Certificate cert = parse_certificate(kCertDir + "/case_13_2.json");
  CHECK(cert.raw["claims"].size() >= 8);
  CHECK(cert.l == 13);
  CHECK(cert.p == 2);
  CHECK(cert.mode == "semistable");
  auto t = table();
  auto cat = catalog();
  Report rep = verify(cert, t, cat);
  CHECK(rep.overall == "PASS");
  for (const auto& r : rep.claims) {
    CAPTURE(r.kind);
    CHECK(r.status == "PASS");
    CHECK_FALSE(r.anchor.empty());
  }
}

TEST_CASE("tampering a claim expectation turns it into a FAIL") {
  Certificate cert = parse_certificate(kCertDir + "/case_13_2.json");
  json raw = cert.raw;
  bool tampered = false;
  for (auto& c : raw["claims"]) {
    if (c["kind"] == "residue_unit_order") {
      c["expected"] = 7;  // true order is 3
      tampered = true;
      break;
    }
  }
  REQUIRE(tampered);
  Certificate bad = parse_certificate_text(raw.dump(), "tampered");
  auto t = table();
  auto cat = catalog();
  Report rep = verify(bad, t, cat);
  CHECK(rep.overall == "FAIL");
  int fails = 0;
  for (const auto& r : rep.claims)
    if (r.status == "FAIL") ++fails;
  CHECK(fails == 1);
}

TEST_CASE("exceptions inside a claim become FAIL report content, not errors") {
  std::string text = R"({"case":"x","l":3,"p":2,"mode":"tame","claims":[
    {"kind":"degree_gap","anchor":"a","base_degree":10,"bound":4,"expected":1}]})";
  Certificate cert = parse_certificate_text(text, "mem");
  auto t = table();
  auto cat = catalog();
  Report rep = verify(cert, t, cat);
  CHECK(rep.overall == "FAIL");
  REQUIRE(rep.claims.size() == 1);
  CHECK(rep.claims[0].status == "FAIL");
  CHECK(rep.claims[0].note.find("contradiction") != std::string::npos);
}

TEST_CASE("reports are byte-deterministic") {
  auto t = table();
  auto cat = catalog();
  for (const char* name : {"case_2_3", "case_3_2", "case_5_2", "case_7_3", "case_13_2",
                           "case_11_2"}) {
    Certificate c1 = parse_certificate(kCertDir + "/" + name + ".json");
    Certificate c2 = parse_certificate(kCertDir + "/" + name + ".json");
    Report r1 = verify(c1, t, cat);
    Report r2 = verify(c2, t, cat);
    CHECK(r1.to_text() == r2.to_text());
    CHECK(r1.to_json().dump(2) == r2.to_json().dump(2));
  }
}

TEST_CASE("all six bundled certificates verify; case 11 is the only heuristic one") {
  auto t = table();
  auto cat = catalog();
  for (const char* name : {"case_2_3", "case_3_2", "case_5_2", "case_7_3", "case_13_2",
                           "case_11_2"}) {
    Certificate cert = parse_certificate(kCertDir + "/" + name + ".json");
    Report rep = verify(cert, t, cat);
    CAPTURE(name);
    int heuristic = 0;
    for (const auto& r : rep.claims) {
      CHECK(r.status != "FAIL");
      CHECK(r.status != "SKIPPED");
      CHECK_FALSE(r.anchor.empty());
      if (r.status == "HEURISTIC-PASS") ++heuristic;
    }
    if (std::string(name) == "case_11_2") {
      CHECK(rep.overall == "HEURISTIC-PASS");
      CHECK(heuristic == 1);
    } else {
      CHECK(rep.overall == "PASS");
      CHECK(heuristic == 0);
    }
  }
}

TEST_CASE("the 10.49 discrepancy is flagged, not silently matched") {
  auto t = table();
  auto cat = catalog();
  Certificate cert = parse_certificate(kCertDir + "/case_2_3.json");
  Report rep = verify(cert, t, cat);
  bool flagged = false;
  for (const auto& r : rep.claims)
    if (r.kind == "budget_value" && r.note.find("10.49") != std::string::npos &&
        r.note.find("10.39") != std::string::npos)
      flagged = true;
  CHECK(flagged);
}

TEST_CASE("removing any single claim from a bundled certificate still verifies") {
  auto t = table();
  auto cat = catalog();
  for (const char* name : {"case_2_3", "case_13_2"}) {
    Certificate full = parse_certificate(kCertDir + "/" + name + ".json");
    size_t n = full.raw["claims"].size();
    for (size_t drop = 0; drop < n; ++drop) {
      json raw = full.raw;
      raw["claims"].erase(raw["claims"].begin() + static_cast<long>(drop));
      Certificate cert = parse_certificate_text(raw.dump(), "reduced");
      Report rep = verify(cert, t, cat);
      CAPTURE(name);
      CAPTURE(drop);
      CHECK(rep.overall != "FAIL");
    }
  }
}
