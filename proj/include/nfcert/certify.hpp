#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nfcert/discbounds.hpp"
#include "nfcert/groups.hpp"

namespace nfcert {

// One verification case: declared fields and curves plus an ordered claim
// list.  Claims may reference only names declared in the same certificate.
struct Certificate {
  std::string case_label;
  long l = 0;
  long p = 0;
  std::string mode;  // "semistable" or "tame"
  nlohmann::json raw;
};

// Schema-validated certificate; unresolved references and malformed payloads
// are reported with their location.
Certificate parse_certificate(const std::string& path);
Certificate parse_certificate_text(const std::string& text, const std::string& source_name);

struct ClaimResult {
  std::string kind;
  std::string anchor;
  std::string expected;
  std::string computed;
  std::string status;  // PASS, FAIL, HEURISTIC-PASS, SKIPPED
  std::string note;
};

struct Report {
  std::string case_label;
  long l = 0;
  long p = 0;
  std::string mode;
  std::vector<ClaimResult> claims;
  std::vector<std::string> assumptions;  // reported ASSUMED, informational
  std::string overall;                   // PASS or FAIL

  std::string to_text() const;
  nlohmann::json to_json() const;
};

// Dispatches every claim to its module operation.  Failures are report
// content, not errors.  Deterministic: identical inputs give identical bytes.
Report verify(const Certificate& cert, const OdlyzkoTable& table, const GroupCatalog& catalog);

// Max possible [L:K] given [K:Q] = n and [L:Q] <= bound; throws on bound < n.
long long degree_gap(long long base_degree, long long bound);

// Degree over Q of the mandated base field.  Instantiated (l, p, mode)
// shapes have built-in values; other shapes require the declared degree.
int base_field_degree(long l, long p, const std::string& mode, std::optional<int> declared);

}  // namespace nfcert
