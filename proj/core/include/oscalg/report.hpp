#pragma once

#include <map>
#include <string>
#include <vector>

namespace oscalg {

// One verified statement: a stable id, the claim in words, the verdict,
// and the exact values that decide it.
struct Check {
  std::string id;
  std::string claim;
  bool pass = false;
  std::string witness;
};

// A batch of checks emitted as JSON. Output is byte-deterministic: checks
// are sorted by id, map keys are sorted, and elapsed_ms stays 0 unless the
// caller opts into wall-clock timing.
struct Report {
  std::string suite;
  bool has_seed = false;
  unsigned long long seed = 0;
  std::map<std::string, long> orders;  // truncation orders and size caps used
  std::vector<Check> checks;
  long elapsed_ms = 0;

  void add(std::string id, std::string claim, bool pass, std::string witness);
  long failed() const;
  bool all_pass() const { return failed() == 0; }
  std::string json() const;
};

std::string json_escape(const std::string& s);

}  // namespace oscalg
