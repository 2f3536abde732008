#include "oscalg/report.hpp"

#include <algorithm>
#include <cstdio>

namespace oscalg {

void Report::add(std::string id, std::string claim, bool pass, std::string witness) {
  checks.push_back({std::move(id), std::move(claim), pass, std::move(witness)});
}

long Report::failed() const {
  long n = 0;
  for (const Check& c : checks)
    if (!c.pass) ++n;
  return n;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char ch : s) {
    switch (ch) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      case '\r':
        out += "\\r";
        break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

std::string Report::json() const {
  std::vector<Check> sorted = checks;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Check& a, const Check& b) { return a.id < b.id; });
  std::string out = "{\n  \"suite\": \"" + json_escape(suite) + "\",\n";
  if (has_seed) out += "  \"seed\": " + std::to_string(seed) + ",\n";
  if (!orders.empty()) {
    out += "  \"orders\": {";
    bool first = true;
    for (const auto& [k, v] : orders) {
      if (!first) out += ", ";
      first = false;
      out += "\"" + json_escape(k) + "\": " + std::to_string(v);
    }
    out += "},\n";
  }
  out += "  \"checks\": [\n";
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const Check& c = sorted[i];
    out += "    {\"id\": \"" + json_escape(c.id) + "\", \"pass\": " + (c.pass ? "true" : "false") +
           ", \"claim\": \"" + json_escape(c.claim) + "\", \"witness\": \"" + json_escape(c.witness) +
           "\"}";
    out += (i + 1 < sorted.size()) ? ",\n" : "\n";
  }
  out += "  ],\n";
  out += "  \"passed\": " + std::to_string(static_cast<long>(sorted.size()) - failed()) + ",\n";
  out += "  \"failed\": " + std::to_string(failed()) + ",\n";
  out += "  \"elapsed_ms\": " + std::to_string(elapsed_ms) + "\n";
  return out + "}\n";
}

}  // namespace oscalg
