#include "bt/report.hpp"

#include <ostream>

#include "json.hpp"

namespace bt {

bool Report::all_pass() const {
  for (const auto& l : lines) {
    if (!l.pass) return false;
  }
  return true;
}

void Report::add(std::string claim, std::string expected, std::string got) {
  const bool pass = expected == got;
  lines.push_back({std::move(claim), std::move(expected), std::move(got), pass});
}

void Report::add_count(std::string claim, std::uint64_t expected, std::uint64_t got) {
  add(std::move(claim), std::to_string(expected), std::to_string(got));
}

void Report::add_bool(std::string claim, bool ok) {
  add(std::move(claim), "true", ok ? "true" : "false");
}

void Report::append(const Report& other) {
  lines.insert(lines.end(), other.lines.begin(), other.lines.end());
}

void print_text(const Report& r, std::ostream& os) {
  for (const auto& l : r.lines) {
    os << "CLAIM " << l.claim << " EXPECTED " << l.expected << " GOT " << l.got
       << (l.pass ? " PASS" : " FAIL") << '\n';
  }
}

void print_json(const Report& r, std::ostream& os) {
  nlohmann::ordered_json j;
  auto& checks = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& l : r.lines) {
    nlohmann::ordered_json c;
    c["claim"] = l.claim;
    c["expected"] = l.expected;
    c["got"] = l.got;
    c["pass"] = l.pass;
    checks.push_back(std::move(c));
  }
  j["all_pass"] = r.all_pass();
  os << j.dump(2) << '\n';
}

}  // namespace bt
