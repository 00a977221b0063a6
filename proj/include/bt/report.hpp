#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace bt {

/// One verified claim: machine-parsable as
/// "CLAIM <id> EXPECTED <expected> GOT <got> PASS|FAIL".
struct CheckLine {
  std::string claim;
  std::string expected;
  std::string got;
  bool pass = false;
};

struct Report {
  std::vector<CheckLine> lines;

  bool all_pass() const;
  void add(std::string claim, std::string expected, std::string got);
  /// Convenience for counted checks: expected/got as integers.
  void add_count(std::string claim, std::uint64_t expected, std::uint64_t got);
  void add_bool(std::string claim, bool ok);
  void append(const Report& other);
};

void print_text(const Report& r, std::ostream& os);
void print_json(const Report& r, std::ostream& os);

}  // namespace bt
