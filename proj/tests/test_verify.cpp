#include "bt/verify.hpp"

#include <sstream>
#include <stdexcept>

#include "doctest.h"

using namespace bt;

TEST_CASE("suite names round trip") {
  for (const std::string& name : suite_names()) {
    CHECK(suite_from_name(name).has_value());
  }
  CHECK(!suite_from_name("bogus").has_value());
}

TEST_CASE("partition suite") {
  for (int n = 2; n <= 12; ++n) CHECK(check_partition(n).all_pass());
}

TEST_CASE("toric suites") {
  CHECK(check_toric_algebra(4, {}).all_pass());
  CHECK(check_act_on_cuts(5).all_pass());
}

TEST_CASE("regularity suite carries the quoted n=4 value") {
  // the computed graph is 4-regular at n=4; the quoted figure is 3, so
  // this suite reports a failure there by design
  const Report r4 = check_regularity(4);
  CHECK(!r4.all_pass());
  for (int n = 5; n <= 7; ++n) CHECK(check_regularity(n).all_pass());
}

TEST_CASE("structure suites") {
  for (int n = 5; n <= 6; ++n) {
    CHECK(check_bipartite(n).all_pass());
    CHECK(check_cliques(n).all_pass());
    CHECK(check_hamiltonian(n).all_pass());
    CHECK(check_dihedral_regular_on_v(n).all_pass());
  }
  CHECK_THROWS_AS(check_bipartite(4), std::invalid_argument);
  CHECK_THROWS_AS(check_hamiltonian(4), std::invalid_argument);
}

TEST_CASE("distance suite") {
  for (int n = 2; n <= 5; ++n) CHECK(check_distance_oracle(n).all_pass());
}

TEST_CASE("report output formats") {
  Report r;
  r.add_count("sample_claim", 3, 3);
  r.add_bool("sample_flag", false);
  CHECK(!r.all_pass());

  std::ostringstream text;
  print_text(r, text);
  CHECK(text.str() ==
        "CLAIM sample_claim EXPECTED 3 GOT 3 PASS\n"
        "CLAIM sample_flag EXPECTED true GOT false FAIL\n");

  std::ostringstream js;
  print_json(r, js);
  CHECK(js.str().find("\"all_pass\": false") != std::string::npos);
  CHECK(js.str().find("\"claim\": \"sample_claim\"") != std::string::npos);
}

TEST_CASE("run_suite dispatch") {
  CHECK(run_suite(Suite::partition, 5).all_pass());
  CHECK(run_suite(Suite::cliques, 5).all_pass());
  const Report all3 = run_suite(Suite::all, 3);
  CHECK(all3.all_pass());
  CHECK(all3.lines.size() > 10);
}
