#include "bt/cuts.hpp"

#include <set>
#include <stdexcept>

#include "doctest.h"

using namespace bt;

namespace {

Perm P(std::initializer_list<int> one_line) {
  return Perm::from_one_line(std::vector<int>(one_line));
}

// Independent oracle: the piecewise formula
//   t            for t <= i or t > k
//   t + j - i    for i+1 <= t <= k-j+i
//   t + j - k    for k-j+i+1 <= t <= k
Perm piecewise_form(const Cuts& c) {
  std::vector<int> img(c.n);
  for (int t = 1; t <= c.n; ++t) {
    int v;
    if (t <= c.i || t > c.k) v = t;
    else if (t <= c.k - c.j + c.i) v = t + c.j - c.i;
    else v = t + c.j - c.k;
    img[t - 1] = v - 1;
  }
  return Perm(std::move(img));
}

}  // namespace

TEST_CASE("cut validation") {
  CHECK_THROWS_AS(Cuts(5, 1, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(Cuts(5, -1, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(Cuts(5, 0, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(Cuts(5, 0, 2, 6), std::invalid_argument);
}

TEST_CASE("one-line forms of named block transpositions") {
  CHECK(as_permutation(Cuts(5, 0, 1, 5)) == P({2, 3, 4, 5, 1}));
  CHECK(as_permutation(Cuts(5, 1, 3, 5)) == P({1, 4, 5, 2, 3}));
  CHECK(as_permutation(Cuts(5, 1, 2, 4)) == P({1, 3, 4, 2, 5}));
}

TEST_CASE("block form agrees with the piecewise formula") {
  for (int n = 2; n <= 8; ++n) {
    for (const Cuts& c : enumerate_tn(n)) {
      CHECK(as_permutation(c) == piecewise_form(c));
    }
  }
}

TEST_CASE("apply_right splices blocks") {
  CHECK(apply_right(identity_perm(5), Cuts(5, 0, 2, 4)) == P({3, 4, 1, 2, 5}));
  // hand splice: [pi_3 pi_4 | pi_1 pi_2 | pi_5]
  CHECK(apply_right(P({2, 1, 4, 3, 5}), Cuts(5, 0, 2, 4)) == P({4, 3, 2, 1, 5}));
  CHECK_THROWS_AS(apply_right(identity_perm(4), Cuts(5, 0, 2, 4)),
                  std::invalid_argument);
}

TEST_CASE("apply_right equals composition with the one-line form") {
  for (int n = 2; n <= 6; ++n) {
    const std::uint64_t nf = factorial(n);
    const auto tn = enumerate_tn(n);
    for (std::uint64_t r = 0; r < nf; r += 3) {  // every third permutation
      const Perm p = lex_unrank(n, r);
      for (const Cuts& c : tn) {
        CHECK(apply_right(p, c) == compose(p, as_permutation(c)));
      }
    }
  }
}

TEST_CASE("cut-level inverse") {
  CHECK(invert_cuts(Cuts(5, 1, 2, 4)) == Cuts(5, 1, 3, 4));
  CHECK(invert_cuts(Cuts(5, 0, 2, 4)) == Cuts(5, 0, 2, 4));
  for (int n = 2; n <= 8; ++n) {
    for (const Cuts& c : enumerate_tn(n)) {
      CHECK(inverse(as_permutation(c)) == as_permutation(invert_cuts(c)));
    }
  }
}

TEST_CASE("cut-level powers") {
  CHECK(power_cuts(5, 0, 4, 2) == Cuts(5, 0, 2, 4));
  CHECK_THROWS_AS(power_cuts(5, 0, 4, 0), std::invalid_argument);
  CHECK_THROWS_AS(power_cuts(5, 0, 4, 4), std::invalid_argument);
  for (int n = 4; n <= 6; ++n) {
    for (int i = 0; i < n; ++i)
      for (int k = i + 2; k <= n; ++k) {
        Perm acc = as_permutation(Cuts(n, i, i + 1, k));
        const Perm step = acc;
        for (int e = 2; e <= k - i - 1; ++e) {
          acc = acc.compose(step);
          CHECK(acc == as_permutation(power_cuts(n, i, k, e)));
        }
      }
  }
}

TEST_CASE("beta generates B") {
  for (int n = 3; n <= 8; ++n) {
    const Perm beta = as_permutation(Cuts(n, 0, 1, n));
    Perm acc = beta;
    std::set<Perm> b_set;
    int order = 1;
    while (acc != identity_perm(n)) {
      b_set.insert(acc);
      acc = acc.compose(beta);
      ++order;
    }
    CHECK(order == n);
    std::set<Perm> expected;
    for (int j = 1; j <= n - 1; ++j) expected.insert(as_permutation(Cuts(n, 0, j, n)));
    CHECK(b_set == expected);
  }
}

TEST_CASE("enumeration") {
  CHECK(enumerate_tn(3).size() == 4);
  CHECK(enumerate_tn(5).size() == 20);
  CHECK(enumerate_tn(8).size() == 84);
  CHECK_THROWS_AS(enumerate_tn(1), std::invalid_argument);
  for (int n = 2; n <= 12; ++n) {
    const auto tn = enumerate_tn(n);
    CHECK(tn.size() == tn_size(n));
    CHECK(std::is_sorted(tn.begin(), tn.end()));
    CHECK(std::adjacent_find(tn.begin(), tn.end()) == tn.end());
  }
}

TEST_CASE("classification") {
  CHECK(classify(Cuts(5, 0, 2, 5)) == PartitionClass::B);
  CHECK(classify(Cuts(5, 0, 2, 3)) == PartitionClass::L);
  CHECK(classify(Cuts(5, 1, 2, 5)) == PartitionClass::F);
  CHECK(classify(Cuts(5, 1, 2, 4)) == PartitionClass::S);
  int b = 0, l = 0, f = 0, s = 0;
  for (const Cuts& c : enumerate_tn(5)) {
    switch (classify(c)) {
      case PartitionClass::B: ++b; break;
      case PartitionClass::L: ++l; break;
      case PartitionClass::F: ++f; break;
      case PartitionClass::S: ++s; break;
    }
  }
  CHECK(b == 4);
  CHECK(l == 6);
  CHECK(f == 6);
  CHECK(s == 4);
}

TEST_CASE("decoding one-line forms") {
  CHECK(cuts_from_permutation(P({2, 3, 4, 5, 1})) == Cuts(5, 0, 1, 5));
  CHECK(!cuts_from_permutation(identity_perm(5)).has_value());
  CHECK(!cuts_from_permutation(P({2, 1, 4, 3})).has_value());
}

TEST_CASE("decoder agrees with the member-set oracle") {
  // hash-set oracle: the image of as_permutation over all of T_n
  for (int n = 2; n <= 6; ++n) {
    std::set<Perm> members;
    for (const Cuts& c : enumerate_tn(n)) {
      const auto back = cuts_from_permutation(as_permutation(c));
      REQUIRE(back.has_value());
      CHECK(*back == c);  // round trip, hence injective
      members.insert(as_permutation(c));
    }
    for (std::uint64_t r = 0; r < factorial(n); ++r) {
      const Perm p = lex_unrank(n, r);
      CHECK(cuts_from_permutation(p).has_value() == (members.count(p) != 0));
    }
  }
}

TEST_CASE("cut text and json forms") {
  const Cuts c(5, 0, 2, 4);
  CHECK(to_string(c) == "(0,2,4)");
  CHECK(parse_cuts(5, "(0,2,4)") == c);
  CHECK(!parse_cuts(5, "(0,2)").has_value());
  CHECK(!parse_cuts(5, "(2,0,4)").has_value());
  CHECK(!parse_cuts(3, "(0,2,4)").has_value());
  CHECK(cuts_json(c) == R"({"n":5,"i":0,"j":2,"k":4})");
}
