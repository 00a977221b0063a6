#include "bt/toric.hpp"

#include <set>
#include <stdexcept>

#include "doctest.h"

using namespace bt;

namespace {

Perm P(std::initializer_list<int> one_line) {
  return Perm::from_one_line(std::vector<int>(one_line));
}

int euler_phi(int m) {
  int out = 0;
  for (int x = 1; x <= m; ++x) {
    int a = x, b = m;
    while (b) { const int t = a % b; a = b; b = t; }
    if (a == 1) ++out;
  }
  return out;
}

}  // namespace

TEST_CASE("alpha powers") {
  CHECK(alpha_power(4, 0) == ZPerm::identity(4));
  CHECK(alpha_power(4, 1).images() == std::vector<int>{1, 2, 3, 4, 0});
  CHECK(alpha_power(4, 4).images() == std::vector<int>{4, 0, 1, 2, 3});
  CHECK(alpha_power(4, 5) == ZPerm::identity(4));  // exponents mod n+1
  CHECK(alpha_power(4, -1) == alpha_power(4, 4));
}

TEST_CASE("toric map basics") {
  const Perm pi = P({3, 1, 2});
  CHECK(toric_map(pi, 0) == pi);
  CHECK(toric_map(pi, 1) == P({2, 3, 1}));  // worked through the shift formula
  for (int r = 0; r <= 4; ++r) CHECK(toric_map(identity_perm(4), r) == identity_perm(4));
}

TEST_CASE("conjugation form and shift form agree") {
  for (int n = 2; n <= 5; ++n) {
    for (std::uint64_t rank = 0; rank < factorial(n); ++rank) {
      const Perm p = lex_unrank(n, rank);
      for (int r = 0; r <= n; ++r) {
        CHECK(toric_map(p, r) == toric_map_by_shift(p, r));
      }
    }
  }
}

TEST_CASE("right-invariant toric map on block transpositions") {
  CHECK(toric_map_right(as_permutation(Cuts(5, 1, 3, 5)), 1) ==
        as_permutation(Cuts(5, 0, 2, 4)));
  CHECK(toric_map_right(as_permutation(Cuts(5, 0, 2, 4)), 1) ==
        as_permutation(Cuts(5, 1, 3, 5)));
  const Perm pi = P({2, 4, 1, 3});
  CHECK(toric_map_right(pi, 0) == pi);
  // fbar_r = fbar^r
  for (int n = 3; n <= 5; ++n) {
    for (std::uint64_t rank = 0; rank < factorial(n); ++rank) {
      const Perm p = lex_unrank(n, rank);
      Perm acc = p;
      for (int r = 1; r <= n; ++r) {
        acc = toric_map_right(acc, 1);
        CHECK(acc == toric_map_right(p, r));
      }
    }
  }
}

TEST_CASE("reverse map") {
  CHECK(reverse_map(identity_perm(4)) == identity_perm(4));
  CHECK(reverse_map(P({3, 1, 2})) == P({2, 3, 1}));
  for (int n = 2; n <= 5; ++n) {
    for (std::uint64_t rank = 0; rank < factorial(n); ++rank) {
      const Perm p = lex_unrank(n, rank);
      CHECK(reverse_map(p) == reverse_map_by_index(p));
      CHECK(reverse_map(reverse_map(p)) == p);
    }
  }
}

TEST_CASE("toric classes") {
  CHECK(toric_class(identity_perm(4)) == std::vector<Perm>{identity_perm(4)});
  CHECK(toric_class(reverse_perm(4)) == std::vector<Perm>{reverse_perm(4)});
  for (int n = 2; n <= 5; ++n) {
    int singletons = 0;
    for (std::uint64_t rank = 0; rank < factorial(n); ++rank) {
      const auto cls = toric_class(lex_unrank(n, rank));
      CHECK((n + 1) % cls.size() == 0);  // class size divides n+1
      if (cls.size() == 1) ++singletons;
    }
    CHECK(singletons == euler_phi(n + 1));
  }
}

TEST_CASE("closed-form actions on cut points") {
  const ToricReverseElement g5(5, 0, true, Convention::right);
  CHECK(act_on_cuts(g5, Cuts(5, 0, 2, 4)) == Cuts(5, 1, 3, 5));

  const ToricReverseElement f_left(5, 1, false, Convention::left);
  CHECK(act_on_cuts(f_left, Cuts(5, 2, 3, 5)) == Cuts(5, 1, 2, 4));
  CHECK(act_on_cuts(f_left, Cuts(5, 0, 2, 4)) == Cuts(5, 1, 3, 5));

  const ToricReverseElement f_right(5, 1, false, Convention::right);
  CHECK(act_on_cuts(f_right, Cuts(5, 2, 3, 5)) == Cuts(5, 1, 2, 4));
  // the i = 0 branch differs between the conventions
  CHECK(act_on_cuts(f_left, Cuts(5, 0, 1, 3)) == Cuts(5, 1, 4, 5));
  CHECK(act_on_cuts(f_right, Cuts(5, 0, 1, 3)) == Cuts(5, 0, 2, 5));
}

TEST_CASE("cut action matches the permutation action") {
  for (int n = 4; n <= 6; ++n) {
    const auto tn = enumerate_tn(n);
    for (const Convention conv : {Convention::left, Convention::right}) {
      for (const ToricReverseElement& e : toric_reverse_group(n, conv)) {
        for (const Cuts& c : tn) {
          const auto img = cuts_from_permutation(apply(e, as_permutation(c)));
          REQUIRE(img.has_value());  // T_n is invariant
          CHECK(*img == act_on_cuts(e, c));
        }
      }
    }
  }
}

TEST_CASE("dihedral composition") {
  const int n = 5;
  const auto id = ToricReverseElement::identity(n, Convention::right);
  const ToricReverseElement g(n, 0, true, Convention::right);
  const ToricReverseElement f2(n, 2, false, Convention::right);
  CHECK(dihedral_compose(id, f2) == f2);
  CHECK(dihedral_compose(f2, id) == f2);
  // g o f^r o g = f^{n+1-r}
  CHECK(dihedral_compose(dihedral_compose(g, f2), g) ==
        ToricReverseElement(n, n + 1 - 2, false, Convention::right));
  for (const auto& e : toric_reverse_group(n, Convention::right)) {
    if (e.reflected) CHECK(dihedral_compose(e, e) == id);  // reflections square to 1
    CHECK(dihedral_compose(e, dihedral_inverse(e)) == id);
    CHECK(dihedral_compose(dihedral_inverse(e), e) == id);
  }
  CHECK_THROWS_AS(dihedral_compose(ToricReverseElement(5, 1, false, Convention::left),
                                   ToricReverseElement(5, 1, false, Convention::right)),
                  std::invalid_argument);
  CHECK_THROWS_AS(dihedral_compose(ToricReverseElement(4, 1, false, Convention::left),
                                   ToricReverseElement(5, 1, false, Convention::left)),
                  std::invalid_argument);
}

TEST_CASE("dihedral composition matches the permutation action") {
  const int n = 4;
  for (const Convention conv : {Convention::left, Convention::right}) {
    const auto group = toric_reverse_group(n, conv);
    CHECK(group.size() == 2 * (n + 1));
    for (const auto& a : group) {
      for (const auto& b : group) {
        const auto c = dihedral_compose(a, b);
        for (std::uint64_t rank = 0; rank < factorial(n); ++rank) {
          const Perm p = lex_unrank(n, rank);
          CHECK(apply(c, p) == apply(a, apply(b, p)));
        }
      }
    }
  }
}

TEST_CASE("element text form") {
  CHECK(to_string(ToricReverseElement(5, 3, false, Convention::right)) == "f^3");
  CHECK(to_string(ToricReverseElement(5, 2, true, Convention::right)) == "f^2·g");
}
