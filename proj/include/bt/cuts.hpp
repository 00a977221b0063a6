#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bt/perm.hpp"

namespace bt {

/// Cut points (i,j,k) with 0 <= i < j < k <= n, naming the block
/// transposition sigma(i,j,k) on [n]: it swaps the adjacent blocks
/// (i+1..j) and (j+1..k) and fixes everything else.
struct Cuts {
  int n;
  int i, j, k;

  Cuts(int n, int i, int j, int k);

  bool operator==(const Cuts&) const = default;
  auto operator<=>(const Cuts&) const = default;  // lex on (n, i, j, k)
};

/// T_n partition: B = sigma(0,j,n), L = sigma(0,j,k) with k < n,
/// F = sigma(i,j,n) with i > 0, S = everything supported inside {2,...,n-1}.
enum class PartitionClass { B, L, F, S };

char class_letter(PartitionClass c);
std::optional<PartitionClass> class_from_letter(const std::string& s);

/// One-line form of sigma(i,j,k): [1..i  j+1..k  i+1..j  k+1..n].
Perm as_permutation(const Cuts& c);

/// p composed with sigma(i,j,k) on the right: splices the two blocks of p.
Perm apply_right(const Perm& p, const Cuts& c);

/// sigma(i,j,k)^{-1} = sigma(i, k-j+i, k).
Cuts invert_cuts(const Cuts& c);

/// sigma(i,i+1,k)^e = sigma(i, i+e, k); requires 1 <= e <= k-i-1.
Cuts power_cuts(int n, int i, int k, int e);

/// All cut triples for degree n in lexicographic (i,j,k) order; n >= 2.
std::vector<Cuts> enumerate_tn(int n);

/// |T_n| = n(n+1)(n-1)/6.
std::uint64_t tn_size(int n);

PartitionClass classify(const Cuts& c);

/// Decodes a one-line permutation back to its cut points, if it is a
/// block transposition. Pattern: a maximal fixed prefix, a maximal fixed
/// suffix, and the first displaced value determines j.
std::optional<Cuts> cuts_from_permutation(const Perm& p);

std::string to_string(const Cuts& c);
/// "(i,j,k)" with decimal integers; degree must be supplied.
std::optional<Cuts> parse_cuts(int n, const std::string& text);
std::string cuts_json(const Cuts& c);

}  // namespace bt
