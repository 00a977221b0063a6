#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bt {

/// Permutation on [n] = {1,...,n} in one-line notation.
/// Composition is functional: (p.compose(q))(t) = p(q(t)).
/// Values are stored 0-indexed; the text form is the 1-based one-line
/// notation, e.g. "2 3 1".
class Perm {
public:
  // images0[t] is the 0-based image of point t+1; must be a bijection
  // of {0,...,n-1} with n >= 1.
  explicit Perm(std::vector<int> images0);

  static Perm identity(int n);
  static Perm reverse(int n);
  static Perm from_one_line(const std::vector<int>& images1);

  int degree() const { return static_cast<int>(img_.size()); }

  /// 1-based application: of(t) = pi_t for t in [n].
  int of(int t) const { return img_[t - 1] + 1; }
  /// 0-based application.
  int of0(int t) const { return img_[t]; }
  const std::vector<int>& images0() const { return img_; }

  Perm compose(const Perm& inner) const;
  Perm inverse() const;

  std::string str() const;
  static std::optional<Perm> parse(std::string_view text);

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

private:
  std::vector<int> img_;
};

Perm identity_perm(int n);
Perm reverse_perm(int n);
Perm compose(const Perm& outer, const Perm& inner);
Perm inverse(const Perm& p);

/// Permutation on [n]^0 = {0,...,n}. Unlike Perm, the point 0 is part of
/// the domain and need not be fixed. Indexing is plain 0-based.
class ZPerm {
public:
  explicit ZPerm(std::vector<int> images);  // bijection of {0,...,n}
  static ZPerm identity(int n);

  int degree() const { return static_cast<int>(img_.size()) - 1; }
  int of0(int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  ZPerm compose(const ZPerm& inner) const;
  ZPerm inverse() const;
  std::string str() const;

  bool operator==(const ZPerm&) const = default;
  auto operator<=>(const ZPerm&) const = default;

private:
  std::vector<int> img_;
};

/// [0 pi]: extends pi on [n] to [n]^0 fixing 0.
ZPerm extend_zero(const Perm& p);
/// Inverse of extend_zero; the argument must fix 0.
Perm restrict_zero(const ZPerm& z);
ZPerm compose(const ZPerm& outer, const ZPerm& inner);
ZPerm inverse(const ZPerm& z);

std::uint64_t factorial(int n);
/// Lexicographic rank of the one-line notation, in [0, n!).
std::uint64_t lex_rank(const Perm& p);
Perm lex_unrank(int n, std::uint64_t rank);

}  // namespace bt
