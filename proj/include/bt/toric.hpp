#pragma once

#include <string>
#include <vector>

#include "bt/cuts.hpp"
#include "bt/perm.hpp"

namespace bt {

/// Which Cayley-graph convention an element acts in.
/// left:  toric maps f_r, natural for edges rho = sigma o pi.
/// right: toric maps fbar_r = (f_r(pi^-1))^-1, natural for rho = pi o sigma.
/// The reverse map g is the same in both conventions.
enum class Convention { left, right };

/// alpha^r on {0,...,n}: x -> x + r (mod n+1). Any r accepted, reduced
/// mod n+1.
ZPerm alpha_power(int n, int r);

/// f_r(pi), defined by [0 rho] = alpha^{n+1-pi_r} o [0 pi] o alpha^r.
Perm toric_map(const Perm& p, int r);

/// Same map through the index-shift formula (f_r(pi))_t = pi_{r+t} - pi_r
/// with indices and values mod n+1. Kept as an independent cross-check of
/// toric_map.
Perm toric_map_by_shift(const Perm& p, int r);

/// fbar_r(pi) = (f_r(pi^-1))^-1, the right-invariant twin.
Perm toric_map_right(const Perm& p, int r);

/// g(pi), defined by [0 rho] = [0 w] o [0 pi] o [0 w].
Perm reverse_map(const Perm& p);

/// Index-form twin (g(pi))_t = n+1-pi_{n+1-t}; cross-check of reverse_map.
Perm reverse_map_by_index(const Perm& p);

/// The toric class F(pi) = {f_r(pi) : 0 <= r <= n}, deduplicated, sorted.
std::vector<Perm> toric_class(const Perm& p);

/// Element of the toric-reverse dihedral group of order 2(n+1), in the
/// normal form f^r (reflected = false) or f^r o g (reflected = true);
/// the rotation is applied after the reflection.
struct ToricReverseElement {
  int n;
  int r;  // rotation exponent, reduced to {0,...,n}
  bool reflected;
  Convention conv;

  ToricReverseElement(int n, int r, bool reflected, Convention conv);
  static ToricReverseElement identity(int n, Convention conv);
  bool is_identity() const { return r == 0 && !reflected; }

  bool operator==(const ToricReverseElement&) const = default;
};

/// Permutation-level action of an element.
Perm apply(const ToricReverseElement& e, const Perm& p);

/// Cut-point-level action, by the closed forms: one f (or fbar) step maps
/// (i,j,k) to (i-1,j-1,k-1) for i > 0 and to (k-j-1,n-j,n) [left] or
/// (j-1,k-1,n) [right] for i = 0; g maps (i,j,k) to (n-k,n-j,n-i).
Cuts act_on_cuts(const ToricReverseElement& e, const Cuts& c);

/// a o b (apply b first). Mixing n or conventions is an error.
ToricReverseElement dihedral_compose(const ToricReverseElement& a,
                                     const ToricReverseElement& b);
ToricReverseElement dihedral_inverse(const ToricReverseElement& e);

/// All 2(n+1) elements: f^0..f^n, then f^0 o g .. f^n o g.
std::vector<ToricReverseElement> toric_reverse_group(int n, Convention conv);

/// "f^r" or "f^r·g".
std::string to_string(const ToricReverseElement& e);

}  // namespace bt
