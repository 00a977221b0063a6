#include "bt/toric.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bt {

namespace {

int mod(int x, int m) {
  const int r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace

ZPerm alpha_power(int n, int r) {
  const int m = n + 1;
  r = mod(r, m);
  std::vector<int> img(m);
  for (int x = 0; x < m; ++x) img[x] = (x + r) % m;
  return ZPerm(std::move(img));
}

Perm toric_map(const Perm& p, int r) {
  const int n = p.degree();
  const int m = n + 1;
  r = mod(r, m);
  const ZPerm zp = extend_zero(p);
  const int pr = zp.of0(r);
  return restrict_zero(alpha_power(n, m - pr).compose(zp).compose(alpha_power(n, r)));
}

Perm toric_map_by_shift(const Perm& p, int r) {
  const int n = p.degree();
  const int m = n + 1;
  r = mod(r, m);
  const ZPerm zp = extend_zero(p);
  const int pr = zp.of0(r);
  std::vector<int> img(n);
  for (int t = 1; t <= n; ++t) img[t - 1] = mod(zp.of0((r + t) % m) - pr, m) - 1;
  return Perm(std::move(img));
}

Perm toric_map_right(const Perm& p, int r) {
  return toric_map(p.inverse(), r).inverse();
}

Perm reverse_map(const Perm& p) {
  const ZPerm zw = extend_zero(Perm::reverse(p.degree()));
  return restrict_zero(zw.compose(extend_zero(p)).compose(zw));
}

Perm reverse_map_by_index(const Perm& p) {
  const int n = p.degree();
  std::vector<int> img(n);
  for (int t = 1; t <= n; ++t) img[t - 1] = n + 1 - p.of(n + 1 - t) - 1;
  return Perm(std::move(img));
}

std::vector<Perm> toric_class(const Perm& p) {
  std::vector<Perm> out;
  out.reserve(p.degree() + 1);
  for (int r = 0; r <= p.degree(); ++r) out.push_back(toric_map(p, r));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ToricReverseElement::ToricReverseElement(int n_, int r_, bool reflected_,
                                         Convention conv_)
    : n(n_), r(mod(r_, n_ + 1)), reflected(reflected_), conv(conv_) {
  if (n < 1) throw std::invalid_argument("ToricReverseElement: need n >= 1");
}

ToricReverseElement ToricReverseElement::identity(int n, Convention conv) {
  return ToricReverseElement(n, 0, false, conv);
}

Perm apply(const ToricReverseElement& e, const Perm& p) {
  if (p.degree() != e.n) {
    throw std::invalid_argument("ToricReverseElement: degree mismatch");
  }
  const Perm q = e.reflected ? reverse_map(p) : p;
  return e.conv == Convention::left ? toric_map(q, e.r) : toric_map_right(q, e.r);
}

namespace {

Cuts f_step_cuts(const Cuts& c, Convention conv) {
  if (c.i > 0) return Cuts(c.n, c.i - 1, c.j - 1, c.k - 1);
  if (conv == Convention::left) return Cuts(c.n, c.k - c.j - 1, c.n - c.j, c.n);
  return Cuts(c.n, c.j - 1, c.k - 1, c.n);
}

}  // namespace

Cuts act_on_cuts(const ToricReverseElement& e, const Cuts& c) {
  if (c.n != e.n) {
    throw std::invalid_argument("act_on_cuts: degree mismatch");
  }
  Cuts out = e.reflected ? Cuts(c.n, c.n - c.k, c.n - c.j, c.n - c.i) : c;
  for (int s = 0; s < e.r; ++s) out = f_step_cuts(out, e.conv);
  return out;
}

ToricReverseElement dihedral_compose(const ToricReverseElement& a,
                                     const ToricReverseElement& b) {
  if (a.n != b.n) throw std::invalid_argument("dihedral_compose: degree mismatch");
  if (a.conv != b.conv) {
    throw std::invalid_argument("dihedral_compose: mixed conventions");
  }
  // f^ra g^sa o f^rb g^sb: g f^rb = f^{-rb} g collapses the middle.
  const int r = a.reflected ? a.r - b.r : a.r + b.r;
  return ToricReverseElement(a.n, r, a.reflected != b.reflected, a.conv);
}

ToricReverseElement dihedral_inverse(const ToricReverseElement& e) {
  if (e.reflected) return e;  // reflections are involutions
  return ToricReverseElement(e.n, -e.r, false, e.conv);
}

std::vector<ToricReverseElement> toric_reverse_group(int n, Convention conv) {
  std::vector<ToricReverseElement> out;
  out.reserve(2 * (n + 1));
  for (int refl = 0; refl < 2; ++refl)
    for (int r = 0; r <= n; ++r) out.emplace_back(n, r, refl != 0, conv);
  return out;
}

std::string to_string(const ToricReverseElement& e) {
  std::ostringstream os;
  os << "f^" << e.r;
  if (e.reflected) os << "·g";
  return os.str();
}

}  // namespace bt
