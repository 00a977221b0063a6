#include "bt/perm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bt {

namespace {

void check_bijection(const std::vector<int>& img, int lo, const char* what) {
  const int m = static_cast<int>(img.size());
  std::vector<char> seen(m, 0);
  for (int v : img) {
    const int x = v - lo;
    if (x < 0 || x >= m || seen[x]) {
      throw std::invalid_argument(std::string(what) + ": not a bijection");
    }
    seen[x] = 1;
  }
}

}  // namespace

Perm::Perm(std::vector<int> images0) : img_(std::move(images0)) {
  if (img_.empty()) throw std::invalid_argument("Perm: degree must be >= 1");
  check_bijection(img_, 0, "Perm");
}

Perm Perm::identity(int n) {
  if (n < 1) throw std::invalid_argument("Perm: degree must be >= 1");
  std::vector<int> img(n);
  for (int t = 0; t < n; ++t) img[t] = t;
  return Perm(std::move(img));
}

Perm Perm::reverse(int n) {
  if (n < 1) throw std::invalid_argument("Perm: degree must be >= 1");
  std::vector<int> img(n);
  for (int t = 0; t < n; ++t) img[t] = n - 1 - t;
  return Perm(std::move(img));
}

Perm Perm::from_one_line(const std::vector<int>& images1) {
  std::vector<int> img(images1.size());
  for (std::size_t t = 0; t < images1.size(); ++t) img[t] = images1[t] - 1;
  return Perm(std::move(img));
}

Perm Perm::compose(const Perm& inner) const {
  if (degree() != inner.degree()) {
    throw std::invalid_argument("Perm::compose: degree mismatch");
  }
  std::vector<int> img(img_.size());
  for (std::size_t t = 0; t < img_.size(); ++t) img[t] = img_[inner.img_[t]];
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<int> img(img_.size());
  for (std::size_t t = 0; t < img_.size(); ++t) img[img_[t]] = static_cast<int>(t);
  return Perm(std::move(img));
}

std::string Perm::str() const {
  std::ostringstream os;
  for (std::size_t t = 0; t < img_.size(); ++t) {
    if (t) os << ' ';
    os << img_[t] + 1;
  }
  return os.str();
}

std::optional<Perm> Perm::parse(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::vector<int> images1;
  int v;
  while (is >> v) images1.push_back(v);
  if (!is.eof() || images1.empty()) return std::nullopt;
  try {
    return from_one_line(images1);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

Perm identity_perm(int n) { return Perm::identity(n); }
Perm reverse_perm(int n) { return Perm::reverse(n); }
Perm compose(const Perm& outer, const Perm& inner) { return outer.compose(inner); }
Perm inverse(const Perm& p) { return p.inverse(); }

ZPerm::ZPerm(std::vector<int> images) : img_(std::move(images)) {
  if (img_.size() < 2) throw std::invalid_argument("ZPerm: degree must be >= 1");
  check_bijection(img_, 0, "ZPerm");
}

ZPerm ZPerm::identity(int n) {
  if (n < 1) throw std::invalid_argument("ZPerm: degree must be >= 1");
  std::vector<int> img(n + 1);
  for (int x = 0; x <= n; ++x) img[x] = x;
  return ZPerm(std::move(img));
}

ZPerm ZPerm::compose(const ZPerm& inner) const {
  if (degree() != inner.degree()) {
    throw std::invalid_argument("ZPerm::compose: degree mismatch");
  }
  std::vector<int> img(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x) img[x] = img_[inner.img_[x]];
  return ZPerm(std::move(img));
}

ZPerm ZPerm::inverse() const {
  std::vector<int> img(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x) img[img_[x]] = static_cast<int>(x);
  return ZPerm(std::move(img));
}

std::string ZPerm::str() const {
  std::ostringstream os;
  for (std::size_t x = 0; x < img_.size(); ++x) {
    if (x) os << ' ';
    os << img_[x];
  }
  return os.str();
}

ZPerm extend_zero(const Perm& p) {
  std::vector<int> img(p.degree() + 1);
  img[0] = 0;
  for (int t = 0; t < p.degree(); ++t) img[t + 1] = p.of0(t) + 1;
  return ZPerm(std::move(img));
}

Perm restrict_zero(const ZPerm& z) {
  if (z.of0(0) != 0) {
    throw std::invalid_argument("restrict_zero: permutation does not fix 0");
  }
  std::vector<int> img(z.degree());
  for (int t = 1; t <= z.degree(); ++t) img[t - 1] = z.of0(t) - 1;
  return Perm(std::move(img));
}

ZPerm compose(const ZPerm& outer, const ZPerm& inner) { return outer.compose(inner); }
ZPerm inverse(const ZPerm& z) { return z.inverse(); }

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int t = 2; t <= n; ++t) f *= static_cast<std::uint64_t>(t);
  return f;
}

std::uint64_t lex_rank(const Perm& p) {
  const int n = p.degree();
  std::uint64_t rank = 0;
  for (int t = 0; t < n; ++t) {
    int smaller = 0;
    for (int u = t + 1; u < n; ++u) {
      if (p.of0(u) < p.of0(t)) ++smaller;
    }
    rank += static_cast<std::uint64_t>(smaller) * factorial(n - 1 - t);
  }
  return rank;
}

Perm lex_unrank(int n, std::uint64_t rank) {
  if (n < 1) throw std::invalid_argument("lex_unrank: degree must be >= 1");
  if (rank >= factorial(n)) throw std::invalid_argument("lex_unrank: rank out of range");
  std::vector<int> pool(n);
  for (int t = 0; t < n; ++t) pool[t] = t;
  std::vector<int> img(n);
  for (int t = 0; t < n; ++t) {
    const std::uint64_t f = factorial(n - 1 - t);
    const int idx = static_cast<int>(rank / f);
    rank %= f;
    img[t] = pool[idx];
    pool.erase(pool.begin() + idx);
  }
  return Perm(std::move(img));
}

}  // namespace bt
