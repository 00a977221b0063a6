#include "bt/cuts.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace bt {

Cuts::Cuts(int n_, int i_, int j_, int k_) : n(n_), i(i_), j(j_), k(k_) {
  if (!(0 <= i && i < j && j < k && k <= n)) {
    std::ostringstream os;
    os << "Cuts: need 0 <= i < j < k <= n, got (" << i << "," << j << "," << k
       << ") with n=" << n;
    throw std::invalid_argument(os.str());
  }
}

char class_letter(PartitionClass c) {
  switch (c) {
    case PartitionClass::B: return 'B';
    case PartitionClass::L: return 'L';
    case PartitionClass::F: return 'F';
    case PartitionClass::S: return 'S';
  }
  return '?';
}

std::optional<PartitionClass> class_from_letter(const std::string& s) {
  if (s == "B") return PartitionClass::B;
  if (s == "L") return PartitionClass::L;
  if (s == "F") return PartitionClass::F;
  if (s == "S") return PartitionClass::S;
  return std::nullopt;
}

Perm as_permutation(const Cuts& c) {
  std::vector<int> img;
  img.reserve(c.n);
  for (int t = 1; t <= c.i; ++t) img.push_back(t - 1);
  for (int t = c.j + 1; t <= c.k; ++t) img.push_back(t - 1);
  for (int t = c.i + 1; t <= c.j; ++t) img.push_back(t - 1);
  for (int t = c.k + 1; t <= c.n; ++t) img.push_back(t - 1);
  return Perm(std::move(img));
}

Perm apply_right(const Perm& p, const Cuts& c) {
  if (p.degree() != c.n) {
    throw std::invalid_argument("apply_right: degree mismatch");
  }
  std::vector<int> img;
  img.reserve(c.n);
  for (int t = 1; t <= c.i; ++t) img.push_back(p.of0(t - 1));
  for (int t = c.j + 1; t <= c.k; ++t) img.push_back(p.of0(t - 1));
  for (int t = c.i + 1; t <= c.j; ++t) img.push_back(p.of0(t - 1));
  for (int t = c.k + 1; t <= c.n; ++t) img.push_back(p.of0(t - 1));
  return Perm(std::move(img));
}

Cuts invert_cuts(const Cuts& c) { return Cuts(c.n, c.i, c.k - c.j + c.i, c.k); }

Cuts power_cuts(int n, int i, int k, int e) {
  if (e < 1 || e > k - i - 1) {
    throw std::invalid_argument("power_cuts: exponent out of range");
  }
  return Cuts(n, i, i + e, k);
}

std::vector<Cuts> enumerate_tn(int n) {
  if (n < 2) throw std::invalid_argument("enumerate_tn: need n >= 2");
  std::vector<Cuts> out;
  out.reserve(tn_size(n));
  for (int i = 0; i <= n - 2; ++i)
    for (int j = i + 1; j <= n - 1; ++j)
      for (int k = j + 1; k <= n; ++k) out.emplace_back(n, i, j, k);
  return out;
}

std::uint64_t tn_size(int n) {
  if (n < 2) return 0;
  return static_cast<std::uint64_t>(n) * (n + 1) * (n - 1) / 6;
}

PartitionClass classify(const Cuts& c) {
  if (c.i == 0 && c.k == c.n) return PartitionClass::B;
  if (c.i == 0) return PartitionClass::L;
  if (c.k == c.n) return PartitionClass::F;
  return PartitionClass::S;
}

std::optional<Cuts> cuts_from_permutation(const Perm& p) {
  const int n = p.degree();
  int i = 0;
  while (i < n && p.of(i + 1) == i + 1) ++i;
  if (i == n) return std::nullopt;  // identity
  int k = n;
  while (k > 0 && p.of(k) == k) --k;
  const int j = p.of(i + 1) - 1;
  if (!(0 <= i && i < j && j < k && k <= n)) return std::nullopt;
  const Cuts c(n, i, j, k);
  if (as_permutation(c) != p) return std::nullopt;
  return c;
}

std::string to_string(const Cuts& c) {
  std::ostringstream os;
  os << '(' << c.i << ',' << c.j << ',' << c.k << ')';
  return os.str();
}

std::optional<Cuts> parse_cuts(int n, const std::string& text) {
  int i, j, k;
  char a, b1, b2, d;
  std::istringstream is(text);
  if (!(is >> a >> i >> b1 >> j >> b2 >> k >> d)) return std::nullopt;
  if (a != '(' || b1 != ',' || b2 != ',' || d != ')') return std::nullopt;
  std::string rest;
  if (is >> rest) return std::nullopt;
  try {
    return Cuts(n, i, j, k);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::string cuts_json(const Cuts& c) {
  nlohmann::ordered_json j;
  j["n"] = c.n;
  j["i"] = c.i;
  j["j"] = c.j;
  j["k"] = c.k;
  return j.dump();
}

}  // namespace bt
