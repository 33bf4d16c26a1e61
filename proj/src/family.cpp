#include "corput/family.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace corput {

namespace {

bool is_power_of_two(int b) { return b >= 1 && (b & (b - 1)) == 0; }

}  // namespace

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Permutation Permutation::identity(int b) {
  if (b < 1) throw std::invalid_argument("base must be >= 1");
  Permutation p;
  p.images.resize(static_cast<std::size_t>(b));
  for (int i = 0; i < b; ++i) p.images[static_cast<std::size_t>(i)] = i;
  return p;
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int b = static_cast<int>(images.size());
  if (b < 1) throw std::invalid_argument("empty permutation");
  std::vector<bool> seen(static_cast<std::size_t>(b), false);
  for (int v : images) {
    if (v < 0 || v >= b || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("images are not a bijection on {0,...,b-1}");
    seen[static_cast<std::size_t>(v)] = true;
  }
  Permutation p;
  p.images = std::move(images);
  return p;
}

std::optional<Permutation> Permutation::parse(const std::string& s) {
  std::vector<int> imgs;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used != tok.size()) return std::nullopt;
      imgs.push_back(v);
    } catch (...) {
      return std::nullopt;
    }
  }
  if (imgs.empty()) return std::nullopt;
  try {
    return from_images(std::move(imgs));
  } catch (...) {
    return std::nullopt;
  }
}

std::string Permutation::str() const {
  std::string out;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(images[i]);
  }
  return out;
}

Permutation swapping_permutation(int b) {
  Permutation p;
  p.images.resize(static_cast<std::size_t>(b));
  for (int i = 0; i < b; ++i) p.images[static_cast<std::size_t>(i)] = b - 1 - i;
  return p;
}

Permutation intricate(const Permutation& sigma, const Permutation& tau) {
  const int b = sigma.base();
  const int c = tau.base();
  Permutation out;
  out.images.resize(static_cast<std::size_t>(b) * static_cast<std::size_t>(c));
  for (int k2 = 0; k2 < c; ++k2)
    for (int k1 = 0; k1 < b; ++k1)
      out.images[static_cast<std::size_t>(k2) * b + k1] =
          c * sigma(k1) + tau(k2);
  return out;
}

Permutation canonical_sigma_m(int m) {
  if (m < 1 || m > 20) throw std::invalid_argument("m out of range [1,20]");
  Permutation s = Permutation::from_images({0, 1});
  const Permutation two = s;
  for (int i = 2; i <= m; ++i) s = intricate(s, two);
  return s;
}

std::vector<Permutation> extend_family(const std::vector<Permutation>& pm) {
  if (pm.empty()) throw std::invalid_argument("empty family");
  const int b = pm.front().base();
  const int nb = 2 * b;
  std::set<std::vector<int>> out;
  for (const Permutation& s1 : pm) {
    for (const Permutation& s2 : pm) {
      for (int a = 1; a < nb; a += 2) {
        std::vector<int> imgs;
        imgs.reserve(static_cast<std::size_t>(nb));
        for (int v : s1.images) imgs.push_back(2 * v);
        for (int v : s2.images) imgs.push_back((2 * v + a) % nb);
        out.insert(std::move(imgs));
      }
    }
  }
  std::vector<Permutation> res;
  res.reserve(out.size());
  for (const auto& imgs : out) res.push_back(Permutation::from_images(imgs));
  return res;
}

std::vector<Permutation> enumerate_family(int m) {
  if (m < 1 || m > 4)
    throw std::invalid_argument("enumeration supported for 1 <= m <= 4");
  std::vector<Permutation> fam = {Permutation::from_images({0, 1})};
  for (int i = 2; i <= m; ++i) fam = extend_family(fam);
  return fam;
}

Int family_count(int m) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  Int c = 1;
  for (int i = 1; i < m; ++i) c = c * c * pow_int(2, static_cast<unsigned>(i));
  return c;
}

bool family_membership(const Permutation& sigma) {
  const int b = sigma.base();
  if (!is_power_of_two(b) || b < 2)
    throw std::invalid_argument("base must be a power of two, >= 2");
  if (b == 2) return sigma.images == std::vector<int>{0, 1};
  const int half = b / 2;
  std::vector<int> first(half), second(half);
  for (int i = 0; i < half; ++i) {
    first[static_cast<std::size_t>(i)] = sigma(i);
    second[static_cast<std::size_t>(i)] = sigma(half + i);
  }
  for (int v : first)
    if (v % 2 != 0) return false;
  const int a = second[0];
  if (a % 2 != 1) return false;
  std::vector<int> s1(half), s2(half);
  for (int i = 0; i < half; ++i) {
    s1[static_cast<std::size_t>(i)] = first[static_cast<std::size_t>(i)] / 2;
    int v = second[static_cast<std::size_t>(i)] - a;
    v %= b;
    if (v < 0) v += b;
    if (v % 2 != 0) return false;
    s2[static_cast<std::size_t>(i)] = v / 2;
  }
  try {
    return family_membership(Permutation::from_images(std::move(s1))) &&
           family_membership(Permutation::from_images(std::move(s2)));
  } catch (const std::invalid_argument&) {
    return false;  // a half fails to be a bijection after halving
  }
}

Permutation symmetry_transform(const Permutation& sigma, SymmetryKind kind,
                               int a) {
  const int b = sigma.base();
  Permutation out;
  out.images.resize(static_cast<std::size_t>(b));
  switch (kind) {
    case SymmetryKind::Shift:
      if (a <= 0 || a >= b) throw std::invalid_argument("shift needs 0 < a < b");
      for (int i = 0; i < b; ++i)
        out.images[static_cast<std::size_t>(i)] = (sigma(i) + a) % b;
      return out;
    case SymmetryKind::Negate:
      for (int i = 0; i < b; ++i)
        out.images[static_cast<std::size_t>(i)] = (b - sigma(i)) % b;
      return out;
    case SymmetryKind::Swap:
      for (int i = 0; i < b; ++i)
        out.images[static_cast<std::size_t>(i)] = sigma(b - 1 - i);
      return out;
  }
  throw std::invalid_argument("unknown symmetry kind");
}

namespace {

// Deterministic stream of 64-bit values for one sample index.
struct SampleRng {
  std::uint64_t state;
  std::uint64_t next() { return state = splitmix64(state); }
};

std::vector<int> sample_images(int m, SampleRng& rng) {
  if (m == 1) return {0, 1};
  const std::vector<int> s1 = sample_images(m - 1, rng);
  const std::vector<int> s2 = sample_images(m - 1, rng);
  const int nb = 1 << m;
  const int a =
      2 * static_cast<int>(rng.next() % static_cast<std::uint64_t>(nb / 2)) + 1;
  std::vector<int> imgs;
  imgs.reserve(static_cast<std::size_t>(nb));
  for (int v : s1) imgs.push_back(2 * v);
  for (int v : s2) imgs.push_back((2 * v + a) % nb);
  return imgs;
}

}  // namespace

Permutation sample_family(int m, std::uint64_t rng_seed, std::uint64_t index) {
  if (m < 1 || m > 20) throw std::invalid_argument("m out of range [1,20]");
  SampleRng rng{splitmix64(rng_seed ^ splitmix64(index))};
  return Permutation::from_images(sample_images(m, rng));
}

FamilyClosure family_closure_status(int m) {
  const std::vector<Permutation> fam = enumerate_family(m);
  std::set<std::vector<int>> members;
  for (const auto& p : fam) members.insert(p.images);
  const int b = 1 << m;
  FamilyClosure st{true, true, true};
  for (const auto& p : fam) {
    for (int a = 1; a < b && st.shift_closed; ++a)
      if (!members.count(symmetry_transform(p, SymmetryKind::Shift, a).images))
        st.shift_closed = false;
    if (st.negate_closed &&
        !members.count(symmetry_transform(p, SymmetryKind::Negate).images))
      st.negate_closed = false;
    if (st.swap_closed &&
        !members.count(symmetry_transform(p, SymmetryKind::Swap).images))
      st.swap_closed = false;
  }
  return st;
}

}  // namespace corput
