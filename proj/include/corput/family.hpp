#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "corput/rational.hpp"

namespace corput {

// Bijection on {0,...,b-1}, stored positionally: images[i] is the image of i.
struct Permutation {
  std::vector<int> images;

  int base() const { return static_cast<int>(images.size()); }
  int operator()(int k) const { return images[static_cast<std::size_t>(k)]; }

  static Permutation identity(int b);
  // Validates that images is a bijection on {0,...,b-1}.
  static Permutation from_images(std::vector<int> images);
  // Comma-separated images, e.g. "0,2,1,3".
  static std::optional<Permutation> parse(const std::string& s);
  std::string str() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;
};

// k -> b-1-k; composing on the right reverses the tuple.
Permutation swapping_permutation(int b);

// Faure product: (sigma . tau)(k'' b + k') = c sigma(k') + tau(k'') for
// sigma on base b, tau on base c; result acts on base b*c.
Permutation intricate(const Permutation& sigma, const Permutation& tau);

// sigma_1 = (0,1), sigma_m = sigma_{m-1} . (0,1) = (2 sigma_{m-1}, 2 sigma_{m-1} (+) 1).
// Requires 1 <= m <= 20 (the tuple has 2^m entries).
Permutation canonical_sigma_m(int m);

// All (2 sigma, 2 sigma' (+) a) for sigma, sigma' in the input family and odd
// a with 1 <= a < 2^{m+1}; addition modulo 2^{m+1}. Sorted, duplicate-free.
std::vector<Permutation> extend_family(const std::vector<Permutation>& pm);

// Full enumeration of the permutation family in base 2^m; m <= 4 only
// (the next family already has 2^26 members).
std::vector<Permutation> enumerate_family(int m);

// |P_1| = 1, |P_{m+1}| = |P_m|^2 * 2^m.
Int family_count(int m);

// Recursive decision procedure: true iff sigma decomposes as
// (2 sigma_1, 2 sigma_2 (+) a) with both halves members and a odd.
// Throws std::invalid_argument when the base is not a power of two.
bool family_membership(const Permutation& sigma);

enum class SymmetryKind { Shift, Negate, Swap };

// Shift: x -> sigma(x) + a (mod b), 0 < a < b. Negate: x -> -sigma(x) (mod b).
// Swap: sigma composed with the swapping permutation (tuple reversal).
Permutation symmetry_transform(const Permutation& sigma, SymmetryKind kind,
                               int a = 0);

// Uniform draw from the family in base 2^m, deterministic per (rng_seed,
// index): the (sigma_1, sigma_2, a) parameterization is sampled recursively.
Permutation sample_family(int m, std::uint64_t rng_seed, std::uint64_t index);

// Empirical closure of the enumerated family under the symmetry transforms.
struct FamilyClosure {
  bool shift_closed = false;
  bool negate_closed = false;
  bool swap_closed = false;
};
FamilyClosure family_closure_status(int m);  // m <= 4

std::uint64_t splitmix64(std::uint64_t z);

}  // namespace corput
