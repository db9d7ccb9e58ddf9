#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace spinorfact {

// Generators in canonical order e1 < e2 < e3 < e+ < e-. Bit k of a blade
// mask stands for generator k, so sorting a blade ascending is sorting its
// set bits.
inline constexpr int kGenerators = 5;
inline constexpr int kBlades = 32;
inline constexpr std::array<char, kGenerators> kGeneratorNames = {'1', '2', '3', '+', '-'};
inline constexpr std::array<int, kGenerators> kMetric = {1, 1, 1, 1, -1};

class BladeIndex {
 public:
  constexpr BladeIndex() = default;
  constexpr explicit BladeIndex(std::uint8_t mask) : mask_(mask & 0x1f) {}

  static constexpr BladeIndex scalar() { return BladeIndex(0); }
  static constexpr BladeIndex generator(int k) { return BladeIndex(static_cast<std::uint8_t>(1u << k)); }

  constexpr std::uint8_t mask() const { return mask_; }
  constexpr int grade() const { return std::popcount(static_cast<unsigned>(mask_)); }
  constexpr bool contains(int k) const { return (mask_ >> k) & 1u; }

  /// "1", "e1", "e12", "e3+", "e123+-".
  std::string name() const;
  static std::optional<BladeIndex> parse(std::string_view name);

  friend constexpr bool operator==(BladeIndex, BladeIndex) = default;

 private:
  std::uint8_t mask_ = 0;
};

struct BladeProduct {
  int sign;
  BladeIndex blade;
};

/// e_I e_J = sign * e_K: transposition parity of merging the two sorted
/// generator lists, then one metric factor per shared generator.
constexpr BladeProduct blade_product(BladeIndex a, BladeIndex b) {
  unsigned am = a.mask();
  unsigned bm = b.mask();
  int swaps = 0;
  for (unsigned shifted = am >> 1; shifted != 0; shifted >>= 1) {
    swaps += std::popcount(shifted & bm);
  }
  int sign = (swaps % 2 == 0) ? 1 : -1;
  unsigned common = am & bm;
  for (int k = 0; k < kGenerators; ++k) {
    if ((common >> k) & 1u) sign *= kMetric[k];
  }
  return {sign, BladeIndex(static_cast<std::uint8_t>(am ^ bm))};
}

constexpr int reverse_sign(int grade) { return ((grade * (grade - 1) / 2) % 2 == 0) ? 1 : -1; }

namespace detail {
constexpr bool blade_less(unsigned a, unsigned b) {
  int ga = std::popcount(a);
  int gb = std::popcount(b);
  if (ga != gb) return ga < gb;
  // Same grade: lexicographic on the ascending generator list.
  for (int k = 0; k < kGenerators; ++k) {
    bool ia = (a >> k) & 1u;
    bool ib = (b >> k) & 1u;
    if (ia != ib) return ia;
  }
  return false;
}

constexpr std::array<std::uint8_t, kBlades> make_blade_order() {
  std::array<std::uint8_t, kBlades> order{};
  for (unsigned i = 0; i < kBlades; ++i) order[i] = static_cast<std::uint8_t>(i);
  for (unsigned i = 1; i < kBlades; ++i) {
    for (unsigned j = i; j > 0 && blade_less(order[j], order[j - 1]); --j) {
      auto tmp = order[j];
      order[j] = order[j - 1];
      order[j - 1] = tmp;
    }
  }
  return order;
}
}  // namespace detail

/// Canonical blade order: by grade, then lexicographically by generators.
/// JSON output and projective normalization follow this order.
inline constexpr std::array<std::uint8_t, kBlades> kBladeOrder = detail::make_blade_order();

}  // namespace spinorfact
