#include "spinorfact/blade.hpp"

namespace spinorfact {

std::string BladeIndex::name() const {
  if (mask_ == 0) return "1";
  std::string s = "e";
  for (int k = 0; k < kGenerators; ++k)
    if (contains(k)) s += kGeneratorNames[k];
  return s;
}

std::optional<BladeIndex> BladeIndex::parse(std::string_view name) {
  if (name == "1") return BladeIndex::scalar();
  if (name.size() < 2 || name.front() != 'e') return std::nullopt;
  unsigned mask = 0;
  int last = -1;
  for (char ch : name.substr(1)) {
    int k = -1;
    for (int g = 0; g < kGenerators; ++g)
      if (kGeneratorNames[g] == ch) k = g;
    // Generators must appear in canonical ascending order, without repeats.
    if (k <= last) return std::nullopt;
    mask |= 1u << k;
    last = k;
  }
  return BladeIndex(static_cast<std::uint8_t>(mask));
}

}  // namespace spinorfact
