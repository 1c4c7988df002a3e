#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "stacksort/permutation.hpp"
#include "stacksort/vhc.hpp"

namespace stacksort {

inline constexpr int kGridPitch = 40;
inline constexpr const char* kSkyColor = "#1f5fd6";

// Fill color for hook ordinal t (1-based); never the sky color.
const char* hook_color(std::size_t t);

// One SVG 1.1 document showing the plot, the hooks of config, and the
// induced coloring. NE endpoints are drawn hollow.
std::string render_configuration(const Permutation& p, const HookConfiguration& config);

// Documents for the VHC with the given 1-based ordinal, or for all VHCs when
// ordinal is empty. Throws UnsortedPermutation when p has none.
std::vector<std::string> render_svg(const Permutation& p, std::optional<std::size_t> ordinal = std::nullopt);

}  // namespace stacksort
