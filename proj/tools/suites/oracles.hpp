#pragma once

// Brute-force reference implementations. They share nothing with the search
// code in core beyond reading relation tables, and favor obviousness over speed.

#include "deltasys/structure.hpp"

#include <cstdint>
#include <vector>

namespace deltasys::oracle {

/// Sets over atoms 0..63 as bitmasks.
using Mask = std::uint64_t;

bool is_sunflower(const std::vector<Mask>& sets);
/// Size of a largest sunflower sub-family, by trying every subset (|sets| <= 20).
std::size_t max_sunflower_size(const std::vector<Mask>& sets);

/// a and b induce the same tuples under the position-wise map f (a's i to b's f[i]).
bool is_induced_map(const Structure& a, const Structure& b, const std::vector<Element>& f);
/// Every injective map of a into b that is an induced embedding, by full permutation search.
std::vector<std::vector<Element>> induced_copies(const Structure& a, const Structure& b);
bool isomorphic(const Structure& a, const Structure& b);

/// Some induced copy of a inside b has labels forming a sunflower.
bool has_sunflower_copy(const Structure& b, const Structure& a, const std::vector<Mask>& labels);

/// Every coloring of b with `colors` colors (colors^|b| of them) has a monochromatic copy of a.
bool indivisible(const Structure& b, const Structure& a, std::size_t colors);

/// Every injective labeling of b by n-subsets of [n|b|] (no symmetry reduction)
/// has a sunflower copy of a.
bool all_labelings_have_sunflower(const Structure& b, const Structure& a, std::size_t n);

/// All graphs on n vertices (every edge subset), ids "0".."n-1".
std::vector<Structure> all_graphs(std::size_t n);

} // namespace deltasys::oracle
