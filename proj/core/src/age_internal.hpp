#pragma once

#include "deltasys/ages.hpp"
#include "tuple_util.hpp"

#include <optional>
#include <vector>

namespace deltasys::detail {

/// All base-respecting ways to add element "n" (index n) to s.
std::vector<Structure> one_point_extensions(const AgeDescriptor& age, const Structure& s);

/// levels[s] = canonical member representatives of size s.
std::vector<std::vector<Structure>> enumerate_levels(const AgeDescriptor& age, std::size_t m);

/// A member into which both embed, glued along a partial isomorphism
/// (largest overlaps first) and completed.
std::optional<Structure> joint_embedding(const AgeDescriptor& age, const Structure& a, const Structure& b);

/// Labeled copies of every member of size |ids| on exactly `ids`.
std::vector<Structure> labeled_members(const AgeDescriptor& age, const std::vector<std::string>& ids);

} // namespace deltasys::detail
