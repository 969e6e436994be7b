#pragma once

// Families of finite atom-sets, sunflower detection and extraction, and
// structures whose elements carry atom-set labels.

#include "deltasys/structure.hpp"

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace deltasys {

/// Opaque atom: an integer or a string. Integers order numerically and
/// precede strings; strings order lexicographically.
class Atom {
public:
    Atom() = default;
    Atom(std::int64_t v) : value_(v) {} // NOLINT(google-explicit-constructor)
    Atom(int v) : value_(static_cast<std::int64_t>(v)) {} // NOLINT(google-explicit-constructor)
    explicit Atom(std::string s) : value_(std::move(s)) {}

    bool is_integer() const noexcept { return value_.index() == 0; }
    std::int64_t integer() const { return std::get<0>(value_); }
    const std::string& text() const { return std::get<1>(value_); }
    /// JSON rendering: 17 or "p:0:1".
    std::string serialized() const;

    friend bool operator==(const Atom&, const Atom&) = default;
    friend auto operator<=>(const Atom&, const Atom&) = default;

private:
    std::variant<std::int64_t, std::string> value_{std::int64_t{0}};
};

/// Sorted, duplicate-free.
using AtomSet = std::vector<Atom>;

AtomSet make_atom_set(std::vector<Atom> atoms);
AtomSet atom_set(std::initializer_list<std::int64_t> atoms);
AtomSet set_intersection(const AtomSet& a, const AtomSet& b);

/// Pairwise distinct atom-sets, in a fixed member order.
class SetFamily {
public:
    SetFamily() = default;
    explicit SetFamily(std::vector<AtomSet> members);
    SetFamily(std::initializer_list<std::initializer_list<std::int64_t>> members);

    const std::vector<AtomSet>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    const AtomSet& operator[](std::size_t i) const { return members_.at(i); }
    SetFamily subfamily(const std::vector<std::size_t>& indices) const;

private:
    std::vector<AtomSet> members_;
};

struct SunflowerWitness {
    std::vector<std::size_t> indices; // increasing
    AtomSet kernel;

    friend bool operator==(const SunflowerWitness&, const SunflowerWitness&) = default;
};

/// Common pairwise intersection. Throws Errc::kernel_undefined below 2 members.
std::optional<AtomSet> kernel(const SetFamily& family);
bool is_sunflower(const SetFamily& family);

/// Largest sunflower sub-family; among equal sizes the lexicographically
/// least index sequence. A single member is its own kernel.
SunflowerWitness max_sunflower(const SetFamily& family);

/// n!(k-1)^n, saturating at UINT64_MAX.
std::uint64_t erdos_rado_threshold(std::size_t n, std::size_t k);
/// Classical recursive extraction. Members must share a size n; throws
/// Errc::below_threshold unless |family| > n!(k-1)^n.
SunflowerWitness erdos_rado_extract(const SetFamily& family, std::size_t k);

/// A structure together with an injective labeling of its elements by atom-sets.
class SetLabeling {
public:
    SetLabeling() = default;
    SetLabeling(Structure base, std::vector<AtomSet> labels, std::optional<std::size_t> uniform_size = std::nullopt);

    const Structure& base() const noexcept { return base_; }
    const std::vector<AtomSet>& labels() const noexcept { return labels_; }
    const AtomSet& label(Element e) const { return labels_.at(e); }
    std::optional<std::size_t> uniform_size() const noexcept { return uniform_size_; }
    SetFamily family() const { return SetFamily(labels_); }

    friend bool operator==(const SetLabeling&, const SetLabeling&) = default;

private:
    Structure base_;
    std::vector<AtomSet> labels_;
    std::optional<std::size_t> uniform_size_;
};

/// Adds `fresh` to every label.
SetLabeling pad_labeling(const SetLabeling& lab, const Atom& fresh);
/// Renames atoms to 0, 1, ... by first appearance (elements in universe
/// order, atoms in increasing order within a label).
SetLabeling normalize_atoms(const SetLabeling& lab);

struct StructuredSunflower {
    ElementMap embedding; // target element -> base element
    SunflowerWitness witness; // indices are base elements
};

/// First induced copy of `target` whose labels form a sunflower, in
/// lexicographic order of image sequences.
std::optional<StructuredSunflower> find_structured_sunflower(const SetLabeling& lab, const Structure& target);

} // namespace deltasys
