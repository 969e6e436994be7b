#pragma once

// Finite relational structures over opaque element ids, quantifier-free
// types, induced embeddings and canonical forms.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace deltasys {

/// Index of an element in a structure's universe.
using Element = std::uint32_t;
using Tuple = std::vector<Element>;
/// images[i] is the image of pattern element i.
using ElementMap = std::vector<Element>;

struct RelationSymbol {
    std::string name;
    std::size_t arity = 0;

    friend bool operator==(const RelationSymbol&, const RelationSymbol&) = default;
};

/// Purely relational signature. Names are distinct, arities positive.
class Signature {
public:
    Signature() = default;
    explicit Signature(std::vector<RelationSymbol> relations);
    Signature(std::initializer_list<RelationSymbol> relations)
        : Signature(std::vector<RelationSymbol>(relations)) {}

    const std::vector<RelationSymbol>& relations() const noexcept { return relations_; }
    std::size_t size() const noexcept { return relations_.size(); }
    const RelationSymbol& operator[](std::size_t i) const { return relations_.at(i); }
    std::optional<std::size_t> find(std::string_view name) const;
    std::size_t max_arity() const noexcept;

    friend bool operator==(const Signature&, const Signature&) = default;

private:
    std::vector<RelationSymbol> relations_;
};

/// Tuples of one relation, stored as mixed-radix codes over the universe
/// size. Code order equals lexicographic tuple order.
class RelationTable {
public:
    RelationTable() = default;
    RelationTable(std::size_t arity, std::size_t universe_size, std::vector<std::uint64_t> codes);

    std::size_t arity() const noexcept { return arity_; }
    std::size_t size() const noexcept { return codes_.size(); }
    bool empty() const noexcept { return codes_.empty(); }

    bool contains(std::span<const Element> tuple) const { return contains_code(encode(tuple)); }
    bool contains_code(std::uint64_t code) const;
    std::uint64_t encode(std::span<const Element> tuple) const;
    Tuple decode(std::uint64_t code) const;

    const std::vector<std::uint64_t>& codes() const noexcept { return codes_; }
    std::vector<Tuple> tuples() const;

    friend bool operator==(const RelationTable& a, const RelationTable& b) {
        return a.arity_ == b.arity_ && a.n_ == b.n_ && a.codes_ == b.codes_;
    }

private:
    std::size_t arity_ = 0;
    std::size_t n_ = 0;
    std::vector<std::uint64_t> codes_;
    std::vector<bool> dense_;
};

class Structure {
public:
    Structure() = default;
    explicit Structure(Signature signature);
    Structure(Signature signature, std::vector<std::string> universe,
              std::vector<std::vector<Tuple>> tables);

    const Signature& signature() const noexcept { return signature_; }
    std::size_t size() const noexcept { return universe_.size(); }
    bool empty() const noexcept { return universe_.empty(); }

    const std::vector<std::string>& universe() const noexcept { return universe_; }
    const std::string& id(Element e) const { return universe_.at(e); }
    std::optional<Element> index_of(std::string_view id) const;
    /// Throws Errc::unknown_element ("element not in universe").
    Element require(std::string_view id) const;

    const RelationTable& table(std::size_t relation) const { return tables_.at(relation); }
    bool holds(std::size_t relation, std::span<const Element> tuple) const {
        return tables_[relation].contains(tuple);
    }
    bool holds_ids(std::string_view relation, std::initializer_list<std::string_view> ids) const;

    std::size_t tuple_count() const noexcept;

    friend bool operator==(const Structure& a, const Structure& b) {
        return a.signature_ == b.signature_ && a.universe_ == b.universe_ && a.tables_ == b.tables_;
    }

private:
    Signature signature_;
    std::vector<std::string> universe_;
    std::unordered_map<std::string, Element> index_;
    std::vector<RelationTable> tables_;
};

/// Incremental construction; validation happens in build().
class StructureBuilder {
public:
    explicit StructureBuilder(Signature signature);

    Element add_element(std::string id);
    Element ensure_element(const std::string& id);
    void add_tuple(std::size_t relation, Tuple tuple);
    void add_tuple(std::string_view relation, std::initializer_list<std::string_view> ids);
    std::size_t size() const noexcept { return universe_.size(); }

    Structure build() const;

private:
    Signature signature_;
    std::vector<std::string> universe_;
    std::unordered_map<std::string, Element> index_;
    std::vector<std::vector<Tuple>> tables_;
};

/// Complete quantifier-free type of a tuple: the equality pattern plus, for
/// every relation and every position tuple, whether the literal holds.
class QfType {
public:
    struct Literal {
        std::string relation;
        std::vector<std::size_t> positions;
        bool positive = false;
    };

    QfType() = default;
    QfType(Signature signature, std::vector<std::uint32_t> pattern, std::vector<std::vector<bool>> bits);

    std::size_t arity() const noexcept { return pattern_.size(); }
    /// pattern[i] = block index of position i, blocks numbered by first appearance.
    const std::vector<std::uint32_t>& equality_pattern() const noexcept { return pattern_; }
    std::vector<std::vector<std::size_t>> partition() const;
    std::vector<Literal> literals() const;
    bool holds(std::size_t relation, std::span<const std::size_t> positions) const;

    friend bool operator==(const QfType&, const QfType&) = default;

private:
    Signature signature_;
    std::vector<std::uint32_t> pattern_;
    std::vector<std::vector<bool>> bits_;
};

QfType qf_type(const Structure& s, std::span<const Element> tuple);
QfType qf_type(const Structure& s, std::span<const std::string> ids);

/// Substructure on `subset`, keeping the universe order of `s`.
Structure restrict(const Structure& s, std::span<const std::string> subset);
/// Substructure on the given elements, in the given order.
Structure induced(const Structure& s, std::span<const Element> elements);

/// Rebuild `s` with element order `order` (a permutation of its universe)
/// renamed to `ids`.
Structure relabel(const Structure& s, std::span<const Element> order, std::vector<std::string> ids);

std::optional<ElementMap> find_isomorphism(const Structure& a, const Structure& b);
bool is_isomorphic(const Structure& a, const Structure& b);

/// Induced embeddings of `a` into `b`, lexicographic in the image sequence.
std::vector<ElementMap> find_embeddings(const Structure& a, const Structure& b,
                                        std::optional<std::size_t> limit = std::nullopt);
bool embeds(const Structure& a, const Structure& b);

struct CanonicalLabeling {
    std::string form;
    /// order[k] = original element placed at canonical position k.
    std::vector<Element> order;
};

CanonicalLabeling canonical_labeling(const Structure& s);
std::string canonical_form(const Structure& s);
/// The structure relabeled in canonical order with ids "0".."n-1".
Structure canonical_representative(const Structure& s);

} // namespace deltasys
