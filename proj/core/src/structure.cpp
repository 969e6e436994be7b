#include "deltasys/structure.hpp"

#include "deltasys/error.hpp"
#include "embedding_search.hpp"
#include "tuple_util.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace deltasys {

namespace {

constexpr std::uint64_t dense_limit = std::uint64_t{1} << 24;

// n^arity, or nullopt if it does not fit in 64 bits.
std::optional<std::uint64_t> checked_power(std::uint64_t n, std::size_t arity) {
    std::uint64_t result = 1;
    for (std::size_t i = 0; i < arity; ++i) {
        if (n != 0 && result > std::numeric_limits<std::uint64_t>::max() / n) {
            return std::nullopt;
        }
        result *= n;
    }
    return result;
}

void require_same_signature(const Structure& a, const Structure& b) {
    if (a.signature() != b.signature()) {
        throw Error(Errc::signature_mismatch, "signature mismatch");
    }
}

} // namespace

// ---------------------------------------------------------------- Signature

Signature::Signature(std::vector<RelationSymbol> relations) : relations_(std::move(relations)) {
    for (std::size_t i = 0; i < relations_.size(); ++i) {
        if (relations_[i].arity == 0) {
            throw Error(Errc::invalid_argument, "relation '" + relations_[i].name + "' must have positive arity");
        }
        if (relations_[i].name.empty()) {
            throw Error(Errc::invalid_argument, "relation names must be nonempty");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (relations_[j].name == relations_[i].name) {
                throw Error(Errc::invalid_argument, "duplicate relation name '" + relations_[i].name + "'");
            }
        }
    }
}

std::optional<std::size_t> Signature::find(std::string_view name) const {
    for (std::size_t i = 0; i < relations_.size(); ++i) {
        if (relations_[i].name == name) {
            return i;
        }
    }
    return std::nullopt;
}

std::size_t Signature::max_arity() const noexcept {
    std::size_t m = 0;
    for (const auto& r : relations_) {
        m = std::max(m, r.arity);
    }
    return m;
}

// ------------------------------------------------------------ RelationTable

RelationTable::RelationTable(std::size_t arity, std::size_t universe_size, std::vector<std::uint64_t> codes)
    : arity_(arity), n_(universe_size), codes_(std::move(codes)) {
    const auto space = checked_power(n_, arity_);
    if (!space) {
        throw Error(Errc::invalid_argument, "relation too large to encode");
    }
    std::sort(codes_.begin(), codes_.end());
    codes_.erase(std::unique(codes_.begin(), codes_.end()), codes_.end());
    if (!codes_.empty() && codes_.back() >= *space) {
        throw Error(Errc::invalid_argument, "tuple code out of range");
    }
    if (*space <= dense_limit) {
        dense_.assign(*space, false);
        for (const auto c : codes_) {
            dense_[c] = true;
        }
    }
}

bool RelationTable::contains_code(std::uint64_t code) const {
    if (!dense_.empty()) {
        return code < dense_.size() && dense_[code];
    }
    return std::binary_search(codes_.begin(), codes_.end(), code);
}

std::uint64_t RelationTable::encode(std::span<const Element> tuple) const {
    std::uint64_t code = 0;
    for (const auto e : tuple) {
        code = code * n_ + e;
    }
    return code;
}

Tuple RelationTable::decode(std::uint64_t code) const {
    Tuple t(arity_, 0);
    for (std::size_t k = arity_; k-- > 0;) {
        t[k] = static_cast<Element>(code % n_);
        code /= n_;
    }
    return t;
}

std::vector<Tuple> RelationTable::tuples() const {
    std::vector<Tuple> out;
    out.reserve(codes_.size());
    for (const auto c : codes_) {
        out.push_back(decode(c));
    }
    return out;
}

// ---------------------------------------------------------------- Structure

Structure::Structure(Signature signature) : Structure(std::move(signature), {}, {}) {}

Structure::Structure(Signature signature, std::vector<std::string> universe, std::vector<std::vector<Tuple>> tables)
    : signature_(std::move(signature)), universe_(std::move(universe)) {
    for (std::size_t i = 0; i < universe_.size(); ++i) {
        if (!index_.emplace(universe_[i], static_cast<Element>(i)).second) {
            throw Error(Errc::invalid_argument, "duplicate element id '" + universe_[i] + "'");
        }
    }
    if (tables.empty()) {
        tables.resize(signature_.size());
    }
    if (tables.size() != signature_.size()) {
        throw Error(Errc::invalid_argument, "table count does not match signature");
    }
    const auto n = universe_.size();
    tables_.reserve(signature_.size());
    for (std::size_t r = 0; r < signature_.size(); ++r) {
        const auto arity = signature_[r].arity;
        std::vector<std::uint64_t> codes;
        codes.reserve(tables[r].size());
        for (std::size_t t = 0; t < tables[r].size(); ++t) {
            const auto& tuple = tables[r][t];
            if (tuple.size() != arity) {
                throw Error(Errc::invalid_argument, "tuple " + std::to_string(t) + " of relation '" +
                                                        signature_[r].name + "' has wrong arity");
            }
            std::uint64_t code = 0;
            for (const auto e : tuple) {
                if (e >= n) {
                    throw Error(Errc::unknown_element, "element not in universe");
                }
                code = code * n + e;
            }
            codes.push_back(code);
        }
        tables_.emplace_back(arity, n, std::move(codes));
    }
}

std::optional<Element> Structure::index_of(std::string_view id) const {
    const auto it = index_.find(std::string(id));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

Element Structure::require(std::string_view id) const {
    const auto e = index_of(id);
    if (!e) {
        throw Error(Errc::unknown_element, "element not in universe");
    }
    return *e;
}

bool Structure::holds_ids(std::string_view relation, std::initializer_list<std::string_view> ids) const {
    const auto r = signature_.find(relation);
    if (!r) {
        throw Error(Errc::invalid_argument, "unknown relation '" + std::string(relation) + "'");
    }
    Tuple t;
    for (const auto id : ids) {
        t.push_back(require(id));
    }
    if (t.size() != signature_[*r].arity) {
        throw Error(Errc::invalid_argument, "wrong arity for relation '" + std::string(relation) + "'");
    }
    return holds(*r, t);
}

std::size_t Structure::tuple_count() const noexcept {
    std::size_t total = 0;
    for (const auto& t : tables_) {
        total += t.size();
    }
    return total;
}

// ---------------------------------------------------------- StructureBuilder

StructureBuilder::StructureBuilder(Signature signature)
    : signature_(std::move(signature)), tables_(signature_.size()) {}

Element StructureBuilder::add_element(std::string id) {
    const auto e = static_cast<Element>(universe_.size());
    if (!index_.emplace(id, e).second) {
        throw Error(Errc::invalid_argument, "duplicate element id '" + id + "'");
    }
    universe_.push_back(std::move(id));
    return e;
}

Element StructureBuilder::ensure_element(const std::string& id) {
    const auto it = index_.find(id);
    if (it != index_.end()) {
        return it->second;
    }
    return add_element(id);
}

void StructureBuilder::add_tuple(std::size_t relation, Tuple tuple) {
    if (relation >= tables_.size()) {
        throw Error(Errc::invalid_argument, "relation index out of range");
    }
    tables_[relation].push_back(std::move(tuple));
}

void StructureBuilder::add_tuple(std::string_view relation, std::initializer_list<std::string_view> ids) {
    const auto r = signature_.find(relation);
    if (!r) {
        throw Error(Errc::invalid_argument, "unknown relation '" + std::string(relation) + "'");
    }
    Tuple t;
    for (const auto id : ids) {
        const auto it = index_.find(std::string(id));
        if (it == index_.end()) {
            throw Error(Errc::unknown_element, "element not in universe");
        }
        t.push_back(it->second);
    }
    tables_[*r].push_back(std::move(t));
}

Structure StructureBuilder::build() const { return Structure(signature_, universe_, tables_); }

// ------------------------------------------------------------------ QfType

QfType::QfType(Signature signature, std::vector<std::uint32_t> pattern, std::vector<std::vector<bool>> bits)
    : signature_(std::move(signature)), pattern_(std::move(pattern)), bits_(std::move(bits)) {}

std::vector<std::vector<std::size_t>> QfType::partition() const {
    std::vector<std::vector<std::size_t>> blocks;
    for (std::size_t i = 0; i < pattern_.size(); ++i) {
        if (pattern_[i] >= blocks.size()) {
            blocks.resize(pattern_[i] + 1);
        }
        blocks[pattern_[i]].push_back(i);
    }
    return blocks;
}

bool QfType::holds(std::size_t relation, std::span<const std::size_t> positions) const {
    std::size_t index = 0;
    for (const auto p : positions) {
        index = index * pattern_.size() + p;
    }
    return bits_.at(relation).at(index);
}

std::vector<QfType::Literal> QfType::literals() const {
    std::vector<Literal> out;
    for (std::size_t r = 0; r < signature_.size(); ++r) {
        const auto arity = signature_[r].arity;
        if (pattern_.empty()) {
            continue;
        }
        std::vector<std::size_t> pos(arity, 0);
        std::size_t index = 0;
        do {
            out.push_back({signature_[r].name, pos, bits_[r][index++]});
        } while (detail::next_tuple(pos, pattern_.size()));
    }
    return out;
}

QfType qf_type(const Structure& s, std::span<const Element> tuple) {
    const auto len = tuple.size();
    std::vector<std::uint32_t> pattern(len, 0);
    std::uint32_t blocks = 0;
    for (std::size_t i = 0; i < len; ++i) {
        if (tuple[i] >= s.size()) {
            throw Error(Errc::unknown_element, "element not in universe");
        }
        std::size_t j = 0;
        while (j < i && tuple[j] != tuple[i]) {
            ++j;
        }
        pattern[i] = j < i ? pattern[j] : blocks++;
    }
    std::vector<std::vector<bool>> bits(s.signature().size());
    if (len > 0) {
        for (std::size_t r = 0; r < s.signature().size(); ++r) {
            const auto arity = s.signature()[r].arity;
            std::vector<std::size_t> pos(arity, 0);
            Tuple mapped(arity, 0);
            do {
                for (std::size_t k = 0; k < arity; ++k) {
                    mapped[k] = tuple[pos[k]];
                }
                bits[r].push_back(s.holds(r, mapped));
            } while (detail::next_tuple(pos, len));
        }
    }
    return QfType(s.signature(), std::move(pattern), std::move(bits));
}

QfType qf_type(const Structure& s, std::span<const std::string> ids) {
    Tuple t;
    t.reserve(ids.size());
    for (const auto& id : ids) {
        t.push_back(s.require(id));
    }
    return qf_type(s, t);
}

// --------------------------------------------------------- substructures

Structure induced(const Structure& s, std::span<const Element> elements) {
    constexpr Element absent = std::numeric_limits<Element>::max();
    std::vector<Element> to_new(s.size(), absent);
    std::vector<std::string> universe;
    universe.reserve(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (elements[i] >= s.size()) {
            throw Error(Errc::unknown_element, "element not in universe");
        }
        if (to_new[elements[i]] != absent) {
            throw Error(Errc::invalid_argument, "repeated element in substructure");
        }
        to_new[elements[i]] = static_cast<Element>(i);
        universe.push_back(s.id(elements[i]));
    }
    const auto k = elements.size();
    std::vector<std::vector<Tuple>> tables(s.signature().size());
    for (std::size_t r = 0; r < s.signature().size(); ++r) {
        const auto& table = s.table(r);
        const auto arity = table.arity();
        const auto space = checked_power(k, arity);
        if (k > 0 && space && *space <= table.size()) {
            Tuple pos(arity, 0);
            Tuple mapped(arity, 0);
            do {
                for (std::size_t p = 0; p < arity; ++p) {
                    mapped[p] = elements[pos[p]];
                }
                if (s.holds(r, mapped)) {
                    tables[r].push_back(pos);
                }
            } while (detail::next_tuple(pos, k));
        } else if (k > 0) {
            for (const auto code : table.codes()) {
                Tuple t = table.decode(code);
                bool inside = true;
                for (auto& e : t) {
                    e = to_new[e];
                    if (e == absent) {
                        inside = false;
                        break;
                    }
                }
                if (inside) {
                    tables[r].push_back(std::move(t));
                }
            }
        }
    }
    return Structure(s.signature(), std::move(universe), std::move(tables));
}

Structure restrict(const Structure& s, std::span<const std::string> subset) {
    std::vector<char> keep(s.size(), 0);
    for (const auto& id : subset) {
        keep[s.require(id)] = 1;
    }
    std::vector<Element> elements;
    for (std::size_t e = 0; e < s.size(); ++e) {
        if (keep[e]) {
            elements.push_back(static_cast<Element>(e));
        }
    }
    return induced(s, elements);
}

Structure relabel(const Structure& s, std::span<const Element> order, std::vector<std::string> ids) {
    if (order.size() != s.size() || ids.size() != s.size()) {
        throw Error(Errc::invalid_argument, "relabel needs a permutation of the universe");
    }
    Structure permuted = induced(s, order);
    std::vector<std::vector<Tuple>> tables;
    for (std::size_t r = 0; r < s.signature().size(); ++r) {
        tables.push_back(permuted.table(r).tuples());
    }
    return Structure(s.signature(), std::move(ids), std::move(tables));
}

// ------------------------------------------------------- iso & embeddings

std::optional<ElementMap> find_isomorphism(const Structure& a, const Structure& b) {
    require_same_signature(a, b);
    if (a.size() != b.size()) {
        return std::nullopt;
    }
    for (std::size_t r = 0; r < a.signature().size(); ++r) {
        if (a.table(r).size() != b.table(r).size()) {
            return std::nullopt;
        }
    }
    std::optional<ElementMap> found;
    detail::EmbeddingSearch search(a, b, true);
    search.run([](std::size_t, Element, std::span<const Element>) { return true; },
               [&](std::span<const Element> images) {
                   found.emplace(images.begin(), images.end());
                   return false;
               });
    return found;
}

bool is_isomorphic(const Structure& a, const Structure& b) { return find_isomorphism(a, b).has_value(); }

std::vector<ElementMap> find_embeddings(const Structure& a, const Structure& b, std::optional<std::size_t> limit) {
    require_same_signature(a, b);
    std::vector<ElementMap> out;
    if (limit && *limit == 0) {
        return out;
    }
    detail::EmbeddingSearch search(a, b, false);
    search.run([](std::size_t, Element, std::span<const Element>) { return true; },
               [&](std::span<const Element> images) {
                   out.emplace_back(images.begin(), images.end());
                   return !(limit && out.size() >= *limit);
               });
    return out;
}

bool embeds(const Structure& a, const Structure& b) { return !find_embeddings(a, b, 1).empty(); }

// ------------------------------------------------------------ canonical form

namespace {

class Canonicalizer {
public:
    explicit Canonicalizer(const Structure& s) : s_(s), n_(s.size()) {
        const auto& sig = s.signature();
        header_ = "n=" + std::to_string(n_) + ";sig=";
        for (std::size_t r = 0; r < sig.size(); ++r) {
            header_ += (r ? "," : "") + sig[r].name + "/" + std::to_string(sig[r].arity);
        }
        header_ += ";";
        level_positions_.resize(n_);
        for (std::size_t k = 0; k < n_; ++k) {
            level_positions_[k].resize(sig.size());
            for (std::size_t r = 0; r < sig.size(); ++r) {
                level_positions_[k][r] = detail::tuples_mentioning(k, sig[r].arity);
            }
        }
        twin_class_.resize(n_);
        std::iota(twin_class_.begin(), twin_class_.end(), Element{0});
        if (n_ <= 32) {
            compute_twins();
        }
    }

    CanonicalLabeling run() {
        placed_.assign(n_, 0);
        used_.assign(n_, 0);
        current_.clear();
        best_.clear();
        have_best_ = false;
        descend(0);
        return {header_ + best_, best_order_};
    }

private:
    // Transposition (u v) is an automorphism.
    bool swap_is_automorphism(Element u, Element v) const {
        for (std::size_t r = 0; r < s_.signature().size(); ++r) {
            const auto& table = s_.table(r);
            for (const auto code : table.codes()) {
                Tuple t = table.decode(code);
                bool touched = false;
                for (auto& e : t) {
                    if (e == u) {
                        e = v;
                        touched = true;
                    } else if (e == v) {
                        e = u;
                        touched = true;
                    }
                }
                if (touched && !table.contains(t)) {
                    return false;
                }
            }
        }
        return true;
    }

    void compute_twins() {
        for (Element v = 0; v < n_; ++v) {
            for (Element u = 0; u < v; ++u) {
                if (twin_class_[u] == u && swap_is_automorphism(u, v)) {
                    twin_class_[v] = u;
                    break;
                }
            }
        }
    }

    void block_for(std::size_t k, Element v, std::string& out) const {
        out.clear();
        Tuple mapped;
        for (std::size_t r = 0; r < s_.signature().size(); ++r) {
            for (const auto& pos : level_positions_[k][r]) {
                mapped.resize(pos.size());
                for (std::size_t p = 0; p < pos.size(); ++p) {
                    mapped[p] = pos[p] == k ? v : placed_[pos[p]];
                }
                out.push_back(s_.holds(r, mapped) ? '1' : '0');
            }
        }
    }

    bool worse_than_best() const {
        return have_best_ && best_.compare(0, current_.size(), current_) < 0;
    }

    void descend(std::size_t k) {
        if (k == n_) {
            if (!have_best_ || current_ < best_) {
                best_ = current_;
                best_order_.assign(placed_.begin(), placed_.end());
                have_best_ = true;
            }
            return;
        }
        std::vector<Element> options;
        std::string block;
        std::string minimal;
        std::vector<char> class_tried(n_, 0);
        for (Element v = 0; v < n_; ++v) {
            if (used_[v] || class_tried[twin_class_[v]]) {
                continue;
            }
            class_tried[twin_class_[v]] = 1;
            block_for(k, v, block);
            if (options.empty() || block < minimal) {
                minimal = block;
                options.clear();
            }
            if (block == minimal) {
                options.push_back(v);
            }
        }
        const auto offset = current_.size();
        current_ += minimal;
        for (const auto v : options) {
            if (worse_than_best()) {
                break;
            }
            placed_[k] = v;
            used_[v] = 1;
            descend(k + 1);
            used_[v] = 0;
        }
        current_.resize(offset);
    }

    const Structure& s_;
    std::size_t n_;
    std::string header_;
    std::vector<std::vector<std::vector<std::vector<std::uint32_t>>>> level_positions_;
    std::vector<Element> twin_class_;

    std::vector<Element> placed_;
    std::vector<char> used_;
    std::string current_;
    std::string best_;
    std::vector<Element> best_order_;
    bool have_best_ = false;
};

} // namespace

CanonicalLabeling canonical_labeling(const Structure& s) { return Canonicalizer(s).run(); }

std::string canonical_form(const Structure& s) { return canonical_labeling(s).form; }

Structure canonical_representative(const Structure& s) {
    const auto labeling = canonical_labeling(s);
    std::vector<std::string> ids;
    ids.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        ids.push_back(std::to_string(i));
    }
    return relabel(s, labeling.order, std::move(ids));
}

} // namespace deltasys
