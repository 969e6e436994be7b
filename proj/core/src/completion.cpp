#include "deltasys/ages.hpp"

#include "deltasys/catalog.hpp"
#include "deltasys/error.hpp"
#include "age_internal.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <unordered_map>

namespace deltasys {

namespace {

using Orbit = std::vector<std::pair<std::size_t, Tuple>>;

std::uint64_t encode(const Tuple& t, std::size_t n) {
    std::uint64_t code = 0;
    for (const auto e : t) {
        code = code * n + e;
    }
    return code;
}

Tuple decode(std::uint64_t code, std::size_t arity, std::size_t n) {
    Tuple t(arity, 0);
    for (std::size_t k = arity; k-- > 0;) {
        t[k] = static_cast<Element>(code % n);
        code /= n;
    }
    return t;
}

// Free tuples allowed by the base, grouped so that symmetric bases add or
// drop a whole orbit at once.
bool orbit_leader(const AgeDescriptor& age, const Tuple& t, Orbit& orbit, std::size_t r) {
    orbit.clear();
    switch (age.base) {
    case AgeBase::all:
        orbit.emplace_back(r, t);
        return true;
    case AgeBase::graphs:
        if (t[0] >= t[1]) {
            return false;
        }
        orbit.emplace_back(r, t);
        orbit.emplace_back(r, Tuple{t[1], t[0]});
        return true;
    case AgeBase::linear_orders:
        if (t[0] == t[1]) {
            return false;
        }
        orbit.emplace_back(r, t);
        return true;
    case AgeBase::hypergraph: {
        for (std::size_t i = 1; i < t.size(); ++i) {
            if (t[i - 1] >= t[i]) {
                return false;
            }
        }
        Tuple p = t;
        do {
            orbit.emplace_back(r, p);
        } while (std::next_permutation(p.begin(), p.end()));
        return true;
    }
    }
    return false;
}

} // namespace

Completion complete(const AgeDescriptor& age, const std::vector<std::string>& universe,
                    const std::vector<const Structure*>& pieces, std::uint64_t budget) {
    const auto& sig = age.signature;
    const std::size_t n = universe.size();
    std::unordered_map<std::string, Element> index;
    for (std::size_t i = 0; i < n; ++i) {
        if (!index.emplace(universe[i], static_cast<Element>(i)).second) {
            throw Error(Errc::invalid_argument, "duplicate element id '" + universe[i] + "'");
        }
    }
    const std::size_t np = pieces.size();
    std::vector<std::vector<char>> in_piece(np, std::vector<char>(n, 0));
    // true_codes[p][r]: piece p's tuples in union coordinates, sorted.
    std::vector<std::vector<std::vector<std::uint64_t>>> true_codes(np, std::vector<std::vector<std::uint64_t>>(sig.size()));
    for (std::size_t p = 0; p < np; ++p) {
        const auto& piece = *pieces[p];
        if (piece.signature() != sig) {
            throw Error(Errc::signature_mismatch, "signature mismatch");
        }
        std::vector<Element> to_union(piece.size());
        for (Element e = 0; e < piece.size(); ++e) {
            const auto it = index.find(piece.id(e));
            if (it == index.end()) {
                throw Error(Errc::unknown_element, "element not in universe");
            }
            to_union[e] = it->second;
            in_piece[p][it->second] = 1;
        }
        for (std::size_t r = 0; r < sig.size(); ++r) {
            for (const auto code : piece.table(r).codes()) {
                auto t = piece.table(r).decode(code);
                for (auto& e : t) {
                    e = to_union[e];
                }
                true_codes[p][r].push_back(encode(t, n));
            }
            std::sort(true_codes[p][r].begin(), true_codes[p][r].end());
        }
    }

    auto inside = [&](std::size_t p, const Tuple& t) {
        return std::all_of(t.begin(), t.end(), [&](Element e) { return in_piece[p][e] != 0; });
    };

    Completion result;
    for (std::size_t p = 0; p < np; ++p) {
        for (std::size_t q = 0; q < np; ++q) {
            if (p == q) {
                continue;
            }
            for (std::size_t r = 0; r < sig.size(); ++r) {
                for (const auto code : true_codes[p][r]) {
                    const auto t = decode(code, sig[r].arity, n);
                    if (inside(q, t) && !std::binary_search(true_codes[q][r].begin(), true_codes[q][r].end(), code)) {
                        result.status = CompletionStatus::disagreement;
                        return result;
                    }
                }
            }
        }
    }

    std::vector<std::vector<Tuple>> fixed(sig.size());
    for (std::size_t r = 0; r < sig.size(); ++r) {
        std::vector<std::uint64_t> all;
        for (std::size_t p = 0; p < np; ++p) {
            all.insert(all.end(), true_codes[p][r].begin(), true_codes[p][r].end());
        }
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        for (const auto code : all) {
            fixed[r].push_back(decode(code, sig[r].arity, n));
        }
    }

    std::vector<Orbit> orbits;
    Orbit orbit;
    for (std::size_t r = 0; r < sig.size() && n > 0; ++r) {
        Tuple t(sig[r].arity, 0);
        do {
            bool covered = false;
            for (std::size_t p = 0; p < np && !covered; ++p) {
                covered = inside(p, t);
            }
            if (!covered && orbit_leader(age, t, orbit, r)) {
                orbits.push_back(orbit);
            }
        } while (detail::next_tuple(t, n));
    }

    auto attempt = [&](const std::vector<std::size_t>& chosen) {
        if (++result.candidates > budget) {
            throw Error(Errc::budget_exhausted, "completion search budget exhausted");
        }
        auto tables = fixed;
        for (const auto o : chosen) {
            for (const auto& [r, t] : orbits[o]) {
                tables[r].push_back(t);
            }
        }
        Structure candidate(sig, universe, std::move(tables));
        if (contains(age, candidate)) {
            result.status = CompletionStatus::completed;
            result.structure = std::move(candidate);
            return true;
        }
        return false;
    };

    // Subsets of orbits by increasing size, each size in lexicographic order.
    const std::size_t f = orbits.size();
    for (std::size_t size = 0; size <= f; ++size) {
        std::vector<std::size_t> chosen(size);
        for (std::size_t i = 0; i < size; ++i) {
            chosen[i] = i;
        }
        while (true) {
            if (attempt(chosen)) {
                return result;
            }
            std::size_t i = size;
            while (i > 0 && chosen[i - 1] == f - size + i - 1) {
                --i;
            }
            if (i == 0) {
                break;
            }
            ++chosen[i - 1];
            for (std::size_t j = i; j < size; ++j) {
                chosen[j] = chosen[j - 1] + 1;
            }
        }
    }
    result.status = CompletionStatus::no_completion;
    return result;
}

Structure disjoint_amalgam(const AgeDescriptor& age, const Structure& a, const Structure& b) {
    std::vector<std::string> universe = a.universe();
    for (const auto& id : b.universe()) {
        if (!a.index_of(id)) {
            universe.push_back(id);
        }
    }
    const auto c = complete(age, universe, {&a, &b});
    if (c.status == CompletionStatus::disagreement) {
        throw Error(Errc::invalid_argument, "structures disagree on their common part");
    }
    if (c.status != CompletionStatus::completed) {
        throw Error(Errc::no_amalgam, "NoAmalgam");
    }
    return *c.structure;
}

Structure extend_duplicating_type(const AgeDescriptor& age, const Structure& a, const std::vector<std::string>& order,
                                  const Structure& b) {
    if (order.size() != a.size() || a.size() == 0) {
        throw Error(Errc::invalid_argument, "order must enumerate the nonempty structure a");
    }
    std::vector<Element> order_idx;
    for (const auto& id : order) {
        order_idx.push_back(a.require(id));
    }
    {
        auto sorted = order_idx;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw Error(Errc::invalid_argument, "order repeats an element");
        }
    }
    for (const auto& id : b.universe()) {
        if (a.index_of(id)) {
            throw Error(Errc::invalid_argument, "a and b must be disjoint");
        }
    }
    const Structure ordered = induced(a, order_idx);
    Structure cur = a;
    std::vector<std::string> prefix;
    for (std::size_t j = 0; j < b.size(); ++j) {
        prefix.push_back(b.id(static_cast<Element>(j)));
        const Structure b_part = restrict(b, prefix);
        std::vector<std::string> d_ids(order.begin(), order.end() - 1);
        d_ids.push_back(b.id(static_cast<Element>(j)));
        std::vector<Element> identity(ordered.size());
        for (std::size_t i = 0; i < identity.size(); ++i) {
            identity[i] = static_cast<Element>(i);
        }
        const Structure d = relabel(ordered, identity, d_ids);
        auto universe = cur.universe();
        universe.push_back(b.id(static_cast<Element>(j)));
        const auto c = complete(age, universe, {&cur, &b_part, &d});
        if (c.status != CompletionStatus::completed) {
            throw Error(Errc::extension_failed, "ExtensionFailed at " + b.id(static_cast<Element>(j)));
        }
        cur = *c.structure;
    }
    return cur;
}

namespace detail {

std::optional<Structure> joint_embedding(const AgeDescriptor& age, const Structure& a, const Structure& b) {
    std::vector<std::string> a_ids;
    for (const auto& id : a.universe()) {
        a_ids.push_back("a:" + id);
    }
    std::vector<Element> identity(a.size());
    for (std::size_t i = 0; i < identity.size(); ++i) {
        identity[i] = static_cast<Element>(i);
    }
    const Structure a_copy = relabel(a, identity, a_ids);
    bool exhausted = false;
    for (std::size_t t = std::min(a.size(), b.size()) + 1; t-- > 0;) {
        std::vector<bool> mask(a.size(), false);
        std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(t), true);
        do {
            std::vector<Element> subset;
            for (Element i = 0; i < a.size(); ++i) {
                if (mask[i]) {
                    subset.push_back(i);
                }
            }
            const Structure part = induced(a, subset);
            for (const auto& f : find_embeddings(part, b)) {
                std::vector<std::string> b_ids(b.size());
                std::vector<char> hit(b.size(), 0);
                for (std::size_t k = 0; k < f.size(); ++k) {
                    b_ids[f[k]] = a_ids[subset[k]];
                    hit[f[k]] = 1;
                }
                auto universe = a_ids;
                for (Element e = 0; e < b.size(); ++e) {
                    if (!hit[e]) {
                        b_ids[e] = "b:" + b.id(e);
                        universe.push_back(b_ids[e]);
                    }
                }
                std::vector<Element> b_identity(b.size());
                for (std::size_t i = 0; i < b_identity.size(); ++i) {
                    b_identity[i] = static_cast<Element>(i);
                }
                const Structure b_copy = relabel(b, b_identity, b_ids);
                try {
                    auto c = complete(age, universe, {&a_copy, &b_copy});
                    if (c.status == CompletionStatus::completed) {
                        return c.structure;
                    }
                } catch (const Error& e) {
                    if (e.code() != Errc::budget_exhausted) {
                        throw;
                    }
                    exhausted = true;
                }
            }
        } while (std::prev_permutation(mask.begin(), mask.end()));
    }
    if (exhausted) {
        throw Error(Errc::budget_exhausted, "joint embedding search budget exhausted");
    }
    return std::nullopt;
}

std::vector<Structure> labeled_members(const AgeDescriptor& age, const std::vector<std::string>& ids) {
    const auto k = ids.size();
    std::set<std::vector<std::vector<std::uint64_t>>> seen;
    std::vector<Structure> out;
    for (const auto& rep : enumerate_members_of_size(age, k)) {
        std::vector<Element> perm(k);
        for (std::size_t i = 0; i < k; ++i) {
            perm[i] = static_cast<Element>(i);
        }
        do {
            auto s = relabel(rep, perm, ids);
            std::vector<std::vector<std::uint64_t>> key;
            for (std::size_t r = 0; r < s.signature().size(); ++r) {
                key.push_back(s.table(r).codes());
            }
            if (seen.insert(std::move(key)).second) {
                out.push_back(std::move(s));
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

} // namespace detail

// -------------------------------------------------------------------- DAP(3)

namespace {

// Venn regions of three pieces: {0},{1},{2},{0,1},{0,2},{1,2},{0,1,2}.
constexpr std::array<unsigned, 7> region_mask = {1, 2, 4, 3, 5, 6, 7};

std::array<std::size_t, 7> permute_regions(const std::array<std::size_t, 7>& z, const std::array<unsigned, 3>& sigma) {
    std::array<std::size_t, 7> out{};
    for (std::size_t r = 0; r < 7; ++r) {
        unsigned image = 0;
        for (unsigned i = 0; i < 3; ++i) {
            if (region_mask[r] >> i & 1U) {
                image |= 1U << sigma[i];
            }
        }
        const auto it = std::find(region_mask.begin(), region_mask.end(), image);
        out[static_cast<std::size_t>(it - region_mask.begin())] = z[r];
    }
    return out;
}

bool canonical_under_s3(const std::array<std::size_t, 7>& z) {
    std::array<unsigned, 3> sigma = {0, 1, 2};
    do {
        if (permute_regions(z, sigma) < z) {
            return false;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return true;
}

std::string element_name(std::size_t i, std::size_t total) {
    if (total <= 26) {
        return std::string(1, static_cast<char>('a' + i));
    }
    return "x" + std::to_string(i);
}

// Bits of s restricted to `subset` (local indices, fixed order).
std::string restriction_key(const Structure& s, const std::vector<Element>& subset) {
    std::string key;
    for (std::size_t r = 0; r < s.signature().size(); ++r) {
        const auto arity = s.signature()[r].arity;
        if (subset.empty()) {
            continue;
        }
        std::vector<std::size_t> pos(arity, 0);
        Tuple t(arity, 0);
        do {
            for (std::size_t k = 0; k < arity; ++k) {
                t[k] = subset[pos[k]];
            }
            key.push_back(s.holds(r, t) ? '1' : '0');
        } while (detail::next_tuple(pos, subset.size()));
    }
    return key;
}

class DapScan {
public:
    DapScan(const AgeDescriptor& age, std::size_t max_piece, std::size_t max_union, bool free_only)
        : age_(age), max_piece_(max_piece), max_union_(max_union), free_only_(free_only) {}

    bool run(PropertyCheck& result) {
        for (std::size_t u = 0; u <= max_union_; ++u) {
            std::array<std::size_t, 7> z{};
            if (!sizes(0, u, z, result)) {
                return false;
            }
        }
        return true;
    }

private:
    bool sizes(std::size_t r, std::size_t remaining, std::array<std::size_t, 7>& z, PropertyCheck& result) {
        if (r == 6) {
            z[6] = remaining;
            for (unsigned i = 0; i < 3; ++i) {
                std::size_t size = 0;
                for (std::size_t q = 0; q < 7; ++q) {
                    size += (region_mask[q] >> i & 1U) ? z[q] : 0;
                }
                if (size > max_piece_) {
                    return true;
                }
            }
            if (!canonical_under_s3(z)) {
                return true;
            }
            return configuration(z, result);
        }
        for (std::size_t v = 0; v <= remaining; ++v) {
            z[r] = v;
            if (!sizes(r + 1, remaining - v, z, result)) {
                return false;
            }
        }
        return true;
    }

    const std::vector<Structure>& labeled(const std::vector<std::string>& ids) {
        auto it = labeled_cache_.find(ids);
        if (it == labeled_cache_.end()) {
            it = labeled_cache_.emplace(ids, detail::labeled_members(age_, ids)).first;
        }
        return it->second;
    }

    bool configuration(const std::array<std::size_t, 7>& z, PropertyCheck& result) {
        std::size_t total = 0;
        for (const auto v : z) {
            total += v;
        }
        std::vector<unsigned> owner; // region mask of each universe element
        std::vector<std::string> universe;
        for (std::size_t q = 0; q < 7; ++q) {
            for (std::size_t k = 0; k < z[q]; ++k) {
                owner.push_back(region_mask[q]);
                universe.push_back(element_name(universe.size(), total));
            }
        }
        // Universes in global order; global index of each local element.
        std::array<std::vector<std::string>, 3> ids;
        std::array<std::vector<Element>, 3> global;
        for (unsigned i = 0; i < 3; ++i) {
            for (std::size_t e = 0; e < universe.size(); ++e) {
                if (owner[e] >> i & 1U) {
                    ids[i].push_back(universe[e]);
                    global[i].push_back(static_cast<Element>(e));
                }
            }
        }
        // Local indices in piece i of the elements shared with piece j.
        auto shared = [&](unsigned i, unsigned j) {
            std::vector<Element> out;
            for (std::size_t k = 0; k < global[i].size(); ++k) {
                if (owner[global[i][k]] >> j & 1U) {
                    out.push_back(static_cast<Element>(k));
                }
            }
            return out;
        };
        const auto s01 = shared(0, 1), s10 = shared(1, 0);
        const auto s02 = shared(0, 2), s20 = shared(2, 0);
        const auto s12 = shared(1, 2), s21 = shared(2, 1);

        const auto& l0 = labeled(ids[0]);
        const auto& l1 = labeled(ids[1]);
        const auto& l2 = labeled(ids[2]);
        std::map<std::string, std::vector<const Structure*>> by01;
        for (const auto& s : l1) {
            by01[restriction_key(s, s10)].push_back(&s);
        }
        std::map<std::pair<std::string, std::string>, std::vector<const Structure*>> by_pair;
        for (const auto& s : l2) {
            by_pair[{restriction_key(s, s20), restriction_key(s, s21)}].push_back(&s);
        }

        for (const auto& a0 : l0) {
            const auto k01 = restriction_key(a0, s01);
            const auto k02 = restriction_key(a0, s02);
            const auto it1 = by01.find(k01);
            if (it1 == by01.end()) {
                continue;
            }
            for (const auto* a1 : it1->second) {
                const auto it2 = by_pair.find({k02, restriction_key(*a1, s12)});
                if (it2 == by_pair.end()) {
                    continue;
                }
                for (const auto* a2 : it2->second) {
                    ++result.cases;
                    if (!amalgamates(universe, {&a0, a1, a2}, global)) {
                        result.holds = false;
                        result.counterexample = {a0, *a1, *a2};
                        result.detail = free_only_ ? "free amalgam is not a member" : "no member restricts to all three";
                        return false;
                    }
                }
            }
        }
        return true;
    }

    bool amalgamates(const std::vector<std::string>& universe, const std::vector<const Structure*>& pieces,
                     const std::array<std::vector<Element>, 3>& global) {
        if (!free_only_) {
            return complete(age_, universe, pieces).status == CompletionStatus::completed;
        }
        std::vector<std::vector<Tuple>> tables(age_.signature.size());
        for (std::size_t p = 0; p < 3; ++p) {
            for (std::size_t r = 0; r < tables.size(); ++r) {
                for (auto t : pieces[p]->table(r).tuples()) {
                    for (auto& e : t) {
                        e = global[p][e];
                    }
                    tables[r].push_back(std::move(t));
                }
            }
        }
        return contains(age_, Structure(age_.signature, universe, std::move(tables)));
    }

    const AgeDescriptor& age_;
    std::size_t max_piece_;
    std::size_t max_union_;
    bool free_only_;
    std::map<std::vector<std::string>, std::vector<Structure>> labeled_cache_;
};

} // namespace

PropertyCheck check_dap3(const AgeDescriptor& age, std::size_t m, DapStrategy strategy) {
    if (m > age.max_enumeration_size) {
        throw Error(Errc::budget_exhausted, "beyond enumeration budget");
    }
    PropertyCheck result;
    if (strategy == DapStrategy::automatic && age.hereditary()) {
        if (const auto r = age.locality(); r && *r <= age.max_enumeration_size) {
            PropertyCheck local;
            if (DapScan(age, *r, *r, true).run(local)) {
                local.method = "locality:" + std::to_string(*r);
                local.detail = "free amalgams of all configurations on at most " + std::to_string(*r) +
                               " elements are members";
                return local;
            }
            result.cases = local.cases;
        }
    }
    result.method = "exhaustive";
    DapScan(age, m, 3 * m, false).run(result);
    return result;
}

} // namespace deltasys
