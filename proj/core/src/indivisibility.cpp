#include "deltasys/ages.hpp"

#include "deltasys/catalog.hpp"
#include "deltasys/error.hpp"
#include "age_internal.hpp"

#include <algorithm>
#include <map>

namespace deltasys {

namespace {

// Sets (as bitmasks over b) spanned by induced copies of a.
std::vector<std::uint64_t> copy_masks(const Structure& b, const Structure& a) {
    std::vector<std::uint64_t> masks;
    for (const auto& f : find_embeddings(a, b)) {
        std::uint64_t m = 0;
        for (const auto e : f) {
            m |= std::uint64_t{1} << e;
        }
        masks.push_back(m);
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    return masks;
}

class ColoringSearch {
public:
    ColoringSearch(std::size_t n, std::size_t colors, const std::vector<std::uint64_t>& masks)
        : n_(n), colors_(colors), by_top_(n) {
        for (const auto m : masks) {
            std::size_t top = 63;
            while (!(m >> top & 1U)) {
                --top;
            }
            by_top_[top].push_back(m);
        }
    }

    /// First restricted-growth coloring without a monochromatic copy.
    std::optional<std::vector<std::size_t>> run() {
        assignment_.assign(n_, 0);
        class_masks_.assign(colors_, 0);
        if (descend(0, 0)) {
            return assignment_;
        }
        return std::nullopt;
    }

    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    bool descend(std::size_t v, std::size_t used) {
        if (v == n_) {
            return true;
        }
        const std::size_t limit = std::min(colors_, used + 1);
        for (std::size_t c = 0; c < limit; ++c) {
            ++nodes_;
            const std::uint64_t with = class_masks_[c] | (std::uint64_t{1} << v);
            bool mono = false;
            for (const auto m : by_top_[v]) {
                if ((m & with) == m) {
                    mono = true;
                    break;
                }
            }
            if (mono) {
                continue;
            }
            const auto saved = class_masks_[c];
            class_masks_[c] = with;
            assignment_[v] = c;
            if (descend(v + 1, std::max(used, c + 1))) {
                return true;
            }
            class_masks_[c] = saved;
        }
        return false;
    }

    std::size_t n_;
    std::size_t colors_;
    std::vector<std::vector<std::uint64_t>> by_top_;
    std::vector<std::size_t> assignment_;
    std::vector<std::uint64_t> class_masks_;
    std::uint64_t nodes_ = 0;
};

// Members of size `target` all of whose |a|-subsets induce a copy of a,
// grown one element at a time (the property is inherited by substructures).
std::vector<Structure> homogeneous_members(const AgeDescriptor& age, const Structure& a, std::size_t target) {
    const auto k = a.size();
    std::map<std::string, Structure> level;
    level.emplace(canonical_form(a), canonical_representative(a));
    const bool prune = age.hereditary();
    for (std::size_t s = k; s < target; ++s) {
        std::map<std::string, Structure> next;
        for (const auto& [form, rep] : level) {
            for (const auto& ext : detail::one_point_extensions(age, rep)) {
                if (!base_valid(age, ext)) {
                    continue;
                }
                const auto fresh = static_cast<Element>(s);
                bool ok = true;
                std::vector<bool> mask(s, false);
                std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k - 1), true);
                do {
                    std::vector<Element> subset;
                    for (Element i = 0; i < s; ++i) {
                        if (mask[i]) {
                            subset.push_back(i);
                        }
                    }
                    subset.push_back(fresh);
                    ok = is_isomorphic(induced(ext, subset), a);
                } while (ok && std::prev_permutation(mask.begin(), mask.end()));
                if (!ok || (prune && !contains(age, ext))) {
                    continue;
                }
                auto canon = canonical_labeling(ext);
                if (!next.count(canon.form)) {
                    next.emplace(canon.form, relabel(ext, canon.order, numbered_ids(ext.size())));
                }
            }
        }
        level = std::move(next);
    }
    std::vector<Structure> out;
    for (const auto& [form, rep] : level) {
        if (contains(age, rep)) {
            out.push_back(rep);
        }
    }
    return out;
}

} // namespace

IndivisibilityVerdict verify_indivisibility_witness(const AgeDescriptor& age, const Structure& b, const Structure& a,
                                                    std::size_t colors) {
    if (b.signature() != age.signature || a.signature() != age.signature) {
        throw Error(Errc::signature_mismatch, "signature mismatch");
    }
    if (colors == 0) {
        throw Error(Errc::invalid_argument, "at least one color is needed");
    }
    if (b.size() > 64) {
        throw Error(Errc::budget_exhausted, "coloring verification supports at most 64 elements");
    }
    IndivisibilityVerdict verdict;
    if (a.size() == 0) {
        verdict.holds = true;
        return verdict;
    }
    ColoringSearch search(b.size(), colors, copy_masks(b, a));
    auto bad = search.run();
    verdict.nodes = search.nodes();
    verdict.holds = !bad.has_value();
    if (bad) {
        verdict.bad_coloring = Coloring{b, std::move(*bad), colors};
    }
    return verdict;
}

std::optional<IndivisibilityWitness> find_indivisibility_witness(const AgeDescriptor& age, const Structure& a,
                                                                 std::size_t colors, std::size_t max_size) {
    if (!contains(age, a)) {
        throw Error(Errc::invalid_argument, "target is not a member of the age");
    }
    if (colors == 0) {
        throw Error(Errc::invalid_argument, "at least one color is needed");
    }
    const auto k = a.size();
    if (k <= 1 || colors == 1) {
        // a itself: one color class, or a single point, is always monochromatic.
        if (k > max_size) {
            return std::nullopt;
        }
        auto rep = canonical_representative(a);
        return IndivisibilityWitness{rep, k};
    }
    // Below colors*(k-1)+1 elements some coloring has all classes smaller than a.
    const std::size_t least = colors * (k - 1) + 1;
    if (least > max_size) {
        return std::nullopt;
    }
    // At exactly that size a witness must have every k-subset inducing a.
    const auto homogeneous = homogeneous_members(age, a, least);
    if (!homogeneous.empty()) {
        return IndivisibilityWitness{homogeneous.front(), least};
    }
    for (std::size_t s = least + 1; s <= max_size && s <= age.max_enumeration_size; ++s) {
        for (const auto& b : enumerate_members_of_size(age, s)) {
            if (verify_indivisibility_witness(age, b, a, colors).holds) {
                return IndivisibilityWitness{b, s};
            }
        }
    }
    return std::nullopt;
}

BootstrapResult bootstrap_order_n(const AgeDescriptor& age, const Structure& a, std::size_t colors,
                                  std::size_t max_size) {
    if (colors < 2) {
        throw Error(Errc::invalid_argument, "bootstrap needs at least 2 colors");
    }
    BootstrapResult result;
    Structure current = a;
    for (std::size_t link = 2; link <= colors; ++link) {
        auto w = find_indivisibility_witness(age, current, 2, max_size);
        if (!w) {
            throw Error(Errc::budget_exhausted,
                        "no 2-color witness for link B_" + std::to_string(link) + " within size " +
                            std::to_string(max_size));
        }
        current = w->structure;
        result.chain.push_back(current);
    }
    result.final_verified = verify_indivisibility_witness(age, current, a, colors).holds;
    return result;
}

// ---------------------------------------------------------------- bounds

void IndivisibilityBound::record(std::size_t size, std::size_t colors, Entry entry) {
    table_[{size, colors}] = entry;
}

std::optional<IndivisibilityBound::Entry> IndivisibilityBound::lookup(std::size_t size, std::size_t colors) const {
    const auto it = table_.find({size, colors});
    if (it == table_.end()) {
        return std::nullopt;
    }
    return it->second;
}

bool IndivisibilityBound::monotone_in_size() const {
    std::map<std::size_t, std::size_t> last; // colors -> last known value
    for (const auto& [key, entry] : table_) {
        if (!entry.value) {
            continue;
        }
        const auto it = last.find(key.second);
        if (it != last.end() && *entry.value < it->second) {
            return false;
        }
        last[key.second] = *entry.value;
    }
    return true;
}

BetaSource::BetaSource(AgeDescriptor age, std::size_t max_size) : age_(std::move(age)), max_size_(max_size) {}

void BetaSource::supply(const Structure& a, std::size_t colors, const Structure& witness) {
    if (!contains(age_, witness) || !verify_indivisibility_witness(age_, witness, a, colors).holds) {
        throw Error(Errc::invalid_argument, "supplied structure is not an indivisibility witness");
    }
    const std::pair<std::string, std::size_t> key{canonical_form(a), colors};
    supplied_.insert_or_assign(key, witness);
    cache_.erase(key);
    bound_.record(a.size(), colors, {witness.size(), Provenance::supplied});
}

std::optional<Structure> BetaSource::witness(const Structure& a, std::size_t colors) {
    const std::pair<std::string, std::size_t> key{canonical_form(a), colors};
    if (const auto it = supplied_.find(key); it != supplied_.end()) {
        return it->second;
    }
    if (const auto it = cache_.find(key); it != cache_.end()) {
        return it->second;
    }
    std::optional<Structure> found;
    if (auto w = find_indivisibility_witness(age_, a, colors, max_size_)) {
        found = w->structure;
        bound_.record(a.size(), colors, {w->size, Provenance::searched});
    } else {
        bound_.record(a.size(), colors, {std::nullopt, Provenance::searched});
    }
    cache_.emplace(key, found);
    return found;
}

} // namespace deltasys
