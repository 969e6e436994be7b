#include "deltasys/setworld.hpp"

#include "deltasys/error.hpp"
#include "embedding_search.hpp"

#include <boost/dynamic_bitset.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <limits>
#include <map>

namespace deltasys {

namespace {

using Bits = boost::dynamic_bitset<>;

// Members as bitsets over the sorted atom universe of the family.
struct Interned {
    std::vector<Atom> atoms;
    std::vector<Bits> sets;

    explicit Interned(const std::vector<AtomSet>& members) {
        for (const auto& m : members) {
            atoms.insert(atoms.end(), m.begin(), m.end());
        }
        std::sort(atoms.begin(), atoms.end());
        atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
        for (const auto& m : members) {
            sets.push_back(to_bits(m));
        }
    }

    Bits to_bits(const AtomSet& s) const {
        Bits b(atoms.size());
        for (const auto& a : s) {
            const auto it = std::lower_bound(atoms.begin(), atoms.end(), a);
            if (it != atoms.end() && *it == a) {
                b.set(static_cast<std::size_t>(it - atoms.begin()));
            }
        }
        return b;
    }

    AtomSet from_bits(const Bits& b) const {
        AtomSet out;
        for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) {
            out.push_back(atoms[i]);
        }
        return out;
    }
};

// Maximum pairwise-disjoint subset of `residues` (indices into it);
// include-first order makes the first maximum the lexicographically least.
class DisjointSearch {
public:
    explicit DisjointSearch(const std::vector<Bits>& residues) : residues_(residues) {}

    std::vector<std::size_t> run() {
        chosen_.clear();
        best_.clear();
        if (!residues_.empty()) {
            Bits used(residues_.front().size());
            descend(0, used);
        }
        return best_;
    }

private:
    void descend(std::size_t i, const Bits& used) {
        if (chosen_.size() + (residues_.size() - i) <= best_.size()) {
            return;
        }
        if (i == residues_.size()) {
            best_ = chosen_;
            return;
        }
        if (!residues_[i].intersects(used)) {
            chosen_.push_back(i);
            descend(i + 1, used | residues_[i]);
            chosen_.pop_back();
        }
        descend(i + 1, used);
    }

    const std::vector<Bits>& residues_;
    std::vector<std::size_t> chosen_;
    std::vector<std::size_t> best_;
};

} // namespace

std::string Atom::serialized() const {
    if (is_integer()) {
        return std::to_string(integer());
    }
    return nlohmann::json(text()).dump();
}

AtomSet make_atom_set(std::vector<Atom> atoms) {
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    return atoms;
}

AtomSet atom_set(std::initializer_list<std::int64_t> atoms) {
    std::vector<Atom> v(atoms.begin(), atoms.end());
    return make_atom_set(std::move(v));
}

AtomSet set_intersection(const AtomSet& a, const AtomSet& b) {
    AtomSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// ---------------------------------------------------------------- SetFamily

SetFamily::SetFamily(std::vector<AtomSet> members) : members_(std::move(members)) {
    for (auto& m : members_) {
        m = make_atom_set(std::move(m));
    }
    auto sorted = members_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(Errc::invalid_argument, "family members must be pairwise distinct");
    }
}

SetFamily::SetFamily(std::initializer_list<std::initializer_list<std::int64_t>> members) {
    std::vector<AtomSet> v;
    for (const auto& m : members) {
        v.push_back(atom_set(m));
    }
    *this = SetFamily(std::move(v));
}

SetFamily SetFamily::subfamily(const std::vector<std::size_t>& indices) const {
    std::vector<AtomSet> v;
    v.reserve(indices.size());
    for (const auto i : indices) {
        v.push_back(members_.at(i));
    }
    return SetFamily(std::move(v));
}

std::optional<AtomSet> kernel(const SetFamily& family) {
    if (family.size() < 2) {
        throw Error(Errc::kernel_undefined, "kernel undefined");
    }
    const AtomSet r = set_intersection(family[0], family[1]);
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            if (set_intersection(family[i], family[j]) != r) {
                return std::nullopt;
            }
        }
    }
    return r;
}

bool is_sunflower(const SetFamily& family) { return family.size() <= 1 || kernel(family).has_value(); }

SunflowerWitness max_sunflower(const SetFamily& family) {
    if (family.size() == 0) {
        throw Error(Errc::invalid_argument, "max_sunflower needs a nonempty family");
    }
    if (family.size() == 1) {
        return {{0}, family[0]};
    }
    const Interned in(family.members());
    std::vector<Bits> kernels;
    kernels.emplace_back(in.atoms.size());
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            kernels.push_back(in.sets[i] & in.sets[j]);
        }
    }
    std::sort(kernels.begin(), kernels.end());
    kernels.erase(std::unique(kernels.begin(), kernels.end()), kernels.end());

    SunflowerWitness best;
    for (const auto& k : kernels) {
        std::vector<std::size_t> holders;
        std::vector<Bits> residues;
        for (std::size_t i = 0; i < family.size(); ++i) {
            if (k.is_subset_of(in.sets[i])) {
                holders.push_back(i);
                residues.push_back(in.sets[i] - k);
            }
        }
        if (holders.size() < std::max<std::size_t>(best.indices.size(), 2)) {
            continue;
        }
        auto picked = DisjointSearch(residues).run();
        std::vector<std::size_t> indices;
        for (const auto p : picked) {
            indices.push_back(holders[p]);
        }
        if (indices.size() < 2) {
            continue;
        }
        if (indices.size() > best.indices.size() ||
            (indices.size() == best.indices.size() && indices < best.indices)) {
            best.indices = std::move(indices);
            best.kernel = in.from_bits(k);
        }
    }
    return best;
}

std::uint64_t erdos_rado_threshold(std::size_t n, std::size_t k) {
    constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t t = 1;
    auto mul = [&](std::uint64_t f) {
        if (f != 0 && t > cap / f) {
            t = cap;
        } else {
            t *= f;
        }
    };
    for (std::size_t i = 2; i <= n; ++i) {
        mul(i);
    }
    for (std::size_t i = 0; i < n; ++i) {
        mul(k == 0 ? 0 : k - 1);
    }
    return t;
}

namespace {

// Returns member positions (into `sets`) of a sunflower of size k and its kernel.
std::pair<std::vector<std::size_t>, Bits> extract(const std::vector<Bits>& sets, std::size_t width, std::size_t k) {
    std::vector<std::size_t> disjoint;
    Bits used(width);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (!sets[i].intersects(used)) {
            disjoint.push_back(i);
            used |= sets[i];
        }
    }
    if (disjoint.size() >= k) {
        disjoint.resize(k);
        return {disjoint, Bits(width)};
    }
    std::size_t pivot = 0;
    std::size_t degree = 0;
    for (std::size_t a = 0; a < width; ++a) {
        std::size_t d = 0;
        for (const auto& s : sets) {
            d += s.test(a) ? 1 : 0;
        }
        if (d > degree) {
            degree = d;
            pivot = a;
        }
    }
    if (degree == 0) {
        throw Error(Errc::below_threshold, "below Erdős–Rado threshold");
    }
    std::vector<std::size_t> holders;
    std::vector<Bits> residues;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (sets[i].test(pivot)) {
            holders.push_back(i);
            Bits r = sets[i];
            r.reset(pivot);
            residues.push_back(std::move(r));
        }
    }
    auto [inner, core] = extract(residues, width, k);
    std::vector<std::size_t> out;
    for (const auto i : inner) {
        out.push_back(holders[i]);
    }
    core.set(pivot);
    return {out, core};
}

} // namespace

SunflowerWitness erdos_rado_extract(const SetFamily& family, std::size_t k) {
    if (k == 0) {
        throw Error(Errc::invalid_argument, "sunflower size must be positive");
    }
    if (family.size() == 0) {
        throw Error(Errc::below_threshold, "below Erdős–Rado threshold");
    }
    const std::size_t n = family[0].size();
    for (const auto& m : family.members()) {
        if (m.size() != n) {
            throw Error(Errc::invalid_argument, "Erdős–Rado extraction needs members of one size");
        }
    }
    if (family.size() <= erdos_rado_threshold(n, k) && k > 1) {
        throw Error(Errc::below_threshold, "below Erdős–Rado threshold");
    }
    if (k == 1) {
        return {{0}, family[0]};
    }
    const Interned in(family.members());
    auto [indices, core] = extract(in.sets, in.atoms.size(), k);
    std::sort(indices.begin(), indices.end());
    return {indices, in.from_bits(core)};
}

// -------------------------------------------------------------- SetLabeling

SetLabeling::SetLabeling(Structure base, std::vector<AtomSet> labels, std::optional<std::size_t> uniform_size)
    : base_(std::move(base)), labels_(std::move(labels)), uniform_size_(uniform_size) {
    if (labels_.size() != base_.size()) {
        throw Error(Errc::invalid_argument, "every element needs exactly one label");
    }
    for (auto& l : labels_) {
        l = make_atom_set(std::move(l));
        if (uniform_size_ && l.size() != *uniform_size_) {
            throw Error(Errc::invalid_argument, "label size differs from the uniform size");
        }
    }
    auto sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(Errc::invalid_argument, "labels must be injective");
    }
}

SetLabeling pad_labeling(const SetLabeling& lab, const Atom& fresh) {
    std::vector<AtomSet> labels = lab.labels();
    for (auto& l : labels) {
        if (std::binary_search(l.begin(), l.end(), fresh)) {
            throw Error(Errc::invalid_argument, "fresh atom already used");
        }
        l.insert(std::lower_bound(l.begin(), l.end(), fresh), fresh);
    }
    std::optional<std::size_t> uniform;
    if (lab.uniform_size()) {
        uniform = *lab.uniform_size() + 1;
    }
    return SetLabeling(lab.base(), std::move(labels), uniform);
}

SetLabeling normalize_atoms(const SetLabeling& lab) {
    std::map<Atom, std::int64_t> rename;
    std::vector<AtomSet> labels;
    labels.reserve(lab.labels().size());
    for (const auto& l : lab.labels()) {
        std::vector<Atom> renamed;
        for (const auto& a : l) {
            const auto next = static_cast<std::int64_t>(rename.size());
            const auto [it, inserted] = rename.emplace(a, next);
            renamed.emplace_back(it->second);
        }
        labels.push_back(make_atom_set(std::move(renamed)));
    }
    return SetLabeling(lab.base(), std::move(labels), lab.uniform_size());
}

std::optional<StructuredSunflower> find_structured_sunflower(const SetLabeling& lab, const Structure& target) {
    if (lab.base().signature() != target.signature()) {
        throw Error(Errc::signature_mismatch, "signature mismatch");
    }
    const Interned in(lab.labels());
    Bits core;
    detail::EmbeddingSearch search(target, lab.base());
    std::optional<StructuredSunflower> found;
    search.run(
        [&](std::size_t depth, Element v, std::span<const Element> images) {
            if (depth == 1) {
                core = in.sets[images[0]] & in.sets[v];
                return true;
            }
            for (std::size_t j = 0; j < depth; ++j) {
                if ((in.sets[images[j]] & in.sets[v]) != core) {
                    return false;
                }
            }
            return true;
        },
        [&](std::span<const Element> images) {
            StructuredSunflower s;
            s.embedding.assign(images.begin(), images.end());
            s.witness.indices.assign(images.begin(), images.end());
            std::sort(s.witness.indices.begin(), s.witness.indices.end());
            if (images.size() >= 2) {
                s.witness.kernel = in.from_bits(core);
            } else if (images.size() == 1) {
                s.witness.kernel = lab.label(images[0]);
            }
            found = std::move(s);
            return false;
        });
    return found;
}

} // namespace deltasys
