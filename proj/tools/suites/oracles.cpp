#include "oracles.hpp"

#include "deltasys/catalog.hpp"

#include <algorithm>
#include <functional>

namespace deltasys::oracle {

bool is_sunflower(const std::vector<Mask>& sets) {
    if (sets.size() <= 2) {
        return true;
    }
    const Mask core = sets[0] & sets[1];
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            if ((sets[i] & sets[j]) != core) {
                return false;
            }
        }
    }
    return true;
}

std::size_t max_sunflower_size(const std::vector<Mask>& sets) {
    std::size_t best = 0;
    const std::uint32_t n = static_cast<std::uint32_t>(sets.size());
    for (std::uint32_t pick = 1; pick < (1U << n); ++pick) {
        std::vector<Mask> sub;
        for (std::uint32_t i = 0; i < n; ++i) {
            if (pick >> i & 1U) {
                sub.push_back(sets[i]);
            }
        }
        if (sub.size() > best && is_sunflower(sub)) {
            best = sub.size();
        }
    }
    return best;
}

bool is_induced_map(const Structure& a, const Structure& b, const std::vector<Element>& f) {
    for (std::size_t r = 0; r < a.signature().size(); ++r) {
        const auto arity = a.signature()[r].arity;
        if (a.size() == 0) {
            break;
        }
        std::vector<Element> pos(arity, 0);
        std::vector<Element> img(arity, 0);
        while (true) {
            for (std::size_t p = 0; p < arity; ++p) {
                img[p] = f[pos[p]];
            }
            if (a.holds(r, pos) != b.holds(r, img)) {
                return false;
            }
            std::size_t p = 0;
            while (p < arity && ++pos[p] == a.size()) {
                pos[p++] = 0;
            }
            if (p == arity) {
                break;
            }
        }
    }
    return true;
}

std::vector<std::vector<Element>> induced_copies(const Structure& a, const Structure& b) {
    std::vector<std::vector<Element>> out;
    if (a.size() > b.size()) {
        return out;
    }
    // Choose the image set, then every ordering of it.
    std::vector<bool> choose(b.size(), false);
    std::fill(choose.begin(), choose.begin() + static_cast<std::ptrdiff_t>(a.size()), true);
    do {
        std::vector<Element> image;
        for (Element v = 0; v < b.size(); ++v) {
            if (choose[v]) {
                image.push_back(v);
            }
        }
        do {
            if (is_induced_map(a, b, image)) {
                out.push_back(image);
            }
        } while (std::next_permutation(image.begin(), image.end()));
    } while (std::prev_permutation(choose.begin(), choose.end()));
    std::sort(out.begin(), out.end());
    return out;
}

bool isomorphic(const Structure& a, const Structure& b) {
    return a.size() == b.size() && a.signature() == b.signature() && !induced_copies(a, b).empty();
}

bool has_sunflower_copy(const Structure& b, const Structure& a, const std::vector<Mask>& labels) {
    for (const auto& copy : induced_copies(a, b)) {
        std::vector<Mask> sets;
        for (const auto v : copy) {
            sets.push_back(labels[v]);
        }
        if (is_sunflower(sets)) {
            return true;
        }
    }
    return false;
}

bool indivisible(const Structure& b, const Structure& a, std::size_t colors) {
    std::vector<Mask> copies;
    for (const auto& copy : induced_copies(a, b)) {
        Mask m = 0;
        for (const auto v : copy) {
            m |= Mask{1} << v;
        }
        copies.push_back(m);
    }
    std::vector<std::size_t> coloring(b.size(), 0);
    while (true) {
        bool mono = false;
        for (const auto m : copies) {
            std::size_t color = SIZE_MAX;
            bool same = true;
            for (Element v = 0; v < b.size() && same; ++v) {
                if (m >> v & 1U) {
                    same = color == SIZE_MAX || color == coloring[v];
                    color = coloring[v];
                }
            }
            if (same) {
                mono = true;
                break;
            }
        }
        if (!mono) {
            return false;
        }
        std::size_t v = 0;
        while (v < b.size() && ++coloring[v] == colors) {
            coloring[v++] = 0;
        }
        if (v == b.size()) {
            return true;
        }
    }
}

bool all_labelings_have_sunflower(const Structure& b, const Structure& a, std::size_t n) {
    const std::size_t atoms = n * b.size();
    std::vector<Mask> subsets;
    for (Mask m = 0; m < (Mask{1} << atoms); ++m) {
        if (static_cast<std::size_t>(__builtin_popcountll(m)) == n) {
            subsets.push_back(m);
        }
    }
    std::vector<std::vector<Element>> copies = induced_copies(a, b);
    std::vector<Mask> labels(b.size(), 0);
    std::vector<bool> used(subsets.size(), false);
    std::function<bool(std::size_t)> every = [&](std::size_t i) {
        if (i == b.size()) {
            for (const auto& copy : copies) {
                std::vector<Mask> sets;
                for (const auto v : copy) {
                    sets.push_back(labels[v]);
                }
                if (is_sunflower(sets)) {
                    return true;
                }
            }
            return false;
        }
        for (std::size_t s = 0; s < subsets.size(); ++s) {
            if (used[s]) {
                continue;
            }
            used[s] = true;
            labels[i] = subsets[s];
            const bool ok = every(i + 1);
            used[s] = false;
            if (!ok) {
                return false;
            }
        }
        return true;
    };
    return every(0);
}

std::vector<Structure> all_graphs(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            pairs.emplace_back(i, j);
        }
    }
    std::vector<Structure> out;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << pairs.size()); ++pick) {
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            if (pick >> k & 1U) {
                edges.push_back(pairs[k]);
            }
        }
        out.push_back(make_graph(n, edges));
    }
    return out;
}

} // namespace deltasys::oracle
