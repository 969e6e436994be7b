#pragma once

#include "deltasys/catalog.hpp"
#include "deltasys/setworld.hpp"
#include "deltasys/structure.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace testing_support {

using namespace deltasys;

inline Structure random_graph(std::mt19937& rng, std::size_t n, double p = 0.5) {
    std::bernoulli_distribution edge(p);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (edge(rng)) {
                edges.emplace_back(i, j);
            }
        }
    }
    return make_graph(n, edges);
}

inline Structure shuffled(std::mt19937& rng, const Structure& s) {
    std::vector<Element> order(s.size());
    for (Element i = 0; i < s.size(); ++i) {
        order[i] = i;
    }
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < s.size(); ++i) {
        ids.push_back("v" + std::to_string(rng() % 1000) + "_" + std::to_string(i));
    }
    return relabel(s, order, ids);
}

/// Integer atom sets as bitmasks over 0..63.
inline std::vector<std::uint64_t> masks(const SetFamily& f) {
    std::vector<std::uint64_t> out;
    for (const auto& m : f.members()) {
        std::uint64_t bits = 0;
        for (const auto& a : m) {
            bits |= std::uint64_t{1} << a.integer();
        }
        out.push_back(bits);
    }
    return out;
}

inline SetFamily random_family(std::mt19937& rng, std::size_t members, int atoms, int max_size) {
    std::vector<AtomSet> sets;
    std::uniform_int_distribution<int> size(0, max_size);
    std::uniform_int_distribution<int> atom(0, atoms - 1);
    for (std::size_t guard = 0; sets.size() < members && guard < 1000; ++guard) {
        std::vector<Atom> s;
        const int k = size(rng);
        for (int i = 0; i < k; ++i) {
            s.emplace_back(atom(rng));
        }
        auto set = make_atom_set(s);
        if (std::find(sets.begin(), sets.end(), set) == sets.end()) {
            sets.push_back(set);
        }
    }
    return SetFamily(sets);
}

} // namespace testing_support
