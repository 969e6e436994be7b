#include "deltasys/catalog.hpp"

#include "deltasys/error.hpp"

#include <algorithm>

namespace deltasys {

Signature graph_signature() { return Signature{{"E", 2}}; }
Signature order_signature() { return Signature{{"<", 2}}; }
Signature hypergraph_signature(std::size_t k) { return Signature{{"R", k}}; }

std::vector<std::string> numbered_ids(std::size_t n, const std::string& prefix) {
    std::vector<std::string> ids;
    ids.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        ids.push_back(prefix + std::to_string(i));
    }
    return ids;
}

Structure make_graph(std::vector<std::string> ids, const std::vector<std::pair<std::string, std::string>>& edges) {
    StructureBuilder b(graph_signature());
    for (auto& id : ids) {
        b.add_element(std::move(id));
    }
    for (const auto& [u, v] : edges) {
        if (u == v) {
            throw Error(Errc::invalid_argument, "graph edges must join distinct vertices");
        }
        b.add_tuple("E", {u, v});
        b.add_tuple("E", {v, u});
    }
    return b.build();
}

Structure make_graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::vector<Tuple> tuples;
    for (const auto& [u, v] : edges) {
        if (u == v || u >= n || v >= n) {
            throw Error(Errc::invalid_argument, "bad graph edge");
        }
        tuples.push_back({static_cast<Element>(u), static_cast<Element>(v)});
        tuples.push_back({static_cast<Element>(v), static_cast<Element>(u)});
    }
    return Structure(graph_signature(), numbered_ids(n), {std::move(tuples)});
}

Structure complete_graph(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            edges.emplace_back(i, j);
        }
    }
    return make_graph(n, edges);
}

Structure empty_graph(std::size_t n) { return make_graph(n, {}); }

Structure path_graph(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        edges.emplace_back(i, i + 1);
    }
    return make_graph(n, edges);
}

Structure chain(std::size_t n) {
    std::vector<Tuple> tuples;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            tuples.push_back({static_cast<Element>(i), static_cast<Element>(j)});
        }
    }
    return Structure(order_signature(), numbered_ids(n), {std::move(tuples)});
}

Structure make_hypergraph(std::size_t k, std::size_t n, const std::vector<std::vector<std::size_t>>& edges) {
    std::vector<Tuple> tuples;
    for (const auto& edge : edges) {
        Tuple t;
        for (const auto e : edge) {
            if (e >= n) {
                throw Error(Errc::invalid_argument, "bad hyperedge");
            }
            t.push_back(static_cast<Element>(e));
        }
        std::sort(t.begin(), t.end());
        if (t.size() != k || std::adjacent_find(t.begin(), t.end()) != t.end()) {
            throw Error(Errc::invalid_argument, "hyperedges must be k distinct vertices");
        }
        do {
            tuples.push_back(t);
        } while (std::next_permutation(t.begin(), t.end()));
    }
    return Structure(hypergraph_signature(k), numbered_ids(n), {std::move(tuples)});
}

Structure complete_hypergraph(std::size_t k, std::size_t n) {
    std::vector<std::vector<std::size_t>> edges;
    // k-subsets of [n] in lexicographic order.
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(std::min(k, n)), true);
    if (k <= n) {
        do {
            std::vector<std::size_t> edge;
            for (std::size_t i = 0; i < n; ++i) {
                if (mask[i]) {
                    edge.push_back(i);
                }
            }
            edges.push_back(edge);
        } while (std::prev_permutation(mask.begin(), mask.end()));
    }
    return make_hypergraph(k, n, edges);
}

} // namespace deltasys
