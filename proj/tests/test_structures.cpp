#include "support.hpp"
#include "suites/oracles.hpp"

#include "deltasys/catalog.hpp"
#include "deltasys/error.hpp"
#include "deltasys/structure.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace deltasys;
using testing_support::random_graph;
using testing_support::shuffled;

namespace {

Structure path_abc() { return make_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }
Structure triangle_abc() { return make_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}); }

Structure chain_of(const std::vector<std::string>& ids) {
    StructureBuilder b(order_signature());
    for (const auto& id : ids) {
        b.add_element(id);
    }
    for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            b.add_tuple("<", {ids[i], ids[j]});
        }
    }
    return b.build();
}

} // namespace

TEST(QfType, TriangleEdge) {
    const auto t = triangle_abc();
    const std::vector<std::string> ab{"a", "b"};
    const auto q = qf_type(t, ab);
    EXPECT_EQ(q.arity(), 2u);
    EXPECT_EQ(q.partition(), (std::vector<std::vector<std::size_t>>{{0}, {1}}));
    const std::vector<std::size_t> p01{0, 1}, p10{1, 0};
    EXPECT_TRUE(q.holds(0, p01));
    EXPECT_TRUE(q.holds(0, p10));
}

TEST(QfType, RepeatedElementHasOneBlock) {
    const std::vector<std::string> aa{"a", "a"};
    EXPECT_EQ(qf_type(path_abc(), aa).partition(), (std::vector<std::vector<std::size_t>>{{0, 1}}));
}

TEST(QfType, EdgeAndNonEdgeDiffer) {
    const auto p = path_abc();
    const std::vector<std::string> ac{"a", "c"}, ab{"a", "b"};
    EXPECT_NE(qf_type(p, ac), qf_type(p, ab));
}

TEST(QfType, InvariantUnderIsomorphism) {
    std::mt19937 rng(11);
    for (int t = 0; t < 200; ++t) {
        const auto g = random_graph(rng, 5);
        std::vector<Element> order{0, 1, 2, 3, 4};
        std::shuffle(order.begin(), order.end(), rng);
        const std::vector<std::string> ids{"p", "q", "r", "s", "u"};
        const auto h = relabel(g, order, ids);
        // h's element i is g's order[i].
        const std::vector<Element> tg{order[0], order[2], order[1]};
        const std::vector<Element> th{0, 2, 1};
        EXPECT_EQ(qf_type(g, tg), qf_type(h, th));
    }
}

TEST(Restrict, Examples) {
    const std::vector<std::string> ab{"a", "b"};
    EXPECT_TRUE(is_isomorphic(restrict(triangle_abc(), ab), complete_graph(2)));
    EXPECT_EQ(restrict(path_abc(), std::vector<std::string>{}).size(), 0u);
    const std::vector<std::string> ac{"a", "c"};
    const auto r = restrict(chain_of({"a", "b", "c"}), ac);
    EXPECT_TRUE(r.holds_ids("<", {"a", "c"}));
    EXPECT_TRUE(is_isomorphic(r, chain(2)));
}

TEST(Restrict, UnknownElementThrows) {
    const std::vector<std::string> bad{"a", "zz"};
    try {
        restrict(path_abc(), bad);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::unknown_element);
    }
}

TEST(Builder, ArityMismatchThrows) {
    StructureBuilder b(graph_signature());
    b.add_element("a");
    b.add_tuple(0, Tuple{0, 0, 0});
    EXPECT_THROW(b.build(), Error);
}

TEST(Isomorphism, Examples) {
    const auto xyz = make_graph({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}});
    const auto iso = find_isomorphism(path_abc(), xyz);
    ASSERT_TRUE(iso);
    EXPECT_TRUE(xyz.id((*iso)[0]) == "x" || xyz.id((*iso)[0]) == "z");
    EXPECT_FALSE(find_isomorphism(path_abc(), triangle_abc()));
    StructureBuilder rev(order_signature());
    for (const auto* id : {"a", "b", "c"}) {
        rev.add_element(id);
    }
    rev.add_tuple("<", {"b", "a"});
    rev.add_tuple("<", {"c", "b"});
    rev.add_tuple("<", {"c", "a"});
    const auto r = rev.build();
    const auto c = chain_of({"a", "b", "c"});
    // A reversed chain is again a chain, via a->c, c->a.
    const auto rc = find_isomorphism(c, r);
    ASSERT_TRUE(rc);
    EXPECT_EQ(r.id((*rc)[0]), "c");
    StructureBuilder sym(order_signature());
    for (const auto* id : {"a", "b", "c"}) {
        sym.add_element(id);
    }
    for (const auto& [x, y] : std::vector<std::pair<const char*, const char*>>{{"a", "b"}, {"b", "c"}, {"a", "c"}}) {
        sym.add_tuple("<", {x, y});
        sym.add_tuple("<", {y, x});
    }
    EXPECT_FALSE(find_isomorphism(c, sym.build()));
}

TEST(Embeddings, Examples) {
    EXPECT_EQ(find_embeddings(complete_graph(2), triangle_abc()).size(), 6u);
    EXPECT_TRUE(find_embeddings(triangle_abc(), path_abc()).empty());
    EXPECT_EQ(find_embeddings(complete_graph(1), path_graph(5)).size(), 5u);
    EXPECT_EQ(find_embeddings(complete_graph(2), triangle_abc(), 2).size(), 2u);
}

TEST(Embeddings, MatchBruteForceOnRandomGraphs) {
    std::mt19937 rng(5);
    for (int t = 0; t < 300; ++t) {
        const auto a = random_graph(rng, 1 + rng() % 4);
        const auto b = random_graph(rng, rng() % 7);
        auto got = find_embeddings(a, b);
        auto want = oracle::induced_copies(a, b);
        std::sort(want.begin(), want.end());
        EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
        EXPECT_EQ(got, want);
        EXPECT_EQ(embeds(a, b), !want.empty());
    }
}

TEST(CanonicalForm, EqualExactlyOnIsomorphicGraphs) {
    for (std::size_t n = 0; n <= 4; ++n) {
        const auto graphs = oracle::all_graphs(n);
        std::set<std::string> forms;
        for (const auto& g : graphs) {
            forms.insert(canonical_form(g));
        }
        // Graphs on 0..4 vertices up to isomorphism.
        const std::size_t classes[] = {1, 1, 2, 4, 11};
        EXPECT_EQ(forms.size(), classes[n]) << n;
        for (std::size_t i = 0; i < graphs.size(); i += 7) {
            for (std::size_t j = 0; j < graphs.size(); j += 3) {
                EXPECT_EQ(canonical_form(graphs[i]) == canonical_form(graphs[j]),
                          oracle::isomorphic(graphs[i], graphs[j]));
            }
        }
    }
}

TEST(CanonicalForm, StableUnderRelabeling) {
    std::mt19937 rng(8);
    for (int t = 0; t < 300; ++t) {
        const auto g = random_graph(rng, rng() % 8);
        const auto h = shuffled(rng, g);
        EXPECT_EQ(canonical_form(g), canonical_form(h));
        EXPECT_EQ(canonical_representative(g), canonical_representative(h));
        EXPECT_TRUE(is_isomorphic(g, canonical_representative(g)));
    }
}

TEST(Catalog, Shapes) {
    EXPECT_EQ(complete_graph(4).table(0).size(), 12u);
    EXPECT_EQ(empty_graph(4).table(0).size(), 0u);
    EXPECT_EQ(path_graph(4).table(0).size(), 6u);
    EXPECT_EQ(chain(4).table(0).size(), 6u);
    EXPECT_EQ(complete_hypergraph(3, 4).table(0).size(), 4u * 6u);
}
