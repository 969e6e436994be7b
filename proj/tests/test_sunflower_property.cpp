#include "support.hpp"
#include "suites/oracles.hpp"

#include "deltasys/ages.hpp"
#include "deltasys/catalog.hpp"
#include "deltasys/error.hpp"
#include "deltasys/sunflower_property.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

using namespace deltasys;
using testing_support::masks;

namespace {

Signature unary_p() { return Signature{{"P", 1}}; }

Structure p_structure(std::size_t n, std::size_t with_p) {
    StructureBuilder b(unary_p());
    for (std::size_t i = 0; i < n; ++i) {
        b.add_element("u" + std::to_string(i));
    }
    for (std::size_t i = 0; i < with_p; ++i) {
        b.add_tuple("P", {"u" + std::to_string(i)});
    }
    return b.build();
}

bool no_sunflower_copy(const SetLabeling& lab, const Structure& a) {
    return !oracle::has_sunflower_copy(lab.base(), a, masks(lab.family()));
}

} // namespace

TEST(BuildWitness, PairClauseIsTheTargetItself) {
    BetaSource beta(AgeDescriptor::graphs(), 6);
    const auto plan = build_witness(AgeDescriptor::graphs(), complete_graph(2), 2, beta);
    EXPECT_EQ(plan.clause, "pair");
    EXPECT_EQ(plan.witness, plan.target);
    EXPECT_TRUE(plan_violations(AgeDescriptor::graphs(), plan).empty());
}

TEST(BuildWitness, ArityOneClause) {
    BetaSource beta(AgeDescriptor::graphs(), 6);
    const auto plan = build_witness(AgeDescriptor::graphs(), path_graph(4), 1, beta);
    EXPECT_EQ(plan.clause, "arity_one");
    EXPECT_EQ(plan.witness.size(), 4u);
    EXPECT_EQ(plan.gamma_trace, (std::vector<std::size_t>{4}));
}

TEST(BuildWitness, TriangleConstruction) {
    const auto g = AgeDescriptor::graphs();
    BetaSource beta(g, 13);
    const auto plan = build_witness(g, complete_graph(3), 2, beta);
    EXPECT_EQ(plan.clause, "construction");
    ASSERT_TRUE(plan.block_minus && plan.block);
    EXPECT_TRUE(is_isomorphic(*plan.block_minus, complete_graph(3)));
    EXPECT_EQ(plan.colors, 6u);
    // Six vertex colors need 13 vertices for a monochromatic triangle.
    EXPECT_TRUE(is_isomorphic(*plan.block, complete_graph(13)));
    const std::uint64_t b = plan.block->size();
    EXPECT_EQ(plan.size_bound, b * (1 + b + b * b));
    EXPECT_LE(plan.witness.size(), plan.size_bound);
    EXPECT_TRUE(contains(g, plan.witness));
    EXPECT_TRUE(plan_violations(g, plan).empty());
    ASSERT_EQ(plan.levels.size(), 3u);
    for (const auto& level : plan.levels) {
        std::uint64_t pow = 1;
        for (std::size_t i = 0; i < level.k; ++i) {
            pow *= b;
        }
        EXPECT_LE(level.valid.size(), pow);
        for (const auto& seq : level.valid) {
            EXPECT_EQ(seq.size(), level.k);
            EXPECT_TRUE(is_isomorphic(restrict(plan.witness, seq), complete_graph(seq.size())));
        }
    }
    EXPECT_EQ(plan.gamma_trace.back(), plan.witness.size());
}

TEST(BuildWitness, BetaUnavailableNamesTheLevel) {
    BetaSource beta(AgeDescriptor::graphs(), 8);
    try {
        build_witness(AgeDescriptor::graphs(), complete_graph(3), 2, beta);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::beta_unavailable);
        EXPECT_STREQ(e.what(), "BetaUnavailable(2)");
    }
}

TEST(BuildWitness, SuppliedBlockIsUsed) {
    const auto g = AgeDescriptor::graphs();
    BetaSource beta(g, 3);
    beta.supply(complete_graph(3), 6, complete_graph(13));
    const auto plan = build_witness(g, complete_graph(3), 2, beta);
    EXPECT_EQ(plan.block->size(), 13u);
}

TEST(PlanViolations, DetectsTampering) {
    const auto g = AgeDescriptor::graphs();
    BetaSource beta(g, 13);
    auto plan = build_witness(g, complete_graph(3), 2, beta);
    auto loose = plan;
    loose.size_bound = 10;
    EXPECT_FALSE(plan_violations(g, loose).empty());
    auto wrong = plan;
    wrong.levels[1].valid.push_back({wrong.witness.id(0), wrong.witness.id(0)});
    EXPECT_FALSE(plan_violations(g, wrong).empty());
}

TEST(VerifyWitness, SizeTwoTargetsVerifyInstantly) {
    const auto r = verify_witness(complete_graph(2), complete_graph(2), 2, VerifyMode::exhaustive());
    EXPECT_EQ(r.verdict, Verdict::verified);
    EXPECT_EQ(r.labelings, 0u);
    EXPECT_EQ(verify_witness(complete_graph(40), empty_graph(2), 2, VerifyMode::exhaustive()).verdict,
              Verdict::refuted);
    EXPECT_EQ(verify_witness(path_graph(40), empty_graph(2), 5, VerifyMode::exhaustive()).verdict, Verdict::verified);
}

TEST(VerifyWitness, ArityOneIsEmbedding) {
    EXPECT_EQ(verify_witness(path_graph(4), path_graph(3), 1, VerifyMode::exhaustive()).verdict, Verdict::verified);
    const auto r = verify_witness(path_graph(4), complete_graph(3), 1, VerifyMode::exhaustive());
    EXPECT_EQ(r.verdict, Verdict::refuted);
    ASSERT_TRUE(r.refutation);
    EXPECT_TRUE(no_sunflower_copy(*r.refutation, complete_graph(3)));
}

TEST(VerifyWitness, MatchesUnreducedBruteForce) {
    // Every host with at most 4 vertices, every 3-vertex target, 2-sets.
    for (std::size_t n = 3; n <= 4; ++n) {
        for (const auto& b : enumerate_members_of_size(AgeDescriptor::graphs(), n)) {
            for (const auto& a : enumerate_members_of_size(AgeDescriptor::graphs(), 3)) {
                const auto r = verify_witness(b, a, 2, VerifyMode::exhaustive());
                const bool brute = oracle::all_labelings_have_sunflower(b, a, 2);
                ASSERT_EQ(r.verdict == Verdict::verified, brute) << canonical_form(b) << " / " << canonical_form(a);
                if (r.verdict == Verdict::refuted) {
                    ASSERT_TRUE(r.refutation);
                    EXPECT_EQ(r.refutation->uniform_size(), std::optional<std::size_t>{2});
                    EXPECT_TRUE(no_sunflower_copy(*r.refutation, a));
                }
            }
        }
    }
}

TEST(VerifyWitness, EmptyGraphHostsForThreeIsolatedVertices) {
    for (std::size_t n = 3; n <= 5; ++n) {
        const auto r = verify_witness(empty_graph(n), empty_graph(3), 2, VerifyMode::exhaustive());
        EXPECT_EQ(r.verdict == Verdict::verified, oracle::all_labelings_have_sunflower(empty_graph(n), empty_graph(3), 2))
            << n;
    }
}

TEST(VerifyWitness, SevenIndependentVerticesForceThree) {
    // A graph with no vertex of degree 3 and no 3-matching has at most 6
    // edges (two disjoint triangles), so any 7 distinct 2-sets hold a
    // 3-sunflower and 6 need not.
    const auto seven = verify_witness(empty_graph(7), empty_graph(3), 2, VerifyMode::exhaustive(), 1000000000);
    EXPECT_EQ(seven.verdict, Verdict::verified);
    EXPECT_GT(seven.labelings, 0u);
    const auto six = verify_witness(empty_graph(6), empty_graph(3), 2, VerifyMode::exhaustive());
    ASSERT_EQ(six.verdict, Verdict::refuted);
    EXPECT_TRUE(no_sunflower_copy(*six.refutation, empty_graph(3)));
    EXPECT_TRUE(oracle::indivisible(empty_graph(7), empty_graph(3), 2));
}

TEST(VerifyWitness, RefusesBeyondCeiling) {
    try {
        verify_witness(empty_graph(9), empty_graph(3), 2, VerifyMode::exhaustive(), 1000);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::exact_refused);
    }
}

TEST(VerifyWitness, CeilingFromEnvironment) {
    ::setenv("DELTASYS_CEILING", "1234", 1);
    EXPECT_EQ(exact_ceiling_from_env(), 1234u);
    ::setenv("DELTASYS_CEILING", "junk", 1);
    EXPECT_EQ(exact_ceiling_from_env(), default_exact_ceiling);
    ::unsetenv("DELTASYS_CEILING");
    EXPECT_EQ(exact_ceiling_from_env(), default_exact_ceiling);
}

TEST(VerifyWitness, RandomModeIsDeterministic) {
    const auto a = verify_witness(empty_graph(6), empty_graph(3), 2, VerifyMode::randomized(200, 7));
    const auto b = verify_witness(empty_graph(6), empty_graph(3), 2, VerifyMode::randomized(200, 7));
    EXPECT_EQ(a.verdict, b.verdict);
    EXPECT_EQ(a.refutation, b.refutation);
    EXPECT_NE(a.verdict, Verdict::verified);
}

TEST(VerifyWitness, SplitEncodingRefutesMixedTargets) {
    // Without unique unary types, tagging by P keeps every large sunflower on one side.
    const auto b = p_structure(5, 2);
    const auto a = p_structure(3, 1);
    const auto r = verify_witness(b, a, 2, VerifyMode::exhaustive());
    EXPECT_EQ(r.verdict, Verdict::refuted);
    const auto split = split_encoding(b, {"u0", "u1"});
    EXPECT_FALSE(find_structured_sunflower(split, a));
}

TEST(CounterexampleSearch, TriangleLabels) {
    const auto r = counterexample_search(complete_graph(3), complete_graph(3), 2, 100, 0);
    ASSERT_TRUE(r);
    EXPECT_TRUE(no_sunflower_copy(*r, complete_graph(3)));
    const auto fam = r->family();
    EXPECT_FALSE(is_sunflower(fam));
    EXPECT_EQ(fam.size(), 3u);
}

TEST(CounterexampleSearch, SizeTwoTargetsHaveNone) {
    EXPECT_FALSE(counterexample_search(complete_graph(5), complete_graph(2), 3, 100, 0));
}

TEST(CounterexampleSearch, SeededAndSound) {
    std::mt19937 rng(3);
    for (int t = 0; t < 40; ++t) {
        const auto b = testing_support::random_graph(rng, 3 + rng() % 4);
        const auto a = testing_support::random_graph(rng, 3);
        const auto x = counterexample_search(b, a, 2, 50, t);
        const auto y = counterexample_search(b, a, 2, 50, t);
        EXPECT_EQ(x, y);
        if (x) {
            EXPECT_TRUE(no_sunflower_copy(*x, a));
        }
    }
}

TEST(PartitionEncoding, PathExample) {
    const auto p = make_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    const Coloring c{p, {0, 1, 0}, 2};
    const auto lab = partition_encoding(p, c);
    auto pair = [](const char* x, const char* y) { return make_atom_set({Atom(std::string(x)), Atom(std::string(y))}); };
    EXPECT_EQ(lab.label(0), pair("p:0:0", "p:1:0"));
    EXPECT_EQ(lab.label(2), pair("p:0:0", "p:1:1"));
    EXPECT_EQ(lab.label(1), pair("p:0:1", "p:2:0"));
    EXPECT_EQ(lab.uniform_size(), std::optional<std::size_t>{2});
    EXPECT_EQ(lab.base(), p);
}

TEST(PartitionEncoding, LargeSunflowersStayInOnePartOnK4) {
    const auto k4 = complete_graph(4);
    for (int code = 0; code < 16; ++code) {
        const Coloring c{k4, {std::size_t(code & 1), std::size_t(code >> 1 & 1), std::size_t(code >> 2 & 1),
                              std::size_t(code >> 3 & 1)},
                         2};
        const auto fam = partition_encoding(k4, c).family();
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = i + 1; j < 4; ++j) {
                for (std::size_t k = j + 1; k < 4; ++k) {
                    if (is_sunflower(fam.subfamily({i, j, k}))) {
                        EXPECT_TRUE(c.parts[i] == c.parts[j] && c.parts[j] == c.parts[k]);
                    }
                }
            }
        }
    }
}

TEST(SplitEncoding, Examples) {
    const auto b = make_graph({"x", "y", "z"}, {});
    const auto lab = split_encoding(b, {"x"});
    EXPECT_EQ(lab.label(0)[1], Atom(std::string("x")));
    EXPECT_EQ(lab.label(1)[0], lab.label(2)[0]);
    EXPECT_NE(lab.label(0)[0], lab.label(1)[0]);
    const auto none = split_encoding(b, {});
    const auto fam = none.family();
    EXPECT_TRUE(is_sunflower(fam));
    EXPECT_EQ(kernel(fam)->size(), 1u);
}

TEST(SplitEncoding, FreshTagsAvoidIds) {
    const auto b = make_graph({"t0", "t1", "z"}, {});
    const auto lab = split_encoding(b, {"z"});
    const auto fam = lab.family();
    EXPECT_EQ(set_intersection(fam[0], fam[2]).size(), 0u);
    EXPECT_EQ(set_intersection(fam[0], fam[1]).size(), 1u);
}

TEST(BlockEncoding, Examples) {
    const auto two = [](const std::string& x, const std::string& y) {
        return relabel(chain(2), std::vector<Element>{0, 1}, {x, y});
    };
    const auto lab = scattered_block_encoding({{"0", two("a", "b")}, {"1", two("c", "d")}});
    EXPECT_EQ(lab.base().size(), 4u);
    EXPECT_TRUE(lab.base().holds_ids("<", {"b", "c"}));
    EXPECT_TRUE(set_intersection(lab.label(0), lab.label(2)).empty());
    EXPECT_EQ(set_intersection(lab.label(0), lab.label(1)), make_atom_set({Atom(std::string("0"))}));
    const auto one = scattered_block_encoding({{"only", two("a", "b")}});
    EXPECT_TRUE(is_sunflower(one.family()));
}

TEST(BlockEncoding, IdClashRejected) {
    const auto c = relabel(chain(2), std::vector<Element>{0, 1}, {"a", "b"});
    EXPECT_THROW(scattered_block_encoding({{"0", c}, {"1", c}}), Error);
}

TEST(LabelingBound, SmallValues) {
    // The first label is {0,1}; later ones mix seen and fresh atoms.
    EXPECT_DOUBLE_EQ(normalized_labeling_bound(1, 2), 1.0);
    EXPECT_DOUBLE_EQ(normalized_labeling_bound(2, 2), 4.0);
    EXPECT_DOUBLE_EQ(normalized_labeling_bound(3, 2), 44.0);
}
