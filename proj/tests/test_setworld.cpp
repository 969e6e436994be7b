#include "support.hpp"
#include "suites/oracles.hpp"

#include "deltasys/catalog.hpp"
#include "deltasys/error.hpp"
#include "deltasys/setworld.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace deltasys;
using testing_support::masks;
using testing_support::random_family;

namespace {

SetLabeling path_labeling(std::vector<AtomSet> labels) {
    return SetLabeling(make_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}), std::move(labels));
}

} // namespace

TEST(Kernel, Examples) {
    EXPECT_EQ(kernel({{1, 2}, {1, 3}, {1, 4}}), atom_set({1}));
    EXPECT_EQ(kernel({{1, 2}, {3, 4}}), AtomSet{});
    EXPECT_FALSE(kernel({{1, 2}, {1, 3}, {2, 3}}));
}

TEST(Kernel, UndefinedBelowTwoMembers) {
    try {
        kernel({{1, 2}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::kernel_undefined);
    }
}

TEST(IsSunflower, Examples) {
    EXPECT_TRUE(is_sunflower({{1, 2}, {5, 6}}));
    EXPECT_TRUE(is_sunflower({{1}, {2}, {3}}));
    EXPECT_FALSE(is_sunflower({{1, 2}, {1, 3}, {2, 3}}));
}

TEST(SetFamily, RejectsDuplicates) { EXPECT_THROW(SetFamily({{1, 2}, {2, 1}}), Error); }

TEST(MaxSunflower, Examples) {
    EXPECT_EQ(max_sunflower({{1, 2}, {1, 3}, {2, 3}, {4, 5}}).indices.size(), 2u);
    const auto w = max_sunflower({{1, 2}, {1, 3}, {1, 4}, {2, 3}});
    EXPECT_EQ(w.indices, (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_EQ(w.kernel, atom_set({1}));
    const auto d = max_sunflower({{1}, {2}, {3}, {4}});
    EXPECT_EQ(d.indices.size(), 4u);
    EXPECT_TRUE(d.kernel.empty());
}

TEST(MaxSunflower, AgreesWithSubsetEnumeration) {
    std::mt19937 rng(21);
    for (int t = 0; t < 3000; ++t) {
        const auto f = random_family(rng, 1 + rng() % 9, 1 + rng() % 7, 4);
        const auto w = max_sunflower(f);
        const auto m = masks(f);
        ASSERT_EQ(w.indices.size(), oracle::max_sunflower_size(m));
        std::vector<std::uint64_t> sub;
        for (const auto i : w.indices) {
            sub.push_back(m[i]);
        }
        EXPECT_TRUE(oracle::is_sunflower(sub));
        EXPECT_TRUE(std::is_sorted(w.indices.begin(), w.indices.end()));
    }
}

TEST(MaxSunflower, LexicographicallyLeastAmongMaximal) {
    // {0,1},{0,2} and {0,1},{3,4}, ... all have size 2; the least index pair wins.
    const auto w = max_sunflower({{0, 1}, {0, 2}, {1, 2}});
    EXPECT_EQ(w.indices, (std::vector<std::size_t>{0, 1}));
}

TEST(ErdosRado, Threshold) {
    EXPECT_EQ(erdos_rado_threshold(2, 3), 8u);
    EXPECT_EQ(erdos_rado_threshold(3, 3), 48u);
    EXPECT_EQ(erdos_rado_threshold(1, 4), 3u);
}

TEST(ErdosRado, AllPairsOfFive) {
    std::vector<AtomSet> all;
    for (int i = 1; i <= 5; ++i) {
        for (int j = i + 1; j <= 5; ++j) {
            all.push_back(atom_set({i, j}));
        }
    }
    const SetFamily f(all);
    const auto w = erdos_rado_extract(f, 3);
    ASSERT_EQ(w.indices.size(), 3u);
    EXPECT_TRUE(is_sunflower(f.subfamily(w.indices)));
    EXPECT_EQ(w.kernel.size(), 1u);
}

TEST(ErdosRado, Singletons) {
    const auto w = erdos_rado_extract({{1}, {2}, {3}}, 3);
    EXPECT_EQ(w.indices, (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_TRUE(w.kernel.empty());
}

TEST(ErdosRado, BelowThresholdThrows) {
    try {
        erdos_rado_extract({{0, 1}, {0, 2}, {1, 2}}, 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::below_threshold);
    }
}

TEST(ErdosRado, MixedSizesRejected) { EXPECT_THROW(erdos_rado_extract({{0}, {1, 2}, {3}, {4}}, 2), Error); }

TEST(ErdosRado, RandomTriplesAboveThreshold) {
    std::mt19937 rng(4);
    for (int t = 0; t < 500; ++t) {
        // 3-sets, k = 2: threshold 3!*1 = 6, so any 7 distinct 3-sets work.
        std::vector<AtomSet> sets;
        while (sets.size() < 7) {
            auto s = make_atom_set({Atom(int(rng() % 9)), Atom(int(rng() % 9)), Atom(int(rng() % 9))});
            if (s.size() == 3 && std::find(sets.begin(), sets.end(), s) == sets.end()) {
                sets.push_back(s);
            }
        }
        const SetFamily f(sets);
        const auto w = erdos_rado_extract(f, 2);
        ASSERT_EQ(w.indices.size(), 2u);
        EXPECT_TRUE(is_sunflower(f.subfamily(w.indices)));
    }
}

TEST(PadLabeling, Example) {
    const SetLabeling lab(make_graph({"a", "b"}, {}), {atom_set({1, 2}), atom_set({3, 4})});
    const auto p = pad_labeling(lab, Atom(9));
    EXPECT_EQ(p.label(0), atom_set({1, 2, 9}));
    EXPECT_EQ(p.label(1), atom_set({3, 4, 9}));
    EXPECT_EQ(pad_labeling(SetLabeling(), Atom(9)).base().size(), 0u);
}

TEST(PadLabeling, PreservesAndReflectsSunflowers) {
    std::mt19937 rng(14);
    for (int t = 0; t < 1000; ++t) {
        const auto f = random_family(rng, 2 + rng() % 6, 6, 3);
        std::vector<AtomSet> padded;
        for (const auto& m : f.members()) {
            auto s = m;
            s.push_back(Atom(40));
            padded.push_back(make_atom_set(s));
        }
        const SetFamily g(padded);
        EXPECT_EQ(is_sunflower(f), is_sunflower(g));
        EXPECT_EQ(max_sunflower(f).indices, max_sunflower(g).indices);
    }
}

TEST(NormalizeAtoms, Examples) {
    const SetLabeling lab(make_graph({"a", "b"}, {}), {atom_set({17, 42}), atom_set({17, 99})});
    const auto n = normalize_atoms(lab);
    EXPECT_EQ(n.label(0), atom_set({0, 1}));
    EXPECT_EQ(n.label(1), atom_set({0, 2}));
    EXPECT_EQ(normalize_atoms(n), n);
}

TEST(NormalizeAtoms, StringAtomsBecomeIntegers) {
    const SetLabeling lab(make_graph({"a", "b"}, {}),
                          {make_atom_set({Atom(std::string("x")), Atom(3)}), make_atom_set({Atom(std::string("y"))})});
    const auto n = normalize_atoms(lab);
    EXPECT_EQ(n.label(0), atom_set({0, 1}));
    EXPECT_EQ(n.label(1), atom_set({2}));
}

TEST(AtomOrder, IntegersBeforeStrings) {
    EXPECT_LT(Atom(100), Atom(std::string("a")));
    EXPECT_LT(Atom(2), Atom(10));
    EXPECT_LT(Atom(std::string("a")), Atom(std::string("b")));
}

TEST(SetLabeling, RejectsNonInjectiveLabels) {
    EXPECT_THROW(SetLabeling(make_graph({"a", "b"}, {}), {atom_set({1}), atom_set({1})}), Error);
}

TEST(StructuredSunflower, Examples) {
    const auto lab = path_labeling({atom_set({1, 2}), atom_set({1, 3}), atom_set({2, 3})});
    const auto edge = find_structured_sunflower(lab, complete_graph(2));
    ASSERT_TRUE(edge);
    EXPECT_EQ(edge->embedding, (ElementMap{0, 1}));
    EXPECT_EQ(edge->witness.kernel, atom_set({1}));
    EXPECT_FALSE(find_structured_sunflower(lab, path_graph(3)));

    const auto disjoint = path_labeling({atom_set({1}), atom_set({2}), atom_set({3})});
    const auto p = find_structured_sunflower(disjoint, path_graph(3));
    ASSERT_TRUE(p);
    EXPECT_TRUE(p->witness.kernel.empty());
}

TEST(StructuredSunflower, AgreesWithBruteForce) {
    std::mt19937 rng(31);
    for (int t = 0; t < 400; ++t) {
        const std::size_t n = 2 + rng() % 4;
        const auto b = testing_support::random_graph(rng, n);
        std::vector<AtomSet> labels;
        while (labels.size() < n) {
            auto s = make_atom_set({Atom(int(rng() % 6)), Atom(int(rng() % 6))});
            if (std::find(labels.begin(), labels.end(), s) == labels.end()) {
                labels.push_back(s);
            }
        }
        const SetLabeling lab(b, labels);
        const auto a = testing_support::random_graph(rng, 1 + rng() % 3);
        EXPECT_EQ(find_structured_sunflower(lab, a).has_value(),
                  oracle::has_sunflower_copy(b, a, masks(lab.family())));
    }
}
