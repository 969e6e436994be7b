#include "suites/suites.hpp"

#include "deltasys/ages.hpp"
#include "deltasys/catalog.hpp"
#include "deltasys/error.hpp"
#include "deltasys/linorders.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace deltasys;
using K = OrderTerm::Kind;

TEST(Parse, Examples) {
    EXPECT_EQ(parse_term("w + 3 + w*"),
              OrderTerm::concat({OrderTerm::omega(), OrderTerm::fin(3), OrderTerm::omega_star()}));
    EXPECT_EQ(parse_term("sum(w, w)"), OrderTerm::rep(K::omega, OrderTerm::omega()));
    EXPECT_EQ(parse_term("sum(eta, 1)"), OrderTerm::rep(K::eta, OrderTerm::fin(1)));
    EXPECT_EQ(parse_term("(w + 1) + (2 + w*)"),
              OrderTerm::concat({OrderTerm::omega(), OrderTerm::fin(1), OrderTerm::fin(2), OrderTerm::omega_star()}));
    EXPECT_EQ(parse_term("0").kind(), K::fin);
}

TEST(Parse, ErrorsCarryPosition) {
    for (const char* bad : {"", "w +", "sum(w w)", "sum(3, w)", "w ++ 1", "(w", "omega", "w)", "sum(w,)"}) {
        try {
            parse_term(bad);
            FAIL() << bad;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), Errc::parse_error) << bad;
            EXPECT_NE(std::string(e.what()).find("position"), std::string::npos) << bad;
        }
    }
}

TEST(Parse, RoundTripsRandomTerms) {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 2000; ++t) {
        const auto term = suites::random_term(rng, 4);
        EXPECT_EQ(parse_term(to_string(term)), term) << to_string(term);
    }
}

TEST(Attrs, Examples) {
    const auto eta = attrs(parse_term("eta"));
    EXPECT_TRUE(eta.embeds_eta && eta.embeds_omega && eta.embeds_omega_star);
    EXPECT_FALSE(eta.is_omega);
    const auto w1 = attrs(parse_term("w + 1"));
    EXPECT_FALSE(w1.is_omega);
    EXPECT_TRUE(w1.embeds_omega);
    EXPECT_FALSE(w1.embeds_eta);
    const auto w2 = attrs(parse_term("sum(w, w)"));
    EXPECT_TRUE(w2.embeds_omega);
    EXPECT_FALSE(w2.is_omega || w2.embeds_eta);
    EXPECT_TRUE(attrs(parse_term("1 + w")).is_omega);
    EXPECT_TRUE(attrs(parse_term("w* + 4")).is_omega_star);
    EXPECT_EQ(attrs(parse_term("2 + 3")).finite_size, 5u);
    EXPECT_TRUE(attrs(parse_term("0 + 0")).is_empty);
    EXPECT_TRUE(attrs(parse_term("sum(w, 0)")).is_empty);
}

TEST(Attrs, DualityAndAssociativity) {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 2000; ++t) {
        const auto a = suites::random_term(rng, 3);
        const auto b = suites::random_term(rng, 3);
        const auto c = suites::random_term(rng, 3);
        EXPECT_EQ(dual(dual(a)), a);
        EXPECT_EQ(attrs(dual(a)), dual(attrs(a)));
        EXPECT_EQ(concat_attrs({concat_attrs({attrs(a), attrs(b)}), attrs(c)}),
                  concat_attrs({attrs(a), concat_attrs({attrs(b), attrs(c)})}));
        EXPECT_EQ(attrs(OrderTerm::concat({a, b, c})), concat_attrs({attrs(a), attrs(b), attrs(c)}));
    }
}

TEST(Attrs, InvariantsOnRandomTerms) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 2000; ++t) {
        const auto term = suites::random_term(rng, 4);
        const auto a = attrs(term);
        if (a.is_omega || a.is_omega_star) {
            EXPECT_FALSE(a.embeds_eta || a.finite_size);
        }
        if (a.embeds_eta) {
            EXPECT_TRUE(a.embeds_omega && a.embeds_omega_star);
        }
        EXPECT_EQ(a.finite_size.has_value(), !a.embeds_omega && !a.embeds_omega_star);
        EXPECT_EQ(a.is_empty, a.finite_size == std::optional<std::size_t>{0});
        EXPECT_EQ(scattered_rank(term).has_value(), !a.embeds_eta);
    }
}

TEST(Rank, Examples) {
    EXPECT_EQ(scattered_rank(parse_term("5")), 0u);
    EXPECT_EQ(scattered_rank(parse_term("w")), 1u);
    EXPECT_EQ(scattered_rank(parse_term("w*")), 1u);
    EXPECT_EQ(scattered_rank(parse_term("1 + w")), 1u);
    EXPECT_EQ(scattered_rank(parse_term("w + 1")), 2u);
    EXPECT_EQ(scattered_rank(parse_term("w* + w")), 2u);
    EXPECT_EQ(scattered_rank(parse_term("sum(w, w)")), 2u);
    EXPECT_EQ(scattered_rank(parse_term("sum(w, w) + w")), 3u);
    EXPECT_EQ(scattered_rank(parse_term("sum(w, sum(w, w))")), 3u);
    EXPECT_FALSE(scattered_rank(parse_term("eta")));
    EXPECT_FALSE(scattered_rank(parse_term("w + eta")));
}

TEST(Rank, DualityInvariant) {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 2000; ++t) {
        const auto term = suites::random_term(rng, 4);
        EXPECT_EQ(scattered_rank(term), scattered_rank(dual(term)));
    }
}

TEST(Classify, GoldenTable) {
    struct Row {
        const char* term;
        bool sunflowerable;
        std::optional<SunflowerReason> reason;
    };
    const Row rows[] = {
        {"w", true, SunflowerReason::is_omega},
        {"w*", true, SunflowerReason::is_omega_star},
        {"w* + w", false, std::nullopt},
        {"w + 1", false, std::nullopt},
        {"1 + w", true, SunflowerReason::is_omega},
        {"w + w", false, std::nullopt},
        {"sum(w, w)", false, std::nullopt},
        {"sum(w*, w*)", false, std::nullopt},
        {"eta", true, SunflowerReason::embeds_eta},
        {"w + eta", true, SunflowerReason::embeds_eta},
        {"sum(eta, w)", true, SunflowerReason::embeds_eta},
        {"sum(w, eta)", true, SunflowerReason::embeds_eta},
    };
    for (const auto& row : rows) {
        const auto c = classify_sunflowerable(parse_term(row.term));
        EXPECT_EQ(c.sunflowerable, row.sunflowerable) << row.term;
        EXPECT_EQ(c.reason, row.reason) << row.term;
    }
    EXPECT_STREQ(reason_name(SunflowerReason::embeds_eta), "embeds_eta");
}

TEST(Classify, FiniteTermsRejected) {
    try {
        classify_sunflowerable(parse_term("3 + 4"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::invalid_argument);
    }
}

TEST(Classify, DualSwapsOmegaReasons) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 2000; ++t) {
        const auto term = suites::random_term(rng, 3);
        if (attrs(term).finite_size) {
            continue;
        }
        const auto c = classify_sunflowerable(term);
        const auto d = classify_sunflowerable(dual(term));
        EXPECT_EQ(c.sunflowerable, d.sunflowerable);
        if (c.reason == SunflowerReason::is_omega) {
            EXPECT_EQ(d.reason, SunflowerReason::is_omega_star);
        }
    }
}

TEST(Prefix, Examples) {
    const auto w = prefix_realize(parse_term("w"), 5);
    EXPECT_TRUE(is_isomorphic(w.order, chain(5)));
    const auto ww = prefix_realize(parse_term("w + w"), 4);
    EXPECT_EQ(ww.block, (std::vector<std::size_t>{0, 0, 1, 1}));
    EXPECT_TRUE(is_isomorphic(prefix_realize(parse_term("eta"), 3).order, chain(3)));
    EXPECT_EQ(prefix_realize(parse_term("2 + 1"), 10).order.size(), 3u);
}

TEST(Prefix, AlwaysALinearOrderOfTheRightSize) {
    std::mt19937_64 rng(6);
    const auto lo = AgeDescriptor::linear_orders();
    for (int t = 0; t < 1000; ++t) {
        const auto term = suites::random_term(rng, 4);
        const std::size_t n = 1 + rng() % 12;
        const auto r = prefix_realize(term, n);
        const auto a = attrs(term);
        const std::size_t want = a.finite_size ? std::min(n, *a.finite_size) : n;
        ASSERT_EQ(r.order.size(), want) << to_string(term);
        EXPECT_TRUE(contains(lo, r.order));
        EXPECT_TRUE(std::is_sorted(r.block.begin(), r.block.end()));
        EXPECT_EQ(r.block.size(), want);
    }
}

TEST(Prefix, BlocksCutAtBoundaries) {
    const auto r = prefix_realize(parse_term("w + w + w"), 6);
    const auto blocks = realization_blocks(r);
    ASSERT_EQ(blocks.size(), 3u);
    EXPECT_EQ(blocks[0].first, "b0");
    for (const auto& [id, order] : blocks) {
        EXPECT_TRUE(is_isomorphic(order, chain(2)));
    }
}
