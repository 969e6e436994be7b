#include "deltasys/sunflower_property.hpp"

#include "deltasys/catalog.hpp"
#include "deltasys/error.hpp"
#include "embedding_search.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>
#include <set>

namespace deltasys {

namespace {

std::vector<Element> identity_order(std::size_t n) {
    std::vector<Element> order(n);
    for (std::size_t i = 0; i < n; ++i) {
        order[i] = static_cast<Element>(i);
    }
    return order;
}

std::uint64_t saturating_power_sum(std::uint64_t base, std::size_t top) {
    // base * sum_{i=0..top} base^i
    long double total = 0;
    long double term = 1;
    for (std::size_t i = 0; i <= top; ++i) {
        total += term;
        term *= static_cast<long double>(base);
    }
    total *= static_cast<long double>(base);
    if (total >= 1.8e19L) {
        return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(total);
}

} // namespace

// ------------------------------------------------------------ construction

WitnessPlan build_witness(const AgeDescriptor& age, const Structure& a, std::size_t n, BetaSource& beta) {
    if (n == 0) {
        throw Error(Errc::invalid_argument, "arity must be positive");
    }
    if (!contains(age, a)) {
        throw Error(Errc::invalid_argument, "target is not a member of the age");
    }
    WitnessPlan plan;
    plan.target = a;
    plan.enumeration = a.universe();
    plan.arity = n;
    if (n == 1 || a.size() <= 2) {
        plan.clause = n == 1 ? "arity_one" : "pair";
        plan.witness = a;
        plan.gamma_trace.assign(n, a.size());
        plan.size_bound = a.size();
        return plan;
    }

    plan.clause = "construction";
    plan.inner.push_back(build_witness(age, a, n - 1, beta));
    const Structure& b_minus = plan.inner.front().witness;
    plan.block_minus = b_minus;
    plan.colors = n * a.size();
    auto b = beta.witness(b_minus, plan.colors);
    if (!b) {
        throw Error(Errc::beta_unavailable, "BetaUnavailable(" + std::to_string(n) + ")");
    }
    plan.block = *b;
    const std::size_t len = a.size();

    std::vector<Element> a_order;
    for (const auto& id : plan.enumeration) {
        a_order.push_back(a.require(id));
    }
    const Structure a_ordered = induced(a, a_order);

    const std::vector<Element> root{0};
    Structure cur = relabel(induced(a_ordered, root), root, {"r"});
    std::vector<std::vector<std::string>> valid = {{"r"}};
    plan.levels.push_back({1, valid, cur});

    for (std::size_t k = 1; k < len; ++k) {
        std::vector<Element> prefix_order(k + 1);
        for (std::size_t i = 0; i <= k; ++i) {
            prefix_order[i] = static_cast<Element>(i);
        }
        const Structure prefix = induced(a_ordered, prefix_order);
        std::vector<std::vector<std::string>> next;
        for (std::size_t j = 0; j < valid.size(); ++j) {
            const auto& c = valid[j];
            const std::string tag = "L" + std::to_string(k) + "." + std::to_string(j) + ":";
            std::vector<std::string> block_ids;
            for (const auto& id : b->universe()) {
                block_ids.push_back(tag + id);
            }
            const Structure b_c = relabel(*b, identity_order(b->size()), block_ids);
            std::vector<std::string> piece_ids = c;
            piece_ids.push_back(tag + "#x");
            const Structure piece = relabel(prefix, identity_order(k + 1), piece_ids);
            Structure extended;
            try {
                extended = extend_duplicating_type(age, piece, piece_ids, b_c);
                std::vector<std::string> keep = c;
                keep.insert(keep.end(), block_ids.begin(), block_ids.end());
                extended = restrict(extended, keep);
                cur = disjoint_amalgam(age, cur, extended);
            } catch (const Error& e) {
                if (e.code() == Errc::extension_failed || e.code() == Errc::no_amalgam) {
                    throw Error(Errc::dap_violation, "DAPViolation(" + std::to_string(k) + ")");
                }
                throw;
            }
            for (const auto& id : block_ids) {
                auto seq = c;
                seq.push_back(id);
                next.push_back(std::move(seq));
            }
        }
        valid = std::move(next);
        plan.levels.push_back({k + 1, valid, cur});
    }
    plan.witness = cur;
    plan.gamma_trace = plan.inner.front().gamma_trace;
    plan.gamma_trace.push_back(cur.size());
    plan.size_bound = saturating_power_sum(b->size(), len - 1);
    return plan;
}

std::vector<std::string> plan_violations(const AgeDescriptor& age, const WitnessPlan& plan) {
    std::vector<std::string> out;
    if (!contains(age, plan.witness)) {
        out.push_back("witness is not a member");
    }
    if (plan.witness.size() > plan.size_bound) {
        out.push_back("witness exceeds the size bound");
    }
    if (plan.clause != "construction") {
        if (!(plan.witness == plan.target)) {
            out.push_back("trivial clause must return the target");
        }
        return out;
    }
    const auto block_size = plan.block ? plan.block->size() : 0;
    std::vector<Element> a_order;
    for (const auto& id : plan.enumeration) {
        a_order.push_back(plan.target.require(id));
    }
    for (const auto& level : plan.levels) {
        const auto k = level.k;
        const long double cap = std::pow(static_cast<long double>(block_size), static_cast<long double>(k));
        if (static_cast<long double>(level.valid.size()) > cap) {
            out.push_back("|V_" + std::to_string(k) + "| exceeds |B|^" + std::to_string(k));
        }
        const std::vector<Element> head(a_order.begin(), a_order.begin() + static_cast<std::ptrdiff_t>(k));
        const auto want = qf_type(plan.target, head);
        for (const auto& seq : level.valid) {
            if (seq.size() != k || !(qf_type(plan.witness, seq) == want)) {
                out.push_back("a sequence of V_" + std::to_string(k) + " has the wrong type");
                break;
            }
        }
        if (!(restrict(plan.witness, level.partial.universe()) == level.partial)) {
            out.push_back("C_" + std::to_string(k) + " is not a substructure of the witness");
        }
    }
    return out;
}

const char* verdict_name(Verdict v) noexcept {
    switch (v) {
    case Verdict::verified: return "verified";
    case Verdict::refuted: return "refuted";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "unknown";
}

std::uint64_t exact_ceiling_from_env() {
    if (const char* raw = std::getenv("DELTASYS_CEILING")) {
        char* end = nullptr;
        const auto v = std::strtoull(raw, &end, 10);
        if (end != raw && *end == '\0' && v > 0) {
            return v;
        }
    }
    return default_exact_ceiling;
}

double normalized_labeling_bound(std::size_t size, std::size_t n) {
    double total = 1;
    for (std::size_t i = 0; i < size; ++i) {
        double choices = 0;
        for (std::size_t j = 0; j <= n && j <= i * n; ++j) {
            // C(i*n, j)
            double c = 1;
            for (std::size_t t = 0; t < j; ++t) {
                c = c * static_cast<double>(i * n - t) / static_cast<double>(t + 1);
            }
            choices += c;
        }
        total *= choices;
    }
    return total;
}

// ------------------------------------------------------------ verification

namespace {

using Bits = boost::dynamic_bitset<>;

// Reusable "is there a sunflower copy of a" test over mutable labels.
class SunflowerProbe {
public:
    SunflowerProbe(const Structure& host, const Structure& pattern) : search_(pattern, host) {}

    template <class Labels>
    std::optional<std::vector<Element>> find(const Labels& labels, std::size_t hosts = SIZE_MAX) {
        if (hosts != SIZE_MAX) {
            std::vector<char> allowed(labels.size(), 0);
            std::fill(allowed.begin(), allowed.begin() + static_cast<std::ptrdiff_t>(std::min(hosts, labels.size())), 1);
            search_.restrict_hosts(std::move(allowed));
        } else {
            search_.restrict_hosts({});
        }
        using Label = typename Labels::value_type;
        Label core{};
        std::optional<std::vector<Element>> found;
        search_.run(
            [&](std::size_t depth, Element v, std::span<const Element> images) {
                if (depth == 1) {
                    core = labels[images[0]] & labels[v];
                    return true;
                }
                for (std::size_t j = 0; j < depth; ++j) {
                    if ((labels[images[j]] & labels[v]) != core) {
                        return false;
                    }
                }
                return true;
            },
            [&](std::span<const Element> images) {
                found.emplace(images.begin(), images.end());
                return false;
            });
        return found;
    }

private:
    detail::EmbeddingSearch search_;
};

SetLabeling labeling_from_masks(const Structure& b, const std::vector<std::uint64_t>& masks, std::size_t n) {
    std::vector<AtomSet> labels;
    for (const auto m : masks) {
        std::vector<Atom> atoms;
        for (int i = 0; i < 64; ++i) {
            if (m >> i & 1U) {
                atoms.emplace_back(i);
            }
        }
        labels.push_back(make_atom_set(std::move(atoms)));
    }
    return SetLabeling(b, std::move(labels), n);
}

SetLabeling labeling_from_bits(const Structure& b, const std::vector<Bits>& sets, std::size_t n) {
    std::vector<AtomSet> labels;
    for (const auto& s : sets) {
        std::vector<Atom> atoms;
        for (auto i = s.find_first(); i != Bits::npos; i = s.find_next(i)) {
            atoms.emplace_back(static_cast<std::int64_t>(i));
        }
        labels.push_back(make_atom_set(std::move(atoms)));
    }
    return normalize_atoms(SetLabeling(b, std::move(labels), n));
}

// Pairwise disjoint labels {i*n, ..., i*n+n-1}.
SetLabeling disjoint_labeling(const Structure& b, std::size_t n) {
    std::vector<AtomSet> labels;
    for (std::size_t i = 0; i < b.size(); ++i) {
        std::vector<Atom> atoms;
        for (std::size_t t = 0; t < n; ++t) {
            atoms.emplace_back(static_cast<std::int64_t>(i * n + t));
        }
        labels.push_back(make_atom_set(std::move(atoms)));
    }
    return SetLabeling(b, std::move(labels), n);
}

class ExactLabelings {
public:
    ExactLabelings(const Structure& b, const Structure& a, std::size_t n) : b_(b), n_(n), probe_(b, a) {}

    std::optional<std::vector<std::uint64_t>> run() {
        labels_.assign(b_.size(), 0);
        if (descend(0, 0)) {
            return labels_;
        }
        return std::nullopt;
    }

    std::uint64_t examined() const noexcept { return examined_; }

private:
    // Label of element i: j atoms among the `used` so far plus n-j new ones.
    bool descend(std::size_t i, std::size_t used) {
        if (i == b_.size()) {
            return true;
        }
        for (std::size_t j = 0; j <= n_ && j <= used; ++j) {
            std::uint64_t fresh = 0;
            for (std::size_t t = 0; t < n_ - j; ++t) {
                fresh |= std::uint64_t{1} << (used + t);
            }
            std::vector<std::size_t> pick(j);
            for (std::size_t t = 0; t < j; ++t) {
                pick[t] = t;
            }
            while (true) {
                std::uint64_t label = fresh;
                for (const auto p : pick) {
                    label |= std::uint64_t{1} << p;
                }
                const bool repeat = j == n_ && std::find(labels_.begin(), labels_.begin() + static_cast<std::ptrdiff_t>(i), label) !=
                                                   labels_.begin() + static_cast<std::ptrdiff_t>(i);
                if (!repeat) {
                    labels_[i] = label;
                    ++examined_;
                    if (!probe_.find(labels_, i + 1) && descend(i + 1, used + n_ - j)) {
                        return true;
                    }
                }
                // next j-combination of [used]
                std::size_t t = j;
                while (t > 0 && pick[t - 1] == used - j + t - 1) {
                    --t;
                }
                if (t == 0) {
                    break;
                }
                ++pick[t - 1];
                for (std::size_t u = t; u < j; ++u) {
                    pick[u] = pick[u - 1] + 1;
                }
            }
        }
        return false;
    }

    const Structure& b_;
    std::size_t n_;
    SunflowerProbe probe_;
    std::vector<std::uint64_t> labels_;
    std::uint64_t examined_ = 0;
};

std::uint64_t binomial_at_least(std::size_t p, std::size_t n, std::uint64_t cap) {
    long double c = 1;
    for (std::size_t t = 0; t < n; ++t) {
        c = c * static_cast<long double>(p - t) / static_cast<long double>(t + 1);
        if (c >= static_cast<long double>(cap)) {
            return cap;
        }
    }
    return static_cast<std::uint64_t>(c + 0.5L);
}

class RandomLabelings {
public:
    RandomLabelings(const Structure& b, const Structure& a, std::size_t n, std::uint64_t seed)
        : b_(b), a_(a), n_(n), rng_(seed), probe_(b, a) {
        min_pool_ = n_;
        while (binomial_at_least(min_pool_, n_, b_.size()) < b_.size()) {
            ++min_pool_;
        }
        max_pool_ = std::max(min_pool_, n_ * b_.size());
    }

    std::optional<SetLabeling> trial(std::uint64_t t) {
        std::size_t pool = 0;
        switch (t % 3) {
        case 0: pool = uniform(min_pool_, max_pool_); break;
        default: pool = uniform(min_pool_, std::min(max_pool_, min_pool_ + 2)); break;
        }
        sample(pool);
        std::size_t rounds = t % 3 == 2 ? 2 * b_.size() : 0;
        while (true) {
            const auto copy = probe_.find(labels_);
            if (!copy) {
                return labeling_from_bits(b_, labels_, n_);
            }
            if (rounds-- == 0) {
                return std::nullopt;
            }
            repair(*copy, pool);
        }
    }

private:
    std::size_t uniform(std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
    }

    Bits random_set(std::size_t pool) {
        Bits s(pool);
        while (s.count() < n_) {
            s.set(uniform(0, pool - 1));
        }
        return s;
    }

    void sample(std::size_t pool) {
        labels_.clear();
        seen_.clear();
        for (std::size_t i = 0; i < b_.size(); ++i) {
            Bits s;
            do {
                s = random_set(pool);
            } while (!seen_.insert(s).second);
            labels_.push_back(std::move(s));
        }
    }

    // Relabel one member of the copy, half the time forcing an overlap with
    // another member so that the shared kernel breaks.
    void repair(const std::vector<Element>& copy, std::size_t pool) {
        const auto victim = copy[uniform(0, copy.size() - 1)];
        const auto other = copy[uniform(0, copy.size() - 1)];
        seen_.erase(labels_[victim]);
        Bits s;
        for (int attempt = 0;; ++attempt) {
            s = Bits(pool);
            if (other != victim && uniform(0, 1) == 0) {
                std::vector<std::size_t> atoms;
                for (auto i = labels_[other].find_first(); i != Bits::npos; i = labels_[other].find_next(i)) {
                    atoms.push_back(i);
                }
                s.set(atoms[uniform(0, atoms.size() - 1)]);
            }
            while (s.count() < n_) {
                s.set(uniform(0, pool - 1));
            }
            if (!seen_.count(s) || attempt > 64) {
                break;
            }
        }
        if (seen_.count(s)) {
            s = labels_[victim];
        }
        seen_.insert(s);
        labels_[victim] = std::move(s);
    }

    const Structure& b_;
    const Structure& a_;
    std::size_t n_;
    std::mt19937_64 rng_;
    SunflowerProbe probe_;
    std::size_t min_pool_ = 0;
    std::size_t max_pool_ = 0;
    std::vector<Bits> labels_;
    std::set<Bits> seen_;
};

} // namespace

VerificationReport verify_witness(const Structure& b, const Structure& a, std::size_t n, VerifyMode mode,
                                  std::uint64_t ceiling) {
    if (b.signature() != a.signature()) {
        throw Error(Errc::signature_mismatch, "signature mismatch");
    }
    if (n == 0) {
        throw Error(Errc::invalid_argument, "arity must be positive");
    }
    VerificationReport report;
    report.mode = mode;
    if (!embeds(a, b)) {
        report.verdict = Verdict::refuted;
        report.refutation = disjoint_labeling(b, n);
        report.note = "target does not embed";
        return report;
    }
    if (a.size() <= 2 || n == 1) {
        report.verdict = Verdict::verified;
        report.note = a.size() <= 2 ? "at most two sets always form a sunflower" : "distinct 1-sets are disjoint";
        return report;
    }
    if (mode.exact) {
        report.space_estimate = normalized_labeling_bound(b.size(), n);
        if (n * b.size() > 64 || report.space_estimate > static_cast<double>(ceiling)) {
            throw Error(Errc::exact_refused, "exact labeling space exceeds the ceiling; use randomized mode");
        }
        ExactLabelings search(b, a, n);
        const auto bad = search.run();
        report.labelings = search.examined();
        if (bad) {
            report.verdict = Verdict::refuted;
            report.refutation = labeling_from_masks(b, *bad, n);
        } else {
            report.verdict = Verdict::verified;
        }
        return report;
    }
    RandomLabelings search(b, a, n, mode.seed);
    for (std::uint64_t t = 0; t < mode.trials; ++t) {
        ++report.labelings;
        if (auto bad = search.trial(t)) {
            report.verdict = Verdict::refuted;
            report.refutation = std::move(bad);
            return report;
        }
    }
    report.verdict = Verdict::inconclusive;
    report.note = "no refutation found";
    return report;
}

std::optional<SetLabeling> counterexample_search(const Structure& b, const Structure& a, std::size_t n,
                                                 std::uint64_t trials, std::uint64_t seed) {
    if (b.signature() != a.signature()) {
        throw Error(Errc::signature_mismatch, "signature mismatch");
    }
    if (n == 0) {
        throw Error(Errc::invalid_argument, "arity must be positive");
    }
    if (!embeds(a, b)) {
        return disjoint_labeling(b, n);
    }
    if (a.size() <= 2 || n == 1) {
        return std::nullopt;
    }
    RandomLabelings search(b, a, n, seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        if (auto bad = search.trial(t)) {
            return bad;
        }
    }
    return std::nullopt;
}

} // namespace deltasys
