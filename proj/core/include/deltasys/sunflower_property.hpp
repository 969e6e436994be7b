#pragma once

// The n-sunflower property of ages: the inductive witness construction,
// verification over n-set labelings, adversarial search, and the labeling
// encodings used to transfer colorings and block sums into set-labelings.

#include "deltasys/ages.hpp"
#include "deltasys/setworld.hpp"
#include "deltasys/structure.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace deltasys {

struct WitnessLevel {
    std::size_t k = 0;
    /// Valid sequences of length k, as element ids of the witness.
    std::vector<std::vector<std::string>> valid;
    /// C_k.
    Structure partial;
};

struct WitnessPlan {
    Structure target;
    std::vector<std::string> enumeration; // ids of target, a_0..a_l
    std::size_t arity = 0;
    /// "arity_one", "pair" or "construction".
    std::string clause;
    /// Present for "construction": B^- (witness for arity-1) and B.
    std::optional<Structure> block_minus;
    std::optional<Structure> block;
    std::size_t colors = 0;
    std::vector<WitnessLevel> levels; // k = 1..l
    Structure witness;
    /// Witness size per arity 1..arity along the recursion.
    std::vector<std::size_t> gamma_trace;
    /// |B| * sum_{i=0..l} |B|^i, or |A| for the trivial clauses.
    std::uint64_t size_bound = 0;
    /// The plan for arity-1 when the construction clause applied.
    std::vector<WitnessPlan> inner;
};

/// Throws Errc::beta_unavailable ("BetaUnavailable(level)") when no
/// indivisibility witness is found and Errc::dap_violation
/// ("DAPViolation(level)") when an amalgamation step fails.
WitnessPlan build_witness(const AgeDescriptor& age, const Structure& a, std::size_t n, BetaSource& beta);

/// Invariant failures of a plan, recomputed from its structures; empty when sound.
std::vector<std::string> plan_violations(const AgeDescriptor& age, const WitnessPlan& plan);

enum class Verdict { verified, refuted, inconclusive };
const char* verdict_name(Verdict v) noexcept;

struct VerifyMode {
    bool exact = true;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;

    static VerifyMode exhaustive() { return {}; }
    static VerifyMode randomized(std::uint64_t trials, std::uint64_t seed) { return {false, trials, seed}; }
};

struct VerificationReport {
    Verdict verdict = Verdict::inconclusive;
    VerifyMode mode;
    std::optional<SetLabeling> refutation;
    std::uint64_t labelings = 0;
    /// Upper estimate of the reduced labeling space (exact mode).
    double space_estimate = 0;
    std::string note;
};

inline constexpr std::uint64_t default_exact_ceiling = 100000000;
/// DELTASYS_CEILING when set to a positive integer, else the default.
std::uint64_t exact_ceiling_from_env();

/// Upper bound on the first-appearance-normalized labelings of `size`
/// elements by n-sets.
double normalized_labeling_bound(std::size_t size, std::size_t n);

/// Throws Errc::exact_refused when the exact space exceeds `ceiling`.
VerificationReport verify_witness(const Structure& b, const Structure& a, std::size_t n, VerifyMode mode,
                                  std::uint64_t ceiling = exact_ceiling_from_env());

std::optional<SetLabeling> counterexample_search(const Structure& b, const Structure& a, std::size_t n,
                                                 std::uint64_t trials, std::uint64_t seed);

/// Element j (within-part position, universe order) of part i gets
/// {"p:0:<i>", "p:<i+1>:<j>"}.
SetLabeling partition_encoding(const Structure& m, const Coloring& parts);

/// Elements of e get {t0, id}, the rest {t1, id}; t0, t1 fresh.
SetLabeling split_encoding(const Structure& b, const std::vector<std::string>& e);

/// Element x of block i gets {i, x}; the base is the lexicographic sum of
/// the blocks. Blocks are strict linear orders ("<"/2).
SetLabeling scattered_block_encoding(const std::vector<std::pair<std::string, Structure>>& blocks);

} // namespace deltasys
