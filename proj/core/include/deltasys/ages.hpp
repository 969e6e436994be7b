#pragma once

// Intensional ages: membership, enumeration up to isomorphism, the age
// properties HP / JEP / DAP(3) / unique unary types, amalgamation
// constructions and indivisibility witnesses.
//
// Color counts are used throughout: a witness "of order n" in the usual
// terminology is a witness for n+1 colors here.

#include "deltasys/structure.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace deltasys {

enum class AgeBase {
    all,           // every structure in the signature
    graphs,        // E/2 symmetric and irreflexive
    linear_orders, // "<"/2 strict total order
    hypergraph,    // R/k, all orderings of each edge stored, entries distinct
};

struct AgeDescriptor {
    Signature signature;
    AgeBase base = AgeBase::all;
    std::size_t hyper_arity = 0;
    /// No induced substructure may be isomorphic to one of these.
    std::vector<Structure> forbidden;
    std::function<bool(const Structure&)> predicate;
    bool predicate_hereditary = true;
    std::size_t max_enumeration_size = 6;
    /// Builtin tag when the descriptor came from one ("graphs", "kn_free:3", ...).
    std::string tag;

    static AgeDescriptor all(Signature signature);
    static AgeDescriptor graphs();
    static AgeDescriptor linear_orders();
    static AgeDescriptor hypergraphs(std::size_t k);
    static AgeDescriptor kn_free(std::size_t n);
    /// k-uniform hypergraphs realizing no member of J; each J member must have
    /// every l-subset inside an edge.
    static AgeDescriptor hj(std::size_t k, std::size_t l, std::vector<Structure> j);
    static AgeDescriptor forbidding(AgeDescriptor base, std::vector<Structure> forbidden);
    static AgeDescriptor custom(Signature signature, std::function<bool(const Structure&)> predicate,
                                bool hereditary);

    bool hereditary() const noexcept { return !predicate || predicate_hereditary; }
    /// Membership is decided by the substructures of at most this size, if known.
    std::optional<std::size_t> locality() const;
};

/// Builtin tags: graphs, linear_orders, hypergraph:<k>, kn_free:<n>,
/// hj:<k>,<l>,[J,...] with J written K<t> or <t>:i.j.k|i.j.l|...
AgeDescriptor parse_builtin_age(const std::string& tag);
const std::vector<std::string>& builtin_age_tags();

bool base_valid(const AgeDescriptor& age, const Structure& s);
bool contains(const AgeDescriptor& age, const Structure& s);

/// One canonical representative (ids "0".."n-1") per isomorphism class of
/// members of size <= m, ordered by size then canonical form.
std::vector<Structure> enumerate_members(const AgeDescriptor& age, std::size_t m);
/// Members of size exactly m.
std::vector<Structure> enumerate_members_of_size(const AgeDescriptor& age, std::size_t m);

struct PropertyCheck {
    bool holds = true;
    /// HP: (member, subset); JEP: (A, B); DAP(3): (A0, A1, A2); unary: (A, B).
    std::vector<Structure> counterexample;
    std::string detail;
    std::string method;
    std::uint64_t cases = 0;
};

PropertyCheck check_hp(const AgeDescriptor& age, std::size_t m);
PropertyCheck check_jep(const AgeDescriptor& age, std::size_t m);

enum class DapStrategy {
    /// Exact shortcut through locality when free amalgams suffice, else exhaustive.
    automatic,
    exhaustive,
};
PropertyCheck check_dap3(const AgeDescriptor& age, std::size_t m, DapStrategy strategy = DapStrategy::automatic);
PropertyCheck check_unique_unary(const AgeDescriptor& age, std::size_t m);

/// Outcome of the completion search shared by the amalgamation routines.
enum class CompletionStatus { completed, disagreement, no_completion };

struct Completion {
    CompletionStatus status = CompletionStatus::no_completion;
    std::optional<Structure> structure;
    std::uint64_t candidates = 0;
};

inline constexpr std::uint64_t default_completion_budget = std::uint64_t{1} << 20;

/// A member on `universe` restricting to every piece. Tuples inside some
/// piece are fixed by it; the rest are chosen, free completion first, then
/// by increasing number of added tuple orbits. Throws Errc::budget_exhausted.
Completion complete(const AgeDescriptor& age, const std::vector<std::string>& universe,
                    const std::vector<const Structure*>& pieces,
                    std::uint64_t budget = default_completion_budget);

/// Member on A ∪ B restricting to both. Throws Errc::no_amalgam ("NoAmalgam").
Structure disjoint_amalgam(const AgeDescriptor& age, const Structure& a, const Structure& b);

/// Member C containing a and b with qf_type(C, (a_0..a_{n-1}, b')) equal to
/// qf_type(C, (a_0..a_n)) for each b' in b. `order` enumerates a.
/// Throws Errc::extension_failed ("ExtensionFailed").
Structure extend_duplicating_type(const AgeDescriptor& age, const Structure& a, const std::vector<std::string>& order,
                                  const Structure& b);

struct Coloring {
    Structure base;
    std::vector<std::size_t> parts; // parts[e] = color of element e
    std::size_t colors = 0;
};

struct IndivisibilityVerdict {
    bool holds = false;
    std::optional<Coloring> bad_coloring;
    std::uint64_t nodes = 0;
};

/// Every coloring of b with `colors` colors has a monochromatic induced copy
/// of a. The reported bad coloring is the first in lexicographic order of
/// restricted-growth color sequences.
IndivisibilityVerdict verify_indivisibility_witness(const AgeDescriptor& age, const Structure& b, const Structure& a,
                                                    std::size_t colors);

struct IndivisibilityWitness {
    Structure structure;
    std::size_t size = 0;
};

/// Smallest member of size <= max_size (then least canonical form) that is a
/// witness for `colors` colors; nullopt means nothing found within budget.
std::optional<IndivisibilityWitness> find_indivisibility_witness(const AgeDescriptor& age, const Structure& a,
                                                                 std::size_t colors, std::size_t max_size);

/// [B_2, ..., B_colors]: B_2 a 2-color witness for a, each next one a
/// 2-color witness for the previous. Throws Errc::budget_exhausted naming the link.
struct BootstrapResult {
    std::vector<Structure> chain;
    bool final_verified = false;
};
BootstrapResult bootstrap_order_n(const AgeDescriptor& age, const Structure& a, std::size_t colors,
                                  std::size_t max_size);

enum class Provenance { searched, supplied };

/// Partial table (structure size, colors) -> witness size, or unknown when a
/// search ran out of budget. Unknown is never read as "no witness exists".
class IndivisibilityBound {
public:
    struct Entry {
        std::optional<std::size_t> value;
        Provenance provenance = Provenance::searched;
    };

    void record(std::size_t size, std::size_t colors, Entry entry);
    std::optional<Entry> lookup(std::size_t size, std::size_t colors) const;
    const std::map<std::pair<std::size_t, std::size_t>, Entry>& entries() const noexcept { return table_; }
    /// Known values are non-decreasing in size for each color count.
    bool monotone_in_size() const;

private:
    std::map<std::pair<std::size_t, std::size_t>, Entry> table_;
};

/// Witnesses on demand: supplied ones (verified when added) take precedence
/// over searched ones. Every answer is recorded in bound().
class BetaSource {
public:
    BetaSource(AgeDescriptor age, std::size_t max_size);

    void supply(const Structure& a, std::size_t colors, const Structure& witness);
    std::optional<Structure> witness(const Structure& a, std::size_t colors);
    const IndivisibilityBound& bound() const noexcept { return bound_; }
    const AgeDescriptor& age() const noexcept { return age_; }

private:
    AgeDescriptor age_;
    std::size_t max_size_;
    std::map<std::pair<std::string, std::size_t>, std::optional<Structure>> cache_;
    std::map<std::pair<std::string, std::size_t>, Structure> supplied_;
    IndivisibilityBound bound_;
};

} // namespace deltasys
