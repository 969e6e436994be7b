#include "deltasys/ages.hpp"

#include "deltasys/catalog.hpp"
#include "deltasys/error.hpp"
#include "age_internal.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace deltasys {

// ----------------------------------------------------------- descriptors

AgeDescriptor AgeDescriptor::all(Signature signature) {
    AgeDescriptor d;
    d.signature = std::move(signature);
    d.base = AgeBase::all;
    d.tag = "all";
    return d;
}

AgeDescriptor AgeDescriptor::graphs() {
    AgeDescriptor d;
    d.signature = graph_signature();
    d.base = AgeBase::graphs;
    d.tag = "graphs";
    return d;
}

AgeDescriptor AgeDescriptor::linear_orders() {
    AgeDescriptor d;
    d.signature = order_signature();
    d.base = AgeBase::linear_orders;
    d.max_enumeration_size = 8;
    d.tag = "linear_orders";
    return d;
}

AgeDescriptor AgeDescriptor::hypergraphs(std::size_t k) {
    if (k == 0) {
        throw Error(Errc::invalid_argument, "hypergraph arity must be positive");
    }
    AgeDescriptor d;
    d.signature = hypergraph_signature(k);
    d.base = AgeBase::hypergraph;
    d.hyper_arity = k;
    d.max_enumeration_size = 5;
    d.tag = "hypergraph:" + std::to_string(k);
    return d;
}

AgeDescriptor AgeDescriptor::kn_free(std::size_t n) {
    if (n == 0) {
        throw Error(Errc::invalid_argument, "kn_free needs n >= 1");
    }
    AgeDescriptor d = graphs();
    d.forbidden.push_back(complete_graph(n));
    d.tag = "kn_free:" + std::to_string(n);
    return d;
}

namespace {

// Every l-subset of the universe lies inside some edge.
bool every_subset_covered(const Structure& h, std::size_t l) {
    const auto n = h.size();
    if (l > n) {
        return true;
    }
    std::vector<std::vector<Element>> edges;
    for (const auto& t : h.table(0).tuples()) {
        auto e = t;
        std::sort(e.begin(), e.end());
        edges.push_back(std::move(e));
    }
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(l), true);
    do {
        std::vector<Element> subset;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask[i]) {
                subset.push_back(static_cast<Element>(i));
            }
        }
        const bool covered = std::any_of(edges.begin(), edges.end(), [&](const std::vector<Element>& e) {
            return std::includes(e.begin(), e.end(), subset.begin(), subset.end());
        });
        if (!covered) {
            return false;
        }
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return true;
}

} // namespace

AgeDescriptor AgeDescriptor::hj(std::size_t k, std::size_t l, std::vector<Structure> j) {
    if (l < 1 || l > k) {
        throw Error(Errc::invalid_argument, "hj needs 1 <= l <= k");
    }
    AgeDescriptor d = hypergraphs(k);
    for (const auto& h : j) {
        if (!base_valid(d, h)) {
            throw Error(Errc::invalid_argument, "J members must be " + std::to_string(k) + "-uniform hypergraphs");
        }
        if (!every_subset_covered(h, l)) {
            throw Error(Errc::invalid_argument,
                        "J member is not in K^" + std::to_string(k) + "_" + std::to_string(l) +
                            ": some " + std::to_string(l) + "-subset lies in no edge");
        }
    }
    d.forbidden = std::move(j);
    d.tag = "hj:" + std::to_string(k) + "," + std::to_string(l);
    return d;
}

AgeDescriptor AgeDescriptor::forbidding(AgeDescriptor base, std::vector<Structure> forbidden) {
    for (const auto& f : forbidden) {
        if (f.signature() != base.signature) {
            throw Error(Errc::signature_mismatch, "signature mismatch");
        }
        base.forbidden.push_back(f);
    }
    base.tag.clear();
    return base;
}

AgeDescriptor AgeDescriptor::custom(Signature signature, std::function<bool(const Structure&)> predicate,
                                    bool hereditary) {
    AgeDescriptor d = all(std::move(signature));
    d.predicate = std::move(predicate);
    d.predicate_hereditary = hereditary;
    d.tag.clear();
    return d;
}

std::optional<std::size_t> AgeDescriptor::locality() const {
    if (predicate) {
        return std::nullopt;
    }
    std::size_t r = 0;
    switch (base) {
    case AgeBase::all: r = 0; break;
    case AgeBase::graphs: r = 2; break;
    case AgeBase::linear_orders: r = 3; break;
    case AgeBase::hypergraph: r = hyper_arity; break;
    }
    for (const auto& f : forbidden) {
        r = std::max(r, f.size());
    }
    return r;
}

// ------------------------------------------------------------- builtin tags

const std::vector<std::string>& builtin_age_tags() {
    static const std::vector<std::string> tags = {"graphs", "linear_orders", "hypergraph:<k>", "kn_free:<n>",
                                                  "hj:<k>,<l>,[J,...]"};
    return tags;
}

namespace {

[[noreturn]] void bad_tag(const std::string& tag) {
    std::string msg = "unknown builtin age tag '" + tag + "'; supported:";
    for (const auto& t : builtin_age_tags()) {
        msg += " " + t;
    }
    throw Error(Errc::schema_error, msg);
}

std::size_t parse_count(const std::string& text, const std::string& tag) {
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        bad_tag(tag);
    }
    return static_cast<std::size_t>(std::stoull(text));
}

Structure parse_j_member(const std::string& text, std::size_t k, const std::string& tag) {
    if (!text.empty() && text[0] == 'K') {
        return complete_hypergraph(k, parse_count(text.substr(1), tag));
    }
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        bad_tag(tag);
    }
    const std::size_t n = parse_count(text.substr(0, colon), tag);
    std::vector<std::vector<std::size_t>> edges;
    std::stringstream edges_text(text.substr(colon + 1));
    std::string edge;
    while (std::getline(edges_text, edge, '|')) {
        std::vector<std::size_t> vertices;
        std::stringstream vs(edge);
        std::string v;
        while (std::getline(vs, v, '.')) {
            vertices.push_back(parse_count(v, tag));
        }
        edges.push_back(std::move(vertices));
    }
    return make_hypergraph(k, n, edges);
}

} // namespace

AgeDescriptor parse_builtin_age(const std::string& tag) {
    if (tag == "graphs") {
        return AgeDescriptor::graphs();
    }
    if (tag == "linear_orders") {
        return AgeDescriptor::linear_orders();
    }
    if (tag.rfind("hypergraph:", 0) == 0) {
        return AgeDescriptor::hypergraphs(parse_count(tag.substr(11), tag));
    }
    if (tag.rfind("kn_free:", 0) == 0) {
        return AgeDescriptor::kn_free(parse_count(tag.substr(8), tag));
    }
    if (tag.rfind("hj:", 0) == 0) {
        const auto open = tag.find('[');
        if (open == std::string::npos || tag.back() != ']') {
            bad_tag(tag);
        }
        const auto head = tag.substr(3, open - 3);
        const auto comma = head.find(',');
        if (comma == std::string::npos || head.empty() || head.back() != ',') {
            bad_tag(tag);
        }
        const std::size_t k = parse_count(head.substr(0, comma), tag);
        const std::size_t l = parse_count(head.substr(comma + 1, head.size() - comma - 2), tag);
        std::vector<Structure> j;
        std::stringstream list(tag.substr(open + 1, tag.size() - open - 2));
        std::string item;
        while (std::getline(list, item, ',')) {
            if (!item.empty()) {
                j.push_back(parse_j_member(item, k, tag));
            }
        }
        auto d = AgeDescriptor::hj(k, l, std::move(j));
        d.tag = tag;
        return d;
    }
    bad_tag(tag);
}

// --------------------------------------------------------------- membership

bool base_valid(const AgeDescriptor& age, const Structure& s) {
    switch (age.base) {
    case AgeBase::all:
        return true;
    case AgeBase::graphs: {
        const auto& e = s.table(0);
        for (const auto code : e.codes()) {
            const auto t = e.decode(code);
            if (t[0] == t[1] || !e.contains(Tuple{t[1], t[0]})) {
                return false;
            }
        }
        return true;
    }
    case AgeBase::linear_orders: {
        const auto& lt = s.table(0);
        const auto n = s.size();
        if (lt.size() != n * (n - (n > 0 ? 1 : 0)) / 2) {
            return false;
        }
        for (Element u = 0; u < n; ++u) {
            if (lt.contains(Tuple{u, u})) {
                return false;
            }
            for (Element v = u + 1; v < n; ++v) {
                if (lt.contains(Tuple{u, v}) == lt.contains(Tuple{v, u})) {
                    return false;
                }
            }
        }
        // Total and asymmetric: transitive iff the "below" counts are 0..n-1.
        std::vector<std::size_t> below(n, 0);
        for (const auto code : lt.codes()) {
            ++below[lt.decode(code)[1]];
        }
        std::sort(below.begin(), below.end());
        for (std::size_t i = 0; i < n; ++i) {
            if (below[i] != i) {
                return false;
            }
        }
        return true;
    }
    case AgeBase::hypergraph: {
        const auto& r = s.table(0);
        for (const auto code : r.codes()) {
            auto t = r.decode(code);
            std::sort(t.begin(), t.end());
            if (std::adjacent_find(t.begin(), t.end()) != t.end()) {
                return false;
            }
            do {
                if (!r.contains(t)) {
                    return false;
                }
            } while (std::next_permutation(t.begin(), t.end()));
        }
        return true;
    }
    }
    return false;
}

bool contains(const AgeDescriptor& age, const Structure& s) {
    if (s.signature() != age.signature) {
        throw Error(Errc::signature_mismatch, "signature mismatch");
    }
    if (!base_valid(age, s)) {
        return false;
    }
    for (const auto& f : age.forbidden) {
        if (embeds(f, s)) {
            return false;
        }
    }
    return !age.predicate || age.predicate(s);
}

// -------------------------------------------------------------- enumeration

namespace detail {

std::vector<Structure> one_point_extensions(const AgeDescriptor& age, const Structure& s) {
    const auto n = static_cast<Element>(s.size());
    auto ids = s.universe();
    ids.push_back(std::to_string(n));
    std::vector<std::vector<Tuple>> base_tables;
    for (std::size_t r = 0; r < s.signature().size(); ++r) {
        base_tables.push_back(s.table(r).tuples());
    }
    std::vector<Structure> out;
    auto emit = [&](const std::vector<std::vector<Tuple>>& tables) {
        out.emplace_back(s.signature(), ids, tables);
    };

    switch (age.base) {
    case AgeBase::graphs: {
        if (n > 24) {
            throw Error(Errc::budget_exhausted, "extension space too large");
        }
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            auto tables = base_tables;
            for (Element v = 0; v < n; ++v) {
                if (mask >> v & 1U) {
                    tables[0].push_back({v, n});
                    tables[0].push_back({n, v});
                }
            }
            emit(tables);
        }
        break;
    }
    case AgeBase::linear_orders: {
        std::vector<std::size_t> rank(n, 0);
        for (const auto& t : base_tables[0]) {
            ++rank[t[1]];
        }
        for (std::size_t p = 0; p <= n; ++p) {
            auto tables = base_tables;
            for (Element v = 0; v < n; ++v) {
                if (rank[v] < p) {
                    tables[0].push_back({v, n});
                } else {
                    tables[0].push_back({n, v});
                }
            }
            emit(tables);
        }
        break;
    }
    case AgeBase::hypergraph: {
        const auto k = age.hyper_arity;
        std::vector<std::vector<Element>> subsets;
        if (k - 1 <= n) {
            std::vector<bool> mask(n, false);
            std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k - 1), true);
            do {
                std::vector<Element> sub;
                for (Element i = 0; i < n; ++i) {
                    if (mask[i]) {
                        sub.push_back(i);
                    }
                }
                subsets.push_back(std::move(sub));
            } while (std::prev_permutation(mask.begin(), mask.end()));
        }
        if (subsets.size() > 24) {
            throw Error(Errc::budget_exhausted, "extension space too large");
        }
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << subsets.size()); ++mask) {
            auto tables = base_tables;
            for (std::size_t i = 0; i < subsets.size(); ++i) {
                if (mask >> i & 1U) {
                    Tuple edge = subsets[i];
                    edge.push_back(n);
                    do {
                        tables[0].push_back(edge);
                    } while (std::next_permutation(edge.begin(), edge.end()));
                }
            }
            emit(tables);
        }
        break;
    }
    case AgeBase::all: {
        std::vector<std::pair<std::size_t, Tuple>> fresh;
        for (std::size_t r = 0; r < s.signature().size(); ++r) {
            const auto arity = s.signature()[r].arity;
            Tuple t(arity, 0);
            do {
                if (std::find(t.begin(), t.end(), n) != t.end()) {
                    fresh.emplace_back(r, t);
                }
            } while (next_tuple(t, n + 1));
        }
        if (fresh.size() > 24) {
            throw Error(Errc::budget_exhausted, "extension space too large");
        }
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << fresh.size()); ++mask) {
            auto tables = base_tables;
            for (std::size_t i = 0; i < fresh.size(); ++i) {
                if (mask >> i & 1U) {
                    tables[fresh[i].first].push_back(fresh[i].second);
                }
            }
            emit(tables);
        }
        break;
    }
    }
    return out;
}

std::vector<std::vector<Structure>> enumerate_levels(const AgeDescriptor& age, std::size_t m) {
    if (m > age.max_enumeration_size) {
        throw Error(Errc::budget_exhausted, "beyond enumeration budget");
    }
    const bool prune = age.hereditary();
    // Level s: canonical representatives of base-valid structures (members
    // only, for hereditary ages) keyed by canonical form.
    std::vector<std::map<std::string, Structure>> levels(m + 1);
    {
        Structure empty(age.signature);
        if (!prune || contains(age, empty)) {
            levels[0].emplace(canonical_form(empty), empty);
        }
    }
    for (std::size_t s = 0; s < m; ++s) {
        for (const auto& [form, rep] : levels[s]) {
            for (const auto& ext : one_point_extensions(age, rep)) {
                if (!base_valid(age, ext) || (prune && !contains(age, ext))) {
                    continue;
                }
                auto canon = canonical_labeling(ext);
                if (levels[s + 1].count(canon.form)) {
                    continue;
                }
                levels[s + 1].emplace(canon.form, relabel(ext, canon.order, numbered_ids(ext.size())));
            }
        }
    }
    std::vector<std::vector<Structure>> out(m + 1);
    for (std::size_t s = 0; s <= m; ++s) {
        for (const auto& [form, rep] : levels[s]) {
            if (prune || contains(age, rep)) {
                out[s].push_back(rep);
            }
        }
    }
    return out;
}

} // namespace detail

std::vector<Structure> enumerate_members(const AgeDescriptor& age, std::size_t m) {
    std::vector<Structure> out;
    for (auto& level : detail::enumerate_levels(age, m)) {
        for (auto& s : level) {
            out.push_back(std::move(s));
        }
    }
    return out;
}

std::vector<Structure> enumerate_members_of_size(const AgeDescriptor& age, std::size_t m) {
    return std::move(detail::enumerate_levels(age, m)[m]);
}

// --------------------------------------------------------------- HP, unary

PropertyCheck check_hp(const AgeDescriptor& age, std::size_t m) {
    PropertyCheck result;
    result.method = "exhaustive";
    auto members = enumerate_members(age, m);
    // Largest members and largest proper subsets first.
    std::stable_sort(members.begin(), members.end(),
                     [](const Structure& x, const Structure& y) { return x.size() > y.size(); });
    for (const auto& s : members) {
        const auto n = s.size();
        for (std::size_t t = n; t-- > 0;) {
            std::vector<bool> mask(n, false);
            std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(t), true);
            do {
                std::vector<Element> subset;
                for (Element i = 0; i < n; ++i) {
                    if (mask[i]) {
                        subset.push_back(i);
                    }
                }
                ++result.cases;
                auto sub = induced(s, subset);
                if (!contains(age, sub)) {
                    result.holds = false;
                    result.counterexample = {s, sub};
                    result.detail = "a size-" + std::to_string(t) + " substructure of a size-" + std::to_string(n) +
                                    " member is not a member";
                    return result;
                }
            } while (std::prev_permutation(mask.begin(), mask.end()));
        }
    }
    return result;
}

PropertyCheck check_unique_unary(const AgeDescriptor& age, std::size_t m) {
    PropertyCheck result;
    result.method = "exhaustive";
    std::optional<QfType> first;
    std::optional<Structure> first_owner;
    for (const auto& s : enumerate_members(age, m)) {
        for (Element e = 0; e < s.size(); ++e) {
            ++result.cases;
            const Tuple single{e};
            auto type = qf_type(s, single);
            if (!first) {
                first = type;
                first_owner = s;
                continue;
            }
            if (!(type == *first)) {
                result.holds = false;
                result.counterexample = {*first_owner, s};
                result.detail = "element " + s.id(e) + " of the second member has a different unary type";
                return result;
            }
        }
    }
    return result;
}

// ---------------------------------------------------------------------- JEP

PropertyCheck check_jep(const AgeDescriptor& age, std::size_t m) {
    PropertyCheck result;
    const auto members = enumerate_members(age, m);
    const bool glue = age.hereditary();
    result.method = glue ? "glueing" : "enumeration";
    std::vector<Structure> hosts;
    if (!glue) {
        hosts = enumerate_members(age, std::min(2 * m, age.max_enumeration_size));
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i; j < members.size(); ++j) {
            ++result.cases;
            const auto& a = members[i];
            const auto& b = members[j];
            bool joined = false;
            if (glue) {
                joined = detail::joint_embedding(age, a, b).has_value();
            } else {
                joined = std::any_of(hosts.begin(), hosts.end(), [&](const Structure& c) {
                    return c.size() <= a.size() + b.size() && embeds(a, c) && embeds(b, c);
                });
            }
            if (!joined) {
                result.holds = false;
                result.counterexample = {a, b};
                result.detail = "no member embeds both";
                return result;
            }
        }
    }
    return result;
}

} // namespace deltasys
