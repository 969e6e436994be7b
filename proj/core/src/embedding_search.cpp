#include "embedding_search.hpp"

#include "tuple_util.hpp"

#include <algorithm>

namespace deltasys::detail {

namespace {

std::vector<std::uint32_t> degree_profile(const Structure& s, Element v) {
    std::vector<std::uint32_t> profile;
    for (std::size_t r = 0; r < s.signature().size(); ++r) {
        const auto& table = s.table(r);
        std::vector<std::uint32_t> counts(table.arity(), 0);
        for (const auto code : table.codes()) {
            const Tuple t = table.decode(code);
            for (std::size_t p = 0; p < t.size(); ++p) {
                if (t[p] == v) {
                    ++counts[p];
                }
            }
        }
        profile.insert(profile.end(), counts.begin(), counts.end());
    }
    return profile;
}

} // namespace

std::vector<bool> unary_profile(const Structure& s, Element v) {
    std::vector<bool> bits;
    bits.reserve(s.signature().size());
    for (std::size_t r = 0; r < s.signature().size(); ++r) {
        const Tuple diagonal(s.signature()[r].arity, v);
        bits.push_back(s.holds(r, diagonal));
    }
    return bits;
}

EmbeddingSearch::EmbeddingSearch(const Structure& pattern, const Structure& host, bool bijective)
    : pattern_(pattern),
      host_(host),
      bijective_(bijective),
      pattern_size_(pattern.size()),
      host_size_(host.size()) {
    const auto& sig = pattern.signature();
    checks_.resize(pattern_size_);
    anchors_.resize(pattern_size_);

    // For element i: every position tuple over [i+1]^arity that mentions i.
    for (std::size_t i = 0; i < pattern_size_; ++i) {
        for (std::size_t r = 0; r < sig.size(); ++r) {
            const std::size_t arity = sig[r].arity;
            Tuple elems(arity, 0);
            for (const auto& pos : tuples_mentioning(i, arity)) {
                for (std::size_t k = 0; k < arity; ++k) {
                    elems[k] = pos[k];
                }
                Check c;
                c.relation = static_cast<std::uint32_t>(r);
                c.offset = static_cast<std::uint32_t>(positions_.size());
                c.expected = pattern.holds(r, elems);
                positions_.insert(positions_.end(), pos.begin(), pos.end());
                checks_[i].push_back(c);
                if (arity == 2 && c.expected && pos[0] != pos[1]) {
                    if (pos[1] == i) {
                        anchors_[i].push_back({static_cast<std::uint32_t>(r), pos[0], true});
                    } else {
                        anchors_[i].push_back({static_cast<std::uint32_t>(r), pos[1], false});
                    }
                }
            }
        }
    }

    out_.resize(sig.size());
    in_.resize(sig.size());
    for (std::size_t r = 0; r < sig.size(); ++r) {
        if (sig[r].arity != 2) {
            continue;
        }
        out_[r].resize(host_size_);
        in_[r].resize(host_size_);
        for (const auto code : host.table(r).codes()) {
            const Tuple t = host.table(r).decode(code);
            out_[r][t[0]].push_back(t[1]);
            in_[r][t[1]].push_back(t[0]);
        }
        // Codes are lexicographic, so out-lists are sorted; in-lists need it.
        for (auto& list : in_[r]) {
            std::sort(list.begin(), list.end());
        }
    }
    all_hosts_.resize(host_size_);
    for (std::size_t v = 0; v < host_size_; ++v) {
        all_hosts_[v] = static_cast<Element>(v);
    }
    for (std::size_t i = 0; i < pattern_size_; ++i) {
        pattern_unary_.push_back(unary_profile(pattern, static_cast<Element>(i)));
    }
    for (std::size_t v = 0; v < host_size_; ++v) {
        host_unary_.push_back(unary_profile(host, static_cast<Element>(v)));
    }
    if (bijective_) {
        for (std::size_t i = 0; i < pattern_size_; ++i) {
            pattern_degrees_.push_back(degree_profile(pattern, static_cast<Element>(i)));
        }
        for (std::size_t v = 0; v < host_size_; ++v) {
            host_degrees_.push_back(degree_profile(host, static_cast<Element>(v)));
        }
    }
}

std::span<const Element> EmbeddingSearch::candidates(std::size_t i, std::vector<Element>& scratch) const {
    (void)scratch;
    const std::vector<Element>* best = &all_hosts_;
    for (const auto& anchor : anchors_[i]) {
        const Element image = images_[anchor.other];
        const auto& list = anchor.outgoing ? out_[anchor.relation][image] : in_[anchor.relation][image];
        if (list.size() < best->size()) {
            best = &list;
        }
    }
    return std::span<const Element>(*best);
}

bool EmbeddingSearch::consistent(std::size_t i, Element v) const {
    if (pattern_unary_[i] != host_unary_[v]) {
        return false;
    }
    if (bijective_ && pattern_degrees_[i] != host_degrees_[v]) {
        return false;
    }
    Tuple mapped;
    for (const auto& c : checks_[i]) {
        const std::size_t arity = pattern_.signature()[c.relation].arity;
        mapped.resize(arity);
        for (std::size_t k = 0; k < arity; ++k) {
            const auto p = positions_[c.offset + k];
            mapped[k] = p == i ? v : images_[p];
        }
        if (host_.holds(c.relation, mapped) != c.expected) {
            return false;
        }
    }
    return true;
}

} // namespace deltasys::detail
