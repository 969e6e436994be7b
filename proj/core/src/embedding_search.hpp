#pragma once

// Backtracking engine shared by isomorphism, embedding, forbidden-copy and
// structured-sunflower searches. Pattern elements are mapped in universe
// order; host candidates are tried in increasing index order, so complete
// maps are produced in lexicographic order of their image sequences.

#include "deltasys/structure.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace deltasys::detail {

/// Bits of the unary quantifier-free type: holds(r, (v, ..., v)) per relation.
std::vector<bool> unary_profile(const Structure& s, Element v);

class EmbeddingSearch {
public:
    EmbeddingSearch(const Structure& pattern, const Structure& host, bool bijective = false);

    /// Host elements outside `allowed` are never used (allowed[v] != 0).
    void restrict_hosts(std::vector<char> allowed) { allowed_ = std::move(allowed); }

    /// extra(depth, candidate, images) may veto the extension of a
    /// consistent partial map; visit(images) receives complete maps and
    /// returns false to stop. Returns false iff stopped by the visitor.
    template <class Extra, class Visit>
    bool run(Extra&& extra, Visit&& visit) {
        if (pattern_size_ > host_size_) {
            return true;
        }
        if (bijective_ && pattern_size_ != host_size_) {
            return true;
        }
        images_.assign(pattern_size_, 0);
        used_.assign(host_size_, 0);
        return descend(0, extra, visit);
    }

    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    struct Check {
        std::uint32_t relation;
        std::uint32_t offset; // into positions_
        bool expected;
    };
    struct Anchor {
        std::uint32_t relation;
        std::uint32_t other;
        bool outgoing; // true: R(other, i) in pattern, candidates = out-neighbours of image(other)
    };

    bool consistent(std::size_t i, Element v) const;
    std::span<const Element> candidates(std::size_t i, std::vector<Element>& scratch) const;

    template <class Extra, class Visit>
    bool descend(std::size_t i, Extra& extra, Visit& visit) {
        if (i == pattern_size_) {
            return visit(std::span<const Element>(images_));
        }
        std::vector<Element> scratch;
        const auto cands = candidates(i, scratch);
        for (const Element v : cands) {
            if (used_[v] || (!allowed_.empty() && !allowed_[v])) {
                continue;
            }
            ++nodes_;
            if (!consistent(i, v)) {
                continue;
            }
            images_[i] = v;
            if (!extra(i, v, std::span<const Element>(images_.data(), i + 1))) {
                continue;
            }
            used_[v] = 1;
            const bool keep_going = descend(i + 1, extra, visit);
            used_[v] = 0;
            if (!keep_going) {
                return false;
            }
        }
        return true;
    }

    const Structure& pattern_;
    const Structure& host_;
    bool bijective_;
    std::size_t pattern_size_;
    std::size_t host_size_;

    std::vector<std::vector<Check>> checks_;
    std::vector<std::uint32_t> positions_;
    std::vector<std::vector<Anchor>> anchors_;
    // out_[r][v], in_[r][v] for binary relations r of the host.
    std::vector<std::vector<std::vector<Element>>> out_;
    std::vector<std::vector<std::vector<Element>>> in_;
    std::vector<Element> all_hosts_;
    std::vector<std::vector<bool>> pattern_unary_;
    std::vector<std::vector<bool>> host_unary_;
    std::vector<std::vector<std::uint32_t>> pattern_degrees_;
    std::vector<std::vector<std::uint32_t>> host_degrees_;

    std::vector<Element> images_;
    std::vector<char> used_;
    std::vector<char> allowed_;
    std::uint64_t nodes_ = 0;
};

} // namespace deltasys::detail
