#include "deltasys/linorders.hpp"

#include "deltasys/catalog.hpp"
#include "deltasys/error.hpp"

#include <cctype>
#include <cmath>
#include <map>

namespace deltasys {

// ---------------------------------------------------------------- terms

OrderTerm OrderTerm::fin(std::size_t k) {
    OrderTerm t;
    t.kind_ = Kind::fin;
    t.count_ = k;
    return t;
}

OrderTerm OrderTerm::omega() {
    OrderTerm t;
    t.kind_ = Kind::omega;
    return t;
}

OrderTerm OrderTerm::omega_star() {
    OrderTerm t;
    t.kind_ = Kind::omega_star;
    return t;
}

OrderTerm OrderTerm::eta() {
    OrderTerm t;
    t.kind_ = Kind::eta;
    return t;
}

OrderTerm OrderTerm::concat(std::vector<OrderTerm> parts) {
    if (parts.empty()) {
        throw Error(Errc::invalid_argument, "concatenation needs at least one part");
    }
    OrderTerm t;
    t.kind_ = Kind::concat;
    for (auto& p : parts) {
        if (p.kind_ == Kind::concat) {
            for (auto& c : p.children_) {
                t.children_.push_back(std::move(c));
            }
        } else {
            t.children_.push_back(std::move(p));
        }
    }
    if (t.children_.size() == 1) {
        return std::move(t.children_.front());
    }
    return t;
}

OrderTerm OrderTerm::rep(Kind index, OrderTerm body) {
    if (index != Kind::omega && index != Kind::omega_star && index != Kind::eta) {
        throw Error(Errc::invalid_argument, "repetition index must be w, w* or eta");
    }
    OrderTerm t;
    t.kind_ = Kind::rep;
    t.index_ = index;
    t.children_.push_back(std::move(body));
    return t;
}

std::size_t OrderTerm::node_count() const {
    std::size_t n = 1;
    for (const auto& c : children_) {
        n += c.node_count();
    }
    return n;
}

// ---------------------------------------------------------------- parsing

namespace {

class TermParser {
public:
    explicit TermParser(std::string_view text) : text_(text) {}

    OrderTerm parse() {
        auto t = term();
        skip();
        if (pos_ != text_.size()) {
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return t;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(Errc::parse_error, "syntax error at position " + std::to_string(pos_) + ": " + what);
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }

    bool keyword(std::string_view word) {
        skip();
        if (text_.substr(pos_, word.size()) != word) {
            return false;
        }
        const auto end = pos_ + word.size();
        if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) {
            return false;
        }
        pos_ = end;
        return true;
    }

    OrderTerm term() {
        std::vector<OrderTerm> parts;
        parts.push_back(atom());
        while (accept('+')) {
            parts.push_back(atom());
        }
        return OrderTerm::concat(std::move(parts));
    }

    // w, w* or eta as a repetition index.
    std::optional<OrderTerm::Kind> index() {
        if (keyword("eta")) {
            return OrderTerm::Kind::eta;
        }
        if (keyword("w")) {
            return accept('*') ? OrderTerm::Kind::omega_star : OrderTerm::Kind::omega;
        }
        return std::nullopt;
    }

    OrderTerm atom() {
        skip();
        if (pos_ >= text_.size()) {
            fail("unexpected end of input");
        }
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t v = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                v = v * 10 + static_cast<std::size_t>(text_[pos_] - '0');
                ++pos_;
            }
            return OrderTerm::fin(v);
        }
        if (accept('(')) {
            auto t = term();
            expect(')');
            return t;
        }
        if (keyword("sum")) {
            expect('(');
            skip();
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                fail("repetition over a finite index; write a concatenation instead");
            }
            const auto idx = index();
            if (!idx) {
                fail("expected w, w* or eta as the index");
            }
            expect(',');
            auto body = term();
            expect(')');
            return OrderTerm::rep(*idx, std::move(body));
        }
        if (keyword("eta")) {
            return OrderTerm::eta();
        }
        if (keyword("w")) {
            return accept('*') ? OrderTerm::omega_star() : OrderTerm::omega();
        }
        fail("expected a term");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

const char* index_name(OrderTerm::Kind k) {
    switch (k) {
    case OrderTerm::Kind::omega: return "w";
    case OrderTerm::Kind::omega_star: return "w*";
    default: return "eta";
    }
}

} // namespace

OrderTerm parse_term(std::string_view text) { return TermParser(text).parse(); }

std::string to_string(const OrderTerm& t) {
    using K = OrderTerm::Kind;
    switch (t.kind()) {
    case K::fin: return std::to_string(t.count());
    case K::omega: return "w";
    case K::omega_star: return "w*";
    case K::eta: return "eta";
    case K::rep: return std::string("sum(") + index_name(t.index()) + ", " + to_string(t.body()) + ")";
    case K::concat: {
        std::string out;
        for (const auto& c : t.children()) {
            if (!out.empty()) {
                out += " + ";
            }
            out += to_string(c);
        }
        return out;
    }
    }
    return {};
}

// ---------------------------------------------------------------- attributes

OrderAttrs concat_attrs(const std::vector<OrderAttrs>& parts) {
    OrderAttrs a;
    std::vector<OrderAttrs> kids;
    for (const auto& k : parts) {
        if (!k.is_empty) {
            kids.push_back(k);
        }
    }
    if (kids.empty()) {
        a.is_empty = true;
        a.finite_size = 0;
        return a;
    }
    std::size_t total = 0;
    bool finite = true;
    for (const auto& k : kids) {
        a.embeds_omega |= k.embeds_omega;
        a.embeds_omega_star |= k.embeds_omega_star;
        a.embeds_eta |= k.embeds_eta;
        finite = finite && k.finite_size.has_value();
        total += k.finite_size.value_or(0);
    }
    if (finite) {
        a.finite_size = total;
    }
    bool head_finite = true;
    for (std::size_t i = 0; i + 1 < kids.size(); ++i) {
        head_finite = head_finite && kids[i].finite_size.has_value();
    }
    a.is_omega = head_finite && kids.back().is_omega;
    bool tail_finite = true;
    for (std::size_t i = 1; i < kids.size(); ++i) {
        tail_finite = tail_finite && kids[i].finite_size.has_value();
    }
    a.is_omega_star = tail_finite && kids.front().is_omega_star;
    return a;
}

OrderAttrs attrs(const OrderTerm& t) {
    using K = OrderTerm::Kind;
    OrderAttrs a;
    switch (t.kind()) {
    case K::fin:
        a.is_empty = t.count() == 0;
        a.finite_size = t.count();
        break;
    case K::omega:
        a.is_omega = a.embeds_omega = true;
        break;
    case K::omega_star:
        a.is_omega_star = a.embeds_omega_star = true;
        break;
    case K::eta:
        a.embeds_eta = a.embeds_omega = a.embeds_omega_star = true;
        break;
    case K::concat: {
        std::vector<OrderAttrs> kids;
        for (const auto& c : t.children()) {
            kids.push_back(attrs(c));
        }
        a = concat_attrs(kids);
        break;
    }
    case K::rep: {
        const auto b = attrs(t.body());
        if (b.is_empty) {
            a.is_empty = true;
            a.finite_size = 0;
            break;
        }
        switch (t.index()) {
        case K::omega:
            a.is_omega = b.finite_size.has_value();
            a.embeds_omega = true;
            a.embeds_omega_star = b.embeds_omega_star;
            a.embeds_eta = b.embeds_eta;
            break;
        case K::omega_star:
            a.is_omega_star = b.finite_size.has_value();
            a.embeds_omega_star = true;
            a.embeds_omega = b.embeds_omega;
            a.embeds_eta = b.embeds_eta;
            break;
        default:
            a.embeds_eta = a.embeds_omega = a.embeds_omega_star = true;
            break;
        }
        break;
    }
    }
    return a;
}

// ---------------------------------------------------------------- rank

namespace {

// Membership facts of a term at one level alpha of the hierarchy:
// in    - the order lies in L_alpha
// fin   - a finite sum of members of L_alpha
// up    - an omega-indexed sum of members of L_alpha
// down  - an omega*-indexed sum of members of L_alpha
struct Level {
    bool in = false;
    bool fin = false;
    bool up = false;
    bool down = false;
};

class RankEvaluator {
public:
    Level at(const OrderTerm& t, std::size_t alpha) {
        const auto key = std::make_pair(&t, alpha);
        if (const auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }
        Level l = compute(t, alpha);
        memo_.emplace(key, l);
        return l;
    }

private:
    bool in(const OrderTerm& t, std::size_t alpha) {
        if (alpha == 0) {
            return attrs(t).finite_size.has_value();
        }
        const auto below = at(t, alpha - 1);
        return below.in || below.fin || below.up || below.down;
    }

    Level compute(const OrderTerm& t, std::size_t alpha) {
        using K = OrderTerm::Kind;
        Level l;
        l.in = in(t, alpha);
        const auto a = attrs(t);
        if (a.embeds_eta) {
            return {};
        }
        if (a.finite_size) {
            return {true, true, true, true};
        }
        switch (t.kind()) {
        case K::omega:
            l.fin = alpha >= 1;
            l.up = true;
            l.down = alpha >= 1;
            break;
        case K::omega_star:
            l.fin = alpha >= 1;
            l.up = alpha >= 1;
            l.down = true;
            break;
        case K::rep: {
            // A tail (head) of an omega (omega*) repetition is the whole order again.
            const bool block = at(t.body(), alpha).fin;
            l.fin = l.in;
            l.up = t.index() == K::omega ? block : l.in;
            l.down = t.index() == K::omega_star ? block : l.in;
            break;
        }
        case K::concat: {
            std::vector<const OrderTerm*> kids;
            for (const auto& c : t.children()) {
                if (!attrs(c).is_empty) {
                    kids.push_back(&c);
                }
            }
            std::vector<Level> ls;
            for (const auto* c : kids) {
                ls.push_back(at(*c, alpha));
            }
            l.fin = true;
            for (const auto& c : ls) {
                l.fin = l.fin && c.fin;
            }
            bool head = true;
            for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
                head = head && ls[i].fin;
            }
            bool tail = true;
            for (std::size_t i = 1; i < ls.size(); ++i) {
                tail = tail && ls[i].fin;
            }
            l.up = head && ls.back().up;
            l.down = tail && ls.front().down;
            break;
        }
        default:
            break;
        }
        return l;
    }

    std::map<std::pair<const OrderTerm*, std::size_t>, Level> memo_;
};

} // namespace

std::optional<std::size_t> scattered_rank(const OrderTerm& t) {
    if (attrs(t).embeds_eta) {
        return std::nullopt;
    }
    RankEvaluator eval;
    const std::size_t cap = 2 * t.node_count() + 2;
    for (std::size_t alpha = 0; alpha <= cap; ++alpha) {
        if (eval.at(t, alpha).in) {
            return alpha;
        }
    }
    throw Error(Errc::invalid_argument, "rank exceeds the bound for this term");
}

const char* reason_name(SunflowerReason r) noexcept {
    switch (r) {
    case SunflowerReason::is_omega: return "is_omega";
    case SunflowerReason::is_omega_star: return "is_omega_star";
    case SunflowerReason::embeds_eta: return "embeds_eta";
    }
    return "unknown";
}

Classification classify_sunflowerable(const OrderTerm& t) {
    const auto a = attrs(t);
    if (a.finite_size) {
        throw Error(Errc::invalid_argument, "theorem applies to infinite orders");
    }
    Classification c;
    if (a.is_omega) {
        c.reason = SunflowerReason::is_omega;
    } else if (a.is_omega_star) {
        c.reason = SunflowerReason::is_omega_star;
    } else if (a.embeds_eta) {
        c.reason = SunflowerReason::embeds_eta;
    }
    c.sunflowerable = c.reason.has_value();
    return c;
}

OrderTerm dual(const OrderTerm& t) {
    using K = OrderTerm::Kind;
    switch (t.kind()) {
    case K::omega: return OrderTerm::omega_star();
    case K::omega_star: return OrderTerm::omega();
    case K::rep: {
        const auto idx = t.index() == K::omega ? K::omega_star : t.index() == K::omega_star ? K::omega : K::eta;
        return OrderTerm::rep(idx, dual(t.body()));
    }
    case K::concat: {
        std::vector<OrderTerm> parts;
        for (auto it = t.children().rbegin(); it != t.children().rend(); ++it) {
            parts.push_back(dual(*it));
        }
        return OrderTerm::concat(std::move(parts));
    }
    default: return t;
    }
}

OrderAttrs dual(const OrderAttrs& a) {
    OrderAttrs d = a;
    std::swap(d.embeds_omega, d.embeds_omega_star);
    std::swap(d.is_omega, d.is_omega_star);
    return d;
}

// ---------------------------------------------------------------- realization

namespace {

std::vector<std::size_t> even_split(std::size_t total, std::size_t parts) {
    std::vector<std::size_t> out(parts, parts ? total / parts : 0);
    for (std::size_t i = 0; i < (parts ? total % parts : 0); ++i) {
        ++out[i];
    }
    return out;
}

// Sizes of the top-level pieces, empty pieces dropped.
std::vector<std::size_t> allocate(const OrderTerm& t, std::size_t n) {
    using K = OrderTerm::Kind;
    std::vector<std::size_t> pieces;
    const auto a = attrs(t);
    switch (t.kind()) {
    case K::fin:
        pieces.push_back(std::min(t.count(), n));
        break;
    case K::omega:
    case K::omega_star:
    case K::eta:
        pieces.push_back(n);
        break;
    case K::concat: {
        const auto& kids = t.children();
        pieces.assign(kids.size(), 0);
        std::size_t rem = n;
        std::vector<std::size_t> infinite;
        for (std::size_t i = 0; i < kids.size(); ++i) {
            const auto size = attrs(kids[i]).finite_size;
            if (size) {
                pieces[i] = std::min(*size, rem);
                rem -= pieces[i];
            } else {
                infinite.push_back(i);
            }
        }
        const auto shares = even_split(rem, infinite.size());
        for (std::size_t j = 0; j < infinite.size(); ++j) {
            pieces[infinite[j]] = shares[j];
        }
        break;
    }
    case K::rep: {
        if (a.is_empty) {
            break;
        }
        const auto body = attrs(t.body()).finite_size;
        if (body) {
            for (std::size_t rem = n; rem > 0;) {
                pieces.push_back(std::min(*body, rem));
                rem -= pieces.back();
            }
            if (t.index() == K::omega_star) {
                std::reverse(pieces.begin(), pieces.end());
            }
        } else {
            const auto copies = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
            pieces = even_split(n, copies);
        }
        break;
    }
    }
    std::erase(pieces, std::size_t{0});
    return pieces;
}

} // namespace

Realization prefix_realize(const OrderTerm& t, std::size_t n) {
    Realization r;
    const auto pieces = allocate(t, n);
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        r.block.insert(r.block.end(), pieces[i], i);
    }
    StructureBuilder builder(order_signature());
    for (std::size_t i = 0; i < r.block.size(); ++i) {
        builder.add_element("x" + std::to_string(i));
    }
    for (Element i = 0; i < r.block.size(); ++i) {
        for (Element j = i + 1; j < r.block.size(); ++j) {
            builder.add_tuple(0, {i, j});
        }
    }
    r.order = builder.build();
    return r;
}

std::vector<std::pair<std::string, Structure>> realization_blocks(const Realization& r) {
    std::vector<std::pair<std::string, Structure>> blocks;
    for (std::size_t i = 0; i < r.block.size(); ++i) {
        if (blocks.size() <= r.block[i]) {
            blocks.emplace_back("b" + std::to_string(r.block[i]), Structure{});
        }
    }
    std::vector<std::vector<std::string>> members(blocks.size());
    for (std::size_t i = 0; i < r.block.size(); ++i) {
        members[r.block[i]].push_back(r.order.id(static_cast<Element>(i)));
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        blocks[b].second = restrict(r.order, members[b]);
    }
    return blocks;
}

} // namespace deltasys
