#pragma once

// Terms for countable linear order types: finite orders, omega, its reverse,
// the rationals, finite concatenation and repetition over an infinite index.

#include "deltasys/structure.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace deltasys {

class OrderTerm {
public:
    enum class Kind { fin, omega, omega_star, eta, concat, rep };

    static OrderTerm fin(std::size_t k);
    static OrderTerm omega();
    static OrderTerm omega_star();
    static OrderTerm eta();
    /// Nested concatenations are flattened; a single part is returned as is.
    static OrderTerm concat(std::vector<OrderTerm> parts);
    /// index must be omega, omega_star or eta.
    static OrderTerm rep(Kind index, OrderTerm body);

    Kind kind() const noexcept { return kind_; }
    std::size_t count() const noexcept { return count_; } // Fin
    Kind index() const noexcept { return index_; }         // Rep
    const std::vector<OrderTerm>& children() const noexcept { return children_; }
    const OrderTerm& body() const { return children_.at(0); }

    std::size_t node_count() const;

    friend bool operator==(const OrderTerm&, const OrderTerm&) = default;

private:
    Kind kind_ = Kind::fin;
    std::size_t count_ = 0;
    Kind index_ = Kind::omega;
    std::vector<OrderTerm> children_;
};

/// term := atom ('+' atom)* ;
/// atom := NAT | 'w' | 'w*' | 'eta' | 'sum' '(' ('w'|'w*'|'eta') ',' term ')' | '(' term ')'
/// Throws Errc::parse_error with the offending position.
OrderTerm parse_term(std::string_view text);
std::string to_string(const OrderTerm& t);

struct OrderAttrs {
    bool is_empty = false;
    std::optional<std::size_t> finite_size;
    bool embeds_omega = false;
    bool embeds_omega_star = false;
    bool embeds_eta = false;
    bool is_omega = false;
    bool is_omega_star = false;

    friend bool operator==(const OrderAttrs&, const OrderAttrs&) = default;
};

OrderAttrs attrs(const OrderTerm& t);
/// Attributes of a concatenation from those of its parts.
OrderAttrs concat_attrs(const std::vector<OrderAttrs>& parts);

/// Least alpha with the order in L_alpha (omega case); nullopt when not scattered.
std::optional<std::size_t> scattered_rank(const OrderTerm& t);

enum class SunflowerReason { is_omega, is_omega_star, embeds_eta };

struct Classification {
    bool sunflowerable = false;
    std::optional<SunflowerReason> reason;
};

const char* reason_name(SunflowerReason r) noexcept;

/// Throws Errc::invalid_argument for finite terms.
Classification classify_sunflowerable(const OrderTerm& t);

/// The order reversed: omega and its reverse swap, concatenations reverse.
OrderTerm dual(const OrderTerm& t);
OrderAttrs dual(const OrderAttrs& a);

struct Realization {
    /// Chain x0 < x1 < ... of min(N, |t|) elements.
    Structure order;
    /// Top-level summand each element was drawn from.
    std::vector<std::size_t> block;
};

/// Deterministic finite suborder. Concatenations give finite parts their
/// elements first and split the rest evenly over infinite parts; repetitions
/// over an infinite body use the first ceil(sqrt(N)) copies.
Realization prefix_realize(const OrderTerm& t, std::size_t n);

/// The realization cut at its block boundaries: blocks "b<i>" holding their chains.
std::vector<std::pair<std::string, Structure>> realization_blocks(const Realization& r);

} // namespace deltasys
