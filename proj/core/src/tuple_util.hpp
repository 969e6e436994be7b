#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace deltasys::detail {

/// Odometer over [0, base)^n in lexicographic order; false after the last tuple.
template <class T>
bool next_tuple(std::vector<T>& pos, std::size_t base) {
    for (std::size_t k = pos.size(); k-- > 0;) {
        if (static_cast<std::size_t>(++pos[k]) < base) {
            return true;
        }
        pos[k] = 0;
    }
    return false;
}

/// All position tuples over [0, k]^arity that mention k.
inline std::vector<std::vector<std::uint32_t>> tuples_mentioning(std::size_t k, std::size_t arity) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> pos(arity, 0);
    do {
        for (const auto p : pos) {
            if (p == k) {
                out.push_back(pos);
                break;
            }
        }
    } while (next_tuple(pos, k + 1));
    return out;
}

} // namespace deltasys::detail
