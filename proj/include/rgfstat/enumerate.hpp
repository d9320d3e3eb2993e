#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "ints.hpp"
#include "word.hpp"

namespace rgfstat {

namespace detail {

template <typename Fn>
void extend_rgf(Letters& buf, std::size_t pos, std::uint8_t running_max,
                std::optional<int> k, Fn&& fn) {
    const std::size_t n = buf.size();
    if (pos == n) {
        if (!k || running_max == *k) fn(const_cast<const Letters&>(buf));
        return;
    }
    std::uint8_t hi = static_cast<std::uint8_t>(running_max + 1);
    if (k) {
        // prune prefixes that can no longer reach max letter k, and never
        // grow past k
        if (static_cast<int>(running_max) + static_cast<int>(n - pos) < *k) return;
        if (hi > *k) hi = static_cast<std::uint8_t>(*k);
    }
    for (std::uint8_t v = 1; v <= hi; ++v) {
        buf[pos] = v;
        extend_rgf(buf, pos + 1, std::max(running_max, v), k, fn);
    }
}

} // namespace detail

/// Visit every word of R_n (or R_{n,k}) exactly once, in lexicographic order.
/// The same buffer is handed to the callback for each word; copy if kept.
template <typename Fn>
void for_each_rgf(int n, std::optional<int> k, Fn&& fn) {
    if (n < 1) throw DomainError("enumeration requires n >= 1");
    if (k && (*k < 1 || *k > n)) throw DomainError("enumeration requires 1 <= k <= n");
    Letters buf(static_cast<std::size_t>(n), 0);
    buf[0] = 1;
    detail::extend_rgf(buf, 1, 1, k, fn);
}

/// Materialized enumeration stream; |result| = Bell(n) or S(n,k).
inline std::vector<RgfWord> enumerate_rgfs(int n, std::optional<int> k = std::nullopt) {
    std::vector<RgfWord> out;
    for_each_rgf(n, k, [&](const Letters& w) { out.emplace_back(w); });
    return out;
}

} // namespace rgfstat
