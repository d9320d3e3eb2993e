#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>

#include "errors.hpp"
#include "word.hpp"

namespace rgfstat {

/// The four Wachs-White statistics and their or-equal variants.
enum class StatName { lb, ls, rb, rs, lbe, lse, rbe, rse };

inline bool is_equal_variant(StatName s) {
    return s == StatName::lbe || s == StatName::lse || s == StatName::rbe || s == StatName::rse;
}

inline const char* to_cstring(StatName s) {
    switch (s) {
        case StatName::lb: return "lb";
        case StatName::ls: return "ls";
        case StatName::rb: return "rb";
        case StatName::rs: return "rs";
        case StatName::lbe: return "lbe";
        case StatName::lse: return "lse";
        case StatName::rbe: return "rbe";
        case StatName::rse: return "rse";
    }
    return "?";
}

inline StatName parse_stat_name(const std::string& text) {
    for (StatName s : {StatName::lb, StatName::ls, StatName::rb, StatName::rs,
                       StatName::lbe, StatName::lse, StatName::rbe, StatName::rse})
        if (text == to_cstring(s)) return s;
    throw ParseError(text, "unknown statistic '" + text + "'");
}

struct StatVector {
    int lb = 0, ls = 0, rb = 0, rs = 0;
    bool operator==(const StatVector&) const = default;
};

/// Per-letter values of all four statistics in one structure.
struct LetterStats {
    std::vector<int> lb, ls, rb, rs;
};

namespace detail {

// Distinct letter values strictly left / right of each position, as bitmasks
// (bit v-1 set when value v occurs). Letters are <= 32 throughout.
inline void occurrence_masks(const Letters& w, std::vector<std::uint32_t>& left,
                             std::vector<std::uint32_t>& right) {
    const std::size_t n = w.size();
    left.assign(n, 0);
    right.assign(n, 0);
    std::uint32_t mask = 0;
    for (std::size_t j = 0; j < n; ++j) {
        left[j] = mask;
        mask |= 1u << (w[j] - 1);
    }
    mask = 0;
    for (std::size_t j = n; j-- > 0;) {
        right[j] = mask;
        mask |= 1u << (w[j] - 1);
    }
}

inline int bigger(std::uint32_t mask, int v) { return std::popcount(mask >> v); }
inline int bigger_eq(std::uint32_t mask, int v) { return std::popcount(mask >> (v - 1)); }
inline int smaller(std::uint32_t mask, int v) { return std::popcount(mask & ((1u << (v - 1)) - 1u)); }
inline int smaller_eq(std::uint32_t mask, int v) { return std::popcount(mask & ((1u << v) - 1u)); }

} // namespace detail

/// Per-letter table for the standard or the or-equal quadruple. The or-equal
/// variants compare with weak inequality but still look only at positions
/// strictly before (resp. after) j.
inline LetterStats letter_stats(const RgfWord& w, bool equal_variant) {
    std::vector<std::uint32_t> left, right;
    detail::occurrence_masks(w.letters(), left, right);
    const std::size_t n = w.letters().size();
    LetterStats out;
    out.lb.resize(n);
    out.ls.resize(n);
    out.rb.resize(n);
    out.rs.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        int v = w.letters()[j];
        if (equal_variant) {
            out.lb[j] = detail::bigger_eq(left[j], v);
            out.ls[j] = detail::smaller_eq(left[j], v);
            out.rb[j] = detail::bigger_eq(right[j], v);
            out.rs[j] = detail::smaller_eq(right[j], v);
        } else {
            out.lb[j] = detail::bigger(left[j], v);
            out.ls[j] = detail::smaller(left[j], v);
            out.rb[j] = detail::bigger(right[j], v);
            out.rs[j] = detail::smaller(right[j], v);
        }
    }
    return out;
}

/// (lb, ls, rb, rs) or (lbe, lse, rbe, rse) of a whole word.
inline StatVector stat_vector(const RgfWord& w, bool equal_variant) {
    std::vector<std::uint32_t> left, right;
    detail::occurrence_masks(w.letters(), left, right);
    StatVector v;
    for (std::size_t j = 0; j < w.letters().size(); ++j) {
        int a = w.letters()[j];
        if (equal_variant) {
            v.lb += detail::bigger_eq(left[j], a);
            v.ls += detail::smaller_eq(left[j], a);
            v.rb += detail::bigger_eq(right[j], a);
            v.rs += detail::smaller_eq(right[j], a);
        } else {
            v.lb += detail::bigger(left[j], a);
            v.ls += detail::smaller(left[j], a);
            v.rb += detail::bigger(right[j], a);
            v.rs += detail::smaller(right[j], a);
        }
    }
    return v;
}

/// stat(a_j) for a single 1-based position.
inline int stat_letter(const RgfWord& w, int pos1, StatName s) {
    if (pos1 < 1 || pos1 > w.size()) throw DomainError("position out of range");
    LetterStats table = letter_stats(w, is_equal_variant(s));
    std::size_t j = static_cast<std::size_t>(pos1 - 1);
    switch (s) {
        case StatName::lb:
        case StatName::lbe: return table.lb[j];
        case StatName::ls:
        case StatName::lse: return table.ls[j];
        case StatName::rb:
        case StatName::rbe: return table.rb[j];
        case StatName::rs:
        case StatName::rse: return table.rs[j];
    }
    throw DomainError("unreachable");
}

inline int stat_word(const RgfWord& w, StatName s) {
    StatVector v = stat_vector(w, is_equal_variant(s));
    switch (s) {
        case StatName::lb:
        case StatName::lbe: return v.lb;
        case StatName::ls:
        case StatName::lse: return v.ls;
        case StatName::rb:
        case StatName::rbe: return v.rb;
        case StatName::rs:
        case StatName::rse: return v.rs;
    }
    throw DomainError("unreachable");
}

} // namespace rgfstat
