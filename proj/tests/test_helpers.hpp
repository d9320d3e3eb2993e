#pragma once

// Independent reference implementations the tests check the library against.
// Everything here recomputes from definitions, avoiding the code paths under
// test (no bitmasks, no prefix-extension enumeration, no pattern fast paths).

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "rgfstat/partition.hpp"
#include "rgfstat/statistics.hpp"
#include "rgfstat/word.hpp"

namespace testref {

using rgfstat::Letters;

/// Every RGF of length n, found by filtering all n^n letter sequences
/// against the two defining conditions. Only usable for small n.
inline std::vector<Letters> all_rgfs_by_filter(int n) {
    std::vector<Letters> out;
    Letters seq(static_cast<std::size_t>(n), 1);
    while (true) {
        bool ok = seq[0] == 1;
        int running_max = 1;
        for (int i = 1; ok && i < n; ++i) {
            if (seq[static_cast<std::size_t>(i)] > running_max + 1) ok = false;
            running_max = std::max(running_max, static_cast<int>(seq[static_cast<std::size_t>(i)]));
        }
        if (ok) out.push_back(seq);
        int pos = n - 1;
        while (pos >= 0 && seq[static_cast<std::size_t>(pos)] == n) {
            seq[static_cast<std::size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++seq[static_cast<std::size_t>(pos)];
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Stirling triangle by its recurrence, independent of rgfstat::stirling2.
inline std::vector<std::vector<std::int64_t>> stirling_triangle(int n_max) {
    std::vector<std::vector<std::int64_t>> s(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        s[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, 0);
        for (int k = 0; k <= n; ++k) {
            if (n == 0 && k == 0) {
                s[0][0] = 1;
            } else if (n > 0 && k > 0) {
                std::int64_t above = k <= n - 1 ? s[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)] : 0;
                s[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
                    k * above + s[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)];
            }
        }
    }
    return s;
}

/// Per-letter statistic straight from the definition, with explicit sets.
inline int naive_stat(const Letters& w, int pos1, rgfstat::StatName name) {
    using rgfstat::StatName;
    std::set<int> values;
    std::size_t j = static_cast<std::size_t>(pos1 - 1);
    bool left = name == StatName::lb || name == StatName::ls || name == StatName::lbe ||
                name == StatName::lse;
    if (left)
        for (std::size_t i = 0; i < j; ++i) values.insert(w[i]);
    else
        for (std::size_t i = j + 1; i < w.size(); ++i) values.insert(w[i]);
    int a = w[j];
    int count = 0;
    for (int v : values) {
        switch (name) {
            case StatName::lb:
            case StatName::rb: count += v > a; break;
            case StatName::ls:
            case StatName::rs: count += v < a; break;
            case StatName::lbe:
            case StatName::rbe: count += v >= a; break;
            case StatName::lse:
            case StatName::rse: count += v <= a; break;
        }
    }
    return count;
}

/// Containment by the partition-level definition: restrict to every subset
/// and standardize, using SetPartition machinery rather than word scans.
inline bool naive_contains(const rgfstat::SetPartition& p, const rgfstat::SetPartition& pattern) {
    int n = p.n(), m = pattern.n();
    if (m > n) return false;
    std::vector<int> idx(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        std::set<int> s(idx.begin(), idx.end());
        if (rgfstat::restrict_standardize(p, s) == pattern) return true;
        int i = m - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - m + i + 1) --i;
        if (i < 0) return false;
        ++idx[static_cast<std::size_t>(i)];
        for (int l = i + 1; l < m; ++l)
            idx[static_cast<std::size_t>(l)] = idx[static_cast<std::size_t>(l - 1)] + 1;
    }
}

/// Deterministic PRNG for property tests (64-bit splitmix).
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    int below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }
};

} // namespace testref
