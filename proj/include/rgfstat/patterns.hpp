#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "errors.hpp"
#include "ints.hpp"
#include "partition.hpp"
#include "word.hpp"

namespace rgfstat {

/// A partition pattern, stored as the RGF of its standard form. The five
/// patterns of [3] are the five words of R_3:
///   1/2/3 <-> 123, 1/23 <-> 122, 13/2 <-> 121, 12/3 <-> 112, 123 <-> 111.
struct PartitionPattern {
    Letters word;

    explicit PartitionPattern(const SetPartition& p) : word(rgf_from_partition(p).letters()) {}
    explicit PartitionPattern(Letters w) : word(std::move(w)) {
        if (rgf_violation(word)) throw DomainError("partition pattern must be a valid RGF");
    }
    int size() const { return static_cast<int>(word.size()); }
    bool operator==(const PartitionPattern& o) const { return word == o.word; }
    bool operator<(const PartitionPattern& o) const { return word < o.word; }
};

/// A word pattern in the sense of subsequence containment on RGFs; must be
/// fixed by rank standardization (e.g. 112, 121, 122).
struct WordPattern {
    Letters word;

    explicit WordPattern(Letters w) : word(std::move(w)) {
        if (word.empty() || standardize_word(word) != word)
            throw DomainError("word pattern must be a standardized word");
    }
    int size() const { return static_cast<int>(word.size()); }
    bool operator==(const WordPattern& o) const { return word == o.word; }
    bool operator<(const WordPattern& o) const { return word < o.word; }
};

struct PatternSet {
    std::vector<PartitionPattern> partition_patterns; // kept sorted, unique
    std::vector<WordPattern> word_patterns;

    PatternSet() = default;
    PatternSet(std::vector<PartitionPattern> pp, std::vector<WordPattern> wp = {})
        : partition_patterns(std::move(pp)), word_patterns(std::move(wp)) {
        normalize();
    }

    void normalize() {
        std::sort(partition_patterns.begin(), partition_patterns.end());
        partition_patterns.erase(std::unique(partition_patterns.begin(), partition_patterns.end()),
                                 partition_patterns.end());
        std::sort(word_patterns.begin(), word_patterns.end());
        word_patterns.erase(std::unique(word_patterns.begin(), word_patterns.end()),
                            word_patterns.end());
    }

    bool empty() const { return partition_patterns.empty() && word_patterns.empty(); }

    /// Canonical key, also used in formula ids: pattern words sorted and
    /// joined with '+', word patterns prefixed "w".
    std::string key() const {
        std::string out;
        for (const auto& p : partition_patterns) {
            if (!out.empty()) out += '+';
            out += format_letters(p.word);
        }
        for (const auto& w : word_patterns) {
            if (!out.empty()) out += '+';
            out += "w" + format_letters(w.word);
        }
        return out;
    }

    bool operator==(const PatternSet& o) const {
        return partition_patterns == o.partition_patterns && word_patterns == o.word_patterns;
    }
    bool operator<(const PatternSet& o) const {
        if (partition_patterns != o.partition_patterns)
            return partition_patterns < o.partition_patterns;
        return word_patterns < o.word_patterns;
    }
};

/// Convenience constructor from partition texts, e.g. make_pattern_set({"1/23","13/2"}).
inline PatternSet make_pattern_set(std::initializer_list<const char*> partition_texts,
                                   std::initializer_list<const char*> word_texts = {}) {
    std::vector<PartitionPattern> pp;
    for (const char* t : partition_texts) pp.emplace_back(parse_partition(t));
    std::vector<WordPattern> wp;
    for (const char* t : word_texts) wp.emplace_back(parse_letters(t));
    return PatternSet(std::move(pp), std::move(wp));
}

/// CLI grammar: ";"-separated items, "w:"-prefixed items are word patterns,
/// everything else parses as a partition ("1/23;13/2", "w:112").
inline PatternSet parse_pattern_set(const std::string& text) {
    std::vector<PartitionPattern> pp;
    std::vector<WordPattern> wp;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(';', start);
        if (end == std::string::npos) end = text.size();
        std::string tok = text.substr(start, end - start);
        if (tok.empty()) throw ParseError(tok, "empty pattern in '" + text + "'");
        if (tok.rfind("w:", 0) == 0) {
            Letters w = parse_letters(tok.substr(2));
            if (standardize_word(w) != w)
                throw ParseError(tok, "word pattern '" + tok + "' is not standardized");
            wp.emplace_back(std::move(w));
        } else {
            pp.emplace_back(parse_partition(tok));
        }
        start = end + 1;
        if (end == text.size()) break;
    }
    return PatternSet(std::move(pp), std::move(wp));
}

namespace detail {

/// Scan all |s|=m position subsets; stop at the first one whose subsequence
/// maps to `target` under `standardize`. m <= 4 everywhere in practice.
template <typename Standardize>
bool subsequence_matches(const Letters& w, const Letters& target, Standardize&& standardize) {
    const int n = static_cast<int>(w.size());
    const int m = static_cast<int>(target.size());
    if (m > n) return false;
    std::vector<int> idx(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) idx[static_cast<std::size_t>(i)] = i;
    Letters sub(static_cast<std::size_t>(m));
    while (true) {
        for (int i = 0; i < m; ++i)
            sub[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        if (standardize(sub) == target) return true;
        // next combination in lexicographic order
        int i = m - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - m + i) --i;
        if (i < 0) return false;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < m; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

} // namespace detail

/// True iff restricting p to some element subset standardizes to the pattern.
inline bool contains_partition_pattern(const SetPartition& p, const PartitionPattern& pat) {
    return detail::subsequence_matches(rgf_from_partition(p).letters(), pat.word,
                                       standardize_first_occurrence);
}

/// Word-level equivalent: the pattern is compared against the restriction's
/// RGF, i.e. the subsequence standardized by first occurrence.
inline bool word_contains_partition_pattern(const Letters& w, const PartitionPattern& pat) {
    return detail::subsequence_matches(w, pat.word, standardize_first_occurrence);
}

/// True iff some subsequence of w rank-standardizes to v.
inline bool contains_word_pattern(const RgfWord& w, const WordPattern& v) {
    return detail::subsequence_matches(w.letters(), v.word, standardize_word);
}

inline bool word_contains_word_pattern(const Letters& w, const WordPattern& v) {
    return detail::subsequence_matches(w, v.word, standardize_word);
}

inline bool avoids_all(const Letters& w, const PatternSet& ps) {
    for (const auto& p : ps.partition_patterns)
        if (word_contains_partition_pattern(w, p)) return false;
    for (const auto& v : ps.word_patterns)
        if (word_contains_word_pattern(w, v)) return false;
    return true;
}

/// Stream the avoidance class R_{n,k}(ps) (all k when k is omitted) in
/// lexicographic order.
template <typename Fn>
void for_each_avoiding(int n, std::optional<int> k, const PatternSet& ps, Fn&& fn) {
    if (ps.empty()) throw DomainError("avoidance query requires a nonempty pattern set");
    for_each_rgf(n, k, [&](const Letters& w) {
        if (avoids_all(w, ps)) fn(w);
    });
}

inline std::vector<RgfWord> avoidance_class(int n, std::optional<int> k, const PatternSet& ps) {
    std::vector<RgfWord> out;
    for_each_avoiding(n, k, ps, [&](const Letters& w) { out.emplace_back(w); });
    return out;
}

/// Cheap predicates equivalent to avoidance of 13/2 and 123; used as
/// cross-checks against the generic subset scan.
inline bool is_layered(const Letters& w) {
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] < w[i - 1]) return false;
    return true;
}

inline bool max_multiplicity_at_most(const Letters& w, int bound) {
    std::array<int, 33> count{};
    for (auto v : w)
        if (++count[v] > bound) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Direct constructions of the tabulated avoidance classes.
// ---------------------------------------------------------------------------

namespace detail {

inline Letters make_word(std::initializer_list<int> vals) {
    Letters out;
    for (int v : vals) out.push_back(static_cast<std::uint8_t>(v));
    return out;
}

/// 1^{a} followed by 2 3 ... k.
inline Letters ones_then_run(int ones, int k) {
    Letters w;
    for (int i = 0; i < ones; ++i) w.push_back(1);
    for (int v = 2; v <= k; ++v) w.push_back(static_cast<std::uint8_t>(v));
    return w;
}

/// 1 2 ... k.
inline Letters initial_run(int k) {
    Letters w;
    for (int v = 1; v <= k; ++v) w.push_back(static_cast<std::uint8_t>(v));
    return w;
}

/// Layered word with the given layer sizes.
inline Letters layered_word(const std::vector<int>& layers) {
    Letters w;
    for (std::size_t i = 0; i < layers.size(); ++i)
        for (int c = 0; c < layers[i]; ++c) w.push_back(static_cast<std::uint8_t>(i + 1));
    return w;
}

/// All compositions of n into exactly k positive parts, each part <= cap.
inline void for_each_composition(int n, int k, int cap, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> parts(static_cast<std::size_t>(k));
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == k) {
            if (left == 0) fn(parts);
            return;
        }
        int remaining_slots = k - i - 1;
        for (int v = 1; v <= std::min(cap, left - remaining_slots); ++v) {
            parts[static_cast<std::size_t>(i)] = v;
            rec(i + 1, left - v);
        }
    };
    if (k >= 1 && n >= k) rec(0, n);
}

/// Candidate emitter: keeps only valid RGFs of length n with max letter k,
/// deduplicates, sorts lexicographically.
class ClassBuilder {
public:
    ClassBuilder(int n, int k) : n_(n), k_(k) {}

    void add(Letters w) {
        if (static_cast<int>(w.size()) != n_) return;
        if (rgf_violation(w)) return;
        if (*std::max_element(w.begin(), w.end()) != k_) return;
        words_.insert(std::move(w));
    }

    std::vector<RgfWord> take() {
        std::vector<RgfWord> out;
        for (const auto& w : words_) out.emplace_back(w);
        return out;
    }

private:
    int n_, k_;
    std::set<Letters> words_;
};

} // namespace detail

/// Members of R_{n,k}(ps) constructed from the tabulated characterization
/// (the five single patterns, the nine two-pattern rows, and the nine
/// three/four-pattern rows); no containment filtering is involved.
/// Throws UnsupportedError for pattern sets without a tabulated description.
inline std::vector<RgfWord> characterized_class(int n, int k, const PatternSet& ps) {
    if (n < 1 || k < 1 || k > n) throw DomainError("characterized_class requires 1 <= k <= n");
    if (!ps.word_patterns.empty())
        throw UnsupportedError("no tabulated characterization for word patterns");

    using detail::ClassBuilder;
    ClassBuilder out(n, k);
    std::string key = ps.key();

    if (key == "123") { // 1/2/3: at most two blocks
        if (k == 1) {
            out.add(detail::layered_word({n}));
        } else if (k == 2) {
            // every word over {1,2} starting with 1 and using a 2
            for (int bits = 0; bits < (1 << (n - 1)); ++bits) {
                Letters w{1};
                for (int i = 0; i < n - 1; ++i)
                    w.push_back(static_cast<std::uint8_t>((bits >> i) & 1 ? 2 : 1));
                out.add(std::move(w));
            }
        }
    } else if (key == "122") { // 1/23: a single 1 inserted into 1^l 23...k
        Letters base = detail::ones_then_run(n - k, k);
        for (std::size_t pos = 0; pos <= base.size(); ++pos) {
            Letters w = base;
            w.insert(w.begin() + static_cast<std::ptrdiff_t>(pos), 1);
            out.add(std::move(w));
        }
    } else if (key == "121") { // 13/2: layered words
        detail::for_each_composition(n, k, n, [&](const std::vector<int>& layers) {
            out.add(detail::layered_word(layers));
        });
    } else if (key == "112") { // 12/3: initial run 1..k then a constant letter
        for (int i = 1; i <= k; ++i) {
            Letters w = detail::initial_run(k);
            for (int j = k; j < n; ++j) w.push_back(static_cast<std::uint8_t>(i));
            out.add(std::move(w));
        }
    } else if (key == "111") { // 123: no letter more than twice
        for_each_rgf(n, k, [&](const Letters& w) {
            if (max_multiplicity_at_most(w, 2)) out.add(w);
        });
    } else if (key == "122+123") { // 1/2/3, 1/23
        if (k == 1) out.add(detail::layered_word({n}));
        if (k == 2) {
            Letters a = detail::layered_word({n - 1, 1});
            out.add(a); // 1^{n-1}2
            Letters b = detail::layered_word({n - 2, 1});
            b.push_back(1); // 1^{n-2}21
            out.add(b);
        }
    } else if (key == "121+123") { // 1/2/3, 13/2: 1^m 2^{n-m}, 1 <= m <= n
        for (int m = 1; m <= n; ++m) out.add(detail::layered_word({m, n - m}));
    } else if (key == "112+123") { // 1/2/3, 12/3
        if (k == 1) out.add(detail::layered_word({n}));
        if (k == 2) {
            out.add(detail::layered_word({1, n - 1})); // 12^{n-1}
            Letters b{1, 2};
            for (int j = 2; j < n; ++j) b.push_back(1); // 121^{n-2}
            out.add(b);
        }
    } else if (key == "121+122") { // 1/23, 13/2: 1^{n-k+1}23...k
        out.add(detail::ones_then_run(n - k + 1, k));
    } else if (key == "112+122") { // 1/23, 12/3
        if (k == 1) out.add(detail::layered_word({n}));
        if (k == n - 1) {
            Letters w = detail::initial_run(n - 1);
            w.push_back(1); // 123...(n-1)1
            out.add(w);
        }
        if (k == n) out.add(detail::initial_run(n));
    } else if (key == "111+122") { // 1/23, 123
        if (k == n - 1) {
            Letters base = detail::initial_run(n - 1);
            for (std::size_t pos = 0; pos <= base.size(); ++pos) {
                Letters w = base;
                w.insert(w.begin() + static_cast<std::ptrdiff_t>(pos), 1);
                out.add(std::move(w));
            }
        }
        if (k == n) out.add(detail::initial_run(n));
    } else if (key == "112+121") { // 13/2, 12/3: 123...(k-1) k^{n-k+1}
        Letters w = detail::initial_run(k - 1);
        for (int j = 0; j < n - k + 1; ++j) w.push_back(static_cast<std::uint8_t>(k));
        out.add(w);
    } else if (key == "111+121") { // 13/2, 123: layered, layers of size <= 2
        detail::for_each_composition(n, k, 2, [&](const std::vector<int>& layers) {
            out.add(detail::layered_word(layers));
        });
    } else if (key == "111+112") { // 12/3, 123
        if (k == n) out.add(detail::initial_run(n));
        if (k == n - 1) {
            for (int i = 1; i <= k; ++i) {
                Letters w = detail::initial_run(k);
                w.push_back(static_cast<std::uint8_t>(i));
                out.add(std::move(w));
            }
        }
    } else if (key == "121+122+123") { // 1/2/3, 1/23, 13/2
        if (k == 1) out.add(detail::layered_word({n}));
        if (k == 2) out.add(detail::layered_word({n - 1, 1}));
    } else if (key == "112+122+123") { // 1/2/3, 1/23, 12/3
        if (k == 1) out.add(detail::layered_word({n}));
        if (k == 2 && n == 3) out.add(detail::make_word({1, 2, 1}));
    } else if (key == "112+121+123") { // 1/2/3, 12/3, 13/2
        if (k == 1) out.add(detail::layered_word({n}));
        if (k == 2) out.add(detail::layered_word({1, n - 1}));
    } else if (key == "112+121+122") { // 1/23, 12/3, 13/2
        if (k == 1) out.add(detail::layered_word({n}));
        if (k == n) out.add(detail::initial_run(n));
    } else if (key == "111+121+122") { // 1/23, 13/2, 123
        if (k == n) out.add(detail::initial_run(n));
        if (k == n - 1) out.add(detail::ones_then_run(2, n - 1)); // 1^2 23...(n-1)
    } else if (key == "111+112+122") { // 1/23, 12/3, 123
        if (k == n) out.add(detail::initial_run(n));
        if (k == n - 1) {
            Letters w = detail::initial_run(n - 1);
            w.push_back(1);
            out.add(w);
        }
    } else if (key == "111+112+121") { // 13/2, 12/3, 123
        if (k == n) out.add(detail::initial_run(n));
        if (k == n - 1) {
            Letters w = detail::initial_run(n - 1);
            w.push_back(static_cast<std::uint8_t>(n - 1)); // 123...(n-2)(n-1)^2
            out.add(w);
        }
    } else if (key == "112+121+122+123") { // 1/2/3, 1/23, 12/3, 13/2
        if (k == 1) out.add(detail::layered_word({n}));
    } else if (key == "111+112+121+122") { // 123, 13/2, 1/23, 12/3
        if (k == n) out.add(detail::initial_run(n));
    } else {
        throw UnsupportedError("no tabulated characterization for pattern set {" + key + "}");
    }
    return out.take();
}

inline bool has_characterization(const PatternSet& ps) {
    try {
        characterized_class(3, 1, ps);
        return true;
    } catch (const UnsupportedError&) {
        return false;
    }
}

/// Closed-form cardinality of Pi_{n,k}(ps) for the five single patterns.
inline std::int64_t cardinality_closed_form(int n, int k, const PatternSet& ps) {
    if (n < 1 || k < 1) throw DomainError("cardinality requires n >= 1, k >= 1");
    if (!ps.word_patterns.empty() || ps.partition_patterns.size() != 1)
        throw UnsupportedError("no tabulated cardinality for pattern set {" + ps.key() + "}");
    if (k > n) return 0;
    const std::string key = ps.key();
    if (key == "123") { // 1/2/3
        if (k == 1) return 1;
        if (k == 2) return checked_add(std::int64_t{1} << (n - 1), -1);
        return 0;
    }
    if (key == "121") return binom(n - 1, k - 1);          // 13/2
    if (key == "122" || key == "112") return k < n ? k : 1; // 1/23, 12/3
    if (key == "111") {                                     // 123
        if (n == k) return 1;
        return checked_mul(binom(n, 2 * (n - k)), odd_double_factorial(2 * (n - k)));
    }
    throw UnsupportedError("no tabulated cardinality for pattern set {" + ps.key() + "}");
}

} // namespace rgfstat
