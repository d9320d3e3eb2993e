#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "word.hpp"

namespace rgfstat {

/// A set partition of [n] in standard form: blocks sorted by their minima,
/// elements sorted within each block, so B_1 always contains 1.
class SetPartition {
public:
    SetPartition(int n, std::vector<std::vector<int>> blocks) : n_(n), blocks_(std::move(blocks)) {
        if (n_ < 1) throw DomainError("set partition requires n >= 1");
        std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
        int covered = 0;
        for (auto& b : blocks_) {
            if (b.empty()) throw DomainError("empty block");
            std::sort(b.begin(), b.end());
            for (int e : b) {
                if (e < 1 || e > n_) throw DomainError("element outside [n]");
                if (seen[static_cast<std::size_t>(e)]) throw DomainError("repeated element across blocks");
                seen[static_cast<std::size_t>(e)] = true;
                ++covered;
            }
        }
        if (covered != n_) throw DomainError("blocks do not cover [n]");
        std::sort(blocks_.begin(), blocks_.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
    }

    int n() const { return n_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    bool operator==(const SetPartition& o) const { return n_ == o.n_ && blocks_ == o.blocks_; }

private:
    int n_;
    std::vector<std::vector<int>> blocks_;
};

/// w(pi): letter a_i is the index of the block containing i. 16/23478/5 -> 12223122.
inline RgfWord rgf_from_partition(const SetPartition& p) {
    Letters letters(static_cast<std::size_t>(p.n()), 0);
    const auto& blocks = p.blocks();
    for (std::size_t bi = 0; bi < blocks.size(); ++bi)
        for (int e : blocks[bi])
            letters[static_cast<std::size_t>(e - 1)] = static_cast<std::uint8_t>(bi + 1);
    return RgfWord(std::move(letters));
}

inline SetPartition partition_from_rgf(const RgfWord& w) {
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(w.max_letter()));
    const auto& letters = w.letters();
    for (std::size_t i = 0; i < letters.size(); ++i)
        blocks[static_cast<std::size_t>(letters[i] - 1)].push_back(static_cast<int>(i + 1));
    return SetPartition(w.size(), std::move(blocks));
}

/// Intersect each block with s, drop empties, relabel surviving elements by
/// rank. 16/23478/5 restricted to {2,4,6,7} is 247/6, standardized 124/3.
inline SetPartition restrict_standardize(const SetPartition& p, const std::set<int>& s) {
    if (s.empty()) throw DomainError("restriction set must be nonempty");
    std::vector<int> sorted(s.begin(), s.end());
    if (sorted.front() < 1 || sorted.back() > p.n())
        throw DomainError("restriction set must be a subset of [n]");
    auto rank = [&](int e) {
        return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), e) - sorted.begin()) + 1;
    };
    std::vector<std::vector<int>> blocks;
    for (const auto& b : p.blocks()) {
        std::vector<int> nb;
        for (int e : b)
            if (s.count(e)) nb.push_back(rank(e));
        if (!nb.empty()) blocks.push_back(std::move(nb));
    }
    return SetPartition(static_cast<int>(sorted.size()), std::move(blocks));
}

/// Partition text: blocks joined by "/". Elements are contiguous digits when
/// every element of the partition is <= 9 ("16/23478/5"), comma-separated
/// otherwise ("1,10/2,3").
inline std::string to_string(const SetPartition& p) {
    bool small = p.n() <= 9;
    std::string out;
    for (std::size_t bi = 0; bi < p.blocks().size(); ++bi) {
        if (bi > 0) out += '/';
        const auto& b = p.blocks()[bi];
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (!small && i > 0) out += ',';
            out += std::to_string(b[i]);
        }
    }
    return out;
}

inline SetPartition parse_partition(const std::string& text) {
    if (text.empty()) throw ParseError(text, "empty partition");
    std::vector<std::vector<int>> blocks;
    int n = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('/', start);
        if (end == std::string::npos) end = text.size();
        std::string tok = text.substr(start, end - start);
        if (tok.empty()) throw ParseError(tok, "empty block in partition '" + text + "'");
        std::vector<int> block;
        if (tok.find(',') != std::string::npos) {
            std::size_t bs = 0;
            while (bs <= tok.size()) {
                std::size_t be = tok.find(',', bs);
                if (be == std::string::npos) be = tok.size();
                std::string el = tok.substr(bs, be - bs);
                if (el.empty()) throw ParseError(el, "empty element in block '" + tok + "'");
                int v = 0;
                for (char c : el) {
                    if (c < '0' || c > '9') throw ParseError(el, "element '" + el + "' is not a number");
                    v = v * 10 + (c - '0');
                    if (v > 1000) throw ParseError(el, "element '" + el + "' too large");
                }
                if (v < 1) throw ParseError(el, "elements must be positive");
                block.push_back(v);
                bs = be + 1;
                if (be == tok.size()) break;
            }
        } else {
            for (char c : tok) {
                if (c < '1' || c > '9')
                    throw ParseError(std::string(1, c), "invalid character '" + std::string(1, c) + "' in block");
                block.push_back(c - '0');
            }
        }
        for (int v : block) n = std::max(n, v);
        blocks.push_back(std::move(block));
        start = end + 1;
        if (end == text.size()) break;
    }
    try {
        return SetPartition(n, std::move(blocks));
    } catch (const DomainError& e) {
        throw ParseError(text, std::string("'") + text + "' is not a set partition: " + e.what());
    }
}

} // namespace rgfstat
