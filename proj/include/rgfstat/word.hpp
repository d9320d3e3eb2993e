#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace rgfstat {

using Letters = std::vector<std::uint8_t>;

/// Index (1-based) of the first letter violating an RGF condition, or nullopt.
inline std::optional<std::size_t> rgf_violation(const Letters& seq) {
    if (seq.empty()) return 1;
    if (seq[0] != 1) return 1;
    std::uint8_t running_max = 1;
    for (std::size_t i = 1; i < seq.size(); ++i) {
        if (seq[i] == 0 || seq[i] > running_max + 1) return i + 1;
        running_max = std::max(running_max, seq[i]);
    }
    return std::nullopt;
}

/// A restricted growth function: a_1 = 1 and a_i <= 1 + max(a_1..a_{i-1}).
/// Immutable after construction. The max letter equals the block count of
/// the corresponding set partition.
class RgfWord {
public:
    explicit RgfWord(Letters letters) : letters_(std::move(letters)) {
        if (auto pos = rgf_violation(letters_))
            throw NotAnRgfError(*pos, "not an RGF at position " + std::to_string(*pos));
        max_letter_ = *std::max_element(letters_.begin(), letters_.end());
    }

    static RgfWord validate(const std::vector<int>& seq) {
        Letters l;
        l.reserve(seq.size());
        for (std::size_t i = 0; i < seq.size(); ++i) {
            if (seq[i] < 1 || seq[i] > 255)
                throw NotAnRgfError(i + 1, "letter out of range at position " + std::to_string(i + 1));
            l.push_back(static_cast<std::uint8_t>(seq[i]));
        }
        return RgfWord(std::move(l));
    }

    const Letters& letters() const { return letters_; }
    int size() const { return static_cast<int>(letters_.size()); }
    int max_letter() const { return max_letter_; }
    int at(int pos1) const { // 1-based, matching the written form a_1...a_n
        if (pos1 < 1 || pos1 > size()) throw DomainError("position out of range");
        return letters_[static_cast<std::size_t>(pos1 - 1)];
    }

    bool operator==(const RgfWord& o) const { return letters_ == o.letters_; }
    bool operator<(const RgfWord& o) const { return letters_ < o.letters_; }

private:
    Letters letters_;
    int max_letter_ = 0;
};

/// Rank standardization: each letter replaced by its rank among the distinct
/// values present (smallest value -> 1). 474 -> 121, 331 -> 221.
inline Letters standardize_word(const Letters& seq) {
    if (seq.empty()) throw DomainError("standardize_word requires a nonempty sequence");
    Letters distinct(seq);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    Letters out;
    out.reserve(seq.size());
    for (auto v : seq) {
        auto it = std::lower_bound(distinct.begin(), distinct.end(), v);
        out.push_back(static_cast<std::uint8_t>(1 + (it - distinct.begin())));
    }
    return out;
}

/// First-occurrence standardization: letters relabelled in order of first
/// appearance. This is the RGF of the set partition the sequence's positions
/// form when grouped by letter; any sequence becomes a valid RGF.
inline Letters standardize_first_occurrence(const Letters& seq) {
    Letters label(256, 0);
    Letters out;
    out.reserve(seq.size());
    std::uint8_t next = 1;
    for (auto v : seq) {
        if (label[v] == 0) label[v] = next++;
        out.push_back(label[v]);
    }
    return out;
}

/// Word text: contiguous digits when every letter is <= 9 ("12332412"),
/// comma-separated integers otherwise ("1,2,10").
inline std::string format_letters(const Letters& seq) {
    bool small = std::all_of(seq.begin(), seq.end(), [](std::uint8_t v) { return v <= 9; });
    std::string out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (!small && i > 0) out += ',';
        out += std::to_string(static_cast<int>(seq[i]));
    }
    return out;
}

inline std::string to_string(const RgfWord& w) { return format_letters(w.letters()); }

inline Letters parse_letters(const std::string& text) {
    if (text.empty()) throw ParseError(text, "empty word");
    Letters out;
    if (text.find(',') != std::string::npos) {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find(',', start);
            if (end == std::string::npos) end = text.size();
            std::string tok = text.substr(start, end - start);
            if (tok.empty()) throw ParseError(tok, "empty letter in word '" + text + "'");
            int v = 0;
            for (char c : tok) {
                if (c < '0' || c > '9') throw ParseError(tok, "letter '" + tok + "' is not a number");
                v = v * 10 + (c - '0');
                if (v > 255) throw ParseError(tok, "letter '" + tok + "' too large");
            }
            if (v < 1) throw ParseError(tok, "letters must be positive");
            out.push_back(static_cast<std::uint8_t>(v));
            start = end + 1;
            if (end == text.size()) break;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9')
                throw ParseError(std::string(1, c), "invalid character '" + std::string(1, c) + "' in word");
            out.push_back(static_cast<std::uint8_t>(c - '0'));
        }
    }
    return out;
}

inline RgfWord parse_word(const std::string& text) { return RgfWord(parse_letters(text)); }

} // namespace rgfstat
