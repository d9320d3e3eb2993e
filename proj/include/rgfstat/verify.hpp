#pragma once

#include <atomic>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "formulas.hpp"
#include "genfun.hpp"

namespace rgfstat {

inline constexpr const char* kToolVersion = "rgf 1.0.0";

enum class Status { confirmed, mismatch, out_of_regime };

inline const char* to_cstring(Status s) {
    switch (s) {
        case Status::confirmed: return "CONFIRMED";
        case Status::mismatch: return "MISMATCH";
        case Status::out_of_regime: return "OUT_OF_REGIME";
    }
    return "?";
}

struct Verdict {
    std::string id;
    int n = 0;
    std::optional<int> k;
    Status status = Status::out_of_regime;
    MultiPoly expected, actual, diff; // diff = expected - actual
};

/// Anchored glob: '*' matches any run, '?' one character.
inline bool glob_match(const std::string& pattern, const std::string& text) {
    std::size_t p = 0, t = 0, star = std::string::npos, mark = 0;
    while (t < text.size()) {
        if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
            ++p;
            ++t;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = t;
        } else if (star != std::string::npos) {
            p = star + 1;
            t = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

/// Compare one registered claim against its ground truth at a single cell.
/// Mismatches are reported, never thrown.
inline Verdict verify_one(OracleCache& cache, const FormulaEntry& entry, int n,
                          std::optional<int> k) {
    Verdict v;
    v.id = entry.id;
    v.n = n;
    v.k = entry.level == FormulaLevel::per_nk ? k : std::nullopt;
    int kk = v.k.value_or(0);
    if ((entry.level == FormulaLevel::per_nk && !k) || !entry.in_regime(n, kk)) {
        v.status = Status::out_of_regime;
        return v;
    }
    try {
        v.expected = entry.expected(cache, n, kk);
        v.actual = entry.actual(cache, n, kk);
    } catch (const OutOfRegimeError&) {
        v.status = Status::out_of_regime;
        return v;
    } catch (const DomainError&) {
        // a transcribed formula that cannot be evaluated here (e.g. a negative
        // exponent) is treated as out of its regime rather than a crash
        v.status = Status::out_of_regime;
        return v;
    }
    v.diff = v.expected - v.actual;
    v.status = v.diff.is_zero() ? Status::confirmed : Status::mismatch;
    return v;
}

inline Verdict verify_one(OracleCache& cache, const std::string& id, int n,
                          std::optional<int> k = std::nullopt) {
    return verify_one(cache, find_formula(id), n, k);
}

struct VerificationReport {
    std::string version = kToolVersion;
    int n_max = 0;
    std::vector<Verdict> verdicts; // sorted by (id, n, k)
    std::int64_t confirmed = 0, mismatch = 0;

    /// Per-id classification: MISMATCH as soon as any cell mismatches.
    std::map<std::string, Status> classify() const {
        std::map<std::string, Status> out;
        for (const auto& v : verdicts) {
            auto [it, inserted] = out.emplace(v.id, v.status);
            if (!inserted && v.status == Status::mismatch) it->second = Status::mismatch;
        }
        return out;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json verdict_array = nlohmann::ordered_json::array();
        for (const auto& v : verdicts) {
            nlohmann::ordered_json jv;
            jv["id"] = v.id;
            jv["n"] = v.n;
            jv["k"] = v.k ? nlohmann::ordered_json(*v.k) : nlohmann::ordered_json(nullptr);
            jv["status"] = to_cstring(v.status);
            jv["diff"] = v.diff.to_json();
            if (v.status == Status::mismatch) {
                jv["expected"] = v.expected.to_json();
                jv["actual"] = v.actual.to_json();
            }
            verdict_array.push_back(std::move(jv));
        }
        nlohmann::ordered_json out;
        out["version"] = version;
        out["n_max"] = n_max;
        out["verdicts"] = std::move(verdict_array);
        out["summary"] = {{"confirmed", confirmed}, {"mismatch", mismatch}};
        return out;
    }

    std::string to_json_text() const { return to_json().dump(2) + "\n"; }
};

/// Sweep every registered id over n = 3..n_max and every admissible k,
/// optionally filtered by an id glob. Cells are independent; `jobs` > 1
/// computes them in parallel without changing a byte of the output.
inline VerificationReport verify_all(OracleCache& cache, int n_max,
                                     const std::string& id_glob = "*", int jobs = 1) {
    if (n_max < 3 || n_max > 12) throw DomainError("verify sweep requires 3 <= n_max <= 12");
    if (jobs < 1) throw DomainError("jobs must be >= 1");

    struct Cell {
        const FormulaEntry* entry;
        int n;
        std::optional<int> k;
    };

    // registry order is already sorted by id within each family; sort cells
    // globally so reports do not depend on registration order
    std::vector<const FormulaEntry*> entries;
    for (const auto& e : formula_registry())
        if (glob_match(id_glob, e.id)) entries.push_back(&e);
    std::sort(entries.begin(), entries.end(),
              [](const FormulaEntry* a, const FormulaEntry* b) { return a->id < b->id; });

    std::vector<Cell> cells;
    for (const FormulaEntry* e : entries) {
        for (int n = 3; n <= n_max; ++n) {
            if (e->level == FormulaLevel::per_n) {
                if (e->in_regime(n, 0)) cells.push_back({e, n, std::nullopt});
            } else {
                for (int k = 1; k <= n; ++k)
                    if (e->in_regime(n, k)) cells.push_back({e, n, k});
            }
        }
    }

    std::vector<Verdict> verdicts(cells.size());
    auto work = [&](std::size_t i) {
        verdicts[i] = verify_one(cache, *cells[i].entry, cells[i].n, cells[i].k);
    };
    if (jobs == 1 || cells.size() < 2) {
        for (std::size_t i = 0; i < cells.size(); ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        int threads = std::min<int>(jobs, static_cast<int>(cells.size()));
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1))
                    work(i);
            });
        for (auto& th : pool) th.join();
    }

    VerificationReport report;
    report.n_max = n_max;
    report.verdicts = std::move(verdicts);
    for (const auto& v : report.verdicts) {
        if (v.status == Status::confirmed) ++report.confirmed;
        if (v.status == Status::mismatch) ++report.mismatch;
    }
    return report;
}

// ---------------------------------------------------------------------------
// Findings file: the committed per-id classification the test suite pins.
// ---------------------------------------------------------------------------

inline nlohmann::ordered_json findings_json(const VerificationReport& report) {
    nlohmann::ordered_json statuses;
    for (const auto& [id, status] : report.classify()) statuses[id] = to_cstring(status);
    nlohmann::ordered_json out;
    out["version"] = report.version;
    out["n_max"] = report.n_max;
    out["statuses"] = std::move(statuses);
    return out;
}

inline void write_findings(const VerificationReport& report, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw DomainError("cannot write findings file '" + path + "'");
    f << findings_json(report).dump(2) << "\n";
}

/// Differences between a fresh report and a findings file: one line per
/// deviating id. Empty means the run reproduces the recorded adjudication.
inline std::vector<std::string> compare_findings(const VerificationReport& report,
                                                 const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw DomainError("cannot read findings file '" + path + "'");
    nlohmann::json recorded = nlohmann::json::parse(f);
    std::vector<std::string> deviations;
    auto classified = report.classify();
    const auto& statuses = recorded.at("statuses");
    for (const auto& [id, status] : classified) {
        if (!statuses.contains(id)) {
            deviations.push_back("id '" + id + "' missing from findings");
        } else if (statuses.at(id).get<std::string>() != to_cstring(status)) {
            deviations.push_back("id '" + id + "': fresh run says " +
                                 std::string(to_cstring(status)) + ", findings say " +
                                 statuses.at(id).get<std::string>());
        }
    }
    for (const auto& [id, status] : statuses.items())
        if (!classified.count(id))
            deviations.push_back("id '" + id + "' recorded in findings but absent from the run");
    return deviations;
}

} // namespace rgfstat
