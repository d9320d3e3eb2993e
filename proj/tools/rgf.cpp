// Command-line front end: enumerate / stats / poly / formula / verify / table.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rgfstat/rgfstat.hpp"

namespace {

using namespace rgfstat;

std::optional<int> opt_k(int k) { return k == 0 ? std::nullopt : std::optional<int>(k); }

std::string poly_output(const MultiPoly& p, const std::string& format) {
    if (format == "text") return p.to_text() + "\n";
    if (format == "latex") return p.to_latex() + "\n";
    if (format == "json") return p.to_json().dump(2) + "\n";
    throw DomainError("unknown format '" + format + "'");
}

int default_jobs() {
    if (const char* env = std::getenv("RGF_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 1;
}

int run_enumerate(int n, int k, const std::string& avoid, const std::string& format) {
    std::vector<std::string> words;
    auto emit = [&](const Letters& w) { words.push_back(format_letters(w)); };
    if (avoid.empty())
        for_each_rgf(n, opt_k(k), emit);
    else
        for_each_avoiding(n, opt_k(k), parse_pattern_set(avoid), emit);
    if (format == "json") {
        nlohmann::ordered_json j = words;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& w : words) std::cout << w << "\n";
    }
    return 0;
}

int run_stats(const std::string& word_text, bool equal_variant, const std::string& format) {
    RgfWord w = parse_word(word_text);
    LetterStats table = letter_stats(w, equal_variant);
    StatVector totals = stat_vector(w, equal_variant);
    const char* names[4] = {equal_variant ? "lbe" : "lb", equal_variant ? "lse" : "ls",
                            equal_variant ? "rbe" : "rb", equal_variant ? "rse" : "rs"};
    if (format == "json") {
        nlohmann::ordered_json j;
        j["word"] = to_string(w);
        j["n"] = w.size();
        j["k"] = w.max_letter();
        j["equal_variant"] = equal_variant;
        nlohmann::ordered_json letters = nlohmann::ordered_json::array();
        for (int i = 0; i < w.size(); ++i) {
            nlohmann::ordered_json row;
            row["pos"] = i + 1;
            row["letter"] = w.at(i + 1);
            row[names[0]] = table.lb[static_cast<std::size_t>(i)];
            row[names[1]] = table.ls[static_cast<std::size_t>(i)];
            row[names[2]] = table.rb[static_cast<std::size_t>(i)];
            row[names[3]] = table.rs[static_cast<std::size_t>(i)];
            letters.push_back(std::move(row));
        }
        j["letters"] = std::move(letters);
        j["totals"] = {{names[0], totals.lb},
                       {names[1], totals.ls},
                       {names[2], totals.rb},
                       {names[3], totals.rs}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "word " << to_string(w) << "  (n=" << w.size() << ", k=" << w.max_letter()
              << ")\n";
    std::printf("%4s %6s %4s %4s %4s %4s\n", "pos", "letter", names[0], names[1], names[2],
                names[3]);
    for (int i = 0; i < w.size(); ++i)
        std::printf("%4d %6d %4d %4d %4d %4d\n", i + 1, w.at(i + 1),
                    table.lb[static_cast<std::size_t>(i)], table.ls[static_cast<std::size_t>(i)],
                    table.rb[static_cast<std::size_t>(i)], table.rs[static_cast<std::size_t>(i)]);
    std::printf("%4s %6s %4d %4d %4d %4d\n", "", "total", totals.lb, totals.ls, totals.rb,
                totals.rs);
    return 0;
}

int run_poly(int n, int k, const std::string& avoid, const std::string& stat, bool equal_variant,
             const std::string& format) {
    PatternSet ps = parse_pattern_set(avoid);
    OracleCache cache;
    MultiPoly p;
    if (stat == "all") {
        p = oracle_F(cache, n, opt_k(k), ps, equal_variant);
    } else {
        StatName st = parse_stat_name(stat);
        if (equal_variant && !is_equal_variant(st))
            throw DomainError("--equal-variant conflicts with statistic '" + stat +
                              "'; use its *e form");
        p = oracle_single(cache, n, opt_k(k), ps, st);
    }
    std::cout << poly_output(p, format);
    return 0;
}

int run_formula(const std::string& id, bool list, int n, int k, const std::string& format) {
    if (list) {
        for (const auto& e : formula_registry()) {
            std::cout << e.id << "\t" << to_cstring(e.kind) << "\t"
                      << (e.level == FormulaLevel::per_nk ? "per (n,k)" : "per n") << "\t"
                      << e.anchor << "\t" << e.description << "\n";
        }
        return 0;
    }
    if (id.empty()) throw DomainError("formula needs --id or --list");
    MultiPoly p = eval_formula(id, n, opt_k(k));
    std::cout << poly_output(p, format);
    return 0;
}

int run_verify(int n_max, const std::string& id_glob, const std::string& out_path,
               const std::string& findings_path, const std::string& write_findings_path,
               int jobs) {
    OracleCache cache;
    VerificationReport report = verify_all(cache, n_max, id_glob, jobs);
    std::string text = report.to_json_text();
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw DomainError("cannot write report to '" + out_path + "'");
        f << text;
    }
    std::cerr << "verify: " << report.verdicts.size() << " verdicts, " << report.confirmed
              << " confirmed, " << report.mismatch << " mismatch\n";
    if (!write_findings_path.empty()) {
        write_findings(report, write_findings_path);
        std::cerr << "wrote findings to " << write_findings_path << "\n";
        return 0;
    }
    std::vector<std::string> deviations = compare_findings(report, findings_path);
    if (!deviations.empty()) {
        for (const auto& d : deviations) std::cerr << "deviation: " << d << "\n";
        return 1;
    }
    std::cerr << "report matches " << findings_path << "\n";
    return 0;
}

int run_table(const std::string& which, int n, const std::string& format) {
    std::vector<std::pair<std::string, PatternSet>> rows;
    if (which == "table1") {
        rows = {
            {"{1/2/3, 1/23}", make_pattern_set({"1/2/3", "1/23"})},
            {"{1/2/3, 13/2}", make_pattern_set({"1/2/3", "13/2"})},
            {"{1/2/3, 12/3}", make_pattern_set({"1/2/3", "12/3"})},
            {"{1/23, 13/2}", make_pattern_set({"1/23", "13/2"})},
            {"{1/23, 12/3}", make_pattern_set({"1/23", "12/3"})},
            {"{1/23, 123}", make_pattern_set({"1/23", "123"})},
            {"{13/2, 12/3}", make_pattern_set({"13/2", "12/3"})},
            {"{13/2, 123}", make_pattern_set({"13/2", "123"})},
            {"{12/3, 123}", make_pattern_set({"12/3", "123"})},
        };
    } else if (which == "table2") {
        rows = {
            {"{1/2/3, 1/23, 13/2}", make_pattern_set({"1/2/3", "1/23", "13/2"})},
            {"{1/2/3, 1/23, 12/3}", make_pattern_set({"1/2/3", "1/23", "12/3"})},
            {"{1/2/3, 12/3, 13/2}", make_pattern_set({"1/2/3", "12/3", "13/2"})},
            {"{1/23, 12/3, 13/2}", make_pattern_set({"1/23", "12/3", "13/2"})},
            {"{1/23, 13/2, 123}", make_pattern_set({"1/23", "13/2", "123"})},
            {"{1/23, 12/3, 123}", make_pattern_set({"1/23", "12/3", "123"})},
            {"{13/2, 12/3, 123}", make_pattern_set({"13/2", "12/3", "123"})},
            {"{1/2/3, 1/23, 12/3, 13/2}", make_pattern_set({"1/2/3", "1/23", "12/3", "13/2"})},
            {"{123, 13/2, 1/23, 12/3}", make_pattern_set({"123", "13/2", "1/23", "12/3"})},
        };
    } else {
        throw DomainError("--which must be table1 or table2");
    }

    nlohmann::ordered_json jout = nlohmann::ordered_json::array();
    for (const auto& [label, ps] : rows) {
        if (format == "json") {
            nlohmann::ordered_json row;
            row["patterns"] = label;
            nlohmann::ordered_json by_k;
            for (int k = 1; k <= n; ++k) {
                auto words = characterized_class(n, k, ps);
                if (words.empty()) continue;
                nlohmann::ordered_json arr = nlohmann::ordered_json::array();
                for (const auto& w : words) arr.push_back(to_string(w));
                by_k[std::to_string(k)] = std::move(arr);
            }
            row["classes"] = std::move(by_k);
            jout.push_back(std::move(row));
        } else {
            std::cout << label << ":\n";
            for (int k = 1; k <= n; ++k) {
                auto words = characterized_class(n, k, ps);
                if (words.empty()) continue;
                std::cout << "  k=" << k << ":";
                for (const auto& w : words) std::cout << " " << to_string(w);
                std::cout << "\n";
            }
        }
    }
    if (format == "json") std::cout << jout.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"set partition / RGF statistics toolkit"};
    app.require_subcommand(1);

    std::string format = "text";
    int jobs = default_jobs();
    app.add_option("--jobs", jobs, "worker threads (never changes output bytes)");

    auto* cmd_enum = app.add_subcommand("enumerate", "list RGFs, optionally within an avoidance class");
    int n = 0, k = 0;
    std::string avoid, word_text, stat = "all", id, which = "table1";
    bool equal_variant = false, list_formulas = false;
    cmd_enum->add_option("--n", n, "word length")->required();
    cmd_enum->add_option("--k", k, "block count (omit for all k)");
    cmd_enum->add_option("--avoid", avoid, "pattern set, e.g. \"1/23;13/2\" or \"w:112\"");
    cmd_enum->add_option("--format", format, "text|json");

    auto* cmd_stats = app.add_subcommand("stats", "per-letter statistic table for one word");
    cmd_stats->add_option("--word", word_text, "RGF, e.g. 12332412")->required();
    cmd_stats->add_flag("--equal-variant", equal_variant, "use the or-equal statistics");
    cmd_stats->add_option("--format", format, "text|json");

    auto* cmd_poly = app.add_subcommand("poly", "generating polynomial of an avoidance class");
    cmd_poly->add_option("--n", n, "word length")->required();
    cmd_poly->add_option("--k", k, "block count (omit to sum over k)");
    cmd_poly->add_option("--avoid", avoid, "pattern set")->required();
    cmd_poly->add_option("--stat", stat, "lb|ls|rb|rs|lbe|lse|rbe|rse|all");
    cmd_poly->add_flag("--equal-variant", equal_variant, "or-equal statistics (with --stat all)");
    cmd_poly->add_option("--format", format, "text|latex|json");

    auto* cmd_formula = app.add_subcommand("formula", "evaluate a registered closed form");
    cmd_formula->add_option("--id", id, "formula id, e.g. thm3.1.i");
    cmd_formula->add_flag("--list", list_formulas, "print the registry");
    cmd_formula->add_option("--n", n, "word length");
    cmd_formula->add_option("--k", k, "block count (per-(n,k) formulas)");
    cmd_formula->add_option("--format", format, "text|latex|json");

    auto* cmd_verify = app.add_subcommand("verify", "sweep all registered claims against brute force");
    int n_max = 9;
    std::string out_path, findings_path = "findings.json", write_findings_path, id_glob = "*";
    cmd_verify->add_option("--n-max", n_max, "sweep bound (3..12, default 9)");
    cmd_verify->add_option("--id", id_glob, "id glob filter, e.g. 'thm7.1.*'");
    cmd_verify->add_option("--out", out_path, "write the report here instead of stdout");
    cmd_verify->add_option("--findings", findings_path, "findings file to compare against");
    cmd_verify->add_option("--write-findings", write_findings_path,
                           "write per-id classification and skip the comparison");

    auto* cmd_table = app.add_subcommand("table", "render the tabulated multi-pattern classes");
    cmd_table->add_option("--which", which, "table1|table2");
    cmd_table->add_option("--n", n, "word length")->required();
    cmd_table->add_option("--format", format, "text|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_enum) return run_enumerate(n, k, avoid, format);
        if (*cmd_stats) return run_stats(word_text, equal_variant, format);
        if (*cmd_poly) return run_poly(n, k, avoid, stat, equal_variant, format);
        if (*cmd_formula) return run_formula(id, list_formulas, n, k, format);
        if (*cmd_verify)
            return run_verify(n_max, id_glob, out_path, findings_path, write_findings_path, jobs);
        if (*cmd_table) return run_table(which, n, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
