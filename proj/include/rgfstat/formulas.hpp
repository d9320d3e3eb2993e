#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "genfun.hpp"
#include "ints.hpp"
#include "patterns.hpp"
#include "poly.hpp"

namespace rgfstat {

// ---------------------------------------------------------------------------
// Helper streams used by the closed forms.
// ---------------------------------------------------------------------------

/// All strictly decreasing `count`-tuples with parts from [max_part]; there
/// are C(max_part, count) of them. Parts are listed descending.
inline std::vector<std::vector<int>> enumerate_strict_partitions(int max_part, int count) {
    if (max_part < 1 || count < 0)
        throw DomainError("enumerate_strict_partitions requires max_part >= 1, count >= 0");
    std::vector<std::vector<int>> out;
    std::vector<int> asc;
    std::function<void(int)> rec = [&](int low) {
        if (static_cast<int>(asc.size()) == count) {
            std::vector<int> desc(asc.rbegin(), asc.rend());
            out.push_back(std::move(desc));
            return;
        }
        int needed = count - static_cast<int>(asc.size());
        for (int v = low; v + needed - 1 <= max_part; ++v) {
            asc.push_back(v);
            rec(v + 1);
            asc.pop_back();
        }
    };
    rec(1);
    return out;
}

/// All subsets L of [k] with |L| = j, elements listed descending, streamed in
/// descending lexicographic order: (3),(2),(1) for k=3, j=1.
template <typename Fn>
void for_each_descending_subset(int k, int j, Fn&& fn) {
    if (j < 0 || j > k) return;
    std::vector<int> subset(static_cast<std::size_t>(j));
    std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int hi) {
        if (pos == subset.size()) {
            fn(const_cast<const std::vector<int>&>(subset));
            return;
        }
        int slots_left = j - static_cast<int>(pos);
        for (int v = hi; v >= slots_left; --v) {
            subset[pos] = v;
            rec(pos + 1, v - 1);
        }
    };
    rec(0, k);
}

inline std::vector<std::vector<int>> subset_sum_terms(int k, int j) {
    if (j < 0 || j > k) throw DomainError("subset_sum_terms requires 0 <= j <= k");
    std::vector<std::vector<int>> out;
    for_each_descending_subset(k, j, [&](const std::vector<int>& s) { out.push_back(s); });
    return out;
}

/// Number of compositions of n into exactly k parts, each in [1, max_part];
/// the coefficient of x^n in (x + x^2 + ... + x^max_part)^k.
inline std::int64_t composition_count(int n, int k, int max_part) {
    if (n < 1 || k < 1) throw DomainError("composition_count requires n, k >= 1");
    if (max_part < 1) return 0;
    std::vector<std::int64_t> ways(static_cast<std::size_t>(n) + 1, 0);
    ways[0] = 1;
    for (int part = 0; part < k; ++part) {
        std::vector<std::int64_t> next(static_cast<std::size_t>(n) + 1, 0);
        for (int total = 0; total <= n; ++total) {
            if (ways[static_cast<std::size_t>(total)] == 0) continue;
            for (int v = 1; v <= max_part && total + v <= n; ++v)
                next[static_cast<std::size_t>(total + v)] =
                    checked_add(next[static_cast<std::size_t>(total + v)],
                                ways[static_cast<std::size_t>(total)]);
        }
        ways.swap(next);
    }
    return ways[static_cast<std::size_t>(n)];
}

/// D_i = #{d >= 1 : d | i, d + i/d + 1 <= n}, reading d | 0 as true for
/// every d (so D_0 = n - 1).
inline std::int64_t divisor_count(int i, int n) {
    if (i < 0) throw DomainError("divisor_count requires i >= 0");
    if (i == 0) return std::max(0, n - 1);
    std::int64_t count = 0;
    for (int d = 1; d <= i; ++d)
        if (i % d == 0 && d + i / d + 1 <= n) ++count;
    return count;
}

// ---------------------------------------------------------------------------
// Formula registry.
// ---------------------------------------------------------------------------

enum class FormulaKind { closed_form, identity, predicate, symmetry, coherence };
enum class FormulaLevel { per_nk, per_n };

inline const char* to_cstring(FormulaKind k) {
    switch (k) {
        case FormulaKind::closed_form: return "closed-form";
        case FormulaKind::identity: return "identity";
        case FormulaKind::predicate: return "predicate";
        case FormulaKind::symmetry: return "symmetry";
        case FormulaKind::coherence: return "coherence";
    }
    return "?";
}

/// One registered claim. `expected` is the transcribed statement (closed form,
/// claimed scalar, or left-hand side); `actual` is what it is checked against
/// (brute-force distribution, measured scalar, or right-hand side). For
/// per-n entries the k argument is ignored.
struct FormulaEntry {
    std::string id;
    FormulaKind kind;
    FormulaLevel level;
    std::string anchor;
    std::string description;
    std::function<bool(int, int)> in_regime;
    std::function<MultiPoly(OracleCache&, int, int)> expected;
    std::function<MultiPoly(OracleCache&, int, int)> actual;
};

namespace detail {

inline std::int64_t tri(std::int64_t k) { return binom(k, 2); }

inline std::int64_t exact_half(std::int64_t numerator, const char* what) {
    if (numerator % 2 != 0)
        throw OutOfRegimeError(std::string(what) + ": exponent (" + std::to_string(numerator) +
                               ")/2 is not an integer");
    return numerator / 2;
}

inline MultiPoly to_var(const MultiPoly& p, Var from, Var to) {
    if (from == to) return p;
    return p.swap_vars(MultiPoly::transposition(from, to));
}

inline int ceil_half(int n) { return (n + 1) / 2; }

} // namespace detail

std::vector<FormulaEntry> build_formula_registry();

inline const std::vector<FormulaEntry>& formula_registry() {
    static const std::vector<FormulaEntry> registry = build_formula_registry();
    return registry;
}

inline const FormulaEntry& find_formula(const std::string& id) {
    for (const auto& e : formula_registry())
        if (e.id == id) return e;
    throw UnsupportedError("unknown formula id '" + id + "'");
}

/// Evaluate a registered closed form (or a predicate's claimed value) at
/// concrete (n, k). Identity and symmetry entries have no standalone value.
inline MultiPoly eval_formula(const std::string& id, int n, std::optional<int> k = std::nullopt) {
    const FormulaEntry& e = find_formula(id);
    if (e.kind != FormulaKind::closed_form && e.kind != FormulaKind::predicate)
        throw UnsupportedError("formula id '" + id + "' names a " +
                               std::string(to_cstring(e.kind)) + " check, not a closed form");
    int kk = 0;
    if (e.level == FormulaLevel::per_nk) {
        if (!k) throw DomainError("formula id '" + id + "' needs both n and k");
        kk = *k;
        if (kk < 1 || kk > n) throw DomainError("formula requires 1 <= k <= n");
    }
    if (n < 1) throw DomainError("formula requires n >= 1");
    if (!e.in_regime(n, kk))
        throw OutOfRegimeError("formula id '" + id + "' is out of regime at n=" + std::to_string(n) +
                               (e.level == FormulaLevel::per_nk ? ", k=" + std::to_string(kk) : ""));
    OracleCache scratch; // closed forms and claims never touch the oracle
    return e.expected(scratch, n, kk);
}

// ---------------------------------------------------------------------------
// The registry itself.
// ---------------------------------------------------------------------------

inline std::vector<FormulaEntry> build_formula_registry() {
    using std::int64_t;
    using detail::tri;
    using detail::to_var;

    std::vector<FormulaEntry> reg;

    const PatternSet ps123 = make_pattern_set({"1/2/3"});
    const PatternSet ps122 = make_pattern_set({"1/23"});
    const PatternSet ps121 = make_pattern_set({"13/2"});
    const PatternSet ps112 = make_pattern_set({"12/3"});
    const PatternSet ps111 = make_pattern_set({"123"});
    const PatternSet ps1111 = make_pattern_set({"1234"});
    const PatternSet w112 = make_pattern_set({}, {"112"});
    const PatternSet w121 = make_pattern_set({}, {"121"});
    const PatternSet w122 = make_pattern_set({}, {"122"});

    auto any_k = [](int, int) { return true; };
    auto k_is = [](int target) { return [target](int, int k) { return k == target; }; };
    auto k_eq_n = [](int n, int k) { return k == n; };
    auto k_lt_n = [](int n, int k) { return k < n; };
    auto nonempty_123_class = [](int n, int k) { return k >= detail::ceil_half(n); };

    // --- wiring helpers -----------------------------------------------------

    auto formula_only = [](std::function<MultiPoly(int, int)> f) {
        return [f = std::move(f)](OracleCache&, int n, int k) { return f(n, k); };
    };

    auto oracle_full = [](PatternSet ps, bool equal, bool all_k) {
        return [ps = std::move(ps), equal, all_k](OracleCache& c, int n, int k) {
            return oracle_F(c, n, all_k ? std::nullopt : std::optional<int>(k), ps, equal);
        };
    };

    auto oracle_stat = [](PatternSet ps, StatName st, bool all_k) {
        return [ps = std::move(ps), st, all_k](OracleCache& c, int n, int k) {
            return oracle_single(c, n, all_k ? std::nullopt : std::optional<int>(k), ps, st);
        };
    };

    auto add_closed_nk = [&](std::string id, std::string anchor, std::string desc,
                             std::function<bool(int, int)> regime,
                             std::function<MultiPoly(int, int)> formula,
                             std::function<MultiPoly(OracleCache&, int, int)> target) {
        reg.push_back({std::move(id), FormulaKind::closed_form, FormulaLevel::per_nk,
                       std::move(anchor), std::move(desc), std::move(regime),
                       formula_only(std::move(formula)), std::move(target)});
    };

    auto add_closed_n = [&](std::string id, std::string anchor, std::string desc,
                            std::function<MultiPoly(int, int)> formula,
                            std::function<MultiPoly(OracleCache&, int, int)> target,
                            std::function<bool(int, int)> regime) {
        reg.push_back({std::move(id), FormulaKind::closed_form, FormulaLevel::per_n,
                       std::move(anchor), std::move(desc), std::move(regime),
                       formula_only(std::move(formula)), std::move(target)});
    };

    auto add_predicate = [&](std::string id, FormulaLevel level, std::string anchor,
                             std::string desc, std::function<bool(int, int)> regime,
                             std::function<MultiPoly(int, int)> claimed,
                             std::function<MultiPoly(OracleCache&, int, int)> measured) {
        reg.push_back({std::move(id), FormulaKind::predicate, level, std::move(anchor),
                       std::move(desc), std::move(regime), formula_only(std::move(claimed)),
                       std::move(measured)});
    };

    auto add_identity = [&](std::string id, FormulaLevel level, std::string anchor,
                            std::string desc, std::function<bool(int, int)> regime,
                            std::function<MultiPoly(OracleCache&, int, int)> lhs,
                            std::function<MultiPoly(OracleCache&, int, int)> rhs) {
        reg.push_back({std::move(id), FormulaKind::identity, level, std::move(anchor),
                       std::move(desc), std::move(regime), std::move(lhs), std::move(rhs)});
    };

    auto add_symmetry = [&](std::string id, FormulaLevel level, std::string anchor,
                            std::string desc, PatternSet ps, Var a, Var b, bool equal,
                            std::function<bool(int, int)> regime) {
        bool all_k = level == FormulaLevel::per_n;
        auto base = oracle_full(std::move(ps), equal, all_k);
        auto swapped = [base, a, b](OracleCache& c, int n, int k) {
            return base(c, n, k).swap_vars(MultiPoly::transposition(a, b));
        };
        reg.push_back({std::move(id), FormulaKind::symmetry, level, std::move(anchor),
                       std::move(desc), std::move(regime), std::move(swapped), std::move(base)});
    };

    auto add_coherence = [&](std::string id, std::string anchor, std::string desc,
                             FormulaLevel level, std::function<bool(int, int)> regime,
                             std::function<MultiPoly(int, int)> corollary,
                             std::function<MultiPoly(int, int)> parent, Var keep) {
        auto specialized = [parent = std::move(parent), keep](int n, int k) {
            return parent(n, k).specialize({keep});
        };
        reg.push_back({std::move(id), FormulaKind::coherence, level, std::move(anchor),
                       std::move(desc), std::move(regime), formula_only(std::move(corollary)),
                       formula_only(std::move(specialized))});
    };

    // ------------------------------------------------------------------ 1/2/3

    auto thm21i = [](int, int) { return MultiPoly::constant(1); };
    add_closed_nk("thm2.1.i", "Theorem 2.1(i)", "F_{n,1}(1/2/3) = 1", k_is(1), thm21i,
                  oracle_full(ps123, false, false));

    auto thm21ii = [](int n, int) {
        MultiPoly p;
        for (int64_t l = 1; l <= n - 1; ++l) p.add_term(make_monomial(0, n - l, l, 0), 1);
        for (int64_t l = 2; l <= n - 1; ++l)
            for (int64_t h = 0; h <= n - l - 1; ++h)
                for (int64_t i = 1; i <= l - 1; ++i)
                    for (int64_t j = 1; j <= l - i; ++j) {
                        int64_t c = binom(n - i - j - h - 2, l - i - j);
                        if (c == 0) continue;
                        int64_t s_exp = l - (h == 0 ? j : 0);
                        p.add_term(make_monomial(l - i, n - l, s_exp, n - l - h), c);
                    }
        return p;
    };
    add_closed_nk("thm2.1.ii", "Theorem 2.1(ii)",
                  "F_{n,2}(1/2/3): layered part plus Kronecker-delta triple sum", k_is(2),
                  thm21ii, oracle_full(ps123, false, false));

    for (StatName st : {StatName::lb, StatName::ls, StatName::rb, StatName::rs}) {
        add_closed_nk(std::string("cor2.2.i.") + to_cstring(st), "Corollary 2.2(i)",
                      std::string(to_cstring(st)) + " generating function of 1/2/3 is 1 at k=1",
                      k_is(1), [](int, int) { return MultiPoly::constant(1); },
                      oracle_stat(ps123, st, false));
    }

    auto cor22ii = [](Var v) {
        return [v](int n, int) {
            MultiPoly p;
            for (int64_t h = 0; h <= n - 2; ++h) p += var_pow(v, h, binom(n - 1, h + 1));
            return p;
        };
    };
    add_closed_nk("cor2.2.ii.lb", "Corollary 2.2(ii)", "LB_{n,2}(1/2/3) = sum C(n-1,h+1) q^h",
                  k_is(2), cor22ii(Var::q), oracle_stat(ps123, StatName::lb, false));
    add_closed_nk("cor2.2.ii.rs", "Corollary 2.2(ii)", "RS_{n,2}(1/2/3) = sum C(n-1,h+1) t^h",
                  k_is(2), cor22ii(Var::t), oracle_stat(ps123, StatName::rs, false));

    auto cor22iii = [](Var v) {
        return [v](int n, int) {
            MultiPoly base = MultiPoly::variable(v) + MultiPoly::constant(1);
            return base.pow(static_cast<std::uint32_t>(n - 1)) - MultiPoly::constant(1);
        };
    };
    add_closed_nk("cor2.2.iii.ls", "Corollary 2.2(iii)", "LS_{n,2}(1/2/3) = (r+1)^{n-1} - 1",
                  k_is(2), cor22iii(Var::r), oracle_stat(ps123, StatName::ls, false));
    add_closed_nk("cor2.2.iii.rb", "Corollary 2.2(iii)", "RB_{n,2}(1/2/3) = (s+1)^{n-1} - 1",
                  k_is(2), cor22iii(Var::s), oracle_stat(ps123, StatName::rb, false));

    // ------------------------------------------------------------------ 1/23

    auto thm31i = [](int, int k) { return MultiPoly::monomial(make_monomial(0, tri(k), tri(k), 0)); };
    add_closed_nk("thm3.1.i", "Theorem 3.1(i)", "F_{n,k}(1/23) = (rs)^C(k,2) at n=k", k_eq_n,
                  thm31i, oracle_full(ps122, false, false));

    auto thm31ii = [](int n, int k) {
        MultiPoly p;
        for (int64_t j = 1; j <= k; ++j) {
            int64_t s_exp = int64_t(n - k) * (k - 1) + (k - j) + tri(k - 1);
            p.add_term(make_monomial(j - 1, tri(k), s_exp, j - 1), 1);
        }
        return p;
    };
    add_closed_nk("thm3.1.ii", "Theorem 3.1(ii)", "F_{n,k}(1/23) for n>k", k_lt_n, thm31ii,
                  oracle_full(ps122, false, false));

    auto thm31 = [thm31i, thm31ii](int n, int k) { return n == k ? thm31i(n, k) : thm31ii(n, k); };

    add_closed_nk("cor3.2.i.lb", "Corollary 3.2(i)", "LB_{n,k}(1/23) = 1 at n=k", k_eq_n,
                  [](int, int) { return MultiPoly::constant(1); },
                  oracle_stat(ps122, StatName::lb, false));
    add_closed_nk("cor3.2.i.rs", "Corollary 3.2(i)", "RS_{n,k}(1/23) = 1 at n=k", k_eq_n,
                  [](int, int) { return MultiPoly::constant(1); },
                  oracle_stat(ps122, StatName::rs, false));

    auto cor32ii = [](Var v) {
        return [v](int, int k) {
            MultiPoly p;
            for (int64_t j = 1; j <= k; ++j) p += var_pow(v, j - 1);
            return p;
        };
    };
    add_closed_nk("cor3.2.ii.lb", "Corollary 3.2(ii)", "LB_{n,k}(1/23) = 1+q+...+q^{k-1} for n>k",
                  k_lt_n, cor32ii(Var::q), oracle_stat(ps122, StatName::lb, false));
    add_closed_nk("cor3.2.ii.rs", "Corollary 3.2(ii)", "RS_{n,k}(1/23) = 1+t+...+t^{k-1} for n>k",
                  k_lt_n, cor32ii(Var::t), oracle_stat(ps122, StatName::rs, false));

    auto cor32iii = [](int n, int k) {
        return var_pow(Var::r, tri(k), n == k ? 1 : k);
    };
    add_closed_nk("cor3.2.iii.ls", "Corollary 3.2(iii)",
                  "LS_{n,k}(1/23) = r^C(k,2) (n=k) or k r^C(k,2)", any_k, cor32iii,
                  oracle_stat(ps122, StatName::ls, false));

    auto cor32iv = [](int n, int k) {
        if (n == k) return var_pow(Var::s, tri(k));
        MultiPoly p;
        for (int64_t j = 1; j <= k; ++j)
            p += var_pow(Var::s, int64_t(n - k) * (k - 1) + (k - j) + tri(k - 1));
        return p;
    };
    add_closed_nk("cor3.2.iv.rb", "Corollary 3.2(iv)", "RB_{n,k}(1/23), both branches", any_k,
                  cor32iv, oracle_stat(ps122, StatName::rb, false));

    // ------------------------------------------------------------------ 13/2

    auto thm41 = [](bool exactly_k) {
        return [exactly_k](int n, int k) {
            int parts = exactly_k ? k : k - 1;
            MultiPoly p;
            if (parts > n - 1) return p;
            for (const auto& lambda : enumerate_strict_partitions(n - 1, parts)) {
                int64_t sum = 0;
                for (int v : lambda) sum += v;
                int64_t complement = int64_t(lambda.size()) * n - sum;
                p.add_term(make_monomial(0, complement, sum, 0), 1);
            }
            return p;
        };
    };
    add_closed_nk("thm4.1.as-printed", "Theorem 4.1",
                  "F_{n,k}(13/2) summed over strict partitions with exactly k parts <= n-1",
                  any_k, thm41(true), oracle_full(ps121, false, false));
    add_closed_nk("thm4.1.kminus1", "Theorem 4.1",
                  "F_{n,k}(13/2) summed over strict partitions with k-1 parts <= n-1", any_k,
                  thm41(false), oracle_full(ps121, false, false));

    auto cor42i = [](Var v) {
        return [v](int n, int k) { return var_pow(v, 0, binom(n - 1, k - 1)); };
    };
    add_closed_nk("cor4.2.i.lb", "Corollary 4.2(i)", "LB_{n,k}(13/2) = C(n-1,k-1)", any_k,
                  cor42i(Var::q), oracle_stat(ps121, StatName::lb, false));
    add_closed_nk("cor4.2.i.rs", "Corollary 4.2(i)", "RS_{n,k}(13/2) = C(n-1,k-1)", any_k,
                  cor42i(Var::t), oracle_stat(ps121, StatName::rs, false));

    auto cor42ii = [thm41](bool exactly_k) {
        return [thm41, exactly_k](int n, int k) {
            return thm41(exactly_k)(n, k).specialize({Var::r});
        };
    };
    auto cor42iii = [thm41](bool exactly_k) {
        return [thm41, exactly_k](int n, int k) {
            return thm41(exactly_k)(n, k).specialize({Var::s});
        };
    };
    add_closed_nk("cor4.2.ii.ls.as-printed", "Corollary 4.2(ii)",
                  "LS_{n,k}(13/2), exactly-k-parts reading", any_k, cor42ii(true),
                  oracle_stat(ps121, StatName::ls, false));
    add_closed_nk("cor4.2.ii.ls.kminus1", "Corollary 4.2(ii)", "LS_{n,k}(13/2), k-1-parts reading",
                  any_k, cor42ii(false), oracle_stat(ps121, StatName::ls, false));
    add_closed_nk("cor4.2.iii.rb.as-printed", "Corollary 4.2(iii)",
                  "RB_{n,k}(13/2), exactly-k-parts reading", any_k, cor42iii(true),
                  oracle_stat(ps121, StatName::rb, false));
    add_closed_nk("cor4.2.iii.rb.kminus1", "Corollary 4.2(iii)",
                  "RB_{n,k}(13/2), k-1-parts reading", any_k, cor42iii(false),
                  oracle_stat(ps121, StatName::rb, false));

    // ------------------------------------------------------------------ 12/3

    auto thm51i = [](int, int k) { return MultiPoly::monomial(make_monomial(0, tri(k), tri(k), 0)); };
    add_closed_nk("thm5.1.i", "Theorem 5.1(i)", "F_{n,k}(12/3) = (rs)^C(k,2) at n=k", k_eq_n,
                  thm51i, oracle_full(ps112, false, false));

    auto thm51ii = [](int n, int k) {
        MultiPoly p;
        for (int64_t i = 1; i <= k; ++i)
            p.add_term(make_monomial(int64_t(n - k) * (k - i), tri(k) + int64_t(n - k) * (i - 1),
                                     tri(k), k - i),
                       1);
        return p;
    };
    add_closed_nk("thm5.1.ii", "Theorem 5.1(ii)", "F_{n,k}(12/3) for n>k", k_lt_n, thm51ii,
                  oracle_full(ps112, false, false));

    auto thm51 = [thm51i, thm51ii](int n, int k) { return n == k ? thm51i(n, k) : thm51ii(n, k); };

    auto cor52i = [](int, int k) { return var_pow(Var::r, tri(k)); };
    add_closed_nk("cor5.2.i.ls", "Corollary 5.2(i)", "LS_{n,k}(12/3) = r^C(k,2) at n=k", k_eq_n,
                  cor52i, oracle_stat(ps112, StatName::ls, false));

    auto cor52ii = [](int n, int k) {
        MultiPoly p;
        for (int64_t i = 1; i <= k; ++i) p += var_pow(Var::r, tri(k) + int64_t(n - k) * (i - 1));
        return p;
    };
    add_closed_nk("cor5.2.ii.ls", "Corollary 5.2(ii)", "LS_{n,k}(12/3) for n>k", k_lt_n, cor52ii,
                  oracle_stat(ps112, StatName::ls, false));

    auto cor52iii = [](int n, int k) { return var_pow(Var::s, tri(k), n == k ? 1 : k); };
    add_closed_nk("cor5.2.iii.rb", "Corollary 5.2(iii)",
                  "RB_{n,k}(12/3) = s^C(k,2) (n=k) or k s^C(k,2)", any_k, cor52iii,
                  oracle_stat(ps112, StatName::rb, false));

    auto cor52iv = [](int n, int k) {
        if (n == k) return MultiPoly::constant(1);
        MultiPoly p;
        for (int64_t i = 1; i <= k - 1; ++i) p += var_pow(Var::t, k - i);
        return p;
    };
    add_closed_nk("cor5.2.iv.rs", "Corollary 5.2(iv)",
                  "RS_{n,k}(12/3) = 1 (n=k) or t + ... + t^{k-1} as printed", any_k, cor52iv,
                  oracle_stat(ps112, StatName::rs, false));

    auto sec5lb = [](int n, int k) {
        MultiPoly p;
        for (int64_t i = 1; i <= k; ++i) p += var_pow(Var::q, int64_t(n - k) * (k - i));
        return p;
    };
    // the display is the n>k companion of Proposition 5.3; at n=k it would
    // read k instead of 1
    add_closed_nk("sec5.lb-display", "Section 5 closing display",
                  "LB_{n,k}(12/3) = sum_i q^{(n-k)(k-i)} for n > k", k_lt_n, sec5lb,
                  oracle_stat(ps112, StatName::lb, false));

    auto prop53 = [](int n, int k) {
        MultiPoly p;
        int64_t bound = int64_t(n - k) * (k - 1);
        for (int64_t i = 0; i <= bound; ++i)
            p += var_pow(Var::q, i, divisor_count(static_cast<int>(i), n));
        return p;
    };
    add_closed_nk("prop5.3", "Proposition 5.3",
                  "LB_{n,k}(12/3) via divisor counts D_i up to (n-k)(k-1)", any_k, prop53,
                  oracle_stat(ps112, StatName::lb, false));

    add_identity("prop5.5.i", FormulaLevel::per_nk, "Proposition 5.5(i)",
                 "LB_{n,k}(1/23) = RS_{n,k}(12/3)", any_k,
                 oracle_stat(ps122, StatName::lb, false),
                 [oracle_stat, ps112](OracleCache& c, int n, int k) {
                     return to_var(oracle_stat(ps112, StatName::rs, false)(c, n, k), Var::t, Var::q);
                 });
    add_identity("prop5.5.ii", FormulaLevel::per_nk, "Proposition 5.5(ii)",
                 "LS_{n,k}(1/23) = RB_{n,k}(12/3)", any_k,
                 oracle_stat(ps122, StatName::ls, false),
                 [oracle_stat, ps112](OracleCache& c, int n, int k) {
                     return to_var(oracle_stat(ps112, StatName::rb, false)(c, n, k), Var::s, Var::r);
                 });

    // ------------------------------------------------------------------- 123

    auto thm61 = [](int n, int k) {
        MultiPoly p;
        if (n - k > k) return p;
        for_each_descending_subset(k, n - k, [&](const std::vector<int>& L) {
            int64_t coeff = 1;
            int64_t exp = tri(k);
            for (std::size_t g = 0; g < L.size(); ++g) {
                coeff = checked_mul(coeff, k - L[g] + static_cast<int64_t>(g) + 1);
                exp += L[g] - 1;
            }
            p += var_pow(Var::r, exp, coeff);
        });
        return p;
    };
    add_closed_nk("thm6.1", "Theorem 6.1",
                  "LS_{n,k}(123) as a sum over descending subsets of [k]", any_k, thm61,
                  oracle_stat(ps111, StatName::ls, false));

    add_predicate("thm6.2.i", FormulaLevel::per_nk, "Theorem 6.2(i)",
                  "degree of LB_{n,k}(123) = ((4n+1)k - 3k^2 - n^2 - n)/2", nonempty_123_class,
                  [](int n, int k) {
                      int64_t num = (4 * int64_t(n) + 1) * k - 3 * int64_t(k) * k -
                                    int64_t(n) * n - n;
                      return MultiPoly::constant(detail::exact_half(num, "thm6.2.i"));
                  },
                  [oracle_stat, ps111](OracleCache& c, int n, int k) {
                      return MultiPoly::constant(
                          oracle_stat(ps111, StatName::lb, false)(c, n, k).degree_in(Var::q));
                  });
    add_predicate("thm6.2.ii", FormulaLevel::per_nk, "Theorem 6.2(ii)",
                  "leading coefficient of LB_{n,k}(123) = (n-k)!", nonempty_123_class,
                  [](int n, int k) { return MultiPoly::constant(factorial(n - k)); },
                  [oracle_stat, ps111](OracleCache& c, int n, int k) {
                      return oracle_stat(ps111, StatName::lb, false)(c, n, k)
                          .leading_coeff_in(Var::q);
                  });

    auto cterm_lb = [oracle_stat](PatternSet ps) {
        return [oracle_stat, ps = std::move(ps)](OracleCache& c, int n, int k) {
            return oracle_stat(ps, StatName::lb, false)(c, n, k).constant_term_in(Var::q);
        };
    };
    auto comp_claim = [](int max_part) {
        return [max_part](int n, int k) {
            return MultiPoly::constant(composition_count(n, k, max_part));
        };
    };
    add_predicate("sec6.cterm-lb.m3.parts-le-2", FormulaLevel::per_nk, "Section 6, constant term",
                  "constant term of LB_{n,k}(123) counts compositions into k parts of size <= 2",
                  any_k, comp_claim(2), cterm_lb(ps111));
    add_predicate("sec6.cterm-lb.m3.gf-as-printed", FormulaLevel::per_nk,
                  "Section 6, constant term",
                  "constant term of LB_{n,k}(123) via the printed (x(1-x^3)/(1-x))^k", any_k,
                  comp_claim(3), cterm_lb(ps111));
    add_predicate("sec6.cterm-lb.m4.parts-le-3", FormulaLevel::per_nk, "Section 6, constant term",
                  "constant term of LB_{n,k}(1234) counts compositions into k parts of size <= 3",
                  any_k, comp_claim(3), cterm_lb(ps1111));
    add_predicate("sec6.cterm-lb.m4.gf-as-printed", FormulaLevel::per_nk,
                  "Section 6, constant term",
                  "constant term of LB_{n,k}(1234) via the printed (x(1-x^4)/(1-x))^k", any_k,
                  comp_claim(4), cterm_lb(ps1111));

    add_predicate("sec6.rs.i.degree", FormulaLevel::per_nk, "Section 6 final theorem (i)",
                  "degree of RS_{n,k}(123) = (n-k)(k-1)", nonempty_123_class,
                  [](int n, int k) { return MultiPoly::constant(int64_t(n - k) * (k - 1)); },
                  [oracle_stat, ps111](OracleCache& c, int n, int k) {
                      return MultiPoly::constant(
                          oracle_stat(ps111, StatName::rs, false)(c, n, k).degree_in(Var::t));
                  });
    add_predicate("sec6.rs.ii.monic", FormulaLevel::per_nk, "Section 6 final theorem (ii)",
                  "leading coefficient of RS_{n,k}(123) = 1", nonempty_123_class,
                  [](int, int) { return MultiPoly::constant(1); },
                  [oracle_stat, ps111](OracleCache& c, int n, int k) {
                      return oracle_stat(ps111, StatName::rs, false)(c, n, k)
                          .leading_coeff_in(Var::t);
                  });
    {
        auto cterm_rs = [oracle_stat, ps111](OracleCache& c, int n, int k) {
            return oracle_stat(ps111, StatName::rs, false)(c, n, k).constant_term_in(Var::t);
        };
        reg.push_back({"sec6.rs.iii.cterm-tautology", FormulaKind::predicate,
                       FormulaLevel::per_nk, "Section 6 final theorem (iii)",
                       "constant term of RS_{n,k}(123) equals itself (statement as printed is "
                       "a tautology; the measured value is reported)",
                       nonempty_123_class, cterm_rs, cterm_rs});
    }
    add_predicate("sec6.rb.iv.monic", FormulaLevel::per_nk, "Section 6 final theorem (iv)",
                  "RB_{n,k}(123) is monic", nonempty_123_class,
                  [](int, int) { return MultiPoly::constant(1); },
                  [oracle_stat, ps111](OracleCache& c, int n, int k) {
                      return oracle_stat(ps111, StatName::rb, false)(c, n, k)
                          .leading_coeff_in(Var::s);
                  });
    add_predicate("sec6.rb.iv.degree", FormulaLevel::per_nk, "Section 6 final theorem (iv)",
                  "degree of RB_{n,k}(123) = C(k,2)", nonempty_123_class,
                  [](int, int k) { return MultiPoly::constant(tri(k)); },
                  [oracle_stat, ps111](OracleCache& c, int n, int k) {
                      return MultiPoly::constant(
                          oracle_stat(ps111, StatName::rb, false)(c, n, k).degree_in(Var::s));
                  });

    // ------------------------------------------------- multi-pattern, Thm 7.1

    auto n_ge3 = [](int n, int) { return n >= 3; };
    auto and_regime = [](std::function<bool(int, int)> a, std::function<bool(int, int)> b) {
        return [a = std::move(a), b = std::move(b)](int n, int k) { return a(n, k) && b(n, k); };
    };

    add_closed_nk("thm7.1.1", "Theorem 7.1(1)", "F_{n,k}(1/2/3, 1/23), k <= 2",
                  and_regime(n_ge3, [](int, int k) { return k <= 2; }),
                  [](int n, int k) {
                      if (k == 1) return MultiPoly::constant(1);
                      return MultiPoly::monomial(make_monomial(0, 1, n - 1, 0)) +
                             MultiPoly::monomial(make_monomial(1, 1, n - 2, 1));
                  },
                  oracle_full(make_pattern_set({"1/2/3", "1/23"}), false, false));

    add_closed_nk("thm7.1.2", "Theorem 7.1(2)", "F_{n,k}(1/2/3, 13/2), k <= 2",
                  and_regime(n_ge3, [](int, int k) { return k <= 2; }),
                  [](int n, int k) {
                      if (k == 1) return MultiPoly::constant(1);
                      MultiPoly p;
                      for (int64_t i = 1; i <= n - 1; ++i)
                          p.add_term(make_monomial(0, i, n - i, 0), 1);
                      return p;
                  },
                  oracle_full(make_pattern_set({"1/2/3", "13/2"}), false, false));

    add_closed_nk("thm7.1.3", "Theorem 7.1(3)", "F_{n,k}(1/2/3, 12/3), k <= 2",
                  and_regime(n_ge3, [](int, int k) { return k <= 2; }),
                  [](int n, int k) {
                      if (k == 1) return MultiPoly::constant(1);
                      return MultiPoly::monomial(make_monomial(0, n - 1, 1, 0)) +
                             MultiPoly::monomial(make_monomial(n - 2, 1, 1, 1));
                  },
                  oracle_full(make_pattern_set({"1/2/3", "12/3"}), false, false));

    add_closed_nk("thm7.1.4", "Theorem 7.1(4)", "F_{n,k}(1/23, 13/2)", n_ge3,
                  [](int n, int k) {
                      if (k == 1) return MultiPoly::constant(1);
                      int64_t s_exp =
                          detail::exact_half(int64_t(k - 1) * (2 * int64_t(n) - k), "thm7.1.4");
                      return MultiPoly::monomial(
                          make_monomial(0, int64_t(k) * (k - 1) / 2, s_exp, 0));
                  },
                  oracle_full(make_pattern_set({"1/23", "13/2"}), false, false));

    add_closed_nk("thm7.1.5", "Theorem 7.1(5)", "F_{n,k}(1/23, 12/3), k in {1, n-1, n}",
                  and_regime(n_ge3, [](int n, int k) { return k == 1 || k == n - 1 || k == n; }),
                  [](int n, int k) {
                      if (k == 1) return MultiPoly::constant(1);
                      if (k == n) return MultiPoly::monomial(make_monomial(0, tri(k), tri(k), 0));
                      return MultiPoly::monomial(make_monomial(k - 1, tri(k), tri(k), k - 1));
                  },
                  oracle_full(make_pattern_set({"1/23", "12/3"}), false, false));

    add_closed_nk("thm7.1.6", "Theorem 7.1(6)", "F_{n,k}(1/23, 123), k in {n-1, n}",
                  and_regime(n_ge3, [](int n, int k) { return k == n - 1 || k == n; }),
                  [](int n, int k) {
                      if (k == n) return MultiPoly::monomial(make_monomial(0, tri(k), tri(k), 0));
                      MultiPoly p;
                      for (int64_t i = 0; i <= n - 2; ++i)
                          p.add_term(make_monomial(i, tri(n - 1), tri(n) - i - 1, i), 1);
                      return p;
                  },
                  oracle_full(make_pattern_set({"1/23", "123"}), false, false));

    add_closed_nk("thm7.1.7", "Theorem 7.1(7)", "F_{n,k}(13/2, 12/3)", n_ge3,
                  [](int n, int k) {
                      if (k == 1) return MultiPoly::constant(1);
                      int64_t r_exp =
                          detail::exact_half(int64_t(k - 1) * (2 * int64_t(n) - k), "thm7.1.7");
                      return MultiPoly::monomial(
                          make_monomial(0, r_exp, int64_t(k - 1) * k / 2, 0));
                  },
                  oracle_full(make_pattern_set({"13/2", "12/3"}), false, false));

    add_closed_nk("thm7.1.8", "Theorem 7.1(8)", "F_{n,k}(13/2, 123) over descending subsets",
                  n_ge3,
                  [](int n, int k) {
                      MultiPoly p;
                      if (n - k > k) return p;
                      for_each_descending_subset(k, n - k, [&](const std::vector<int>& L) {
                          int64_t r_exp = tri(k), s_exp = tri(k);
                          for (int l : L) {
                              r_exp += l - 1;
                              s_exp += k - l;
                          }
                          p.add_term(make_monomial(0, r_exp, s_exp, 0), 1);
                      });
                      return p;
                  },
                  oracle_full(make_pattern_set({"13/2", "123"}), false, false));

    add_closed_nk("thm7.1.9", "Theorem 7.1(9)", "F_{n,k}(12/3, 123), k in {n-1, n}",
                  and_regime(n_ge3, [](int n, int k) { return k == n - 1 || k == n; }),
                  [](int n, int k) {
                      if (k == n)
                          return MultiPoly::monomial(make_monomial(
                              0, int64_t(n) * (n - 1) / 2, int64_t(n) * (n - 1) / 2, 0));
                      MultiPoly p;
                      for (int64_t i = 0; i <= n - 2; ++i)
                          p.add_term(
                              make_monomial(i, int64_t(n) * (n - 1) / 2 - i - 1, tri(n - 1), i),
                              1);
                      return p;
                  },
                  oracle_full(make_pattern_set({"12/3", "123"}), false, false));

    // --------------------------------------------- symmetries, Corollary 7.2

    const std::vector<PatternSet> qt_sets = {
        ps121,
        make_pattern_set({"1/2/3", "13/2"}),
        make_pattern_set({"1/23", "13/2"}),
        make_pattern_set({"13/2", "12/3"}),
        make_pattern_set({"13/2", "123"}),
        make_pattern_set({"1/2/3", "1/23", "13/2"}),
        make_pattern_set({"1/2/3", "12/3", "13/2"}),
        make_pattern_set({"1/23", "12/3", "13/2"}),
        make_pattern_set({"1/23", "13/2", "123"}),
        make_pattern_set({"13/2", "12/3", "123"}),
        make_pattern_set({"1/2/3", "1/23", "12/3", "13/2"}),
        make_pattern_set({"123", "13/2", "1/23", "12/3"}),
        // pairs without 13/2 that the statement also covers
        make_pattern_set({"1/2/3", "1/23"}),
        make_pattern_set({"1/23", "12/3"}),
        make_pattern_set({"1/23", "123"}),
        make_pattern_set({"12/3", "123"}),
    };
    for (const auto& ps : qt_sets) {
        add_symmetry("cor7.2.1." + ps.key(), FormulaLevel::per_nk, "Corollary 7.2(1)",
                     "F_{n,k}(" + ps.key() + ") invariant under q <-> t", ps, Var::q, Var::t,
                     false, n_ge3);
        add_symmetry("cor12.2.1." + ps.key(), FormulaLevel::per_n, "Corollary 12.2(1)",
                     "FE_n(" + ps.key() + ") invariant under q <-> t", ps, Var::q, Var::t, true,
                     n_ge3);
    }
    for (const auto& ps : {make_pattern_set({"1/2/3", "13/2"}), make_pattern_set({"1/23", "12/3"})}) {
        add_symmetry("cor7.2.2." + ps.key(), FormulaLevel::per_nk, "Corollary 7.2(2)",
                     "F_{n,k}(" + ps.key() + ") invariant under r <-> s", ps, Var::r, Var::s,
                     false, n_ge3);
        add_symmetry("cor12.2.2." + ps.key(), FormulaLevel::per_n, "Corollary 12.2(2)",
                     "FE_n(" + ps.key() + ") invariant under r <-> s", ps, Var::r, Var::s, true,
                     n_ge3);
    }

    auto rs_swapped_oracle = [](PatternSet ps, bool equal, bool all_k) {
        return [ps = std::move(ps), equal, all_k](OracleCache& c, int n, int k) {
            return oracle_F(c, n, all_k ? std::nullopt : std::optional<int>(k), ps, equal)
                .swap_vars(MultiPoly::transposition(Var::r, Var::s));
        };
    };
    add_identity("cor7.2.3.a", FormulaLevel::per_nk, "Corollary 7.2(3)",
                 "F_{n,k}(1/23,13/2; q,r,s,t) = F_{n,k}(13/2,12/3; q,s,r,t)", n_ge3,
                 oracle_full(make_pattern_set({"1/23", "13/2"}), false, false),
                 rs_swapped_oracle(make_pattern_set({"13/2", "12/3"}), false, false));
    add_identity("cor7.2.3.b", FormulaLevel::per_nk, "Corollary 7.2(3)",
                 "F_{n,k}(1/23,123; q,r,s,t) = F_{n,k}(12/3,123; q,s,r,t)", n_ge3,
                 oracle_full(make_pattern_set({"1/23", "123"}), false, false),
                 rs_swapped_oracle(make_pattern_set({"12/3", "123"}), false, false));
    add_identity("cor12.2.3", FormulaLevel::per_n, "Corollary 12.2(3)",
                 "FE_n(1/23,13/2; q,r,s,t) = FE_n(13/2,12/3; q,s,r,t)", n_ge3,
                 oracle_full(make_pattern_set({"1/23", "13/2"}), true, true),
                 rs_swapped_oracle(make_pattern_set({"13/2", "12/3"}), true, true));

    // --------------------------------------------------- cardinalities, §1

    add_closed_nk("cor1.3.i", "Corollary 1.3(i)",
                  "#Pi_{n,1}(1/2/3) = 1 and #Pi_{n,2}(1/2/3) = 2^{n-1} - 1",
                  [](int, int k) { return k <= 2; },
                  [ps123](int n, int k) {
                      return MultiPoly::constant(cardinality_closed_form(n, k, ps123));
                  },
                  [ps123](OracleCache& c, int n, int k) {
                      return MultiPoly::constant(oracle_count(c, n, k, ps123));
                  });
    add_closed_nk("cor1.3.ii", "Corollary 1.3(ii)", "#Pi_{n,k}(13/2) = C(n-1,k-1)",
                  [](int, int k) { return k >= 2; },
                  [ps121](int n, int k) {
                      return MultiPoly::constant(cardinality_closed_form(n, k, ps121));
                  },
                  [ps121](OracleCache& c, int n, int k) {
                      return MultiPoly::constant(oracle_count(c, n, k, ps121));
                  });
    add_closed_nk("cor1.3.iii.1-23", "Corollary 1.3(iii)",
                  "#Pi_{n,k}(1/23) = k for k < n, 1 for k = n", any_k,
                  [ps122](int n, int k) {
                      return MultiPoly::constant(cardinality_closed_form(n, k, ps122));
                  },
                  [ps122](OracleCache& c, int n, int k) {
                      return MultiPoly::constant(oracle_count(c, n, k, ps122));
                  });
    add_closed_nk("cor1.3.iii.12-3", "Corollary 1.3(iii)",
                  "#Pi_{n,k}(12/3) = k for k < n, 1 for k = n", any_k,
                  [ps112](int n, int k) {
                      return MultiPoly::constant(cardinality_closed_form(n, k, ps112));
                  },
                  [ps112](OracleCache& c, int n, int k) {
                      return MultiPoly::constant(oracle_count(c, n, k, ps112));
                  });
    add_closed_nk("cor1.3.iv", "Corollary 1.3(iv)",
                  "#Pi_{n,k}(123) = C(n, 2n-2k) (2n-2k)!! with the odd product", any_k,
                  [ps111](int n, int k) {
                      return MultiPoly::constant(cardinality_closed_form(n, k, ps111));
                  },
                  [ps111](OracleCache& c, int n, int k) {
                      return MultiPoly::constant(oracle_count(c, n, k, ps111));
                  });

    // ------------------------------------------- or-equal variants, §§9-12

    auto always = [](int, int) { return true; };

    auto thm91 = [](int n, int) {
        MultiPoly p = MultiPoly::monomial(make_monomial(n - 1, n - 1, n - 1, n - 1));
        p.add_term(make_monomial(0, tri(n), tri(n), 0), 1);
        for (int64_t m = 1; m <= n - 1; ++m)
            for (int64_t j = 1; j <= m; ++j) {
                int64_t qt = j - 1 + n - m;
                int64_t r_exp = tri(m) + (n - m);
                int64_t s_exp = (n - m) * m + (m - j) + tri(m - 1);
                p.add_term(make_monomial(qt, r_exp, s_exp, qt), 1);
            }
        return p;
    };
    add_closed_n("thm9.1", "Theorem 9.1", "FE_n(1/23) as printed", thm91,
                 oracle_full(ps122, true, true), always);

    auto cor92i = [](Var v) {
        return [v](int n, int) {
            MultiPoly p = MultiPoly::constant(1) + var_pow(v, n - 1);
            for (int64_t m = 1; m <= n - 1; ++m) p += var_pow(v, n - m, n - m);
            return p;
        };
    };
    add_closed_n("cor9.2.i.lbe", "Corollary 9.2(i)", "LBE_n(1/23) as printed", cor92i(Var::q),
                 oracle_stat(ps122, StatName::lbe, true), always);
    add_closed_n("cor9.2.i.rse", "Corollary 9.2(i)", "RSE_n(1/23) as printed", cor92i(Var::t),
                 oracle_stat(ps122, StatName::rse, true), always);

    auto cor92ii = [](int n, int) {
        MultiPoly p = var_pow(Var::r, n - 1) + var_pow(Var::r, tri(n));
        for (int64_t m = 1; m <= n - 1; ++m) p += var_pow(Var::r, tri(m) + n - m, m);
        return p;
    };
    add_closed_n("cor9.2.ii.lse", "Corollary 9.2(ii)", "LSE_n(1/23) as printed", cor92ii,
                 oracle_stat(ps122, StatName::lse, true), always);

    auto cor92iii_sum = [](int n) {
        MultiPoly p;
        for (int64_t m = 1; m <= n - 1; ++m)
            for (int64_t j = 1; j <= m; ++j)
                p += var_pow(Var::s, (n - m) * m + (m - j) + tri(m - 1));
        return p;
    };
    auto cor92iii_plus = [cor92iii_sum](int n, int) {
        return var_pow(Var::s, n - 1) + var_pow(Var::s, tri(n)) + cor92iii_sum(n);
    };
    auto cor92iii_rhs = [cor92iii_sum](int n, int) { return cor92iii_sum(n); };
    add_closed_n("cor9.2.iii.rbe.plus", "Corollary 9.2(iii)",
                 "RBE_n(1/23) reading the printed '=' as '+'", cor92iii_plus,
                 oracle_stat(ps122, StatName::rbe, true), always);
    add_closed_n("cor9.2.iii.rbe.rhs", "Corollary 9.2(iii)",
                 "RBE_n(1/23) as the right-hand sum alone", cor92iii_rhs,
                 oracle_stat(ps122, StatName::rbe, true), always);

    auto thm101 = [](int n, int) {
        MultiPoly p = MultiPoly::monomial(make_monomial(0, tri(n), tri(n), 0));
        for (int64_t m = 1; m <= n - 1; ++m)
            for (int64_t i = 1; i <= m; ++i)
                p.add_term(make_monomial((n - m) * (m - i + 1), tri(m) + (n - m) * i - 1,
                                         tri(m) + n - m, n - i),
                           1);
        return p;
    };
    add_closed_n("thm10.1", "Theorem 10.1", "FE_n(12/3) as printed", thm101,
                 oracle_full(ps112, true, true), always);

    auto cor102i = [](int n, int) {
        MultiPoly p = var_pow(Var::r, tri(n));
        for (int64_t m = 1; m <= n - 1; ++m)
            for (int64_t i = 1; i <= m; ++i) p += var_pow(Var::r, tri(m) + (n - m) * i);
        return p;
    };
    add_closed_n("cor10.2.i.lse", "Corollary 10.2(i)", "LSE_n(12/3)", cor102i,
                 oracle_stat(ps112, StatName::lse, true), always);

    auto cor102ii = [](int n, int) {
        MultiPoly p = var_pow(Var::s, tri(n));
        for (int64_t m = 1; m <= n - 1; ++m) p += var_pow(Var::s, tri(m) + n - m, m);
        return p;
    };
    add_closed_n("cor10.2.ii.rbe", "Corollary 10.2(ii)", "RBE_n(12/3)", cor102ii,
                 oracle_stat(ps112, StatName::rbe, true), always);

    auto cor102iii = [](int n, int) {
        MultiPoly p = MultiPoly::constant(1);
        for (int64_t i = 1; i <= n - 1; ++i) p += var_pow(Var::t, n - i);
        return p;
    };
    add_closed_n("cor10.2.iii.rse", "Corollary 10.2(iii)", "RSE_n(12/3) as printed", cor102iii,
                 oracle_stat(ps112, StatName::rse, true), always);

    auto prop103 = [](int n, int) {
        MultiPoly p;
        int64_t bound = int64_t(n) * n / 4;
        for (int64_t i = 0; i <= bound; ++i)
            p += var_pow(Var::q, i, divisor_count(static_cast<int>(i), n));
        return p;
    };
    add_closed_n("prop10.3", "Proposition 10.3", "LBE_n(12/3) via divisor counts, as printed",
                 prop103, oracle_stat(ps112, StatName::lbe, true), always);

    add_identity("prop10.4.i", FormulaLevel::per_n, "Proposition 10.4(i)",
                 "LBE_n(1/23) = RSE_n(12/3)", always, oracle_stat(ps122, StatName::lbe, true),
                 [oracle_stat, ps112](OracleCache& c, int n, int k) {
                     return to_var(oracle_stat(ps112, StatName::rse, true)(c, n, k), Var::t,
                                   Var::q);
                 });
    add_identity("prop10.4.ii", FormulaLevel::per_n, "Proposition 10.4(ii)",
                 "LSE_n(1/23) = RBE_n(12/3)", always, oracle_stat(ps122, StatName::lse, true),
                 [oracle_stat, ps112](OracleCache& c, int n, int k) {
                     return to_var(oracle_stat(ps112, StatName::rbe, true)(c, n, k), Var::s,
                                   Var::r);
                 });

    auto thm111 = [](int n, int) {
        MultiPoly p;
        for (int m = detail::ceil_half(n); m <= n; ++m) {
            for_each_descending_subset(m, n - m, [&](const std::vector<int>& L) {
                int64_t coeff = 1;
                int64_t exp = tri(m);
                for (std::size_t g = 0; g < L.size(); ++g) {
                    coeff = checked_mul(coeff, m - L[g] + static_cast<int64_t>(g) + 1);
                    exp += L[g];
                }
                p += var_pow(Var::r, exp, coeff);
            });
        }
        return p;
    };
    add_closed_n("thm11.1", "Theorem 11.1", "LSE_n(123) over descending subsets", thm111,
                 oracle_stat(ps111, StatName::lse, true), always);

    add_predicate("thm11.2.i", FormulaLevel::per_n, "Theorem 11.2(i)",
                  "degree of LBE_n(123) = floor(n(n+1)/6)", always,
                  [](int n, int) {
                      return MultiPoly::constant(int64_t(n) * (n + 1) / 6);
                  },
                  [oracle_stat, ps111](OracleCache& c, int n, int k) {
                      return MultiPoly::constant(
                          oracle_stat(ps111, StatName::lbe, true)(c, n, k).degree_in(Var::q));
                  });
    add_predicate("thm11.2.ii", FormulaLevel::per_n, "Theorem 11.2(ii)",
                  "leading coefficient of LBE_n(123): k! / (k+1)! / (k-1)! per n mod 3", always,
                  [](int n, int) {
                      int64_t m = n / 3;
                      int64_t claim = 0;
                      if (n % 3 == 0) claim = factorial(m);
                      else if (n % 3 == 1) claim = factorial(m + 1);
                      else claim = factorial(m - 1);
                      return MultiPoly::constant(claim);
                  },
                  [oracle_stat, ps111](OracleCache& c, int n, int k) {
                      return oracle_stat(ps111, StatName::lbe, true)(c, n, k)
                          .leading_coeff_in(Var::q);
                  });

    add_predicate("thm11.3.i", FormulaLevel::per_n, "Theorem 11.3(i)",
                  "constant term of LBE_n(123) = 1", always,
                  [](int, int) { return MultiPoly::constant(1); },
                  [oracle_stat, ps111](OracleCache& c, int n, int k) {
                      return oracle_stat(ps111, StatName::lbe, true)(c, n, k)
                          .constant_term_in(Var::q);
                  });
    add_predicate("thm11.3.ii", FormulaLevel::per_n, "Theorem 11.3(ii)",
                  "coefficient of q in LBE_n(123) = C(n,2)", always,
                  [](int n, int) { return MultiPoly::constant(binom(n, 2)); },
                  [oracle_stat, ps111](OracleCache& c, int n, int k) {
                      return oracle_stat(ps111, StatName::lbe, true)(c, n, k).coeff_in(Var::q, 1);
                  });
    add_predicate("thm11.3.iii", FormulaLevel::per_n, "Theorem 11.3(iii)",
                  "degree of RSE_n(123) = ceil(n^2/4)", always,
                  [](int n, int) {
                      return MultiPoly::constant((int64_t(n) * n + 3) / 4);
                  },
                  [oracle_stat, ps111](OracleCache& c, int n, int k) {
                      return MultiPoly::constant(
                          oracle_stat(ps111, StatName::rse, true)(c, n, k).degree_in(Var::t));
                  });
    add_predicate("thm11.3.iv", FormulaLevel::per_n, "Theorem 11.3(iv)",
                  "constant term of RSE_n(123) = 1", always,
                  [](int, int) { return MultiPoly::constant(1); },
                  [oracle_stat, ps111](OracleCache& c, int n, int k) {
                      return oracle_stat(ps111, StatName::rse, true)(c, n, k)
                          .constant_term_in(Var::t);
                  });
    add_predicate("thm11.3.v", FormulaLevel::per_n, "Theorem 11.3(v)",
                  "leading coefficient of RBE_n(123) = 2", always,
                  [](int, int) { return MultiPoly::constant(2); },
                  [oracle_stat, ps111](OracleCache& c, int n, int k) {
                      return oracle_stat(ps111, StatName::rbe, true)(c, n, k)
                          .leading_coeff_in(Var::s);
                  });

    // ------------------------------------------------- Theorem 12.1 (FE_n)

    add_closed_n("thm12.1.1", "Theorem 12.1(1)", "FE_n(1/2/3, 1/23)",
                 [](int n, int) {
                     MultiPoly p = MultiPoly::monomial(make_monomial(n - 1, n - 1, n - 1, n - 1));
                     p.add_term(make_monomial(n - 2, n - 1, 2 * int64_t(n) - 3, n - 2), 1);
                     p.add_term(make_monomial(n - 1, n - 1, 2 * int64_t(n) - 4, n - 1), 1);
                     return p;
                 },
                 oracle_full(make_pattern_set({"1/2/3", "1/23"}), true, true), n_ge3);
    add_closed_n("thm12.1.2", "Theorem 12.1(2)", "FE_n(1/2/3, 13/2)",
                 [](int n, int) {
                     MultiPoly p = MultiPoly::monomial(make_monomial(n - 1, n - 1, n - 1, n - 1));
                     for (int64_t m = 1; m <= n - 1; ++m)
                         p.add_term(make_monomial(n - 2, 2 * int64_t(n) - m - 2, m + n - 2, n - 2),
                                    1);
                     return p;
                 },
                 oracle_full(make_pattern_set({"1/2/3", "13/2"}), true, true), n_ge3);
    add_closed_n("thm12.1.3", "Theorem 12.1(3)", "FE_n(1/2/3, 12/3)",
                 [](int n, int) {
                     MultiPoly p = MultiPoly::monomial(make_monomial(n - 1, n - 1, n - 1, n - 1));
                     p.add_term(make_monomial(n - 2, 2 * int64_t(n) - 3, n - 1, n - 2), 1);
                     p.add_term(make_monomial(2 * int64_t(n) - 4, n - 1, n - 1, n - 1), 1);
                     return p;
                 },
                 oracle_full(make_pattern_set({"1/2/3", "12/3"}), true, true), n_ge3);
    add_closed_n("thm12.1.4", "Theorem 12.1(4)", "FE_n(1/23, 13/2) as printed",
                 [](int n, int) {
                     MultiPoly p = MultiPoly::monomial(make_monomial(n - 1, n - 1, n - 1, n - 1));
                     for (int64_t i = 1; i <= n - 1; ++i) {
                         int64_t e = n - i - 1;
                         p.add_term(make_monomial(e, binom(n - i + 1, 2) + e,
                                                  tri(n) - binom(i, 2) + e, e),
                                    1);
                     }
                     return p;
                 },
                 oracle_full(make_pattern_set({"1/23", "13/2"}), true, true), n_ge3);
    add_closed_n("thm12.1.5", "Theorem 12.1(5)", "FE_n(1/23, 123)",
                 [](int n, int) {
                     MultiPoly p = MultiPoly::monomial(make_monomial(0, tri(n), tri(n), 0));
                     for (int64_t i = 0; i <= n - 2; ++i)
                         p.add_term(make_monomial(i + 1, tri(n - 1) + 1, tri(n) - i, i + 1), 1);
                     return p;
                 },
                 oracle_full(make_pattern_set({"1/23", "123"}), true, true), n_ge3);
    add_closed_n("thm12.1.6", "Theorem 12.1(6)", "FE_n(13/2, 12/3) as printed",
                 [](int n, int) {
                     MultiPoly p = MultiPoly::monomial(make_monomial(n - 1, n - 1, n - 1, n - 1));
                     for (int64_t i = 1; i <= n - 1; ++i) {
                         int64_t e = n - i - 1;
                         p.add_term(make_monomial(e, tri(n) - binom(i, 2) + e,
                                                  binom(n - i + 1, 2) + e, e),
                                    1);
                     }
                     return p;
                 },
                 oracle_full(make_pattern_set({"13/2", "12/3"}), true, true), n_ge3);

    // --------------------------------------------------- §13 word patterns

    add_identity("sec13.lbe.112-eq-122", FormulaLevel::per_n, "Section 13",
                 "LBE_n(112) = LBE_n(122) on word-pattern classes", always,
                 oracle_stat(w112, StatName::lbe, true), oracle_stat(w122, StatName::lbe, true));
    add_identity("sec13.lse.112-eq-121", FormulaLevel::per_n, "Section 13",
                 "LSE_n(112) = LSE_n(121) on word-pattern classes", always,
                 oracle_stat(w112, StatName::lse, true), oracle_stat(w121, StatName::lse, true));
    add_identity("sec13.lse.112-eq-122", FormulaLevel::per_n, "Section 13",
                 "LSE_n(112) = LSE_n(122) on word-pattern classes, as printed", always,
                 oracle_stat(w112, StatName::lse, true), oracle_stat(w122, StatName::lse, true));
    add_identity("sec13.rbe112-eq-lse122", FormulaLevel::per_n, "Section 13",
                 "RBE_n(112) = LSE_n(122) on word-pattern classes", always,
                 oracle_stat(w112, StatName::rbe, true),
                 [oracle_stat, w122](OracleCache& c, int n, int k) {
                     return to_var(oracle_stat(w122, StatName::lse, true)(c, n, k), Var::r,
                                   Var::s);
                 });

    auto sec13rbe = [](int n, int) {
        MultiPoly p;
        for (int64_t m = 0; m <= n; ++m) {
            int64_t c = binom(n - 1, n - m);
            if (c == 0) continue;
            p += var_pow(Var::s, tri(m) + (n - m), c);
        }
        return p;
    };
    add_closed_n("sec13.rbe112", "Section 13 closed form",
                 "RBE_n(112) = sum_m C(n-1, n-m) s^{C(m,2)+(n-m)}", sec13rbe,
                 oracle_stat(w112, StatName::rbe, true), always);

    // ------------------------------------------------ §8 note, LBE degree

    add_predicate("note8.ii.lbe-degree", FormulaLevel::per_nk, "Section 8 note (ii)",
                  "degree of LBE_{n,k}(123) = ((4n-1)k - 3k^2 - n^2 + n)/2", nonempty_123_class,
                  [](int n, int k) {
                      int64_t num = (4 * int64_t(n) - 1) * k - 3 * int64_t(k) * k +
                                    int64_t(n) - int64_t(n) * n;
                      return MultiPoly::constant(detail::exact_half(num, "note8.ii"));
                  },
                  [oracle_stat, ps111](OracleCache& c, int n, int k) {
                      return MultiPoly::constant(
                          oracle_stat(ps111, StatName::lbe, false)(c, n, k).degree_in(Var::q));
                  });

    // ------------------------------------------- specialization coherence

    struct CoherenceRow {
        const char* id;
        const char* anchor;
        FormulaLevel level;
        std::function<bool(int, int)> regime;
        std::function<MultiPoly(int, int)> corollary;
        std::function<MultiPoly(int, int)> parent;
        Var keep;
    };

    const auto nk = FormulaLevel::per_nk;
    const auto pn = FormulaLevel::per_n;
    auto one_const = [](int, int) { return MultiPoly::constant(1); };
    std::vector<CoherenceRow> rows = {
        {"coh.cor2.2.ii.lb", "Corollary 2.2(ii) vs Theorem 2.1(ii)", nk, k_is(2),
         cor22ii(Var::q), thm21ii, Var::q},
        {"coh.cor2.2.ii.rs", "Corollary 2.2(ii) vs Theorem 2.1(ii)", nk, k_is(2),
         cor22ii(Var::t), thm21ii, Var::t},
        {"coh.cor2.2.iii.ls", "Corollary 2.2(iii) vs Theorem 2.1(ii)", nk, k_is(2),
         cor22iii(Var::r), thm21ii, Var::r},
        {"coh.cor2.2.iii.rb", "Corollary 2.2(iii) vs Theorem 2.1(ii)", nk, k_is(2),
         cor22iii(Var::s), thm21ii, Var::s},
        {"coh.cor3.2.i.lb", "Corollary 3.2(i) vs Theorem 3.1(i)", nk, k_eq_n, one_const, thm31,
         Var::q},
        {"coh.cor3.2.i.rs", "Corollary 3.2(i) vs Theorem 3.1(i)", nk, k_eq_n, one_const, thm31,
         Var::t},
        {"coh.cor3.2.ii.lb", "Corollary 3.2(ii) vs Theorem 3.1(ii)", nk, k_lt_n,
         cor32ii(Var::q), thm31, Var::q},
        {"coh.cor3.2.ii.rs", "Corollary 3.2(ii) vs Theorem 3.1(ii)", nk, k_lt_n,
         cor32ii(Var::t), thm31, Var::t},
        {"coh.cor3.2.iii.ls", "Corollary 3.2(iii) vs Theorem 3.1", nk, any_k, cor32iii, thm31,
         Var::r},
        {"coh.cor3.2.iv.rb", "Corollary 3.2(iv) vs Theorem 3.1", nk, any_k, cor32iv, thm31,
         Var::s},
        {"coh.cor4.2.i.lb.kminus1", "Corollary 4.2(i) vs Theorem 4.1", nk, any_k,
         cor42i(Var::q), thm41(false), Var::q},
        {"coh.cor4.2.i.lb.as-printed", "Corollary 4.2(i) vs Theorem 4.1", nk, any_k,
         cor42i(Var::q), thm41(true), Var::q},
        {"coh.cor4.2.i.rs.kminus1", "Corollary 4.2(i) vs Theorem 4.1", nk, any_k,
         cor42i(Var::t), thm41(false), Var::t},
        {"coh.cor4.2.i.rs.as-printed", "Corollary 4.2(i) vs Theorem 4.1", nk, any_k,
         cor42i(Var::t), thm41(true), Var::t},
        {"coh.cor4.2.ii.ls.kminus1", "Corollary 4.2(ii) vs Theorem 4.1", nk, any_k,
         cor42ii(false), thm41(false), Var::r},
        {"coh.cor4.2.ii.ls.as-printed", "Corollary 4.2(ii) vs Theorem 4.1", nk, any_k,
         cor42ii(true), thm41(true), Var::r},
        {"coh.cor4.2.iii.rb.kminus1", "Corollary 4.2(iii) vs Theorem 4.1", nk, any_k,
         cor42iii(false), thm41(false), Var::s},
        {"coh.cor4.2.iii.rb.as-printed", "Corollary 4.2(iii) vs Theorem 4.1", nk, any_k,
         cor42iii(true), thm41(true), Var::s},
        {"coh.cor5.2.i.ls", "Corollary 5.2(i) vs Theorem 5.1(i)", nk, k_eq_n, cor52i, thm51,
         Var::r},
        {"coh.cor5.2.ii.ls", "Corollary 5.2(ii) vs Theorem 5.1(ii)", nk, k_lt_n, cor52ii, thm51,
         Var::r},
        {"coh.cor5.2.iii.rb", "Corollary 5.2(iii) vs Theorem 5.1", nk, any_k, cor52iii, thm51,
         Var::s},
        {"coh.cor5.2.iv.rs", "Corollary 5.2(iv) vs Theorem 5.1", nk, any_k, cor52iv, thm51,
         Var::t},
        {"coh.cor9.2.i.lbe", "Corollary 9.2(i) vs Theorem 9.1", pn, always, cor92i(Var::q),
         thm91, Var::q},
        {"coh.cor9.2.i.rse", "Corollary 9.2(i) vs Theorem 9.1", pn, always, cor92i(Var::t),
         thm91, Var::t},
        {"coh.cor9.2.ii.lse", "Corollary 9.2(ii) vs Theorem 9.1", pn, always, cor92ii, thm91,
         Var::r},
        {"coh.cor9.2.iii.rbe.plus", "Corollary 9.2(iii) vs Theorem 9.1", pn, always,
         cor92iii_plus, thm91, Var::s},
        {"coh.cor10.2.i.lse", "Corollary 10.2(i) vs Theorem 10.1", pn, always, cor102i, thm101,
         Var::r},
        {"coh.cor10.2.ii.rbe", "Corollary 10.2(ii) vs Theorem 10.1", pn, always, cor102ii,
         thm101, Var::s},
        {"coh.cor10.2.iii.rse", "Corollary 10.2(iii) vs Theorem 10.1", pn, always, cor102iii,
         thm101, Var::t},
    };
    for (auto& row : rows) {
        add_coherence(row.id, row.anchor,
                      "single-statistic corollary equals the specialization of its theorem",
                      row.level, row.regime, row.corollary, row.parent, row.keep);
    }

    return reg;
}

} // namespace rgfstat
