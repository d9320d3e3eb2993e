#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "patterns.hpp"
#include "poly.hpp"
#include "statistics.hpp"

namespace rgfstat {

inline Var stat_variable(StatName s) {
    switch (s) {
        case StatName::lb:
        case StatName::lbe: return Var::q;
        case StatName::ls:
        case StatName::lse: return Var::r;
        case StatName::rb:
        case StatName::rbe: return Var::s;
        case StatName::rs:
        case StatName::rse: return Var::t;
    }
    return Var::q;
}

/// Everything the brute-force sweep learns about one (pattern set, n) pair:
/// the four-variable distributions per block count and their sums over k,
/// for both the standard and the or-equal statistics.
struct ClassPolys {
    int n = 0;
    std::vector<MultiPoly> f_by_k;  // index k-1
    std::vector<MultiPoly> fe_by_k;
    MultiPoly f_all, fe_all;
    std::vector<std::int64_t> count_by_k;
    std::int64_t count_all = 0;
};

/// One pass over R_n, bucketing monomials by max letter.
inline ClassPolys sweep_class(int n, const PatternSet& ps) {
    ClassPolys out;
    out.n = n;
    out.f_by_k.assign(static_cast<std::size_t>(n), MultiPoly{});
    out.fe_by_k.assign(static_cast<std::size_t>(n), MultiPoly{});
    out.count_by_k.assign(static_cast<std::size_t>(n), 0);
    for_each_avoiding(n, std::nullopt, ps, [&](const Letters& letters) {
        RgfWord w{letters};
        std::size_t slot = static_cast<std::size_t>(w.max_letter() - 1);
        StatVector v = stat_vector(w, false);
        StatVector ve = stat_vector(w, true);
        out.f_by_k[slot].add_term(make_monomial(v.lb, v.ls, v.rb, v.rs), 1);
        out.fe_by_k[slot].add_term(make_monomial(ve.lb, ve.ls, ve.rb, ve.rs), 1);
        out.count_by_k[slot] = checked_add(out.count_by_k[slot], 1);
    });
    for (int k = 1; k <= n; ++k) {
        out.f_all += out.f_by_k[static_cast<std::size_t>(k - 1)];
        out.fe_all += out.fe_by_k[static_cast<std::size_t>(k - 1)];
        out.count_all = checked_add(out.count_all, out.count_by_k[static_cast<std::size_t>(k - 1)]);
    }
    return out;
}

/// Memoized brute-force results, shared by verify cells and the CLI. Safe for
/// concurrent get() once the needed keys are precomputed; otherwise a coarse
/// lock serializes the sweeps.
class OracleCache {
public:
    const ClassPolys& get(const PatternSet& ps, int n) {
        Key key{ps.key(), n};
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = store_.find(key);
            if (it != store_.end()) return *it->second;
        }
        auto computed = std::make_shared<ClassPolys>(sweep_class(n, ps));
        std::lock_guard<std::mutex> lock(mutex_);
        auto [it, inserted] = store_.emplace(key, std::move(computed));
        return *it->second;
    }

private:
    using Key = std::pair<std::string, int>;
    std::map<Key, std::shared_ptr<ClassPolys>> store_;
    std::mutex mutex_;
};

/// F_{n,k}(ps) (or FE with equal_variant), the definitional sum of
/// q^lb r^ls s^rb t^rs over the avoidance class; k omitted sums over all k.
inline MultiPoly oracle_F(OracleCache& cache, int n, std::optional<int> k, const PatternSet& ps,
                          bool equal_variant) {
    if (n < 1) throw DomainError("oracle requires n >= 1");
    if (k && (*k < 1 || *k > n)) throw DomainError("oracle requires 1 <= k <= n");
    const ClassPolys& c = cache.get(ps, n);
    if (!k) return equal_variant ? c.fe_all : c.f_all;
    return equal_variant ? c.fe_by_k[static_cast<std::size_t>(*k - 1)]
                         : c.f_by_k[static_cast<std::size_t>(*k - 1)];
}

/// Single-statistic generating function in the statistic's own variable
/// (lb -> q, ls -> r, rb -> s, rs -> t); or-equal names imply the
/// or-equal distribution.
inline MultiPoly oracle_single(OracleCache& cache, int n, std::optional<int> k,
                               const PatternSet& ps, StatName stat) {
    MultiPoly f = oracle_F(cache, n, k, ps, is_equal_variant(stat));
    return f.specialize({stat_variable(stat)});
}

inline std::int64_t oracle_count(OracleCache& cache, int n, std::optional<int> k,
                                 const PatternSet& ps) {
    const ClassPolys& c = cache.get(ps, n);
    return k ? c.count_by_k[static_cast<std::size_t>(*k - 1)] : c.count_all;
}

} // namespace rgfstat
