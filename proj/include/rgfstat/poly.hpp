#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>

#include <json.hpp>

#include "errors.hpp"
#include "ints.hpp"

namespace rgfstat {

enum class Var : int { q = 0, r = 1, s = 2, t = 3 };

inline const char* to_cstring(Var v) {
    switch (v) {
        case Var::q: return "q";
        case Var::r: return "r";
        case Var::s: return "s";
        case Var::t: return "t";
    }
    return "?";
}

/// Exponent tuple (e_q, e_r, e_s, e_t).
struct Monomial {
    std::array<std::uint32_t, 4> e{0, 0, 0, 0};

    std::uint64_t degree() const {
        return std::uint64_t(e[0]) + e[1] + e[2] + e[3];
    }
    bool operator==(const Monomial&) const = default;
};

/// Canonical term order: graded, then lexicographic on (e_q, e_r, e_s, e_t).
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.e < b.e;
    }
};

/// Sparse polynomial in (q, r, s, t) with signed 64-bit coefficients; zero
/// coefficients are never stored, so equality is structural.
class MultiPoly {
public:
    using Terms = std::map<Monomial, std::int64_t, MonomialLess>;

    MultiPoly() = default;

    static MultiPoly zero() { return MultiPoly(); }
    static MultiPoly constant(std::int64_t c) {
        MultiPoly p;
        p.add_term(Monomial{}, c);
        return p;
    }
    static MultiPoly monomial(Monomial m, std::int64_t c = 1) {
        MultiPoly p;
        p.add_term(m, c);
        return p;
    }
    static MultiPoly variable(Var v, std::uint32_t exp = 1, std::int64_t c = 1) {
        Monomial m;
        m.e[static_cast<int>(v)] = exp;
        return monomial(m, c);
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Monomial& m, std::int64_t c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second = checked_add(it->second, c);
            if (it->second == 0) terms_.erase(it);
        }
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, checked_mul(c, -1));
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m;
                for (int i = 0; i < 4; ++i) m.e[i] = ma.e[i] + mb.e[i];
                out.add_term(m, checked_mul(ca, cb));
            }
        return out;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly pow(std::uint32_t n) const {
        MultiPoly acc = constant(1);
        for (std::uint32_t i = 0; i < n; ++i) acc *= *this;
        return acc;
    }

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

    /// Set every variable outside `keep` to 1 (their exponents dropped).
    MultiPoly specialize(std::initializer_list<Var> keep) const {
        bool keep_flag[4] = {false, false, false, false};
        for (Var v : keep) keep_flag[static_cast<int>(v)] = true;
        MultiPoly out;
        for (const auto& [m, c] : terms_) {
            Monomial nm;
            for (int i = 0; i < 4; ++i) nm.e[i] = keep_flag[i] ? m.e[i] : 0;
            out.add_term(nm, c);
        }
        return out;
    }

    /// Apply a permutation of {q,r,s,t}: the exponent of v moves to perm[v].
    MultiPoly swap_vars(const std::array<Var, 4>& perm) const {
        bool hit[4] = {false, false, false, false};
        for (Var v : perm) hit[static_cast<int>(v)] = true;
        if (!(hit[0] && hit[1] && hit[2] && hit[3]))
            throw DomainError("swap_vars requires a permutation of {q,r,s,t}");
        MultiPoly out;
        for (const auto& [m, c] : terms_) {
            Monomial nm;
            for (int i = 0; i < 4; ++i) nm.e[static_cast<int>(perm[i])] = m.e[i];
            out.add_term(nm, c);
        }
        return out;
    }

    static std::array<Var, 4> transposition(Var a, Var b) {
        std::array<Var, 4> perm{Var::q, Var::r, Var::s, Var::t};
        perm[static_cast<int>(a)] = b;
        perm[static_cast<int>(b)] = a;
        return perm;
    }

    std::int64_t degree_in(Var v) const {
        if (is_zero()) throw ZeroPolynomialError("degree of the zero polynomial");
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.e[static_cast<int>(v)]);
        return d;
    }

    /// Terms whose v-exponent equals `exp`, with v stripped out.
    MultiPoly coeff_in(Var v, std::uint32_t exp) const {
        MultiPoly out;
        for (const auto& [m, c] : terms_)
            if (m.e[static_cast<int>(v)] == exp) {
                Monomial nm = m;
                nm.e[static_cast<int>(v)] = 0;
                out.add_term(nm, c);
            }
        return out;
    }

    MultiPoly leading_coeff_in(Var v) const {
        return coeff_in(v, static_cast<std::uint32_t>(degree_in(v)));
    }

    MultiPoly constant_term_in(Var v) const { return coeff_in(v, 0); }

    /// Value at q=r=s=t=1, i.e. the sum of coefficients.
    std::int64_t eval_all_ones() const {
        std::int64_t total = 0;
        for (const auto& [m, c] : terms_) total = checked_add(total, c);
        return total;
    }

    /// The value of a constant polynomial (throws if any variable survives).
    std::int64_t as_constant() const {
        if (is_zero()) return 0;
        if (terms_.size() != 1 || terms_.begin()->first.degree() != 0)
            throw DomainError("polynomial is not constant");
        return terms_.begin()->second;
    }

    std::string to_text() const { return render(true); }
    std::string to_latex() const { return render(false); }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json terms = nlohmann::ordered_json::array();
        for (const auto& [m, c] : terms_) {
            nlohmann::ordered_json term;
            term["q"] = m.e[0];
            term["r"] = m.e[1];
            term["s"] = m.e[2];
            term["t"] = m.e[3];
            term["c"] = c;
            terms.push_back(std::move(term));
        }
        nlohmann::ordered_json out;
        out["terms"] = std::move(terms);
        return out;
    }

    static MultiPoly from_json(const nlohmann::json& j) {
        MultiPoly p;
        for (const auto& term : j.at("terms")) {
            Monomial m;
            m.e[0] = term.at("q").get<std::uint32_t>();
            m.e[1] = term.at("r").get<std::uint32_t>();
            m.e[2] = term.at("s").get<std::uint32_t>();
            m.e[3] = term.at("t").get<std::uint32_t>();
            p.add_term(m, term.at("c").get<std::int64_t>());
        }
        return p;
    }

private:
    std::string render(bool text_mode) const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            std::int64_t coeff = c;
            if (first) {
                if (coeff < 0) {
                    out += "-";
                    coeff = -coeff;
                }
                first = false;
            } else {
                out += coeff < 0 ? " - " : " + ";
                if (coeff < 0) coeff = -coeff;
            }
            std::string vars;
            for (int i = 0; i < 4; ++i) {
                if (m.e[i] == 0) continue;
                if (!vars.empty() && text_mode) vars += '*';
                vars += to_cstring(static_cast<Var>(i));
                if (m.e[i] > 1)
                    vars += text_mode ? "^" + std::to_string(m.e[i])
                                      : "^{" + std::to_string(m.e[i]) + "}";
            }
            if (vars.empty()) {
                out += std::to_string(coeff);
            } else {
                if (coeff != 1) out += std::to_string(coeff) + (text_mode ? "*" : "");
                out += vars;
            }
        }
        return out;
    }

    Terms terms_;
};

/// Shorthand builders used all over the formula registry.
inline MultiPoly var_pow(Var v, std::int64_t exp, std::int64_t c = 1) {
    if (exp < 0) throw DomainError("monomial exponents must be nonnegative");
    return MultiPoly::variable(v, static_cast<std::uint32_t>(exp), c);
}
inline MultiPoly Q(std::int64_t exp, std::int64_t c = 1) { return var_pow(Var::q, exp, c); }
inline MultiPoly R(std::int64_t exp, std::int64_t c = 1) { return var_pow(Var::r, exp, c); }
inline MultiPoly S(std::int64_t exp, std::int64_t c = 1) { return var_pow(Var::s, exp, c); }
inline MultiPoly T(std::int64_t exp, std::int64_t c = 1) { return var_pow(Var::t, exp, c); }

inline Monomial make_monomial(std::int64_t eq, std::int64_t er, std::int64_t es, std::int64_t et) {
    if (eq < 0 || er < 0 || es < 0 || et < 0)
        throw DomainError("monomial exponents must be nonnegative");
    Monomial m;
    m.e = {static_cast<std::uint32_t>(eq), static_cast<std::uint32_t>(er),
           static_cast<std::uint32_t>(es), static_cast<std::uint32_t>(et)};
    return m;
}

} // namespace rgfstat
