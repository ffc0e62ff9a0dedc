#pragma once

// Sparse multivariate polynomials: a finite map exponent-vector -> nonzero
// coefficient over a fixed ordered variable list. std::map keys give a
// canonical (lex over exponent vectors) term order, so iteration, printing
// and serialization are deterministic.

#include "sislne/number_field.hpp"

#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace sislne {

template <class C>
class MPoly {
public:
    using Exp = std::vector<int>;
    using ops = ring_ops<C>;

    MPoly() = default;
    explicit MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MPoly constant(std::vector<std::string> vars, C value) {
        MPoly p(std::move(vars));
        p.add_term(Exp(p.vars_.size(), 0), std::move(value));
        return p;
    }
    static MPoly variable(std::vector<std::string> vars, size_t index) {
        MPoly p(std::move(vars));
        Exp e(p.vars_.size(), 0);
        e.at(index) = 1;
        p.add_term(e, ops::one());
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    size_t nvars() const { return vars_.size(); }
    const std::map<Exp, C>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(const Exp& e, const C& c) {
        assert(e.size() == vars_.size());
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!ops::is_zero(c)) terms_.emplace(e, c);
        } else {
            it->second = ops::add(it->second, c);
            if (ops::is_zero(it->second)) terms_.erase(it);
        }
    }

    C coeff(const Exp& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? ops::zero() : it->second;
    }

    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
        return d;
    }
    int degree_in(size_t var) const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
        return d;
    }

    bool is_homogeneous() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int td = std::accumulate(e.begin(), e.end(), 0);
            if (d < 0) d = td;
            if (td != d) return false;
        }
        return true;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, ops::neg(c));
        return r;
    }
    MPoly operator-() const {
        MPoly r(vars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, ops::neg(c));
        return r;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r(a.vars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exp e(ea.size());
                for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ops::mul(ca, cb));
            }
        return r;
    }
    MPoly scaled(const C& s) const {
        MPoly r(vars_);
        if (ops::is_zero(s)) return r;
        for (const auto& [e, c] : terms_) r.add_term(e, ops::mul(c, s));
        return r;
    }
    MPoly pow(unsigned n) const {
        MPoly acc = constant(vars_, ops::one());
        MPoly base = *this;
        while (n) {
            if (n & 1u) acc = acc * base;
            if (n >>= 1u) base = base * base;
        }
        return acc;
    }
    bool operator==(const MPoly& o) const { return (*this - o).is_zero(); }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly partial_derivative(size_t var) const {
        MPoly r(vars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exp d = e;
            d[var] -= 1;
            C f = ops::zero();
            for (int i = 0; i < e[var]; ++i) f = ops::add(f, ops::one());
            r.add_term(d, ops::mul(c, f));
        }
        return r;
    }

    std::map<int, MPoly> homogeneous_components() const {
        std::map<int, MPoly> out;
        for (const auto& [e, c] : terms_) {
            int d = std::accumulate(e.begin(), e.end(), 0);
            auto it = out.find(d);
            if (it == out.end()) it = out.emplace(d, MPoly(vars_)).first;
            it->second.add_term(e, c);
        }
        return out;
    }

    // Substitute images[i] for variable i; images live over a common
    // variable list of their own.
    MPoly compose(const std::vector<MPoly>& images) const {
        assert(images.size() == vars_.size());
        std::vector<std::string> tvars = images.empty() ? vars_ : images[0].vars();
        // precompute powers per variable up to max exponent
        std::vector<std::vector<MPoly>> pw(vars_.size());
        for (size_t v = 0; v < vars_.size(); ++v) {
            int dmax = degree_in(v);
            pw[v].push_back(constant(tvars, ops::one()));
            for (int i = 1; i <= dmax; ++i) pw[v].push_back(pw[v].back() * images[v]);
        }
        MPoly r(tvars);
        for (const auto& [e, c] : terms_) {
            MPoly term = constant(tvars, c);
            for (size_t v = 0; v < vars_.size(); ++v)
                if (e[v] > 0) term = term * pw[v][static_cast<size_t>(e[v])];
            r = r + term;
        }
        return r;
    }

    C eval(const std::vector<C>& point) const {
        assert(point.size() == vars_.size());
        std::vector<std::vector<C>> pw(vars_.size());
        for (size_t v = 0; v < vars_.size(); ++v) {
            int dmax = degree_in(v);
            pw[v].push_back(ops::one());
            for (int i = 1; i <= dmax; ++i) pw[v].push_back(ops::mul(pw[v].back(), point[v]));
        }
        C acc = ops::zero();
        for (const auto& [e, c] : terms_) {
            C t = c;
            for (size_t v = 0; v < vars_.size(); ++v)
                if (e[v] > 0) t = ops::mul(t, pw[v][static_cast<size_t>(e[v])]);
            acc = ops::add(acc, t);
        }
        return acc;
    }

    // View as univariate in `var` with MPoly coefficients (in all vars,
    // exponent of `var` zeroed). Used to build bivariate resultants.
    UPoly<MPoly> collect(size_t var) const {
        int d = degree_in(var);
        if (d < 0) return UPoly<MPoly>();
        std::vector<MPoly> cs(static_cast<size_t>(d + 1), MPoly(vars_));
        for (const auto& [e, c] : terms_) {
            Exp r = e;
            int k = r[var];
            r[var] = 0;
            cs[static_cast<size_t>(k)].add_term(r, c);
        }
        return UPoly<MPoly>(std::move(cs));
    }

private:
    std::vector<std::string> vars_;
    std::map<Exp, C> terms_;
};

template <class C>
struct ring_ops<MPoly<C>> {
    using P = MPoly<C>;
    static P zero() { return P(); } // empty var list unifies on use
    static P one() { return P::constant({}, ring_ops<C>::one()); }
    static bool is_zero(const P& a) { return a.is_zero(); }
    static bool is_zero_pivot(const P& a) { return a.is_zero(); }
    static P neg(const P& a) { return -a; }
    static P add(const P& a, const P& b) { return unify2(a, b, 0); }
    static P sub(const P& a, const P& b) { return unify2(a, b, 1); }
    static P mul(const P& a, const P& b) { return unify2(a, b, 2); }
    // Exact multivariate division by leading-term elimination (lex order);
    // throws if the division is not exact.
    static P exact_div(const P& a, const P& b) {
        if (b.is_zero()) throw std::domain_error("division by zero polynomial");
        P rem = a, quot = P(pick_vars(a, b));
        if (rem.is_zero()) return quot;
        rem = unify2(rem, quot, 0) - quot; // normalize var list
        P bb = unify2(b, quot, 0) - quot;
        while (!rem.is_zero()) {
            const auto& [re, rc] = *rem.terms().rbegin();
            const auto& [be, bc] = *bb.terms().rbegin();
            typename P::Exp qe(re.size());
            for (size_t i = 0; i < re.size(); ++i) {
                qe[i] = re[i] - be[i];
                if (qe[i] < 0) throw std::logic_error("inexact multivariate division");
            }
            P t(quot.vars());
            t.add_term(qe, ring_ops<C>::exact_div(rc, bc));
            quot = quot + t;
            rem = rem - t * bb;
        }
        return quot;
    }
    static constexpr bool is_field = false;

private:
    static std::vector<std::string> pick_vars(const P& a, const P& b) {
        return a.vars().empty() ? b.vars() : a.vars();
    }
    static P promote(const P& p, const std::vector<std::string>& vars) {
        if (p.vars().size() == vars.size()) return p;
        assert(p.is_zero() || p.vars().empty());
        P r(vars);
        for (const auto& [e, c] : p.terms()) {
            typename P::Exp ee(vars.size(), 0);
            r.add_term(ee, c);
        }
        return r;
    }
    static P unify2(const P& a, const P& b, int op) {
        auto vars = pick_vars(a, b);
        P aa = promote(a, vars), bb = promote(b, vars);
        if (op == 0) return aa + bb;
        if (op == 1) return aa - bb;
        return aa * bb;
    }
};

using QMPoly = MPoly<Rational>;
using NFMPoly = MPoly<NFElem>;

inline NFMPoly lift_to_field(const QMPoly& p) {
    NFMPoly r(p.vars());
    for (const auto& [e, c] : p.terms()) r.add_term(e, NFElem(c));
    return r;
}

inline std::string mpoly_to_string(const QMPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    // highest lex term first reads most naturally
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        std::string cs = to_string(c);
        bool neg = cs[0] == '-';
        if (!out.empty()) {
            out += neg ? " - " : " + ";
            if (neg) cs = cs.substr(1);
        }
        bool has_var = false;
        std::string mono;
        for (size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (has_var) mono += "*";
            mono += p.vars()[v];
            if (e[v] > 1) mono += "^" + std::to_string(e[v]);
            has_var = true;
        }
        if (!has_var)
            out += cs;
        else if (cs == "1")
            out += mono;
        else if (cs == "-1")
            out += "-" + mono;
        else
            out += cs + "*" + mono;
    }
    return out;
}

} // namespace sislne
