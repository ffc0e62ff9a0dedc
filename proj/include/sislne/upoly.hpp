#pragma once

// Dense univariate polynomials over an exact coefficient ring, plus the
// resultant/gcd/squarefree kernel shared by every exact computation here.
//
// Coefficient requirements are expressed through ring_ops<K>:
//   zero/one/is_zero/neg/add/sub/mul  always,
//   exact_div                         for fraction-free (Bareiss) elimination,
//   inv                               for field algorithms (gcd, monic, divmod).
// Over a number field with a reducible modulus, inv may throw SplitEvent
// (see number_field.hpp); every algorithm below is written so that a split
// can only surface through those inversions and zero tests.

#include "sislne/rational.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <stdexcept>
#include <vector>

namespace sislne {

template <class K>
struct ring_ops; // specialized per coefficient type

template <>
struct ring_ops<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& a) { return a.is_zero(); }
    // Pivot-usability test; identical to is_zero for honest fields.
    static bool is_zero_pivot(const Rational& a) { return a.is_zero(); }
    static Rational neg(const Rational& a) { return -a; }
    static Rational add(const Rational& a, const Rational& b) { return a + b; }
    static Rational sub(const Rational& a, const Rational& b) { return a - b; }
    static Rational mul(const Rational& a, const Rational& b) { return a * b; }
    static Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
    static Rational inv(const Rational& a) {
        if (a.is_zero()) throw std::domain_error("division by zero");
        return 1 / a;
    }
    static constexpr bool is_field = true;
};

template <class K>
class UPoly {
public:
    using ops = ring_ops<K>;

    UPoly() = default;
    explicit UPoly(std::vector<K> ascending) : c_(std::move(ascending)) { trim(); }
    static UPoly constant(K v) { return UPoly(std::vector<K>{std::move(v)}); }
    static UPoly variable() { return UPoly(std::vector<K>{ops::zero(), ops::one()}); }
    static UPoly zero() { return UPoly(); }

    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<K>& coeffs() const { return c_; }
    const K& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
    K coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(i)]
                                                           : ops::zero();
    }
    const K& lc() const {
        assert(!c_.empty());
        return c_.back();
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), ops::zero());
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = ops::add(r[i], b.c_[i]);
        return UPoly(std::move(r));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), ops::zero());
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = ops::sub(r[i], b.c_[i]);
        return UPoly(std::move(r));
    }
    UPoly operator-() const {
        std::vector<K> r;
        r.reserve(c_.size());
        for (const K& x : c_) r.push_back(ops::neg(x));
        return UPoly(std::move(r));
    }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, ops::zero());
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = ops::add(r[i + j], ops::mul(a.c_[i], b.c_[j]));
        return UPoly(std::move(r));
    }
    UPoly scaled(const K& s) const {
        std::vector<K> r;
        r.reserve(c_.size());
        for (const K& x : c_) r.push_back(ops::mul(x, s));
        return UPoly(std::move(r));
    }
    // multiply by the variable^n
    UPoly shifted_up(int n) const {
        if (is_zero()) return UPoly();
        std::vector<K> r(c_.size() + static_cast<size_t>(n), ops::zero());
        for (size_t i = 0; i < c_.size(); ++i) r[i + static_cast<size_t>(n)] = c_[i];
        return UPoly(std::move(r));
    }

    bool operator==(const UPoly& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (size_t i = 0; i < c_.size(); ++i)
            if (!ops::is_zero(ops::sub(c_[i], o.c_[i]))) return false;
        return true;
    }
    bool operator!=(const UPoly& o) const { return !(*this == o); }

    K eval(const K& x) const {
        K acc = ops::zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = ops::add(ops::mul(acc, x), *it);
        return acc;
    }

    UPoly derivative() const {
        if (c_.size() <= 1) return UPoly();
        std::vector<K> r;
        r.reserve(c_.size() - 1);
        K n = ops::one();
        for (size_t i = 1; i < c_.size(); ++i) {
            r.push_back(ops::mul(c_[i], n));
            n = ops::add(n, ops::one());
        }
        return UPoly(std::move(r));
    }

    UPoly monic() const {
        if (is_zero()) return *this;
        return scaled(ops::inv(lc()));
    }

private:
    void trim() {
        while (!c_.empty() && ops::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<K> c_; // ascending powers, no trailing zeros
};

// Quotient/remainder over a field-like coefficient ring. Inverting the
// divisor's leading coefficient is the only division performed.
template <class K>
std::pair<UPoly<K>, UPoly<K>> divmod(const UPoly<K>& a, const UPoly<K>& b) {
    using ops = ring_ops<K>;
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {UPoly<K>(), a};
    K lb_inv = ops::inv(b.lc());
    std::vector<K> rem(a.coeffs());
    std::vector<K> quot(static_cast<size_t>(a.degree() - b.degree() + 1), ops::zero());
    for (int i = a.degree(); i >= b.degree(); --i) {
        K q = ops::mul(rem[static_cast<size_t>(i)], lb_inv);
        if (ops::is_zero(q)) continue;
        quot[static_cast<size_t>(i - b.degree())] = q;
        for (int j = 0; j <= b.degree(); ++j) {
            auto idx = static_cast<size_t>(i - b.degree() + j);
            rem[idx] = ops::sub(rem[idx], ops::mul(q, b[j]));
        }
    }
    return {UPoly<K>(std::move(quot)), UPoly<K>(std::move(rem))};
}

template <class K>
UPoly<K> operator%(const UPoly<K>& a, const UPoly<K>& b) {
    return divmod(a, b).second;
}
template <class K>
UPoly<K> operator/(const UPoly<K>& a, const UPoly<K>& b) {
    return divmod(a, b).first;
}

// Monic gcd by the Euclidean algorithm.
template <class K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
    while (!b.is_zero()) {
        a = a % b;
        std::swap(a, b);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

// g = gcd(a,b) monic together with u,v such that u*a + v*b = g.
template <class K>
std::tuple<UPoly<K>, UPoly<K>, UPoly<K>> xgcd(const UPoly<K>& a, const UPoly<K>& b) {
    using P = UPoly<K>;
    P r0 = a, r1 = b;
    P u0 = P::constant(ring_ops<K>::one()), u1 = P::zero();
    P v0 = P::zero(), v1 = P::constant(ring_ops<K>::one());
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = r1;
        r1 = r;
        P u2 = u0 - q * u1, v2 = v0 - q * v1;
        u0 = u1;
        u1 = u2;
        v0 = v1;
        v1 = v2;
    }
    if (r0.is_zero()) return {r0, u0, v0};
    K inv_lc = ring_ops<K>::inv(r0.lc());
    return {r0.scaled(inv_lc), u0.scaled(inv_lc), v0.scaled(inv_lc)};
}

template <class K>
bool is_squarefree(const UPoly<K>& p) {
    if (p.is_zero()) return false;
    if (p.degree() == 0) return true;
    return gcd(p, p.derivative()).degree() == 0;
}

template <class K>
UPoly<K> squarefree_part(const UPoly<K>& p) {
    if (p.is_zero()) throw std::domain_error("squarefree_part of zero polynomial");
    if (p.degree() == 0) return UPoly<K>::constant(ring_ops<K>::one());
    UPoly<K> g = gcd(p, p.derivative());
    return (p / g).monic();
}

// Determinant by fraction-free (Bareiss) elimination. Works over any
// integral domain with exact division; over a dynamic number field the
// pivot test may raise SplitEvent through ring_ops::is_zero_pivot.
template <class R>
R bareiss_determinant(std::vector<std::vector<R>> m) {
    using ops = ring_ops<R>;
    const size_t n = m.size();
    if (n == 0) return ops::one();
    for (auto& row : m) assert(row.size() == n);
    R prev = ops::one();
    bool negate = false;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (ops::is_zero_pivot(m[k][k])) {
            size_t swap_row = k + 1;
            while (swap_row < n && ops::is_zero_pivot(m[swap_row][k])) ++swap_row;
            if (swap_row == n) return ops::zero();
            std::swap(m[k], m[swap_row]);
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                R num = ops::sub(ops::mul(m[i][j], m[k][k]), ops::mul(m[i][k], m[k][j]));
                m[i][j] = ops::exact_div(num, prev);
            }
            m[i][k] = ops::zero();
        }
        prev = m[k][k];
    }
    R det = m[n - 1][n - 1];
    return negate ? ops::neg(det) : det;
}

// Sylvester matrix with P's coefficient rows first; Res(P,Q) = det.
// With this convention Res(w-a, w-b) = a-b.
template <class K>
std::vector<std::vector<K>> sylvester_matrix(const UPoly<K>& p, const UPoly<K>& q) {
    using ops = ring_ops<K>;
    const int m = p.degree(), n = q.degree();
    assert(m >= 1 || n >= 1);
    const size_t size = static_cast<size_t>(m + n);
    std::vector<std::vector<K>> s(size, std::vector<K>(size, ops::zero()));
    for (int row = 0; row < n; ++row)
        for (int j = 0; j <= m; ++j) s[static_cast<size_t>(row)][static_cast<size_t>(row + j)] = p[m - j];
    for (int row = 0; row < m; ++row)
        for (int j = 0; j <= n; ++j)
            s[static_cast<size_t>(n + row)][static_cast<size_t>(row + j)] = q[n - j];
    return s;
}

template <class K>
K resultant(const UPoly<K>& p, const UPoly<K>& q) {
    using ops = ring_ops<K>;
    if (p.is_zero() || q.is_zero()) throw std::domain_error("resultant of zero polynomial");
    if (p.degree() == 0 && q.degree() == 0) return ops::one();
    if (p.degree() == 0) {
        K acc = ops::one();
        for (int i = 0; i < q.degree(); ++i) acc = ops::mul(acc, p[0]);
        return acc;
    }
    if (q.degree() == 0) {
        K acc = ops::one();
        for (int i = 0; i < p.degree(); ++i) acc = ops::mul(acc, q[0]);
        return acc;
    }
    return bareiss_determinant(sylvester_matrix(p, q));
}

// Polynomials form a ring; exact division is checked long division. This is
// what lets bareiss_determinant run over K[x] entries (bivariate resultants).
template <class K>
struct ring_ops<UPoly<K>> {
    using P = UPoly<K>;
    static P zero() { return P(); }
    static P one() { return P::constant(ring_ops<K>::one()); }
    static bool is_zero(const P& a) { return a.is_zero(); }
    static bool is_zero_pivot(const P& a) { return a.is_zero(); }
    static P neg(const P& a) { return -a; }
    static P add(const P& a, const P& b) { return a + b; }
    static P sub(const P& a, const P& b) { return a - b; }
    static P mul(const P& a, const P& b) { return a * b; }
    static P exact_div(const P& a, const P& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw std::logic_error("inexact polynomial division in Bareiss step");
        return q;
    }
    static constexpr bool is_field = false;
};

template <class K>
std::string upoly_to_string(const UPoly<K>& p, const std::string& var,
                            std::string (*coeff_str)(const K&)) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        K c = p.coeff(i);
        if (ring_ops<K>::is_zero(c)) continue;
        std::string cs = coeff_str(c);
        bool neg = !cs.empty() && cs[0] == '-';
        if (!out.empty()) {
            out += neg ? " - " : " + ";
            if (neg) cs = cs.substr(1);
        }
        if (i == 0) {
            out += cs;
        } else {
            if (cs == "1")
                ;
            else if (cs == "-1")
                out += "-";
            else
                out += cs + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

using QPoly = UPoly<Rational>;

inline std::string upoly_q_to_string(const QPoly& p, const std::string& var = "t") {
    return upoly_to_string<Rational>(p, var, +[](const Rational& r) { return to_string(r); });
}

} // namespace sislne
