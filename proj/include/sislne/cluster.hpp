#pragma once

// Combinatorial engine for sequences of point blow-ups over a smooth
// surface point: infinitely-near points with proximity data, exceptional
// divisors with Euler weights, generic-linear-form multiplicities m and
// inner rates q. Two independent computation paths are provided and must
// agree: bookkeeping (parent sums + the reverse proximity recursion) and
// the intersection-matrix oracle (exact inversion of the negative-definite
// intersection form, realizing (H).E = 0 as a linear system).
//
// Divisors are addressed by the creation index of the blown-up point;
// point 0 is the origin, its divisor the root. There is no geometry here,
// only combinatorics.

#include "sislne/rational.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>
#include <vector>

namespace sislne {

struct ClusterError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Cluster {
public:
    static Cluster origin() {
        Cluster c;
        c.prox_.push_back({}); // the root is proximate to nothing
        return c;
    }

    int size() const { return static_cast<int>(prox_.size()); }

    // free point on divisor `on`: proximate to exactly that point
    Cluster blow_up_free(int on) const {
        check_index(on);
        Cluster c = *this;
        c.prox_.push_back({on});
        c.adj_.emplace(on, c.size() - 1);
        return c;
    }

    // satellite point at the intersection of two currently meeting
    // divisors: separates them and is proximate to both
    Cluster blow_up_satellite(int a, int b) const {
        check_index(a);
        check_index(b);
        if (a > b) std::swap(a, b);
        if (a == b) throw ClusterError("satellite blow-up needs two distinct divisors");
        Cluster c = *this;
        if (c.adj_.erase({a, b}) == 0)
            throw ClusterError("satellite blow-up on non-intersecting divisors");
        c.prox_.push_back({a, b});
        int n = c.size() - 1;
        c.adj_.emplace(a, n);
        c.adj_.emplace(b, n);
        return c;
    }

    const std::vector<int>& proximate_to(int p) const { return prox_[static_cast<size_t>(p)]; }
    bool adjacent(int a, int b) const {
        if (a > b) std::swap(a, b);
        return adj_.count({a, b}) > 0;
    }
    const std::set<std::pair<int, int>>& adjacency() const { return adj_; }

    // eulerWeight(p) = -1 - #.{later points proximate to p}
    std::vector<int> euler_weights() const {
        std::vector<int> w(static_cast<size_t>(size()), -1);
        for (int q = 0; q < size(); ++q)
            for (int p : prox_[static_cast<size_t>(q)]) w[static_cast<size_t>(p)] -= 1;
        return w;
    }

    // m(root) = 1; m(new) = sum of m over the parents
    std::vector<Integer> multiplicities() const {
        std::vector<Integer> m(static_cast<size_t>(size()));
        m[0] = 1;
        for (int p = 1; p < size(); ++p) {
            Integer s = 0;
            for (int a : prox_[static_cast<size_t>(p)]) s += m[static_cast<size_t>(a)];
            m[static_cast<size_t>(p)] = s;
        }
        return m;
    }

    // multiplicity vector of a curvette of divisor v: value 1 at v's own
    // point, 0 at later points, and the reverse proximity recursion
    // x_p = sum over later points proximate to p
    std::vector<Integer> curvette_multiplicities(int v) const {
        check_index(v);
        std::vector<Integer> x(static_cast<size_t>(size()), Integer(0));
        x[static_cast<size_t>(v)] = 1;
        for (int p = v - 1; p >= 0; --p) {
            Integer s = 0;
            for (int q = p + 1; q < size(); ++q)
                for (int a : prox_[static_cast<size_t>(q)])
                    if (a == p) s += x[static_cast<size_t>(q)];
            x[static_cast<size_t>(p)] = s;
        }
        return x;
    }

    // inner rate by the Noether pairing of two curvettes of v meeting v at
    // distinct points: q = (sum x_p^2) / m_v^2
    Rational inner_rate(int v) const {
        auto x = curvette_multiplicities(v);
        Integer noether = 0;
        for (const Integer& xi : x) noether += xi * xi;
        Integer mv = multiplicities()[static_cast<size_t>(v)];
        return Rational(noether, mv * mv);
    }

    std::vector<Rational> inner_rates() const {
        std::vector<Rational> q;
        for (int v = 0; v < size(); ++v) q.push_back(inner_rate(v));
        return q;
    }

    // current intersection matrix: diagonal = Euler weights, 1 per meeting
    std::vector<std::vector<Rational>> intersection_matrix() const {
        auto w = euler_weights();
        std::vector<std::vector<Rational>> I(static_cast<size_t>(size()),
                                             std::vector<Rational>(static_cast<size_t>(size()), Rational(0)));
        for (int i = 0; i < size(); ++i) I[static_cast<size_t>(i)][static_cast<size_t>(i)] = w[static_cast<size_t>(i)];
        for (const auto& [a, b] : adj_) {
            I[static_cast<size_t>(a)][static_cast<size_t>(b)] = 1;
            I[static_cast<size_t>(b)][static_cast<size_t>(a)] = 1;
        }
        return I;
    }

private:
    void check_index(int p) const {
        if (p < 0 || p >= size()) throw ClusterError("divisor index out of range");
    }

    std::vector<std::vector<int>> prox_;   // prox_[p]: points p is proximate to (sorted)
    std::set<std::pair<int, int>> adj_;    // current divisor intersections, a < b
};

// ---------------------------------------------------------------------------
// exact linear algebra for the matrix oracle

// Gauss-Jordan inverse over Q; throws on a singular matrix.
inline std::vector<std::vector<Rational>> invert_matrix(std::vector<std::vector<Rational>> a) {
    const size_t n = a.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw ClusterError("singular intersection matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rational s = a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] /= s;
            inv[col][j] /= s;
        }
        for (size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col].is_zero()) continue;
            Rational f = a[row][col];
            for (size_t j = 0; j < n; ++j) {
                a[row][j] -= f * a[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

// leading principal minors alternate in sign: (-1)^j Delta_j > 0
inline bool is_negative_definite(const std::vector<std::vector<Rational>>& m) {
    const size_t n = m.size();
    // fraction-free elimination; pivots are ratios of consecutive minors
    std::vector<std::vector<Rational>> a = m;
    Rational prev_minor(1);
    int sign = 1;
    for (size_t k = 0; k < n; ++k) {
        // current leading minor = prev_minor * pivot after elimination
        for (size_t i = 0; i < k; ++i) {
            if (a[i][i].is_zero()) return false;
            Rational f = a[k][i] / a[i][i];
            if (f.is_zero()) continue;
            for (size_t j = i; j < n; ++j) a[k][j] -= f * a[i][j];
        }
        Rational minor = prev_minor * a[k][k];
        sign = -sign;
        if (sign > 0 ? (minor <= 0) : (minor >= 0)) return false;
        prev_minor = minor;
    }
    return true;
}

struct MatrixOracle {
    std::vector<Rational> m; // multiplicities of a generic linear form
    std::vector<Rational> q; // inner rates
};

// Solves (H).E = 0: with I the intersection matrix, m = -I^{-1} e_root;
// two curvettes of v pair to -(I^{-1})_{vv}, so q_v = -(I^{-1})_{vv} / m_v^2.
inline MatrixOracle matrix_oracle(const Cluster& c) {
    auto I = c.intersection_matrix();
    if (!is_negative_definite(I))
        throw ClusterError("intersection matrix is not negative definite; corrupted cluster");
    auto inv = invert_matrix(I);
    MatrixOracle out;
    const size_t n = I.size();
    out.m.resize(n);
    out.q.resize(n);
    for (size_t v = 0; v < n; ++v) {
        out.m[v] = -inv[v][0];
        out.q[v] = -inv[v][v] / (out.m[v] * out.m[v]);
    }
    return out;
}

// Bookkeeping and matrix paths must agree on every cluster.
inline void check_oracle_agreement(const Cluster& c) {
    auto mo = matrix_oracle(c);
    auto mb = c.multiplicities();
    auto qb = c.inner_rates();
    for (int v = 0; v < c.size(); ++v) {
        if (Rational(mb[static_cast<size_t>(v)]) != mo.m[static_cast<size_t>(v)])
            throw ClusterError("multiplicity oracle disagreement at divisor " + std::to_string(v));
        if (qb[static_cast<size_t>(v)] != mo.q[static_cast<size_t>(v)])
            throw ClusterError("inner-rate oracle disagreement at divisor " + std::to_string(v));
    }
}

// Minimal embedded resolution of the (k, k+1) cusp: one free point on the
// root, then satellites on root x latest. Divisor k (the last one created)
// is the node meeting the strict transform.
inline Cluster cusp_cluster(int k) {
    if (k < 2) throw ClusterError("cusp parameter must be at least 2");
    Cluster c = Cluster::origin().blow_up_free(0);
    for (int i = 2; i <= k; ++i) c = c.blow_up_satellite(0, i - 1);
    return c;
}

} // namespace sislne
