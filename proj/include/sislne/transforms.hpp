#pragma once

// Deterministic projective coordinate changes used to reach genericity
// (no singular point on z = 0, pairwise distinct x-coordinates, ...).
// Candidates are unimodular-ish integer matrices
//
//     M = [[1,a,b],[0,1,c],[u,v,1]]
//
// enumerated by growing max-|entry| radius in a fixed order, skipping
// det = 0. The identity comes first, then pure (b,c) shears matching the
// natural z-translations, then transforms mixing z into x,y (needed when a
// singular point sits on z = 0) and y into x (needed to separate
// x-coordinates). Every genericity condition is verified a posteriori, so
// the enumeration only has to be rich enough, never clever.

#include "sislne/mpoly.hpp"

#include <array>

namespace sislne {

struct QMat3 {
    std::array<std::array<Rational, 3>, 3> a{};

    static QMat3 identity() {
        QMat3 m;
        for (int i = 0; i < 3; ++i) m.a[i][i] = 1;
        return m;
    }

    Rational det() const {
        return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
               a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
               a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    }

    bool is_identity() const {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (a[i][j] != Rational(i == j ? 1 : 0)) return false;
        return true;
    }

    // substitution images for f(M x): row i gives the i-th argument
    std::vector<QMPoly> images(const std::vector<std::string>& vars) const {
        std::vector<QMPoly> im;
        for (int i = 0; i < 3; ++i) {
            QMPoly row(vars);
            for (size_t j = 0; j < 3; ++j) {
                typename QMPoly::Exp e(vars.size(), 0);
                e[j] = 1;
                row.add_term(e, a[static_cast<size_t>(i)][j]);
            }
            im.push_back(std::move(row));
        }
        return im;
    }

    QMPoly apply(const QMPoly& f) const {
        if (is_identity()) return f;
        return f.compose(images(f.vars()));
    }

    std::array<NFElem, 3> apply(const std::array<NFElem, 3>& p) const {
        std::array<NFElem, 3> r;
        for (size_t i = 0; i < 3; ++i) {
            NFElem acc;
            for (size_t j = 0; j < 3; ++j) acc = acc + NFElem(a[i][j]) * p[j];
            r[i] = acc;
        }
        return r;
    }
};

inline std::vector<int> radius_values(int radius) {
    std::vector<int> v{0};
    for (int r = 1; r <= radius; ++r) {
        v.push_back(r);
        v.push_back(-r);
    }
    return v;
}

// First `count` candidate transforms in canonical order.
inline const std::vector<QMat3>& coordinate_changes() {
    static const std::vector<QMat3> table = [] {
        std::vector<QMat3> out;
        const int max_radius = 3;
        for (int radius = 0; radius <= max_radius && out.size() < 600; ++radius) {
            auto vals = radius_values(radius);
            for (int a : vals)
                for (int b : vals)
                    for (int c : vals)
                        for (int u : vals)
                            for (int v : vals) {
                                int m = std::max({std::abs(a), std::abs(b), std::abs(c),
                                                  std::abs(u), std::abs(v)});
                                if (m != radius) continue; // emitted at a smaller radius
                                QMat3 M = QMat3::identity();
                                M.a[0][1] = a;
                                M.a[0][2] = b;
                                M.a[1][2] = c;
                                M.a[2][0] = u;
                                M.a[2][1] = v;
                                if (M.det().is_zero()) continue;
                                out.push_back(M);
                            }
        }
        return out;
    }();
    return table;
}

// Local 2x2 shears (u,v) -> (u + alpha*v, beta*u + v) for normalizing
// binary forms; invertible iff alpha*beta != 1.
inline const std::vector<std::pair<int, int>>& local_shears() {
    static const std::vector<std::pair<int, int>> table = [] {
        std::vector<std::pair<int, int>> out;
        for (int radius = 0; radius <= 6; ++radius) {
            auto vals = radius_values(radius);
            for (int alpha : vals)
                for (int beta : vals) {
                    if (std::max(std::abs(alpha), std::abs(beta)) != radius) continue;
                    if (alpha * beta == 1) continue;
                    out.emplace_back(alpha, beta);
                }
        }
        return out;
    }();
    return table;
}

} // namespace sislne
