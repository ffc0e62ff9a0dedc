#pragma once

// Test-only brute-force oracle for line arrangements: singular points of a
// product of distinct lines are exactly the pairwise intersection points,
// with multiplicity = number of lines through the point. Computed by plain
// linear algebra (cross products), independent of the elimination pipeline.

#include "sislne/curve.hpp"

#include <random>

namespace oracle {

using sislne::QMPoly;
using sislne::QPoly;
using sislne::Rational;

struct Line {
    std::array<Rational, 3> c; // a*x + b*y + c*z
};

inline QMPoly line_poly(const Line& l) {
    QMPoly p(sislne::proj_vars());
    p.add_term({1, 0, 0}, l.c[0]);
    p.add_term({0, 1, 0}, l.c[1]);
    p.add_term({0, 0, 1}, l.c[2]);
    return p;
}

inline std::array<Rational, 3> cross(const std::array<Rational, 3>& a,
                                     const std::array<Rational, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// normalize so the last nonzero coordinate is 1 (matches the library)
inline std::array<Rational, 3> normalize(std::array<Rational, 3> p) {
    for (int i = 2; i >= 0; --i) {
        if (!p[static_cast<size_t>(i)].is_zero()) {
            Rational s = p[static_cast<size_t>(i)];
            for (auto& x : p) x /= s;
            return p;
        }
    }
    throw std::logic_error("zero vector is not a projective point");
}

struct OraclePoint {
    std::array<Rational, 3> coords; // normalized
    int chart;                      // index of the coordinate equal to 1
    int k;                          // number of lines through the point
};

inline std::vector<OraclePoint> arrangement_singular_points(const std::vector<Line>& lines) {
    std::vector<OraclePoint> pts;
    for (size_t i = 0; i < lines.size(); ++i)
        for (size_t j = i + 1; j < lines.size(); ++j) {
            auto p = normalize(cross(lines[i].c, lines[j].c));
            bool seen = false;
            for (const auto& q : pts)
                if (q.coords == p) seen = true;
            if (seen) continue;
            int k = 0;
            for (const auto& l : lines) {
                Rational v = l.c[0] * p[0] + l.c[1] * p[1] + l.c[2] * p[2];
                if (v.is_zero()) ++k;
            }
            OraclePoint op;
            op.coords = p;
            op.k = k;
            op.chart = 2;
            while (p[static_cast<size_t>(op.chart)].is_zero()) --op.chart;
            pts.push_back(op);
        }
    return pts;
}

inline std::vector<Line> random_distinct_lines(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> cd(-3, 3);
    std::vector<Line> lines;
    while (static_cast<int>(lines.size()) < n) {
        Line l{{Rational(cd(rng)), Rational(cd(rng)), Rational(cd(rng))}};
        if (l.c[0].is_zero() && l.c[1].is_zero() && l.c[2].is_zero()) continue;
        bool dup = false;
        for (const auto& m : lines) {
            auto x = cross(l.c, m.c);
            if (x[0].is_zero() && x[1].is_zero() && x[2].is_zero()) dup = true;
        }
        if (!dup) lines.push_back(l);
    }
    return lines;
}

// Does the record's branch cover this rational point? Exactly one conjugate
// may land on it; the test is gcd-based and fully exact.
inline int conjugates_on_point(const sislne::SingularPointRecord& rec, const OraclePoint& op) {
    if (rec.point.chart != op.chart) return 0;
    QPoly g = rec.point.modulus();
    for (size_t i = 0; i < 3; ++i) {
        if (static_cast<int>(i) == op.chart) continue;
        // constraint X(t) = a; an identically-zero difference binds nothing
        QPoly diff = rec.point.coords[i].rep() - QPoly::constant(op.coords[i]);
        if (!diff.is_zero()) g = gcd(g, diff);
        if (g.degree() == 0) break;
    }
    return g.degree();
}

// Exact set equality between pipeline output and the oracle:
// every oracle point covered exactly once with the right multiplicity, and
// every conjugate of every record lands on some oracle point.
inline bool matches_oracle(const std::vector<sislne::SingularPointRecord>& recs,
                           const std::vector<OraclePoint>& pts) {
    for (const auto& op : pts) {
        int cover = 0;
        for (const auto& rec : recs) {
            int c = conjugates_on_point(rec, op);
            if (c > 0 && rec.k != op.k) return false;
            cover += c;
        }
        if (cover != 1) return false;
    }
    int total_deg = 0, oracle_n = static_cast<int>(pts.size());
    for (const auto& rec : recs) total_deg += rec.degree();
    return total_deg == oracle_n;
}

} // namespace oracle
