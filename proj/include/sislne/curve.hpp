#pragma once

// Exact analysis of the projective plane curve {f = 0} in P^2: reducedness
// test, singular locus by resultant-based triangular decomposition,
// per-point multiplicities, initial forms, the ordinariness test, tangent
// slopes, and validation of a user-supplied component list.
//
// Points with coordinates in an extension of Q are handled by dynamic
// evaluation: one record covers a whole triangular branch (a squarefree,
// not necessarily irreducible modulus); every decision made about a branch
// is certified to hold for all of its conjugates, with SplitEvent forcing a
// refinement whenever that would fail.

#include "sislne/parse.hpp"
#include "sislne/transforms.hpp"

#include <optional>

namespace sislne {

inline const std::vector<std::string>& proj_vars() {
    static const std::vector<std::string> v{"x", "y", "z"};
    return v;
}
inline const std::vector<std::string>& local_vars() {
    static const std::vector<std::string> v{"u", "v"};
    return v;
}

struct CurveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// thrown when the current coordinate change fails an a-posteriori check
struct RetryTransform {
    std::string reason;
};

// ---------------------------------------------------------------------------
// bivariate helpers

// View a polynomial in exactly two of its variables as univariate in
// `main` with Q[other] coefficients.
inline UPoly<QPoly> to_bivariate(const QMPoly& f, size_t main, size_t other) {
    int dmain = f.degree_in(main);
    if (dmain < 0) return UPoly<QPoly>();
    std::vector<QPoly> cs(static_cast<size_t>(dmain) + 1);
    std::vector<std::vector<Rational>> raw(static_cast<size_t>(dmain) + 1);
    for (const auto& [e, c] : f.terms()) {
        for (size_t v = 0; v < e.size(); ++v)
            if (v != main && v != other && e[v] != 0)
                throw std::logic_error("to_bivariate: polynomial involves a third variable");
        auto& vec = raw[static_cast<size_t>(e[main])];
        if (vec.size() <= static_cast<size_t>(e[other])) vec.resize(static_cast<size_t>(e[other]) + 1);
        vec[static_cast<size_t>(e[other])] += c;
    }
    for (size_t i = 0; i < raw.size(); ++i) cs[i] = QPoly(raw[i]);
    return UPoly<QPoly>(std::move(cs));
}

inline QPoly content_of(const UPoly<QPoly>& f) {
    QPoly c;
    for (int i = 0; i <= f.degree(); ++i) {
        if (f.coeff(i).is_zero()) continue;
        c = c.is_zero() ? f.coeff(i).monic() : gcd(c, f.coeff(i));
        if (c.degree() == 0) break;
    }
    return c;
}

// Res_main(f, g) for two polynomials in variables {main, other}.
inline QPoly bivariate_resultant(const QMPoly& f, const QMPoly& g, size_t main, size_t other) {
    UPoly<QPoly> fu = to_bivariate(f, main, other);
    UPoly<QPoly> gu = to_bivariate(g, main, other);
    return resultant(fu, gu);
}

// ---------------------------------------------------------------------------
// reducedness of a homogeneous curve equation

// true iff the homogeneous f in x,y,z has no repeated irreducible factor.
// Method: pick a coordinate change with z not dividing f, dehomogenize,
// split off the y-free content, then test content squarefreeness and
// Res_y(pp, pp_y) != 0 for the primitive part.
inline bool is_squarefree_homogeneous(const QMPoly& f) {
    if (f.is_zero()) throw CurveError("zero polynomial has no squarefree test");
    if (!f.is_homogeneous()) throw CurveError("expected a homogeneous polynomial");
    if (f.total_degree() < 1) return true;
    for (const QMat3& M : coordinate_changes()) {
        QMPoly g = M.apply(f);
        // z | g iff g(x,y,0) == 0
        QMPoly at_inf = g.compose({QMPoly::variable(proj_vars(), 0), QMPoly::variable(proj_vars(), 1),
                                   QMPoly(proj_vars())});
        if (at_inf.is_zero()) continue;
        QMPoly fa = g.compose({QMPoly::variable(proj_vars(), 0), QMPoly::variable(proj_vars(), 1),
                               QMPoly::constant(proj_vars(), Rational(1))});
        UPoly<QPoly> bi = to_bivariate(fa, 1 /*y*/, 0 /*x*/);
        if (bi.degree() <= 0) {
            // no y left: purely a product of x-lines in this chart
            return is_squarefree(bi.is_zero() ? QPoly() : bi.coeff(0));
        }
        QPoly cont = content_of(bi);
        if (cont.degree() > 0 && !is_squarefree(cont)) return false;
        std::vector<QPoly> pp(static_cast<size_t>(bi.degree()) + 1);
        for (int i = 0; i <= bi.degree(); ++i)
            pp[static_cast<size_t>(i)] = bi.coeff(i).is_zero() ? QPoly() : bi.coeff(i) / cont;
        UPoly<QPoly> prim(std::move(pp));
        UPoly<QPoly> dprim = prim.derivative();
        if (dprim.is_zero()) return prim.degree() == 0; // degree >= 1 would repeat
        return !resultant(prim, dprim).is_zero();
    }
    throw CurveError("coordinate-change sequence exhausted in squarefree test");
}

// ---------------------------------------------------------------------------
// singular locus

struct ProjectivePoint {
    FieldPtr field;                // Q[t]/(p), p squarefree of degree >= 1
    std::array<NFElem, 3> coords;  // normalized: last certified-nonzero coordinate is 1
    int chart = 2;                 // index of the coordinate equal to 1
    QPoly y_expr;                  // triangular data: in analysis coordinates the point is
                                   // (t, y_expr(t), 1) before mapping back through `transform`
    QMat3 transform;               // analysis coordinate change M (original = M * analysis)

    const QPoly& modulus() const { return field->modulus(); }
    int degree() const { return field->modulus().degree(); }
};

struct SingularPointRecord {
    ProjectivePoint point;
    int k = 0;                 // multiplicity
    NFMPoly initial_form;      // binary form of degree k in local (u,v)
    bool ordinary = false;
    NFPoly tangent_slopes;     // monic degree-k squarefree; meaningful iff ordinary
    std::pair<int, int> slope_shear{0, 0}; // local normalization used for the slopes

    int degree() const { return point.degree(); }
};

inline NFElem eval_at(const QMPoly& f, const std::array<NFElem, 3>& p) {
    return lift_to_field(f).eval({p[0], p[1], p[2]});
}

inline NFPoly lift_bivariate(const UPoly<QPoly>& f, const NFElem& x_value) {
    std::vector<NFElem> cs;
    cs.reserve(static_cast<size_t>(f.degree() + 1));
    for (int i = 0; i <= f.degree(); ++i)
        cs.push_back(lift_to_field(f.coeff(i), x_value.field()).eval(x_value));
    return NFPoly(std::move(cs));
}

// Smallest weight with a term certified nonzero on the current branch.
// `weight` maps an exponent vector to its level. Splits when the witness
// term is a zero divisor.
template <class WeightFn>
int min_level_split(const NFMPoly& p, WeightFn weight) {
    if (p.is_zero()) return -1;
    std::map<int, std::vector<const NFElem*>> levels;
    for (const auto& [e, c] : p.terms()) levels[weight(e)].push_back(&c);
    for (const auto& [lvl, cs] : levels) {
        for (const NFElem* c : cs)
            if (!nf_zero_test_split(*c, "minimal term selection")) return lvl;
        // all terms at this level vanish on this branch; keep looking
    }
    return -1;
}

inline int min_total_degree_split(const NFMPoly& p) {
    return min_level_split(p, [](const NFMPoly::Exp& e) { return e[0] + e[1]; });
}
inline int min_exponent_split(const NFMPoly& p, size_t var) {
    return min_level_split(p, [var](const NFMPoly::Exp& e) { return e[var]; });
}

// Taylor expansion of f (homogeneous, original coordinates) at a projective
// point, in the affine chart where the point's normalized coordinate is 1.
// Local variables (u,v) are the remaining two coordinates in natural order.
inline NFMPoly local_expansion(const QMPoly& f, const ProjectivePoint& pt) {
    NFMPoly lifted = lift_to_field(f);
    std::array<size_t, 2> loc{};
    size_t li = 0;
    for (size_t i = 0; i < 3; ++i)
        if (static_cast<int>(i) != pt.chart) loc[li++] = i;
    std::vector<NFMPoly> images(3, NFMPoly(local_vars()));
    images[static_cast<size_t>(pt.chart)] = NFMPoly::constant(local_vars(), NFElem::one());
    for (size_t j = 0; j < 2; ++j) {
        NFMPoly im = NFMPoly::variable(local_vars(), j);
        im = im + NFMPoly::constant(local_vars(), pt.coords[loc[j]]);
        images[loc[j]] = im;
    }
    return lifted.compose(images);
}

// degree-d homogeneous slice of a local expansion
inline NFMPoly degree_slice(const NFMPoly& p, int d) {
    NFMPoly r(p.vars());
    for (const auto& [e, c] : p.terms())
        if (e[0] + e[1] == d) r.add_term(e, c);
    return r;
}

// (k, F_k) at a point of the curve. k >= 2 iff the point is singular.
inline std::pair<int, NFMPoly> multiplicity_and_initial_form(const QMPoly& f,
                                                             const ProjectivePoint& pt) {
    NFMPoly t = local_expansion(f, pt);
    int k = min_total_degree_split(t);
    if (k < 0) throw CurveError("zero polynomial at multiplicity computation");
    if (k == 0) throw CurveError("point does not lie on the curve");
    return {k, degree_slice(t, k)};
}

// Squarefreeness of a binary form over the branch field: strip at most one
// u and one v factor, then a univariate squarefree test. Any axis factor
// of exponent >= 2 already decides the answer.
inline bool is_ordinary_form(const NFMPoly& fk) {
    int alpha = min_exponent_split(fk, 0);
    int beta = min_exponent_split(fk, 1);
    if (alpha < 0) throw CurveError("ordinariness test on zero form");
    if (alpha >= 2 || beta >= 2) return false;
    // H = fk / (u^alpha v^beta); coefficients with smaller exponents vanish
    // on this branch by construction of alpha/beta
    NFMPoly h(fk.vars());
    for (const auto& [e, c] : fk.terms()) {
        if (e[0] < alpha || e[1] < beta) continue;
        h.add_term({e[0] - alpha, e[1] - beta}, c);
    }
    // dehomogenize at v=1: degree matches since u and v no longer divide H
    NFPoly huni;
    {
        int n = h.total_degree();
        std::vector<NFElem> cs(static_cast<size_t>(n) + 1, NFElem::zero());
        for (const auto& [e, c] : h.terms()) cs[static_cast<size_t>(e[0])] = c;
        huni = NFPoly(std::move(cs));
    }
    if (huni.degree() <= 0) return true;
    return is_squarefree(huni);
}

// Monic degree-k squarefree polynomial prod(T + a_i) whose roots -a_i are
// the tangent slopes of an ordinary point after the recorded normalization.
inline std::pair<NFPoly, std::pair<int, int>> tangent_slopes_of(const NFMPoly& fk, int k) {
    for (const auto& [alpha, beta] : local_shears()) {
        // (u,v) -> (u + alpha v, beta u + v)
        NFMPoly u = NFMPoly::variable(local_vars(), 0), v = NFMPoly::variable(local_vars(), 1);
        NFMPoly iu = u + v.scaled(NFElem(Rational(alpha)));
        NFMPoly iv = u.scaled(NFElem(Rational(beta))) + v;
        NFMPoly g = fk.compose({iu, iv});
        // need nonzero extreme coefficients: coeff(v^k) (leading) and coeff(u^k)
        NFElem cv = g.coeff({0, k}), cu = g.coeff({k, 0});
        if (nf_zero_test_split(cv, "slope normalization") ||
            nf_zero_test_split(cu, "slope normalization"))
            continue;
        // s(T) = g(1, T) / cv
        std::vector<NFElem> cs(static_cast<size_t>(k) + 1, NFElem::zero());
        for (const auto& [e, c] : g.terms()) {
            if (e[0] + e[1] != k) throw std::logic_error("initial form not homogeneous");
            cs[static_cast<size_t>(e[1])] = c;
        }
        NFPoly s = NFPoly(std::move(cs)).scaled(cv.invert());
        if (!is_squarefree(s)) continue; // cannot happen for an ordinary point; defensive retry
        return {s, {alpha, beta}};
    }
    throw CurveError("local shear sequence exhausted while normalizing tangent slopes");
}

namespace detail {

// binary forms b(x,y): true iff some common projective zero exists
inline bool binary_forms_share_zero(const std::vector<QMPoly>& forms) {
    std::vector<QPoly> dehom;
    bool all_div_by_y = true;
    for (const QMPoly& b : forms) {
        if (b.is_zero()) continue;
        int d = b.total_degree();
        // y | b iff the x^d coefficient vanishes
        if (!is_zero(b.coeff({d, 0, 0}))) all_div_by_y = false;
        std::vector<Rational> cs(static_cast<size_t>(d) + 1, Rational(0));
        for (const auto& [e, c] : b.terms()) cs[static_cast<size_t>(e[0])] = c;
        dehom.emplace_back(std::move(cs));
    }
    if (dehom.empty()) return true; // all forms identically zero
    if (all_div_by_y) return true;  // [1:0] is a common zero
    QPoly g = dehom[0];
    for (size_t i = 1; i < dehom.size() && g.degree() > 0; ++i) g = gcd(g, dehom[i]);
    return g.degree() > 0;
}

struct BranchOutcome {
    bool has_point = false;
    SingularPointRecord rec;
};

} // namespace detail

// Full singular-locus analysis. Returns one record per triangular branch;
// the geometric point count is the sum of the modulus degrees.
inline std::vector<SingularPointRecord> singular_points(const QMPoly& f) {
    if (f.is_zero() || !f.is_homogeneous()) throw CurveError("expected a nonzero homogeneous polynomial");
    const int d = f.total_degree();
    if (d < 2) throw CurveError("curve degree must be at least 2");
    if (!is_squarefree_homogeneous(f))
        throw CurveError("curve is not reduced (repeated factor)");

    const QMPoly fx = f.partial_derivative(0), fy = f.partial_derivative(1),
                 fz = f.partial_derivative(2);

    for (const QMat3& M : coordinate_changes()) {
        QMPoly g = M.apply(f);
        std::vector<QMPoly> at_inf_imgs = {QMPoly::variable(proj_vars(), 0),
                                           QMPoly::variable(proj_vars(), 1), QMPoly(proj_vars())};
        QMPoly g0 = g.compose(at_inf_imgs);
        if (g0.is_zero()) continue; // z | g: the line at infinity is a component
        // no singular point of g may lie on z = 0
        QMPoly gx = g.partial_derivative(0), gy = g.partial_derivative(1),
               gz = g.partial_derivative(2);
        if (detail::binary_forms_share_zero(
                {g0, gx.compose(at_inf_imgs), gy.compose(at_inf_imgs), gz.compose(at_inf_imgs)}))
            continue;

        std::vector<QMPoly> chart_imgs = {QMPoly::variable(proj_vars(), 0),
                                          QMPoly::variable(proj_vars(), 1),
                                          QMPoly::constant(proj_vars(), Rational(1))};
        QMPoly fa = g.compose(chart_imgs);
        QMPoly fax = gx.compose(chart_imgs), fay = gy.compose(chart_imgs);
        if (fa.degree_in(1) < 1) continue; // needs y to eliminate
        if (fax.is_zero() || fay.is_zero()) continue;

        QPoly r1 = bivariate_resultant(fa, fax, 1, 0);
        QPoly r2 = bivariate_resultant(fa, fay, 1, 0);
        QPoly locus;
        if (r1.is_zero() && r2.is_zero())
            continue; // degenerate elimination; a new chart fixes it
        else if (r1.is_zero())
            locus = r2;
        else if (r2.is_zero())
            locus = r1;
        else
            locus = gcd(r1, r2);
        if (locus.degree() == 0) return {}; // smooth curve (nothing at infinity either)
        QPoly p = squarefree_part(locus);

        UPoly<QPoly> fa_b = to_bivariate(fa, 1, 0), fax_b = to_bivariate(fax, 1, 0),
                     fay_b = to_bivariate(fay, 1, 0);

        try {
            auto branches = run_on_branches<detail::BranchOutcome>(
                "t", p, [&](const FieldPtr& K) -> detail::BranchOutcome {
                    NFElem xbar = NFElem::generator(K);
                    NFPoly A = lift_bivariate(fa_b, xbar);
                    NFPoly B = lift_bivariate(fax_b, xbar);
                    NFPoly C = lift_bivariate(fay_b, xbar);
                    NFPoly G = A;
                    for (const NFPoly* q : {&B, &C}) G = G.is_zero() ? *q : (q->is_zero() ? G : gcd(G, *q));
                    if (G.degree() <= 0) return {}; // spurious x-branch
                    NFPoly S = squarefree_part(G);
                    if (S.degree() >= 2)
                        throw RetryTransform{"two singular points share an x-coordinate"};
                    NFElem ybar = -S.coeff(0); // S monic linear

                    ProjectivePoint pt;
                    pt.field = K;
                    pt.transform = M;
                    pt.y_expr = ybar.rep();
                    std::array<NFElem, 3> chart_coords{xbar, ybar, NFElem::one()};
                    auto orig = M.apply(chart_coords);
                    int chart = -1;
                    for (int i = 2; i >= 0; --i) {
                        if (!nf_zero_test_split(orig[static_cast<size_t>(i)], "point normalization")) {
                            chart = i;
                            break;
                        }
                    }
                    if (chart < 0) throw std::logic_error("projective point with all coordinates zero");
                    NFElem scale = orig[static_cast<size_t>(chart)].invert();
                    for (auto& c : orig) c = c * scale;
                    pt.chart = chart;
                    pt.coords = orig;

                    // a-posteriori validation: the original equation and all
                    // three partials vanish exactly at the point
                    for (const QMPoly* q : {&f, &fx, &fy, &fz})
                        if (!eval_at(*q, pt.coords).is_zero())
                            throw std::logic_error("singular-point candidate failed exact validation");

                    detail::BranchOutcome out;
                    out.has_point = true;
                    auto [k, fk] = multiplicity_and_initial_form(f, pt);
                    if (k < 2) throw std::logic_error("validated singular point with multiplicity < 2");
                    out.rec.point = pt;
                    out.rec.k = k;
                    out.rec.initial_form = fk;
                    out.rec.ordinary = is_ordinary_form(fk);
                    if (out.rec.ordinary) {
                        auto [slopes, shear] = tangent_slopes_of(fk, k);
                        out.rec.tangent_slopes = slopes;
                        out.rec.slope_shear = shear;
                    }
                    return out;
                });
            std::vector<SingularPointRecord> recs;
            for (auto& [K, outcome] : branches)
                if (outcome.has_point) recs.push_back(std::move(outcome.rec));
            return recs;
        } catch (const RetryTransform&) {
            continue;
        }
    }
    throw CurveError("coordinate-change sequence exhausted while separating singular points");
}

// public wrapper matching the staged operation: slopes of an existing record
inline NFPoly tangent_slopes(const SingularPointRecord& rec) {
    if (!rec.ordinary) throw CurveError("tangent slopes are defined for ordinary points only");
    return rec.tangent_slopes;
}

// ---------------------------------------------------------------------------
// user-supplied component data

struct ComponentData {
    std::vector<QMPoly> factors;          // g_j, product = f up to scalar
    std::vector<int> degrees;             // d_j
    std::vector<std::vector<int>> counts; // b[i][j]: multiplicity of factor j at record i
};

// local multiplicity of a factor at a record's point (0 if it misses it);
// may split the record's branch, hence run under run_on_branches upstream.
inline int local_multiplicity(const QMPoly& factor, const ProjectivePoint& pt) {
    NFMPoly t = local_expansion(factor, pt);
    int m = min_total_degree_split(t);
    if (m < 0) throw CurveError("component vanishes identically: not coprime to the others");
    return m;
}

namespace detail {

inline bool proportional(const QMPoly& a, const QMPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    const auto& [ea, ca] = *a.terms().rbegin();
    const auto& [eb, cb] = *b.terms().rbegin();
    if (ea != eb) return false;
    return a.scaled(cb) == b.scaled(ca);
}

// certified pairwise-coprimality of two homogeneous forms: in a chart with
// z dividing neither, shared factors are either y-free (caught by the
// content gcd) or y-involving (caught by Res_y == 0).
inline bool homogeneous_coprime(const QMPoly& a, const QMPoly& b) {
    for (const QMat3& M : coordinate_changes()) {
        QMPoly ga = M.apply(a), gb = M.apply(b);
        std::vector<QMPoly> at_inf = {QMPoly::variable(proj_vars(), 0),
                                      QMPoly::variable(proj_vars(), 1), QMPoly(proj_vars())};
        if (ga.compose(at_inf).is_zero() || gb.compose(at_inf).is_zero()) continue;
        std::vector<QMPoly> chart = {QMPoly::variable(proj_vars(), 0),
                                     QMPoly::variable(proj_vars(), 1),
                                     QMPoly::constant(proj_vars(), Rational(1))};
        UPoly<QPoly> ua = to_bivariate(ga.compose(chart), 1, 0);
        UPoly<QPoly> ub = to_bivariate(gb.compose(chart), 1, 0);
        QPoly ca = content_of(ua), cb = content_of(ub);
        if (gcd(ca, cb).degree() > 0) return false;
        if (ua.degree() >= 1 && ub.degree() >= 1) {
            if (resultant(ua, ub).is_zero()) return false;
            return true;
        }
        if (ua.degree() < 1 && ub.degree() < 1) return true; // both pure in x; contents decided
        return true; // one is y-free: only content sharing was possible
    }
    throw CurveError("coordinate-change sequence exhausted in coprimality test");
}

} // namespace detail

// Validates a claimed factorization of f and computes the branch-count
// matrix b[i][j]. Records may be refined (split) in the process; the
// refined list replaces `records`.
inline ComponentData validate_components(const QMPoly& f, const std::vector<QMPoly>& factors,
                                         std::vector<SingularPointRecord>& records) {
    if (factors.empty()) throw CurveError("component list is empty");
    ComponentData data;
    QMPoly prod = QMPoly::constant(f.vars(), Rational(1));
    for (const QMPoly& g : factors) {
        if (g.is_zero() || !g.is_homogeneous() || g.total_degree() < 1)
            throw CurveError("each component must be homogeneous of degree >= 1");
        if (!is_squarefree_homogeneous(g))
            throw CurveError("component '" + mpoly_to_string(g) + "' is not squarefree");
        data.factors.push_back(g);
        data.degrees.push_back(g.total_degree());
        prod = prod * g;
    }
    if (!detail::proportional(prod, f))
        throw CurveError("product of components does not reproduce the curve equation");
    for (size_t i = 0; i < factors.size(); ++i)
        for (size_t j = i + 1; j < factors.size(); ++j)
            if (!detail::homogeneous_coprime(factors[i], factors[j]))
                throw CurveError("components " + std::to_string(i) + " and " + std::to_string(j) +
                                 " share a factor");

    std::vector<SingularPointRecord> refined;
    for (const SingularPointRecord& rec : records) {
        auto rows = run_on_branches<std::vector<int>>(
            "t", rec.point.modulus(), [&](const FieldPtr& K) {
                SingularPointRecord r = rec; // rebase the record onto this branch
                r.point.field = K;
                for (auto& c : r.point.coords) c = rebase(c, K);
                std::vector<int> row;
                int total = 0;
                for (const QMPoly& g : data.factors) {
                    int b = local_multiplicity(g, r.point);
                    row.push_back(b);
                    total += b;
                }
                if (total != r.k)
                    throw CurveError("branch counts at a singular point do not sum to its multiplicity");
                return row;
            });
        for (auto& [K, row] : rows) {
            SingularPointRecord r = rec;
            r.point.field = K;
            for (auto& c : r.point.coords) c = rebase(c, K);
            NFPoly slopes = r.tangent_slopes;
            if (!slopes.is_zero()) {
                std::vector<NFElem> cs;
                for (int i = 0; i <= slopes.degree(); ++i) cs.push_back(rebase(slopes.coeff(i), K));
                r.tangent_slopes = NFPoly(std::move(cs));
            }
            NFMPoly form(r.initial_form.vars());
            for (const auto& [e, c] : r.initial_form.terms()) form.add_term(e, rebase(c, K));
            r.initial_form = form;
            refined.push_back(std::move(r));
            data.counts.push_back(row);
        }
    }
    records = std::move(refined);
    return data;
}

} // namespace sislne
