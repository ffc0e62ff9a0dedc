#pragma once

// Builders for the decorated resolution trees: T_i for a single ordinary
// point of multiplicity k, the bouquet T of the whole tangent cone (with
// the line-arrangement case and the separation-node case), and the surface
// graph G0 with its (H).E = 0 validation. Tree decorations are never
// hardcoded: they come from the cluster engine and are cross-checked
// against the intersection-matrix oracle on every build.

#include "sislne/cluster.hpp"
#include "sislne/dual_graph.hpp"
#include "sislne/sis.hpp"

namespace sislne {

struct GraphBuildError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

struct TreePlan {
    int k = 0;
    int free_point = 0;        // cluster index of the first (free) point
    int delta = 0;             // cluster index of the node divisor
    std::vector<int> bamboo;   // cluster indices of the string divisors
    int sep = -1;              // separation node (Case 2)
};

// one cusp sequence appended to an existing cluster rooted at 0
inline TreePlan grow_cusp(Cluster& c, int k) {
    TreePlan plan;
    plan.k = k;
    plan.free_point = c.size();
    c = c.blow_up_free(0);
    int last = plan.free_point;
    for (int i = 2; i <= k; ++i) {
        c = c.blow_up_satellite(0, last);
        last = c.size() - 1;
    }
    plan.delta = last;
    for (int p = plan.free_point; p < plan.delta; ++p) plan.bamboo.push_back(p);
    return plan;
}

struct DecoratedCluster {
    Cluster cluster;
    std::vector<int> weights;
    std::vector<Integer> m;
    std::vector<Rational> q;
};

inline DecoratedCluster decorate(Cluster c) {
    DecoratedCluster d{std::move(c), {}, {}, {}};
    d.weights = d.cluster.euler_weights();
    d.m = d.cluster.multiplicities();
    d.q = d.cluster.inner_rates();
    check_oracle_agreement(d.cluster); // bookkeeping == matrix oracle, always
    return d;
}

inline GraphVertex tree_vertex(const DecoratedCluster& d, int idx, std::string id, VertexKind kind) {
    GraphVertex v;
    v.id = std::move(id);
    v.kind = kind;
    v.euler_weight = d.weights[static_cast<size_t>(idx)];
    v.m = static_cast<long long>(d.m[static_cast<size_t>(idx)]);
    v.q = d.q[static_cast<size_t>(idx)];
    v.in_t_prime = false;
    return v;
}

} // namespace detail

// The resolution tree of one ordinary point of multiplicity k: root +
// bamboo of k-1 strings + node carrying k-1 arrows.
inline DualGraph build_Ti(int k) {
    if (k < 2) throw GraphBuildError("multiplicity must be at least 2");
    Cluster c = Cluster::origin();
    detail::TreePlan plan = detail::grow_cusp(c, k);
    auto d = detail::decorate(std::move(c));

    DualGraph g;
    g.meta.graph = "T";
    g.meta.r = 1;
    g.meta.k_list = {k};
    std::map<int, std::string> id;
    id[0] = "root";
    id[plan.delta] = "delta";
    for (size_t i = 0; i < plan.bamboo.size(); ++i)
        id[plan.bamboo[i]] = "b" + std::to_string(i + 1);

    for (const auto& [idx, name] : id) {
        VertexKind kind = idx == 0             ? VertexKind::Root
                          : idx == plan.delta ? VertexKind::DeltaNode
                                              : VertexKind::StringVertex;
        GraphVertex v = detail::tree_vertex(d, idx, name, kind);
        if (kind != VertexKind::StringVertex) v.in_t_prime = true;
        if (kind == VertexKind::DeltaNode) v.arrows = k - 1;
        g.add_vertex(std::move(v));
    }
    for (const auto& [a, b] : d.cluster.adjacency()) g.add_edge(id.at(a), id.at(b));
    g.sort();
    return g;
}

// The full tree T of a report with ordinary tangent cone: a bouquet of the
// per-point trees glued at the root. With smooth polar components present
// (N0 > 0) the root is itself a node: it carries N0 arrows and every
// root-delta edge is blown up once, creating separation nodes.
inline DualGraph build_T(const SisReport& report) {
    if (report.lne != LneVerdict::Yes)
        throw GraphBuildError("the resolution tree is defined only for the ordinary (LNE) case");
    const int n0 = report.n0.value();
    const bool case2 = n0 > 0;

    Cluster c = Cluster::origin();
    std::vector<detail::TreePlan> plans;
    for (const auto& rec : report.records)
        for (int copy = 0; copy < rec.degree(); ++copy)
            plans.push_back(detail::grow_cusp(c, rec.k));
    if (case2)
        for (auto& plan : plans) {
            c = c.blow_up_satellite(0, plan.delta);
            plan.sep = c.size() - 1;
        }
    auto d = detail::decorate(std::move(c));

    DualGraph g;
    g.meta.graph = "T";
    g.meta.case_tag = std::string(to_string(case2 ? CaseTag::Case2 : CaseTag::Case1LineArrangement));
    g.meta.r = report.r;
    g.meta.k_list = report.k_list();
    g.meta.n0 = n0;
    if (case2) g.meta.derived = {"q@separationNode"};

    std::map<int, std::string> id;
    id[0] = "root";
    for (size_t t = 0; t < plans.size(); ++t) {
        const auto& plan = plans[t];
        std::string prefix = "t" + std::to_string(t) + ".";
        id[plan.delta] = prefix + "delta";
        for (size_t i = 0; i < plan.bamboo.size(); ++i)
            id[plan.bamboo[i]] = prefix + "b" + std::to_string(i + 1);
        if (plan.sep >= 0) id[plan.sep] = prefix + "sep";
    }

    for (const auto& [idx, name] : id) {
        VertexKind kind = VertexKind::StringVertex;
        int arrows = 0;
        bool tprime = false;
        if (idx == 0) {
            kind = VertexKind::Root;
            arrows = case2 ? n0 : 0;
            tprime = true;
        } else {
            for (const auto& plan : plans) {
                if (idx == plan.delta) {
                    kind = VertexKind::DeltaNode;
                    arrows = plan.k - 1;
                    tprime = true;
                } else if (idx == plan.sep) {
                    kind = VertexKind::SeparationNode;
                    tprime = true;
                }
            }
        }
        GraphVertex v = detail::tree_vertex(d, idx, name, kind);
        v.arrows = arrows;
        v.in_t_prime = tprime;
        g.add_vertex(std::move(v));
    }
    for (const auto& [a, b] : d.cluster.adjacency()) g.add_edge(id.at(a), id.at(b));
    g.sort();

    // separation-node decorations promised by the construction
    for (const auto& plan : plans) {
        if (plan.sep < 0) continue;
        const auto& sep = g.vertex(id.at(plan.sep));
        if (sep.m != plan.k + 1 || sep.q.value() != Rational(plan.k + 2, plan.k + 1))
            throw GraphBuildError("separation-node decoration mismatch");
    }
    return g;
}

// The surface graph G0: one circled L-node per tangent-cone component, one
// P-node per singular point (created by the single blow-up that resolves
// it), edges weighted by branch counts. Euler weights, genus and the
// smooth-polar arrow distribution come from the (H).E = 0 relation and the
// Bezout count; check_H_relation re-validates them from the graph alone.
inline DualGraph build_G0(const SisReport& report) {
    if (report.lne != LneVerdict::Yes)
        throw GraphBuildError("the surface graph is defined only for the ordinary (LNE) case");
    if (!report.components)
        throw GraphBuildError("building the surface graph requires the component list of the tangent cone");
    const ComponentData& comp = *report.components;
    const int d = report.d;
    const int n0 = report.n0.value();

    DualGraph g;
    g.meta.graph = "G0";
    g.meta.case_tag = std::string(to_string(report.case_tag.value()));
    g.meta.r = report.r;
    g.meta.k_list = report.k_list();
    g.meta.n0 = n0;
    g.meta.derived = {"arrows@LNode"};

    // per-component accumulators over geometric points
    const size_t nfac = comp.factors.size();
    std::vector<long long> weight_sum(nfac, 0), genus_drop(nfac, 0), arrow_drop(nfac, 0);

    size_t geom = 0;
    for (size_t rec_i = 0; rec_i < report.records.size(); ++rec_i) {
        const auto& rec = report.records[rec_i];
        const auto& row = comp.counts.at(rec_i);
        for (int copy = 0; copy < rec.degree(); ++copy, ++geom) {
            std::string pid = "P" + std::to_string(geom);
            GraphVertex p;
            p.id = pid;
            p.kind = VertexKind::PNode;
            p.euler_weight = -1;
            p.m = rec.k;
            p.arrows = rec.k - 1;
            g.add_vertex(std::move(p));
            for (size_t j = 0; j < nfac; ++j) {
                if (row[j] == 0) continue;
                g.add_edge(pid, "L" + std::to_string(j), row[j]);
                weight_sum[j] += static_cast<long long>(rec.k) * row[j];
                genus_drop[j] += static_cast<long long>(row[j]) * (row[j] - 1) / 2;
                arrow_drop[j] += static_cast<long long>(row[j]) * (rec.k - 1);
            }
        }
    }

    for (size_t j = 0; j < nfac; ++j) {
        const int dj = comp.degrees[j];
        GraphVertex l;
        l.id = "L" + std::to_string(j);
        l.kind = VertexKind::LNode;
        l.m = 1;
        l.component_degree = dj;
        l.euler_weight = static_cast<int>(-dj - weight_sum[j]);
        l.genus = static_cast<long long>(dj - 1) * (dj - 2) / 2 - genus_drop[j];
        l.arrows = static_cast<int>(static_cast<long long>(dj) * (d - 1) - arrow_drop[j]);
        if (l.arrows < 0) throw GraphBuildError("negative smooth-polar arrow count");
        if (*l.genus < 0)
            throw GraphBuildError("negative genus for component " + std::to_string(j) +
                                  "; is the supplied factor absolutely irreducible?");
        g.add_vertex(std::move(l));
    }
    g.sort();

    int arrow_total = 0;
    for (const auto& v : g.vertices)
        if (v.kind == VertexKind::LNode) arrow_total += v.arrows;
    if (arrow_total != n0)
        throw GraphBuildError("smooth-polar arrows do not sum to the Bezout count");
    return g;
}

// (H).E = 0 for every exceptional component: m_v w_v + sum over incident
// edges of m_u * mult + (hyperplane strict transform: degree for L-nodes)
// must vanish.
inline bool check_H_relation(const DualGraph& g) {
    for (const auto& v : g.vertices) {
        long long acc = v.m * v.euler_weight;
        for (const auto& e : g.edges) {
            if (e.a == v.id) acc += g.vertex(e.b).m * e.mult;
            if (e.b == v.id) acc += g.vertex(e.a).m * e.mult;
        }
        if (v.kind == VertexKind::LNode) acc += v.component_degree.value();
        if (acc != 0) return false;
    }
    return true;
}

} // namespace sislne
