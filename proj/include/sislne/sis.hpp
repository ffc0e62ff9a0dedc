#pragma once

// The superisolated-singularity model for surfaces f_d + f_{d+1} = 0:
// input validation, the superisolatedness check (the degree-(d+1) part must
// avoid every singular point of the tangent-cone curve {f_d = 0}), the
// normal-embedding verdict, and the polar/discriminant counts driving the
// dual graphs.

#include "sislne/curve.hpp"

namespace sislne {

struct SisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SisInput {
    QMPoly fd;                            // homogeneous, degree d >= 2, squarefree
    QMPoly fd1;                           // homogeneous, degree d+1, nonzero
    std::vector<QMPoly> factors;          // optional component list for fd

    int d = 0;

    static SisInput make(QMPoly fd, QMPoly fd1, std::vector<QMPoly> factors = {}) {
        SisInput in;
        in.fd = std::move(fd);
        in.fd1 = std::move(fd1);
        in.factors = std::move(factors);
        in.validate();
        return in;
    }

    void validate() {
        if (fd.is_zero() || !fd.is_homogeneous())
            throw SisError("tangent-cone part must be a nonzero homogeneous polynomial");
        d = fd.total_degree();
        if (d < 2) throw SisError("tangent-cone degree must be at least 2");
        if (fd1.is_zero() || !fd1.is_homogeneous())
            throw SisError("the degree-(d+1) part must be a nonzero homogeneous polynomial; "
                           "equations are restricted to the two-piece form f_d + f_{d+1}");
        if (fd1.total_degree() != d + 1)
            throw SisError("degree mismatch: expected the second part to have degree exactly d+1 = " +
                           std::to_string(d + 1));
        if (!is_squarefree_homogeneous(fd))
            throw SisError("tangent-cone curve is not reduced (f_d has a repeated factor)");
    }
};

enum class LneVerdict { Yes, No, NotApplicable };

inline const char* to_string(LneVerdict v) {
    switch (v) {
        case LneVerdict::Yes: return "yes";
        case LneVerdict::No: return "no";
        default: return "not-applicable";
    }
}

enum class CaseTag { Case1LineArrangement, Case2 };

inline const char* to_string(CaseTag t) {
    return t == CaseTag::Case1LineArrangement ? "Case1" : "Case2";
}

struct SisReport {
    int d = 0;
    bool superisolated = false;
    LneVerdict lne = LneVerdict::NotApplicable;
    std::vector<SingularPointRecord> records;
    int r = 0;                           // geometric number of singular points
    std::optional<CaseTag> case_tag;     // set when lne == Yes
    std::optional<int> n0;               // smooth-polar component count, lne == Yes
    std::vector<int> polar_per_point;    // k_i - 1, one entry per record
    std::optional<size_t> witness;       // record index of a non-ordinary point
    std::optional<ComponentData> components;

    std::vector<int> k_list() const {
        // one entry per geometric point, descending
        std::vector<int> ks;
        for (const auto& rec : records)
            for (int c = 0; c < rec.degree(); ++c) ks.push_back(rec.k);
        std::sort(ks.rbegin(), ks.rend());
        return ks;
    }
};

// superisolated iff f_{d+1}(p) is invertible at every singular point: a
// zero-divisor value means some conjugate point lies on {f_{d+1} = 0}.
inline bool check_superisolated(const SisInput& in, const std::vector<SingularPointRecord>& records) {
    for (const auto& rec : records) {
        NFElem value = eval_at(in.fd1, rec.point.coords);
        if (!nf_is_invertible(value)) return false;
    }
    return true;
}

// Bezout count of polar components meeting the tangent cone at smooth
// points: N0 = d(d-1) - sum k_i (k_i - 1).
inline int smooth_polar_count(int d, const std::vector<SingularPointRecord>& records) {
    int n0 = d * (d - 1);
    for (const auto& rec : records) n0 -= rec.degree() * rec.k * (rec.k - 1);
    if (n0 < 0) throw std::logic_error("Bezout bound violated; corrupted records");
    return n0;
}

inline void polar_counts(SisReport& report) {
    if (report.lne != LneVerdict::Yes)
        throw SisError("polar counts are defined only for the ordinary (LNE) case");
    report.polar_per_point.clear();
    for (const auto& rec : report.records) report.polar_per_point.push_back(rec.k - 1);
    int n0 = report.n0.value();
    report.case_tag = (n0 == 0) ? CaseTag::Case1LineArrangement : CaseTag::Case2;
}

inline SisReport decide_lne(const SisInput& in) {
    SisReport report;
    report.d = in.d;
    report.records = singular_points(in.fd);
    if (!in.factors.empty())
        report.components = validate_components(in.fd, in.factors, report.records);
    report.r = 0;
    for (const auto& rec : report.records) report.r += rec.degree();
    report.superisolated = check_superisolated(in, report.records);
    if (!report.superisolated) {
        report.lne = LneVerdict::NotApplicable; // the theorem's hypothesis fails
        return report;
    }
    bool all_ordinary = true;
    for (size_t i = 0; i < report.records.size(); ++i) {
        if (!report.records[i].ordinary) {
            all_ordinary = false;
            if (!report.witness) report.witness = i;
        }
    }
    report.lne = all_ordinary ? LneVerdict::Yes : LneVerdict::No;
    if (report.lne == LneVerdict::Yes) {
        report.n0 = smooth_polar_count(report.d, report.records);
        polar_counts(report);
        if (report.components) {
            // the two Case-1 characterizations must agree: N0 = 0 iff all
            // component degrees are 1
            bool all_lines = true;
            for (int dj : report.components->degrees)
                if (dj != 1) all_lines = false;
            if (all_lines != (report.n0.value() == 0))
                throw std::logic_error("case classification mismatch between N0 and component degrees");
        }
    }
    return report;
}

} // namespace sislne
