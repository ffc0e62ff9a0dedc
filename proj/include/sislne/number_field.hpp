#pragma once

// Number-field arithmetic with dynamic evaluation (D5): the modulus is kept
// monic and squarefree but is never factored. Whenever an inversion or a
// decision-relevant zero test meets a zero divisor, the discovered splitting
// of the modulus escapes as a SplitEvent and the caller re-runs the
// computation on each branch (run_on_branches below).

#include "sislne/upoly.hpp"

#include <deque>
#include <memory>
#include <utility>

namespace sislne {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

struct SplitEvent {
    QPoly m1, m2;        // coprime nonconstant factors, m1*m2 = modulus (monic)
    std::string context; // what triggered the split, for diagnostics
};

class NumberField {
public:
    NumberField(std::string generator, QPoly modulus)
        : gen_(std::move(generator)), modulus_(std::move(modulus)) {
        if (modulus_.degree() < 1) throw std::invalid_argument("number field modulus must be nonconstant");
        modulus_ = modulus_.monic();
        if (!is_squarefree(modulus_)) throw std::invalid_argument("number field modulus must be squarefree");
    }
    const std::string& generator() const { return gen_; }
    const QPoly& modulus() const { return modulus_; }
    int degree() const { return modulus_.degree(); }

    static FieldPtr make(std::string generator, QPoly modulus) {
        return std::make_shared<NumberField>(std::move(generator), std::move(modulus));
    }

private:
    std::string gen_;
    QPoly modulus_;
};

// Element of Q[t]/(m). A null field means a plain rational constant, which
// embeds in any field; arithmetic adopts the non-null side's field. This
// gives UPoly/MPoly a usable default "zero" without a field context.
class NFElem {
public:
    NFElem() = default;
    explicit NFElem(Rational r) {
        if (!r.is_zero()) rep_ = QPoly::constant(std::move(r));
    }
    NFElem(FieldPtr f, QPoly rep) : field_(std::move(f)), rep_(std::move(rep)) { reduce(); }

    static NFElem generator(const FieldPtr& f) { return NFElem(f, QPoly::variable()); }
    static NFElem zero() { return NFElem(); }
    static NFElem one() { return NFElem(Rational(1)); }

    const FieldPtr& field() const { return field_; }
    const QPoly& rep() const { return rep_; }
    bool is_rational_constant() const { return rep_.degree() <= 0; }
    Rational rational_value() const {
        if (rep_.is_zero()) return Rational(0);
        if (rep_.degree() > 0) throw std::logic_error("NFElem is not a rational constant");
        return rep_[0];
    }

    // provably zero in every branch of the modulus
    bool is_zero() const { return rep_.is_zero(); }

    friend NFElem operator+(const NFElem& a, const NFElem& b) {
        FieldPtr f = unify(a, b);
        return NFElem(f, a.rep_ + b.rep_);
    }
    friend NFElem operator-(const NFElem& a, const NFElem& b) {
        FieldPtr f = unify(a, b);
        return NFElem(f, a.rep_ - b.rep_);
    }
    friend NFElem operator*(const NFElem& a, const NFElem& b) {
        FieldPtr f = unify(a, b);
        return NFElem(f, a.rep_ * b.rep_);
    }
    NFElem operator-() const { return NFElem(field_, -rep_); }
    friend bool operator==(const NFElem& a, const NFElem& b) { return (a - b).is_zero(); }
    friend bool operator!=(const NFElem& a, const NFElem& b) { return !(a == b); }

    // Extended Euclid against the modulus; throws SplitEvent on a zero
    // divisor (the D5 principle) and domain_error on true zero.
    NFElem invert() const {
        if (rep_.is_zero()) throw std::domain_error("inversion of zero in number field");
        if (!field_) return NFElem(Rational(1) / rep_[0]);
        const QPoly& m = field_->modulus();
        auto [g, u, v] = xgcd(rep_, m);
        (void)v;
        if (g.degree() == 0) return NFElem(field_, u); // u*rep = 1 mod m (g normalized to 1)
        if (g.degree() == m.degree()) throw std::domain_error("inversion of zero in number field");
        throw SplitEvent{g, (m / g).monic(), "inversion of a zero divisor"};
    }

private:
    void reduce() {
        if (field_ && rep_.degree() >= field_->modulus().degree()) rep_ = rep_ % field_->modulus();
    }
    static FieldPtr unify(const NFElem& a, const NFElem& b) {
        if (!a.field_) return b.field_;
        if (!b.field_) return a.field_;
        if (a.field_ == b.field_ || a.field_->modulus() == b.field_->modulus()) return a.field_;
        throw std::logic_error("NFElem arithmetic across distinct number fields");
    }

    FieldPtr field_; // null: rational constant
    QPoly rep_;      // reduced mod modulus, no trailing zeros
};

// Semantically honest zero test: true/false only when the answer is the
// same in every branch, otherwise splits. Use where a computation's shape
// depends on the answer (degree drops, minimal term selection, ...).
inline bool nf_zero_test_split(const NFElem& e, const char* context = "zero test") {
    if (e.is_zero()) return true;
    if (!e.field() || e.is_rational_constant()) return false;
    const QPoly& m = e.field()->modulus();
    QPoly g = gcd(e.rep(), m);
    if (g.degree() == 0) return false;
    if (g.degree() == m.degree()) return true; // rep is a multiple of m (can't happen when reduced)
    throw SplitEvent{g, (m / g).monic(), context};
}

// invertible in every branch (no split needed to answer)
inline bool nf_is_invertible(const NFElem& e) {
    if (e.is_zero()) return false;
    if (!e.field() || e.is_rational_constant()) return true;
    return gcd(e.rep(), e.field()->modulus()).degree() == 0;
}

template <>
struct ring_ops<NFElem> {
    static NFElem zero() { return NFElem::zero(); }
    static NFElem one() { return NFElem::one(); }
    static bool is_zero(const NFElem& a) { return a.is_zero(); }
    static bool is_zero_pivot(const NFElem& a) { return nf_zero_test_split(a, "pivot selection"); }
    static NFElem neg(const NFElem& a) { return -a; }
    static NFElem add(const NFElem& a, const NFElem& b) { return a + b; }
    static NFElem sub(const NFElem& a, const NFElem& b) { return a - b; }
    static NFElem mul(const NFElem& a, const NFElem& b) { return a * b; }
    static NFElem exact_div(const NFElem& a, const NFElem& b) { return a * b.invert(); }
    static NFElem inv(const NFElem& a) { return a.invert(); }
    static constexpr bool is_field = true; // fieldwise on every branch
};

using NFPoly = UPoly<NFElem>;

inline NFPoly lift_to_field(const QPoly& p, const FieldPtr& f) {
    std::vector<NFElem> cs;
    cs.reserve(static_cast<size_t>(p.degree() + 1));
    for (int i = 0; i <= p.degree(); ++i) cs.emplace_back(p.coeff(i));
    (void)f;
    return NFPoly(std::move(cs));
}

// Reinterpret an element of Q[t]/(m) in a field with a divisor modulus.
inline NFElem rebase(const NFElem& e, const FieldPtr& f) {
    return NFElem(f, e.rep());
}

// Run fn(field) over every D5 branch of the given modulus. fn may throw
// SplitEvent; the branch is then re-run on both factors. Results arrive in
// deterministic worklist order; final moduli are pairwise coprime with
// product = modulus.
template <class T, class Fn>
std::vector<std::pair<FieldPtr, T>> run_on_branches(const std::string& gen, QPoly modulus, Fn fn) {
    std::vector<std::pair<FieldPtr, T>> out;
    std::deque<QPoly> work;
    work.push_back(modulus.monic());
    int guard = 0;
    while (!work.empty()) {
        if (++guard > 4096) throw std::runtime_error("dynamic evaluation did not terminate");
        QPoly m = work.front();
        work.pop_front();
        FieldPtr f = NumberField::make(gen, m);
        try {
            out.emplace_back(f, fn(f));
        } catch (const SplitEvent& s) {
            work.push_front(s.m2);
            work.push_front(s.m1);
        }
    }
    return out;
}

// Chinese remainder theorem in Q[t]: the unique r mod m1*m2 with
// r = r1 mod m1, r = r2 mod m2 (m1, m2 coprime).
inline QPoly crt_pair(const QPoly& m1, const QPoly& r1, const QPoly& m2, const QPoly& r2) {
    auto [g, u, v] = xgcd(m1, m2);
    if (g.degree() != 0) throw std::invalid_argument("crt_pair: moduli not coprime");
    // u*m1 + v*m2 = 1
    QPoly m = m1 * m2;
    QPoly r = r1 * v * m2 + r2 * u * m1;
    return r % m;
}

} // namespace sislne
