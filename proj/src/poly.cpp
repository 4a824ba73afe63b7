#include "matsing/poly.hpp"

#include <algorithm>

namespace matsing {

Polynomial::Polynomial(RingPtr ring, std::vector<Term> unsorted_terms)
    : ring_(std::move(ring)), terms_(std::move(unsorted_terms)) {
    const Field& F = ring_->field;
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return ring_->cmp(a.m, b.m) > 0; });
    // merge equal monomials, drop zeros
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().m == t.m) {
            out.back().c = fe_add(F, out.back().c, t.c);
        } else {
            out.push_back(std::move(t));
        }
    }
    terms_.clear();
    for (auto& t : out)
        if (!fe_is_zero(F, t.c)) terms_.push_back(std::move(t));
}

const Term& Polynomial::leading() const {
    if (is_zero()) throw input_error("leading term of the zero polynomial");
    return terms_.front();
}

std::uint32_t Polynomial::degree() const {
    if (is_zero()) throw input_error("degree of the zero polynomial");
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.m.degree());
    return d;
}

std::uint32_t Polynomial::ecart() const { return degree() - leading_monomial().degree(); }

Polynomial Polynomial::constant(const RingPtr& r, const FieldElem& c) {
    Polynomial f(r);
    if (!fe_is_zero(r->field, c)) f.terms_.push_back({Monomial(r->nvars()), c});
    return f;
}

Polynomial Polynomial::variable(const RingPtr& r, std::size_t i, std::uint32_t k) {
    Polynomial f(r);
    f.terms_.push_back({Monomial::var(r->nvars(), i, k), fe_one(r->field)});
    return f;
}

Polynomial Polynomial::monomial(const RingPtr& r, const Monomial& m, const FieldElem& c) {
    Polynomial f(r);
    if (!fe_is_zero(r->field, c)) f.terms_.push_back({m, c});
    return f;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_, "polynomial addition");
    const Field& F = ring_->field;
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = ring_->cmp(terms_[i].m, o.terms_[j].m);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            FieldElem s = fe_add(F, terms_[i].c, o.terms_[j].c);
            if (!fe_is_zero(F, s)) r.terms_.push_back({terms_[i].m, std::move(s)});
            ++i; ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-() const {
    const Field& F = ring_->field;
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.m, fe_neg(F, t.c)});
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::term_mul(const FieldElem& c, const Monomial& m) const {
    const Field& F = ring_->field;
    Polynomial r(ring_);
    if (fe_is_zero(F, c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        FieldElem p = fe_mul(F, t.c, c);
        if (!fe_is_zero(F, p)) r.terms_.push_back({t.m.times(m), std::move(p)});
    }
    return r;
}

Polynomial Polynomial::scaled(const FieldElem& c) const {
    return term_mul(c, Monomial(ring_->nvars()));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_, "polynomial multiplication");
    Polynomial acc(ring_);
    // multiply by the shorter factor termwise
    const Polynomial& a = terms_.size() <= o.terms_.size() ? *this : o;
    const Polynomial& b = terms_.size() <= o.terms_.size() ? o : *this;
    for (const auto& t : a.terms_) acc = acc + b.term_mul(t.c, t.m);
    return acc;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(fe_inv(ring_->field, leading_coeff()));
}

Polynomial Polynomial::derivative(std::size_t var) const {
    const Field& F = ring_->field;
    Polynomial r(ring_);
    for (const auto& t : terms_) {
        std::uint32_t e = t.m.exp(var);
        if (e == 0) continue;
        FieldElem c = fe_mul(F, t.c, fe_from_long(F, static_cast<long>(e)));
        if (fe_is_zero(F, c)) continue;
        auto exps = t.m.exps();
        exps[var] -= 1;
        r.terms_.push_back({Monomial(std::move(exps)), std::move(c)});
    }
    // termwise derivative preserves strict descending order only for
    // degree-compatible orders; re-sort to stay safe under block orders
    return Polynomial(ring_, std::move(r.terms_));
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    const Field& F = ring_->field;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].m != o.terms_[i].m) return false;
        if (!fe_eq(F, terms_[i].c, o.terms_[i].c)) return false;
    }
    return true;
}

Polynomial pow(const Polynomial& f, std::uint32_t k) {
    Polynomial r = Polynomial::one(f.ring());
    Polynomial base = f;
    while (k > 0) {
        if (k & 1u) r = r * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return r;
}

}  // namespace matsing
