#pragma once

#include <vector>

#include "matsing/ring.hpp"

namespace matsing {

struct Term {
    Monomial m;
    FieldElem c;
};

// Sparse multivariate polynomial with exact coefficients.  Terms are kept
// sorted strictly descending under the ring's order, leading term first,
// and never carry zero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    Polynomial(RingPtr ring, std::vector<Term> unsorted_terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    const Term& leading() const;
    const Monomial& leading_monomial() const { return leading().m; }
    const FieldElem& leading_coeff() const { return leading().c; }

    // total degree of the polynomial (max over terms); error on zero
    std::uint32_t degree() const;
    // degree(f) - degree(LM(f)); nonnegative under local orders
    std::uint32_t ecart() const;

    bool is_constant() const { return terms_.size() == 1 && terms_[0].m.is_one(); }
    // unit of the localization: nonzero constant leading monomial
    bool is_unit() const { return !is_zero() && leading_monomial().is_one(); }

    static Polynomial zero(const RingPtr& r) { return Polynomial(r); }
    static Polynomial constant(const RingPtr& r, const FieldElem& c);
    static Polynomial one(const RingPtr& r) { return constant(r, fe_one(r->field)); }
    static Polynomial variable(const RingPtr& r, std::size_t i, std::uint32_t k = 1);
    static Polynomial monomial(const RingPtr& r, const Monomial& m, const FieldElem& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;

    Polynomial scaled(const FieldElem& c) const;                     // c * f
    Polynomial term_mul(const FieldElem& c, const Monomial& m) const;  // c*x^m * f
    Polynomial monic() const;  // divide by leading coefficient

    Polynomial derivative(std::size_t var) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& f, std::uint32_t k);

}  // namespace matsing
