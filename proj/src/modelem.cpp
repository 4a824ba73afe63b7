#include "matsing/modelem.hpp"

#include <algorithm>

namespace matsing {

int ModuleElem::cmp_pos(const ModTerm& a, const ModTerm& b) const {
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return ring_->cmp(a.m, b.m);
}

ModuleElem::ModuleElem(RingPtr ring, std::uint32_t rank, std::vector<ModTerm> unsorted)
    : ring_(std::move(ring)), rank_(rank), terms_(std::move(unsorted)) {
    const Field& F = ring_->field;
    for (const auto& t : terms_)
        if (t.comp >= rank_) throw input_error("module term component out of range");
    std::sort(terms_.begin(), terms_.end(),
              [&](const ModTerm& a, const ModTerm& b) { return cmp_pos(a, b) > 0; });
    std::vector<ModTerm> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().comp == t.comp && out.back().m == t.m) {
            out.back().c = fe_add(F, out.back().c, t.c);
        } else {
            out.push_back(std::move(t));
        }
    }
    terms_.clear();
    for (auto& t : out)
        if (!fe_is_zero(F, t.c)) terms_.push_back(std::move(t));
}

const ModTerm& ModuleElem::leading() const {
    if (is_zero()) throw input_error("leading term of the zero module element");
    return terms_.front();
}

std::uint32_t ModuleElem::ecart(std::uint32_t comp_bound) const {
    const ModTerm& lt = leading();
    if (lt.comp >= comp_bound) comp_bound = UINT32_MAX;
    std::uint32_t d = lt.m.degree();
    for (const auto& t : terms_)
        if (t.comp < comp_bound) d = std::max(d, t.m.degree());
    return d - lt.m.degree();
}

ModuleElem ModuleElem::operator+(const ModuleElem& o) const {
    require_same_ring(ring_, o.ring_, "module addition");
    if (rank_ != o.rank_) throw input_error("module rank mismatch");
    const Field& F = ring_->field;
    ModuleElem r(ring_, rank_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = cmp_pos(terms_[i], o.terms_[j]);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            FieldElem s = fe_add(F, terms_[i].c, o.terms_[j].c);
            if (!fe_is_zero(F, s)) r.terms_.push_back({terms_[i].comp, terms_[i].m, std::move(s)});
            ++i; ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

ModuleElem ModuleElem::operator-() const {
    const Field& F = ring_->field;
    ModuleElem r(ring_, rank_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.comp, t.m, fe_neg(F, t.c)});
    return r;
}

ModuleElem ModuleElem::term_mul(const FieldElem& c, const Monomial& m) const {
    const Field& F = ring_->field;
    ModuleElem r(ring_, rank_);
    if (fe_is_zero(F, c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        FieldElem p = fe_mul(F, t.c, c);
        if (!fe_is_zero(F, p)) r.terms_.push_back({t.comp, t.m.times(m), std::move(p)});
    }
    return r;
}

ModuleElem ModuleElem::scaled(const FieldElem& c) const {
    return term_mul(c, Monomial(ring_->nvars()));
}

ModuleElem ModuleElem::monic() const {
    if (is_zero()) return *this;
    return scaled(fe_inv(ring_->field, leading().c));
}

bool ModuleElem::operator==(const ModuleElem& o) const {
    if (!same_ring(ring_, o.ring_) || rank_ != o.rank_) return false;
    if (terms_.size() != o.terms_.size()) return false;
    const Field& F = ring_->field;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].comp != o.terms_[i].comp || terms_[i].m != o.terms_[i].m) return false;
        if (!fe_eq(F, terms_[i].c, o.terms_[i].c)) return false;
    }
    return true;
}

ModuleElem ModuleElem::from_poly(const Polynomial& f, std::uint32_t rank, std::uint32_t comp) {
    ModuleElem r(f.ring(), rank);
    std::vector<ModTerm> ts;
    ts.reserve(f.terms().size());
    for (const auto& t : f.terms()) ts.push_back({comp, t.m, t.c});
    return ModuleElem(f.ring(), rank, std::move(ts));
}

ModuleElem ModuleElem::basis_vector(const RingPtr& r, std::uint32_t rank, std::uint32_t comp) {
    return from_poly(Polynomial::one(r), rank, comp);
}

Polynomial ModuleElem::component(std::uint32_t comp) const {
    std::vector<Term> ts;
    for (const auto& t : terms_)
        if (t.comp == comp) ts.push_back({t.m, t.c});
    return Polynomial(ring_, std::move(ts));
}

ModuleElem ModuleElem::slice_tail(std::uint32_t lo) const {
    ModuleElem r(ring_, rank_ - lo);
    std::vector<ModTerm> ts;
    for (const auto& t : terms_)
        if (t.comp >= lo) ts.push_back({t.comp - lo, t.m, t.c});
    return ModuleElem(ring_, rank_ - lo, std::move(ts));
}

bool ModuleElem::supported_below(std::uint32_t bound) const {
    for (const auto& t : terms_)
        if (t.comp >= bound) return false;
    return true;
}

}  // namespace matsing
