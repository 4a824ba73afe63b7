#include "matsing/jets.hpp"

#include <algorithm>

namespace matsing {

std::vector<FieldElem> RowSpace::reduce(std::vector<FieldElem> v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const std::size_t p = pivots_[r];
        if (fe_is_zero(F_, v[p])) continue;
        // pivot entry of the stored row is 1
        FieldElem c = v[p];
        for (std::size_t j = 0; j < width_; ++j) {
            if (fe_is_zero(F_, rows_[r][j])) continue;
            v[j] = fe_sub(F_, v[j], fe_mul(F_, c, rows_[r][j]));
        }
    }
    return v;
}

bool RowSpace::member(const std::vector<FieldElem>& v) const {
    auto r = reduce(v);
    for (const auto& x : r)
        if (!fe_is_zero(F_, x)) return false;
    return true;
}

bool RowSpace::insert(std::vector<FieldElem> v) {
    v = reduce(std::move(v));
    std::size_t pivot = width_;
    for (std::size_t j = 0; j < width_; ++j)
        if (!fe_is_zero(F_, v[j])) { pivot = j; break; }
    if (pivot == width_) return false;
    FieldElem inv = fe_inv(F_, v[pivot]);
    for (auto& x : v) x = fe_mul(F_, x, inv);
    // keep rows sorted by pivot and fully reduced against each other
    std::size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < pivot) ++at;
    rows_.insert(rows_.begin() + at, std::move(v));
    pivots_.insert(pivots_.begin() + at, pivot);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r == at) continue;
        FieldElem c = rows_[r][pivot];
        if (fe_is_zero(F_, c)) continue;
        for (std::size_t j = 0; j < width_; ++j) {
            if (fe_is_zero(F_, rows_[at][j])) continue;
            rows_[r][j] = fe_sub(F_, rows_[r][j], fe_mul(F_, c, rows_[at][j]));
        }
    }
    return true;
}

bool RowSpace::equals(const RowSpace& o) const {
    if (width_ != o.width_ || dim() != o.dim()) return false;
    for (const auto& r : rows_)
        if (!o.member(r)) return false;
    return true;
}

JetAlgebra::JetAlgebra(RingPtr ring, std::uint32_t trunc) : ring_(std::move(ring)), trunc_(trunc) {
    if (trunc_ < 1) throw input_error("jet truncation must be at least 1");
    for (std::uint32_t d = 0; d < trunc_; ++d) {
        auto level = monomials_of_degree(ring_->nvars(), d);
        std::sort(level.begin(), level.end(),
                  [](const Monomial& a, const Monomial& b) { return lex_cmp(a, b) < 0; });
        for (auto& m : level) basis_.push_back(std::move(m));
    }
    for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i].exps()] = i;
}

std::size_t JetAlgebra::index_of(const Monomial& m) const {
    auto it = index_.find(m.exps());
    if (it == index_.end()) throw input_error("monomial outside the jet basis");
    return it->second;
}

std::vector<FieldElem> JetAlgebra::project(const Polynomial& f) const {
    std::vector<FieldElem> v(dim(), fe_zero(ring_->field));
    for (const auto& t : f.terms())
        if (t.m.degree() < trunc_) v[index_of(t.m)] = t.c;
    return v;
}

std::vector<FieldElem> JetAlgebra::project(const ModuleElem& e, std::uint32_t rank) const {
    std::vector<FieldElem> v(dim() * rank, fe_zero(ring_->field));
    for (const auto& t : e.terms())
        if (t.m.degree() < trunc_) v[t.comp * dim() + index_of(t.m)] = t.c;
    return v;
}

RowSpace JetAlgebra::ideal_span(const Ideal& I) const {
    RowSpace S(ring_->field, dim());
    for (const auto& g : I.gens()) {
        if (g.is_zero()) continue;
        for (const auto& mu : basis_) {
            Polynomial prod = g.term_mul(fe_one(ring_->field), mu);
            S.insert(project(prod));
        }
    }
    return S;
}

RowSpace JetAlgebra::module_span(const std::vector<ModuleElem>& cols, std::uint32_t rank) const {
    RowSpace S(ring_->field, dim() * rank);
    for (const auto& c : cols) {
        if (c.is_zero()) continue;
        for (const auto& mu : basis_) {
            ModuleElem prod = c.term_mul(fe_one(ring_->field), mu);
            S.insert(project(prod, rank));
        }
    }
    return S;
}

bool JetAlgebra::ideal_member(const Polynomial& f, const Ideal& I) const {
    return ideal_span(I).member(project(f));
}

std::optional<std::uint32_t> JetAlgebra::loewy(const Ideal& I) const {
    RowSpace S = ideal_span(I);
    auto level_in = [&](std::uint32_t d) {
        for (const auto& m : monomials_of_degree(ring_->nvars(), d)) {
            Polynomial mono = Polynomial::monomial(ring_, m, fe_one(ring_->field));
            if (!S.member(project(mono))) return false;
        }
        return true;
    };
    if (!level_in(trunc_ - 1)) return std::nullopt;
    std::uint32_t n = trunc_ - 1;
    while (n > 0 && level_in(n - 1)) --n;
    return n;
}

RowSpace JetAlgebra::ann_coker_span(const std::vector<ModuleElem>& cols,
                                    std::uint32_t rank) const {
    RowSpace S = module_span(cols, rank);
    const Field& F = ring_->field;
    const std::size_t d = dim();
    const std::size_t h = static_cast<std::size_t>(rank) * d * rank;

    // a candidate jet sum(c_k mu_k) annihilates iff the stacked residuals
    // of mu_k * e_i against the span cancel; kernel vectors of that linear
    // map are found by column elimination with transformation tracking
    struct Col {
        std::vector<FieldElem> val;    // residual column in k^h
        std::vector<FieldElem> coeff;  // combination of basis monomials
    };
    std::vector<Col> work(d);
    for (std::size_t k = 0; k < d; ++k) {
        work[k].val.reserve(h);
        for (std::uint32_t i = 0; i < rank; ++i) {
            ModuleElem cand = ModuleElem::from_poly(
                Polynomial::monomial(ring_, basis_[k], fe_one(F)), rank, i);
            auto res = S.reduce(project(cand, rank));
            work[k].val.insert(work[k].val.end(), res.begin(), res.end());
        }
        work[k].coeff.assign(d, fe_zero(F));
        work[k].coeff[k] = fe_one(F);
    }

    RowSpace K(F, d);
    std::vector<const Col*> pivots;
    std::vector<std::size_t> pivot_rows;
    for (std::size_t k = 0; k < d; ++k) {
        Col& c = work[k];
        for (std::size_t q = 0; q < pivots.size(); ++q) {
            FieldElem f = c.val[pivot_rows[q]];
            if (fe_is_zero(F, f)) continue;
            const Col& p = *pivots[q];
            for (std::size_t r = 0; r < h; ++r)
                if (!fe_is_zero(F, p.val[r]))
                    c.val[r] = fe_sub(F, c.val[r], fe_mul(F, f, p.val[r]));
            for (std::size_t r = 0; r < d; ++r)
                if (!fe_is_zero(F, p.coeff[r]))
                    c.coeff[r] = fe_sub(F, c.coeff[r], fe_mul(F, f, p.coeff[r]));
        }
        std::size_t pr = h;
        for (std::size_t r = 0; r < h; ++r)
            if (!fe_is_zero(F, c.val[r])) { pr = r; break; }
        if (pr == h) {
            K.insert(c.coeff);
            continue;
        }
        FieldElem inv = fe_inv(F, c.val[pr]);
        for (auto& x : c.val) x = fe_mul(F, x, inv);
        for (auto& x : c.coeff) x = fe_mul(F, x, inv);
        pivots.push_back(&c);
        pivot_rows.push_back(pr);
    }
    return K;
}

std::uint32_t default_jet_truncation(std::uint32_t loewy_length) {
    return std::min<std::uint32_t>(loewy_length + 2, 12);
}

}  // namespace matsing
