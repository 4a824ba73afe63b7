#pragma once

#include <map>
#include <optional>

#include "matsing/matrix.hpp"

namespace matsing {

// Exact row space over the coefficient field; rows are kept in echelon form
// with pivot 1.  Elimination uses ring operations only (cross-multiplying
// rows), with a single exact division at insertion.
class RowSpace {
public:
    RowSpace(const Field& F, std::size_t width) : F_(F), width_(width) {}

    std::size_t width() const { return width_; }
    std::size_t dim() const { return rows_.size(); }

    // reduce v against the echelon rows; returns the residual
    std::vector<FieldElem> reduce(std::vector<FieldElem> v) const;
    bool member(const std::vector<FieldElem>& v) const;
    // returns true if v enlarged the space
    bool insert(std::vector<FieldElem> v);
    bool equals(const RowSpace& o) const;

    const std::vector<std::vector<FieldElem>>& rows() const { return rows_; }

private:
    Field F_;
    std::size_t width_;
    std::vector<std::vector<FieldElem>> rows_;  // sorted by pivot column
    std::vector<std::size_t> pivots_;
};

// The finite-dimensional quotient R/m^D: an ordered basis of all monomials
// of degree < D (sorted by degree, then lexicographically) and dense
// coefficient vectors over k.  Everything here is deliberately plain linear
// algebra, independent of the standard-basis engine it cross-checks.
class JetAlgebra {
public:
    JetAlgebra(RingPtr ring, std::uint32_t trunc);

    const RingPtr& ring() const { return ring_; }
    std::uint32_t trunc() const { return trunc_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Monomial>& basis() const { return basis_; }

    // coefficient vector of f mod m^D
    std::vector<FieldElem> project(const Polynomial& f) const;
    // stacked coefficient vector of v in (R/m^D)^rank
    std::vector<FieldElem> project(const ModuleElem& v, std::uint32_t rank) const;

    // image of (I + m^D)/m^D: span of all monomial multiples of the
    // generators, truncated
    RowSpace ideal_span(const Ideal& I) const;
    RowSpace module_span(const std::vector<ModuleElem>& cols, std::uint32_t rank) const;

    bool ideal_member(const Polynomial& f, const Ideal& I) const;
    // exact for ideals I + m^D; equals the true Loewy length whenever that
    // is < D, otherwise overflow (nullopt)
    std::optional<std::uint32_t> loewy(const Ideal& I) const;

    // the space { jet v : v * e_i lies in the span of the columns for all i },
    // i.e. the annihilator of the cokernel computed inside R/m^D
    RowSpace ann_coker_span(const std::vector<ModuleElem>& cols, std::uint32_t rank) const;

private:
    RingPtr ring_;
    std::uint32_t trunc_;
    std::vector<Monomial> basis_;
    std::map<std::vector<std::uint32_t>, std::size_t> index_;
    std::size_t index_of(const Monomial& m) const;
};

// default cross-check truncation: discovered Loewy length + 2, capped
std::uint32_t default_jet_truncation(std::uint32_t loewy_length);

}  // namespace matsing
