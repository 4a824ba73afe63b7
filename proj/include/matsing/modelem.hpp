#pragma once

#include <vector>

#include "matsing/poly.hpp"

namespace matsing {

struct ModTerm {
    std::uint32_t comp;
    Monomial m;
    FieldElem c;
};

// Element of a free module R^rank, stored as sparse terms sorted descending
// under position-over-term: lower component index wins, ties by the ring
// order on monomials.  Rank-1 elements are interchangeable with polynomials.
class ModuleElem {
public:
    ModuleElem() = default;
    ModuleElem(RingPtr ring, std::uint32_t rank) : ring_(std::move(ring)), rank_(rank) {}
    ModuleElem(RingPtr ring, std::uint32_t rank, std::vector<ModTerm> unsorted);

    const RingPtr& ring() const { return ring_; }
    std::uint32_t rank() const { return rank_; }
    const std::vector<ModTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    const ModTerm& leading() const;
    // max term degree minus leading monomial degree; components at or above
    // comp_bound are ignored (they carry division transcripts, not data the
    // reduction strategy should see)
    std::uint32_t ecart(std::uint32_t comp_bound = UINT32_MAX) const;

    // -1/0/+1 comparison of positions (comp, monomial) under the module order
    int cmp_pos(const ModTerm& a, const ModTerm& b) const;

    ModuleElem operator+(const ModuleElem& o) const;
    ModuleElem operator-() const;
    ModuleElem operator-(const ModuleElem& o) const { return *this + (-o); }
    ModuleElem term_mul(const FieldElem& c, const Monomial& m) const;
    ModuleElem scaled(const FieldElem& c) const;
    ModuleElem monic() const;
    bool operator==(const ModuleElem& o) const;

    // f placed in component comp of R^rank
    static ModuleElem from_poly(const Polynomial& f, std::uint32_t rank, std::uint32_t comp);
    static ModuleElem basis_vector(const RingPtr& r, std::uint32_t rank, std::uint32_t comp);
    // the polynomial sitting in component comp
    Polynomial component(std::uint32_t comp) const;
    // restriction to components [lo, rank), reindexed to start at 0
    ModuleElem slice_tail(std::uint32_t lo) const;
    // true when all terms lie in components < bound
    bool supported_below(std::uint32_t bound) const;

private:
    RingPtr ring_;
    std::uint32_t rank_ = 0;
    std::vector<ModTerm> terms_;
};

}  // namespace matsing
