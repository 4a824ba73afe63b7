#pragma once

#include <optional>
#include <vector>

#include "matsing/modelem.hpp"

namespace matsing {

// Work accounting for standard-basis computations; throws budget_exceeded
// when a limit is hit so the caller can report partial diagnostics.
class WorkCounter {
public:
    explicit WorkCounter(Budget b = default_budget()) : budget_(b) {}
    void tick_pair() {
        if (++spairs_ > budget_.spair_limit)
            throw budget_exceeded("S-pair budget exceeded", spairs_);
    }
    void tick_reduction() {
        if (++reductions_ > budget_.reduction_limit)
            throw budget_exceeded("reduction budget exceeded", reductions_);
    }
    std::uint64_t spairs() const { return spairs_; }

private:
    Budget budget_;
    std::uint64_t spairs_ = 0;
    std::uint64_t reductions_ = 0;
};

// Weak normal form in the localization: returns r with u*f - r in <G> for a
// unit u, and LT(r) not divisible by any LT(g), g in G.  r = 0 certifies
// membership of f in the submodule generated by G (over the localization);
// when G is a standard basis the converse holds as well.  Reducers are
// chosen with minimal ecart (shortest on ties, then list position).
// Components at or above ecart_comp_bound are treated as passive transcript
// coordinates by the strategy.
ModuleElem mora_nf(const ModuleElem& f, const std::vector<ModuleElem>& G, WorkCounter& wc,
                   std::uint32_t ecart_comp_bound = UINT32_MAX);
Polynomial mora_nf(const Polynomial& f, const std::vector<Polynomial>& G, WorkCounter& wc);

// Reduced standard basis: pairwise no leading term divides another's,
// elements monic, sorted ascending by leading term.  Deterministic: normal
// pair selection by lcm degree, ties by index.
std::vector<ModuleElem> std_basis(std::vector<ModuleElem> gens, WorkCounter& wc,
                                  std::uint32_t ecart_comp_bound = UINT32_MAX);
std::vector<Polynomial> std_basis(const std::vector<Polynomial>& gens, WorkCounter& wc);

// Generators of { (c_1..c_t) : sum c_i v_i = 0 } in R^t for v_i in R^s,
// computed from a standard basis of the graph module in R^(s+t).
std::vector<ModuleElem> syzygies(const std::vector<ModuleElem>& gens, WorkCounter& wc);

// Generators of the coefficient ideal { c : c*w lies in the span of the
// cols }: the same elimination computation tracking only the coefficient
// of w.
std::vector<Polynomial> coefficient_ideal_gens(const std::vector<ModuleElem>& cols,
                                               const ModuleElem& w, WorkCounter& wc);

// Homogenized Groebner basis of a submodule of R^rank over a local ring,
// kept in the internal homogenization ring so later computations can reuse
// it as a trusted basis.
struct HomogBasis {
    RingPtr hom_ring;
    std::uint32_t rank = 0;
    std::vector<ModuleElem> elems;
};
HomogBasis std_basis_homog(const std::vector<ModuleElem>& gens, WorkCounter& wc);

// Annihilator of R^rank / span(cols) in one tracked elimination: stack rank
// block copies of the basis against the diagonal vector e_0 + ... +
// e_(rank-1).  Mutual pairs of the trusted basis blocks are skipped.
std::vector<Polynomial> annihilator_gens(const HomogBasis& basis, const RingPtr& ring,
                                         WorkCounter& wc);

// Generic tracked elimination over trusted homogeneous blocks: returns
// generators of { c : c * target lies in the sum of the shifted block
// modules }.  Each pair places a copy of the basis at the given component
// offset; the blocks are assumed independent (disjoint component ranges).
std::vector<Polynomial> tracked_elimination(
    const RingPtr& ring,
    const std::vector<std::pair<const HomogBasis*, std::uint32_t>>& blocks,
    std::uint32_t ambient_rank, const ModuleElem& target, WorkCounter& wc);

// Contraction to the non-auxiliary subring under a Block order whose first
// aux_count variables are global: the standard-basis elements free of the
// auxiliary variables.  Errors unless the ring order is exactly that Block.
std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, std::size_t aux_count,
                                  WorkCounter& wc);

}  // namespace matsing
