#pragma once

#include <optional>

#include "matsing/jets.hpp"

namespace matsing {

// Generating multipliers for the derivation modules used throughout:
// Der(R) itself, m*Der(R), and m^2*Der(R).  The ring is regular, so these
// are exactly the derivations mapping R into R, m, m^2.
enum class DerMultiplier { One, M, M2 };

struct DerivationSet {
    DerMultiplier mult = DerMultiplier::One;

    static DerivationSet full() { return {DerMultiplier::One}; }
    static DerivationSet in_max() { return {DerMultiplier::M}; }
    static DerivationSet in_max_sq() { return {DerMultiplier::M2}; }

    // monomial generators of the multiplier ideal: {1}, {x_k}, {x_a x_b}
    std::vector<Polynomial> multipliers(const RingPtr& r) const;
    std::string name() const;
};

enum class GroupBase { Gl, Gr, Glr, Gcongr, Aut, CGl, CGr, CGlr, CGcongr };

struct GroupSpec {
    GroupBase base = GroupBase::CGlr;
    bool filtered = false;  // subgroup acting trivially modulo m

    GroupSpec with_filtration() const { return {base, true}; }
};

bool group_has_left(GroupBase b);
bool group_has_right(GroupBase b);
bool group_has_congr(GroupBase b);
bool group_has_aut(GroupBase b);
std::string group_token(const GroupSpec& g);
GroupSpec parse_group(const std::string& token);

// Matrix of a derivation family applied to the entries of A: rows indexed
// by the entries (row-major), columns by (multiplier, partial).
PolyMatrix jacobian(const PolyMatrix& A, const DerivationSet& D);

// Singular-locus ideal of J of expected height r: the generalized
// annihilator of order r of the presentation of R^N/(J R^N + D(f_1..f_N)).
// Returns J itself when the derivation rank or the height of J is below r
// (in that case they agree); set allow_shortcut = false to force the
// direct computation.
Ideal sing(const Ideal& J, int r, const DerivationSet& D, bool allow_shortcut = true);

// Tangent module to the group orbit at A inside the deformation space
// given by A's tag, as explicit generating columns.
struct TangentModule {
    std::uint32_t rank = 0;
    std::vector<ModuleElem> cols;
    std::vector<std::string> provenance;  // one label per column
};

TangentModule tangent_matrix(const GroupSpec& g, const PolyMatrix& A);

// Exact annihilator of the quotient of the deformation space by the orbit
// tangent module.
Ideal t1_ann(const GroupSpec& g, const PolyMatrix& A);

// Lower/upper annihilator bounds for the left-right group with coordinate
// changes (m <= n required).
struct AnnBounds {
    Ideal lower;
    Ideal upper;
};
AnnBounds glr_bounds(const PolyMatrix& A);

// The saturation intersection with unrestricted derivations; its radical
// equals the radical of the exact annihilator for the left-right group
// with coordinate changes.
Ideal radical_support_glr(const PolyMatrix& A);

// Bounds for the congruence group with coordinate changes on symmetric or
// skew-symmetric matrices (binomial expected ranks; even steps only in the
// skew case).  Errors on the full space.
AnnBounds congr_bounds(const PolyMatrix& A);

struct HeightRow {
    int j;
    int height;
    int expected;
    bool applicable;  // expected-height theory applies to this row
    bool pass;
};
std::vector<HeightRow> expected_heights_check(const PolyMatrix& A);

// [Loewy(exact) - 1, Loewy(exact of the filtered subgroup) - 1]; errors
// unless the exact annihilator is cofinite.
std::pair<std::uint32_t, std::uint32_t> order_bounds(const GroupSpec& g, const PolyMatrix& A);

struct DeterminacyReport {
    GroupSpec group;
    SpaceTag space = SpaceTag::Full;
    std::size_t m = 0, n = 0, p = 0;
    bool transposed = false;  // input arrived with more rows than columns
    std::vector<HeightRow> heights;
    std::optional<Ideal> lower, exact, upper;
    bool exact_cofinite = false;
    std::optional<std::uint32_t> exact_loewy;
    std::optional<std::pair<std::uint32_t, std::uint32_t>> bounds;  // order bounds [lo, hi]
    std::string verdict;  // "finitely-determined" | "not-finitely-determined"
    std::string reason;
    std::optional<bool> lower_in_exact, exact_in_upper;
};

DeterminacyReport verdict(const GroupSpec& g, const PolyMatrix& A);

// f^(dim R) always lies in the ideal of partials for f in the maximal
// ideal; exposed as a theorem-backed property check.
bool briancon_skoda_check(const Polynomial& f);

}  // namespace matsing
