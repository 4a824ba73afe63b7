#pragma once

#include <random>
#include <string>
#include <vector>

#include "matsing/determinacy.hpp"

namespace matsing {

struct SuiteConfig {
    Field field = Field::prime(32003);
    std::uint64_t seed = 42;
    std::uint32_t cases = 25;
    std::uint32_t power_bound = 16;
};

struct PropertyResult {
    std::string name;
    bool pass = true;
    std::uint32_t cases = 0;
    std::string detail;
};

// Randomized verification of the structural identities the library is
// built on: ring axioms, normal-form membership, syzygy exactness, the
// annihilator chains, singular-locus properties, tangent-module
// cross-checks, orbit invariance, order-bound sanity, and the truncated
// oracle agreement.  Deterministic for a fixed seed.
std::vector<PropertyResult> run_suite(const SuiteConfig& cfg);

// random element generators shared with the test suites
using Rng = std::mt19937_64;

FieldElem random_field_elem(Rng& rng, const Field& F, bool nonzero);
Polynomial random_poly(Rng& rng, const RingPtr& R, std::uint32_t max_deg, std::uint32_t terms,
                       std::uint32_t min_deg = 0);
PolyMatrix random_matrix(Rng& rng, const RingPtr& R, std::size_t m, std::size_t n,
                         std::uint32_t max_deg, std::uint32_t min_deg = 1);
PolyMatrix random_symmetric(Rng& rng, const RingPtr& R, std::size_t m, std::uint32_t max_deg,
                            std::uint32_t min_deg = 1);
// product of elementary row operations: invertible over the local ring
PolyMatrix random_unimodular(Rng& rng, const RingPtr& R, std::size_t n);

}  // namespace matsing
