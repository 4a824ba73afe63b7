#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "matsing/mora.hpp"
#include "matsing/parser.hpp"

namespace matsing {

// Ideal of the localized ring, held as a generator list with a lazily
// computed reduced standard basis.  Copies share the cached basis; the
// basis is computed at most once even under concurrent readers.
class Ideal {
public:
    explicit Ideal(RingPtr ring) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {}
    Ideal(RingPtr ring, std::vector<Polynomial> gens);

    static Ideal zero(const RingPtr& r) { return Ideal(r); }
    static Ideal unit(const RingPtr& r) { return Ideal(r, {Polynomial::one(r)}); }
    // the maximal ideal (x_1, ..., x_p)
    static Ideal maximal(const RingPtr& r);
    // m^k, generated by the monomials of degree k
    static Ideal maximal_power(const RingPtr& r, std::uint32_t k);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    const std::vector<Polynomial>& sbasis() const;
    // homogenized basis, reusable as a trusted block in eliminations
    const HomogBasis& homog_basis() const;

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const;
    bool contains(const Polynomial& f) const;
    bool contains(const Ideal& other) const;
    bool equals(const Ideal& other) const;  // two-sided membership of generators

    // monic generators of the reduced standard basis as canonical strings
    std::vector<std::string> canonical_strings() const;

private:
    struct Cache {
        std::once_flag once;
        std::vector<Polynomial> basis;
        std::once_flag honce;
        HomogBasis hbasis;
    };
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

Ideal sum(const Ideal& a, const Ideal& b);
Ideal product(const Ideal& a, const Ideal& b);
Ideal intersect(const Ideal& a, const Ideal& b);

// { f : f * J contained in I }, via syzygies of gens(I) extended by each
// generator of J, intersected over the generators
Ideal quotient(const Ideal& I, const Ideal& J);

// Iterates I <- I : J until the chain stabilizes (or hits the unit ideal);
// returns the stable ideal and the number of quotients taken.
struct SaturationResult {
    Ideal ideal;
    int iterations;
};
SaturationResult saturate(const Ideal& I, const Ideal& J);

// Cofiniteness: does I contain a power of the maximal ideal?  Decided from
// pure variable powers in the leading ideal; returns a witness exponent N
// with m^N contained in I (not necessarily minimal).
std::optional<std::uint32_t> contains_power_of_max(const Ideal& I);

// Minimal N with m^N contained in I; errors unless cofinite.
std::uint32_t loewy_length(const Ideal& I);

// Krull dimension of R/I at the origin, from the leading monomial ideal;
// height = nvars - dim (the ring is regular).  height of the unit ideal is
// reported as nvars by convention.
int dim_local(const Ideal& I);
int height(const Ideal& I);

enum class Trivalent { Yes, No, Unknown };

struct RadicalOptions {
    std::uint32_t power_bound = 16;
    bool use_rabinowitsch = false;  // validated fallback, off by default
};

struct RadicalMembership {
    Trivalent verdict;
    std::uint32_t witness_power = 0;  // N with f^N in I when verdict is Yes (0 = unrecorded)
};

// Semi-decision for f in sqrt(I): iterated powers up to the bound, then the
// cofinite fallback through the Loewy length; an auxiliary-variable
// certificate can be enabled as a last resort.  Never returns a false "no".
RadicalMembership radical_member(const Polynomial& f, const Ideal& I, RadicalOptions opts = {});

Trivalent radicals_equal(const Ideal& I, const Ideal& J, RadicalOptions opts = {});

}  // namespace matsing
