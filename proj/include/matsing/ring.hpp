#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "matsing/field.hpp"

namespace matsing {

// Exponent vector with cached total degree.  Exponents are capped at 2^16
// per variable; exceeding the cap is a hard error.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0), deg_(0) {}
    explicit Monomial(std::vector<std::uint32_t> exps);

    static constexpr std::uint32_t kExpCap = 1u << 16;

    std::size_t nvars() const { return e_.size(); }
    std::uint32_t exp(std::size_t i) const { return e_[i]; }
    std::uint32_t degree() const { return deg_; }
    const std::vector<std::uint32_t>& exps() const { return e_; }
    bool is_one() const { return deg_ == 0; }

    static Monomial var(std::size_t nvars, std::size_t i, std::uint32_t k = 1);
    Monomial times(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial quotient_by(const Monomial& o) const;  // requires o.divides(*this)

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

private:
    std::vector<std::uint32_t> e_;
    std::uint32_t deg_ = 0;
};

// Pure lexicographic comparison of exponent vectors; used only as the
// deterministic tie-break inside jet bases, never as a ring order.
int lex_cmp(const Monomial& a, const Monomial& b);

enum class OrderKind {
    LocalDegRevLex,   // 1 is the largest monomial; degree-anticompatible
    GlobalDegRevLex,  // well-order
    Block,            // first `split` variables global, the rest local
    // internal: homogenization of LocalDegRevLex with the last variable as
    // the homogenizing one -- total degree, then ascending x-degree, then
    // reverse lexicographic on the x-part
    LazardHomog,
};

struct MonomialOrder {
    OrderKind kind = OrderKind::LocalDegRevLex;
    std::size_t block_split = 0;  // number of leading (global) variables for Block

    bool operator==(const MonomialOrder& o) const {
        return kind == o.kind && (kind != OrderKind::Block || block_split == o.block_split);
    }
};

// Ambient ring context: variable names, coefficient field, monomial order.
// Under a local order this realizes the localization of the polynomial ring
// at the origin.
struct Ring {
    std::vector<std::string> vars;
    Field field;
    MonomialOrder order;

    std::size_t nvars() const { return vars.size(); }
    bool is_local() const { return order.kind == OrderKind::LocalDegRevLex; }

    // +1 if a > b, 0 if equal, -1 if a < b under this ring's order.
    int cmp(const Monomial& a, const Monomial& b) const;

    bool operator==(const Ring& o) const {
        return vars == o.vars && field == o.field && order == o.order;
    }

    static std::shared_ptr<const Ring> make(std::vector<std::string> vars, Field field,
                                            MonomialOrder order = {});
};

using RingPtr = std::shared_ptr<const Ring>;

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where);

// All monomials in `nvars` variables of total degree exactly d, ordered
// lexicographically descending (deterministic enumeration).
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t d);

}  // namespace matsing
