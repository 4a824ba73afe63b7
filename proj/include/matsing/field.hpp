#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "matsing/common.hpp"

namespace matsing {

enum class FieldKind { QQ, GFp };

// Coefficient field descriptor: the rationals, or a prime field GF(p) with
// p < 2^31.  All element operations are routed through this object so that
// residues never need to carry the modulus themselves.
struct Field {
    FieldKind kind = FieldKind::QQ;
    std::uint32_t p = 0;

    static Field rationals() { return Field{FieldKind::QQ, 0}; }
    static Field prime(std::uint32_t p);

    bool operator==(const Field& o) const { return kind == o.kind && p == o.p; }
    std::string to_string() const;
    static Field parse(const std::string& text);  // "QQ" or "GFp:32003"
};

// One coefficient: an exact rational (always canonical, positive denominator)
// or a residue in [0, p).
class FieldElem {
public:
    FieldElem() : v_(std::uint32_t{0}) {}
    static FieldElem from_rat(mpq_class q) { return FieldElem(std::move(q)); }
    static FieldElem from_res(std::uint32_t r) { return FieldElem(r); }

    bool is_rat() const { return std::holds_alternative<mpq_class>(v_); }
    const mpq_class& rat() const { return std::get<mpq_class>(v_); }
    std::uint32_t res() const { return std::get<std::uint32_t>(v_); }

private:
    explicit FieldElem(mpq_class q) : v_(std::move(q)) {}
    explicit FieldElem(std::uint32_t r) : v_(r) {}
    std::variant<mpq_class, std::uint32_t> v_;
};

FieldElem fe_zero(const Field& F);
FieldElem fe_one(const Field& F);
FieldElem fe_from_long(const Field& F, long v);
FieldElem fe_from_fraction(const Field& F, const mpz_class& num, const mpz_class& den);
bool fe_is_zero(const Field& F, const FieldElem& a);
bool fe_is_one(const Field& F, const FieldElem& a);
bool fe_eq(const Field& F, const FieldElem& a, const FieldElem& b);
FieldElem fe_add(const Field& F, const FieldElem& a, const FieldElem& b);
FieldElem fe_sub(const Field& F, const FieldElem& a, const FieldElem& b);
FieldElem fe_neg(const Field& F, const FieldElem& a);
FieldElem fe_mul(const Field& F, const FieldElem& a, const FieldElem& b);
FieldElem fe_inv(const Field& F, const FieldElem& a);
FieldElem fe_div(const Field& F, const FieldElem& a, const FieldElem& b);
std::string fe_to_string(const Field& F, const FieldElem& a);

// True when the printed form needs no explicit coefficient (i.e. |a| = 1
// over QQ, a = 1 over GF(p)).
bool fe_is_pm_one(const Field& F, const FieldElem& a);
// Over QQ: sign of the rational.  Over GF(p): always +1 for nonzero.
int fe_sign(const Field& F, const FieldElem& a);

}  // namespace matsing
