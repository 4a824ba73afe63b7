#include "matsing/field.hpp"

#include <cstdlib>

namespace matsing {

Budget default_budget() {
    Budget b;
    if (const char* env = std::getenv("MATSING_SPAIR_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) b.spair_limit = v;
    }
    return b;
}

Field Field::prime(std::uint32_t p) {
    if (p < 2 || p >= (1u << 31)) throw input_error("prime modulus out of range");
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
        if (p % d == 0) throw input_error("modulus " + std::to_string(p) + " is not prime");
    return Field{FieldKind::GFp, p};
}

std::string Field::to_string() const {
    return kind == FieldKind::QQ ? "QQ" : "GFp:" + std::to_string(p);
}

Field Field::parse(const std::string& text) {
    if (text == "QQ") return rationals();
    const std::string pfx = "GFp:";
    if (text.rfind(pfx, 0) == 0) {
        char* end = nullptr;
        unsigned long v = std::strtoul(text.c_str() + pfx.size(), &end, 10);
        if (!end || *end != '\0') throw input_error("cannot parse field: " + text);
        return prime(static_cast<std::uint32_t>(v));
    }
    throw input_error("unknown field: " + text + " (expected QQ or GFp:<p>)");
}

namespace {

std::uint32_t gfp_reduce(const Field& F, long v) {
    long m = static_cast<long>(F.p);
    long r = v % m;
    if (r < 0) r += m;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t gfp_mul(const Field& F, std::uint32_t a, std::uint32_t b) {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % F.p);
}

std::uint32_t gfp_inv(const Field& F, std::uint32_t a) {
    if (a == 0) throw input_error("division by zero in GF(p)");
    // extended Euclid
    std::int64_t t = 0, nt = 1, r = F.p, nr = a;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (t < 0) t += F.p;
    return static_cast<std::uint32_t>(t);
}

std::uint32_t gfp_from_mpz(const Field& F, const mpz_class& z) {
    mpz_class r = z % static_cast<long>(F.p);
    long v = r.get_si();
    if (v < 0) v += F.p;
    return static_cast<std::uint32_t>(v);
}

}  // namespace

FieldElem fe_zero(const Field& F) {
    return F.kind == FieldKind::QQ ? FieldElem::from_rat(mpq_class(0)) : FieldElem::from_res(0);
}

FieldElem fe_one(const Field& F) {
    return F.kind == FieldKind::QQ ? FieldElem::from_rat(mpq_class(1)) : FieldElem::from_res(1 % F.p);
}

FieldElem fe_from_long(const Field& F, long v) {
    if (F.kind == FieldKind::QQ) return FieldElem::from_rat(mpq_class(v));
    return FieldElem::from_res(gfp_reduce(F, v));
}

FieldElem fe_from_fraction(const Field& F, const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw input_error("zero denominator");
    if (F.kind == FieldKind::QQ) {
        mpq_class q(num, den);
        q.canonicalize();
        return FieldElem::from_rat(q);
    }
    std::uint32_t n = gfp_from_mpz(F, num), d = gfp_from_mpz(F, den);
    if (d == 0) throw input_error("denominator vanishes mod p");
    return FieldElem::from_res(gfp_mul(F, n, gfp_inv(F, d)));
}

bool fe_is_zero(const Field& F, const FieldElem& a) {
    return F.kind == FieldKind::QQ ? a.rat() == 0 : a.res() == 0;
}

bool fe_is_one(const Field& F, const FieldElem& a) {
    return F.kind == FieldKind::QQ ? a.rat() == 1 : a.res() == 1;
}

bool fe_eq(const Field& F, const FieldElem& a, const FieldElem& b) {
    return F.kind == FieldKind::QQ ? a.rat() == b.rat() : a.res() == b.res();
}

FieldElem fe_add(const Field& F, const FieldElem& a, const FieldElem& b) {
    if (F.kind == FieldKind::QQ) return FieldElem::from_rat(a.rat() + b.rat());
    std::uint64_t s = static_cast<std::uint64_t>(a.res()) + b.res();
    return FieldElem::from_res(static_cast<std::uint32_t>(s >= F.p ? s - F.p : s));
}

FieldElem fe_sub(const Field& F, const FieldElem& a, const FieldElem& b) {
    if (F.kind == FieldKind::QQ) return FieldElem::from_rat(a.rat() - b.rat());
    std::int64_t s = static_cast<std::int64_t>(a.res()) - b.res();
    return FieldElem::from_res(static_cast<std::uint32_t>(s < 0 ? s + F.p : s));
}

FieldElem fe_neg(const Field& F, const FieldElem& a) {
    if (F.kind == FieldKind::QQ) return FieldElem::from_rat(-a.rat());
    return FieldElem::from_res(a.res() == 0 ? 0 : F.p - a.res());
}

FieldElem fe_mul(const Field& F, const FieldElem& a, const FieldElem& b) {
    if (F.kind == FieldKind::QQ) return FieldElem::from_rat(a.rat() * b.rat());
    return FieldElem::from_res(gfp_mul(F, a.res(), b.res()));
}

FieldElem fe_inv(const Field& F, const FieldElem& a) {
    if (F.kind == FieldKind::QQ) {
        if (a.rat() == 0) throw input_error("division by zero");
        return FieldElem::from_rat(1 / a.rat());
    }
    return FieldElem::from_res(gfp_inv(F, a.res()));
}

FieldElem fe_div(const Field& F, const FieldElem& a, const FieldElem& b) {
    return fe_mul(F, a, fe_inv(F, b));
}

std::string fe_to_string(const Field& F, const FieldElem& a) {
    if (F.kind == FieldKind::QQ) return a.rat().get_str();
    return std::to_string(a.res());
}

bool fe_is_pm_one(const Field& F, const FieldElem& a) {
    if (F.kind == FieldKind::QQ) return a.rat() == 1 || a.rat() == -1;
    return a.res() == 1;
}

int fe_sign(const Field& F, const FieldElem& a) {
    if (F.kind == FieldKind::QQ) return sgn(a.rat());
    return a.res() == 0 ? 0 : 1;
}

}  // namespace matsing
