#include "matsing/ring.hpp"

#include <algorithm>
#include <numeric>

namespace matsing {

Monomial::Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {
    std::uint64_t d = 0;
    for (auto x : e_) {
        if (x >= kExpCap) throw input_error("monomial exponent exceeds cap 2^16");
        d += x;
    }
    deg_ = static_cast<std::uint32_t>(d);
}

Monomial Monomial::var(std::size_t nvars, std::size_t i, std::uint32_t k) {
    Monomial m(nvars);
    if (i >= nvars) throw input_error("variable index out of range");
    if (k >= kExpCap) throw input_error("monomial exponent exceeds cap 2^16");
    m.e_[i] = k;
    m.deg_ = k;
    return m;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) {
        r.e_[i] += o.e_[i];
        if (r.e_[i] >= kExpCap) throw input_error("monomial exponent exceeds cap 2^16");
    }
    r.deg_ = deg_ + o.deg_;
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::quotient_by(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    r.deg_ = deg_ - o.deg_;
    return r;
}

int lex_cmp(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? 1 : -1;
    }
    return 0;
}

namespace {

// degrevlex on the slice [lo, hi): higher degree wins; ties broken so that
// the monomial whose last differing exponent is smaller is the bigger one.
int drl_cmp(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi, bool local) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) { da += a.exp(i); db += b.exp(i); }
    if (da != db) {
        if (local) return da < db ? 1 : -1;
        return da > db ? 1 : -1;
    }
    for (std::size_t i = hi; i-- > lo;) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? 1 : -1;
    }
    return 0;
}

}  // namespace

int Ring::cmp(const Monomial& a, const Monomial& b) const {
    const std::size_t n = nvars();
    switch (order.kind) {
        case OrderKind::GlobalDegRevLex:
            return drl_cmp(a, b, 0, n, false);
        case OrderKind::LocalDegRevLex:
            return drl_cmp(a, b, 0, n, true);
        case OrderKind::Block: {
            int c = drl_cmp(a, b, 0, order.block_split, false);
            if (c != 0) return c;
            return drl_cmp(a, b, order.block_split, n, true);
        }
        case OrderKind::LazardHomog: {
            if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
            // same total degree: the dehomogenizations compare under the
            // local order
            return drl_cmp(a, b, 0, n - 1, true);
        }
    }
    return 0;
}

RingPtr Ring::make(std::vector<std::string> vars, Field field, MonomialOrder order) {
    if (vars.empty()) throw input_error("ring needs at least one variable");
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw input_error("duplicate variable name: " + vars[i]);
    if (order.kind == OrderKind::Block && (order.block_split == 0 || order.block_split >= vars.size()))
        throw input_error("block order split out of range");
    auto r = std::make_shared<Ring>();
    r->vars = std::move(vars);
    r->field = field;
    r->order = order;
    return r;
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where) {
    if (!same_ring(a, b)) throw input_error(std::string("mismatched ring contexts in ") + where);
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t d) {
    std::vector<Monomial> out;
    std::vector<std::uint32_t> e(nvars, 0);
    // lexicographically descending enumeration of compositions of d
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t rem) -> void {
        if (i + 1 == nvars) {
            e[i] = rem;
            out.emplace_back(e);
            return;
        }
        for (std::uint32_t k = rem + 1; k-- > 0;) {
            e[i] = k;
            self(self, i + 1, rem - k);
        }
        e[i] = 0;
    };
    rec(rec, 0, d);
    return out;
}

}  // namespace matsing
