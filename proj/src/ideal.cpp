#include "matsing/ideal.hpp"

#include <algorithm>

namespace matsing {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    gens_.reserve(gens.size());
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        require_same_ring(ring_, g.ring(), "ideal construction");
        bool dup = false;
        for (const auto& h : gens_)
            if (h == g) { dup = true; break; }
        if (!dup) gens_.push_back(std::move(g));
    }
}

Ideal Ideal::maximal(const RingPtr& r) {
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < r->nvars(); ++i) gens.push_back(Polynomial::variable(r, i));
    return Ideal(r, std::move(gens));
}

Ideal Ideal::maximal_power(const RingPtr& r, std::uint32_t k) {
    if (k == 0) return unit(r);
    std::vector<Polynomial> gens;
    for (const auto& m : monomials_of_degree(r->nvars(), k))
        gens.push_back(Polynomial::monomial(r, m, fe_one(r->field)));
    return Ideal(r, std::move(gens));
}

const std::vector<Polynomial>& Ideal::sbasis() const {
    std::call_once(cache_->once, [&] {
        WorkCounter wc;
        cache_->basis = std_basis(gens_, wc);
    });
    return cache_->basis;
}

const HomogBasis& Ideal::homog_basis() const {
    std::call_once(cache_->honce, [&] {
        WorkCounter wc;
        std::vector<ModuleElem> gm;
        for (const auto& g : gens_) gm.push_back(ModuleElem::from_poly(g, 1, 0));
        cache_->hbasis = std_basis_homog(gm, wc);
        if (cache_->hbasis.rank == 0) cache_->hbasis.rank = 1;  // zero ideal
    });
    return cache_->hbasis;
}

bool Ideal::is_unit() const {
    for (const auto& g : sbasis())
        if (g.is_unit()) return true;
    return false;
}

bool Ideal::contains(const Polynomial& f) const {
    if (f.is_zero()) return true;
    WorkCounter wc;
    return mora_nf(f, sbasis(), wc).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
    for (const auto& g : other.gens_)
        if (!contains(g)) return false;
    return true;
}

bool Ideal::equals(const Ideal& other) const {
    return contains(other) && other.contains(*this);
}

std::vector<std::string> Ideal::canonical_strings() const {
    std::vector<std::string> out;
    for (const auto& g : sbasis()) out.push_back(poly_to_string(g.monic()));
    return out;
}

Ideal sum(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring(), "ideal sum");
    std::vector<Polynomial> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return Ideal(a.ring(), std::move(gens));
}

Ideal product(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring(), "ideal product");
    std::vector<Polynomial> gens;
    for (const auto& f : a.gens())
        for (const auto& g : b.gens()) gens.push_back(f * g);
    return Ideal(a.ring(), std::move(gens));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring(), "ideal intersection");
    if (a.is_zero() || b.is_zero()) return Ideal::zero(a.ring());
    if (a.is_unit()) return b;
    if (b.is_unit()) return a;
    const RingPtr& R = a.ring();
    // coefficients c with c*(1,1) in I + J (placed in separate components)
    // lie in both ideals
    std::vector<std::pair<const HomogBasis*, std::uint32_t>> blocks = {
        {&a.homog_basis(), 0}, {&b.homog_basis(), 1}};
    ModuleElem diag(R, 2, {{0, Monomial(R->nvars()), fe_one(R->field)},
                           {1, Monomial(R->nvars()), fe_one(R->field)}});
    WorkCounter wc;
    return Ideal(R, tracked_elimination(R, blocks, 2, diag, wc));
}

Ideal quotient(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring(), J.ring(), "ideal quotient");
    if (J.is_zero()) return Ideal::unit(I.ring());
    const RingPtr& R = I.ring();
    // per-generator colons intersected: c*g_j in I for every generator of J
    const HomogBasis& H = I.homog_basis();
    WorkCounter wc;
    bool first = true;
    Ideal acc = Ideal::unit(R);
    for (const auto& g : J.gens()) {
        std::vector<std::pair<const HomogBasis*, std::uint32_t>> blocks = {{&H, 0}};
        Ideal colon(R, tracked_elimination(R, blocks, 1, ModuleElem::from_poly(g, 1, 0), wc));
        acc = first ? colon : intersect(acc, colon);
        first = false;
    }
    return acc;
}

SaturationResult saturate(const Ideal& I, const Ideal& J) {
    Ideal cur = I;
    for (int k = 1;; ++k) {
        Ideal next = quotient(cur, J);
        if (next.is_unit()) return {Ideal::unit(I.ring()), k};
        if (cur.contains(next)) return {cur, k};
        cur = next;
    }
}

namespace {

void require_local(const Ideal& I, const char* what) {
    if (!I.ring()->is_local())
        throw input_error(std::string(what) + " requires the local order");
}

}  // namespace

std::optional<std::uint32_t> contains_power_of_max(const Ideal& I) {
    require_local(I, "cofiniteness");
    const std::size_t p = I.ring()->nvars();
    std::vector<std::uint32_t> pure(p, 0);  // minimal pure-power exponent per variable
    for (const auto& g : I.sbasis()) {
        const Monomial& lm = g.leading_monomial();
        if (lm.is_one()) return 0;  // unit ideal
        std::size_t nz = 0, var = 0;
        for (std::size_t i = 0; i < p; ++i)
            if (lm.exp(i) != 0) { ++nz; var = i; }
        if (nz == 1 && (pure[var] == 0 || lm.exp(var) < pure[var])) pure[var] = lm.exp(var);
    }
    std::uint32_t witness = 1;
    for (std::size_t i = 0; i < p; ++i) {
        if (pure[i] == 0) return std::nullopt;
        witness += pure[i] - 1;
    }
    return witness;
}

std::uint32_t loewy_length(const Ideal& I) {
    auto witness = contains_power_of_max(I);
    if (!witness) throw input_error("Loewy length of a non-cofinite ideal");
    std::uint32_t ll = *witness;
    const RingPtr& R = I.ring();
    WorkCounter wc;
    const auto& sb = I.sbasis();
    for (std::uint32_t d = ll; d-- > 0;) {
        bool all_in = true;
        for (const auto& m : monomials_of_degree(R->nvars(), d)) {
            Polynomial mono = Polynomial::monomial(R, m, fe_one(R->field));
            if (!mora_nf(mono, sb, wc).is_zero()) { all_in = false; break; }
        }
        if (!all_in) break;
        ll = d;
    }
    return ll;
}

int dim_local(const Ideal& I) {
    require_local(I, "local dimension");
    const std::size_t p = I.ring()->nvars();
    std::vector<std::vector<std::size_t>> supports;
    for (const auto& g : I.sbasis()) {
        const Monomial& lm = g.leading_monomial();
        if (lm.is_one()) return -1;  // unit ideal: empty germ
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < p; ++i)
            if (lm.exp(i) != 0) s.push_back(i);
        supports.push_back(std::move(s));
    }
    int best = -1;
    for (std::uint64_t mask = 0; mask < (1ull << p); ++mask) {
        bool ok = true;
        for (const auto& s : supports) {
            bool inside = true;  // support contained in the candidate subset
            for (auto i : s)
                if (!(mask >> i & 1)) { inside = false; break; }
            if (inside) { ok = false; break; }
        }
        if (ok) best = std::max(best, static_cast<int>(__builtin_popcountll(mask)));
    }
    return best;
}

int height(const Ideal& I) {
    const int p = static_cast<int>(I.ring()->nvars());
    int d = dim_local(I);
    if (d < 0) return p;  // unit ideal, by convention
    return p - d;
}

namespace {

// f with nonzero constant term is a unit of the localization
bool is_local_unit(const Polynomial& f) { return !f.is_zero() && f.leading_monomial().is_one(); }

bool rabinowitsch_certifies(const Polynomial& f, const Ideal& I) {
    const RingPtr& R = I.ring();
    std::vector<std::string> vars;
    vars.reserve(R->nvars() + 1);
    std::string aux = "t@";  // cannot collide with parsed variable names
    vars.push_back(aux);
    for (const auto& v : R->vars) vars.push_back(v);
    auto RB = Ring::make(vars, R->field, MonomialOrder{OrderKind::Block, 1});
    auto lift = [&](const Polynomial& g) {
        std::vector<Term> ts;
        for (const auto& t : g.terms()) {
            std::vector<std::uint32_t> e(RB->nvars(), 0);
            for (std::size_t i = 0; i < R->nvars(); ++i) e[i + 1] = t.m.exp(i);
            ts.push_back({Monomial(std::move(e)), t.c});
        }
        return Polynomial(RB, std::move(ts));
    };
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens()) gens.push_back(lift(g));
    Polynomial t = Polynomial::variable(RB, 0);
    gens.push_back(Polynomial::one(RB) - t * lift(f));
    WorkCounter wc;
    auto sb = std_basis(gens, wc);
    return mora_nf(Polynomial::one(RB), sb, wc).is_zero();
}

}  // namespace

RadicalMembership radical_member(const Polynomial& f, const Ideal& I, RadicalOptions opts) {
    require_same_ring(f.ring(), I.ring(), "radical membership");
    if (f.is_zero()) return {Trivalent::Yes, 1};
    if (I.is_unit()) return {Trivalent::Yes, 1};
    if (is_local_unit(f)) return {Trivalent::No, 0};  // unit powers never enter a proper ideal

    Polynomial power = f;
    for (std::uint32_t n = 1; n <= opts.power_bound; ++n) {
        if (I.contains(power)) return {Trivalent::Yes, n};
        if (n < opts.power_bound) power = power * f;
    }
    // f lies in the maximal ideal here, so a cofinite ideal always absorbs
    // the Loewy-length power
    if (auto w = contains_power_of_max(I)) {
        std::uint32_t ll = loewy_length(I);
        for (std::uint32_t n = opts.power_bound + 1; n < ll; ++n) {
            power = power * f;
            if (I.contains(power)) return {Trivalent::Yes, n};
        }
        return {Trivalent::Yes, std::max(ll, std::uint32_t{1})};
    }
    if (opts.use_rabinowitsch && rabinowitsch_certifies(f, I)) return {Trivalent::Yes, 0};
    return {Trivalent::Unknown, 0};
}

Trivalent radicals_equal(const Ideal& I, const Ideal& J, RadicalOptions opts) {
    bool unknown = false;
    for (const auto& g : I.gens()) {
        auto r = radical_member(g, J, opts);
        if (r.verdict == Trivalent::No) return Trivalent::No;
        if (r.verdict == Trivalent::Unknown) unknown = true;
    }
    for (const auto& g : J.gens()) {
        auto r = radical_member(g, I, opts);
        if (r.verdict == Trivalent::No) return Trivalent::No;
        if (r.verdict == Trivalent::Unknown) unknown = true;
    }
    return unknown ? Trivalent::Unknown : Trivalent::Yes;
}

}  // namespace matsing
