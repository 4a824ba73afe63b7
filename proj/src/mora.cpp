#include "matsing/mora.hpp"

#include <algorithm>
#include <deque>

namespace matsing {

namespace {

bool lt_divides(const ModTerm& a, const ModTerm& b) {
    return a.comp == b.comp && a.m.divides(b.m);
}

Monomial exp_max(const Monomial& a, const Monomial& b) {
    std::vector<std::uint32_t> e(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) e[i] = std::max(a.exp(i), b.exp(i));
    return Monomial(std::move(e));
}

// h - (LC(h)/LC(g)) * x^(LM(h)-LM(g)) * g
ModuleElem reduce_once(const ModuleElem& h, const ModuleElem& g) {
    const Field& F = h.ring()->field;
    const ModTerm& lh = h.leading();
    const ModTerm& lg = g.leading();
    FieldElem q = fe_div(F, lh.c, lg.c);
    Monomial d = lh.m.quotient_by(lg.m);
    return h - g.term_mul(q, d);
}

// s-vector of two elements with equal leading component
ModuleElem spair(const ModuleElem& f, const ModuleElem& g) {
    const Field& F = f.ring()->field;
    const ModTerm& lf = f.leading();
    const ModTerm& lg = g.leading();
    Monomial l = exp_max(lf.m, lg.m);
    ModuleElem a = f.term_mul(fe_inv(F, lf.c), l.quotient_by(lf.m));
    ModuleElem b = g.term_mul(fe_inv(F, lg.c), l.quotient_by(lg.m));
    return a - b;
}

}  // namespace

ModuleElem mora_nf(const ModuleElem& f, const std::vector<ModuleElem>& G, WorkCounter& wc,
                   std::uint32_t ecart_comp_bound) {
    ModuleElem h = f;
    struct Reducer {
        const ModuleElem* elem;
        std::uint32_t ecart;
    };
    std::vector<Reducer> T;
    std::deque<ModuleElem> added;  // pointer-stable storage for intermediate reducers
    T.reserve(G.size());
    for (const auto& g : G)
        if (!g.is_zero()) T.push_back({&g, g.ecart(ecart_comp_bound)});

    while (!h.is_zero()) {
        const ModTerm& lh = h.leading();
        const Reducer* best = nullptr;
        for (const Reducer& r : T) {
            if (!lt_divides(r.elem->leading(), lh)) continue;
            if (!best || r.ecart < best->ecart) best = &r;
        }
        if (!best) break;
        const ModuleElem* red = best->elem;
        if (best->ecart > h.ecart(ecart_comp_bound)) {
            added.push_back(h);
            T.push_back({&added.back(), h.ecart(ecart_comp_bound)});
        }
        wc.tick_reduction();
        h = reduce_once(h, *red);
    }
    return h;
}

Polynomial mora_nf(const Polynomial& f, const std::vector<Polynomial>& G, WorkCounter& wc) {
    std::vector<ModuleElem> gm;
    gm.reserve(G.size());
    for (const auto& g : G) gm.push_back(ModuleElem::from_poly(g, 1, 0));
    return mora_nf(ModuleElem::from_poly(f, 1, 0), gm, wc).component(0);
}

namespace {

struct Pair {
    std::uint32_t deg;  // total degree of the lcm of leading monomials
    std::size_t i, j;
    bool operator<(const Pair& o) const {
        if (deg != o.deg) return deg < o.deg;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

void push_pairs(std::vector<Pair>& P, const std::vector<ModuleElem>& G, std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
        const ModTerm& a = G[i].leading();
        const ModTerm& b = G[k].leading();
        if (a.comp != b.comp) continue;
        P.push_back({exp_max(a.m, b.m).degree(), i, k});
    }
    std::sort(P.begin(), P.end());
}

// Deterministic bounded tail reduction for canonical ideal output.  Tail
// terms are rewritten against the other basis elements; tails that do not
// settle within the step cap (possible over local orders) are left
// untouched.  Only rank-1 bases are canonicalized; module bases are
// internal and keep their raw tails.
constexpr std::size_t kTailReductionCap = 512;

void tail_reduce(std::vector<ModuleElem>& G) {
    if (G.empty() || G.front().rank() != 1) return;
    const std::size_t n = G.size();
    for (std::size_t i = 0; i < n; ++i) {
        const RingPtr& R = G[i].ring();
        const Field& F = R->field;
        // pending tail terms, sorted descending; cursor-based front removal
        std::vector<ModTerm> pending(G[i].terms().begin() + 1, G[i].terms().end());
        std::vector<ModTerm> done{G[i].leading()};
        std::size_t at = 0, steps = 0;
        bool gave_up = false;
        while (at < pending.size()) {
            const ModTerm lt = pending[at];
            const ModuleElem* red = nullptr;
            std::uint32_t red_ecart = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i || !lt_divides(G[j].leading(), lt)) continue;
                std::uint32_t e = G[j].ecart();
                if (!red || e < red_ecart) { red = &G[j]; red_ecart = e; }
            }
            if (!red) {
                done.push_back(lt);
                ++at;
                continue;
            }
            if (++steps > kTailReductionCap) { gave_up = true; break; }
            // merge -q * x^delta * red into the pending tail
            FieldElem q = fe_div(F, lt.c, red->leading().c);
            ModuleElem sub = red->term_mul(q, lt.m.quotient_by(red->leading().m));
            std::vector<ModTerm> merged;
            merged.reserve(pending.size() - at + sub.terms().size());
            std::size_t a = at;
            std::size_t b = 0;
            const auto& st = sub.terms();
            while (a < pending.size() && b < st.size()) {
                int cmp = G[i].cmp_pos(pending[a], st[b]);
                if (cmp > 0) {
                    merged.push_back(pending[a++]);
                } else if (cmp < 0) {
                    merged.push_back({st[b].comp, st[b].m, fe_neg(F, st[b].c)});
                    ++b;
                } else {
                    FieldElem s = fe_sub(F, pending[a].c, st[b].c);
                    if (!fe_is_zero(F, s)) merged.push_back({pending[a].comp, pending[a].m, s});
                    ++a;
                    ++b;
                }
            }
            for (; a < pending.size(); ++a) merged.push_back(pending[a]);
            for (; b < st.size(); ++b)
                merged.push_back({st[b].comp, st[b].m, fe_neg(F, st[b].c)});
            pending = std::move(merged);
            at = 0;
        }
        if (!gave_up) G[i] = ModuleElem(R, G[i].rank(), std::move(done));
    }
}

}  // namespace

namespace {

// Full normal form for well-orders: the leading term and every tail term
// are reduced until irreducible.  Terminates because each rewrite replaces
// a term by strictly smaller ones.
ModuleElem nf_global(const ModuleElem& f, const std::vector<ModuleElem>& G, WorkCounter& wc) {
    if (f.is_zero()) return f;
    const RingPtr& R = f.ring();
    const Field& F = R->field;
    std::vector<ModTerm> pending(f.terms().begin(), f.terms().end());
    std::vector<ModTerm> done;
    std::size_t at = 0;
    while (at < pending.size()) {
        const ModTerm lt = pending[at];
        const ModuleElem* red = nullptr;
        for (const auto& g : G) {
            if (g.is_zero() || !lt_divides(g.leading(), lt)) continue;
            red = &g;
            break;
        }
        if (!red) {
            done.push_back(lt);
            ++at;
            continue;
        }
        wc.tick_reduction();
        FieldElem q = fe_div(F, lt.c, red->leading().c);
        ModuleElem sub = red->term_mul(q, lt.m.quotient_by(red->leading().m));
        const auto& st = sub.terms();
        std::vector<ModTerm> merged;
        merged.reserve(pending.size() - at + st.size());
        std::size_t a = at, b = 0;
        while (a < pending.size() && b < st.size()) {
            int cmp = f.cmp_pos(pending[a], st[b]);
            if (cmp > 0) {
                merged.push_back(pending[a++]);
            } else if (cmp < 0) {
                merged.push_back({st[b].comp, st[b].m, fe_neg(F, st[b].c)});
                ++b;
            } else {
                FieldElem s = fe_sub(F, pending[a].c, st[b].c);
                if (!fe_is_zero(F, s)) merged.push_back({pending[a].comp, pending[a].m, s});
                ++a;
                ++b;
            }
        }
        for (; a < pending.size(); ++a) merged.push_back(pending[a]);
        for (; b < st.size(); ++b) merged.push_back({st[b].comp, st[b].m, fe_neg(F, st[b].c)});
        pending = std::move(merged);
        at = 0;
    }
    return ModuleElem(R, f.rank(), std::move(done));
}

// Divide out the largest power of the homogenizing variable shared by all
// terms.  Sound under dehomogenization and essential to keep the degrees
// of the homogenized computation close to the local ones.
ModuleElem strip_homog_content(const ModuleElem& e) {
    if (e.is_zero()) return e;
    const std::size_t t = e.ring()->nvars() - 1;
    std::uint32_t k = UINT32_MAX;
    for (const auto& tm : e.terms()) k = std::min(k, tm.m.exp(t));
    if (k == 0 || k == UINT32_MAX) return e;
    std::vector<ModTerm> ts;
    ts.reserve(e.terms().size());
    for (const auto& tm : e.terms()) {
        std::vector<std::uint32_t> exps = tm.m.exps();
        exps[t] -= k;
        ts.push_back({tm.comp, Monomial(std::move(exps)), tm.c});
    }
    return ModuleElem(e.ring(), e.rank(), std::move(ts));
}

// gcd(LM f, LM g) == 1 in the same component: the pair reduces to zero
bool product_criterion(const ModuleElem& f, const ModuleElem& g, std::uint32_t rank) {
    if (rank != 1) return false;
    const Monomial& a = f.leading().m;
    const Monomial& b = g.leading().m;
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a.exp(i) != 0 && b.exp(i) != 0) return false;
    return true;
}

// Buchberger loop shared by the direct (Mora) and homogenized (global)
// paths; `local` selects the weak-normal-form reducer strategy.  The
// global path prunes with the product criterion and the dynamic chain
// criterion (a pair is dropped when a third leading term divides its lcm
// and both companion pairs were already handled).  The first
// trusted_prefix generators are taken to be a Groebner basis already:
// their mutual pairs are not formed.
std::vector<ModuleElem> buchberger(std::vector<ModuleElem> G, WorkCounter& wc, bool local,
                                   std::uint32_t ecart_comp_bound,
                                   std::size_t trusted_prefix = 1) {
    std::vector<Pair> P;
    for (std::size_t k = std::max<std::size_t>(trusted_prefix, 1); k < G.size(); ++k)
        push_pairs(P, G, k);
    const std::uint32_t rank = G.empty() ? 0 : G.front().rank();

    auto in_queue = [&](std::size_t a, std::size_t b) {
        for (const Pair& q : P)
            if ((q.i == a && q.j == b) || (q.i == b && q.j == a)) return true;
        return false;
    };
    auto chain_skippable = [&](const Pair& pr) {
        const ModTerm& la = G[pr.i].leading();
        const ModTerm& lb = G[pr.j].leading();
        Monomial l = exp_max(la.m, lb.m);
        for (std::size_t k = 0; k < G.size(); ++k) {
            if (k == pr.i || k == pr.j || G[k].is_zero()) continue;
            const ModTerm& lk = G[k].leading();
            if (lk.comp != la.comp || !lk.m.divides(l)) continue;
            if (!in_queue(pr.i, k) && !in_queue(pr.j, k)) return true;
        }
        return false;
    };

    while (!P.empty()) {
        Pair pr = P.front();
        P.erase(P.begin());
        if (!local) {
            if (product_criterion(G[pr.i], G[pr.j], rank)) continue;
            if (chain_skippable(pr)) continue;
        }
        wc.tick_pair();
        ModuleElem s = spair(G[pr.i], G[pr.j]);
        ModuleElem r = local ? mora_nf(s, G, wc, ecart_comp_bound) : nf_global(s, G, wc);
        if (r.is_zero()) continue;
        if (!local && G.front().ring()->order.kind == OrderKind::LazardHomog)
            r = strip_homog_content(r);
        G.push_back(r.monic());
        push_pairs(P, G, G.size() - 1);
    }
    return G;
}

RingPtr homogenized_ring(const RingPtr& R) {
    std::vector<std::string> vars = R->vars;
    vars.push_back("@h");
    auto rh = std::make_shared<Ring>();
    rh->vars = std::move(vars);
    rh->field = R->field;
    rh->order = MonomialOrder{OrderKind::LazardHomog, 0};
    return rh;
}

ModuleElem homogenize(const ModuleElem& e, const RingPtr& RH) {
    std::uint32_t maxdeg = 0;
    for (const auto& t : e.terms()) maxdeg = std::max(maxdeg, t.m.degree());
    std::vector<ModTerm> ts;
    ts.reserve(e.terms().size());
    for (const auto& t : e.terms()) {
        std::vector<std::uint32_t> exps = t.m.exps();
        exps.push_back(maxdeg - t.m.degree());
        ts.push_back({t.comp, Monomial(std::move(exps)), t.c});
    }
    return ModuleElem(RH, e.rank(), std::move(ts));
}

ModuleElem dehomogenize(const ModuleElem& e, const RingPtr& R) {
    std::vector<ModTerm> ts;
    ts.reserve(e.terms().size());
    for (const auto& t : e.terms()) {
        std::vector<std::uint32_t> exps(t.m.exps().begin(), t.m.exps().end() - 1);
        ts.push_back({t.comp, Monomial(std::move(exps)), t.c});
    }
    return ModuleElem(R, e.rank(), std::move(ts));
}

}  // namespace

std::vector<ModuleElem> std_basis(std::vector<ModuleElem> gens, WorkCounter& wc,
                                  std::uint32_t ecart_comp_bound) {
    std::vector<ModuleElem> G;
    for (auto& g : gens)
        if (!g.is_zero()) G.push_back(g.monic());
    if (G.empty()) return G;
    const RingPtr R = G.front().ring();

    if (R->order.kind == OrderKind::LocalDegRevLex) {
        // Lazard's method: a Groebner basis of the homogenized generators
        // under the global homogenization order dehomogenizes to a standard
        // basis for the local order
        RingPtr RH = homogenized_ring(R);
        std::vector<ModuleElem> GH;
        GH.reserve(G.size());
        for (const auto& g : G) GH.push_back(homogenize(g, RH));
        GH = buchberger(std::move(GH), wc, false, ecart_comp_bound);
        G.clear();
        for (const auto& g : GH) G.push_back(dehomogenize(g, R));
    } else {
        G = buchberger(std::move(G), wc, true, ecart_comp_bound);
    }

    // minimalize: drop elements whose leading term is a strict multiple of
    // another's; on exact leading-term ties keep the shortest element,
    // then the earliest
    std::vector<bool> drop(G.size(), false);
    for (std::size_t i = 0; i < G.size(); ++i) {
        const ModTerm& li = G[i].leading();
        for (std::size_t j = 0; j < G.size(); ++j) {
            if (i == j) continue;
            const ModTerm& lj = G[j].leading();
            if (!lt_divides(lj, li)) continue;
            if (lj.m == li.m && lj.comp == li.comp) {
                std::size_t ni = G[i].terms().size(), nj = G[j].terms().size();
                if (nj < ni || (nj == ni && j < i)) { drop[i] = true; break; }
            } else {
                drop[i] = true;
                break;
            }
        }
    }
    std::vector<ModuleElem> out;
    for (std::size_t i = 0; i < G.size(); ++i)
        if (!drop[i]) out.push_back(std::move(G[i]));
    std::sort(out.begin(), out.end(), [](const ModuleElem& a, const ModuleElem& b) {
        return a.cmp_pos(a.leading(), b.leading()) < 0;
    });
    tail_reduce(out);
    return out;
}

std::vector<Polynomial> std_basis(const std::vector<Polynomial>& gens, WorkCounter& wc) {
    std::vector<ModuleElem> gm;
    gm.reserve(gens.size());
    for (const auto& g : gens) gm.push_back(ModuleElem::from_poly(g, 1, 0));
    std::vector<Polynomial> out;
    for (const auto& g : std_basis(std::move(gm), wc)) out.push_back(g.component(0));
    return out;
}

std::vector<ModuleElem> syzygies(const std::vector<ModuleElem>& gens, WorkCounter& wc) {
    if (gens.empty()) return {};
    const RingPtr& R = gens.front().ring();
    const std::uint32_t s = gens.front().rank();
    const std::uint32_t t = static_cast<std::uint32_t>(gens.size());
    std::vector<ModuleElem> graph;
    graph.reserve(t);
    for (std::uint32_t i = 0; i < t; ++i) {
        if (gens[i].rank() != s) throw input_error("syzygies: mixed ambient ranks");
        std::vector<ModTerm> ts;
        for (const auto& tm : gens[i].terms()) ts.push_back(tm);
        ts.push_back({s + i, Monomial(R->nvars()), fe_one(R->field)});
        graph.emplace_back(R, s + t, std::move(ts));
    }
    std::vector<ModuleElem> S = std_basis(std::move(graph), wc, s);
    std::vector<ModuleElem> out;
    for (const auto& g : S) {
        if (g.leading().comp >= s)  // no terms in the ambient block
            out.push_back(g.slice_tail(s));
    }
    return out;
}

HomogBasis std_basis_homog(const std::vector<ModuleElem>& gens, WorkCounter& wc) {
    HomogBasis out;
    std::vector<ModuleElem> G;
    for (const auto& g : gens)
        if (!g.is_zero()) G.push_back(g.monic());
    if (G.empty()) return out;
    const RingPtr R = G.front().ring();
    if (R->order.kind != OrderKind::LocalDegRevLex)
        throw input_error("homogenized bases need the local order");
    out.hom_ring = homogenized_ring(R);
    out.rank = G.front().rank();
    std::vector<ModuleElem> GH;
    GH.reserve(G.size());
    for (const auto& g : G) GH.push_back(homogenize(g, out.hom_ring));
    GH = buchberger(std::move(GH), wc, false, UINT32_MAX);
    // minimalize inside the homogeneous world; the set stays a basis
    std::vector<ModuleElem> kept;
    for (std::size_t i = 0; i < GH.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < GH.size() && !redundant; ++j) {
            if (i == j) continue;
            const ModTerm& li = GH[i].leading();
            const ModTerm& lj = GH[j].leading();
            if (!lt_divides(lj, li)) continue;
            if (lj.m == li.m && lj.comp == li.comp) {
                if (j < i) redundant = true;
            } else {
                redundant = true;
            }
        }
        if (!redundant) kept.push_back(GH[i]);
    }
    out.elems = std::move(kept);
    return out;
}

std::vector<Polynomial> tracked_elimination(
    const RingPtr& ring,
    const std::vector<std::pair<const HomogBasis*, std::uint32_t>>& blocks,
    std::uint32_t ambient_rank, const ModuleElem& target, WorkCounter& wc) {
    RingPtr RH;
    for (const auto& [basis, off] : blocks)
        if (basis->rank > 0 && !basis->elems.empty()) { RH = basis->hom_ring; break; }
    if (!RH) RH = homogenized_ring(ring);

    std::vector<ModuleElem> graph;
    for (const auto& [basis, off] : blocks)
        for (const auto& h : basis->elems) {
            std::vector<ModTerm> ts;
            ts.reserve(h.terms().size());
            for (const auto& t : h.terms()) ts.push_back({t.comp + off, t.m, t.c});
            graph.emplace_back(RH, ambient_rank + 1, std::move(ts));
        }
    const std::size_t trusted = graph.size();
    {
        std::vector<ModTerm> ts;
        for (const auto& t : target.terms()) ts.push_back(t);
        ts.push_back({ambient_rank, Monomial(ring->nvars()), fe_one(ring->field)});
        ModuleElem wt(ring, ambient_rank + 1, std::move(ts));
        graph.push_back(homogenize(wt, RH));
    }

    std::vector<ModuleElem> S = buchberger(std::move(graph), wc, false, UINT32_MAX, trusted);
    std::vector<Polynomial> out;
    for (const auto& g : S) {
        if (g.leading().comp != ambient_rank) continue;
        // dehomogenize the tracked coordinate back into the base ring
        std::vector<Term> ts;
        for (const auto& t : g.terms()) {
            std::vector<std::uint32_t> exps(t.m.exps().begin(), t.m.exps().end() - 1);
            ts.push_back({Monomial(std::move(exps)), t.c});
        }
        Polynomial c(ring, std::move(ts));
        if (!c.is_zero()) out.push_back(std::move(c));
    }
    return out;
}

std::vector<Polynomial> annihilator_gens(const HomogBasis& basis, const RingPtr& ring,
                                         WorkCounter& wc) {
    const std::uint32_t s = basis.rank;
    if (s == 0) return {};  // zero module: nothing annihilated beyond zero
    std::vector<std::pair<const HomogBasis*, std::uint32_t>> blocks;
    for (std::uint32_t b = 0; b < s; ++b) blocks.push_back({&basis, b * s});
    std::vector<ModTerm> diag;
    for (std::uint32_t b = 0; b < s; ++b)
        diag.push_back({b * s + b, Monomial(ring->nvars()), fe_one(ring->field)});
    ModuleElem w(ring, s * s, std::move(diag));
    return tracked_elimination(ring, blocks, s * s, w, wc);
}

std::vector<Polynomial> coefficient_ideal_gens(const std::vector<ModuleElem>& cols,
                                               const ModuleElem& w, WorkCounter& wc) {
    const RingPtr& R = w.ring();
    const std::uint32_t s = w.rank();
    std::vector<ModuleElem> graph;
    graph.reserve(cols.size() + 1);
    for (const auto& c : cols) {
        if (c.rank() != s) throw input_error("coefficient ideal: mixed ambient ranks");
        if (c.is_zero()) continue;
        std::vector<ModTerm> ts;
        for (const auto& tm : c.terms()) ts.push_back(tm);
        graph.emplace_back(R, s + 1, std::move(ts));
    }
    {
        std::vector<ModTerm> ts;
        for (const auto& tm : w.terms()) ts.push_back(tm);
        ts.push_back({s, Monomial(R->nvars()), fe_one(R->field)});
        graph.emplace_back(R, s + 1, std::move(ts));
    }
    std::vector<ModuleElem> S = std_basis(std::move(graph), wc, s);
    std::vector<Polynomial> out;
    for (const auto& g : S) {
        if (g.leading().comp == s) {
            Polynomial c = g.component(s);
            if (!c.is_zero()) out.push_back(std::move(c));
        }
    }
    return out;
}

std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, std::size_t aux_count,
                                  WorkCounter& wc) {
    if (gens.empty()) return {};
    const RingPtr& R = gens.front().ring();
    if (R->order.kind != OrderKind::Block || R->order.block_split != aux_count)
        throw input_error("eliminate requires a Block order splitting off the aux variables");
    std::vector<Polynomial> out;
    for (const auto& g : std_basis(gens, wc)) {
        bool aux_free = true;
        for (std::size_t i = 0; i < aux_count && aux_free; ++i)
            if (g.leading_monomial().exp(i) != 0) aux_free = false;
        if (aux_free) out.push_back(g);
    }
    return out;
}

}  // namespace matsing
