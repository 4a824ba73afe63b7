#include "matsing/determinacy.hpp"

#include <algorithm>
#include <map>

namespace matsing {

std::vector<Polynomial> DerivationSet::multipliers(const RingPtr& r) const {
    switch (mult) {
        case DerMultiplier::One:
            return {Polynomial::one(r)};
        case DerMultiplier::M: {
            std::vector<Polynomial> out;
            for (std::size_t i = 0; i < r->nvars(); ++i) out.push_back(Polynomial::variable(r, i));
            return out;
        }
        case DerMultiplier::M2: {
            std::vector<Polynomial> out;
            for (std::size_t a = 0; a < r->nvars(); ++a)
                for (std::size_t b = a; b < r->nvars(); ++b)
                    out.push_back(Polynomial::variable(r, a) * Polynomial::variable(r, b));
            return out;
        }
    }
    return {};
}

std::string DerivationSet::name() const {
    switch (mult) {
        case DerMultiplier::One: return "full";
        case DerMultiplier::M: return "m";
        case DerMultiplier::M2: return "m2";
    }
    return "?";
}

bool group_has_left(GroupBase b) {
    return b == GroupBase::Gl || b == GroupBase::Glr || b == GroupBase::CGl ||
           b == GroupBase::CGlr;
}
bool group_has_right(GroupBase b) {
    return b == GroupBase::Gr || b == GroupBase::Glr || b == GroupBase::CGr ||
           b == GroupBase::CGlr;
}
bool group_has_congr(GroupBase b) {
    return b == GroupBase::Gcongr || b == GroupBase::CGcongr;
}
bool group_has_aut(GroupBase b) {
    return b == GroupBase::Aut || b == GroupBase::CGl || b == GroupBase::CGr ||
           b == GroupBase::CGlr || b == GroupBase::CGcongr;
}

std::string group_token(const GroupSpec& g) {
    std::string t;
    switch (g.base) {
        case GroupBase::Gl: t = "gl"; break;
        case GroupBase::Gr: t = "gr"; break;
        case GroupBase::Glr: t = "glr"; break;
        case GroupBase::Gcongr: t = "gcongr"; break;
        case GroupBase::Aut: t = "aut"; break;
        case GroupBase::CGl: t = "cgl"; break;
        case GroupBase::CGr: t = "cgr"; break;
        case GroupBase::CGlr: t = "cglr"; break;
        case GroupBase::CGcongr: t = "cgcongr"; break;
    }
    if (g.filtered) t += "^(m)";
    return t;
}

GroupSpec parse_group(const std::string& token) {
    std::string t;
    for (char c : token) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    static const std::map<std::string, GroupBase> table = {
        {"gl", GroupBase::Gl},         {"gr", GroupBase::Gr},
        {"glr", GroupBase::Glr},       {"gcongr", GroupBase::Gcongr},
        {"aut", GroupBase::Aut},       {"cgl", GroupBase::CGl},
        {"cgr", GroupBase::CGr},       {"cglr", GroupBase::CGlr},
        {"cgcongr", GroupBase::CGcongr},
    };
    auto it = table.find(t);
    if (it == table.end()) throw input_error("unknown group: " + token);
    return {it->second, false};
}

PolyMatrix jacobian(const PolyMatrix& A, const DerivationSet& D) {
    const RingPtr& R = A.ring();
    const std::size_t p = R->nvars();
    auto mults = D.multipliers(R);
    PolyMatrix J(R, A.rows() * A.cols(), mults.size() * p);
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) {
            const std::size_t row = i * A.cols() + j;
            for (std::size_t g = 0; g < mults.size(); ++g)
                for (std::size_t l = 0; l < p; ++l)
                    J.set(row, g * p + l, mults[g] * A.at(i, j).derivative(l));
        }
    return J;
}

Ideal sing(const Ideal& J, int r, const DerivationSet& D, bool allow_shortcut) {
    if (r < 1) throw input_error("singular-locus rank must be positive");
    const RingPtr& R = J.ring();
    if (J.is_zero() || J.is_unit()) return J;
    if (allow_shortcut) {
        // the derivation module has rank p; below the requested rank (or
        // when the height of J is) the singular ideal collapses to J
        if (static_cast<int>(R->nvars()) < r || height(J) < r) return J;
    }
    const auto& f = J.gens();
    const std::uint32_t N = static_cast<std::uint32_t>(f.size());
    std::vector<ModuleElem> cols;
    for (std::uint32_t i = 0; i < N; ++i)
        for (std::uint32_t j = 0; j < N; ++j)
            cols.push_back(ModuleElem::from_poly(f[j], N, i));
    for (const auto& g : D.multipliers(R))
        for (std::size_t l = 0; l < R->nvars(); ++l) {
            std::vector<ModTerm> ts;
            for (std::uint32_t i = 0; i < N; ++i) {
                Polynomial df = g * f[i].derivative(l);
                for (const auto& t : df.terms()) ts.push_back({i, t.m, t.c});
            }
            cols.emplace_back(R, N, std::move(ts));
        }
    if (r > static_cast<int>(N)) return Ideal::zero(R);
    const int order = static_cast<int>(N) + 1 - r;
    if (order == 1) return ann_coker_columns(R, N, cols);
    // route through the wedge map of the presentation matrix
    PolyMatrix P(R, N, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::uint32_t i = 0; i < N; ++i) P.set(i, c, cols[c].component(i));
    return ann_coker_j(P, r);
}

namespace {

// Sat_J(S) for the bound intersections, where the iteration count is not
// needed.  A cofinite S absorbs a power of any proper J, so the factor is
// the unit ideal outright.
Ideal saturation_factor(const Ideal& S, const Ideal& J) {
    if (!J.is_unit() && contains_power_of_max(S)) return Ideal::unit(S.ring());
    return saturate(S, J).ideal;
}

// coordinates of the deformation space for a given tag
struct SpaceCoords {
    std::uint32_t rank = 0;
    std::vector<std::pair<std::size_t, std::size_t>> coords;

    static SpaceCoords make(SpaceTag tag, std::size_t m, std::size_t n) {
        SpaceCoords s;
        if (tag == SpaceTag::Full) {
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < n; ++j) s.coords.push_back({i, j});
        } else if (tag == SpaceTag::Symmetric) {
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = i; j < n; ++j) s.coords.push_back({i, j});
        } else {
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = i + 1; j < n; ++j) s.coords.push_back({i, j});
        }
        s.rank = static_cast<std::uint32_t>(s.coords.size());
        return s;
    }

    // read off the coordinates of M (upper triangle for sym/skew, without
    // doubling)
    ModuleElem flatten(const PolyMatrix& M) const {
        std::vector<ModTerm> ts;
        for (std::uint32_t k = 0; k < rank; ++k) {
            const auto& [i, j] = coords[k];
            for (const auto& t : M.at(i, j).terms()) ts.push_back({k, t.m, t.c});
        }
        return ModuleElem(M.ring(), rank, std::move(ts));
    }
};

PolyMatrix left_unit_direction(const PolyMatrix& A, std::size_t a, std::size_t b) {
    // E_ab * A: row a carries row b of A
    PolyMatrix M(A.ring(), A.rows(), A.cols());
    for (std::size_t j = 0; j < A.cols(); ++j) M.set(a, j, A.at(b, j));
    return M;
}

PolyMatrix right_unit_direction(const PolyMatrix& A, std::size_t c, std::size_t d) {
    // A * E_cd: column d carries column c of A
    PolyMatrix M(A.ring(), A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i) M.set(i, d, A.at(i, c));
    return M;
}

PolyMatrix congr_direction(const PolyMatrix& A, std::size_t a, std::size_t b) {
    // E_ab * A + A * E_ba
    PolyMatrix M(A.ring(), A.rows(), A.cols());
    for (std::size_t j = 0; j < A.cols(); ++j) M.set(a, j, A.at(b, j));
    for (std::size_t i = 0; i < A.rows(); ++i) M.set(i, a, M.at(i, a) + A.at(i, b));
    return M;
}

PolyMatrix derivation_direction(const PolyMatrix& A, const Polynomial& g, std::size_t l) {
    PolyMatrix M(A.ring(), A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) M.set(i, j, g * A.at(i, j).derivative(l));
    return M;
}

void check_group_space(const GroupSpec& g, const PolyMatrix& A) {
    if (group_has_congr(g.base) && A.rows() != A.cols())
        throw input_error("congruence action needs a square matrix");
    if (A.tag() != SpaceTag::Full) {
        if (!(group_has_congr(g.base) || g.base == GroupBase::Aut))
            throw input_error("symmetric/skew deformation spaces admit only the congruence "
                              "or automorphism actions");
    }
}

}  // namespace

TangentModule tangent_matrix(const GroupSpec& g, const PolyMatrix& A) {
    check_group_space(g, A);
    const RingPtr& R = A.ring();
    SpaceCoords S = SpaceCoords::make(A.tag(), A.rows(), A.cols());
    TangentModule T;
    T.rank = S.rank;

    std::vector<std::pair<std::string, PolyMatrix>> dirs;
    if (group_has_left(g.base))
        for (std::size_t a = 0; a < A.rows(); ++a)
            for (std::size_t b = 0; b < A.rows(); ++b)
                dirs.push_back({"left[" + std::to_string(a) + "," + std::to_string(b) + "]",
                                left_unit_direction(A, a, b)});
    if (group_has_right(g.base))
        for (std::size_t c = 0; c < A.cols(); ++c)
            for (std::size_t d = 0; d < A.cols(); ++d)
                dirs.push_back({"right[" + std::to_string(c) + "," + std::to_string(d) + "]",
                                right_unit_direction(A, c, d)});
    if (group_has_congr(g.base))
        for (std::size_t a = 0; a < A.rows(); ++a)
            for (std::size_t b = 0; b < A.rows(); ++b)
                dirs.push_back({"congr[" + std::to_string(a) + "," + std::to_string(b) + "]",
                                congr_direction(A, a, b)});

    // the filtered subgroup multiplies the linear directions by m
    std::vector<std::pair<std::string, PolyMatrix>> linear;
    if (g.filtered) {
        for (auto& [label, M] : dirs)
            for (std::size_t k = 0; k < R->nvars(); ++k) {
                PolyMatrix scaled(R, M.rows(), M.cols());
                Polynomial xk = Polynomial::variable(R, k);
                for (std::size_t i = 0; i < M.rows(); ++i)
                    for (std::size_t j = 0; j < M.cols(); ++j) scaled.set(i, j, xk * M.at(i, j));
                linear.push_back({R->vars[k] + "*" + label, std::move(scaled)});
            }
    } else {
        linear = std::move(dirs);
    }

    if (group_has_aut(g.base)) {
        DerivationSet D = g.filtered ? DerivationSet::in_max_sq() : DerivationSet::in_max();
        for (const auto& mult : D.multipliers(R))
            for (std::size_t l = 0; l < R->nvars(); ++l)
                linear.push_back({"aut[" + poly_to_string(mult) + "*d_" + R->vars[l] + "]",
                                  derivation_direction(A, mult, l)});
    }

    for (auto& [label, M] : linear) {
        ModuleElem col = S.flatten(M);
        if (col.is_zero()) continue;
        T.cols.push_back(std::move(col));
        T.provenance.push_back(label);
    }
    return T;
}

Ideal t1_ann(const GroupSpec& g, const PolyMatrix& A) {
    TangentModule T = tangent_matrix(g, A);
    return ann_coker_columns(A.ring(), T.rank, T.cols);
}

AnnBounds glr_bounds(const PolyMatrix& A) {
    if (A.rows() > A.cols()) throw input_error("glr bounds expect rows <= cols");
    const std::size_t m = A.rows(), n = A.cols();
    Ideal L = sum(ann_coker(A), ann_coker(jacobian(A, DerivationSet::in_max())));
    Ideal U = Ideal::unit(A.ring());
    bool first = true;
    for (std::size_t j = 0; j < m; ++j) {
        int rank = static_cast<int>((m - j) * (n - j));
        Ideal S = sing(minors(A, static_cast<int>(j) + 1), rank, DerivationSet::in_max());
        Ideal factor = saturation_factor(S, minors(A, static_cast<int>(j)));
        if (factor.is_unit()) continue;
        U = first ? factor : intersect(U, factor);
        first = false;
    }
    return {std::move(L), std::move(U)};
}

Ideal radical_support_glr(const PolyMatrix& A) {
    if (A.rows() > A.cols()) throw input_error("radical support expects rows <= cols");
    const std::size_t m = A.rows(), n = A.cols();
    Ideal U = Ideal::unit(A.ring());
    bool first = true;
    for (std::size_t j = 0; j < m; ++j) {
        int rank = static_cast<int>((m - j) * (n - j));
        Ideal S = sing(minors(A, static_cast<int>(j) + 1), rank, DerivationSet::full());
        Ideal factor = saturation_factor(S, minors(A, static_cast<int>(j)));
        if (factor.is_unit()) continue;
        U = first ? factor : intersect(U, factor);
        first = false;
    }
    return U;
}

AnnBounds congr_bounds(const PolyMatrix& A) {
    if (A.tag() == SpaceTag::Full)
        throw input_error("congruence bounds exist only for symmetric or skew spaces");
    const std::size_t m = A.rows();
    const bool skew = A.tag() == SpaceTag::SkewSymmetric;
    Ideal L = sum(ann_coker(A), ann_coker(jacobian(A, DerivationSet::in_max())));
    Ideal U = Ideal::unit(A.ring());
    bool first = true;
    for (std::size_t j = 0; j < m; ++j) {
        if (skew && j % 2 != 0) continue;
        const std::size_t k = skew ? (m - j) : (m - j + 1);
        int rank = static_cast<int>(k * (k - 1) / 2);
        if (rank < 1) continue;
        Ideal S = sing(minors(A, static_cast<int>(j) + 1), rank, DerivationSet::in_max());
        Ideal factor = saturation_factor(S, minors(A, static_cast<int>(j)));
        if (factor.is_unit()) continue;
        U = first ? factor : intersect(U, factor);
        first = false;
    }
    return {std::move(L), std::move(U)};
}

std::vector<HeightRow> expected_heights_check(const PolyMatrix& A) {
    const std::size_t m = std::min(A.rows(), A.cols()), n = std::max(A.rows(), A.cols());
    const int p = static_cast<int>(A.ring()->nvars());
    std::vector<HeightRow> rows;
    for (std::size_t j = 1; j <= m; ++j) {
        Ideal I = minors(A, static_cast<int>(j));
        int h = height(I);
        int expected = 0;
        bool applicable = true;
        switch (A.tag()) {
            case SpaceTag::Full:
                expected = std::min<int>(static_cast<int>((m + 1 - j) * (n + 1 - j)), p);
                break;
            case SpaceTag::Symmetric: {
                const std::size_t k = m - j + 2;
                expected = std::min<int>(static_cast<int>(k * (k - 1) / 2), p);
                break;
            }
            case SpaceTag::SkewSymmetric: {
                // ranks of a skew form drop in even steps; only odd minor
                // sizes carry the binomial expected height
                if (j % 2 == 0) {
                    applicable = false;
                } else {
                    const std::size_t k = m - j + 1;
                    expected = std::min<int>(static_cast<int>(k * (k - 1) / 2), p);
                }
                break;
            }
        }
        rows.push_back({static_cast<int>(j), h, expected, applicable,
                        !applicable || h == expected});
    }
    return rows;
}

std::pair<std::uint32_t, std::uint32_t> order_bounds(const GroupSpec& g, const PolyMatrix& A) {
    Ideal exact = t1_ann(g, A);
    if (!contains_power_of_max(exact))
        throw input_error("order bounds are defined only for finitely determined matrices");
    std::uint32_t lo = loewy_length(exact);
    Ideal filtered = t1_ann(g.with_filtration(), A);
    std::uint32_t hi = loewy_length(filtered);
    // the order of determinacy is never negative
    return {lo > 0 ? lo - 1 : 0, hi > 0 ? hi - 1 : 0};
}

DeterminacyReport verdict(const GroupSpec& g, const PolyMatrix& A_in) {
    DeterminacyReport rep;
    rep.group = g;

    PolyMatrix A = A_in;
    GroupSpec gg = g;
    if (A.rows() > A.cols()) {
        A = A.transposed();
        rep.transposed = true;
        // transposition swaps the one-sided actions
        if (gg.base == GroupBase::Gl) gg.base = GroupBase::Gr;
        else if (gg.base == GroupBase::Gr) gg.base = GroupBase::Gl;
        else if (gg.base == GroupBase::CGl) gg.base = GroupBase::CGr;
        else if (gg.base == GroupBase::CGr) gg.base = GroupBase::CGl;
    }
    check_group_space(gg, A);

    rep.space = A.tag();
    rep.m = A.rows();
    rep.n = A.cols();
    rep.p = A.ring()->nvars();
    rep.heights = expected_heights_check(A);

    // rank obstruction: congruence with coordinate changes on the full
    // space annihilates nothing when the derivation rank is too small
    if (gg.base == GroupBase::CGcongr && A.tag() == SpaceTag::Full &&
        rep.p < rep.m / 2) {
        rep.exact = Ideal::zero(A.ring());
        rep.exact_cofinite = false;
        rep.verdict = "not-finitely-determined";
        rep.reason = "derivation rank below floor(m/2): the annihilator vanishes";
        return rep;
    }

    Ideal exact = t1_ann(gg, A);
    rep.exact = exact;
    auto cof = contains_power_of_max(exact);
    rep.exact_cofinite = cof.has_value();

    if (gg.base == GroupBase::CGlr && A.tag() == SpaceTag::Full && A.rows() <= A.cols()) {
        AnnBounds b = glr_bounds(A);
        rep.lower = b.lower;
        rep.upper = b.upper;
    } else if (gg.base == GroupBase::CGcongr && A.tag() != SpaceTag::Full) {
        AnnBounds b = congr_bounds(A);
        rep.lower = b.lower;
        rep.upper = b.upper;
    }
    if (rep.lower) rep.lower_in_exact = exact.contains(*rep.lower);
    if (rep.upper) rep.exact_in_upper = rep.upper->contains(exact);

    if (rep.exact_cofinite) {
        rep.exact_loewy = loewy_length(exact);
        std::uint32_t lo = *rep.exact_loewy;
        std::uint32_t hi = loewy_length(t1_ann(gg.with_filtration(), A));
        rep.bounds = {{lo > 0 ? lo - 1 : 0, hi > 0 ? hi - 1 : 0}};
        rep.verdict = "finitely-determined";
    } else {
        rep.verdict = "not-finitely-determined";
        rep.reason = "the annihilator contains no power of the maximal ideal";
        if (A.all_entries_in_maximal()) {
            for (const auto& row : rep.heights)
                if (!row.pass) {
                    rep.reason += "; height of the " + std::to_string(row.j) +
                                  "-minor ideal is " + std::to_string(row.height) +
                                  ", expected " + std::to_string(row.expected);
                    break;
                }
        }
    }
    return rep;
}

bool briancon_skoda_check(const Polynomial& f) {
    if (f.is_zero() || f.leading_monomial().is_one())
        throw input_error("the check needs f in the maximal ideal");
    const RingPtr& R = f.ring();
    std::vector<Polynomial> partials;
    for (std::size_t l = 0; l < R->nvars(); ++l) partials.push_back(f.derivative(l));
    Ideal jac(R, std::move(partials));
    return jac.contains(pow(f, static_cast<std::uint32_t>(R->nvars())));
}

}  // namespace matsing
