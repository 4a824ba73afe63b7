#include "matsing/matrix.hpp"

#include <algorithm>
#include <map>

namespace matsing {

std::string space_tag_name(SpaceTag t) {
    switch (t) {
        case SpaceTag::Full: return "full";
        case SpaceTag::Symmetric: return "sym";
        case SpaceTag::SkewSymmetric: return "skew";
    }
    return "?";
}

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols, SpaceTag tag)
    : ring_(std::move(ring)), rows_(rows), cols_(cols),
      a_(rows * cols, Polynomial::zero(ring_)), tag_(tag) {}

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols,
                       std::vector<Polynomial> entries, SpaceTag tag)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), a_(std::move(entries)), tag_(tag) {
    if (a_.size() != rows_ * cols_) throw input_error("matrix entry count mismatch");
    for (const auto& f : a_) require_same_ring(ring_, f.ring(), "matrix construction");
    if (tag_ != SpaceTag::Full) {
        if (rows_ != cols_) throw input_error("symmetric/skew tag requires a square matrix");
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                const Polynomial& u = at(i, j);
                const Polynomial& v = at(j, i);
                if (tag_ == SpaceTag::Symmetric && u != v)
                    throw input_error("matrix is not symmetric");
                if (tag_ == SpaceTag::SkewSymmetric && u != -v)
                    throw input_error("matrix is not skew-symmetric");
            }
    }
}

void PolyMatrix::set(std::size_t i, std::size_t j, Polynomial f) {
    require_same_ring(ring_, f.ring(), "matrix entry");
    a_[i * cols_ + j] = std::move(f);
}

PolyMatrix PolyMatrix::identity(const RingPtr& r, std::size_t n) {
    PolyMatrix m(r, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Polynomial::one(r));
    return m;
}

PolyMatrix PolyMatrix::transposed() const {
    PolyMatrix t(ring_, cols_, rows_, tag_ == SpaceTag::Full ? SpaceTag::Full : tag_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
    return t;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    require_same_ring(ring_, o.ring_, "matrix product");
    if (cols_ != o.rows_) throw input_error("matrix format mismatch in product");
    PolyMatrix r(ring_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < o.cols_; ++j) {
            Polynomial s = Polynomial::zero(ring_);
            for (std::size_t k = 0; k < cols_; ++k) s = s + at(i, k) * o.at(k, j);
            r.set(i, j, std::move(s));
        }
    return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    require_same_ring(ring_, o.ring_, "matrix sum");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw input_error("matrix format mismatch in sum");
    PolyMatrix r(ring_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j) + o.at(i, j));
    return r;
}

bool PolyMatrix::all_entries_in_maximal() const {
    for (const auto& f : a_)
        if (!f.is_zero() && f.leading_monomial().is_one()) return false;
    return true;
}

std::vector<ModuleElem> PolyMatrix::columns() const {
    std::vector<ModuleElem> cols;
    cols.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) {
        std::vector<ModTerm> ts;
        for (std::size_t i = 0; i < rows_; ++i)
            for (const auto& t : at(i, j).terms())
                ts.push_back({static_cast<std::uint32_t>(i), t.m, t.c});
        cols.emplace_back(ring_, static_cast<std::uint32_t>(rows_), std::move(ts));
    }
    return cols;
}

PolyMatrix block_diag(const PolyMatrix& a, const PolyMatrix& b) {
    require_same_ring(a.ring(), b.ring(), "block diagonal");
    PolyMatrix r(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j));
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r.set(a.rows() + i, a.cols() + j, b.at(i, j));
    return r;
}

std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        std::size_t i = k;
        while (i-- > 0) {
            if (cur[i] + (k - i) < n) {
                ++cur[i];
                for (std::size_t j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
                break;
            }
            if (i == 0) return out;
        }
    }
}

namespace {

// minor of the submatrix given by sorted row/column index sets, memoized on
// the index pair
struct MinorTable {
    const PolyMatrix& A;
    std::map<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>, Polynomial> memo;

    Polynomial get(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
        if (rows.empty()) return Polynomial::one(A.ring());
        auto key = std::make_pair(rows, cols);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Polynomial det = Polynomial::zero(A.ring());
        std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const Polynomial& e = A.at(rows[0], cols[c]);
            if (e.is_zero()) continue;
            std::vector<std::size_t> sub_cols;
            for (std::size_t j = 0; j < cols.size(); ++j)
                if (j != c) sub_cols.push_back(cols[j]);
            Polynomial term = e * get(sub_rows, sub_cols);
            det = (c % 2 == 0) ? det + term : det - term;
        }
        memo.emplace(std::move(key), det);
        return det;
    }
};

}  // namespace

Polynomial determinant(const PolyMatrix& A) {
    if (A.rows() != A.cols()) throw input_error("determinant of a non-square matrix");
    std::vector<std::size_t> all(A.rows());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    MinorTable mt{A, {}};
    return mt.get(all, all);
}

Ideal minors(const PolyMatrix& A, int j) {
    if (j < 0) throw input_error("minor size must be nonnegative");
    if (j == 0) return Ideal::unit(A.ring());
    if (static_cast<std::size_t>(j) > std::min(A.rows(), A.cols())) return Ideal::zero(A.ring());
    MinorTable mt{A, {}};
    std::vector<Polynomial> gens;
    for (const auto& rs : index_subsets(A.rows(), j))
        for (const auto& cs : index_subsets(A.cols(), j)) gens.push_back(mt.get(rs, cs));
    return Ideal(A.ring(), std::move(gens));
}

Ideal ann_coker_columns(const RingPtr& ring, std::uint32_t rank,
                        const std::vector<ModuleElem>& cols) {
    if (rank == 0) return Ideal::unit(ring);
    if (rank == 1) {
        // the annihilator of R/I is I itself
        std::vector<Polynomial> gens;
        for (const auto& c : cols) gens.push_back(c.component(0));
        return Ideal(ring, std::move(gens));
    }
    WorkCounter wc;
    std::vector<ModuleElem> live;
    for (const auto& c : cols)
        if (!c.is_zero()) live.push_back(c);
    if (live.empty()) return Ideal::zero(ring);
    // one homogenized standard basis of the column module, then a single
    // tracked elimination against the diagonal vector: c * (e_0 + ... +
    // e_{s-1}) lies in the block sum of s copies iff c annihilates the
    // cokernel
    HomogBasis H = std_basis_homog(live, wc);
    return Ideal(ring, annihilator_gens(H, ring, wc));
}

Ideal ann_coker(const PolyMatrix& A) {
    return ann_coker_columns(A.ring(), static_cast<std::uint32_t>(A.rows()), A.columns());
}

PolyMatrix exterior_power_map(const PolyMatrix& A, int r) {
    const std::size_t m = A.rows(), n = A.cols();
    if (r < 1 || static_cast<std::size_t>(r) > m)
        throw input_error("wedge order out of range");
    auto row_sets = index_subsets(m, r);
    auto w_sets = index_subsets(m, r - 1);
    PolyMatrix out(A.ring(), row_sets.size(), n * w_sets.size());
    // column (c, w): the wedge of column c of A with basis element e_w
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t wi = 0; wi < w_sets.size(); ++wi) {
            const auto& w = w_sets[wi];
            std::size_t col = c * w_sets.size() + wi;
            for (std::size_t i = 0; i < m; ++i) {
                if (std::find(w.begin(), w.end(), i) != w.end()) continue;
                const Polynomial& e = A.at(i, c);
                if (e.is_zero()) continue;
                std::vector<std::size_t> s = w;
                std::size_t pos = 0;
                while (pos < s.size() && s[pos] < i) ++pos;
                s.insert(s.begin() + pos, i);
                auto it = std::lower_bound(row_sets.begin(), row_sets.end(), s);
                std::size_t row = static_cast<std::size_t>(it - row_sets.begin());
                Polynomial signed_e = (pos % 2 == 0) ? e : -e;
                out.set(row, col, out.at(row, col) + signed_e);
            }
        }
    }
    return out;
}

Ideal ann_coker_j(const PolyMatrix& A, int j) {
    if (j <= 0) return Ideal::unit(A.ring());
    if (static_cast<std::size_t>(j) > A.rows()) return Ideal::zero(A.ring());
    int order = static_cast<int>(A.rows()) + 1 - j;
    if (order == 1) return ann_coker(A);
    return ann_coker(exterior_power_map(A, order));
}

}  // namespace matsing
