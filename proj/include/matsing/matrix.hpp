#pragma once

#include "matsing/ideal.hpp"

namespace matsing {

enum class SpaceTag { Full, Symmetric, SkewSymmetric };

std::string space_tag_name(SpaceTag t);

// Rectangular matrix of polynomials, carrying the deformation-space tag.
// Structural constraints (symmetry, zero diagonal for the skew case) are
// validated at construction.
class PolyMatrix {
public:
    PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols, SpaceTag tag = SpaceTag::Full);
    PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols, std::vector<Polynomial> entries,
               SpaceTag tag = SpaceTag::Full);

    const RingPtr& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    SpaceTag tag() const { return tag_; }

    const Polynomial& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, Polynomial f);

    static PolyMatrix identity(const RingPtr& r, std::size_t n);
    PolyMatrix transposed() const;
    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator+(const PolyMatrix& o) const;
    bool all_entries_in_maximal() const;

    // columns as elements of R^rows
    std::vector<ModuleElem> columns() const;

private:
    RingPtr ring_;
    std::size_t rows_, cols_;
    std::vector<Polynomial> a_;  // row-major
    SpaceTag tag_;
};

PolyMatrix block_diag(const PolyMatrix& a, const PolyMatrix& b);

// Determinant by Laplace expansion with memoized sub-minors.
Polynomial determinant(const PolyMatrix& A);

// Ideal of all j x j minors; I_0 = R, I_j = (0) past the format.  Generator
// order: row subsets, then column subsets, lexicographically.
Ideal minors(const PolyMatrix& A, int j);

// { f : f * R^rows lies in the column span }, assembled from the syzygy
// coefficient ideals of (columns | e_i) and intersected over i.
Ideal ann_coker(const PolyMatrix& A);
// same computation for an explicit column family inside R^rank
Ideal ann_coker_columns(const RingPtr& ring, std::uint32_t rank,
                        const std::vector<ModuleElem>& cols);

// Matrix of the wedge map E (x) Lambda^(r-1) F -> Lambda^r F induced by A:
// rows are the r-subsets of the row indices (lexicographic), columns are
// (column of A) x ((r-1)-subsets), entries signed entries of A.
PolyMatrix exterior_power_map(const PolyMatrix& A, int r);

// Generalized annihilator ann.coker_j: R for j <= 0, (0) for j > rows,
// otherwise ann_coker of the wedge map of order rows+1-j.
Ideal ann_coker_j(const PolyMatrix& A, int j);

// subsets of {0..n-1} of size k in lexicographic order
std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t k);

}  // namespace matsing
