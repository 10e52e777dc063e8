#pragma once

#include <cstdint>
#include <vector>

#include "descent/algebra.hpp"
#include "descent/combinatorics.hpp"
#include "descent/linalg.hpp"

namespace descent {

inline constexpr int kMaxCharacterMatrixDegree = 10;

/// Class function of the symmetric group of degree n: one value per
/// partition, in canonical partition order.  modulus 0 means exact integer
/// values, otherwise residues in [0, modulus).
struct CharacterVector {
    int n = 0;
    std::uint32_t modulus = 0;
    std::vector<std::int64_t> values;

    bool is_zero() const;
    CharacterVector pointwise_product(const CharacterVector& other) const;
    CharacterVector reduced_mod(std::uint32_t p) const;

    friend bool operator==(const CharacterVector&, const CharacterVector&) = default;
};

/// Value of the Young permutation character indexed by q on the conjugacy
/// class of cycle type pi: the number of ways to distribute the cycles of a
/// permutation of type pi over the blocks of q filling each block exactly.
std::int64_t young_character_value(const Composition& q, const Partition& pi);

/// Character of an algebra element: the linear extension of basis element ->
/// Young character.  Over the integers this is the classical character map;
/// over F_p the element is lifted to integer coefficients and the values
/// reduced, which is independent of the choice of lift.
CharacterVector character_vector(const AlgebraElement& x);

/// The 2^{n-1} x p(n) integer matrix of Young character values, rows in
/// canonical composition order, columns in canonical partition order.
class CharacterMatrix {
public:
    explicit CharacterMatrix(int n, bool force = false);

    int n() const { return n_; }
    int row_count() const { return static_cast<int>(rows_.size()); }
    int col_count() const { return static_cast<int>(cols_.size()); }
    const std::vector<Composition>& rows() const { return rows_; }
    const std::vector<Partition>& cols() const { return cols_; }

    std::int64_t at(int qi, int pj) const {
        return values_[static_cast<std::size_t>(qi) * cols_.size() + pj];
    }

    FpMatrix reduced_mod(std::uint32_t p) const;

private:
    int n_;
    std::vector<Composition> rows_;
    std::vector<Partition> cols_;
    std::vector<std::int64_t> values_;
};

inline CharacterMatrix character_matrix(int n, bool force = false) {
    return CharacterMatrix(n, force);
}

/// Rank of the character matrix over F_p; equals the number of p-regular
/// classes.
int rank_mod_p(const CharacterMatrix& m, std::uint32_t p);

/// Restrict the character matrix to partition-shaped rows, order both axes
/// by ascending lexicographic partition order, and confirm that the square
/// submatrix is lower triangular mod p with the product of multiplicity
/// factorials on the diagonal.
bool check_triangular_diagonal(int n, std::uint32_t p, bool force = false);

/// Columns indexed by partitions with the same p-regular part must be
/// congruent mod p.
bool check_column_congruence(int n, std::uint32_t p, bool force = false);

/// One-dimensional representation of the p-modular descent algebra: the
/// reduced character values at one p-regular class, listed over the
/// canonical basis.
struct IrreducibleRep {
    Partition label;
    std::vector<std::uint32_t> values; // one residue per basis composition

    /// Value on an arbitrary element (linear extension).
    std::uint32_t operator()(const AlgebraElement& x) const;

    friend bool operator==(const IrreducibleRep&, const IrreducibleRep&) = default;
};

/// The representations attached to the p-regular partitions of n, in
/// canonical partition order.
std::vector<IrreducibleRep> irreducible_representations(int n, std::uint32_t p,
                                                        bool force = false);

} // namespace descent
