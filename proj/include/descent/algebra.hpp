#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "descent/combinatorics.hpp"
#include "descent/linalg.hpp"

namespace descent {

// Structure tables stay below these degrees unless the caller forces them;
// the cell count is 4^{n-1} and the enumeration work grows faster still.
inline constexpr int kMaxTableDegreeFp = 10;
inline constexpr int kMaxTableDegreeZ = 9;

/// Coefficient ring: the integers, or the prime field F_p.
class RingTag {
public:
    static RingTag integers() { return RingTag(0); }
    static RingTag prime_field(std::uint32_t p);

    bool is_integers() const { return p_ == 0; }
    std::uint32_t modulus() const { return p_; } // 0 for the integers
    std::string str() const;

    friend bool operator==(const RingTag&, const RingTag&) = default;

private:
    explicit RingTag(std::uint32_t p) : p_(p) {}
    std::uint32_t p_;
};

/// Element of the descent algebra of degree n over the tagged ring, stored
/// as a sparse list of (canonical basis index, coefficient) terms.  Terms are
/// sorted by index, never zero, and reduced into [0, p) over a prime field.
class AlgebraElement {
public:
    struct Term {
        std::uint32_t index;
        std::int64_t coeff;
        friend bool operator==(const Term&, const Term&) = default;
    };

    AlgebraElement(int n, RingTag ring); // zero element

    static AlgebraElement from_terms(int n, RingTag ring,
                                     const std::vector<std::pair<Composition, std::int64_t>>& terms);

    int n() const { return n_; }
    RingTag ring() const { return ring_; }
    int dimension() const { return 1 << (n_ - 1); }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    std::int64_t coefficient(const Composition& q) const;
    std::int64_t coefficient(std::uint32_t index) const;

    /// Dense coordinate vector of length 2^{n-1} in canonical basis order.
    std::vector<std::int64_t> coords() const;
    static AlgebraElement from_coords(int n, RingTag ring,
                                      const std::vector<std::int64_t>& coords);

    AlgebraElement operator+(const AlgebraElement& other) const;
    AlgebraElement operator-(const AlgebraElement& other) const;
    AlgebraElement scaled(std::int64_t factor) const;

    std::string str() const; // "B[2,1,1] + 2*B[1,1,1,1]", "0" when empty

    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

private:
    int n_;
    RingTag ring_;
    std::vector<Term> terms_;
};

AlgebraElement basis_element(int n, RingTag ring, const Composition& q);
/// The unit B_[n].
AlgebraElement identity(int n, RingTag ring);

/// Row-major integer matrix used for contingency enumeration.
struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<int> e;

    IntMatrix(int r, int c) : rows(r), cols(c), e(static_cast<std::size_t>(r) * c, 0) {}
    int at(int r, int c) const { return e[static_cast<std::size_t>(r) * cols + c]; }
    int& at(int r, int c) { return e[static_cast<std::size_t>(r) * cols + c]; }
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

/// All non-negative integer matrices with row sums q and column sums r, in
/// ascending lexicographic row-major order.
std::vector<IntMatrix> contingency_matrices(const Composition& q, const Composition& r);

/// Entries read row-major with zeros dropped, as a composition.
Composition read_word(const IntMatrix& z);

/// Product in the descent algebra: bilinear extension of
/// B_q B_r = sum over contingency matrices Z of B_{read_word(Z)}.
AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);
inline AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
    return multiply(x, y);
}

/// Coefficient-wise reduction of an integer element modulo p.
AlgebraElement reduce_mod_p(const AlgebraElement& x, std::uint32_t p);

/// All pairwise products of basis elements, in canonical basis order.
class StructureTable {
public:
    static StructureTable build(int n, RingTag ring, bool force = false);
    /// Assemble from precomputed cells (used by the cache loader).
    static StructureTable from_products(int n, RingTag ring, std::vector<AlgebraElement> products);

    int n() const { return n_; }
    RingTag ring() const { return ring_; }
    int dimension() const { return dim_; }

    const AlgebraElement& product(std::uint32_t qi, std::uint32_t ri) const {
        return products_[static_cast<std::size_t>(qi) * dim_ + ri];
    }
    const std::vector<AlgebraElement>& products() const { return products_; }

    /// Product of two coordinate vectors through the table.
    std::vector<std::int64_t> multiply_coords(std::span<const std::int64_t> x,
                                              std::span<const std::int64_t> y) const;

    friend bool operator==(const StructureTable&, const StructureTable&) = default;

private:
    StructureTable(int n, RingTag ring) : n_(n), ring_(ring), dim_(1 << (n - 1)) {}
    int n_;
    RingTag ring_;
    int dim_;
    std::vector<AlgebraElement> products_; // row-major, dim_ x dim_
};

enum class Side { left, right };

/// Dense matrix with exact integer entries (residues when the ring is F_p).
struct DenseMatrix {
    int rows = 0, cols = 0;
    std::vector<std::int64_t> e;

    DenseMatrix(int r, int c) : rows(r), cols(c), e(static_cast<std::size_t>(r) * c, 0) {}
    std::int64_t at(int r, int c) const { return e[static_cast<std::size_t>(r) * cols + c]; }
    std::int64_t& at(int r, int c) { return e[static_cast<std::size_t>(r) * cols + c]; }
    FpMatrix to_fp(std::uint32_t p) const;
    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;
};

/// Matrix of v -> v x (right) or v -> x v (left) in canonical coordinates;
/// column q holds the coordinates of the image of B_q.
DenseMatrix regular_rep_matrix(const StructureTable& table, const AlgebraElement& x, Side side);

/// Nilpotency test over a prime field via rank stabilization of powers of
/// the right regular representation.
bool is_nilpotent(const StructureTable& table, const AlgebraElement& x);

} // namespace descent
