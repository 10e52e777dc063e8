#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "descent/errors.hpp"

namespace descent {

// Largest admissible prime modulus; residues and their products then fit
// comfortably in 64-bit accumulators.
inline constexpr std::uint32_t kMaxModulus = 65536;

/// Exact int64 arithmetic that refuses to wrap.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Residue of a signed value in [0, p).
std::uint32_t mod_reduce(std::int64_t value, std::uint32_t p);

/// Dense matrix over the prime field F_p, residues stored in [0, p).
class FpMatrix {
public:
    FpMatrix(int rows, int cols, std::uint32_t p);
    static FpMatrix identity(int n, std::uint32_t p);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::uint32_t modulus() const { return p_; }

    std::uint32_t at(int r, int c) const { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
    std::uint32_t& at(int r, int c) { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
    /// Assign from a possibly-negative integer, reducing mod p.
    void set(int r, int c, std::int64_t value) { at(r, c) = mod_reduce(value, p_); }

    std::span<const std::uint32_t> row(int r) const {
        return {e_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
    }

    FpMatrix multiply(const FpMatrix& other) const;

    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

private:
    int rows_ = 0, cols_ = 0;
    std::uint32_t p_ = 2;
    std::vector<std::uint32_t> e_;
};

int rank(const FpMatrix& m);

/// Subspace of F_p^d held as a reduced row-echelon basis.  The echelon form
/// is maintained on every insert, so equality of subspaces is equality of
/// the basis rows.
class Subspace {
public:
    Subspace(int ambient, std::uint32_t p);

    int ambient() const { return ambient_; }
    std::uint32_t modulus() const { return p_; }
    int dimension() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<std::uint32_t>>& basis() const { return rows_; }

    /// Reduce v against the basis and adjoin the remainder when nonzero.
    /// Returns true when the dimension grew.
    bool insert(std::span<const std::uint32_t> v);

    /// Remainder of v after reduction against the basis.
    std::vector<std::uint32_t> reduce(std::span<const std::uint32_t> v) const;

    bool contains(std::span<const std::uint32_t> v) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    int ambient_ = 0;
    std::uint32_t p_ = 2;
    std::vector<std::vector<std::uint32_t>> rows_; // RREF, sorted by pivot column
    std::vector<int> pivots_;
};

/// Row-reduced span of the given vectors (all of dimension `ambient`).
Subspace span_of(const std::vector<std::vector<std::uint32_t>>& vectors, int ambient,
                 std::uint32_t p);

/// Right null space of m: all v with m v = 0.
Subspace kernel(const FpMatrix& m);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

} // namespace descent
