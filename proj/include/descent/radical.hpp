#pragma once

#include <cstdint>
#include <vector>

#include "descent/algebra.hpp"
#include "descent/linalg.hpp"

namespace descent {

inline constexpr int kMaxRadicalSpanDegree = 10;
inline constexpr int kMaxCertifyDegree = 8;

/// Spanning set of the radical of the p-modular descent algebra: for every
/// composition q other than its decreasing reordering rep(q), the difference
/// B_q - B_rep(q); then, for every decreasing composition with a part of
/// multiplicity p or more, that basis element itself.  Deterministic order:
/// differences by canonical index of q, then the extra generators by
/// canonical partition order.
std::vector<AlgebraElement> radical_spanning_set(int n, std::uint32_t p, bool force = false);

/// Row-reduced span of the spanning set.
Subspace radical_span(int n, std::uint32_t p, bool force = false);

/// Rank of the spanning set over F_p (equals 2^{n-1} - g(n,p)).
int radical_dimension(int n, std::uint32_t p, bool force = false);

/// Everything certify_radical establishes about the candidate radical.
/// A returned certificate always has all flags true; a failing clause raises
/// CertificationError instead.
struct RadicalCertificate {
    int n = 0;
    std::uint32_t p = 2;
    int dimension = 0;
    int nilpotency_index = 1; // smallest m with R^m = 0; 1 for the zero ideal
    bool is_ideal = false;
    bool is_nilpotent = false;
    bool quotient_commutative = false;
    bool quotient_reduced = false;
    bool matches_kernel = false; // span inside ker(character map), equal dimensions
    std::vector<AlgebraElement> spanning_set;

    bool all_flags() const {
        return is_ideal && is_nilpotent && quotient_commutative && quotient_reduced &&
               matches_kernel;
    }
};

/// Certify that the spanning set generates the Jacobson radical: it spans a
/// two-sided nilpotent ideal whose quotient is commutative and reduced, and
/// it coincides with the kernel of the mod-p character map.
RadicalCertificate certify_radical(const StructureTable& table, bool force = false);
RadicalCertificate certify_radical(int n, std::uint32_t p, bool force = false);

/// Smallest m with R^m = 0, via iterated ideal powers.
int nilpotency_index(const StructureTable& table, bool force = false);
int nilpotency_index(int n, std::uint32_t p, bool force = false);

/// The integer element B_[1,n-1] - B_[n-1,1] witnessing the lower bound for
/// the nilpotency index.  Requires n >= 3.
AlgebraElement nilpotency_witness(int n);

/// Check w^r against its binomial expansion: w^r equals the alternating sum
/// over k of binom(r,k) B_{[1^{r-k}, n-r, 1^k]}.  Requires 3 <= n <= 9 and
/// 1 <= r <= n-2.
bool witness_power_identity(int n, int r);

/// Descending chain Y_1 >= Y_2 >= ... >= Y_{n+1} = 0, where Y_m is spanned
/// by the basis elements with at least m parts.
struct Filtration {
    int n = 0;
    std::uint32_t p = 2;
    std::vector<Subspace> levels; // levels[m-1] = Y_m for m = 1..n+1

    const Subspace& level(int m) const { return levels.at(m - 1); }
};

Filtration filtration(int n, std::uint32_t p);

/// Y_m R <= Y_{m+1} for every m: multiplying a basis element of Y_m by any
/// spanning element of the radical lands strictly deeper in the chain.
bool filtration_check(const StructureTable& table);

/// The layer containments behind the nilpotency bound: R <= (Y_2 cap T) + Y_3
/// when n is odd or p != 2, and R^2 <= (Y_3 cap T) + Y_4 when n is even and
/// p = 2, where T is the span of the reordering differences.
bool containment_check(const StructureTable& table);

/// Structure constants of a finite-dimensional commutative algebra over F_p.
struct CommutativeAlgebra {
    std::uint32_t p = 2;
    int dim = 0;
    // product[i][j] = coordinates of b_i b_j, each of length dim
    std::vector<std::vector<std::vector<std::uint32_t>>> product;
};

/// Quotient of the table's algebra by the subspace `modulo` (assumed an
/// ideal); basis classes are the non-pivot coordinates.
CommutativeAlgebra quotient_algebra(const StructureTable& table, const Subspace& modulo);

/// The nilpotent elements of a commutative algebra over F_p: the kernel of
/// the iterated Frobenius map x -> x^{p^m} with p^m > dim.  Rejects
/// non-commutative input.
Subspace nilradical(const CommutativeAlgebra& a);

} // namespace descent
