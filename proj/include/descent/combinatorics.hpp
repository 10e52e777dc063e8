#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "descent/errors.hpp"

namespace descent {

// Compositions are enumerable up to this bound (2^{n-1} growth).
inline constexpr int kMaxCompositionDegree = 16;
// Partitions are enumerable up to this bound.
inline constexpr int kMaxPartitionDegree = 30;

bool is_prime(int p);

/// Ordered sequence of positive integers with sum n.  A composition of n is
/// identified with the set of its interior partial sums, a subset of
/// {1,...,n-1}; reading that subset as a binary integer (bit i-1 for the
/// value i) gives the canonical index used throughout for basis order.
class Composition {
public:
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    int part_count() const { return static_cast<int>(parts_.size()); }

    /// Canonical index in [0, 2^{n-1}).  Requires n <= kMaxCompositionDegree.
    std::uint32_t index() const;
    static Composition from_index(int n, std::uint32_t index);

    /// Interior partial sums as a bitmask (bit v-1 set when v is a partial sum).
    std::uint32_t partial_sum_mask() const;

    std::string str() const; // "[2,1,1]"

    friend bool operator==(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// Weakly decreasing sequence of positive integers with sum n.
class Partition {
public:
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    int part_count() const { return static_cast<int>(parts_.size()); }

    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    /// Lexicographic on the part sequences; gives maps a total order.
    friend bool operator<(const Partition& a, const Partition& b) {
        return a.parts_ < b.parts_;
    }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// Part-value -> number of occurrences, for one composition or partition.
class MultiplicityVector {
public:
    MultiplicityVector(int n, std::vector<int> counts);

    int n() const { return n_; }
    /// Multiplicity of the part value i (0 when i is out of range).
    int count(int i) const;
    int max_multiplicity() const;
    /// Product of the factorials of the multiplicities, as exact int64.
    std::int64_t factorial_product() const;
    /// Same product reduced modulo p.
    std::uint32_t factorial_product_mod(std::uint32_t p) const;

    friend bool operator==(const MultiplicityVector&, const MultiplicityVector&) = default;

private:
    int n_ = 0;
    std::vector<int> counts_; // counts_[i] = multiplicity of i, index 0 unused
};

/// All 2^{n-1} compositions of n in canonical index order.
std::vector<Composition> compositions(int n);

/// All partitions of n, largest first (descending lexicographic order).
std::vector<Partition> partitions(int n);

/// Same multiset of parts.
bool equivalent(const Composition& q, const Composition& r);

/// True when q arises from r by repeatedly merging adjacent parts,
/// equivalently partial_sums(q) is a subset of partial_sums(r).
bool refines(const Composition& r, const Composition& q);

MultiplicityVector multiplicities(const Composition& q);
MultiplicityVector multiplicities(const Partition& pi);

/// Underlying partition of a composition (parts sorted decreasing).
Partition partition_of(const Composition& q);

/// Canonical representative of the reordering class of q: decreasing order.
Composition class_representative(const Composition& q);

/// Replace each part l = p^a * m (p not dividing m) by p^a copies of m.
/// The result is the cycle type of the p-regular component of a permutation
/// of cycle type pi.
Partition p_regular_part(const Partition& pi, int p);

/// Number of partitions of n with no part divisible by p: the number of
/// p-regular conjugacy classes of the symmetric group of degree n.
int regular_class_count(int n, int p);

/// Number of partitions of n with some part of multiplicity >= p.
int high_multiplicity_count(int n, int p);

} // namespace descent
