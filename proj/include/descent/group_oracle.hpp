#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "descent/algebra.hpp"
#include "descent/combinatorics.hpp"

namespace descent {

// Full symmetric-group expansions stay below this degree ((n!)^2 pair work).
inline constexpr int kMaxOracleDegree = 7;

/// Permutation of {1..n} in image form: image(i) is where i goes.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    int n() const { return static_cast<int>(images_.size()); }
    int image(int i) const { return images_[i - 1]; } // i in 1..n
    const std::vector<int>& images() const { return images_; }

    /// Left-to-right composition: (i)^(s.then(t)) = ((i)^s)^t.
    Permutation then(const Permutation& t) const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// Signs of consecutive image differences, e.g. "++-" for [1342];
/// '-' at position i means image(i) > image(i+1).  Requires n >= 2.
std::string signature(const Permutation& sigma);

/// The '-' positions of the signature as a bitmask (bit i-1 for position i).
/// Equals the canonical index of the associated composition of n.
std::uint32_t descent_mask(const Permutation& sigma);

std::string signature_string(std::uint32_t mask, int n);

/// One signature class: all permutations sharing a signature.
struct SignatureClass {
    std::uint32_t mask = 0;
    std::vector<Permutation> members;
};

/// All 2^{n-1} signature classes of the symmetric group of degree n,
/// indexed by mask.  Resource-bounded at kMaxOracleDegree.
std::vector<SignatureClass> class_sums(int n, bool force = false);

/// Expand the group-algebra product of two signature class sums and regroup
/// by signature.  Verifies that every member of a class receives the same
/// coefficient and throws CertificationError otherwise.
std::map<std::uint32_t, std::int64_t> class_product(const std::vector<SignatureClass>& classes,
                                                    std::uint32_t eps, std::uint32_t eta);

/// Structure constants of B_q B_r recovered from the group algebra alone.
/// B_q corresponds to the union of the classes whose descent set is
/// contained in the partial-sum set of q; the regrouped product is converted
/// back to the B-basis by inclusion-exclusion over descent sets.
std::map<std::uint32_t, std::int64_t> oracle_product(const std::vector<SignatureClass>& classes,
                                                     const Composition& q, const Composition& r);

struct OraclePairResult {
    std::uint32_t qi = 0, ri = 0;
    bool match = false;
};

struct OracleMismatch {
    std::uint32_t qi = 0, ri = 0;
    std::map<std::uint32_t, std::int64_t> from_rule;   // contingency-matrix product
    std::map<std::uint32_t, std::int64_t> from_oracle; // group-algebra product
};

struct OracleReport {
    int n = 0;
    std::string orientation;
    std::vector<OraclePairResult> pairs;
    std::vector<OracleMismatch> mismatches;
    std::size_t pairs_checked() const { return pairs.size(); }
    bool all_match() const { return mismatches.empty(); }
};

/// Compare every basis pair of the integer structure table against the
/// group-algebra oracle.
OracleReport oracle_compare_all(const StructureTable& table,
                                const std::vector<SignatureClass>& classes);

/// Compare a fixed-seed random sample of basis pairs.
OracleReport oracle_compare_sample(const StructureTable& table,
                                   const std::vector<SignatureClass>& classes, int count,
                                   std::uint64_t seed);

} // namespace descent
