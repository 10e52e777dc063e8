#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "descent/json_io.hpp"

namespace descent::verify {

struct CheckResult {
    std::string name;
    std::string scope; // parameter summary, e.g. "n <= 6, p in {2,3}"
    bool pass = false;
    std::string detail; // failure explanation, or an informational notice
};

bool all_passed(const std::vector<CheckResult>& results);

// -- combinatorics ----------------------------------------------------------
CheckResult composition_enumeration(int max_n);
CheckResult equivalence_classes(int max_n);
CheckResult refinement_order(int max_n, int oracle_max_n);
CheckResult glaisher_identity(int max_n, const std::vector<std::uint32_t>& primes);
CheckResult regular_part_properties(int max_n, const std::vector<std::uint32_t>& primes);

// -- exact linear algebra ---------------------------------------------------
CheckResult rank_nullity(const std::vector<std::uint32_t>& primes, int max_dim, int samples,
                         std::uint64_t seed);
CheckResult span_properties(std::uint64_t seed);

// -- descent algebra --------------------------------------------------------
CheckResult associativity(TableCache& tables, int max_n, const std::vector<std::uint32_t>& primes);
CheckResult unit_laws(TableCache& tables, int max_n);
CheckResult product_support(TableCache& tables, int max_n);
CheckResult product_coefficient_multiple(TableCache& tables, int max_n);
CheckResult product_coefficient_exact(TableCache& tables, int max_n);
CheckResult reduction_homomorphism(TableCache& tables, int max_n,
                                   const std::vector<std::uint32_t>& primes);
CheckResult oracle_equivalence(TableCache& tables, int full_max_n, int sample_n, int samples,
                               std::uint64_t seed);

// -- characters -------------------------------------------------------------
CheckResult character_homomorphism(TableCache& tables, int max_n);
CheckResult character_kernel(int max_n);
CheckResult modular_character_properties(TableCache& tables, int max_n,
                                         const std::vector<std::uint32_t>& primes, int samples,
                                         std::uint64_t seed);
CheckResult character_rank(int max_n, const std::vector<std::uint32_t>& primes);
CheckResult triangular_diagonal(int max_n, const std::vector<std::uint32_t>& primes);
CheckResult column_congruence(int max_n, const std::vector<std::uint32_t>& primes);
CheckResult irreducibles(TableCache& tables, int distinct_max_n, int multiplicative_max_n,
                         const std::vector<std::uint32_t>& primes);

// -- radical ----------------------------------------------------------------
CheckResult radical_dimension_formula(int max_n, const std::vector<std::uint32_t>& primes);
CheckResult radical_certification(TableCache& tables, int max_n,
                                  const std::vector<std::uint32_t>& primes);
CheckResult nilpotent_basis_criterion(TableCache& tables, int max_n,
                                      const std::vector<std::uint32_t>& primes);
CheckResult filtration_layers(TableCache& tables, int max_n,
                              const std::vector<std::uint32_t>& primes);
CheckResult layer_containments(TableCache& tables, int max_n,
                               const std::vector<std::uint32_t>& primes);
CheckResult nilpotency_index_theorem(TableCache& tables, int max_n,
                                     const std::vector<std::uint32_t>& primes);
CheckResult witness_expansion(int max_n);
CheckResult spanning_set_kernel(int max_n, const std::vector<std::uint32_t>& primes);
CheckResult spanning_set_nilpotency(TableCache& tables, int max_n,
                                    const std::vector<std::uint32_t>& primes);
CheckResult small_degree_remark(const std::vector<std::uint32_t>& primes);

struct VerifyOptions {
    int max_n = 5;
    std::vector<std::uint32_t> primes = {2, 3};
    bool with_oracle = false;
};

/// Every suite above, capped by max_n and by each suite's own default bound.
std::vector<CheckResult> run_verification(const VerifyOptions& options, TableCache& tables);

} // namespace descent::verify
