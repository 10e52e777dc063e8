#include "descent/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "descent/characters.hpp"
#include "descent/combinatorics.hpp"
#include "descent/group_oracle.hpp"
#include "descent/radical.hpp"

namespace descent::verify {

namespace {

std::string primes_str(const std::vector<std::uint32_t>& primes) {
    std::string s = "{";
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(primes[i]);
    }
    return s + "}";
}

std::string scope_np(int max_n, const std::vector<std::uint32_t>& primes) {
    return "n <= " + std::to_string(max_n) + ", p in " + primes_str(primes);
}

CheckResult pass(std::string name, std::string scope, std::string detail = "") {
    return {std::move(name), std::move(scope), true, std::move(detail)};
}

CheckResult fail(std::string name, std::string scope, std::string detail) {
    return {std::move(name), std::move(scope), false, std::move(detail)};
}

// run body() and convert any exception into a failure
template <typename Body>
CheckResult guarded(const std::string& name, const std::string& scope, Body body) {
    try {
        std::string detail;
        if (body(detail)) return pass(name, scope, detail);
        return fail(name, scope, detail.empty() ? "property violated" : detail);
    } catch (const std::exception& e) {
        return fail(name, scope, std::string("exception: ") + e.what());
    }
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t b = 1;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

// brute-force form of the refinement order: consume r left to right, block
// by block, to rebuild q
bool refines_by_block_sums(const std::vector<int>& r, const std::vector<int>& q) {
    std::size_t i = 0;
    for (int target : q) {
        int acc = 0;
        while (acc < target && i < r.size()) acc += r[i++];
        if (acc != target) return false;
    }
    return i == r.size();
}

std::vector<RingTag> rings_for(const std::vector<std::uint32_t>& primes) {
    std::vector<RingTag> rings = {RingTag::integers()};
    for (std::uint32_t p : primes) rings.push_back(RingTag::prime_field(p));
    return rings;
}

} // namespace

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

CheckResult composition_enumeration(int max_n) {
    const std::string name = "composition-enumeration";
    const std::string scope = "n <= " + std::to_string(max_n);
    return guarded(name, scope, [&](std::string& detail) {
        for (int n = 1; n <= max_n; ++n) {
            std::vector<Composition> all = compositions(n);
            if (static_cast<std::int64_t>(all.size()) != (std::int64_t{1} << (n - 1))) {
                detail = "wrong count at n=" + std::to_string(n);
                return false;
            }
            std::set<std::vector<int>> seen;
            for (std::uint32_t i = 0; i < all.size(); ++i) {
                if (all[i].n() != n || all[i].index() != i) {
                    detail = "bad canonical index at n=" + std::to_string(n);
                    return false;
                }
                seen.insert(all[i].parts());
            }
            if (seen.size() != all.size()) {
                detail = "duplicate compositions at n=" + std::to_string(n);
                return false;
            }
        }
        return true;
    });
}

CheckResult equivalence_classes(int max_n) {
    const std::string name = "equivalence-classes";
    const std::string scope = "n <= " + std::to_string(max_n);
    return guarded(name, scope, [&](std::string& detail) {
        for (int n = 1; n <= max_n; ++n) {
            std::set<std::vector<int>> classes;
            for (const Composition& q : compositions(n))
                classes.insert(partition_of(q).parts());
            if (classes.size() != partitions(n).size()) {
                detail = "class count differs from partition count at n=" + std::to_string(n);
                return false;
            }
        }
        return true;
    });
}

CheckResult refinement_order(int max_n, int oracle_max_n) {
    const std::string name = "refinement-order";
    const std::string scope = "order axioms n <= " + std::to_string(max_n) +
                              ", block-sum oracle n <= " + std::to_string(oracle_max_n);
    return guarded(name, scope, [&](std::string& detail) {
        for (int n = 1; n <= max_n; ++n) {
            std::vector<Composition> all = compositions(n);
            for (const Composition& a : all) {
                if (!refines(a, a)) {
                    detail = "not reflexive";
                    return false;
                }
                for (const Composition& b : all)
                    if (refines(a, b) && refines(b, a) && !(a == b)) {
                        detail = "not antisymmetric";
                        return false;
                    }
            }
            for (const Composition& a : all)
                for (const Composition& b : all) {
                    if (!refines(a, b)) continue;
                    for (const Composition& c : all)
                        if (refines(b, c) && !refines(a, c)) {
                            detail = "not transitive";
                            return false;
                        }
                }
        }
        for (int n = 1; n <= oracle_max_n; ++n) {
            std::vector<Composition> all = compositions(n);
            for (const Composition& r : all)
                for (const Composition& q : all)
                    if (refines(r, q) != refines_by_block_sums(r.parts(), q.parts())) {
                        detail = "disagrees with block-sum oracle for r=" + r.str() +
                                 " q=" + q.str();
                        return false;
                    }
        }
        return true;
    });
}

CheckResult glaisher_identity(int max_n, const std::vector<std::uint32_t>& primes) {
    const std::string name = "glaisher-identity";
    return guarded(name, scope_np(max_n, primes), [&](std::string& detail) {
        for (int n = 1; n <= max_n; ++n) {
            int pn = static_cast<int>(partitions(n).size());
            for (std::uint32_t p : primes)
                if (high_multiplicity_count(n, static_cast<int>(p)) !=
                    pn - regular_class_count(n, static_cast<int>(p))) {
                    detail = "count mismatch at n=" + std::to_string(n) +
                             ", p=" + std::to_string(p);
                    return false;
                }
        }
        return true;
    });
}

CheckResult regular_part_properties(int max_n, const std::vector<std::uint32_t>& primes) {
    const std::string name = "regular-part-properties";
    return guarded(name, scope_np(max_n, primes), [&](std::string& detail) {
        for (int n = 1; n <= max_n; ++n)
            for (const Partition& pi : partitions(n))
                for (std::uint32_t p : primes) {
                    Partition reg = p_regular_part(pi, static_cast<int>(p));
                    for (int l : reg.parts())
                        if (l % static_cast<int>(p) == 0) {
                            detail = "regular part of " + pi.str() +
                                     " has a part divisible by " + std::to_string(p);
                            return false;
                        }
                    if (!(p_regular_part(reg, static_cast<int>(p)) == reg)) {
                        detail = "not idempotent on " + pi.str();
                        return false;
                    }
                }
        return true;
    });
}

CheckResult rank_nullity(const std::vector<std::uint32_t>& primes, int max_dim, int samples,
                         std::uint64_t seed) {
    const std::string name = "rank-nullity";
    const std::string scope =
        "random matrices, dim <= " + std::to_string(max_dim) + ", p in " + primes_str(primes);
    return guarded(name, scope, [&](std::string& detail) {
        std::mt19937_64 rng(seed);
        for (std::uint32_t p : primes)
            for (int s = 0; s < samples; ++s) {
                int rows = 1 + static_cast<int>(rng() % max_dim);
                int cols = 1 + static_cast<int>(rng() % max_dim);
                FpMatrix m(rows, cols, p);
                for (int i = 0; i < rows; ++i)
                    for (int j = 0; j < cols; ++j)
                        m.at(i, j) = static_cast<std::uint32_t>(rng() % p);
                Subspace ker = kernel(m);
                if (rank(m) + ker.dimension() != cols) {
                    detail = "rank + nullity != cols";
                    return false;
                }
                for (const auto& v : ker.basis())
                    for (int i = 0; i < rows; ++i) {
                        std::uint64_t acc = 0;
                        for (int j = 0; j < cols; ++j)
                            acc = (acc + static_cast<std::uint64_t>(m.at(i, j)) * v[j]) % p;
                        if (acc) {
                            detail = "kernel vector not annihilated";
                            return false;
                        }
                    }
            }
        return true;
    });
}

CheckResult span_properties(std::uint64_t seed) {
    const std::string name = "span-properties";
    return guarded(name, "random spans, p in {2,3,5,7}", [&](std::string& detail) {
        std::mt19937_64 rng(seed);
        for (std::uint32_t p : {2u, 3u, 5u, 7u})
            for (int s = 0; s < 25; ++s) {
                int dim = 2 + static_cast<int>(rng() % 12);
                int count = 1 + static_cast<int>(rng() % 8);
                std::vector<std::vector<std::uint32_t>> vecs(count,
                                                             std::vector<std::uint32_t>(dim));
                for (auto& v : vecs)
                    for (auto& x : v) x = static_cast<std::uint32_t>(rng() % p);
                Subspace a = span_of(vecs, dim, p);
                std::vector<std::vector<std::uint32_t>> shuffled = vecs;
                for (std::size_t i = shuffled.size(); i > 1; --i)
                    std::swap(shuffled[i - 1], shuffled[rng() % i]);
                if (!(span_of(shuffled, dim, p) == a)) {
                    detail = "echelon basis depends on input order";
                    return false;
                }
                for (const auto& v : vecs)
                    if (!a.contains(v)) {
                        detail = "generator escapes its own span";
                        return false;
                    }
            }
        return true;
    });
}

CheckResult associativity(TableCache& tables, int max_n,
                          const std::vector<std::uint32_t>& primes) {
    const std::string name = "associativity";
    const std::string scope = "all basis triples, " + scope_np(max_n, primes) + " and Z";
    return guarded(name, scope, [&](std::string& detail) {
        for (int n = 1; n <= max_n; ++n)
            for (const RingTag& ring : rings_for(primes)) {
                const StructureTable& t = tables.get(n, ring);
                const int d = t.dimension();
                for (int qi = 0; qi < d; ++qi)
                    for (int ri = 0; ri < d; ++ri) {
                        std::vector<std::int64_t> qr = t.product(qi, ri).coords();
                        for (int si = 0; si < d; ++si) {
                            std::vector<std::int64_t> es(d, 0), eq(d, 0);
                            es[si] = 1;
                            eq[qi] = 1;
                            std::vector<std::int64_t> lhs = t.multiply_coords(qr, es);
                            std::vector<std::int64_t> rhs =
                                t.multiply_coords(eq, t.product(ri, si).coords());
                            if (lhs != rhs) {
                                detail = "triple (" + std::to_string(qi) + "," +
                                         std::to_string(ri) + "," + std::to_string(si) +
                                         ") at n=" + std::to_string(n) + " over " + ring.str();
                                return false;
                            }
                        }
                    }
            }
        return true;
    });
}

CheckResult unit_laws(TableCache& tables, int max_n) {
    const std::string name = "unit-laws";
    const std::string scope = "n <= " + std::to_string(max_n) + ", Z";
    return guarded(name, scope, [&](std::string& detail) {
        for (int n = 1; n <= max_n; ++n) {
            const StructureTable& t = tables.get(n, RingTag::integers());
            for (int ri = 0; ri < t.dimension(); ++ri) {
                AlgebraElement b =
                    basis_element(n, RingTag::integers(), Composition::from_index(n, ri));
                if (!(t.product(0, ri) == b) || !(t.product(ri, 0) == b)) {
                    detail = "unit law fails for index " + std::to_string(ri) +
                             " at n=" + std::to_string(n);
                    return false;
                }
            }
        }
        return true;
    });
}

CheckResult product_support(TableCache& tables, int max_n) {
    const std::string name = "product-support";
    const std::string scope = "all basis pairs, n <= " + std::to_string(max_n) + ", Z";
    return guarded(name, scope, [&](std::string& detail) {
        for (int n = 1; n <= max_n; ++n) {
            const StructureTable& t = tables.get(n, RingTag::integers());
            const std::uint32_t d = static_cast<std::uint32_t>(t.dimension());
            for (std::uint32_t qi = 0; qi < d; ++qi)
                for (std::uint32_t ri = 0; ri < d; ++ri)
                    for (const auto& term : t.product(qi, ri).terms())
                        if ((qi & ~term.index) != 0) { // S(q) must lie inside S(s)
                            detail = "support term escapes the refinement cone at n=" +
                                     std::to_string(n);
                            return false;
                        }
        }
        return true;
    });
}

CheckResult product_coefficient_multiple(TableCache& tables, int max_n) {
    const std::string name = "product-coefficient-multiple";
    const std::string scope = "all basis pairs, n <= " + std::to_string(max_n) + ", Z";
    return guarded(name, scope, [&](std::string& detail) {
        for (int n = 1; n <= max_n; ++n) {
            const StructureTable& t = tables.get(n, RingTag::integers());
            const std::uint32_t d = static_cast<std::uint32_t>(t.dimension());
            std::vector<Composition> basis = compositions(n);
            std::map<std::vector<int>, std::vector<std::uint32_t>> classes;
            for (std::uint32_t ri = 0; ri < d; ++ri)
                classes[partition_of(basis[ri]).parts()].push_back(ri);
            for (std::uint32_t qi = 0; qi < d; ++qi)
                for (const auto& [parts, members] : classes) {
                    std::int64_t expected = t.product(qi, members.front()).coefficient(qi);
                    std::int64_t factor =
                        multiplicities(Partition(parts)).factorial_product();
                    if (expected % factor != 0) {
                        detail = "coefficient not a multiple of the factorial product";
                        return false;
                    }
                    for (std::uint32_t ri : members)
                        if (t.product(qi, ri).coefficient(qi) != expected) {
                            detail = "coefficient changes within one reordering class";
                            return false;
                        }
                }
        }
        return true;
    });
}

CheckResult product_coefficient_exact(TableCache& tables, int max_n) {
    const std::string name = "product-coefficient-exact";
    const std::string scope = "equivalent pairs, n <= " + std::to_string(max_n) + ", Z";
    return guarded(name, scope, [&](std::string& detail) {
        for (int n = 1; n <= max_n; ++n) {
            const StructureTable& t = tables.get(n, RingTag::integers());
            const std::uint32_t d = static_cast<std::uint32_t>(t.dimension());
            std::vector<Composition> basis = compositions(n);
            for (std::uint32_t qi = 0; qi < d; ++qi)
                for (std::uint32_t ri = 0; ri < d; ++ri) {
                    if (!equivalent(basis[qi], basis[ri])) continue;
                    std::int64_t want = multiplicities(basis[ri]).factorial_product();
                    if (t.product(qi, ri).coefficient(qi) != want) {
                        detail = "exact coefficient fails for q=" + basis[qi].str() +
                                 ", r=" + basis[ri].str();
                        return false;
                    }
                }
        }
        return true;
    });
}

CheckResult reduction_homomorphism(TableCache& tables, int max_n,
                                   const std::vector<std::uint32_t>& primes) {
    const std::string name = "reduction-homomorphism";
    return guarded(name, scope_np(max_n, primes), [&](std::string& detail) {
        for (int n = 1; n <= max_n; ++n) {
            const StructureTable& zt = tables.get(n, RingTag::integers());
            for (std::uint32_t p : primes) {
                const StructureTable& ft = tables.get(n, RingTag::prime_field(p));
                for (int qi = 0; qi < zt.dimension(); ++qi)
                    for (int ri = 0; ri < zt.dimension(); ++ri)
                        if (!(reduce_mod_p(zt.product(qi, ri), p) == ft.product(qi, ri))) {
                            detail = "tables disagree after reduction at n=" +
                                     std::to_string(n) + ", p=" + std::to_string(p);
                            return false;
                        }
            }
        }
        return true;
    });
}

CheckResult oracle_equivalence(TableCache& tables, int full_max_n, int sample_n, int samples,
                               std::uint64_t seed) {
    const std::string name = "oracle-equivalence";
    std::string scope = "all pairs n <= " + std::to_string(full_max_n);
    if (sample_n > full_max_n)
        scope += ", " + std::to_string(samples) + " sampled pairs at n = " +
                 std::to_string(sample_n);
    return guarded(name, scope, [&](std::string& detail) {
        for (int n = 1; n <= full_max_n; ++n) {
            OracleReport report =
                oracle_compare_all(tables.get(n, RingTag::integers()), class_sums(n));
            if (!report.all_match()) {
                detail = "mismatch at n=" + std::to_string(n) + " (" +
                         std::to_string(report.mismatches.size()) + " pairs)";
                return false;
            }
        }
        if (sample_n > full_max_n) {
            OracleReport report = oracle_compare_sample(
                tables.get(sample_n, RingTag::integers()), class_sums(sample_n), samples, seed);
            if (!report.all_match()) {
                detail = "sampled mismatch at n=" + std::to_string(sample_n);
                return false;
            }
        }
        return true;
    });
}

CheckResult character_homomorphism(TableCache& tables, int max_n) {
    const std::string name = "character-homomorphism";
    const std::string scope = "all basis pairs, n <= " + std::to_string(max_n);
    return guarded(name, scope, [&](std::string& detail) {
        for (int n = 1; n <= max_n; ++n) {
            const StructureTable& t = tables.get(n, RingTag::integers());
            CharacterMatrix m(n);
            const int cols = m.col_count();
            for (int qi = 0; qi < t.dimension(); ++qi)
                for (int ri = 0; ri < t.dimension(); ++ri)
                    for (int j = 0; j < cols; ++j) {
                        std::int64_t lhs = 0;
                        for (const auto& term : t.product(qi, ri).terms())
                            lhs = checked_add(lhs, checked_mul(term.coeff, m.at(term.index, j)));
                        if (lhs != checked_mul(m.at(qi, j), m.at(ri, j))) {
                            detail = "products of characters disagree at n=" + std::to_string(n);
                            return false;
                        }
                    }
        }
        return true;
    });
}

CheckResult character_kernel(int max_n) {
    const std::string name = "character-kernel";
    const std::string scope = "equivalent compositions, n <= " + std::to_string(max_n);
    return guarded(name, scope, [&](std::string& detail) {
        for (int n = 1; n <= max_n; ++n) {
            std::vector<Partition> parts = partitions(n);
            for (const Composition& q : compositions(n)) {
                Composition rep = class_representative(q);
                if (rep == q) continue;
                for (const Partition& pi : parts)
                    if (young_character_value(q, pi) != young_character_value(rep, pi)) {
                        detail = "characters of " + q.str() + " and " + rep.str() + " differ";
                        return false;
                    }
            }
        }
        return true;
    });
}

CheckResult modular_character_properties(TableCache& tables, int max_n,
                                         const std::vector<std::uint32_t>& primes, int samples,
                                         std::uint64_t seed) {
    (void)tables;
    const std::string name = "modular-character-properties";
    const std::string scope =
        scope_np(max_n, primes) + ", " + std::to_string(samples) + " random pairs each";
    return guarded(name, scope, [&](std::string& detail) {
        std::mt19937_64 rng(seed);
        for (int n = 1; n <= max_n; ++n)
            for (std::uint32_t p : primes) {
                RingTag fp = RingTag::prime_field(p);
                const int d = 1 << (n - 1);
                auto random_element = [&] {
                    std::vector<std::pair<Composition, std::int64_t>> terms;
                    int count = 1 + static_cast<int>(rng() % 4);
                    for (int k = 0; k < count; ++k)
                        terms.push_back(
                            {Composition::from_index(n, static_cast<std::uint32_t>(rng() % d)),
                             static_cast<std::int64_t>(rng() % p)});
                    return AlgebraElement::from_terms(n, fp, terms);
                };
                for (int s = 0; s < samples; ++s) {
                    AlgebraElement x = random_element(), y = random_element();
                    CharacterVector lhs = character_vector(multiply(x, y));
                    CharacterVector rhs =
                        character_vector(x).pointwise_product(character_vector(y));
                    if (!(lhs == rhs)) {
                        detail = "not multiplicative at n=" + std::to_string(n) +
                                 ", p=" + std::to_string(p);
                        return false;
                    }
                    // independence of the integer lift: shift coefficients by
                    // multiples of p and add terms that vanish mod p
                    std::vector<std::pair<Composition, std::int64_t>> lift;
                    for (const auto& t : x.terms())
                        lift.push_back({Composition::from_index(n, t.index),
                                        t.coeff + static_cast<std::int64_t>(p) *
                                                      static_cast<std::int64_t>(rng() % 5)});
                    lift.push_back(
                        {Composition::from_index(n, static_cast<std::uint32_t>(rng() % d)),
                         static_cast<std::int64_t>(p) * static_cast<std::int64_t>(rng() % 5)});
                    AlgebraElement noisy =
                        AlgebraElement::from_terms(n, RingTag::integers(), lift);
                    if (!(character_vector(noisy).reduced_mod(p) == character_vector(x))) {
                        detail = "character depends on the lift at n=" + std::to_string(n) +
                                 ", p=" + std::to_string(p);
                        return false;
                    }
                }
            }
        return true;
    });
}

CheckResult character_rank(int max_n, const std::vector<std::uint32_t>& primes) {
    const std::string name = "character-rank";
    return guarded(name, scope_np(max_n, primes), [&](std::string& detail) {
        for (int n = 1; n <= max_n; ++n) {
            CharacterMatrix m(n);
            for (std::uint32_t p : primes)
                if (rank_mod_p(m, p) != regular_class_count(n, static_cast<int>(p))) {
                    detail = "rank differs from the regular class count at n=" +
                             std::to_string(n) + ", p=" + std::to_string(p);
                    return false;
                }
        }
        return true;
    });
}

CheckResult triangular_diagonal(int max_n, const std::vector<std::uint32_t>& primes) {
    const std::string name = "triangular-diagonal";
    return guarded(name, scope_np(max_n, primes), [&](std::string& detail) {
        for (int n = 1; n <= max_n; ++n)
            for (std::uint32_t p : primes)
                if (!check_triangular_diagonal(n, p)) {
                    detail = "triangularity fails at n=" + std::to_string(n) +
                             ", p=" + std::to_string(p);
                    return false;
                }
        return true;
    });
}

CheckResult column_congruence(int max_n, const std::vector<std::uint32_t>& primes) {
    const std::string name = "column-congruence";
    return guarded(name, scope_np(max_n, primes), [&](std::string& detail) {
        for (int n = 1; n <= max_n; ++n)
            for (std::uint32_t p : primes)
                if (!check_column_congruence(n, p)) {
                    detail = "columns with equal regular part differ at n=" +
                             std::to_string(n) + ", p=" + std::to_string(p);
                    return false;
                }
        return true;
    });
}

CheckResult irreducibles(TableCache& tables, int distinct_max_n, int multiplicative_max_n,
                         const std::vector<std::uint32_t>& primes) {
    const std::string name = "irreducible-representations";
    const std::string scope = "distinct n <= " + std::to_string(distinct_max_n) +
                              ", multiplicative n <= " + std::to_string(multiplicative_max_n) +
                              ", p in " + primes_str(primes);
    return guarded(name, scope, [&](std::string& detail) {
        for (std::uint32_t p : primes) {
            for (int n = 1; n <= distinct_max_n; ++n) {
                std::vector<IrreducibleRep> reps = irreducible_representations(n, p);
                if (static_cast<int>(reps.size()) !=
                    regular_class_count(n, static_cast<int>(p))) {
                    detail = "wrong number of representations at n=" + std::to_string(n) +
                             ", p=" + std::to_string(p);
                    return false;
                }
                for (std::size_t a = 0; a < reps.size(); ++a) {
                    if (reps[a].values[0] != 1) { // value on the unit B_[n]
                        detail = "representation does not fix the unit";
                        return false;
                    }
                    for (std::size_t b = a + 1; b < reps.size(); ++b)
                        if (reps[a].values == reps[b].values) {
                            detail = "representations " + reps[a].label.str() + " and " +
                                     reps[b].label.str() + " coincide at n=" +
                                     std::to_string(n) + ", p=" + std::to_string(p);
                            return false;
                        }
                }
            }
            for (int n = 1; n <= multiplicative_max_n; ++n) {
                const StructureTable& t = tables.get(n, RingTag::prime_field(p));
                for (const IrreducibleRep& rep : irreducible_representations(n, p))
                    for (int qi = 0; qi < t.dimension(); ++qi)
                        for (int ri = 0; ri < t.dimension(); ++ri) {
                            std::uint64_t lhs = 0;
                            for (const auto& term : t.product(qi, ri).terms())
                                lhs = (lhs + static_cast<std::uint64_t>(term.coeff) *
                                                 rep.values[term.index]) %
                                      p;
                            std::uint64_t rhs =
                                static_cast<std::uint64_t>(rep.values[qi]) * rep.values[ri] % p;
                            if (lhs != rhs) {
                                detail = "representation " + rep.label.str() +
                                         " is not multiplicative at n=" + std::to_string(n) +
                                         ", p=" + std::to_string(p);
                                return false;
                            }
                        }
            }
        }
        return true;
    });
}

CheckResult radical_dimension_formula(int max_n, const std::vector<std::uint32_t>& primes) {
    const std::string name = "radical-dimension";
    const std::string scope = scope_np(max_n, primes) + ", plus two primes above each n";
    return guarded(name, scope, [&](std::string& detail) {
        for (int n = 1; n <= max_n; ++n) {
            std::vector<std::uint32_t> all = primes;
            for (int p = n + 1, found = 0; found < 2; ++p)
                if (is_prime(p)) {
                    all.push_back(static_cast<std::uint32_t>(p));
                    ++found;
                }
            int pn = static_cast<int>(partitions(n).size());
            for (std::uint32_t p : all) {
                int dim = radical_dimension(n, p);
                int expected = (1 << (n - 1)) - regular_class_count(n, static_cast<int>(p));
                if (dim != expected) {
                    detail = "dimension formula fails at n=" + std::to_string(n) +
                             ", p=" + std::to_string(p);
                    return false;
                }
                if (static_cast<int>(p) > n && dim != (1 << (n - 1)) - pn) {
                    detail = "large-characteristic dimension fails at n=" + std::to_string(n) +
                             ", p=" + std::to_string(p);
                    return false;
                }
            }
        }
        return true;
    });
}

CheckResult radical_certification(TableCache& tables, int max_n,
                                  const std::vector<std::uint32_t>& primes) {
    const std::string name = "radical-certification";
    return guarded(name, scope_np(max_n, primes), [&](std::string& detail) {
        for (int n = 1; n <= max_n; ++n)
            for (std::uint32_t p : primes) {
                RadicalCertificate cert = certify_radical(tables.get(n, RingTag::prime_field(p)));
                if (!cert.all_flags()) {
                    detail =
                        "flag not set at n=" + std::to_string(n) + ", p=" + std::to_string(p);
                    return false;
                }
                if (cert.dimension !=
                    (1 << (n - 1)) - regular_class_count(n, static_cast<int>(p))) {
                    detail = "certified dimension differs from the class count at n=" +
                             std::to_string(n) + ", p=" + std::to_string(p);
                    return false;
                }
                int expected_index = n >= 3 ? n - 1 : (cert.dimension == 0 ? 1 : 2);
                if (cert.nilpotency_index != expected_index) {
                    detail = "certified index is " + std::to_string(cert.nilpotency_index) +
                             " at n=" + std::to_string(n) + ", p=" + std::to_string(p);
                    return false;
                }
            }
        return true;
    });
}

CheckResult nilpotent_basis_criterion(TableCache& tables, int max_n,
                                      const std::vector<std::uint32_t>& primes) {
    const std::string name = "nilpotent-basis-criterion";
    return guarded(name, scope_np(max_n, primes), [&](std::string& detail) {
        for (int n = 1; n <= max_n; ++n)
            for (std::uint32_t p : primes) {
                const StructureTable& t = tables.get(n, RingTag::prime_field(p));
                for (const Composition& r : compositions(n)) {
                    bool high = multiplicities(r).max_multiplicity() >= static_cast<int>(p);
                    bool nil = is_nilpotent(t, basis_element(n, t.ring(), r));
                    if (high != nil) {
                        detail = "criterion fails for " + r.str() + " at p=" + std::to_string(p);
                        return false;
                    }
                }
            }
        return true;
    });
}

CheckResult filtration_layers(TableCache& tables, int max_n,
                              const std::vector<std::uint32_t>& primes) {
    const std::string name = "filtration-layers";
    return guarded(name, scope_np(max_n, primes), [&](std::string& detail) {
        for (int n = 1; n <= max_n; ++n)
            for (std::uint32_t p : primes) {
                Filtration f = filtration(n, p);
                for (int m = 1; m <= n + 1; ++m) {
                    std::int64_t expect = 0;
                    for (int k = m; k <= n; ++k) expect += binomial(n - 1, k - 1);
                    if (f.level(m).dimension() != expect) {
                        detail = "layer dimension differs at n=" + std::to_string(n) +
                                 ", m=" + std::to_string(m);
                        return false;
                    }
                    if (m > 1 && !f.level(m - 1).contains(f.level(m))) {
                        detail = "chain is not descending at n=" + std::to_string(n);
                        return false;
                    }
                }
                if (!filtration_check(tables.get(n, RingTag::prime_field(p)))) {
                    detail = "products escape the next layer at n=" + std::to_string(n) +
                             ", p=" + std::to_string(p);
                    return false;
                }
            }
        return true;
    });
}

CheckResult layer_containments(TableCache& tables, int max_n,
                               const std::vector<std::uint32_t>& primes) {
    const std::string name = "layer-containments";
    return guarded(name, scope_np(max_n, primes), [&](std::string& detail) {
        for (int n = 1; n <= max_n; ++n)
            for (std::uint32_t p : primes)
                if (!containment_check(tables.get(n, RingTag::prime_field(p)))) {
                    detail = "containment fails at n=" + std::to_string(n) +
                             ", p=" + std::to_string(p);
                    return false;
                }
        return true;
    });
}

CheckResult nilpotency_index_theorem(TableCache& tables, int max_n,
                                     const std::vector<std::uint32_t>& primes) {
    const std::string name = "nilpotency-index";
    return guarded(name, scope_np(max_n, primes), [&](std::string& detail) {
        for (int n = 1; n <= max_n; ++n)
            for (std::uint32_t p : primes) {
                int index = nilpotency_index(tables.get(n, RingTag::prime_field(p)));
                int expected;
                if (n >= 3)
                    expected = n - 1;
                else if (n == 2)
                    expected = p == 2 ? 2 : 1;
                else
                    expected = 1;
                if (index != expected) {
                    detail = "index " + std::to_string(index) + " at n=" + std::to_string(n) +
                             ", p=" + std::to_string(p) + ", expected " +
                             std::to_string(expected);
                    return false;
                }
                if (n >= 3) {
                    AlgebraElement w = nilpotency_witness(n);
                    AlgebraElement power = w;
                    for (int k = 1; k < n - 2; ++k) power = multiply(power, w);
                    if (reduce_mod_p(power, p).is_zero()) {
                        detail = "witness power vanishes mod p at n=" + std::to_string(n) +
                                 ", p=" + std::to_string(p);
                        return false;
                    }
                }
            }
        return true;
    });
}

CheckResult witness_expansion(int max_n) {
    const std::string name = "witness-expansion";
    const std::string scope = "3 <= n <= " + std::to_string(max_n) + ", 1 <= r <= n-2";
    return guarded(name, scope, [&](std::string& detail) {
        for (int n = 3; n <= max_n; ++n)
            for (int r = 1; r <= n - 2; ++r)
                if (!witness_power_identity(n, r)) {
                    detail =
                        "expansion fails at n=" + std::to_string(n) + ", r=" + std::to_string(r);
                    return false;
                }
        return true;
    });
}

CheckResult spanning_set_kernel(int max_n, const std::vector<std::uint32_t>& primes) {
    const std::string name = "spanning-set-kernel";
    return guarded(name, scope_np(max_n, primes), [&](std::string& detail) {
        for (int n = 1; n <= max_n; ++n) {
            CharacterMatrix m(n);
            for (std::uint32_t p : primes) {
                for (const AlgebraElement& x : radical_spanning_set(n, p))
                    if (!character_vector(x).is_zero()) {
                        detail = "spanning element survives the character map at n=" +
                                 std::to_string(n) + ", p=" + std::to_string(p);
                        return false;
                    }
                if (radical_dimension(n, p) != (1 << (n - 1)) - rank_mod_p(m, p)) {
                    detail = "span dimension differs from the kernel dimension at n=" +
                             std::to_string(n) + ", p=" + std::to_string(p);
                    return false;
                }
            }
        }
        return true;
    });
}

CheckResult spanning_set_nilpotency(TableCache& tables, int max_n,
                                    const std::vector<std::uint32_t>& primes) {
    const std::string name = "spanning-set-nilpotency";
    return guarded(name, scope_np(max_n, primes), [&](std::string& detail) {
        for (int n = 1; n <= max_n; ++n)
            for (std::uint32_t p : primes) {
                const StructureTable& t = tables.get(n, RingTag::prime_field(p));
                for (const AlgebraElement& x : radical_spanning_set(n, p))
                    if (!is_nilpotent(t, x)) {
                        detail = "spanning element " + x.str() + " is not nilpotent at n=" +
                                 std::to_string(n) + ", p=" + std::to_string(p);
                        return false;
                    }
            }
        return true;
    });
}

CheckResult small_degree_remark(const std::vector<std::uint32_t>& primes) {
    const std::string name = "small-degree-remark";
    const std::string scope = "n in {1,2}, p in " + primes_str(primes);
    return guarded(name, scope, [&](std::string& detail) {
        std::string notice;
        for (std::uint32_t p : primes) {
            if (radical_dimension(1, p) != 0) {
                detail = "radical of degree 1 is not zero at p=" + std::to_string(p);
                return false;
            }
            int dim2 = radical_dimension(2, p);
            RingTag fp = RingTag::prime_field(p);
            AlgebraElement b11 = basis_element(2, fp, Composition({1, 1}));
            AlgebraElement square = multiply(b11, b11); // 2 B_[1,1]
            if (p == 2) {
                if (dim2 != 1 || !square.is_zero()) {
                    detail = "degree-2 radical at p=2 should be the span of B[1,1]";
                    return false;
                }
            } else {
                // the spanning set is empty and B[1,1] is not nilpotent, so
                // the computed radical is zero rather than <B[1,1]>
                if (dim2 != 0 || square.is_zero()) {
                    detail = "degree-2 radical at p=" + std::to_string(p) + " should vanish";
                    return false;
                }
                if (!notice.empty()) notice += "; ";
                notice += "p=" + std::to_string(p) +
                          ": computed radical of degree 2 is zero (B[1,1]^2 = 2 B[1,1] != 0); "
                          "the span of B[1,1] is the radical only for p=2";
            }
        }
        detail = notice;
        return true;
    });
}

std::vector<CheckResult> run_verification(const VerifyOptions& options, TableCache& tables) {
    const int n = options.max_n;
    const auto& primes = options.primes;
    auto cap = [&](int spec_bound) { return std::min(n, spec_bound); };

    std::vector<CheckResult> results;
    results.push_back(composition_enumeration(cap(12)));
    results.push_back(equivalence_classes(cap(12)));
    results.push_back(refinement_order(cap(8), cap(7)));
    results.push_back(glaisher_identity(std::max(n, 20), primes));
    results.push_back(regular_part_properties(cap(20), primes));
    results.push_back(rank_nullity(primes, 64, 40, 0x5eed1));
    results.push_back(span_properties(0x5eed2));
    results.push_back(associativity(tables, cap(6), primes));
    results.push_back(unit_laws(tables, cap(8)));
    results.push_back(product_support(tables, cap(7)));
    results.push_back(product_coefficient_multiple(tables, cap(7)));
    results.push_back(product_coefficient_exact(tables, cap(7)));
    results.push_back(reduction_homomorphism(tables, cap(8), primes));
    if (options.with_oracle)
        results.push_back(oracle_equivalence(tables, cap(6), cap(7), 200, 0x5eed3));
    results.push_back(character_homomorphism(tables, cap(6)));
    results.push_back(character_kernel(cap(8)));
    results.push_back(modular_character_properties(tables, cap(6), primes, 100, 0x5eed4));
    results.push_back(character_rank(cap(9), primes));
    results.push_back(triangular_diagonal(cap(8), primes));
    results.push_back(column_congruence(cap(8), primes));
    results.push_back(irreducibles(tables, cap(9), cap(6), primes));
    results.push_back(radical_dimension_formula(cap(10), primes));
    results.push_back(radical_certification(tables, cap(8), primes));
    results.push_back(nilpotent_basis_criterion(tables, cap(7), primes));
    results.push_back(filtration_layers(tables, cap(7), primes));
    results.push_back(layer_containments(tables, cap(7), primes));
    results.push_back(nilpotency_index_theorem(tables, cap(8), primes));
    results.push_back(witness_expansion(cap(9)));
    results.push_back(spanning_set_kernel(cap(8), primes));
    results.push_back(spanning_set_nilpotency(tables, cap(6), primes));
    if (n >= 2) results.push_back(small_degree_remark(primes));
    return results;
}

} // namespace descent::verify
