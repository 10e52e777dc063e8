#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "descent/characters.hpp"

using namespace descent;

namespace {

const RingTag Z = RingTag::integers();

// Independent oracle: the character value is the number of ordered set
// partitions of {1..n} with block sizes q whose blocks are preserved by a
// fixed permutation of cycle type pi.  Enumerates every assignment of
// elements to blocks.
std::int64_t fixed_tabloids_brute_force(const Composition& q, const Partition& pi) {
    const int n = q.n();
    std::vector<int> sigma(n);
    int start = 0;
    for (int l : pi.parts()) {
        for (int i = 0; i < l; ++i) sigma[start + i] = start + 1 + (i + 1) % l;
        start += l;
    }
    // assignment[i] = block of element i+1
    std::vector<int> assignment(n, 0);
    const int s = q.part_count();
    std::int64_t count = 0;
    while (true) {
        std::vector<int> sizes(s, 0);
        for (int b : assignment) ++sizes[b];
        bool sized = true;
        for (int b = 0; b < s; ++b) sized = sized && sizes[b] == q.parts()[b];
        if (sized) {
            bool invariant = true;
            for (int i = 1; i <= n && invariant; ++i)
                invariant = assignment[sigma[i - 1] - 1] == assignment[i - 1];
            if (invariant) ++count;
        }
        int pos = 0;
        while (pos < n && assignment[pos] == s - 1) assignment[pos++] = 0;
        if (pos == n) break;
        ++assignment[pos];
    }
    return count;
}

// n! / prod a_i!
std::int64_t multinomial(int n, const std::vector<int>& parts) {
    std::int64_t result = 1;
    for (int k = 2; k <= n; ++k) result *= k;
    for (int a : parts)
        for (int k = 2; k <= a; ++k) result /= k;
    return result;
}

} // namespace

TEST_SUITE("characters") {

TEST_CASE("trivial and regular character values") {
    for (const Partition& pi : partitions(5))
        CHECK(young_character_value(Composition({5}), pi) == 1);
    CHECK(young_character_value(Composition({1, 1, 1, 1}), Partition({4})) == 0);
    CHECK(young_character_value(Composition({1, 1, 1, 1}), Partition({1, 1, 1, 1})) == 24);
    CHECK(young_character_value(Composition({2, 2}), Partition({2, 1, 1})) == 2);
    CHECK_THROWS_AS(young_character_value(Composition({2, 2}), Partition({3})), InputError);
}

TEST_CASE("character values against the fixed-tabloid brute force") {
    for (int n = 1; n <= 5; ++n)
        for (const Composition& q : compositions(n))
            for (const Partition& pi : partitions(n))
                CHECK(young_character_value(q, pi) == fixed_tabloids_brute_force(q, pi));
}

TEST_CASE("identity column is the multinomial coefficient") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> ones(n, 1);
        Partition id(ones);
        for (const Composition& q : compositions(n))
            CHECK(young_character_value(q, id) == multinomial(n, q.parts()));
    }
}

TEST_CASE("the degree-2 character matrix") {
    CharacterMatrix m(2);
    REQUIRE(m.row_count() == 2);
    REQUIRE(m.col_count() == 2);
    CHECK(m.rows()[0] == Composition({2}));
    CHECK(m.rows()[1] == Composition({1, 1}));
    CHECK(m.cols()[0] == Partition({2}));
    CHECK(m.cols()[1] == Partition({1, 1}));
    CHECK(m.at(0, 0) == 1);
    CHECK(m.at(0, 1) == 1);
    CHECK(m.at(1, 0) == 0);
    CHECK(m.at(1, 1) == 2);
}

TEST_CASE("whole-degree row is all ones") {
    CharacterMatrix m(6);
    for (int j = 0; j < m.col_count(); ++j) CHECK(m.at(0, j) == 1);
    CHECK_THROWS_AS(CharacterMatrix(11), ResourceError);
}

TEST_CASE("character vector of the unit and of differences") {
    CharacterVector ones = character_vector(identity(5, Z));
    CHECK(ones.modulus == 0);
    for (std::int64_t v : ones.values) CHECK(v == 1);

    for (int n = 1; n <= 6; ++n)
        for (const Composition& q : compositions(n)) {
            Composition rep = class_representative(q);
            if (rep == q) continue;
            AlgebraElement diff = basis_element(n, Z, q) - basis_element(n, Z, rep);
            CHECK(character_vector(diff).is_zero());
        }
}

TEST_CASE("character map is multiplicative on the worked example") {
    AlgebraElement x = basis_element(4, Z, Composition({2, 2}));
    AlgebraElement y = basis_element(4, Z, Composition({2, 1, 1}));
    CHECK(character_vector(multiply(x, y)) ==
          character_vector(x).pointwise_product(character_vector(y)));
}

TEST_CASE("character map is multiplicative on all pairs of degree 4") {
    std::vector<Composition> basis = compositions(4);
    for (const Composition& q : basis)
        for (const Composition& r : basis) {
            AlgebraElement bq = basis_element(4, Z, q), br = basis_element(4, Z, r);
            CHECK(character_vector(multiply(bq, br)) ==
                  character_vector(bq).pointwise_product(character_vector(br)));
        }
}

TEST_CASE("modular character values reduce the integer ones") {
    for (std::uint32_t p : {2u, 3u}) {
        RingTag fp = RingTag::prime_field(p);
        for (const Composition& q : compositions(5)) {
            CharacterVector modular = character_vector(basis_element(5, fp, q));
            CharacterVector exact = character_vector(basis_element(5, Z, q));
            CHECK(modular == exact.reduced_mod(p));
        }
        CharacterVector unit = character_vector(identity(5, fp));
        for (std::int64_t v : unit.values) CHECK(v == 1);
    }
}

TEST_CASE("modular character map is multiplicative on random pairs") {
    std::mt19937_64 rng(31337);
    for (int n = 2; n <= 5; ++n)
        for (std::uint32_t p : {2u, 3u}) {
            RingTag fp = RingTag::prime_field(p);
            const std::uint32_t d = std::uint32_t{1} << (n - 1);
            for (int trial = 0; trial < 30; ++trial) {
                auto random_elem = [&] {
                    std::vector<std::pair<Composition, std::int64_t>> terms;
                    for (int k = 0; k < 3; ++k)
                        terms.push_back({Composition::from_index(
                                             n, static_cast<std::uint32_t>(rng() % d)),
                                         static_cast<std::int64_t>(rng() % p)});
                    return AlgebraElement::from_terms(n, fp, terms);
                };
                AlgebraElement x = random_elem(), y = random_elem();
                CHECK(character_vector(multiply(x, y)) ==
                      character_vector(x).pointwise_product(character_vector(y)));
            }
        }
}

TEST_CASE("modular character values are independent of the lift") {
    std::mt19937_64 rng(5150);
    for (std::uint32_t p : {2u, 3u})
        for (int trial = 0; trial < 20; ++trial) {
            RingTag fp = RingTag::prime_field(p);
            AlgebraElement x = AlgebraElement::from_terms(
                4, fp,
                {{Composition::from_index(4, static_cast<std::uint32_t>(rng() % 8)),
                  static_cast<std::int64_t>(rng() % p)},
                 {Composition::from_index(4, static_cast<std::uint32_t>(rng() % 8)),
                  static_cast<std::int64_t>(rng() % p)}});
            std::vector<std::pair<Composition, std::int64_t>> lifted;
            for (const auto& t : x.terms())
                lifted.push_back({Composition::from_index(4, t.index),
                                  t.coeff + static_cast<std::int64_t>(p) *
                                                (static_cast<std::int64_t>(rng() % 9) - 4)});
            lifted.push_back({Composition::from_index(4, static_cast<std::uint32_t>(rng() % 8)),
                              static_cast<std::int64_t>(p) * 3});
            AlgebraElement lift = AlgebraElement::from_terms(4, Z, lifted);
            CHECK(character_vector(lift).reduced_mod(p) == character_vector(x));
        }
}

TEST_CASE("rank of the character matrix mod p") {
    CHECK(rank_mod_p(CharacterMatrix(4), 2) == 2);
    CHECK(rank_mod_p(CharacterMatrix(4), 5) == 5);
    CHECK(rank_mod_p(CharacterMatrix(6), 3) == regular_class_count(6, 3));
    // independent count of the 3-regular partitions of 6
    int count = 0;
    for (const Partition& pi : partitions(6)) {
        bool ok = true;
        for (int l : pi.parts()) ok = ok && l % 3 != 0;
        count += ok;
    }
    CHECK(count == 7);
    CHECK(rank_mod_p(CharacterMatrix(6), 3) == count);
}

TEST_CASE("triangularity with factorial diagonal") {
    CHECK(young_character_value(Composition({2, 1, 1}), Partition({2, 1, 1})) == 2);
    CHECK(young_character_value(Composition({6}), Partition({6})) == 1);
    CHECK(check_triangular_diagonal(6, 3));
    CHECK(check_triangular_diagonal(4, 2));
    CHECK(check_triangular_diagonal(5, 2));
    CHECK(check_triangular_diagonal(5, 3));
    CHECK_THROWS_AS(check_triangular_diagonal(10, 2), ResourceError);
}

TEST_CASE("columns with the same regular part agree mod p") {
    CharacterMatrix m(4);
    // p = 2: [4] and [1,1,1,1] both have 2-regular part [1,1,1,1]
    int col4 = 0, col1111 = 4;
    REQUIRE(m.cols()[col4] == Partition({4}));
    REQUIRE(m.cols()[col1111] == Partition({1, 1, 1, 1}));
    CHECK(p_regular_part(Partition({4}), 2) == p_regular_part(Partition({1, 1, 1, 1}), 2));
    for (int qi = 0; qi < m.row_count(); ++qi)
        CHECK(mod_reduce(m.at(qi, col4), 2) == mod_reduce(m.at(qi, col1111), 2));

    CHECK(check_column_congruence(4, 2));
    CHECK(check_column_congruence(4, 5)); // vacuous for p > n
    CHECK(check_column_congruence(6, 2));

    CharacterMatrix m6(6);
    auto col_of = [&](const Partition& pi) {
        for (int j = 0; j < m6.col_count(); ++j)
            if (m6.cols()[j] == pi) return j;
        return -1;
    };
    int c6 = col_of(Partition({6})), c33 = col_of(Partition({3, 3}));
    REQUIRE(c6 >= 0);
    REQUIRE(c33 >= 0);
    for (int qi = 0; qi < m6.row_count(); ++qi)
        CHECK(mod_reduce(m6.at(qi, c6), 2) == mod_reduce(m6.at(qi, c33), 2));
}

TEST_CASE("irreducible representations of the worked degree") {
    std::vector<IrreducibleRep> reps = irreducible_representations(4, 2);
    REQUIRE(reps.size() == 2);
    CHECK(reps[0].label == Partition({3, 1}));
    CHECK(reps[1].label == Partition({1, 1, 1, 1}));
    CHECK(reps[0].values != reps[1].values);
    for (const IrreducibleRep& rep : reps) CHECK(rep.values[0] == 1);
}

TEST_CASE("representations are multiplicative on all basis pairs") {
    for (int n = 1; n <= 4; ++n)
        for (std::uint32_t p : {2u, 3u}) {
            StructureTable t = StructureTable::build(n, RingTag::prime_field(p));
            for (const IrreducibleRep& rep : irreducible_representations(n, p))
                for (const Composition& q : compositions(n))
                    for (const Composition& r : compositions(n)) {
                        AlgebraElement bq = basis_element(n, t.ring(), q);
                        AlgebraElement br = basis_element(n, t.ring(), r);
                        std::uint32_t lhs = rep(multiply(bq, br));
                        std::uint32_t rhs =
                            static_cast<std::uint32_t>(static_cast<std::uint64_t>(rep(bq)) *
                                                       rep(br) % p);
                        CHECK(lhs == rhs);
                    }
        }
}

TEST_CASE("representation count and distinctness") {
    for (int n = 1; n <= 7; ++n)
        for (std::uint32_t p : {2u, 3u, 5u}) {
            std::vector<IrreducibleRep> reps = irreducible_representations(n, p);
            CHECK(static_cast<int>(reps.size()) == regular_class_count(n, static_cast<int>(p)));
            std::set<std::vector<std::uint32_t>> distinct;
            for (const IrreducibleRep& rep : reps) distinct.insert(rep.values);
            CHECK(distinct.size() == reps.size());
        }
}

} // TEST_SUITE
