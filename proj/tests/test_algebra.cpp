#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "descent/algebra.hpp"

using namespace descent;

namespace {

const RingTag Z = RingTag::integers();

AlgebraElement B(int n, RingTag ring, std::vector<int> parts) {
    return basis_element(n, ring, Composition(std::move(parts)));
}

// independent oracle: take every way to write each row as an ordered tuple
// with the requested row sum, then keep the grids whose column sums match.
// No column-capacity pruning is involved.
void rows_with_sum(int total, int cols, std::vector<int>& row,
                   std::vector<std::vector<int>>& out) {
    if (static_cast<int>(row.size()) == cols - 1) {
        row.push_back(total);
        out.push_back(row);
        row.pop_back();
        return;
    }
    for (int v = 0; v <= total; ++v) {
        row.push_back(v);
        rows_with_sum(total - v, cols, row, out);
        row.pop_back();
    }
}

std::set<std::vector<int>> contingency_brute_force(const Composition& q, const Composition& r) {
    const int s = q.part_count(), t = r.part_count();
    std::vector<std::vector<std::vector<int>>> row_choices(s);
    for (int i = 0; i < s; ++i) {
        std::vector<int> scratch;
        rows_with_sum(q.parts()[i], t, scratch, row_choices[i]);
    }
    std::set<std::vector<int>> out;
    std::vector<int> pick(s, 0);
    while (true) {
        std::vector<int> colsum(t, 0), entries;
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < t; ++j) {
                colsum[j] += row_choices[i][pick[i]][j];
                entries.push_back(row_choices[i][pick[i]][j]);
            }
        if (std::equal(colsum.begin(), colsum.end(), r.parts().begin())) out.insert(entries);
        int pos = 0;
        while (pos < s && pick[pos] + 1 == static_cast<int>(row_choices[pos].size()))
            pick[pos++] = 0;
        if (pos == s) break;
        ++pick[pos];
    }
    return out;
}

} // namespace

TEST_SUITE("algebra") {

TEST_CASE("ring tags") {
    CHECK(Z.is_integers());
    CHECK(Z.str() == "Z");
    RingTag f5 = RingTag::prime_field(5);
    CHECK(f5.modulus() == 5);
    CHECK(f5.str() == "F5");
    CHECK_THROWS_AS(RingTag::prime_field(6), InputError);
}

TEST_CASE("element normalization") {
    AlgebraElement x = AlgebraElement::from_terms(
        4, Z, {{Composition({2, 2}), 2}, {Composition({2, 2}), -2}, {Composition({4}), 3}});
    REQUIRE(x.terms().size() == 1);
    CHECK(x.coefficient(Composition({4})) == 3);
    CHECK(x.coefficient(Composition({2, 2})) == 0);

    AlgebraElement y = AlgebraElement::from_terms(3, RingTag::prime_field(3),
                                                  {{Composition({1, 2}), 5}});
    CHECK(y.coefficient(Composition({1, 2})) == 2);

    CHECK(AlgebraElement(4, Z).is_zero());
    CHECK_THROWS_AS(
        AlgebraElement::from_terms(4, Z, {{Composition({2, 1}), 1}}), InputError);
}

TEST_CASE("element sum, difference, coords") {
    AlgebraElement a = B(4, Z, {2, 2}), b = B(4, Z, {1, 3});
    AlgebraElement sum = a + b;
    CHECK(sum.coefficient(Composition({2, 2})) == 1);
    CHECK(sum.coefficient(Composition({1, 3})) == 1);
    CHECK((sum - a) == b);
    CHECK(a.scaled(0).is_zero());

    std::vector<std::int64_t> coords = sum.coords();
    CHECK(coords.size() == 8);
    CHECK(AlgebraElement::from_coords(4, Z, coords) == sum);
    CHECK(sum.str() == "B[1,3] + B[2,2]");
    CHECK(AlgebraElement(4, Z).str() == "0");
}

TEST_CASE("contingency matrices reproduce the worked example") {
    std::vector<IntMatrix> mats =
        contingency_matrices(Composition({2, 2}), Composition({2, 1, 1}));
    REQUIRE(mats.size() == 4);
    std::set<std::vector<int>> got;
    for (const IntMatrix& m : mats) got.insert(m.e);
    std::set<std::vector<int>> want = {{2, 0, 0, 0, 1, 1},
                                       {0, 1, 1, 2, 0, 0},
                                       {1, 0, 1, 1, 1, 0},
                                       {1, 1, 0, 1, 0, 1}};
    CHECK(got == want);
}

TEST_CASE("contingency matrices with one row are forced") {
    std::vector<IntMatrix> mats = contingency_matrices(Composition({5}), Composition({2, 2, 1}));
    REQUIRE(mats.size() == 1);
    CHECK(mats[0].e == std::vector<int>{2, 2, 1});
}

TEST_CASE("contingency matrices match brute force") {
    std::vector<IntMatrix> mats = contingency_matrices(Composition({1, 2}), Composition({2, 1}));
    std::set<std::vector<int>> got;
    for (const IntMatrix& m : mats) got.insert(m.e);
    CHECK(got == std::set<std::vector<int>>{{1, 0, 1, 1}, {0, 1, 2, 0}});

    for (int n : {3, 4, 5}) {
        std::vector<Composition> all = compositions(n);
        for (const Composition& q : all)
            for (const Composition& r : all) {
                std::set<std::vector<int>> fast;
                for (const IntMatrix& m : contingency_matrices(q, r)) fast.insert(m.e);
                CHECK(fast == contingency_brute_force(q, r));
            }
    }
    CHECK_THROWS_AS(contingency_matrices(Composition({2}), Composition({3})), InputError);
}

TEST_CASE("contingency enumeration order is deterministic") {
    std::vector<IntMatrix> a = contingency_matrices(Composition({2, 2}), Composition({2, 1, 1}));
    std::vector<IntMatrix> b = contingency_matrices(Composition({2, 2}), Composition({2, 1, 1}));
    CHECK(a == b);
    for (std::size_t i = 0; i + 1 < a.size(); ++i) CHECK(a[i].e < a[i + 1].e);
}

TEST_CASE("read_word") {
    IntMatrix m(2, 3);
    m.at(0, 0) = 2;
    m.at(1, 1) = 1;
    m.at(1, 2) = 1;
    CHECK(read_word(m) == Composition({2, 1, 1}));

    IntMatrix w(2, 3);
    w.at(0, 0) = 1;
    w.at(0, 2) = 1;
    w.at(1, 0) = 1;
    w.at(1, 1) = 1;
    CHECK(read_word(w) == Composition({1, 1, 1, 1}));

    IntMatrix single(1, 1);
    single.at(0, 0) = 6;
    CHECK(read_word(single) == Composition({6}));

    IntMatrix zero(2, 2);
    CHECK_THROWS_AS(read_word(zero), InputError);
    zero.at(0, 0) = -1;
    CHECK_THROWS_AS(read_word(zero), InputError);
}

TEST_CASE("the worked product over Z and mod 2") {
    AlgebraElement prod = multiply(B(4, Z, {2, 2}), B(4, Z, {2, 1, 1}));
    AlgebraElement want = AlgebraElement::from_terms(4, Z,
                                                     {{Composition({2, 1, 1}), 1},
                                                      {Composition({1, 1, 2}), 1},
                                                      {Composition({1, 1, 1, 1}), 2}});
    CHECK(prod == want);

    RingTag f2 = RingTag::prime_field(2);
    AlgebraElement prod2 = multiply(B(4, f2, {2, 2}), B(4, f2, {2, 1, 1}));
    AlgebraElement want2 = AlgebraElement::from_terms(
        4, f2, {{Composition({2, 1, 1}), 1}, {Composition({1, 1, 2}), 1}});
    CHECK(prod2 == want2);
    CHECK(reduce_mod_p(prod, 2) == prod2);
}

TEST_CASE("a degree-3 product") {
    CHECK(multiply(B(3, Z, {1, 2}), B(3, Z, {2, 1})) ==
          AlgebraElement::from_terms(3, Z,
                                     {{Composition({1, 2}), 1}, {Composition({1, 1, 1}), 1}}));
}

TEST_CASE("multiply validates compatibility") {
    CHECK_THROWS_AS(multiply(B(3, Z, {3}), B(4, Z, {4})), InputError);
    CHECK_THROWS_AS(multiply(B(3, Z, {3}), B(3, RingTag::prime_field(2), {3})), InputError);
}

TEST_CASE("unit products at the largest indexable degree") {
    AlgebraElement unit = identity(16, Z);
    AlgebraElement b = B(16, Z, {3, 5, 8});
    CHECK(multiply(unit, b) == b);
    CHECK(multiply(b, unit) == b);
    CHECK_THROWS_AS(AlgebraElement(17, Z), InputError);
}

TEST_CASE("identity is the whole-degree composition") {
    for (int n : {1, 2, 4, 6}) {
        AlgebraElement e = identity(n, Z);
        CHECK(e == B(n, Z, {n}));
        for (const Composition& q : compositions(n)) {
            AlgebraElement b = basis_element(n, Z, q);
            CHECK(multiply(e, b) == b);
            CHECK(multiply(b, e) == b);
        }
        CHECK(multiply(e, e) == e);
    }
}

TEST_CASE("reduce_mod_p drops multiples of p") {
    AlgebraElement x = AlgebraElement::from_terms(4, Z, {{Composition({1, 1, 1, 1}), 2}});
    CHECK(reduce_mod_p(x, 2).is_zero());
    AlgebraElement small = AlgebraElement::from_terms(
        4, Z, {{Composition({2, 2}), 1}, {Composition({4}), 2}});
    CHECK(reduce_mod_p(small, 3).terms().size() == 2);
    CHECK_THROWS_AS(reduce_mod_p(reduce_mod_p(small, 3), 3), InputError);
    CHECK_THROWS_AS(reduce_mod_p(small, 9), InputError);
}

TEST_CASE("reduction is a ring homomorphism on random products") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + static_cast<int>(rng() % 3);
        std::uint32_t p = trial % 2 ? 2 : 3;
        auto random_elem = [&] {
            std::vector<std::pair<Composition, std::int64_t>> terms;
            for (int k = 0; k < 3; ++k)
                terms.push_back({Composition::from_index(
                                     n, static_cast<std::uint32_t>(rng() % (1u << (n - 1)))),
                                 static_cast<std::int64_t>(rng() % 7) - 3});
            return AlgebraElement::from_terms(n, Z, terms);
        };
        AlgebraElement x = random_elem(), y = random_elem();
        CHECK(reduce_mod_p(multiply(x, y), p) ==
              multiply(reduce_mod_p(x, p), reduce_mod_p(y, p)));
    }
}

TEST_CASE("structure table cells agree with direct products") {
    for (int n : {1, 2, 3, 4, 5})
        for (RingTag ring : {Z, RingTag::prime_field(2), RingTag::prime_field(3)}) {
            StructureTable t = StructureTable::build(n, ring);
            std::vector<Composition> basis = compositions(n);
            for (std::uint32_t qi = 0; qi < basis.size(); ++qi)
                for (std::uint32_t ri = 0; ri < basis.size(); ++ri)
                    CHECK(t.product(qi, ri) ==
                          multiply(basis_element(n, ring, basis[qi]),
                                   basis_element(n, ring, basis[ri])));
        }
}

TEST_CASE("structure table bounds") {
    CHECK_THROWS_AS(StructureTable::build(10, Z), ResourceError);
    CHECK_THROWS_AS(StructureTable::build(11, RingTag::prime_field(2)), ResourceError);
    StructureTable t1 = StructureTable::build(1, Z);
    CHECK(t1.product(0, 0) == identity(1, Z));
}

TEST_CASE("the mod-2 table holds the worked product") {
    StructureTable t = StructureTable::build(4, RingTag::prime_field(2));
    std::uint32_t qi = Composition({2, 2}).index(), ri = Composition({2, 1, 1}).index();
    CHECK(t.product(qi, ri) ==
          AlgebraElement::from_terms(4, RingTag::prime_field(2),
                                     {{Composition({2, 1, 1}), 1}, {Composition({1, 1, 2}), 1}}));
}

TEST_CASE("multiply_coords matches multiply") {
    std::mt19937_64 rng(11);
    for (RingTag ring : {Z, RingTag::prime_field(3)}) {
        StructureTable t = StructureTable::build(5, ring);
        for (int trial = 0; trial < 25; ++trial) {
            auto random_elem = [&] {
                std::vector<std::pair<Composition, std::int64_t>> terms;
                for (int k = 0; k < 4; ++k)
                    terms.push_back({Composition::from_index(
                                         5, static_cast<std::uint32_t>(rng() % 16)),
                                     static_cast<std::int64_t>(rng() % 5) - 2});
                return AlgebraElement::from_terms(5, ring, terms);
            };
            AlgebraElement x = random_elem(), y = random_elem();
            CHECK(t.multiply_coords(x.coords(), y.coords()) == multiply(x, y).coords());
        }
    }
}

TEST_CASE("regular representation matrices") {
    StructureTable t = StructureTable::build(4, Z);
    DenseMatrix id = regular_rep_matrix(t, identity(4, Z), Side::right);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) CHECK(id.at(i, j) == (i == j ? 1 : 0));
    DenseMatrix zero = regular_rep_matrix(t, AlgebraElement(4, Z), Side::left);
    CHECK(std::all_of(zero.e.begin(), zero.e.end(), [](std::int64_t v) { return v == 0; }));

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        auto random_elem = [&] {
            std::vector<std::pair<Composition, std::int64_t>> terms;
            for (int k = 0; k < 3; ++k)
                terms.push_back(
                    {Composition::from_index(4, static_cast<std::uint32_t>(rng() % 8)),
                     static_cast<std::int64_t>(rng() % 5) - 2});
            return AlgebraElement::from_terms(4, Z, terms);
        };
        AlgebraElement x = random_elem(), v = random_elem();
        DenseMatrix right = regular_rep_matrix(t, x, Side::right);
        DenseMatrix left = regular_rep_matrix(t, x, Side::left);
        std::vector<std::int64_t> vc = v.coords();
        std::vector<std::int64_t> want_right = multiply(v, x).coords();
        std::vector<std::int64_t> want_left = multiply(x, v).coords();
        for (int i = 0; i < 8; ++i) {
            std::int64_t right_i = 0, left_i = 0;
            for (int j = 0; j < 8; ++j) {
                right_i += right.at(i, j) * vc[j];
                left_i += left.at(i, j) * vc[j];
            }
            CHECK(right_i == want_right[i]);
            CHECK(left_i == want_left[i]);
        }
    }
}

TEST_CASE("nilpotency by rank stabilization matches direct powering") {
    RingTag f2 = RingTag::prime_field(2);
    StructureTable t4 = StructureTable::build(4, f2);
    AlgebraElement x = B(4, f2, {1, 1, 2});
    CHECK(is_nilpotent(t4, x));
    AlgebraElement power = x;
    bool vanished = false;
    for (int k = 1; k <= 8; ++k) {
        power = multiply(power, x);
        if (power.is_zero()) { vanished = true; break; }
    }
    CHECK(vanished);

    StructureTable t3 = StructureTable::build(3, f2);
    AlgebraElement y = B(3, f2, {1, 2});
    CHECK_FALSE(is_nilpotent(t3, y));
    AlgebraElement cube = multiply(multiply(y, y), y);
    CHECK(cube == y); // periodic, never zero

    CHECK(is_nilpotent(t4, AlgebraElement(4, f2)));
    StructureTable tz = StructureTable::build(3, Z);
    CHECK_THROWS_AS(is_nilpotent(tz, B(3, Z, {1, 2})), InputError);
}

TEST_CASE("associativity and unit laws on a modest degree") {
    for (RingTag ring : {Z, RingTag::prime_field(2)}) {
        StructureTable t = StructureTable::build(4, ring);
        const int d = t.dimension();
        for (int qi = 0; qi < d; ++qi)
            for (int ri = 0; ri < d; ++ri) {
                std::vector<std::int64_t> qr = t.product(qi, ri).coords();
                for (int si = 0; si < d; ++si) {
                    std::vector<std::int64_t> es(d, 0), eq(d, 0);
                    es[si] = 1;
                    eq[qi] = 1;
                    CHECK(t.multiply_coords(qr, es) ==
                          t.multiply_coords(eq, t.product(ri, si).coords()));
                }
            }
    }
}

} // TEST_SUITE
