#include <doctest.h>

#include <algorithm>

#include "descent/characters.hpp"
#include "descent/radical.hpp"

using namespace descent;

namespace {

const RingTag Z = RingTag::integers();

AlgebraElement B(int n, RingTag ring, std::vector<int> parts) {
    return basis_element(n, ring, Composition(std::move(parts)));
}

} // namespace

TEST_SUITE("radical") {

TEST_CASE("spanning set of the smallest nontrivial case") {
    std::vector<AlgebraElement> span = radical_spanning_set(3, 2);
    REQUIRE(span.size() == 2);
    RingTag f2 = RingTag::prime_field(2);
    CHECK(span[0] == B(3, f2, {1, 2}) - B(3, f2, {2, 1}));
    CHECK(span[1] == B(3, f2, {1, 1, 1}));
}

TEST_CASE("spanning set edge cases") {
    for (std::uint32_t p : {2u, 3u, 5u}) CHECK(radical_spanning_set(1, p).empty());
    CHECK(radical_spanning_set(2, 2) ==
          std::vector<AlgebraElement>{B(2, RingTag::prime_field(2), {1, 1})});
    CHECK(radical_spanning_set(2, 3).empty());
    CHECK(radical_dimension(4, 2) == 6);
    CHECK_THROWS_AS(radical_spanning_set(11, 2), ResourceError);
}

TEST_CASE("radical dimensions") {
    CHECK(radical_dimension(4, 2) == 6);
    CHECK(radical_dimension(4, 5) == 3); // characteristic above the degree
    CHECK(radical_dimension(2, 2) == 1);
    for (int n = 1; n <= 8; ++n)
        for (std::uint32_t p : {2u, 3u, 5u, 7u})
            CHECK(radical_dimension(n, p) ==
                  (1 << (n - 1)) - regular_class_count(n, static_cast<int>(p)));
}

TEST_CASE("certification of the smallest cases") {
    RadicalCertificate cert = certify_radical(3, 2);
    CHECK(cert.dimension == 2);
    CHECK(cert.nilpotency_index == 2);
    CHECK(cert.all_flags());
    CHECK(cert.spanning_set.size() == 2);

    RadicalCertificate zero = certify_radical(1, 3);
    CHECK(zero.dimension == 0);
    CHECK(zero.nilpotency_index == 1);
    CHECK(zero.all_flags());

    RadicalCertificate six = certify_radical(6, 2);
    CHECK(six.dimension == 32 - regular_class_count(6, 2));
    CHECK(six.dimension == 28);
    CHECK(six.nilpotency_index == 5);
    CHECK(six.all_flags());
}

TEST_CASE("the square of the small radical vanishes by hand") {
    RingTag f2 = RingTag::prime_field(2);
    AlgebraElement diff = B(3, f2, {1, 2}) - B(3, f2, {2, 1});
    AlgebraElement fine = B(3, f2, {1, 1, 1});
    CHECK(multiply(diff, diff).is_zero());
    CHECK(multiply(diff, fine).is_zero());
    CHECK(multiply(fine, diff).is_zero());
    CHECK(multiply(fine, fine).is_zero());
}

TEST_CASE("nilpotency indexes") {
    for (std::uint32_t p : {2u, 3u, 5u}) CHECK(nilpotency_index(3, p) == 2);
    CHECK(nilpotency_index(4, 2) == 3);
    CHECK(nilpotency_index(2, 2) == 2);
    CHECK(nilpotency_index(2, 3) == 1);
    CHECK(nilpotency_index(1, 2) == 1);
    CHECK_THROWS_AS(nilpotency_index(9, 2), ResourceError);
}

TEST_CASE("witness element") {
    CHECK(nilpotency_witness(4) == B(4, Z, {1, 3}) - B(4, Z, {3, 1}));
    CHECK(nilpotency_witness(3) == B(3, Z, {1, 2}) - B(3, Z, {2, 1}));
    CHECK(character_vector(nilpotency_witness(5)).is_zero());
    CHECK_THROWS_AS(nilpotency_witness(2), InputError);
}

TEST_CASE("witness square in degree 4") {
    AlgebraElement w = nilpotency_witness(4);
    AlgebraElement square = multiply(w, w);
    AlgebraElement want = AlgebraElement::from_terms(4, Z,
                                                     {{Composition({1, 1, 2}), 1},
                                                      {Composition({1, 2, 1}), -2},
                                                      {Composition({2, 1, 1}), 1}});
    CHECK(square == want);
    CHECK(witness_power_identity(4, 2));
}

TEST_CASE("witness power expansion") {
    for (int n = 3; n <= 7; ++n) CHECK(witness_power_identity(n, 1));
    CHECK(witness_power_identity(6, 4));
    AlgebraElement w = nilpotency_witness(6);
    AlgebraElement pow = multiply(multiply(multiply(w, w), w), w);
    for (std::uint32_t p : {2u, 3u, 5u}) CHECK(!reduce_mod_p(pow, p).is_zero());
    CHECK_THROWS_AS(witness_power_identity(2, 1), InputError);
    CHECK_THROWS_AS(witness_power_identity(5, 4), InputError);
    CHECK_THROWS_AS(witness_power_identity(10, 1), InputError);
}

TEST_CASE("filtration layers and the descent of products") {
    Filtration f = filtration(4, 2);
    REQUIRE(f.levels.size() == 5);
    CHECK(f.level(1).dimension() == 8);
    CHECK(f.level(2).dimension() == 7);
    CHECK(f.level(3).dimension() == 4);
    CHECK(f.level(4).dimension() == 1);
    CHECK(f.level(5).dimension() == 0);

    CHECK(filtration_check(StructureTable::build(4, RingTag::prime_field(2))));
    CHECK(filtration_check(StructureTable::build(5, RingTag::prime_field(3))));
}

TEST_CASE("products of the finest composition with the radical vanish") {
    // the top filtration step forces them to zero
    RingTag f2 = RingTag::prime_field(2);
    AlgebraElement finest = B(4, f2, {1, 1, 1, 1});
    for (const AlgebraElement& x : radical_spanning_set(4, 2))
        CHECK(multiply(finest, x).is_zero());
}

TEST_CASE("layer containments in both parity cases") {
    CHECK(containment_check(StructureTable::build(5, RingTag::prime_field(3))));
    CHECK(containment_check(StructureTable::build(4, RingTag::prime_field(2))));
    CHECK(containment_check(StructureTable::build(3, RingTag::prime_field(2))));
    CHECK(containment_check(StructureTable::build(6, RingTag::prime_field(2))));
}

TEST_CASE("nilradical of split and dual-number algebras") {
    // F_p x F_p with coordinatewise product
    CommutativeAlgebra split;
    split.p = 5;
    split.dim = 2;
    split.product = {{{1, 0}, {0, 0}}, {{0, 0}, {0, 1}}};
    CHECK(nilradical(split).dimension() == 0);

    // basis {1, e} with e^2 = 0
    CommutativeAlgebra dual;
    dual.p = 2;
    dual.dim = 2;
    dual.product = {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}};
    Subspace nil = nilradical(dual);
    CHECK(nil.dimension() == 1);
    CHECK(nil.contains(std::vector<std::uint32_t>{0, 1}));

    CommutativeAlgebra bad;
    bad.p = 2;
    bad.dim = 2;
    bad.product = {{{1, 0}, {0, 1}}, {{1, 0}, {0, 0}}};
    CHECK_THROWS_AS(nilradical(bad), InputError);
}

TEST_CASE("quotient by the radical is semisimple") {
    for (std::uint32_t p : {2u, 3u}) {
        StructureTable t = StructureTable::build(4, RingTag::prime_field(p));
        Subspace span = radical_span(4, p);
        CommutativeAlgebra quotient = quotient_algebra(t, span);
        CHECK(quotient.dim == regular_class_count(4, static_cast<int>(p)));
        CHECK(nilradical(quotient).dimension() == 0);
    }
}

TEST_CASE("certificate invariants across small degrees") {
    for (int n = 1; n <= 5; ++n)
        for (std::uint32_t p : {2u, 3u, 5u}) {
            RadicalCertificate cert = certify_radical(n, p);
            CHECK(cert.all_flags());
            CHECK(cert.dimension ==
                  (1 << (n - 1)) - regular_class_count(n, static_cast<int>(p)));
            if (n >= 3) CHECK(cert.nilpotency_index == n - 1);
        }
}

TEST_CASE("degree-2 remark: the stated generator works only for p = 2") {
    RingTag f3 = RingTag::prime_field(3);
    AlgebraElement b11 = B(2, f3, {1, 1});
    AlgebraElement square = multiply(b11, b11);
    CHECK(square == b11.scaled(2)); // 2 B[1,1] != 0 mod 3
    CHECK(!square.is_zero());
    CHECK(radical_dimension(2, 3) == 0);

    RingTag f2 = RingTag::prime_field(2);
    CHECK(multiply(B(2, f2, {1, 1}), B(2, f2, {1, 1})).is_zero());
    CHECK(radical_dimension(2, 2) == 1);
}

TEST_CASE("resource bounds honor force") {
    CHECK_THROWS_AS(certify_radical(9, 2), ResourceError);
    // force only relaxes size limits; the small case is unaffected
    CHECK(certify_radical(3, 2, true).all_flags());
}

} // TEST_SUITE
