#include <doctest.h>

#include <random>

#include "descent/linalg.hpp"

using namespace descent;

TEST_SUITE("linalg") {

TEST_CASE("checked arithmetic") {
    CHECK(checked_add(2, 3) == 5);
    CHECK(checked_mul(-4, 5) == -20);
    CHECK_THROWS_AS(checked_add(INT64_MAX, 1), OverflowError);
    CHECK_THROWS_AS(checked_mul(INT64_MAX / 2, 3), OverflowError);
}

TEST_CASE("mod_reduce handles negatives") {
    CHECK(mod_reduce(-1, 5) == 4);
    CHECK(mod_reduce(12, 5) == 2);
    CHECK(mod_reduce(0, 2) == 0);
}

TEST_CASE("matrix construction validates the modulus") {
    CHECK_THROWS_AS(FpMatrix(2, 2, 4), InputError);
    CHECK_THROWS_AS(FpMatrix(2, 2, 65537), InputError);
    CHECK_NOTHROW(FpMatrix(2, 2, 65521));
}

TEST_CASE("rank examples") {
    for (std::uint32_t p : {2u, 7u}) CHECK(rank(FpMatrix::identity(5, p)) == 5);
    CHECK(rank(FpMatrix(4, 6, 3)) == 0);
    FpMatrix m(2, 2, 2);
    m.at(0, 0) = m.at(0, 1) = m.at(1, 0) = m.at(1, 1) = 1;
    CHECK(rank(m) == 1);
}

TEST_CASE("kernel examples") {
    CHECK(kernel(FpMatrix::identity(4, 3)).dimension() == 0);
    CHECK(kernel(FpMatrix(3, 3, 5)).dimension() == 3);
    FpMatrix row(1, 2, 2);
    row.at(0, 0) = row.at(0, 1) = 1;
    Subspace k = kernel(row);
    REQUIRE(k.dimension() == 1);
    CHECK(k.contains(std::vector<std::uint32_t>{1, 1}));
}

TEST_CASE("span examples") {
    Subspace two = span_of({{1, 0}, {0, 1}}, 2, 3);
    CHECK(two.dimension() == 2);
    Subspace one = span_of({{1, 1}, {2, 2}}, 2, 3);
    CHECK(one.dimension() == 1);
    CHECK(span_of({}, 4, 5).dimension() == 0);
}

TEST_CASE("containment examples") {
    Subspace zero(3, 2);
    CHECK(zero.contains(std::vector<std::uint32_t>{0, 0, 0}));
    CHECK_FALSE(zero.contains(std::vector<std::uint32_t>{1, 0, 0}));
    Subspace full = span_of({{1, 0}, {0, 1}}, 2, 5);
    CHECK(full.contains(std::vector<std::uint32_t>{3, 4}));
    Subspace line = span_of({{1, 0}}, 2, 5);
    CHECK_FALSE(line.contains(std::vector<std::uint32_t>{0, 1}));
    CHECK_THROWS_AS(line.contains(std::vector<std::uint32_t>{1, 0, 0}), InputError);
}

TEST_CASE("rank plus nullity is the column count") {
    std::mt19937_64 rng(99);
    for (std::uint32_t p : {2u, 3u, 5u, 7u})
        for (int trial = 0; trial < 30; ++trial) {
            int rows = 1 + static_cast<int>(rng() % 24);
            int cols = 1 + static_cast<int>(rng() % 24);
            FpMatrix m(rows, cols, p);
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < cols; ++j) m.at(i, j) = static_cast<std::uint32_t>(rng() % p);
            CHECK(rank(m) + kernel(m).dimension() == cols);
        }
}

TEST_CASE("span is order independent and contains its generators") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        std::uint32_t p = trial % 2 ? 3 : 2;
        int dim = 2 + static_cast<int>(rng() % 10);
        std::vector<std::vector<std::uint32_t>> vecs(1 + rng() % 6,
                                                     std::vector<std::uint32_t>(dim));
        for (auto& v : vecs)
            for (auto& x : v) x = static_cast<std::uint32_t>(rng() % p);
        Subspace direct = span_of(vecs, dim, p);
        std::vector<std::vector<std::uint32_t>> rev(vecs.rbegin(), vecs.rend());
        CHECK(span_of(rev, dim, p) == direct);
        for (const auto& v : vecs) CHECK(direct.contains(v));
    }
}

TEST_CASE("sum and intersection dimensions are dual") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        std::uint32_t p = trial % 2 ? 5 : 2;
        int dim = 3 + static_cast<int>(rng() % 8);
        auto random_space = [&] {
            std::vector<std::vector<std::uint32_t>> vecs(1 + rng() % 4,
                                                         std::vector<std::uint32_t>(dim));
            for (auto& v : vecs)
                for (auto& x : v) x = static_cast<std::uint32_t>(rng() % p);
            return span_of(vecs, dim, p);
        };
        Subspace a = random_space(), b = random_space();
        Subspace u = sum(a, b), i = intersect(a, b);
        CHECK(u.dimension() + i.dimension() == a.dimension() + b.dimension());
        CHECK(a.contains(i));
        CHECK(b.contains(i));
        CHECK(u.contains(a));
        CHECK(u.contains(b));
        for (const auto& v : i.basis()) {
            CHECK(a.contains(v));
            CHECK(b.contains(v));
        }
    }
}

TEST_CASE("matrix product respects the modulus") {
    FpMatrix a(2, 3, 7), b(3, 2, 7);
    int v = 1;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) a.at(i, j) = v++ % 7;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j) b.at(i, j) = v++ % 7;
    FpMatrix c = a.multiply(b);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            std::uint64_t want = 0;
            for (int k = 0; k < 3; ++k) want += a.at(i, k) * b.at(k, j);
            CHECK(c.at(i, j) == want % 7);
        }
    CHECK_THROWS_AS(a.multiply(a), InputError);
}

} // TEST_SUITE
