#include <doctest.h>

#include <random>

#include "k4/f2linalg.hpp"

using namespace k4;

namespace {

F2Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
    std::bernoulli_distribution bit(0.4);
    F2Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, bit(rng));
    return m;
}

}  // namespace

TEST_CASE("rank: small cases") {
    CHECK(rank(F2Matrix(0, 0)) == 0);
    CHECK(rank(F2Matrix::identity(3)) == 3);
    CHECK(rank(F2Matrix::from_rows({{1, 1}, {1, 1}})) == 1);
    CHECK(rank(F2Matrix(4, 7)) == 0);
}

TEST_CASE("kernel_basis: small cases") {
    CHECK(kernel_basis(F2Matrix::identity(2)).empty());
    CHECK(kernel_basis(F2Matrix(2, 3)).size() == 3);
    auto k = kernel_basis(F2Matrix::from_rows({{1, 1}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0].get(0));
    CHECK(k[0].get(1));
}

TEST_CASE("bitvec: words and popcount across the 64-bit boundary") {
    BitVec v(130);
    v.set(0);
    v.set(63);
    v.set(64);
    v.set(129);
    CHECK(v.popcount() == 4);
    CHECK(v.lowest() == 0);
    v.flip(0);
    CHECK(v.lowest() == 63);
    BitVec w(130);
    w.set(64);
    w.set(129);
    CHECK(v.dot(w) == false);
    v ^= w;
    CHECK(v.popcount() == 1);
    CHECK(BitVec(5).lowest() == 5);
}

TEST_CASE("rank properties on random matrices") {
    std::mt19937 rng(20261016);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = rng() % 40, c = rng() % 90 + 1;
        F2Matrix m = random_matrix(rng, r, c);
        std::size_t rk = rank(m);
        CHECK(rk == rank(m.transpose()));
        auto ker = kernel_basis(m);
        CHECK(rk + ker.size() == c);
        for (const auto& v : ker) CHECK_FALSE(m.apply(v).any());
        Echelon e(c);
        for (std::size_t i = 0; i < r; ++i) e.insert(m.row(i));
        CHECK(e.rank() == rk);
        for (std::size_t i = 0; i < r; ++i) CHECK(e.contains(m.row(i)));
    }
}

TEST_CASE("rref: pivots are leftmost and rows reduced") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        F2Matrix m = random_matrix(rng, 12, 20);
        std::vector<std::size_t> piv;
        F2Matrix r = rref(m, &piv);
        CHECK(piv.size() == rank(m));
        for (std::size_t i = 0; i < piv.size(); ++i) {
            CHECK(r.row(i).lowest() == piv[i]);
            for (std::size_t j = 0; j < piv.size(); ++j) CHECK(r.get(j, piv[i]) == (i == j));
        }
    }
}

TEST_CASE("matrix product is associative and distributes") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        F2Matrix a = random_matrix(rng, 7, 9), b = random_matrix(rng, 9, 5), c = random_matrix(rng, 5, 6);
        F2Matrix b2 = random_matrix(rng, 9, 5);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + b2) == a * b + a * b2);
        CHECK((a * b).transpose() == b.transpose() * a.transpose());
    }
}
