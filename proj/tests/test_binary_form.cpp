#include <doctest.h>

#include <random>

#include "k3lat/binary_form.hpp"

using namespace k3lat;

namespace {

// random GL2(Z) change of basis applied to a form
BinaryQuadraticForm random_equivalent(const BinaryQuadraticForm& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> small(-3, 3);
    Int p, q, r, s;
    do {
        p = small(rng);
        q = small(rng);
        r = small(rng);
        s = small(rng);
    } while (abs(p * s - q * r) != 1);
    // M^t G M for M = [[p,q],[r,s]]
    Int a = f.a * p * p + 2 * f.b * p * r + f.c * r * r;
    Int b = f.a * p * q + f.b * (p * s + q * r) + f.c * r * s;
    Int c = f.a * q * q + 2 * f.b * q * s + f.c * s * s;
    return {a, b, c};
}

} // namespace

TEST_CASE("reduce_form examples") {
    CHECK(reduce_form({2, 0, 4}) == BinaryQuadraticForm{2, 0, 4});
    BinaryQuadraticForm r = reduce_form({4, 4, 16});
    CHECK(r == BinaryQuadraticForm{4, 0, 12});
    CHECK(r.determinant() == 48);
    CHECK(reduce_form({8, 4, 8}) == BinaryQuadraticForm{8, 4, 8});
}

TEST_CASE("reduce_form boundary representatives") {
    // 2b = -a must land on the +a/2 side
    CHECK(reduce_form({2, -1, 2}) == BinaryQuadraticForm{2, 1, 2});
    CHECK(reduce_form({4, -2, 4}) == BinaryQuadraticForm{4, 2, 4});
    CHECK(reduce_form({6, -3, 8}) == BinaryQuadraticForm{6, 3, 8});
}

TEST_CASE("reduce_form rejects bad input") {
    CHECK_THROWS_AS(reduce_form({2, 3, 2}), DomainError);   // indefinite
    CHECK_THROWS_AS(reduce_form({-2, 0, 4}), DomainError);  // negative a
    CHECK_THROWS_AS(reduce_form({3, 0, 4}), DomainError);   // odd diagonal
}

TEST_CASE("enumerate_even_forms") {
    auto forms3 = enumerate_even_forms(3);
    REQUIRE(forms3.size() == 1);
    CHECK(forms3[0] == BinaryQuadraticForm{2, 1, 2});

    auto forms4 = enumerate_even_forms(4);
    REQUIRE(forms4.size() == 1);
    CHECK(forms4[0] == BinaryQuadraticForm{2, 0, 2});

    auto forms48 = enumerate_even_forms(48);
    REQUIRE(forms48.size() == 4);
    CHECK(forms48[0] == BinaryQuadraticForm{2, 0, 24});
    CHECK(forms48[1] == BinaryQuadraticForm{4, 0, 12});
    CHECK(forms48[2] == BinaryQuadraticForm{6, 0, 8});
    CHECK(forms48[3] == BinaryQuadraticForm{8, 4, 8});
}

TEST_CASE("round-trip through random unimodular change of basis") {
    std::mt19937_64 rng(777);
    for (Int d : {Int(3), Int(12), Int(48), Int(96), Int(15)}) {
        auto forms = enumerate_even_forms(d);
        for (const auto& f : forms) {
            for (int iter = 0; iter < 20; ++iter) {
                BinaryQuadraticForm g = random_equivalent(f, rng);
                CHECK(g.determinant() == d);
                BinaryQuadraticForm back = reduce_form(g);
                CHECK(back == f);
                CHECK(back.is_reduced());
                CHECK(back.is_even());
                // reduction is idempotent
                CHECK(reduce_form(back) == back);
            }
        }
    }
}
