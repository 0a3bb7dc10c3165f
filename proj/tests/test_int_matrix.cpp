#include <doctest.h>

#include <random>

#include "k3lat/int_matrix.hpp"

using namespace k3lat;

namespace {

// independent oracle: cofactor expansion, usable up to ~7x7
Int det_cofactor(const IntMatrix& a) {
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    if (n == 1) return a.at(0, 0);
    Int sum = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (a.at(0, j) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = a.at(r, c);
            }
        }
        Int term = a.at(0, j) * det_cofactor(minor);
        if (j % 2) sum -= term; else sum += term;
    }
    return sum;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, std::size_t m) {
    std::uniform_int_distribution<int> coef(-9, 9);
    IntMatrix a(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) a.at(i, j) = coef(rng);
    return a;
}

void check_snf_contract(const IntMatrix& a) {
    SnfResult r = snf(a);
    CHECK(r.u * a * r.v == r.d);
    CHECK(abs(det(r.u)) == 1);
    CHECK(abs(det(r.v)) == 1);
    CHECK(det(r.u) == r.sign_u);
    CHECK(det(r.v) == r.sign_v);
    auto diag = r.diagonal();
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
        CHECK(diag[i] >= 0);
        if (diag[i] != 0) CHECK(diag[i + 1] % diag[i] == 0);
        else CHECK(diag[i + 1] == 0);
    }
    for (std::size_t i = 0; i < r.d.rows(); ++i)
        for (std::size_t j = 0; j < r.d.cols(); ++j)
            if (i != j) CHECK(r.d.at(i, j) == 0);
}

} // namespace

TEST_CASE("snf of the identity") {
    SnfResult r = snf(IntMatrix::identity(2));
    CHECK(r.d == IntMatrix::identity(2));
    CHECK(r.u * IntMatrix::identity(2) * r.v == r.d);
    CHECK(r.diagonal() == std::vector<Int>{1, 1});
}

TEST_CASE("snf of [[8,4],[4,8]]") {
    IntMatrix a{{8, 4}, {4, 8}};
    SnfResult r = snf(a);
    CHECK(r.diagonal() == std::vector<Int>{4, 12});
    CHECK(r.u * a * r.v == r.d);
}

TEST_CASE("snf of U+<6>") {
    IntMatrix a{{0, 0, 1}, {0, 6, 0}, {1, 0, 0}};
    SnfResult r = snf(a);
    CHECK(r.diagonal() == std::vector<Int>{1, 1, 6});
    CHECK(r.u * a * r.v == r.d);
    CHECK(abs(det(r.u)) == 1);
    CHECK(abs(det(r.v)) == 1);
}

TEST_CASE("snf handles rectangular and rank-deficient input") {
    IntMatrix a{{2, 4, 6}};
    SnfResult r = snf(a);
    CHECK(r.diagonal() == std::vector<Int>{2});
    CHECK(r.u * a * r.v == r.d);
    IntMatrix b{{1, 2}, {2, 4}};
    SnfResult rb = snf(b);
    CHECK(rb.diagonal() == std::vector<Int>{1, 0});
}

TEST_CASE("determinant basics") {
    CHECK(det(IntMatrix::identity(5)) == 1);
    IntMatrix u24{{0, 1, 0}, {1, 0, 0}, {0, 0, 24}};
    CHECK(det(u24) == -24);
    CHECK(det_cofactor(u24) == -24);
    CHECK_THROWS_AS(det(IntMatrix(2, 3)), DimensionError);
}

TEST_CASE("rational inverse") {
    IntMatrix d23{{2, 0}, {0, 3}};
    RatMatrix inv = rational_inverse(d23);
    CHECK(inv.at(0, 0) == Rat(1, 2));
    CHECK(inv.at(1, 1) == Rat(1, 3));

    IntMatrix swap{{0, 1}, {1, 0}};
    CHECK(rational_inverse(swap) == RatMatrix::from_int(swap));

    IntMatrix a{{8, 4}, {4, 8}};
    RatMatrix ainv = rational_inverse(a);
    CHECK(ainv.at(0, 0) == make_rat(8, 48));
    CHECK(ainv.at(0, 1) == make_rat(-4, 48));
    CHECK(ainv * RatMatrix::from_int(a) == RatMatrix::identity(2));

    CHECK_THROWS_AS(rational_inverse(IntMatrix{{1, 1}, {1, 1}}), SingularMatrixError);
    CHECK_THROWS_AS(rational_inverse(IntMatrix(2, 3)), DimensionError);
}

TEST_CASE("random matrices satisfy the snf contract") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int iter = 0; iter < 200; ++iter) {
        IntMatrix a = random_matrix(rng, dim(rng), dim(rng));
        check_snf_contract(a);
        if (a.is_square()) {
            Int d1 = det(a);
            Int d2 = det_via_snf(a);
            CHECK(d1 == d2);
            if (a.rows() <= 5) CHECK(d1 == det_cofactor(a));
            if (d1 != 0) {
                Int prod = 1;
                for (const Int& x : snf(a).diagonal()) prod *= x;
                CHECK(prod == abs(d1));
                RatMatrix inv = rational_inverse(a);
                CHECK(inv * RatMatrix::from_int(a) == RatMatrix::identity(a.rows()));
            }
        }
    }
}

TEST_CASE("signature and kernel") {
    IntMatrix hyp{{0, 1}, {1, 0}};
    auto [pos, neg] = signature(hyp);
    CHECK(pos == 1);
    CHECK(neg == 1);

    IntMatrix a7{{-2, 1}, {1, -2}};
    auto [p2, n2] = signature(a7);
    CHECK(p2 == 0);
    CHECK(n2 == 2);

    IntMatrix m{{2, 4, 6}};
    IntMatrix k = integer_kernel(m);
    CHECK(k.cols() == 2);
    IntMatrix prod = m * k;
    for (std::size_t j = 0; j < prod.cols(); ++j) CHECK(prod.at(0, j) == 0);
    // saturation: (1,1,-1) is in the kernel and must be an integer combination
    // of the basis; check via snf of the basis matrix having unit divisors
    SnfResult r = snf(k);
    CHECK(r.diagonal() == std::vector<Int>{1, 1});
}

TEST_CASE("rank") {
    CHECK(rank(IntMatrix{{1, 2}, {2, 4}}) == 1);
    CHECK(rank(IntMatrix::identity(4)) == 4);
}
