#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bicov/linalg.hpp"

using namespace bicov;

namespace {

CMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    CMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = cplx(u(rng), u(rng));
    return m;
}

// independent oracle: naive triple loop
CMatrix matmul_oracle(const CMatrix& a, const CMatrix& b) {
    CMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            cplx s = 0.0;
            for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
            c(i, j) = s;
        }
    return c;
}

} // namespace

TEST_CASE("matmul basics") {
    std::mt19937 rng(7);
    const CMatrix a = random_matrix(3, 3, rng);
    CHECK((matmul(CMatrix::identity(3), a) - a).max_abs() == 0.0);

    CMatrix swap(2, 2);
    swap(0, 1) = 1.0;
    swap(1, 0) = 1.0;
    CHECK((matmul(swap, swap) - CMatrix::identity(2)).max_abs() == 0.0);

    const CMatrix b = random_matrix(3, 3, rng);
    CHECK((matmul(a, b) - matmul_oracle(a, b)).max_abs() < 1e-14);

    CHECK_THROWS_AS(matmul(random_matrix(2, 3, rng), random_matrix(2, 3, rng)), std::invalid_argument);
}

TEST_CASE("kron convention and identities") {
    std::mt19937 rng(11);
    CHECK((kron(CMatrix::identity(2), CMatrix::identity(3)) - CMatrix::identity(6)).max_abs() == 0.0);

    const CMatrix a = random_matrix(2, 2, rng), b = random_matrix(2, 2, rng);
    const CMatrix c = random_matrix(2, 2, rng), d = random_matrix(2, 2, rng);
    // mixed product: (A⊗B)(C⊗D) = AC⊗BD
    CHECK((matmul(kron(a, b), kron(c, d)) - kron(matmul(a, c), matmul(b, d))).max_abs() < 1e-14);

    CMatrix two(1, 1);
    two(0, 0) = 2.0;
    CHECK((kron(two, b) - b * cplx{2.0}).max_abs() == 0.0);

    // index convention: (A⊗B)^{ik}_{jl} = A_ij B_kl
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l)
                    CHECK(std::abs(kron(a, b)(i * 2 + k, j * 2 + l) - a(i, j) * b(k, l)) == 0.0);
}

TEST_CASE("rank and nullspace") {
    CHECK(rank(CMatrix(3, 3)) == 0);
    CHECK(nullspace(CMatrix(3, 3)).cols() == 3);

    CHECK(rank(CMatrix::identity(4)) == 4);
    CHECK(nullspace(CMatrix::identity(4)).cols() == 0);

    CMatrix ones(2, 2);
    ones(0, 0) = ones(0, 1) = ones(1, 0) = ones(1, 1) = 1.0;
    CHECK(rank(ones) == 1);
    const CMatrix ns = nullspace(ones);
    REQUIRE(ns.cols() == 1);
    // spanned by (1, −1): components sum to zero
    CHECK(std::abs(ns(0, 0) + ns(1, 0)) < 1e-12);
    CHECK(std::abs(ns(0, 0)) > 0.1);
}

TEST_CASE("rank properties on random instances") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        const CMatrix a = random_matrix(4, 6, rng);
        CHECK(rank(a) == rank(a.transpose()));
        // make it rank deficient: duplicate a column combination
        CMatrix b = a;
        for (std::size_t i = 0; i < 4; ++i) b(i, 5) = b(i, 0) + b(i, 1);
        const CMatrix ns = nullspace(b, 1e-9);
        REQUIRE(ns.cols() >= 1);
        const CMatrix prod = matmul(b, ns);
        CHECK(prod.max_abs() <= 10.0 * 1e-9 * b.max_abs());
        CHECK(rank(b) + ns.cols() == b.cols());
    }
}

TEST_CASE("same_column_space") {
    std::mt19937 rng(31);
    const CMatrix u = random_matrix(4, 2, rng);
    CMatrix p(2, 2); // invertible
    p(0, 0) = 1.0;
    p(0, 1) = 2.0;
    p(1, 1) = 1.0;
    CHECK(same_column_space(u, matmul(u, p)));

    CMatrix e1(2, 1), e2(2, 1);
    e1(0, 0) = 1.0;
    e2(1, 0) = 1.0;
    CHECK_FALSE(same_column_space(e1, e2));

    CMatrix v1(2, 1), v2(2, 1);
    v1(0, 0) = v1(1, 0) = 1.0;
    v2(0, 0) = v2(1, 0) = 2.0;
    CHECK(same_column_space(v1, v2));

    CHECK_THROWS_AS(same_column_space(CMatrix(2, 1), CMatrix(3, 1)), std::invalid_argument);
}
