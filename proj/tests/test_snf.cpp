#include <doctest.h>

#include "arithgraph/errors.hpp"
#include "arithgraph/snf.hpp"
#include "support/corpus.hpp"
#include "support/oracle.hpp"

using namespace arithgraph;
using testsupport::Rng;

namespace {

void check_decomposition(const IntMatrix& m, const SnfDecomposition& snf) {
    CHECK(snf.u * m * snf.v == snf.d);
    CHECK(abs(determinant(snf.u)) == 1);
    CHECK(abs(determinant(snf.v)) == 1);
    CHECK(snf.u * snf.u_inv == IntMatrix::identity(m.rows()));
    CHECK(snf.v * snf.v_inv == IntMatrix::identity(m.cols()));

    const IntVec diag = snf.diagonal();
    bool seen_zero = false;
    for (std::size_t i = 0; i < diag.size(); ++i) {
        CHECK(diag[i] >= 0);
        if (diag[i] == 0) seen_zero = true;
        if (seen_zero) CHECK(diag[i] == 0);
        if (i + 1 < diag.size() && diag[i + 1] != 0) {
            REQUIRE(diag[i] != 0);
            CHECK(diag[i + 1] % diag[i] == 0);
        }
    }
    // off-diagonal entries vanish
    for (std::size_t i = 0; i < snf.d.rows(); ++i)
        for (std::size_t j = 0; j < snf.d.cols(); ++j)
            if (i != j) CHECK(snf.d(i, j) == 0);
}

}  // namespace

TEST_CASE("smith normal form of the identity is the identity") {
    const IntMatrix m = IntMatrix::identity(3);
    const auto snf = smith_normal_form(m);
    CHECK(snf.d == m);
    CHECK(snf.rank == 3);
    check_decomposition(m, snf);
}

TEST_CASE("smith normal form of diag(4,6) is diag(2,12)") {
    // independent count: |Z^2 / im| = 24 with exponent 12
    const auto snf = smith_normal_form(IntMatrix::from({{4, 0}, {0, 6}}));
    CHECK(snf.diagonal() == ivec({2, 12}));
}

TEST_CASE("smith normal form of a rank-2 arithmetical Laplacian") {
    const IntMatrix l1 = IntMatrix::from({{2, -1, -1}, {-1, 5, -1}, {-1, -1, 1}});
    const auto snf = smith_normal_form(l1);
    CHECK(snf.rank == 2);
    const IntVec diag = snf.diagonal();
    CHECK(diag[2] == 0);
    CHECK(diag[1] % diag[0] == 0);
    CHECK(IntVec(diag.begin(), diag.begin() + 2) == testsupport::minors_invariant_prediction(l1));
    check_decomposition(l1, snf);
}

TEST_CASE("smith normal form handles zero and rectangular matrices") {
    const IntMatrix zero(3, 3);
    CHECK(smith_normal_form(zero).rank == 0);

    const IntMatrix wide = IntMatrix::from({{2, 4, 6}, {4, 8, 12}});
    const auto snf = smith_normal_form(wide);
    CHECK(snf.rank == 1);
    check_decomposition(wide, snf);
}

TEST_CASE("random matrices: u m v = d with unimodular transforms and minor gcds") {
    Rng rng(20240811);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + testsupport::rng_below(rng, 5);
        const std::size_t cols = 1 + testsupport::rng_below(rng, 5);
        const IntMatrix m = testsupport::random_matrix(rng, rows, cols, -9, 9);
        const auto snf = smith_normal_form(m);
        check_decomposition(m, snf);

        const IntVec predicted = testsupport::minors_invariant_prediction(m);
        REQUIRE(predicted.size() == snf.rank);
        for (std::size_t i = 0; i < snf.rank; ++i) CHECK(snf.d(i, i) == predicted[i]);
    }
}

TEST_CASE("kernel of the Laplacian with known primitive vector") {
    const IntMatrix l1 = IntMatrix::from({{2, -1, -1}, {-1, 5, -1}, {-1, -1, 1}});
    CHECK(integer_kernel_primitive(l1) == ivec({2, 1, 3}));

    const IntMatrix natural_c3 = IntMatrix::from({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
    CHECK(integer_kernel_primitive(natural_c3) == ivec({1, 1, 1}));
}

TEST_CASE("kernel errors distinguish trivial and large kernels") {
    CHECK_THROWS_WITH_AS(integer_kernel_primitive(IntMatrix::identity(2)),
                         doctest::Contains("NoKernel"), DomainError);
    CHECK_THROWS_WITH_AS(integer_kernel_primitive(IntMatrix(2, 2)),
                         doctest::Contains("NotRankDeficientByOne"), DomainError);
}

TEST_CASE("kernel vector is sign-normalized") {
    // kernel of (1 1) is spanned by (1,-1); first entry must be positive
    const IntMatrix m = IntMatrix::from({{1, 1}});
    const IntVec k = integer_kernel_primitive(m);
    CHECK(k[0] > 0);
    CHECK(k[0] + k[1] == 0);
}

TEST_CASE("solve_integer reproduces the known witness class") {
    const IntMatrix l1 = IntMatrix::from({{2, -1, -1}, {-1, 5, -1}, {-1, -1, 1}});
    const IntVec b = ivec({-4, 5, 1});
    const auto x = solve_integer(l1, b);
    REQUIRE(x.has_value());
    CHECK(l1 * *x == b);

    // any two witnesses differ by a multiple of the kernel vector (2,1,3)
    const IntVec diff = *x - ivec({1, 2, 4});
    CHECK(diff[0] * 3 == diff[2] * 2);
    CHECK(diff[1] * 2 == diff[0]);
}

TEST_CASE("solve_integer on zero right-hand side returns zero") {
    const IntMatrix l1 = IntMatrix::from({{2, -1, -1}, {-1, 5, -1}, {-1, -1, 1}});
    const auto x = solve_integer(l1, IntVec(3));
    REQUIRE(x.has_value());
    CHECK(*x == IntVec(3));
}

TEST_CASE("solve_integer reports unsolvable systems") {
    const IntMatrix l1 = IntMatrix::from({{2, -1, -1}, {-1, 5, -1}, {-1, -1, 1}});
    CHECK_FALSE(solve_integer(l1, ivec({1, 0, 0})).has_value());
    // parity obstruction: 2x = 1 has no integer solution
    CHECK_FALSE(solve_integer(IntMatrix::from({{2}}), ivec({1})).has_value());
}

TEST_CASE("solve_integer succeeds on every consistent random system") {
    Rng rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = 1 + testsupport::rng_below(rng, 4);
        const std::size_t cols = 1 + testsupport::rng_below(rng, 4);
        const IntMatrix m = testsupport::random_matrix(rng, rows, cols, -9, 9);
        IntVec x0(cols);
        for (Int& e : x0) e = static_cast<long>(testsupport::rng_below(rng, 11)) - 5;
        const IntVec b = m * x0;
        const auto x = solve_integer(m, b);
        REQUIRE(x.has_value());
        CHECK(m * *x == b);
    }
}
