#include <doctest.h>

#include <random>

#include "arith/errors.hpp"
#include "arith/families.hpp"
#include "arith/linalg.hpp"
#include "testutil.hpp"

using namespace arith;
using namespace testutil;

TEST_CASE("laplacian matches the defining pattern") {
    Multigraph k3 = complete_graph(3);
    RatMatrix l = laplacian(k3, rv({"2", "2", "2"}));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(l(i, j) == (i == j ? Rat(2) : Rat(-1)));

    RatMatrix p2 = laplacian(path_graph(2), rv({"1", "1"}));
    CHECK(p2(0, 0) == Rat(1));
    CHECK(p2(0, 1) == Rat(-1));
    CHECK(p2(1, 0) == Rat(-1));
    CHECK(p2(1, 1) == Rat(1));

    CHECK_THROWS_AS(laplacian(k3, rv({"1", "1"})), InvalidInput);
}

TEST_CASE("the wedge example Laplacian has the expected 5x5 pattern") {
    RatMatrix l = laplacian(k3_wedge_k3(), rv({"2", "3", "2", "3", "7"}));
    // Rows x1, x2, v, y1, y2.
    const int want[5][5] = {{2, -1, -1, 0, 0},
                            {-1, 3, -1, 0, 0},
                            {-1, -1, 2, -1, -1},
                            {0, 0, -1, 3, -1},
                            {0, 0, -1, -1, 7}};
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) CHECK(l(i, j) == Rat(want[i][j]));
    CHECK(det(l) == Rat(0));
}

TEST_CASE("determinant golden values") {
    CHECK(det(laplacian(path_graph(2), rv({"1", "1"}))) == Rat(0));
    CHECK(det(laplacian(complete_graph(3), rv({"2", "2", "2"}))) == Rat(0));
    CHECK(det(laplacian(complete_graph(3), rv({"3", "2", "2"}))) == Rat(3));

    // Hand-checkable integer matrix.
    IntMatrix m(2, 2);
    m(0, 0) = 2; m(0, 1) = 7; m(1, 0) = 1; m(1, 1) = 5;
    CHECK(det(m) == 3);
}

TEST_CASE("Bareiss agrees with cofactor expansion on random rational matrices") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng() % 5);
        RatMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = random_rat(rng, -6, 6);
        CHECK(det(m) == cofactor_det(m));
    }
}

TEST_CASE("determinant is multiplicative on block-diagonal matrices and flips under row swap") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        int m = 1 + static_cast<int>(rng() % 3);
        RatMatrix a(n, n), b(m, m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = random_rat(rng, -5, 5);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) b(i, j) = random_rat(rng, -5, 5);
        RatMatrix block(n + m, n + m);
        for (int i = 0; i < n + m; ++i)
            for (int j = 0; j < n + m; ++j) block(i, j) = Rat(0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) block(i, j) = a(i, j);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) block(n + i, n + j) = b(i, j);
        CHECK(det(block) == det(a) * det(b));

        RatMatrix swapped = a;
        swapped.row(0).swap(swapped.row(1));
        CHECK(det(swapped) == -det(a));
    }
}

TEST_CASE("kernel_vector finds the positive primitive generator") {
    auto z = kernel_vector(laplacian(k3_wedge_k3(), rv({"2", "3", "2", "3", "7"})));
    REQUIRE(z.has_value());
    CHECK(equal(*z, iv({4, 3, 5, 2, 1})));

    for (const Multigraph& g :
         {complete_graph(3), cycle_graph(4), cycle_graph(5), six_vertex_tree(), k3_wedge_k3()}) {
        auto ones = kernel_vector(laplacian(g, to_rational(g.degree_vector())));
        REQUIRE(ones.has_value());
        for (Eigen::Index i = 0; i < ones->size(); ++i) CHECK((*ones)(i) == 1);
    }

    auto star = kernel_vector(laplacian(star_graph(3), rv({"1", "2", "3", "6"})));
    REQUIRE(star.has_value());
    CHECK(equal(*star, iv({6, 3, 2, 1})));
}

TEST_CASE("kernel_vector is exact and absent when it should be") {
    // Full rank.
    CHECK_FALSE(kernel_vector(laplacian(complete_graph(3), rv({"3", "2", "2"}))).has_value());
    // Kernel exists but is not positive.
    RatMatrix m(2, 2);
    m(0, 0) = Rat(1); m(0, 1) = Rat(1); m(1, 0) = Rat(1); m(1, 1) = Rat(1);
    CHECK_FALSE(kernel_vector(m).has_value());
    // Rank deficiency of 2.
    RatMatrix z(2, 2);
    z(0, 0) = z(0, 1) = z(1, 0) = z(1, 1) = Rat(0);
    CHECK_FALSE(kernel_vector(z).has_value());

    // When present, M z = 0 exactly.
    auto k = kernel_vector(laplacian(cycle_graph(4), rv({"1/3", "6", "5/3", "9"})));
    REQUIRE(k.has_value());
    CHECK(equal(*k, iv({15, 3, 3, 2})));
    RatVector residue = apply(laplacian(cycle_graph(4), rv({"1/3", "6", "5/3", "9"})),
                              to_rational(*k));
    CHECK(is_zero(residue));
}

TEST_CASE("smith normal form golden values") {
    CHECK(smith_normal_form(IntMatrix::Identity(3, 3)) == std::vector<Int>{1, 1, 1});

    IntMatrix d23 = IntMatrix::Zero(2, 2);
    d23(0, 0) = 2;
    d23(1, 1) = 3;
    CHECK(smith_normal_form(d23) == std::vector<Int>{1, 6});

    // Triangle Laplacian with one row and column removed counts its spanning trees.
    IntMatrix red(2, 2);
    red(0, 0) = 2; red(0, 1) = -1; red(1, 0) = -1; red(1, 1) = 2;
    CHECK(smith_normal_form(red) == std::vector<Int>{1, 3});

    IntMatrix zero = IntMatrix::Zero(2, 3);
    CHECK(smith_normal_form(zero) == std::vector<Int>{0, 0});
}

TEST_CASE("smith normal form: chain, transforms, and determinant product") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        int m = 2 + static_cast<int>(rng() % 3);
        IntMatrix a(n, m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j)
                a(i, j) = Int(static_cast<long>(rng() % 13) - 6);

        SmithDecomposition snf = smith_normal_form_with_transforms(a);
        for (size_t k = 0; k + 1 < snf.factors.size(); ++k) {
            if (snf.factors[k + 1] == 0) continue;
            REQUIRE(snf.factors[k] != 0);
            CHECK(snf.factors[k + 1] % snf.factors[k] == 0);
        }
        CHECK(abs(det(snf.left)) == 1);
        CHECK(abs(det(snf.right)) == 1);
        IntMatrix prod = multiply(multiply(snf.left, a), snf.right);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) {
                Int want = (i == j && i < static_cast<int>(snf.factors.size()))
                               ? snf.factors[static_cast<size_t>(i)]
                               : Int(0);
                CHECK(prod(i, j) == want);
            }

        if (n == m) {
            Int product(1);
            for (const Int& f : snf.factors) product *= f;
            CHECK(product == abs(det(a)));
        }
    }
}

TEST_CASE("integer kernel basis spans the orthogonal lattice") {
    IntMatrix b = integer_kernel_basis(iv({1, 1}));
    REQUIRE(b.rows() == 1);
    CHECK(b(0, 0) == 1);
    CHECK(b(0, 1) == -1);

    for (const IntVector& r : {iv({1, 1, 1}), iv({4, 3, 5, 2, 1}), iv({6, 3, 2, 1}),
                               iv({15, 3, 3, 2}), iv({7, 11})}) {
        IntMatrix basis = integer_kernel_basis(r);
        REQUIRE(basis.rows() == r.size() - 1);
        for (Eigen::Index i = 0; i < basis.rows(); ++i) {
            Int acc(0);
            for (Eigen::Index j = 0; j < r.size(); ++j) acc += basis(i, j) * r(j);
            CHECK(acc == 0);
        }
        // Together with any w such that w . r = 1, the rows must generate the
        // full integer lattice.
        IntVector w = IntVector::Zero(r.size());
        Int g = r(0);
        w(0) = 1;
        for (Eigen::Index i = 1; i < r.size(); ++i) {
            Int a, b, g2;
            mpz_gcdext(g2.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t(),
                       r(i).get_mpz_t());
            for (Eigen::Index j = 0; j < i; ++j) w(j) *= a;
            w(i) = b;
            g = g2;
        }
        REQUIRE(dot(w, r) == 1);
        IntMatrix stacked(r.size(), r.size());
        for (Eigen::Index j = 0; j < r.size(); ++j) stacked(0, j) = w(j);
        for (Eigen::Index i = 0; i < basis.rows(); ++i)
            for (Eigen::Index j = 0; j < r.size(); ++j) stacked(i + 1, j) = basis(i, j);
        std::vector<Int> factors = smith_normal_form(stacked);
        for (const Int& f : factors) CHECK(f == 1);
    }

    CHECK_THROWS_AS(integer_kernel_basis(iv({2, 4})), InvalidInput);
}

TEST_CASE("solve returns the unique exact solution or detects inconsistency") {
    RatMatrix a(3, 2);
    a(0, 0) = Rat(1); a(0, 1) = Rat(0);
    a(1, 0) = Rat(0); a(1, 1) = Rat(1);
    a(2, 0) = Rat(1); a(2, 1) = Rat(1);
    RatVector b(3);
    b(0) = Rat(Int(1), Int(2)); b(1) = Rat(3); b(2) = Rat(Int(7), Int(2));
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK((*x)(0) == Rat(Int(1), Int(2)));
    CHECK((*x)(1) == Rat(3));

    b(2) = Rat(0);
    CHECK_FALSE(solve(a, b).has_value());
}
