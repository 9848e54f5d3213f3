#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "dmr/distance.hpp"
#include "dmr/graph.hpp"
#include "dmr/matrix.hpp"
#include "dmr/poly.hpp"
#include "dmr/spectra.hpp"
#include "testutil.hpp"

using dmr::RMatrix;
using dmr::Rational;
using dmr::RPoly;
using dmrtest::Q;
using dmrtest::mat;

namespace {

RMatrix random_matrix(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    RMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = dmr::rat(num(rng), den(rng));
    return m;
}

RMatrix random_symmetric(std::mt19937& rng, std::size_t n) {
    RMatrix m = random_matrix(rng, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) m.at(i, j) = m.at(j, i);
    return m;
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

TEST(Rationals, ExactArithmetic) {
    EXPECT_EQ(dmr::rat(2, 4), dmr::rat(1, 2));
    EXPECT_EQ(dmr::rat(1, 3) + dmr::rat(1, 6), dmr::rat(1, 2));
    EXPECT_EQ(Q("3/2") * Q("4/9"), Q("2/3"));
    EXPECT_EQ(dmr::rat_to_string(dmr::rat(-3, 6)), "-1/2");
    EXPECT_EQ(dmr::rat_to_string(dmr::rat(4, 2)), "2");
    EXPECT_TRUE(dmr::rat_is_integer(dmr::rat(8, 4)));
    EXPECT_FALSE(dmr::rat_is_integer(Q("1/3")));
    EXPECT_DOUBLE_EQ(dmr::rat_to_double(Q("1/4")), 0.25);
}

TEST(Matrices, AlgebraIdentitiesOnRandomInput) {
    std::mt19937 rng(11);
    for (int it = 0; it < 20; ++it) {
        std::size_t n = 2 + it % 4;
        RMatrix a = random_matrix(rng, n), b = random_matrix(rng, n), c = random_matrix(rng, n);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(transpose(a * b), transpose(b) * transpose(a));
        EXPECT_EQ(trace(a * b), trace(b * a));
        EXPECT_EQ(hadamard(a, b), hadamard(b, a));
        EXPECT_EQ(Q("2") * (a + b), Q("2") * a + Q("2") * b);
        EXPECT_EQ(a * RMatrix::identity(n), a);
        EXPECT_EQ(sum_entries(a + b), sum_entries(a) + sum_entries(b));
    }
}

TEST(Matrices, InnerProductAgreesWithTraceForm) {
    std::mt19937 rng(13);
    for (int it = 0; it < 10; ++it) {
        RMatrix a = random_symmetric(rng, 4), b = random_symmetric(rng, 4);
        Rational byhand(0);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) byhand += a.at(i, j) * b.at(i, j);
        // the inner product carries the 1/n normalization of a mean
        EXPECT_EQ(matrix_inner(a, b), byhand / Q("4"));
        EXPECT_EQ(matrix_inner(a, b), trace(a * transpose(b)) / Q("4"));
    }
}

TEST(Matrices, RowReduceAndSpan) {
    std::vector<std::vector<Rational>> rows = {
        {Q("1"), Q("2"), Q("3")},
        {Q("2"), Q("4"), Q("6")},
        {Q("0"), Q("1"), Q("1")},
    };
    auto copy = rows;
    EXPECT_EQ(dmr::row_reduce(copy), 2u);
    std::vector<std::vector<Rational>> basis = {rows[0], rows[2]};
    EXPECT_TRUE(dmr::in_span(basis, {Q("1"), Q("3"), Q("4")}));
    EXPECT_FALSE(dmr::in_span(basis, {Q("0"), Q("0"), Q("1")}));
    EXPECT_TRUE(dmr::in_span(basis, {Q("0"), Q("0"), Q("0")}));
}

TEST(Polynomials, RingOperations) {
    RPoly x = dmr::poly_x();
    RPoly p = x * x - Q("2") * x + dmr::poly_const(Q("1"));  // (x-1)^2
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ(p.eval(Rational(1)), Rational(0));
    EXPECT_EQ(p.eval(Rational(3)), Rational(4));
    EXPECT_EQ(dmr::shift_up(p), x * p);
    RPoly z = p - p;
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.degree(), -1);
}

TEST(CharPoly, FrozenSmallCases) {
    // C4 adjacency: x^4 - 4x^2
    RMatrix c4 = dmr::compute_distances(dmr::cycle_graph(4)).A(1);
    RPoly cp = dmr::char_poly(c4);
    RPoly expected({Q("0"), Q("0"), Q("-4"), Q("0"), Q("1")});
    EXPECT_EQ(cp, expected);
    // identity: (x-1)^3
    RPoly id3 = dmr::char_poly(RMatrix::identity(3));
    EXPECT_EQ(id3, RPoly({Q("-1"), Q("3"), Q("-3"), Q("1")}));
    EXPECT_THROW(dmr::char_poly(RMatrix(2, 3)), std::invalid_argument);
}

TEST(CharPoly, CayleyHamiltonOnRandomMatrices) {
    std::mt19937 rng(17);
    for (std::size_t n = 2; n <= 6; ++n)
        for (int it = 0; it < 4; ++it) {
            RMatrix m = random_matrix(rng, n);
            EXPECT_EQ(dmr::poly_eval_matrix(dmr::char_poly(m), m), RMatrix(n, n));
        }
}

TEST(Eigensolver, KnownSymmetricSpectra) {
    auto dd = dmr::compute_distances(dmr::petersen_graph());
    dmr::SpectralData s = dmr::real_eigenvalues(dd.A(1));
    ASSERT_EQ(s.eigenvalues.size(), 3u);
    EXPECT_TRUE(close(s.eigenvalues[0], 3, 1e-9));
    EXPECT_TRUE(close(s.eigenvalues[1], 1, 1e-9));
    EXPECT_TRUE(close(s.eigenvalues[2], -2, 1e-9));
    EXPECT_EQ(s.multiplicities, (std::vector<int>{1, 5, 4}));
    EXPECT_EQ(s.dim(), 10u);
    EXPECT_EQ(s.expanded().size(), 10u);

    dmr::SpectralData k4 = dmr::real_eigenvalues(dmr::compute_distances(dmr::complete_graph(4)).A(1));
    ASSERT_EQ(k4.eigenvalues.size(), 2u);
    EXPECT_TRUE(close(k4.eigenvalues[0], 3, 1e-9));
    EXPECT_TRUE(close(k4.eigenvalues[1], -1, 1e-9));
    EXPECT_EQ(k4.multiplicities, (std::vector<int>{1, 3}));

    // C5: 2, 2cos(2pi/5) twice, 2cos(4pi/5) twice
    dmr::SpectralData c5 = dmr::real_eigenvalues(dmr::compute_distances(dmr::cycle_graph(5)).A(1));
    ASSERT_EQ(c5.eigenvalues.size(), 3u);
    EXPECT_TRUE(close(c5.eigenvalues[1], 0.6180339887, 1e-8));
    EXPECT_TRUE(close(c5.eigenvalues[2], -1.6180339887, 1e-8));
    EXPECT_EQ(c5.multiplicities, (std::vector<int>{1, 2, 2}));
}

TEST(Eigensolver, SymmetrizingWitnessRoute) {
    // tridiagonal mean-quotient of the Petersen graph, shell sizes as witness
    RMatrix b = mat({{"0", "3", "0"}, {"1", "0", "2"}, {"0", "1", "2"}});
    std::vector<Rational> shells = {Q("1"), Q("3"), Q("6")};
    dmr::SpectralData s = dmr::real_eigenvalues(b, &shells);
    ASSERT_EQ(s.eigenvalues.size(), 3u);
    EXPECT_TRUE(close(s.eigenvalues[0], 3, 1e-9));
    EXPECT_TRUE(close(s.eigenvalues[1], 1, 1e-9));
    EXPECT_TRUE(close(s.eigenvalues[2], -2, 1e-9));

    EXPECT_THROW(dmr::real_eigenvalues(b), std::invalid_argument);  // no witness
    std::vector<Rational> ones = {Q("1"), Q("1"), Q("1")};
    EXPECT_THROW(dmr::real_eigenvalues(b, &ones), std::invalid_argument);  // wrong witness
    std::vector<Rational> neg = {Q("1"), Q("-3"), Q("6")};
    EXPECT_THROW(dmr::real_eigenvalues(b, &neg), std::invalid_argument);
    std::vector<Rational> shortw = {Q("1"), Q("3")};
    EXPECT_THROW(dmr::real_eigenvalues(b, &shortw), std::invalid_argument);
    EXPECT_THROW(dmr::real_eigenvalues(RMatrix(2, 3)), std::invalid_argument);
}

TEST(Eigensolver, ClusteringTolerance) {
    // two nearly equal diagonal entries merge only under the loose tolerance
    RMatrix d = mat({{"1", "0"}, {"0", "10000001/10000000"}});
    dmr::SpectralData tight = dmr::real_eigenvalues(d, nullptr, 1e-12, 1e-9);
    EXPECT_EQ(tight.eigenvalues.size(), 2u);
    dmr::SpectralData loose = dmr::real_eigenvalues(d, nullptr, 1e-12, 1e-6);
    EXPECT_EQ(loose.eigenvalues.size(), 1u);
    EXPECT_EQ(loose.multiplicities, (std::vector<int>{2}));
}

TEST(DistinctEigenvalues, ExactMinimalPolynomialDegree) {
    EXPECT_EQ(dmr::distinct_eigenvalue_count(
                  dmr::compute_distances(dmr::petersen_graph()).A(1)), 3);
    EXPECT_EQ(dmr::distinct_eigenvalue_count(
                  dmr::compute_distances(dmr::cycle_graph(6)).A(1)), 4);
    EXPECT_EQ(dmr::distinct_eigenvalue_count(
                  dmr::compute_distances(dmr::complete_graph(4)).A(1)), 2);
    EXPECT_EQ(dmr::distinct_eigenvalue_count(RMatrix::identity(5)), 1);
    EXPECT_EQ(dmr::distinct_eigenvalue_count(
                  dmr::compute_distances(dmr::catalog("cay_z21")).A(1)), 11);
    RMatrix asym = mat({{"0", "1"}, {"0", "0"}});
    EXPECT_THROW(dmr::distinct_eigenvalue_count(asym), std::invalid_argument);
}
