#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hwlab/errors.hpp"
#include "hwlab/symfunc.hpp"

#include "oracles.hpp"

using namespace hwlab;
using namespace hwlab::symfunc;

namespace {
std::vector<Rational> rats(std::initializer_list<long> xs) {
    std::vector<Rational> v;
    for (long x : xs) v.push_back(Rational(x));
    return v;
}
} // namespace

TEST_CASE("exponent tuples must be nondecreasing and nonnegative") {
    CHECK_NOTHROW(ExponentTuple({0, 2, 2, 5}));
    CHECK_THROWS_AS(ExponentTuple(std::vector<int>{}), ArityError);
    CHECK_THROWS_AS(ExponentTuple({2, 1}), DomainError);
    CHECK_THROWS_AS(ExponentTuple({-1, 0}), DomainError);
    CHECK(ExponentTuple({1, 1, 3}).has_repeat());
    CHECK_FALSE(ExponentTuple({0, 1, 3}).has_repeat());
}

TEST_CASE("elementary symmetric polynomials") {
    CHECK(elementary(0, rats({5, 7})) == 1);
    CHECK(elementary(2, rats({1, 2, 3})) == 11);
    CHECK(elementary(3, rats({1, 2})) == 0);
    CHECK_THROWS_AS(elementary(-1, rats({1})), DomainError);

    oracle::SplitMix64 g(101);
    for (int rep = 0; rep < 25; ++rep) {
        const int m = 1 + static_cast<int>(g.next() % 5);
        std::vector<Rational> a;
        for (int i = 0; i < m; ++i) a.push_back(rational_from_bits(g.next(), 6, 4));
        const auto all = elementary_all(a);
        REQUIRE(static_cast<int>(all.size()) == m + 1);
        for (int l = 0; l <= m; ++l) {
            CHECK(all[static_cast<size_t>(l)] == testref::brute_elementary(l, a));
            CHECK(elementary(l, a) == all[static_cast<size_t>(l)]);
        }
    }
}

TEST_CASE("complete homogeneous polynomials") {
    CHECK(complete_homogeneous(0, rats({9, 4, 4})) == 1);
    CHECK(complete_homogeneous(2, rats({1, 2})) == 7);
    CHECK(complete_homogeneous(5, rats({1, 2, 3})) ==
          testref::brute_complete_homogeneous(5, rats({1, 2, 3})));

    oracle::SplitMix64 g(103);
    for (int rep = 0; rep < 20; ++rep) {
        const int m = 1 + static_cast<int>(g.next() % 4);
        std::vector<Rational> a;
        for (int i = 0; i < m; ++i) a.push_back(rational_from_bits(g.next(), 5, 3));
        const auto h = complete_homogeneous_upto(6, a);
        for (int l = 0; l <= 6; ++l)
            CHECK(h[static_cast<size_t>(l)] == testref::brute_complete_homogeneous(l, a));
    }
}

TEST_CASE("Newton recurrence couples e and h") {
    oracle::SplitMix64 g(107);
    for (int rep = 0; rep < 15; ++rep) {
        const int m = 2 + static_cast<int>(g.next() % 3);
        std::vector<Rational> a;
        for (int i = 0; i < m; ++i) a.push_back(rational_from_bits(g.next(), 7, 4));
        const auto e = elementary_all(a);
        const auto h = complete_homogeneous_upto(8, a);
        for (int l = 1; l <= 8; ++l) {
            Rational s(0);
            for (int i = 0; i <= std::min(l, m); ++i) {
                const Rational term = e[static_cast<size_t>(i)] * h[static_cast<size_t>(l - i)];
                s += (i % 2) ? -term : term;
            }
            CHECK(s == 0);
        }
    }
}

TEST_CASE("Schur values, both determinant forms") {
    CHECK(schur_bialternant(ExponentTuple({0, 2}), rats({1, 2})) == 3);
    CHECK(schur_jacobi_trudi(ExponentTuple({0, 2}), rats({1, 2})) == 3);
    CHECK(schur_bialternant(ExponentTuple({1, 1}), rats({1, 2})) == 0);
    CHECK(schur_jacobi_trudi(ExponentTuple({1, 1}), rats({1, 2})) == 0);
    CHECK_THROWS_AS(schur_bialternant(ExponentTuple({0, 1}), rats({3, 3})), DistinctnessError);

    // Staircase exponents give exactly the Vandermonde ratio 1.
    CHECK(schur_bialternant(ExponentTuple({0, 1, 2, 3}), rats({1, 2, 5, 9})) == 1);

    // Arity mismatch.
    CHECK_THROWS_AS(schur_bialternant(ExponentTuple({0, 1, 2}), rats({1, 2})), ArityError);
    CHECK_THROWS_AS(schur_jacobi_trudi(ExponentTuple({0, 1, 2}), rats({1, 2})), ArityError);
}

TEST_CASE("bialternant equals Jacobi-Trudi on distinct tuples") {
    oracle::SplitMix64 g(109);
    for (int rep = 0; rep < 40; ++rep) {
        const int m = 2 + static_cast<int>(g.next() % 4);
        const auto a = testref::rand_distinct_positive(g, m, 9, 4);
        std::vector<int> lam;
        int v = static_cast<int>(g.next() % 3);
        for (int k = 0; k < m; ++k) {
            lam.push_back(v);
            v += 1 + static_cast<int>(g.next() % 2); // strictly increasing, <= 8 total
        }
        const ExponentTuple lt(lam);
        const Rational s = schur_bialternant(lt, a);
        CHECK(s == schur_jacobi_trudi(lt, a));
        CHECK(schur(lt, a) == s);
    }
}

TEST_CASE("schur dispatch falls back to Jacobi-Trudi on repeats") {
    const auto a = rats({2, 2, 5});
    const ExponentTuple lam({0, 1, 3});
    CHECK(schur(lam, a) == schur_jacobi_trudi(lam, a));
}

TEST_CASE("h and e appear as Schur polynomials") {
    oracle::SplitMix64 g(113);
    for (int rep = 0; rep < 20; ++rep) {
        const int m = 2 + static_cast<int>(g.next() % 3);
        const auto a = testref::rand_distinct_positive(g, m, 8, 4);

        // h_l = s_{(0,...,m-2,m-1+l)}
        for (int l = 0; l <= 5; ++l) {
            std::vector<int> lam;
            for (int k = 0; k <= m - 2; ++k) lam.push_back(k);
            lam.push_back(m - 1 + l);
            CHECK(schur_jacobi_trudi(ExponentTuple(lam), a) == complete_homogeneous(l, a));
        }
        // e_{m-l} = s_{(0,...,l-1,l+1,...,m)}
        for (int l = 0; l < m; ++l) {
            std::vector<int> lam;
            for (int k = 0; k < l; ++k) lam.push_back(k);
            for (int k = l + 1; k <= m; ++k) lam.push_back(k);
            CHECK(schur(ExponentTuple(lam), a) == elementary(m - l, a));
        }
    }
}

TEST_CASE("Vandermonde determinant") {
    CHECK(vandermonde_det(rats({1, 2, 3})) == 2);
    CHECK(vandermonde_det(rats({7, 7})) == 0);
    CHECK(vandermonde_det(rats({1, 2})) == 1);
    CHECK(vandermonde_det(rats({4})) == 1);
}

TEST_CASE("elementary matrix and its closed-form inverse") {
    const auto a12 = rats({1, 2});
    const Mat E = elementary_matrix(a12);
    CHECK(E.at(0, 0) == 1);
    CHECK(E.at(0, 1) == 1);
    CHECK(E.at(1, 0) == 2);
    CHECK(E.at(1, 1) == 1);
    CHECK(bareiss_det(E) == -1);

    const Mat Einv = elementary_matrix_inverse(a12);
    CHECK(Einv.at(0, 0) == -1);
    CHECK(Einv.at(0, 1) == 1);
    CHECK(Einv.at(1, 0) == 2);
    CHECK(Einv.at(1, 1) == -1);

    CHECK_THROWS_AS(elementary_matrix_inverse(rats({3, 3})), DistinctnessError);

    oracle::SplitMix64 g(127);
    for (int rep = 0; rep < 15; ++rep) {
        const int m = 2 + static_cast<int>(g.next() % 5);
        const auto a = testref::rand_distinct_positive(g, m, 9, 4);
        const Mat M = elementary_matrix(a);

        // Signed Vandermonde determinant identity.
        const int expo = (m * (m - 1) / 2) % 2;
        Rational want = vandermonde_det(a);
        if (expo) want = -want;
        CHECK(bareiss_det(M) == want);

        CHECK(M * elementary_matrix_inverse(a) == Mat::identity(m));
    }
}

TEST_CASE("exchange identity holds as polynomials") {
    oracle::SplitMix64 g(131);
    for (int rep = 0; rep < 15; ++rep) {
        const int m = 2 + static_cast<int>(g.next() % 3);
        const auto a = testref::rand_distinct_positive(g, m, 8, 4);
        for (int l = 0; l < m; ++l) {
            const auto [lhs, rhs] = vdm_identity_check(a, l);
            CHECK(lhs == rhs);
        }
    }
    // l out of range.
    CHECK_THROWS_AS(vdm_identity_check(rats({1, 2}), 2), DomainError);
    CHECK_THROWS_AS(vdm_identity_check(rats({1, 2}), -1), DomainError);

    // Repeated entry: both sides vanish.
    const auto [l0, r0] = vdm_identity_check(rats({3, 3}), 1);
    CHECK(l0.is_zero());
    CHECK(r0.is_zero());
}

TEST_CASE("h-ratio converges to the dominant entry") {
    const std::vector<double> a = {1.0, 2.0, 3.0};
    const auto h = complete_homogeneous_upto_d(501, a);
    const double ratio = h[501] / h[500];
    CHECK(std::fabs(ratio - 3.0) < 0.01 * 3.0);

    // Float mirror of e_l for coverage.
    CHECK(elementary_d(2, a) == doctest::Approx(11.0));
}
