#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hwlab/density.hpp"
#include "hwlab/errors.hpp"
#include "hwlab/moments.hpp"
#include "hwlab/pade.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <set>

using namespace hwlab;
namespace mo = hwlab::moments;

namespace {
AlphaTuple tuple(std::initializer_list<Rational> xs) { return AlphaTuple(std::vector<Rational>(xs)); }
} // namespace

TEST_CASE("Hankel rank of power sums counts distinct atoms") {
    const auto gamma = mo::power_sums(tuple({Rational(2), Rational(1)}), 5);
    REQUIRE(gamma ==
            std::vector<Rational>{Rational(3), Rational(5), Rational(9), Rational(17), Rational(33)});
    CHECK(pade::kronecker_rank(gamma) == 2);

    // One distinct atom, whatever its multiplicity.
    const Rational c(3, 2);
    CHECK(pade::kronecker_rank(mo::power_sums(tuple({c, c}), 3)) == 1);
    CHECK(pade::kronecker_rank(mo::power_sums(tuple({c, c, c}), 7)) == 1);

    // Multiplicity does not inflate the rank.
    CHECK(pade::kronecker_rank(mo::power_sums(tuple({Rational(2), Rational(2), Rational(1)}), 5)) ==
          2);

    CHECK_THROWS_AS(pade::kronecker_rank({Rational(1), Rational(2)}), InsufficientDataError);
    CHECK_THROWS_AS(pade::kronecker_rank({Rational(0), Rational(0), Rational(0)}),
                    InsufficientDataError);
    // Three distinct atoms but only five power sums: no vanishing order in range.
    CHECK_THROWS_AS(
        pade::kronecker_rank(mo::power_sums(tuple({Rational(3), Rational(2), Rational(1)}), 5)),
        InsufficientDataError);
}

TEST_CASE("rank is the distinct count for random tuples") {
    oracle::SplitMix64 g(401);
    const std::vector<Rational> grid = {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2),
                                        Rational(3)};
    for (int rep = 0; rep < 40; ++rep) {
        const int m = 2 + static_cast<int>(g.next() % 4);
        std::vector<Rational> vals;
        for (int i = 0; i < m; ++i)
            vals.push_back(grid[static_cast<size_t>(g.next() % grid.size())]);
        const AlphaTuple a{vals};
        const std::set<Rational> uniq(vals.begin(), vals.end());
        const int d = static_cast<int>(uniq.size());
        if (d < 2) continue;
        CHECK(pade::kronecker_rank(mo::power_sums(a, 2 * d + 1)) == d);
    }
}

TEST_CASE("denominator reconstruction, frozen instance") {
    const auto nu = mo::cumulants(tuple({Rational(2), Rational(1)}), 4);
    const auto [P, Q] = pade::pade_denominator(nu, 2);
    CHECK(P == Poly({Rational(2), Rational(-3), Rational(1)}));
    CHECK(Q == Poly({Rational(-4), Rational(3)}));
    // The denominator roots are the atom values.
    CHECK(P(Rational(1)) == 0);
    CHECK(P(Rational(2)) == 0);
}

TEST_CASE("single atom denominator") {
    const Rational c(5, 4);
    const auto nu = mo::cumulants(tuple({c, c}), 2);
    const auto [P, Q] = pade::pade_denominator(nu, 1);
    CHECK(P == Poly({-c, Rational(1)}));
    CHECK(Q == Poly::constant(Rational(2) * c));
}

TEST_CASE("overstated atom count is singular, bad inputs throw") {
    const Rational c(3, 2);
    CHECK_THROWS_AS(pade::pade_denominator(mo::cumulants(tuple({c, c}), 4), 2),
                    SingularSystemError);
    CHECK_THROWS_AS(pade::pade_denominator({Rational(3), Rational(5, 2)}, 2),
                    InsufficientDataError);
    CHECK_THROWS_AS(pade::pade_denominator({Rational(3)}, 0), DomainError);
}

TEST_CASE("reversed denominator equals the recovered coefficient polynomial") {
    // s^m P(1/s) = F(-s): the two routes to the atoms must agree exactly.
    oracle::SplitMix64 g(409);
    for (int rep = 0; rep < 30; ++rep) {
        const int m = 2 + static_cast<int>(g.next() % 3);
        const AlphaTuple a{testref::rand_distinct_positive(g, m, 8, 4)};

        const auto [P, Q] = pade::pade_denominator(mo::cumulants(a, 2 * m), m);
        REQUIRE(P.degree() == m);
        CHECK(Q.degree() <= m - 1);

        const auto rec = mo::recover_alpha(mo::moments(a, m), m);
        REQUIRE(rec.feasible);
        for (int j = 0; j <= m; ++j) {
            const Rational lhs = P.coeff(m - j);              // coeff of s^j in s^m P(1/s)
            const Rational rhs = rec.F.coeff(j) * rat_pow(Rational(-1), j);  // F(-s)
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("Laurent expansion of Q/P reproduces the power sums") {
    // P(z) sum_{k<=m+1} gamma_k z^-k - Q(z) = O(z^-2), checked exactly after
    // clearing z^{m+1}: the residual polynomial has degree <= m-1.
    oracle::SplitMix64 g(419);
    for (int rep = 0; rep < 30; ++rep) {
        const int m = 1 + static_cast<int>(g.next() % 4);
        const AlphaTuple a{testref::rand_distinct_positive(g, std::max(m, 2), 8, 4)};
        const AlphaTuple use = (m == 1) ? tuple({a[0], a[0]}) : a;
        const int mm = (m == 1) ? 1 : use.size();

        const auto [P, Q] = pade::pade_denominator(mo::cumulants(use, 2 * mm), mm);
        const auto gamma = mo::power_sums(use, mm + 1);

        std::vector<Rational> gc(static_cast<size_t>(mm) + 1);
        for (int j = 0; j <= mm; ++j) gc[static_cast<size_t>(j)] = gamma[static_cast<size_t>(mm - j)];
        const Poly G(std::move(gc));  // sum_k gamma_k z^{m+1-k}

        const Poly U = P * G - Poly::monomial(mm + 1, Rational(1)) * Q;
        CHECK(U.degree() <= mm - 1);
    }
}
