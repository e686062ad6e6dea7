#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hwlab/density.hpp"
#include "hwlab/errors.hpp"
#include "hwlab/pfcomp.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <set>

using namespace hwlab;
namespace pc = hwlab::pfcomp;

namespace {
AlphaTuple tuple(std::initializer_list<Rational> xs) { return AlphaTuple(std::vector<Rational>(xs)); }

Poly xpow(int n) { return Poly::monomial(n, Rational(1)); }

// Scale tuple whose rates are r0 + k*d, k = 0..m-1.
AlphaTuple ap_rate_tuple(const Rational& r0, const Rational& d, int m) {
    std::vector<Rational> v;
    for (int k = 0; k < m; ++k) v.push_back(Rational(1) / (r0 + Rational(k) * d));
    return AlphaTuple(std::move(v));
}
} // namespace

TEST_CASE("lattice point enumeration") {
    const auto s = pc::simplex_points(3, {2});
    CHECK(s.m == 3);
    REQUIRE(s.points.size() == 6);
    const std::vector<std::vector<int>> expect = {{0, 0, 2}, {0, 1, 1}, {0, 2, 0},
                                                  {1, 0, 1}, {1, 1, 0}, {2, 0, 0}};
    CHECK(s.points == expect);

    const auto t = pc::simplex_points(2, {2, 1, 2});  // dup totals collapse
    CHECK(t.K == std::vector<int>{1, 2});
    const std::vector<std::vector<int>> expect2 = {{0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}};
    CHECK(t.points == expect2);

    CHECK(pc::simplex_points(4, {1}).points.size() == 4);

    CHECK_THROWS_AS(pc::simplex_points(1, {2}), ArityError);
    CHECK_THROWS_AS(pc::simplex_points(2, {}), DomainError);
    CHECK_THROWS_AS(pc::simplex_points(2, {0}), DomainError);
    CHECK_THROWS_AS(pc::simplex_points(2, {2000000}, 1000000), SizeError);
}

TEST_CASE("numerator evaluations, constant across the simplex when PF") {
    const auto evals = pc::numerator_evaluations(tuple({Rational(1), Rational(1, 2)}), xpow(2));
    REQUIRE(evals.size() == 3);
    for (const auto& [k, v] : evals) CHECK(v == 8);
    CHECK(evals[0].first == std::vector<int>{0, 2});
    CHECK(evals[2].first == std::vector<int>{2, 0});
}

TEST_CASE("numerator evaluations, frozen unequal pair") {
    const auto evals = pc::numerator_evaluations(
        tuple({Rational(1), Rational(1, 2), Rational(1, 4)}), xpow(2));
    REQUIRE(evals.size() == 6);
    CHECK(evals[0].first == std::vector<int>{0, 0, 2});
    CHECK(evals[0].second == -1280);
    CHECK(evals[1].first == std::vector<int>{0, 1, 1});
    CHECK(evals[1].second == -512);
}

TEST_CASE("degree-one composition is constant trivially") {
    const auto evals = pc::numerator_evaluations(tuple({Rational(1), Rational(1, 2)}), xpow(1));
    REQUIRE(evals.size() == 2);
    CHECK(evals[0].second == 2);
    CHECK(evals[1].second == 2);
}

TEST_CASE("evaluation preconditions") {
    CHECK_THROWS_AS(pc::numerator_evaluations(tuple({Rational(1), Rational(1)}), xpow(2)),
                    DistinctnessError);
    CHECK_THROWS_AS(pc::numerator_evaluations(tuple({Rational(1), Rational(1, 2)}),
                                              Poly({Rational(1), Rational(1)})),
                    DomainError);
    // Rates 1,2,3: points (0,2,0) and (1,0,1) share the pole at 4.
    CHECK_THROWS_AS(pc::numerator_evaluations(
                        tuple({Rational(1), Rational(1, 2), Rational(1, 3)}), xpow(2)),
                    CollisionError);
}

TEST_CASE("square of the basic instance is a density multiple") {
    const AlphaTuple a = tuple({Rational(1), Rational(1, 2)});
    const auto v = pc::pf_post_composition(a, xpow(2));
    CHECK(v.is_pf);
    CHECK_FALSE(v.is_density);
    CHECK(v.witness_kind == pc::WitnessKind::kDensityMultiple);
    CHECK(v.witness_scale == Rational(1, 3));
    CHECK(v.witness_alpha ==
          std::vector<Rational>{Rational(1, 2), Rational(1, 3), Rational(1, 4)});
    CHECK(v.transform.at(Rational(0)) == Rational(1, 3));

    // The witness reconstructs the composition exactly.
    CHECK(v.witness_mixture.scaled(v.witness_scale) == pc::compose_mixture(a, xpow(2)));
    CHECK(pc::witness_kind_str(v.witness_kind) == "density_multiple");
}

TEST_CASE("identity and positive scalings") {
    const AlphaTuple a = tuple({Rational(1), Rational(1, 2)});
    const auto id = pc::pf_post_composition(a, xpow(1));
    CHECK(id.is_pf);
    CHECK(id.is_density);
    CHECK(id.witness_scale == 1);
    CHECK(id.witness_alpha == a.values());

    const auto tripled = pc::pf_post_composition(a, Poly({Rational(0), Rational(3)}));
    CHECK(tripled.is_pf);
    CHECK_FALSE(tripled.is_density);  // integral 3
    CHECK(tripled.witness_scale == 3);
    CHECK(tripled.witness_alpha == a.values());
}

TEST_CASE("negative verdicts carry usable witnesses") {
    const AlphaTuple a3 = tuple({Rational(1), Rational(1, 2), Rational(1, 4)});
    const auto uneq = pc::pf_post_composition(a3, xpow(2));
    CHECK_FALSE(uneq.is_pf);
    CHECK(uneq.witness_kind == pc::WitnessKind::kUnequalEvaluations);
    CHECK(uneq.point_a == std::vector<int>{0, 0, 2});
    CHECK(uneq.eval_a == -1280);
    CHECK(uneq.point_b == std::vector<int>{0, 1, 1});
    CHECK(uneq.eval_b == -512);
    CHECK(uneq.transform.num.degree() >= 1);

    const AlphaTuple a = tuple({Rational(1), Rational(1, 2)});
    const auto ni = pc::pf_post_composition(a, Poly({Rational(1), Rational(1)}));
    CHECK_FALSE(ni.is_pf);
    CHECK(ni.witness_kind == pc::WitnessKind::kNotIntegrable);
    CHECK(ni.reason.find("not integrable") != std::string::npos);

    const auto zf = pc::pf_post_composition(a, Poly());
    CHECK_FALSE(zf.is_pf);
    CHECK(zf.witness_kind == pc::WitnessKind::kZeroFunction);

    const auto neg = pc::pf_post_composition(a, Poly({Rational(0), Rational(0), Rational(-1)}));
    CHECK_FALSE(neg.is_pf);
    CHECK(neg.witness_kind == pc::WitnessKind::kNegativeValues);
    CHECK(neg.reason.find("negative") != std::string::npos);
}

TEST_CASE("pole collisions are decided through the merged transform") {
    // Rates 1,2,3 are in arithmetic progression: the square is PF even
    // though the evaluation map is unavailable.
    const AlphaTuple ap = tuple({Rational(1), Rational(1, 2), Rational(1, 3)});
    const auto good = pc::pf_post_composition(ap, xpow(2));
    CHECK(good.is_pf);
    CHECK(good.witness_kind == pc::WitnessKind::kDensityMultiple);
    CHECK(good.witness_mixture.scaled(good.witness_scale) == pc::compose_mixture(ap, xpow(2)));

    // Rates 1,2,3,10 still collide at 4 but are not in progression.
    const AlphaTuple bad =
        tuple({Rational(1), Rational(1, 2), Rational(1, 3), Rational(1, 10)});
    const auto rc = pc::pf_post_composition(bad, xpow(2));
    CHECK_FALSE(rc.is_pf);
    CHECK(rc.witness_kind == pc::WitnessKind::kRateCollision);
    CHECK(rc.reason.find("share a pole") != std::string::npos);
    CHECK(rc.point_a.size() == 4);
    CHECK(rc.point_b.size() == 4);
}

TEST_CASE("repeated scales go through the merged transform too") {
    // Erlang pair squared: x^2 e^{-2x} is a quarter of the rate-2 triple.
    const AlphaTuple er = tuple({Rational(1), Rational(1)});
    const auto v = pc::pf_post_composition(er, xpow(2));
    CHECK(v.is_pf);
    CHECK(v.witness_kind == pc::WitnessKind::kDensityMultiple);
    CHECK(v.witness_scale == Rational(1, 4));
    CHECK(v.witness_alpha ==
          std::vector<Rational>{Rational(1, 2), Rational(1, 2), Rational(1, 2)});

    const AlphaTuple mixed = tuple({Rational(1), Rational(1), Rational(1, 3)});
    const auto w = pc::pf_post_composition(mixed, xpow(2));
    CHECK_FALSE(w.is_pf);
    CHECK(w.witness_kind == pc::WitnessKind::kRateCollision);
    CHECK(w.reason.find("repeated") != std::string::npos);
}

TEST_CASE("power mixtures in closed form") {
    const AlphaTuple a = tuple({Rational(1), Rational(1, 2)});
    const RateMixture sq = pc::power_rate_mixture(a, 2);
    REQUIRE(sq.size() == 3);
    CHECK(sq.terms()[0].rate == 2);
    CHECK(sq.terms()[0].coeff == Poly::constant(Rational(4)));
    CHECK(sq.terms()[1].rate == 3);
    CHECK(sq.terms()[1].coeff == Poly::constant(Rational(-8)));
    CHECK(sq.terms()[2].rate == 4);
    CHECK(sq.terms()[2].coeff == Poly::constant(Rational(4)));

    CHECK(pc::power_rate_mixture(a, 1) == density::build_density(a));

    const RateMixture ersq = pc::power_rate_mixture(tuple({Rational(1), Rational(1)}), 2);
    REQUIRE(ersq.size() == 1);
    CHECK(ersq.terms()[0].rate == 2);
    CHECK(ersq.terms()[0].coeff == Poly::monomial(2, Rational(1)));

    CHECK_THROWS_AS(pc::power_rate_mixture(a, 0), DomainError);
}

TEST_CASE("general composition splits over the powers") {
    const AlphaTuple a = tuple({Rational(1), Rational(1, 2)});
    const Poly p({Rational(0), Rational(0), Rational(1), Rational(1)});  // x^2 + x^3
    RateMixture sum = pc::power_rate_mixture(a, 2);
    sum += pc::power_rate_mixture(a, 3);
    CHECK(pc::compose_mixture(a, p) == sum);

    CHECK(pc::compose_mixture(a, Poly()).is_zero());
    CHECK_THROWS_AS(pc::compose_mixture(a, Poly::constant(Rational(1))), DomainError);

    // Pointwise agreement with evaluating p at the density.
    const RateMixture lam = density::build_density(a);
    const RateMixture comp = pc::compose_mixture(a, p);
    for (double x : {0.2, 0.9, 2.5}) {
        const double l = lam(x);
        CHECK(comp(x) == doctest::Approx(l * l + l * l * l).epsilon(1e-12));
    }
}

TEST_CASE("constancy of the evaluation map decides the verdict") {
    oracle::SplitMix64 g(503);
    int checked = 0;
    for (int rep = 0; rep < 60; ++rep) {
        const int n = 1 + static_cast<int>(g.next() % 3);
        AlphaTuple a = (rep % 2 == 0)
                           ? AlphaTuple(testref::rand_distinct_positive(g, 2 + static_cast<int>(g.next() % 2), 6, 3))
                           : ap_rate_tuple(testref::rand_positive(g, 4, 2),
                                           testref::rand_positive(g, 3, 2), 2);
        std::vector<pc::PointEval> evals;
        try {
            evals = pc::numerator_evaluations(a, xpow(n));
        } catch (const CollisionError&) {
            continue;  // evaluation witness unavailable; verdict still total
        }
        bool constant = true;
        for (const auto& [k, v] : evals) constant = constant && (v == evals[0].second);
        const bool positive = sign(evals[0].second) > 0;

        const auto verdict = pc::pf_post_composition(a, xpow(n));
        CHECK(verdict.is_pf == (constant && positive));
        ++checked;
    }
    CHECK(checked >= 40);
}

TEST_CASE("progression rates are closed under powers") {
    oracle::SplitMix64 g(509);
    for (int rep = 0; rep < 50; ++rep) {
        const int m = 2 + static_cast<int>(g.next() % 3);
        const int n = 1 + static_cast<int>(g.next() % 4);
        const Rational r0 = testref::rand_positive(g, 4, 2);
        const Rational d = testref::rand_positive(g, 3, 2);
        const AlphaTuple a = ap_rate_tuple(r0, d, m);

        const auto v = pc::pf_post_composition(a, xpow(n));
        CHECK(v.is_pf);
        CHECK(v.witness_kind == pc::WitnessKind::kDensityMultiple);

        const RateMixture power = pc::power_rate_mixture(a, n);
        CHECK(v.witness_mixture.scaled(v.witness_scale) == power);

        // n(m-1)+1 distinct rates, again in progression with the same step.
        REQUIRE(power.size() == n * (m - 1) + 1);
        for (int i = 0; i < power.size(); ++i)
            CHECK(power.terms()[static_cast<size_t>(i)].rate ==
                  Rational(n) * r0 + Rational(i) * d);
    }
}

TEST_CASE("two-scale powers reduce to progression tuples") {
    // Lambda_beta^n is a positive multiple of the density whose rates run in
    // progression from n*r to n*s with step s - r.
    oracle::SplitMix64 g(521);
    for (int rep = 0; rep < 20; ++rep) {
        const auto rs = testref::rand_distinct_positive(g, 2, 5, 3);
        const Rational r = std::min(rs[0], rs[1]);
        const Rational s = std::max(rs[0], rs[1]);
        const int n = 2 + static_cast<int>(g.next() % 3);

        const AlphaTuple beta({Rational(1) / r, Rational(1) / s});
        const auto v = pc::pf_post_composition(beta, xpow(n));
        REQUIRE(v.is_pf);
        REQUIRE(static_cast<int>(v.witness_alpha.size()) == n + 1);
        std::vector<Rational> rates;
        for (const Rational& w : v.witness_alpha) rates.push_back(Rational(1) / w);
        std::sort(rates.begin(), rates.end());
        for (int i = 0; i <= n; ++i)
            CHECK(rates[static_cast<size_t>(i)] == Rational(n) * r + Rational(i) * (s - r));
        CHECK(sign(v.witness_scale) > 0);
    }
}

TEST_CASE("only the unit scaling keeps the integral at one") {
    const AlphaTuple a = tuple({Rational(2), Rational(1)});
    for (const Rational& c : {Rational(1), Rational(2), Rational(1, 2)}) {
        const auto v = pc::pf_post_composition(a, Poly({Rational(0), c}));
        CHECK(v.is_pf);
        CHECK(v.is_density == (c == 1));
        CHECK(v.transform.at(Rational(0)) == c);
    }
}
