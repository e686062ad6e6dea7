#include "hwlab/pfcomp.hpp"

#include "hwlab/errors.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace hwlab::pfcomp {

namespace {

void gen_points(int m, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (m == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int t = 0; t <= total; ++t) {
        cur.push_back(t);
        gen_points(m - 1, total - t, cur, out);
        cur.pop_back();
    }
}

} // namespace

LatticeSimplex simplex_points(int m, std::vector<int> K, long cap) {
    if (m < 2) throw ArityError("simplex_points: need m >= 2");
    if (K.empty()) throw DomainError("simplex_points: K must be nonempty");
    std::sort(K.begin(), K.end());
    K.erase(std::unique(K.begin(), K.end()), K.end());
    if (K.front() < 1) throw DomainError("simplex_points: totals must be positive");

    Integer count(0);
    for (int k : K)
        count += binomial(static_cast<unsigned long>(k + m - 1), static_cast<unsigned long>(m - 1));
    if (count > cap) throw SizeError("simplex_points: point count exceeds cap");

    LatticeSimplex s;
    s.m = m;
    s.K = K;
    s.points.reserve(count.get_ui());
    std::vector<int> cur;
    for (int k : K) gen_points(m, k, cur, s.points);
    std::sort(s.points.begin(), s.points.end()); // lexicographic across totals
    return s;
}

namespace {

Rational pole_of(const std::vector<int>& k, const std::vector<Rational>& a) {
    Rational s(0);
    for (size_t j = 0; j < k.size(); ++j) s += Rational(k[j]) * a[j];
    return s;
}

Rational multinomial(const std::vector<int>& k) {
    int tot = 0;
    for (int kj : k) tot += kj;
    Rational r(factorial(static_cast<unsigned long>(tot)));
    for (int kj : k) r /= Rational(factorial(static_cast<unsigned long>(kj)));
    return r;
}

std::string point_str(const std::vector<int>& k) {
    std::ostringstream os;
    os << "(";
    for (size_t j = 0; j < k.size(); ++j) os << (j ? "," : "") << k[j];
    os << ")";
    return os.str();
}

struct PolePoint {
    std::vector<int> k;
    Rational pole;
};

// Lattice points for the support of p, with their poles; nullopt collision
// when two points share a pole (first such pair in pole order).
struct PoleSet {
    std::vector<PolePoint> pts;
    std::optional<std::pair<std::vector<int>, std::vector<int>>> collision;
};

PoleSet build_poles(const AlphaTuple& alpha, const Poly& p) {
    std::vector<int> K;
    for (int k = 1; k <= p.degree(); ++k)
        if (sign(p.coeff(k)) != 0) K.push_back(k);
    PoleSet ps;
    if (K.empty()) return ps;
    const std::vector<Rational> a = alpha.rates();
    for (auto& k : simplex_points(alpha.size(), K).points)
        ps.pts.push_back({k, pole_of(k, a)});
    auto sorted = ps.pts;
    std::sort(sorted.begin(), sorted.end(),
              [](const PolePoint& x, const PolePoint& y) { return x.pole < y.pole; });
    for (size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i - 1].pole == sorted[i].pole) {
            ps.collision = std::make_pair(sorted[i - 1].k, sorted[i].k);
            break;
        }
    return ps;
}

std::vector<PointEval> evaluate_poles(const AlphaTuple& alpha, const Poly& p, const PoleSet& ps) {
    const int m = alpha.size();
    RateMixture lam = density::build_density(alpha);
    std::vector<Rational> c(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j)
        c[static_cast<size_t>(j)] = lam.terms()[static_cast<size_t>(j)].coeff.coeff(0);

    std::vector<PointEval> out;
    out.reserve(ps.pts.size());
    for (size_t i = 0; i < ps.pts.size(); ++i) {
        const auto& ki = ps.pts[i].k;
        int tot = 0;
        for (int kj : ki) tot += kj;
        Rational v = p.coeff(tot) * multinomial(ki);
        for (int j = 0; j < m; ++j)
            v *= rat_pow(c[static_cast<size_t>(j)], ki[static_cast<size_t>(j)]);
        for (size_t q = 0; q < ps.pts.size(); ++q) {
            if (q == i) continue;
            v *= ps.pts[q].pole - ps.pts[i].pole;
        }
        out.emplace_back(ki, std::move(v));
    }
    return out;
}

} // namespace

std::vector<PointEval> numerator_evaluations(const AlphaTuple& alpha, const Poly& p) {
    if (!alpha.distinct())
        throw DistinctnessError("numerator_evaluations: alpha must be distinct");
    if (sign(p.coeff(0)) != 0)
        throw DomainError("numerator_evaluations: constant term of p must vanish");
    const PoleSet ps = build_poles(alpha, p);
    if (ps.collision)
        throw CollisionError("numerator_evaluations: lattice points " +
                             point_str(ps.collision->first) + " and " +
                             point_str(ps.collision->second) + " share a pole");
    return evaluate_poles(alpha, p, ps);
}

std::string witness_kind_str(WitnessKind k) {
    switch (k) {
    case WitnessKind::kDensityMultiple: return "density_multiple";
    case WitnessKind::kUnequalEvaluations: return "unequal_evaluations";
    case WitnessKind::kRateCollision: return "rate_collision";
    case WitnessKind::kNotIntegrable: return "not_integrable";
    case WitnessKind::kNegativeValues: return "negative_values";
    case WitnessKind::kZeroFunction: return "zero_function";
    }
    return "unknown";
}

namespace {

// Strip every factor (s + b) the monic poly admits among the candidate
// rates; the transform denominator splits completely over them.
std::vector<std::pair<Rational, int>> factor_over_rates(Poly den,
                                                        std::vector<Rational> candidates) {
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::vector<std::pair<Rational, int>> fac;
    for (const Rational& b : candidates) {
        int mult = 0;
        Poly lin({b, Rational(1)});
        while (den.degree() >= 1 && sign(den(-b)) == 0) {
            Poly q, r;
            Poly::divrem(den, lin, q, r);
            if (!r.is_zero()) break;
            den = std::move(q);
            ++mult;
        }
        if (mult > 0) fac.emplace_back(b, mult);
    }
    if (den.degree() != 0)
        throw DomainError("transform denominator has a factor outside the rate lattice");
    return fac;
}

RationalFunction zero_transform() {
    return RationalFunction::make(Poly(), Poly::constant(Rational(1)));
}

} // namespace

PFVerdict pf_post_composition(const AlphaTuple& alpha, const Poly& p) {
    PFVerdict v;
    v.transform = zero_transform();

    if (p.is_zero()) {
        v.witness_kind = WitnessKind::kZeroFunction;
        v.reason = "p is the zero polynomial, so p(Lambda) is the null function";
        return v;
    }
    if (sign(p.coeff(0)) != 0) {
        v.witness_kind = WitnessKind::kNotIntegrable;
        v.reason = "p(0) = " + rational_str(p.coeff(0)) +
                   " makes p(Lambda) a nonzero constant on a half-line, so is not integrable";
        return v;
    }

    int low = 1;
    while (sign(p.coeff(low)) == 0) ++low;

    RateMixture mix = compose_mixture(alpha, p);

    if (mix.is_zero()) {
        v.witness_kind = WitnessKind::kZeroFunction;
        v.reason = "the mixture terms of p(Lambda) cancel identically";
        return v;
    }

    v.transform = mix.laplace();
    v.is_density = (v.transform.at(Rational(0)) == Rational(1));

    if (sign(p.coeff(low)) < 0) {
        // Lambda -> 0+ as x -> +inf, so the lowest-order coefficient gives
        // the sign of p(Lambda) in the far tail.
        v.witness_kind = WitnessKind::kNegativeValues;
        v.reason = "lowest-order coefficient p_" + std::to_string(low) + " = " +
                   rational_str(p.coeff(low)) + " < 0, so p(Lambda) is negative for large x";
        return v;
    }

    const PoleSet ps = alpha.distinct() ? build_poles(alpha, p) : PoleSet{};
    const bool have_evals = alpha.distinct() && !ps.collision;

    if (v.transform.num.degree() == 0) {
        const Rational c0 = v.transform.num.coeff(0);
        if (sign(c0) > 0) {
            v.is_pf = true;
            v.witness_kind = WitnessKind::kDensityMultiple;
            std::vector<Rational> rates;
            for (const auto& t : mix.terms()) rates.push_back(t.rate);
            Rational scale = c0;
            for (auto& [b, mult] : factor_over_rates(v.transform.den, rates)) {
                for (int i = 0; i < mult; ++i) {
                    v.witness_alpha.push_back(Rational(1) / b);
                    scale /= b;
                }
            }
            std::sort(v.witness_alpha.begin(), v.witness_alpha.end(),
                      [](const Rational& x, const Rational& y) { return x > y; });
            v.witness_scale = scale;
            v.witness_mixture = density::build_density(AlphaTuple(v.witness_alpha));
            v.reason = "reduced transform is a positive constant over the pole polynomial";
        } else {
            // Cannot happen with p_low > 0 and a constant numerator, but
            // keep the verdict total.
            v.witness_kind = WitnessKind::kNegativeValues;
            v.reason = "reduced transform numerator is the nonpositive constant " +
                       rational_str(c0);
        }
        return v;
    }

    v.is_pf = false;
    if (have_evals) {
        const auto evals = evaluate_poles(alpha, p, ps);
        v.witness_kind = WitnessKind::kUnequalEvaluations;
        for (size_t i = 1; i < evals.size(); ++i) {
            if (evals[i].second != evals[0].second) {
                v.point_a = evals[0].first;
                v.eval_a = evals[0].second;
                v.point_b = evals[i].first;
                v.eval_b = evals[i].second;
                break;
            }
        }
        v.reason = "numerator evaluations differ between lattice points " +
                   point_str(v.point_a) + " and " + point_str(v.point_b);
    } else {
        v.witness_kind = WitnessKind::kRateCollision;
        if (ps.collision) {
            v.point_a = ps.collision->first;
            v.point_b = ps.collision->second;
            v.reason = "lattice points " + point_str(v.point_a) + " and " + point_str(v.point_b) +
                       " share a pole; merged-rate transform numerator has degree " +
                       std::to_string(v.transform.num.degree());
        } else {
            v.reason = "alpha has repeated entries; merged-rate transform numerator has degree " +
                       std::to_string(v.transform.num.degree());
        }
    }
    return v;
}

RateMixture power_rate_mixture(const AlphaTuple& alpha, int n) {
    if (n < 1) throw DomainError("power_rate_mixture: n must be >= 1");
    return density::build_density(alpha).pow(n);
}

RateMixture compose_mixture(const AlphaTuple& alpha, const Poly& p) {
    if (sign(p.coeff(0)) != 0)
        throw DomainError("compose_mixture: constant term of p must vanish");
    RateMixture mix;
    if (p.is_zero()) return mix;
    const RateMixture lam = density::build_density(alpha);
    RateMixture power = lam;
    const int n = p.degree();
    for (int k = 1; k <= n; ++k) {
        if (sign(p.coeff(k)) != 0) mix += power.scaled(p.coeff(k));
        if (k < n) power = power * lam;
    }
    return mix;
}

} // namespace hwlab::pfcomp
