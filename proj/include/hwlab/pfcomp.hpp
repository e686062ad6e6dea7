#pragma once

#include "hwlab/density.hpp"
#include "hwlab/poly.hpp"
#include "hwlab/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hwlab::pfcomp {

// Integer lattice points j in Z_{>=0}^m whose coordinate sum lies in K.
struct LatticeSimplex {
    int m = 0;
    std::vector<int> K; // sorted distinct positive totals
    std::vector<std::vector<int>> points; // lexicographic over all totals
};

// Enumerate the simplex; point count is sum_{k in K} C(k+m-1, m-1) and
// SizeError fires above the cap.
LatticeSimplex simplex_points(int m, std::vector<int> K, long cap = 1000000);

// One lattice point with the transform-numerator evaluation at its pole.
using PointEval = std::pair<std::vector<int>, Rational>;

// Common-denominator transform numerator of p(Lambda), evaluated at the
// pole -<k, a> of every lattice point k with coordinate sum in the support
// of p. Requires distinct alpha and p(0) = 0; the list is keyed in
// lexicographic point order.
//
//   eval(k) = p_{|k|} * C(|k|; k) * c^k * prod_{j != k} <j - k, a>
//
// The map is constant iff p(Lambda) is a positive or negative multiple of
// a density of this family. CollisionError if two points share a pole, in
// which case the decision must go through the merged-rate transform.
std::vector<PointEval> numerator_evaluations(const AlphaTuple& alpha, const Poly& p);

enum class WitnessKind {
    kDensityMultiple,    // PF: p(Lambda) = witness_scale * witness_mixture
    kUnequalEvaluations, // two lattice points with different evaluations
    kRateCollision,      // merged-rate route decided; no evaluation witness
    kNotIntegrable,      // constant term keeps p(Lambda) away from 0 at -inf
    kNegativeValues,     // p(Lambda) provably negative somewhere on (0, inf)
    kZeroFunction,       // p(Lambda) vanishes identically
};

std::string witness_kind_str(WitnessKind k);

struct PFVerdict {
    bool is_pf = false;
    bool is_density = false; // unit integral
    WitnessKind witness_kind = WitnessKind::kZeroFunction;
    std::string reason;

    // Reduced bilateral transform of the mixture part (0/1 when p(Lambda)
    // is not integrable, where no transform exists).
    RationalFunction transform;

    // kDensityMultiple: p(Lambda) = witness_scale * witness_mixture with
    // witness_mixture the density of witness_alpha.
    std::vector<Rational> witness_alpha;
    Rational witness_scale;
    RateMixture witness_mixture;

    // kUnequalEvaluations: the offending pair. kRateCollision: the two
    // points sharing a pole.
    std::vector<int> point_a, point_b;
    Rational eval_a, eval_b;
};

// Decide exactly whether p(Lambda_alpha) is a Polya frequency function.
// Never throws on valid (alpha, p): outcomes are verdicts. The decision is
// the reduced-transform test (numerator an exact positive constant), which
// is complete for exponential-polynomial mixtures; the evaluation map is
// attached as the witness whenever alpha is distinct and collision-free.
PFVerdict pf_post_composition(const AlphaTuple& alpha, const Poly& p);

// Exact mixture form of Lambda_alpha^n, n >= 1.
RateMixture power_rate_mixture(const AlphaTuple& alpha, int n);

// Exact mixture form of p(Lambda_alpha) for p with p(0) = 0 (DomainError
// otherwise); the zero polynomial gives the empty mixture.
RateMixture compose_mixture(const AlphaTuple& alpha, const Poly& p);

} // namespace hwlab::pfcomp
