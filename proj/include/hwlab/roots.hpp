#pragma once

#include "hwlab/poly.hpp"
#include "hwlab/rational.hpp"

#include <vector>

namespace hwlab::roots {

// Yun's square-free decomposition: f = c * prod g_i^i with the g_i monic,
// square-free, pairwise coprime. Only factors of positive degree appear.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f);

// Sturm chain f, f', -rem(...), ...; constant tail included.
std::vector<Poly> sturm_sequence(const Poly& f);

// Number of distinct real roots of the chain's polynomial in (lo, hi].
// Requires f(lo) != 0 and f(hi) != 0 for the textbook reading; callers
// here always evaluate away from roots.
int sign_changes_at(const std::vector<Poly>& chain, const Rational& x);
int count_roots(const std::vector<Poly>& chain, const Rational& lo, const Rational& hi);

// 1 + max |c_k| / |lead|; every real root has absolute value below this.
Rational cauchy_root_bound(const Poly& f);

struct RootInterval {
    Rational lo, hi;     // lo == hi == root when exact
    bool exact = false;
    Rational root;       // exact value, or midpoint approximation after refine
};

// Isolating intervals for all real roots of a square-free polynomial,
// sorted ascending. Rational roots hit by a bisection midpoint come back
// exact immediately.
std::vector<RootInterval> isolate_real_roots(const Poly& squarefree);

// Bisect an isolating interval below `width`. At every step the smallest-
// denominator rational inside the interval is tried as an exact root, so
// rational roots always snap exactly once the interval is tight enough.
RootInterval refine_root(const Poly& squarefree, RootInterval iv, const Rational& width);

// Smallest-denominator rational in the closed interval [lo, hi]
// (Stern-Brocot walk; ties broken toward smaller |numerator|).
Rational simplest_in_interval(const Rational& lo, const Rational& hi);

} // namespace hwlab::roots
