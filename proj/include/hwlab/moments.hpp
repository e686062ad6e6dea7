#pragma once

#include "hwlab/density.hpp"
#include "hwlab/poly.hpp"
#include "hwlab/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hwlab::moments {

// mu_0..mu_pmax with mu_p = p! * h_p(alpha). Exact.
std::vector<Rational> moments(const AlphaTuple& alpha, int pmax);

// nu_1..nu_kmax with nu_k = (1/k) * sum_j alpha_j^k. Exact.
std::vector<Rational> cumulants(const AlphaTuple& alpha, int kmax);

// Power sums gamma_k = k * nu_k = sum_j alpha_j^k, k = 1..kmax.
std::vector<Rational> power_sums(const AlphaTuple& alpha, int kmax);

// e_1..e_m from mu_0..mu_m (m = len-1) through the Toeplitz determinants
// e_l = det D_l, D_l[r][c] = h_{r-c+1}, h_p = mu_p / p!.
std::vector<Rational> moments_to_elementary(const std::vector<Rational>& mu);

// det(mu_{j+k})_{j,k=0..n} for n = 0..nmax; with `shifted`, det(mu_{j+k+1}).
std::vector<Rational> hankel_determinants(const std::vector<Rational>& mu, int nmax,
                                          bool shifted = false);

struct IsolationCert {
    Rational lo, hi;  // isolating interval for a root of F in (-inf, 0)
    int multiplicity = 1;
    bool exact = false;
    Rational root;    // exact value or refined midpoint
};

struct RecoveryResult {
    bool feasible = false;
    bool exact = false;            // every root snapped to an exact rational
    std::string reason;            // why infeasible, empty otherwise
    std::vector<Rational> alpha;   // recovered multiset, descending
    std::vector<Rational> e;       // diagnostic: e_1..e_m
    Poly F;                        // 1 + sum e_l t^l
    std::vector<IsolationCert> certificates;
};

// Decide whether mu_0..mu_m are the first moments of some density with m
// scales, and recover the multiset when they are. F's roots must be real,
// negative, with multiplicities summing to m (certified by square-free
// decomposition plus Sturm counts); alpha_j = -1/t_j. Infeasibility is a
// result, not an exception.
RecoveryResult recover_alpha(const std::vector<Rational>& mu, int m,
                             const Rational& width = Rational(1, 1000000000000L));

// Same pipeline fed by one-sided derivatives at 0+:
// d = (Lambda^{(m-1)}, ..., Lambda^{(2m-1)}) determines h_1..h_m of the
// rate tuple, the multiset of rates, and hence alpha by reciprocals.
RecoveryResult recover_alpha_from_maclaurin(const std::vector<Rational>& d, int m,
                                            const Rational& width = Rational(1, 1000000000000L));

struct MinorWitness {
    std::vector<int> rows, cols;  // index tuples into the padded sequence
    Rational value;
};

struct PFSequenceReport {
    bool pass = false;
    long minors_checked = 0;
    std::optional<MinorWitness> violation;  // first negative minor found
};

// Checks Toeplitz minors of the padded sequence (..., 0, 1, e_1, .., e_m, 0, ...)
// built from mu, all square index tuples up to max_order, windowed to
// [-window, m + window]. For genuine moment data every minor is >= 0.
PFSequenceReport pf_sequence_check(const std::vector<Rational>& mu, int max_order,
                                   int window = 3);

} // namespace hwlab::moments
