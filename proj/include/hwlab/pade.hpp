#pragma once

#include "hwlab/poly.hpp"
#include "hwlab/rational.hpp"

#include <vector>

namespace hwlab::pade {

// Smallest n with det(gamma_{r+j+k})_{j,k=0..n} = 0 for every shift r >= 1
// the sequence can support; equals the number of distinct atoms behind the
// power sums gamma_k = sum_j alpha_j^k. InsufficientDataError when the
// sequence cannot certify a vanishing order (degenerate all-zero input
// included).
int kronecker_rank(const std::vector<Rational>& gamma);

struct PadePair {
    Poly P;  // monic, degree m; roots are the distinct atom values
    Poly Q;  // degree <= m-1
};

// Exact rational reconstruction of sum_k gamma_k z^{-k} = Q(z)/P(z) from
// nu_1..nu_{2m} (gamma_k = k nu_k): solves the Hankel system
// sum_{i<m} p_i gamma_{i+r} = -gamma_{m+r}, r = 1..m. SingularSystemError
// when m overstates the number of distinct atoms.
PadePair pade_denominator(const std::vector<Rational>& nu, int m);

} // namespace hwlab::pade
