#include "hwlab/pade.hpp"

#include "hwlab/errors.hpp"
#include "hwlab/linalg.hpp"

namespace hwlab::pade {

int kronecker_rank(const std::vector<Rational>& gamma) {
    const int L = static_cast<int>(gamma.size());
    if (L < 3) throw InsufficientDataError("kronecker_rank: need at least gamma_1..gamma_3");

    auto hankel_det = [&](int n, int r) {
        Mat H(n + 1, n + 1);
        for (int j = 0; j <= n; ++j)
            for (int k = 0; k <= n; ++k)
                H.at(j, k) = gamma[static_cast<size_t>(r + j + k - 1)]; // gamma_1 at index 0
        return bareiss_det(std::move(H));
    };

    for (int n = 1; 1 + 2 * n <= L; ++n) {
        bool all_zero = true;
        for (int r = 1; r + 2 * n <= L; ++r) {
            if (sign(hankel_det(n, r)) != 0) {
                all_zero = false;
                break;
            }
        }
        if (all_zero) {
            // All dets of every order vanish for the zero sequence; that is
            // absence of data, not rank 1.
            if (n == 1) {
                bool any = false;
                for (const Rational& g : gamma) any = any || sign(g) != 0;
                if (!any)
                    throw InsufficientDataError("kronecker_rank: all-zero power sums");
            }
            return n;
        }
    }
    throw InsufficientDataError("kronecker_rank: no vanishing Hankel order within the data");
}

PadePair pade_denominator(const std::vector<Rational>& nu, int m) {
    if (m < 1) throw DomainError("pade_denominator: m must be >= 1");
    if (static_cast<int>(nu.size()) < 2 * m)
        throw InsufficientDataError("pade_denominator: need nu_1..nu_{2m}");
    std::vector<Rational> gamma(nu.size());
    for (size_t k = 0; k < nu.size(); ++k)
        gamma[k] = nu[k] * Rational(static_cast<long>(k + 1));

    auto g = [&](int k) -> const Rational& { return gamma[static_cast<size_t>(k - 1)]; };

    // sum_{i=0..m-1} p_i gamma_{i+r} = -gamma_{m+r}, r = 1..m
    Mat H(m, m);
    std::vector<Rational> rhs(static_cast<size_t>(m));
    for (int r = 1; r <= m; ++r) {
        for (int i = 0; i < m; ++i) H.at(r - 1, i) = g(i + r);
        rhs[static_cast<size_t>(r - 1)] = -g(m + r);
    }
    auto sol = solve_linear(std::move(H), std::move(rhs));
    if (!sol)
        throw SingularSystemError(
            "pade_denominator: Hankel system singular; m exceeds the number of distinct atoms");

    std::vector<Rational> pc = *sol;
    pc.push_back(Rational(1));
    Poly P(pc);

    // Q = polynomial part of P(z) * sum_k gamma_k z^{-k}: coefficient of z^r
    // collects p_{r+k} gamma_k.
    std::vector<Rational> qc(static_cast<size_t>(m), Rational(0));
    for (int r = 0; r < m; ++r)
        for (int k = 1; r + k <= m; ++k) qc[static_cast<size_t>(r)] += pc[static_cast<size_t>(r + k)] * g(k);
    return {std::move(P), Poly(std::move(qc))};
}

} // namespace hwlab::pade
