#include "hwlab/moments.hpp"

#include "hwlab/errors.hpp"
#include "hwlab/linalg.hpp"
#include "hwlab/roots.hpp"
#include "hwlab/symfunc.hpp"

#include <algorithm>

namespace hwlab::moments {

std::vector<Rational> moments(const AlphaTuple& alpha, int pmax) {
    if (pmax < 0) throw DomainError("moments: pmax must be >= 0");
    std::vector<Rational> h = symfunc::complete_homogeneous_upto(pmax, alpha.values());
    std::vector<Rational> mu(h.size());
    for (size_t p = 0; p < h.size(); ++p)
        mu[p] = h[p] * Rational(factorial(static_cast<unsigned long>(p)));
    return mu;
}

std::vector<Rational> power_sums(const AlphaTuple& alpha, int kmax) {
    if (kmax < 1) throw DomainError("power_sums: kmax must be >= 1");
    std::vector<Rational> g(static_cast<size_t>(kmax));
    std::vector<Rational> pw(alpha.values());
    for (int k = 1; k <= kmax; ++k) {
        Rational s(0);
        for (size_t j = 0; j < pw.size(); ++j) {
            if (k > 1) pw[j] *= alpha.values()[j];
            s += pw[j];
        }
        g[static_cast<size_t>(k - 1)] = s;
    }
    return g;
}

std::vector<Rational> cumulants(const AlphaTuple& alpha, int kmax) {
    std::vector<Rational> g = power_sums(alpha, kmax);
    for (int k = 1; k <= kmax; ++k) g[static_cast<size_t>(k - 1)] /= k;
    return g;
}

std::vector<Rational> moments_to_elementary(const std::vector<Rational>& mu) {
    if (mu.empty()) throw InsufficientDataError("moments_to_elementary: empty sequence");
    const int m = static_cast<int>(mu.size()) - 1;
    std::vector<Rational> h(mu.size());
    for (size_t p = 0; p < mu.size(); ++p)
        h[p] = mu[p] / Rational(factorial(static_cast<unsigned long>(p)));
    auto h_at = [&](int idx) -> Rational {
        if (idx < 0) return Rational(0);
        return h[static_cast<size_t>(idx)];
    };
    std::vector<Rational> e;
    e.reserve(static_cast<size_t>(m));
    for (int l = 1; l <= m; ++l) {
        Mat d(l, l);
        for (int r = 0; r < l; ++r)
            for (int c = 0; c < l; ++c) d.at(r, c) = h_at(r - c + 1);
        e.push_back(bareiss_det(std::move(d)));
    }
    return e;
}

std::vector<Rational> hankel_determinants(const std::vector<Rational>& mu, int nmax,
                                          bool shifted) {
    const int off = shifted ? 1 : 0;
    if (static_cast<int>(mu.size()) < 2 * nmax + 1 + off)
        throw InsufficientDataError("hankel_determinants: sequence too short");
    std::vector<Rational> out;
    for (int n = 0; n <= nmax; ++n) {
        Mat H(n + 1, n + 1);
        for (int j = 0; j <= n; ++j)
            for (int k = 0; k <= n; ++k) H.at(j, k) = mu[static_cast<size_t>(j + k + off)];
        out.push_back(bareiss_det(std::move(H)));
    }
    return out;
}

namespace {

RecoveryResult infeasible(RecoveryResult base, std::string reason) {
    base.feasible = false;
    base.reason = std::move(reason);
    base.alpha.clear();
    return base;
}

// Shared tail of both recovery entry points: the target multiset is the
// negated-reciprocal root set of F(t) = 1 + sum e_l t^l.
RecoveryResult recover_from_elementary(std::vector<Rational> e, int m, const Rational& width) {
    RecoveryResult res;
    res.e = e;
    std::vector<Rational> fc;
    fc.push_back(Rational(1));
    for (const Rational& x : e) fc.push_back(x);
    res.F = Poly(std::move(fc));

    if (res.F.degree() != m)
        return infeasible(std::move(res), "e_m vanishes: no degree-m scale tuple matches");

    auto sqf = roots::squarefree_decomposition(res.F);
    int degree_seen = 0;
    for (const auto& [g, mult] : sqf) {
        // All roots of g must be real and negative: count in (-B, 0) and
        // compare with the degree. F(0) = 1 so 0 is never a root.
        auto chain = roots::sturm_sequence(g);
        Rational bound = roots::cauchy_root_bound(g) + 1;
        int neg = roots::count_roots(chain, -bound, Rational(0));
        if (neg != g.degree())
            return infeasible(std::move(res),
                              "F has complex or nonnegative roots: not a moment sequence of "
                              "any positive scale tuple");
        degree_seen += mult * g.degree();
    }
    if (degree_seen != m)
        return infeasible(std::move(res), "square-free decomposition degree mismatch");

    res.exact = true;
    std::vector<std::pair<Rational, int>> found; // (alpha value approx/exact, multiplicity)
    for (const auto& [g, mult] : sqf) {
        for (roots::RootInterval iv : roots::isolate_real_roots(g)) {
            iv = roots::refine_root(g, iv, width);
            IsolationCert cert;
            cert.lo = iv.lo;
            cert.hi = iv.hi;
            cert.multiplicity = mult;
            cert.exact = iv.exact;
            cert.root = iv.root;
            res.certificates.push_back(cert);
            if (!iv.exact) res.exact = false;
            found.emplace_back(Rational(-1) / iv.root, mult);
        }
    }
    for (auto& [val, mult] : found)
        for (int k = 0; k < mult; ++k) res.alpha.push_back(val);
    std::sort(res.alpha.begin(), res.alpha.end(),
              [](const Rational& a, const Rational& b) { return a > b; });
    res.feasible = true;
    return res;
}

} // namespace

RecoveryResult recover_alpha(const std::vector<Rational>& mu, int m, const Rational& width) {
    if (m < 1) throw DomainError("recover_alpha: m must be >= 1");
    if (static_cast<int>(mu.size()) < m + 1)
        throw InsufficientDataError("recover_alpha: need mu_0..mu_m");
    if (mu[0] != 1) {
        RecoveryResult res;
        return infeasible(std::move(res), "mu_0 != 1: not a probability density");
    }
    std::vector<Rational> head(mu.begin(), mu.begin() + m + 1);
    return recover_from_elementary(moments_to_elementary(head), m, width);
}

RecoveryResult recover_alpha_from_maclaurin(const std::vector<Rational>& d, int m,
                                            const Rational& width) {
    if (m < 1) throw DomainError("recover_alpha_from_maclaurin: m must be >= 1");
    if (static_cast<int>(d.size()) < m + 1)
        throw InsufficientDataError(
            "recover_alpha_from_maclaurin: need derivatives of orders m-1..2m-1");
    if (sign(d[0]) == 0) {
        RecoveryResult res;
        return infeasible(std::move(res),
                          "derivative of order m-1 vanishes: prod of rates cannot be zero");
    }
    // d_n / d_{m-1} = (-1)^{n-m+1} h_{n-m+1}(a): feed the rate multiset's
    // "moments" p! h_p(a) through the same determinant pipeline.
    std::vector<Rational> mu;
    mu.push_back(Rational(1));
    for (int p = 1; p <= m; ++p) {
        Rational h = d[static_cast<size_t>(p)] / d[0];
        if (p % 2) h = -h;
        mu.push_back(h * Rational(factorial(static_cast<unsigned long>(p))));
    }
    std::vector<Rational> e = moments_to_elementary(mu);
    // Overdetermined consistency: e_m(a) = prod a_j must equal the supplied
    // order-(m-1) derivative, which the ratios alone cannot see.
    if (e.back() != d[0]) {
        RecoveryResult res;
        res.e = e;
        return infeasible(std::move(res),
                          "derivative scale inconsistent with the rate multiset implied "
                          "by the ratios");
    }
    RecoveryResult res = recover_from_elementary(std::move(e), m, width);
    // Pipeline recovered the rate multiset; alpha entries are reciprocals.
    if (res.feasible) {
        for (Rational& v : res.alpha) v = Rational(1) / v;
        std::sort(res.alpha.begin(), res.alpha.end(),
                  [](const Rational& a, const Rational& b) { return a > b; });
    }
    return res;
}

PFSequenceReport pf_sequence_check(const std::vector<Rational>& mu, int max_order, int window) {
    if (max_order < 1) throw DomainError("pf_sequence_check: max_order must be >= 1");
    const int m = static_cast<int>(mu.size()) - 1;
    std::vector<Rational> e = moments_to_elementary(mu);

    // b_n = e_n for 0 <= n <= m (e_0 = 1), zero elsewhere.
    auto b = [&](int n) -> Rational {
        if (n == 0) return Rational(1);
        if (n < 0 || n > m) return Rational(0);
        return e[static_cast<size_t>(n - 1)];
    };

    const int lo = -window, hi = m + window;
    PFSequenceReport rep;
    rep.pass = true;

    // All strictly increasing index tuples from [lo, hi], sizes 1..max_order.
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start, int remaining) -> void {
        if (remaining == 0) {
            tuples.push_back(cur);
            return;
        }
        for (int v = start; v <= hi - remaining + 1; ++v) {
            cur.push_back(v);
            self(self, v + 1, remaining - 1);
            cur.pop_back();
        }
    };
    for (int order = 1; order <= max_order; ++order) {
        tuples.clear();
        rec(rec, lo, order);
        for (const auto& p : tuples) {
            for (const auto& q : tuples) {
                Mat minor(order, order);
                for (int r = 0; r < order; ++r)
                    for (int c = 0; c < order; ++c)
                        minor.at(r, c) = b(p[static_cast<size_t>(r)] - q[static_cast<size_t>(c)]);
                Rational det = bareiss_det(std::move(minor));
                ++rep.minors_checked;
                if (sign(det) < 0) {
                    rep.pass = false;
                    rep.violation = MinorWitness{p, q, det};
                    return rep;
                }
            }
        }
    }
    return rep;
}

} // namespace hwlab::moments
