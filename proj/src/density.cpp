#include "hwlab/density.hpp"

#include "hwlab/errors.hpp"
#include "hwlab/symfunc.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace hwlab {

AlphaTuple::AlphaTuple(std::vector<Rational> vals) : v_(std::move(vals)) {
    if (v_.size() < 2) throw ArityError("alpha tuple needs at least two entries");
    for (const Rational& a : v_)
        if (sign(a) <= 0) throw PositivityError("alpha entries must be positive");
    std::sort(v_.begin(), v_.end(), [](const Rational& a, const Rational& b) { return a > b; });
}

std::vector<Rational> AlphaTuple::rates() const {
    std::vector<Rational> r;
    r.reserve(v_.size());
    for (const Rational& a : v_) r.push_back(Rational(1) / a);
    return r; // descending alpha -> ascending rates
}

bool AlphaTuple::distinct() const {
    for (size_t k = 1; k < v_.size(); ++k)
        if (v_[k] == v_[k - 1]) return false;
    return true;
}

RationalFunction RationalFunction::make(Poly n, Poly d) {
    if (d.is_zero()) throw DomainError("rational function with zero denominator");
    Poly g = Poly::gcd(n, d);
    if (g.degree() > 0) {
        n = Poly::div_exact(n, g);
        d = Poly::div_exact(d, g);
    }
    Rational lead = d.leading();
    if (lead != 1) {
        Rational inv = Rational(1) / lead;
        n *= inv;
        d *= inv;
    }
    return {std::move(n), std::move(d)};
}

Rational RationalFunction::at(const Rational& s) const {
    Rational d = den(s);
    if (sign(d) == 0) throw DomainError("rational function evaluated at a pole");
    return num(s) / d;
}

void RateMixture::normalize() {
    for (const MixTerm& t : t_)
        if (sign(t.rate) <= 0) throw PositivityError("mixture rates must be positive");
    std::sort(t_.begin(), t_.end(),
              [](const MixTerm& a, const MixTerm& b) { return a.rate < b.rate; });
    std::vector<MixTerm> merged;
    for (MixTerm& t : t_) {
        if (!merged.empty() && merged.back().rate == t.rate)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(std::move(t));
    }
    t_.clear();
    for (MixTerm& t : merged)
        if (!t.coeff.is_zero()) t_.push_back(std::move(t));
}

RateMixture::RateMixture(std::vector<MixTerm> terms) : t_(std::move(terms)) { normalize(); }

double RateMixture::operator()(double x) const {
    if (x < 0) return 0.0;
    double sum = 0.0, comp = 0.0;
    for (const MixTerm& t : t_) {
        double v = t.coeff.eval_double(x) * std::exp(-to_double(t.rate) * x);
        double s = sum + v;
        if (std::fabs(sum) >= std::fabs(v))
            comp += (sum - s) + v;
        else
            comp += (v - s) + sum;
        sum = s;
    }
    return sum + comp;
}

RateMixture& RateMixture::operator+=(const RateMixture& o) {
    t_.insert(t_.end(), o.t_.begin(), o.t_.end());
    normalize();
    return *this;
}

RateMixture operator*(const RateMixture& a, const RateMixture& b) {
    std::vector<MixTerm> prod;
    prod.reserve(a.t_.size() * b.t_.size());
    for (const MixTerm& s : a.t_)
        for (const MixTerm& t : b.t_)
            prod.push_back({s.rate + t.rate, s.coeff * t.coeff});
    return RateMixture(std::move(prod));
}

RateMixture RateMixture::scaled(const Rational& s) const {
    if (sign(s) == 0) return RateMixture();
    std::vector<MixTerm> terms = t_;
    for (MixTerm& t : terms) t.coeff *= s;
    RateMixture r;
    r.t_ = std::move(terms); // already normalized, scaling keeps order
    return r;
}

RateMixture RateMixture::pow(int n) const {
    if (n <= 0) throw DomainError("mixture power: exponent must be >= 1");
    RateMixture acc = *this;
    for (int k = 1; k < n; ++k) acc = acc * *this;
    return acc;
}

bool RateMixture::proportional(const RateMixture& other, Rational* ratio) const {
    if (t_.size() != other.t_.size()) return false;
    if (t_.empty()) {
        if (ratio) *ratio = 1;
        return true;
    }
    // ratio from the first coefficient pair, then verify term by term
    const Poly& p0 = t_[0].coeff;
    const Poly& q0 = other.t_[0].coeff;
    if (t_[0].rate != other.t_[0].rate || p0.degree() != q0.degree()) return false;
    Rational r = q0.leading() / p0.leading();
    for (size_t k = 0; k < t_.size(); ++k) {
        if (t_[k].rate != other.t_[k].rate) return false;
        Poly scaled = t_[k].coeff;
        scaled *= r;
        if (!(scaled == other.t_[k].coeff)) return false;
    }
    if (ratio) *ratio = r;
    return true;
}

RationalFunction RateMixture::laplace() const {
    if (t_.empty()) throw DomainError("laplace transform of empty mixture");
    // term c(x) e^{-a x}: integral x^r e^{-(s+a)x} = r!/(s+a)^{r+1},
    // so the term contributes sum_r c_r r! (s+a)^{d-r} over (s+a)^{d+1}.
    Poly q = Poly::constant(Rational(1));
    std::vector<Poly> factors;
    for (const MixTerm& t : t_) {
        Poly f = Poly(std::vector<Rational>{t.rate, Rational(1)}).pow(t.coeff.degree() + 1);
        factors.push_back(f);
        q = q * f;
    }
    Poly p;
    for (size_t j = 0; j < t_.size(); ++j) {
        const MixTerm& t = t_[j];
        Poly lin(std::vector<Rational>{t.rate, Rational(1)});
        int d = t.coeff.degree();
        Poly nj;
        for (int r = 0; r <= d; ++r) {
            Rational c = t.coeff.coeff(r) * Rational(factorial(static_cast<unsigned long>(r)));
            if (sign(c) != 0) nj += c * lin.pow(d - r);
        }
        Poly rest = Poly::constant(Rational(1));
        for (size_t k = 0; k < t_.size(); ++k)
            if (k != j) rest = rest * factors[k];
        p += nj * rest;
    }
    return RationalFunction::make(std::move(p), std::move(q));
}

Rational RateMixture::integral() const {
    // integral x^r e^{-a x} over [0, inf) = r! / a^{r+1}
    Rational s(0);
    for (const MixTerm& t : t_)
        for (int r = 0; r <= t.coeff.degree(); ++r)
            s += t.coeff.coeff(r) * Rational(factorial(static_cast<unsigned long>(r))) /
                 rat_pow(t.rate, r + 1);
    return s;
}

std::string RateMixture::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    for (size_t k = 0; k < t_.size(); ++k) {
        if (k) os << " + ";
        os << "(" << t_[k].coeff.str("x") << ")*exp(-" << rational_str(t_[k].rate) << "*x)";
    }
    return os.str();
}

namespace density {

namespace {

// Rate values with multiplicities, ascending. Exact merge of equal rates.
std::vector<std::pair<Rational, int>> grouped_rates(const AlphaTuple& alpha) {
    std::vector<Rational> r = alpha.rates();
    std::vector<std::pair<Rational, int>> g;
    for (const Rational& x : r) {
        if (!g.empty() && g.back().first == x)
            ++g.back().second;
        else
            g.emplace_back(x, 1);
    }
    return g;
}

// Truncated power series (in t) of prod_k (t + d_k)^{-n_k} * c0 around 0,
// to order `order` inclusive. All d_k nonzero.
std::vector<Rational> inverse_factor_series(const Rational& c0,
                                            const std::vector<std::pair<Rational, int>>& fac,
                                            int order) {
    std::vector<Rational> s(static_cast<size_t>(order) + 1, Rational(0));
    s[0] = c0;
    for (const auto& [d, n] : fac) {
        // (t + d)^{-n} = d^{-n} sum_r (-1)^r C(n+r-1, r) (t/d)^r
        std::vector<Rational> f(static_cast<size_t>(order) + 1);
        Rational dninv = rat_pow(d, -static_cast<long>(n));
        for (int r = 0; r <= order; ++r) {
            Rational c = Rational(binomial(static_cast<unsigned long>(n + r - 1),
                                           static_cast<unsigned long>(r))) *
                         rat_pow(d, -static_cast<long>(r)) * dninv;
            f[static_cast<size_t>(r)] = (r % 2) ? Rational(-c) : c;
        }
        std::vector<Rational> next(static_cast<size_t>(order) + 1, Rational(0));
        for (int i = 0; i <= order; ++i) {
            if (sign(s[static_cast<size_t>(i)]) == 0) continue;
            for (int j = 0; i + j <= order; ++j)
                next[static_cast<size_t>(i + j)] += s[static_cast<size_t>(i)] * f[static_cast<size_t>(j)];
        }
        s = std::move(next);
    }
    return s;
}

} // namespace

RateMixture build_density(const AlphaTuple& alpha) {
    const auto groups = grouped_rates(alpha);
    // c0 = prod a_k^{n_k}: the transform is c0 / prod (s + a_k)^{n_k}.
    Rational c0(1);
    for (const auto& [a, n] : groups) c0 *= rat_pow(a, n);

    std::vector<MixTerm> terms;
    if (groups.size() == alpha.values().size()) {
        // All rates simple: residue at -a_j collapses to the alternating
        // closed form c_j = a_j prod_{k != j} a_k / (a_k - a_j).
        for (size_t j = 0; j < groups.size(); ++j) {
            Rational c = groups[j].first;
            for (size_t k = 0; k < groups.size(); ++k) {
                if (k == j) continue;
                c *= groups[k].first / (groups[k].first - groups[j].first);
            }
            terms.push_back({groups[j].first, Poly::constant(c)});
        }
        return RateMixture(std::move(terms));
    }

    for (size_t j = 0; j < groups.size(); ++j) {
        const Rational& aj = groups[j].first;
        const int nj = groups[j].second;
        // Taylor coefficients G_r of c0 * prod_{k!=j} (t + (a_k - a_j))^{-n_k}
        // at t = 0 give the pole coefficients b_{j,l} = G_{n_j - l} over
        // (s + a_j)^l, hence the x^{l-1}/(l-1)! polynomial weights.
        std::vector<std::pair<Rational, int>> rest;
        for (size_t k = 0; k < groups.size(); ++k)
            if (k != j) rest.emplace_back(groups[k].first - aj, groups[k].second);
        std::vector<Rational> g = inverse_factor_series(c0, rest, nj - 1);
        std::vector<Rational> coeffs(static_cast<size_t>(nj), Rational(0));
        for (int l = 1; l <= nj; ++l) {
            Rational b = g[static_cast<size_t>(nj - l)];
            coeffs[static_cast<size_t>(l - 1)] =
                b / Rational(factorial(static_cast<unsigned long>(l - 1)));
        }
        terms.push_back({aj, Poly(std::move(coeffs))});
    }
    return RateMixture(std::move(terms));
}

double eval(const RateMixture& lam, double x) { return lam(x); }

Rational maclaurin_coeff(const AlphaTuple& alpha, int n) {
    if (n < 0) throw DomainError("maclaurin_coeff: negative order");
    const int m = alpha.size();
    if (n <= m - 2) return Rational(0);
    std::vector<Rational> a = alpha.rates();
    Rational prod(1);
    for (const Rational& r : a) prod *= r;
    const int l = n - m + 1;
    Rational h = symfunc::complete_homogeneous(l, a);
    Rational v = prod * h;
    return (l % 2) ? Rational(-v) : v;
}

double eval_by_series(const AlphaTuple& alpha, double x, double tol, int max_terms) {
    if (x < 0) return 0.0;
    if (tol <= 0) throw DomainError("eval_by_series: tol must be positive");
    const int m = alpha.size();
    std::vector<Rational> a = alpha.rates();
    std::vector<double> ad;
    double prod = 1.0, amax = 0.0;
    for (const Rational& r : a) {
        double v = to_double(r);
        ad.push_back(v);
        prod *= v;
        amax = std::max(amax, v);
    }
    // e_i once; h_l by the same recurrence as the exact path, in double.
    std::vector<double> e(static_cast<size_t>(m) + 1, 0.0);
    e[0] = 1.0;
    size_t top = 0;
    for (double v : ad) {
        ++top;
        for (size_t k = top; k >= 1; --k) e[k] += v * e[k - 1];
    }
    std::vector<double> h;
    h.push_back(1.0);

    // term_l = prod(a) (-1)^l h_l x^{l+m-1} / (l+m-1)!;
    // |h_{l+1}| <= m*max(a)*|h_l| gives the geometric tail ratio
    // q = m*max(a)*x/(n+1), so once q < 1/2 the tail is below the
    // current term bound.
    double sum = 0.0, comp = 0.0;
    double xpow = 1.0; // x^{l+m-1} / (l+m-1)! running factor
    for (int k = 1; k <= m - 1; ++k) xpow *= x / k;
    for (int l = 0; l < max_terms; ++l) {
        if (l > 0) {
            double hl = 0.0;
            for (int i = 1; i <= std::min(l, m); ++i) {
                double t = e[static_cast<size_t>(i)] * h[static_cast<size_t>(l - i)];
                hl += (i % 2 == 0) ? -t : t;
            }
            h.push_back(hl);
        }
        int n = l + m - 1;
        double term = prod * h[static_cast<size_t>(l)] * xpow;
        if (l % 2) term = -term;
        double s = sum + term;
        if (std::fabs(sum) >= std::fabs(term))
            comp += (sum - s) + term;
        else
            comp += (term - s) + sum;
        sum = s;
        // |term_{l+1}| <= |term_l| * q with q = m*max(a)*x/(n+1); once
        // q <= 1/2 the whole tail is bounded by |term_l|.
        double q = m * amax * x / (n + 1);
        if (l >= 1 && q <= 0.5 && std::fabs(term) <= tol) return sum + comp;
        xpow *= x / (n + 1);
    }
    throw ConvergenceError("eval_by_series: term cap reached before tail bound cleared tol");
}

RationalFunction laplace_transform(const RateMixture& lam) { return lam.laplace(); }

} // namespace density
} // namespace hwlab
