#pragma once

#include "hwlab/poly.hpp"
#include "hwlab/rational.hpp"

#include <string>
#include <vector>

namespace hwlab {

// Scale tuple of the density: m >= 2 positive rationals, held sorted
// descending so permutations of the same multiset compare equal.
class AlphaTuple {
public:
    explicit AlphaTuple(std::vector<Rational> vals);
    int size() const { return static_cast<int>(v_.size()); }
    const Rational& operator[](int k) const { return v_[static_cast<size_t>(k)]; }
    const std::vector<Rational>& values() const { return v_; }
    // Reciprocals 1/alpha_j, ascending: the exponential decay rates.
    std::vector<Rational> rates() const;
    bool distinct() const;
    friend bool operator==(const AlphaTuple& a, const AlphaTuple& b) { return a.v_ == b.v_; }

private:
    std::vector<Rational> v_;
};

// Reduced ratio of polynomials; den monic, gcd(num, den) = 1.
struct RationalFunction {
    Poly num, den;
    static RationalFunction make(Poly n, Poly d);
    Rational at(const Rational& s) const;
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num == b.num && a.den == b.den;
    }
};

// One term c(x) * exp(-rate * x) of an exponential-polynomial mixture.
struct MixTerm {
    Rational rate;
    Poly coeff;
    friend bool operator==(const MixTerm& a, const MixTerm& b) {
        return a.rate == b.rate && a.coeff == b.coeff;
    }
};

// x >= 0 function sum_j c_j(x) exp(-a_j x); zero on (-inf, 0).
// Terms are kept sorted by strictly increasing rate, zero coefficients
// dropped, equal rates merged. Closed under +, *, scaling and powers,
// which is what polynomial post-composition needs.
class RateMixture {
public:
    RateMixture() = default;
    explicit RateMixture(std::vector<MixTerm> terms);

    const std::vector<MixTerm>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    int size() const { return static_cast<int>(t_.size()); }

    // Compensated (Neumaier) summation; large x underflows cleanly to 0.
    double operator()(double x) const;

    RateMixture& operator+=(const RateMixture& o);
    friend RateMixture operator*(const RateMixture& a, const RateMixture& b);
    RateMixture scaled(const Rational& s) const;
    RateMixture pow(int n) const;

    // Exact proportionality test; fills ratio (other = ratio * this).
    bool proportional(const RateMixture& other, Rational* ratio = nullptr) const;

    friend bool operator==(const RateMixture& a, const RateMixture& b) { return a.t_ == b.t_; }

    // Bilateral Laplace transform as a reduced rational function of s.
    RationalFunction laplace() const;

    // Integral over the real line (equals laplace at s = 0).
    Rational integral() const;

    std::string str() const;

private:
    void normalize();
    std::vector<MixTerm> t_;
};

namespace density {

// Exact mixture representation of the density with scale tuple alpha.
// Distinct rates give constant coefficients (the classical alternating
// closed form); repeated rates produce polynomial coefficients obtained
// by exact partial fractions.
RateMixture build_density(const AlphaTuple& alpha);

// Convenience: evaluate the density at x (0 for x < 0).
double eval(const RateMixture& lam, double x);

// n-th one-sided derivative at 0+: exactly 0 for n <= m-2, and
// (prod a_j) * (-1)^{n-m+1} * h_{n-m+1}(a) for n >= m-1.
Rational maclaurin_coeff(const AlphaTuple& alpha, int n);

// Power-series evaluation with a geometric tail bound driven by max(a);
// ConvergenceError if the term cap is hit before the bound clears tol.
double eval_by_series(const AlphaTuple& alpha, double x, double tol, int max_terms = 20000);

// Same as RateMixture::laplace, free-function form. For a genuine density
// this reduces to (prod a_j^{n_j}) / prod (s + a_j)^{n_j}.
RationalFunction laplace_transform(const RateMixture& lam);

} // namespace density
} // namespace hwlab
