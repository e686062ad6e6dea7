#pragma once

#include "hwlab/rational.hpp"

#include <string>
#include <vector>

namespace hwlab {

// Dense univariate polynomial over Rational, coefficients ascending.
// Invariant: the coefficient vector has no trailing zeros; the zero
// polynomial is the empty vector and reports degree() == kZeroDegree.
class Poly {
public:
    static constexpr int kZeroDegree = -1;

    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    static Poly constant(Rational c);
    static Poly monomial(int deg, Rational coeff);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    // Zero beyond the degree, so callers can index freely.
    Rational coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const;

    Rational operator()(const Rational& x) const;
    double eval_double(double x) const;

    Poly derivative() const;
    Poly monic() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    // Euclidean division over Q: a = q*b + r with deg r < deg b. b nonzero.
    static void divrem(const Poly& a, const Poly& b, Poly& q, Poly& r);
    // Exact quotient; throws DomainError when the division leaves a remainder.
    static Poly div_exact(const Poly& a, const Poly& b);
    // Monic gcd (zero polynomial when both inputs are zero).
    static Poly gcd(Poly a, Poly b);

    Poly pow(int n) const;

    // Human-readable form, e.g. "1 - 3*t + 2*t^2".
    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> c_;
};

} // namespace hwlab
