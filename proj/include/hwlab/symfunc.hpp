#pragma once

#include "hwlab/linalg.hpp"
#include "hwlab/poly.hpp"
#include "hwlab/rational.hpp"

#include <utility>
#include <vector>

namespace hwlab {

// Nondecreasing tuple of nonnegative exponents, one per variable.
// A repeated entry makes the associated Schur polynomial identically zero.
class ExponentTuple {
public:
    explicit ExponentTuple(std::vector<int> v);
    int size() const { return static_cast<int>(v_.size()); }
    int operator[](int k) const { return v_[static_cast<size_t>(k)]; }
    const std::vector<int>& values() const { return v_; }
    bool has_repeat() const;

private:
    std::vector<int> v_;
};

namespace symfunc {

// e_l(a); zero for l > |a|, one for l = 0. O(|a|*l) coefficient sweep.
Rational elementary(int l, const std::vector<Rational>& a);
// e_0..e_m in one pass.
std::vector<Rational> elementary_all(const std::vector<Rational>& a);

// h_l(a) through the Newton-style recurrence sum_{i} (-1)^i e_i h_{l-i} = 0,
// never by enumerating the C(l+m-1, m-1) monomials.
Rational complete_homogeneous(int l, const std::vector<Rational>& a);
std::vector<Rational> complete_homogeneous_upto(int lmax, const std::vector<Rational>& a);

// Floating-point mirrors, for large-l asymptotic checks only.
double elementary_d(int l, const std::vector<double>& a);
std::vector<double> complete_homogeneous_upto_d(int lmax, const std::vector<double>& a);

// Product of pairwise differences prod_{j<k} (a_k - a_j); 1 for |a| <= 1.
Rational vandermonde_det(const std::vector<Rational>& a);

// det(a_j^{lambda_k}) / V(a). Requires distinct entries (DistinctnessError
// otherwise); returns 0 when lambda has a repeated entry.
Rational schur_bialternant(const ExponentTuple& lambda, const std::vector<Rational>& a);

// det(h_{lambda_j - k + 1}(a))_{j,k}; valid for any a, no distinctness needed.
Rational schur_jacobi_trudi(const ExponentTuple& lambda, const std::vector<Rational>& a);

// Dispatch: bialternant when entries are distinct, Jacobi-Trudi otherwise.
Rational schur(const ExponentTuple& lambda, const std::vector<Rational>& a);

// Row l+1, column j holds e_l of a with entry j removed.
Mat elementary_matrix(const std::vector<Rational>& a);

// Closed-form inverse, assembled as the signed/Vandermonde-scaled power
// matrix product; entries distinct or DistinctnessError.
// Satisfies elementary_matrix(a) * elementary_matrix_inverse(a) == I and
// det elementary_matrix(a) == (-1)^{m(m-1)/2} V(a).
Mat elementary_matrix_inverse(const std::vector<Rational>& a);

// Both sides of the exchange identity
//   V(a) X^l == sum_j (-1)^{j+l-1} a_j^l V(a-hat-j) prod_{k!=j} (X + a_k)
// as polynomials in X, for callers to compare. Holds for 0 <= l <= m-1.
std::pair<Poly, Poly> vdm_identity_check(const std::vector<Rational>& a, int l);

} // namespace symfunc
} // namespace hwlab
