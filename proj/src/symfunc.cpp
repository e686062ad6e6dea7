#include "hwlab/symfunc.hpp"

#include "hwlab/errors.hpp"

#include <algorithm>
#include <set>

namespace hwlab {

ExponentTuple::ExponentTuple(std::vector<int> v) : v_(std::move(v)) {
    if (v_.empty()) throw ArityError("exponent tuple must be non-empty");
    for (size_t k = 0; k < v_.size(); ++k) {
        if (v_[k] < 0) throw DomainError("exponent tuple entries must be >= 0");
        if (k > 0 && v_[k] < v_[k - 1]) throw DomainError("exponent tuple must be nondecreasing");
    }
}

bool ExponentTuple::has_repeat() const {
    for (size_t k = 1; k < v_.size(); ++k)
        if (v_[k] == v_[k - 1]) return true;
    return false;
}

namespace symfunc {

namespace {

bool all_distinct(const std::vector<Rational>& a) {
    std::set<Rational> seen(a.begin(), a.end());
    return seen.size() == a.size();
}

std::vector<Rational> drop_entry(const std::vector<Rational>& a, size_t j) {
    std::vector<Rational> r;
    r.reserve(a.size() - 1);
    for (size_t k = 0; k < a.size(); ++k)
        if (k != j) r.push_back(a[k]);
    return r;
}

} // namespace

std::vector<Rational> elementary_all(const std::vector<Rational>& a) {
    std::vector<Rational> e(a.size() + 1, Rational(0));
    e[0] = 1;
    size_t top = 0;
    for (const Rational& x : a) {
        ++top;
        for (size_t l = top; l >= 1; --l) e[l] += x * e[l - 1];
    }
    return e;
}

Rational elementary(int l, const std::vector<Rational>& a) {
    if (l < 0) throw DomainError("elementary: negative index");
    if (l > static_cast<int>(a.size())) return Rational(0);
    return elementary_all(a)[static_cast<size_t>(l)];
}

std::vector<Rational> complete_homogeneous_upto(int lmax, const std::vector<Rational>& a) {
    if (lmax < 0) throw DomainError("complete_homogeneous: negative index");
    const std::vector<Rational> e = elementary_all(a);
    const int m = static_cast<int>(a.size());
    std::vector<Rational> h(static_cast<size_t>(lmax) + 1, Rational(0));
    h[0] = 1;
    for (int l = 1; l <= lmax; ++l) {
        Rational s(0);
        for (int i = 1; i <= std::min(l, m); ++i) {
            Rational t = e[static_cast<size_t>(i)] * h[static_cast<size_t>(l - i)];
            if (i % 2 == 0) s -= t; else s += t;
        }
        h[static_cast<size_t>(l)] = s;
    }
    return h;
}

Rational complete_homogeneous(int l, const std::vector<Rational>& a) {
    return complete_homogeneous_upto(l, a)[static_cast<size_t>(l)];
}

double elementary_d(int l, const std::vector<double>& a) {
    if (l < 0 || l > static_cast<int>(a.size())) return 0.0;
    std::vector<double> e(a.size() + 1, 0.0);
    e[0] = 1.0;
    size_t top = 0;
    for (double x : a) {
        ++top;
        for (size_t k = top; k >= 1; --k) e[k] += x * e[k - 1];
    }
    return e[static_cast<size_t>(l)];
}

std::vector<double> complete_homogeneous_upto_d(int lmax, const std::vector<double>& a) {
    const int m = static_cast<int>(a.size());
    std::vector<double> e(a.size() + 1, 0.0);
    e[0] = 1.0;
    size_t top = 0;
    for (double x : a) {
        ++top;
        for (size_t k = top; k >= 1; --k) e[k] += x * e[k - 1];
    }
    std::vector<double> h(static_cast<size_t>(lmax) + 1, 0.0);
    h[0] = 1.0;
    for (int l = 1; l <= lmax; ++l) {
        double s = 0.0;
        for (int i = 1; i <= std::min(l, m); ++i) {
            double t = e[static_cast<size_t>(i)] * h[static_cast<size_t>(l - i)];
            s += (i % 2 == 0) ? -t : t;
        }
        h[static_cast<size_t>(l)] = s;
    }
    return h;
}

Rational vandermonde_det(const std::vector<Rational>& a) {
    Rational v(1);
    for (size_t j = 0; j < a.size(); ++j)
        for (size_t k = j + 1; k < a.size(); ++k) v *= a[k] - a[j];
    return v;
}

Rational schur_bialternant(const ExponentTuple& lambda, const std::vector<Rational>& a) {
    const int m = static_cast<int>(a.size());
    if (lambda.size() != m) throw ArityError("schur: |lambda| != |a|");
    if (!all_distinct(a)) throw DistinctnessError("schur_bialternant needs distinct entries");
    if (lambda.has_repeat()) return Rational(0);
    Mat num(m, m);
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k)
            num.at(j, k) = rat_pow(a[static_cast<size_t>(j)], lambda[k]);
    return bareiss_det(std::move(num)) / vandermonde_det(a);
}

Rational schur_jacobi_trudi(const ExponentTuple& lambda, const std::vector<Rational>& a) {
    const int m = static_cast<int>(a.size());
    if (lambda.size() != m) throw ArityError("schur: |lambda| != |a|");
    int hmax = 0;
    for (int j = 0; j < m; ++j) hmax = std::max(hmax, lambda[j]);
    const std::vector<Rational> h = complete_homogeneous_upto(hmax, a);
    Mat d(m, m);
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k) {
            int idx = lambda[j] - k; // lambda_j - (k+1) + 1 with 0-based k
            d.at(j, k) = (idx < 0) ? Rational(0) : h[static_cast<size_t>(idx)];
        }
    return bareiss_det(std::move(d));
}

Rational schur(const ExponentTuple& lambda, const std::vector<Rational>& a) {
    if (all_distinct(a)) return schur_bialternant(lambda, a);
    return schur_jacobi_trudi(lambda, a);
}

Mat elementary_matrix(const std::vector<Rational>& a) {
    const int m = static_cast<int>(a.size());
    if (m < 1) throw ArityError("elementary_matrix: empty tuple");
    Mat e(m, m);
    for (int j = 0; j < m; ++j) {
        std::vector<Rational> hat = drop_entry(a, static_cast<size_t>(j));
        std::vector<Rational> col = elementary_all(hat);
        for (int l = 0; l < m; ++l) e.at(l, j) = col[static_cast<size_t>(l)];
    }
    return e;
}

Mat elementary_matrix_inverse(const std::vector<Rational>& a) {
    const int m = static_cast<int>(a.size());
    if (m < 1) throw ArityError("elementary_matrix_inverse: empty tuple");
    if (!all_distinct(a)) throw DistinctnessError("elementary_matrix_inverse needs distinct entries");

    // sign_j V(a-hat-j) a_j^{m-1-i} sign_i, scaled by (-1)^{m-1} / V(a).
    // Assembled as D_sign * D_V * (descending powers) * D_sign so the
    // factored shape stays visible; the row/column orientation is fixed by
    // the defining identity E * E^{-1} = I.
    Mat dsl(m, m), pow(m, m), dsr(m, m);
    for (int j = 0; j < m; ++j) {
        Rational vhat = vandermonde_det(drop_entry(a, static_cast<size_t>(j)));
        dsl.at(j, j) = (j % 2 == 0) ? vhat : Rational(-vhat);
        dsr.at(j, j) = (j % 2 == 0) ? Rational(1) : Rational(-1);
        for (int i = 0; i < m; ++i)
            pow.at(j, i) = rat_pow(a[static_cast<size_t>(j)], m - 1 - i);
    }
    Mat inv = dsl * pow * dsr;
    Rational scale = Rational(1) / vandermonde_det(a);
    if (m % 2 == 0) scale = -scale;
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i) inv.at(j, i) *= scale;
    return inv;
}

std::pair<Poly, Poly> vdm_identity_check(const std::vector<Rational>& a, int l) {
    const int m = static_cast<int>(a.size());
    if (l < 0 || l >= m) throw DomainError("vdm_identity_check: need 0 <= l <= m-1");
    Poly lhs = Poly::monomial(l, vandermonde_det(a));
    Poly rhs;
    for (int j = 0; j < m; ++j) {
        Poly prod = Poly::constant(Rational(1));
        for (int k = 0; k < m; ++k) {
            if (k == j) continue;
            prod = prod * Poly(std::vector<Rational>{a[static_cast<size_t>(k)], Rational(1)});
        }
        Rational c = rat_pow(a[static_cast<size_t>(j)], l) *
                     vandermonde_det(drop_entry(a, static_cast<size_t>(j)));
        if ((j + l) % 2 != 0) c = -c; // (-1)^{(j+1)+l-1} with 0-based j
        rhs += c * prod;
    }
    return {lhs, rhs};
}

} // namespace symfunc
} // namespace hwlab
