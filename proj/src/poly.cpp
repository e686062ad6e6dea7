#include "hwlab/poly.hpp"

#include "hwlab/errors.hpp"

#include <sstream>

namespace hwlab {

void Poly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(Rational c) {
    Poly p;
    if (sgn(c) != 0) p.c_.push_back(std::move(c));
    return p;
}

Poly Poly::monomial(int deg, Rational coeff) {
    Poly p;
    if (deg < 0) throw DomainError("monomial: negative degree");
    if (sgn(coeff) != 0) {
        p.c_.assign(static_cast<size_t>(deg) + 1, Rational(0));
        p.c_.back() = std::move(coeff);
    }
    return p;
}

Rational Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<size_t>(k)];
}

const Rational& Poly::leading() const {
    if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
    return c_.back();
}

Rational Poly::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Poly::eval_double(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rational(static_cast<long>(k));
    return Poly(std::move(d));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    Poly p = *this;
    Rational inv = Rational(1) / c_.back();
    for (auto& c : p.c_) c *= inv;
    return p;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& c : p.c_) c = -c;
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& s) {
    if (sgn(s) == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
}

void Poly::divrem(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    r = a;
    q = Poly();
    if (a.degree() < b.degree()) return;
    std::vector<Rational> qc(static_cast<size_t>(a.degree() - b.degree()) + 1, Rational(0));
    Rational lead_inv = Rational(1) / b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        Rational f = r.leading() * lead_inv;
        qc[static_cast<size_t>(shift)] = f;
        // r -= f * x^shift * b, done in place
        for (int k = 0; k <= b.degree(); ++k)
            r.c_[static_cast<size_t>(k + shift)] -= f * b.c_[static_cast<size_t>(k)];
        r.trim();
    }
    q = Poly(std::move(qc));
}

Poly Poly::div_exact(const Poly& a, const Poly& b) {
    Poly q, r;
    divrem(a, b, q, r);
    if (!r.is_zero()) throw DomainError("polynomial division not exact");
    return q;
}

Poly Poly::gcd(Poly a, Poly b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    a = a.monic();
    b = b.monic();
    while (!b.is_zero()) {
        Poly q, r;
        divrem(a, b, q, r);
        a = std::move(b);
        b = r.is_zero() ? r : r.monic();
    }
    return a;
}

Poly Poly::pow(int n) const {
    if (n < 0) throw DomainError("poly pow: negative exponent");
    Poly acc = Poly::constant(Rational(1));
    Poly base = *this;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (sgn(c_[k]) == 0) continue;
        Rational a = c_[k];
        if (first) {
            if (sgn(a) < 0) os << "-";
        } else {
            os << (sgn(a) < 0 ? " - " : " + ");
        }
        Rational mag = abs(a);
        bool unit = mag == 1 && k > 0;
        if (!unit) os << mag.get_str();
        if (k > 0) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

} // namespace hwlab
