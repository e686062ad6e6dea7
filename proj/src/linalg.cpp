#include "hwlab/linalg.hpp"

#include "hwlab/errors.hpp"

#include <utility>

namespace hwlab {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.c_ != b.r_) throw DomainError("matrix product: shape mismatch");
    Mat r(a.r_, b.c_);
    for (int i = 0; i < a.r_; ++i)
        for (int k = 0; k < a.c_; ++k) {
            const Rational& aik = a.at(i, k);
            if (sgn(aik) == 0) continue;
            for (int j = 0; j < b.c_; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

Rational bareiss_det(Mat a) {
    if (a.rows() != a.cols()) throw DomainError("determinant of non-square matrix");
    int n = a.rows();
    if (n == 0) return Rational(1);
    int sign_flips = 0;
    Rational prev(1);
    for (int k = 0; k + 1 < n; ++k) {
        if (sgn(a.at(k, k)) == 0) {
            int p = k + 1;
            while (p < n && sgn(a.at(p, k)) == 0) ++p;
            if (p == n) return Rational(0);
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            ++sign_flips;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    Rational det = a.at(n - 1, n - 1);
    return (sign_flips % 2) ? Rational(-det) : det;
}

std::optional<std::vector<Rational>> solve_linear(Mat a, std::vector<Rational> b) {
    if (a.rows() != a.cols() || static_cast<size_t>(a.rows()) != b.size())
        throw DomainError("solve_linear: shape mismatch");
    int n = a.rows();
    for (int k = 0; k < n; ++k) {
        int p = k;
        while (p < n && sgn(a.at(p, k)) == 0) ++p;
        if (p == n) return std::nullopt;
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            std::swap(b[static_cast<size_t>(k)], b[static_cast<size_t>(p)]);
        }
        Rational inv = Rational(1) / a.at(k, k);
        for (int j = k; j < n; ++j) a.at(k, j) *= inv;
        b[static_cast<size_t>(k)] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == k || sgn(a.at(i, k)) == 0) continue;
            Rational f = a.at(i, k);
            for (int j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
            b[static_cast<size_t>(i)] -= f * b[static_cast<size_t>(k)];
        }
    }
    return b;
}

} // namespace hwlab
