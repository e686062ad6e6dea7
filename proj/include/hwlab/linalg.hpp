#pragma once

#include "hwlab/rational.hpp"

#include <optional>
#include <vector>

namespace hwlab {

// Small dense matrix of exact rationals, row-major.
class Mat {
public:
    Mat() : r_(0), c_(0) {}
    Mat(int rows, int cols) : r_(rows), c_(cols), d_(static_cast<size_t>(rows) * cols, Rational(0)) {}
    static Mat identity(int n);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Rational& at(int r, int c) { return d_[static_cast<size_t>(r) * c_ + c]; }
    const Rational& at(int r, int c) const { return d_[static_cast<size_t>(r) * c_ + c]; }

    friend Mat operator*(const Mat& a, const Mat& b);
    friend bool operator==(const Mat& a, const Mat& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.d_ == b.d_;
    }

private:
    int r_, c_;
    std::vector<Rational> d_;
};

// Exact determinant, fraction-free Bareiss elimination with row pivoting.
// Every interior division is exact; intermediate entries stay single
// products instead of accumulating long fraction sums.
Rational bareiss_det(Mat a);

// Plain Gaussian elimination over Q; nullopt when the system is singular.
std::optional<std::vector<Rational>> solve_linear(Mat a, std::vector<Rational> b);

} // namespace hwlab
