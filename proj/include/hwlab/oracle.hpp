#pragma once

#include "hwlab/density.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace hwlab::oracle {

// 64-bit counter-based generator (splitmix64 increment). Cheap to seed, so
// every trial can own an independent stream keyed by its index.
struct SplitMix64 {
    std::uint64_t s;
    explicit SplitMix64(std::uint64_t seed) : s(seed) {}
    std::uint64_t next();
    // Uniform on (0, 1]; never returns 0, safe under log().
    double next_unit();
};

// Trial t of a batch keyed by `seed` draws from stream(seed, t).
inline SplitMix64 stream(std::uint64_t seed, std::uint64_t t) {
    return SplitMix64(seed + (t + 1) * 0x9E3779B97F4A7C15ull);
}

// Density value at x by numeric inversion of the bilateral transform:
// (1/pi) Re int_0^inf e^{itx} prod_j (1 + i alpha_j t)^{-1} dt, truncated
// where the integrand envelope bounds the tail below tol/2 and integrated
// adaptively to the same budget. Independent of the mixture closed form.
double fourier_mellin(const AlphaTuple& alpha, double x, double tol);

// Uniform-grid samples of a function on [0, (n-1)*h].
struct GridFunction {
    double h = 0;
    std::vector<double> v;
    int size() const { return static_cast<int>(v.size()); }
    double x_at(int i) const { return h * i; }
    double at(int i) const { return v[static_cast<size_t>(i)]; }
};

// Density on a grid by iterated trapezoid convolution of the exponential
// factors (FFT-accelerated). Independent of the mixture closed form.
GridFunction grid_convolution(const AlphaTuple& alpha, double h, int n);

// int_0^inf x^p Lambda(x) dx numerically: adaptive quadrature on [0, X]
// with X grown until an exponential envelope bounds the tail within the
// budget. tol is relative to the computed integral.
double quadrature_moment(const AlphaTuple& alpha, int p, double tol = 1e-10);

// n independent draws of the random variable with this density, i.e.
// sum_j alpha_j * Exp_j with standard exponentials. Deterministic in seed.
std::vector<double> draw_samples(const AlphaTuple& alpha, std::size_t n, std::uint64_t seed);

// Determinant by partially pivoted LU; small dense matrices only.
double minor_det(std::vector<std::vector<double>> a);

struct TnnReport {
    double min_det = 0;
    std::vector<double> xs, ys; // configuration attaining min_det
    std::uint64_t trial = 0;    // trial index attaining it
    std::uint64_t trials = 0;
    int order = 0;
};

// Randomized search for a negative order-r minor of the translation kernel
// K(x, y) = f(x - y): each trial draws r ascending x's and y's in [0, box]
// and evaluates det K(x_i - y_j). Returns the minimum determinant seen and
// where. Deterministic in seed for any thread count.
TnnReport tnn_minor_sample(const RateMixture& f, int order, std::uint64_t trials,
                           double box, std::uint64_t seed, int threads = 0);
TnnReport tnn_minor_sample(const AlphaTuple& alpha, int order, std::uint64_t trials,
                           double box, std::uint64_t seed, int threads = 0);

// One-sided forward difference for f^(n)(x):
// sum_i (-1)^(n-i) C(n,i) f(x + i*h) / h^n. Error O(h) plus roughly
// 2^n * eps / h^n of rounding noise, which is what limits usable n.
double finite_difference_derivative(const std::function<double(double)>& f, double x,
                                    int n, double h);

// requested > 0 wins; else HWLAB_THREADS; else hardware concurrency; >= 1.
int thread_count(int requested);

} // namespace hwlab::oracle
