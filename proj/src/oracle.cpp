#include "hwlab/oracle.hpp"

#include "hwlab/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <thread>

namespace hwlab::oracle {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (s += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double SplitMix64::next_unit() {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
}

namespace {
constexpr double kPi = 3.14159265358979323846;

std::vector<double> alpha_doubles(const AlphaTuple& alpha) {
    std::vector<double> al;
    al.reserve(static_cast<size_t>(alpha.size()));
    for (const Rational& q : alpha.values()) al.push_back(to_double(q));
    return al;
}
} // namespace

double fourier_mellin(const AlphaTuple& alpha, double x, double tol) {
    if (tol <= 0) throw DomainError("fourier_mellin: tol must be positive");
    const std::vector<double> al = alpha_doubles(alpha);
    const int m = alpha.size();
    double prod = 1;
    for (double a : al) prod *= a;

    // |prod (1 + i a_j t)^{-1}| <= prod (a_j t)^{-1}, so the tail beyond T
    // is below (1/pi) / (prod * (m-1) * T^{m-1}).
    const double T = std::pow(2.0 / (kPi * (m - 1) * prod * tol), 1.0 / (m - 1));

    auto f = [&](double t) {
        std::complex<double> w = std::exp(std::complex<double>(0.0, t * x));
        for (double a : al) w /= std::complex<double>(1.0, a * t);
        return w.real() / kPi;
    };
    double err = 0;
    double I = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        f, 0.0, T, 15, 1e-12, &err);
    if (err > tol / 2)
        throw ToleranceError("fourier_mellin: quadrature error estimate " + std::to_string(err) +
                             " exceeds budget");
    return I;
}

namespace {

// Linear convolution of a and b (first n entries), FFT-accelerated.
// Planning is serialized: FFTW plan creation is not thread-safe.
std::vector<double> linear_convolution(const std::vector<double>& a,
                                       const std::vector<double>& b, int n) {
    static std::mutex plan_mutex;
    size_t N = 1;
    while (N < 2 * a.size() - 1) N <<= 1;

    double* ta = fftw_alloc_real(N);
    double* tb = fftw_alloc_real(N);
    fftw_complex* fa = fftw_alloc_complex(N / 2 + 1);
    fftw_complex* fb = fftw_alloc_complex(N / 2 + 1);

    fftw_plan pa, pb, pinv;
    {
        std::lock_guard<std::mutex> lock(plan_mutex);
        pa = fftw_plan_dft_r2c_1d(static_cast<int>(N), ta, fa, FFTW_ESTIMATE);
        pb = fftw_plan_dft_r2c_1d(static_cast<int>(N), tb, fb, FFTW_ESTIMATE);
        pinv = fftw_plan_dft_c2r_1d(static_cast<int>(N), fa, ta, FFTW_ESTIMATE);
    }

    std::fill(ta, ta + N, 0.0);
    std::fill(tb, tb + N, 0.0);
    std::copy(a.begin(), a.end(), ta);
    std::copy(b.begin(), b.end(), tb);
    fftw_execute(pa);
    fftw_execute(pb);
    for (size_t k = 0; k <= N / 2; ++k) {
        const double re = fa[k][0] * fb[k][0] - fa[k][1] * fb[k][1];
        const double im = fa[k][0] * fb[k][1] + fa[k][1] * fb[k][0];
        fa[k][0] = re;
        fa[k][1] = im;
    }
    fftw_execute(pinv);

    std::vector<double> out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = ta[i] / static_cast<double>(N);

    {
        std::lock_guard<std::mutex> lock(plan_mutex);
        fftw_destroy_plan(pa);
        fftw_destroy_plan(pb);
        fftw_destroy_plan(pinv);
    }
    fftw_free(ta);
    fftw_free(tb);
    fftw_free(fa);
    fftw_free(fb);
    return out;
}

} // namespace

GridFunction grid_convolution(const AlphaTuple& alpha, double h, int n) {
    if (h <= 0) throw DomainError("grid_convolution: h must be positive");
    if (n < 2) throw DomainError("grid_convolution: need at least two grid points");

    std::vector<double> rates;
    for (const Rational& a : alpha.rates()) rates.push_back(to_double(a));

    auto expo = [&](double r) {
        std::vector<double> g(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) g[static_cast<size_t>(i)] = r * std::exp(-r * h * i);
        return g;
    };

    std::vector<double> cur = expo(rates[0]);
    for (size_t j = 1; j < rates.size(); ++j) {
        const std::vector<double> g = expo(rates[j]);
        const std::vector<double> raw = linear_convolution(cur, g, n);
        std::vector<double> next(static_cast<size_t>(n));
        // trapezoid weights: full interior, half endpoints
        for (int i = 0; i < n; ++i)
            next[static_cast<size_t>(i)] =
                h * (raw[static_cast<size_t>(i)] -
                     0.5 * (cur[0] * g[static_cast<size_t>(i)] + cur[static_cast<size_t>(i)] * g[0]));
        cur = std::move(next);
    }
    return {h, std::move(cur)};
}

double quadrature_moment(const AlphaTuple& alpha, int p, double tol) {
    if (p < 0) throw DomainError("quadrature_moment: p must be >= 0");
    if (tol <= 0) throw DomainError("quadrature_moment: tol must be positive");

    const RateMixture lam = density::build_density(alpha);

    // Envelope sum_j sum_l |c_jl| x^{p+l} e^{-a_j x}; for X past every
    // 2*(p+l)/a_j the tail integral is below
    // sum 2/a_j * |c_jl| * X^{p+l} e^{-a_j X}.
    struct Mono {
        double mag, a;
        int q;
    };
    std::vector<Mono> monos;
    double X = 1;
    for (const auto& t : lam.terms()) {
        const double a = to_double(t.rate);
        for (int l = 0; l <= t.coeff.degree(); ++l) {
            const double mag = std::fabs(to_double(t.coeff.coeff(l)));
            if (mag == 0) continue;
            monos.push_back({mag, a, p + l});
            X = std::max(X, 2.0 * (p + l) / a);
        }
    }
    auto tail_bound = [&](double X0) {
        double b = 0;
        for (const Mono& mo : monos)
            b += 2.0 / mo.a * mo.mag * std::exp(mo.q * std::log(X0) - mo.a * X0);
        return b;
    };

    // The budget is relative, so the truncation point and the quadrature
    // estimate have to converge together: integrate, compare err + tail
    // against tol * |I|, and push X out while the tail is what is over.
    auto f = [&](double x) { return std::pow(x, p) * lam(x); };
    const double inner = std::min(1e-12, tol / 4);
    for (;;) {
        double err = 0;
        const double I = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
            f, 0.0, X, 15, inner, &err);
        const double tail = tail_bound(X);
        const double budget = tol * std::max(std::fabs(I), std::numeric_limits<double>::min());
        if (err + tail <= budget) return I;
        if (tail > budget / 2) {
            X *= 2;
            if (X > 1e8) throw ConvergenceError("quadrature_moment: tail bound did not close");
            continue;
        }
        throw ToleranceError("quadrature_moment: quadrature error estimate " +
                             std::to_string(err) + " exceeds budget");
    }
}

std::vector<double> draw_samples(const AlphaTuple& alpha, std::size_t n, std::uint64_t seed) {
    const std::vector<double> al = alpha_doubles(alpha);
    std::vector<double> out(n);
    SplitMix64 g(seed);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0;
        for (double a : al) s -= a * std::log(g.next_unit());
        out[i] = s;
    }
    return out;
}

double minor_det(std::vector<std::vector<double>> a) {
    const size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw SizeError("minor_det: matrix must be square");
    double det = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        for (size_t i = k + 1; i < n; ++i)
            if (std::fabs(a[i][k]) > std::fabs(a[piv][k])) piv = i;
        if (a[piv][k] == 0) return 0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (size_t i = k + 1; i < n; ++i) {
            const double f = a[i][k] / a[k][k];
            for (size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

TnnReport tnn_minor_sample(const RateMixture& f, int order, std::uint64_t trials, double box,
                           std::uint64_t seed, int threads) {
    if (order < 1) throw DomainError("tnn_minor_sample: order must be >= 1");
    // Larger minors of a kernel whose entries decay exponentially are too
    // ill-conditioned in double for a sign to mean anything.
    if (order > 6) throw DomainError("tnn_minor_sample: order must be <= 6");
    if (box <= 0) throw DomainError("tnn_minor_sample: box must be positive");
    if (trials < 1) throw DomainError("tnn_minor_sample: need at least one trial");

    const int nt = std::min<std::uint64_t>(static_cast<std::uint64_t>(thread_count(threads)), trials);
    const size_t r = static_cast<size_t>(order);

    struct Best {
        double det = std::numeric_limits<double>::infinity();
        std::uint64_t trial = 0;
        std::vector<double> xs, ys;
    };
    std::vector<Best> best(static_cast<size_t>(nt));

    auto worker = [&](int w, std::uint64_t t0, std::uint64_t t1) {
        Best b;
        std::vector<double> xs(r), ys(r);
        std::vector<std::vector<double>> K(r, std::vector<double>(r));
        for (std::uint64_t t = t0; t < t1; ++t) {
            SplitMix64 g = stream(seed, t);
            for (size_t i = 0; i < r; ++i) xs[i] = box * g.next_unit();
            for (size_t i = 0; i < r; ++i) ys[i] = box * g.next_unit();
            std::sort(xs.begin(), xs.end());
            std::sort(ys.begin(), ys.end());
            for (size_t i = 0; i < r; ++i)
                for (size_t j = 0; j < r; ++j) K[i][j] = f(xs[i] - ys[j]);
            const double d = minor_det(K);
            if (d < b.det) {
                b.det = d;
                b.trial = t;
                b.xs = xs;
                b.ys = ys;
            }
        }
        best[static_cast<size_t>(w)] = std::move(b);
    };

    if (nt == 1) {
        worker(0, 0, trials);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (trials + nt - 1) / nt;
        for (int w = 0; w < nt; ++w) {
            const std::uint64_t t0 = w * chunk;
            const std::uint64_t t1 = std::min<std::uint64_t>(t0 + chunk, trials);
            if (t0 >= t1) break;
            pool.emplace_back(worker, w, t0, t1);
        }
        for (auto& th : pool) th.join();
    }

    // Deterministic winner regardless of thread count: smallest det, then
    // smallest trial index.
    Best win = std::move(best[0]);
    for (size_t w = 1; w < best.size(); ++w)
        if (best[w].det < win.det || (best[w].det == win.det && best[w].trial < win.trial))
            win = std::move(best[w]);

    TnnReport rep;
    rep.min_det = win.det;
    rep.xs = std::move(win.xs);
    rep.ys = std::move(win.ys);
    rep.trial = win.trial;
    rep.trials = trials;
    rep.order = order;
    return rep;
}

TnnReport tnn_minor_sample(const AlphaTuple& alpha, int order, std::uint64_t trials, double box,
                           std::uint64_t seed, int threads) {
    return tnn_minor_sample(density::build_density(alpha), order, trials, box, seed, threads);
}

double finite_difference_derivative(const std::function<double(double)>& f, double x, int n,
                                    double h) {
    if (n < 0) throw DomainError("finite_difference_derivative: n must be >= 0");
    if (h <= 0) throw DomainError("finite_difference_derivative: h must be positive");
    double acc = 0;
    for (int i = 0; i <= n; ++i) {
        const double c = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(i)).get_d();
        acc += (((n - i) % 2) ? -c : c) * f(x + i * h);
    }
    return acc / std::pow(h, n);
}

int thread_count(int requested) {
    if (requested > 0) return requested;
    if (const char* e = std::getenv("HWLAB_THREADS")) {
        const int v = std::atoi(e);
        if (v > 0) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

} // namespace hwlab::oracle
