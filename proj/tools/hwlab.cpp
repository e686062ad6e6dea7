// hwlab: command-line front end. Thin adapters only; every number comes
// from a library call. Exit codes: 0 success or negative verdict, 2 usage
// or parse, 3 domain or precondition, 4 tolerance.

#include <CLI11.hpp>

#include "hwlab/density.hpp"
#include "hwlab/errors.hpp"
#include "hwlab/io.hpp"
#include "hwlab/moments.hpp"
#include "hwlab/oracle.hpp"
#include "hwlab/pade.hpp"
#include "hwlab/pfcomp.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

namespace {

using namespace hwlab;

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string join_rationals(const std::vector<Rational>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += rational_str(v[i]);
    }
    return s;
}

std::string join_doubles(const std::vector<double>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += fmt_double(v[i]);
    }
    return s;
}

std::string point_str(const std::vector<int>& k) {
    std::string s = "(";
    for (size_t i = 0; i < k.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(k[i]);
    }
    return s + ")";
}

// Output sink: --output path or stdout.
struct Sink {
    std::ofstream file;
    std::ostream* os = &std::cout;
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file.open(path, std::ios::binary); // LF line endings everywhere
            if (!file) throw ParseError("cannot open output file '" + path + "'");
            os = &file;
        }
    }
    std::ostream& operator*() { return *os; }
};

// Common per-subcommand options.
struct AlphaOpts {
    std::string inline_list, file, output;
    void attach(CLI::App* cmd) {
        auto* a = cmd->add_option("--alpha", inline_list, "comma-separated rationals");
        auto* f = cmd->add_option("--alpha-file", file, "key-value file with an alpha field");
        a->excludes(f);
        f->excludes(a);
        cmd->add_option("-o,--output", output, "write output here instead of stdout");
    }
    AlphaTuple tuple() const {
        if (!inline_list.empty() && !file.empty())
            throw ParseError("give exactly one of --alpha and --alpha-file");
        if (!inline_list.empty()) return AlphaTuple(io::parse_rational_list(inline_list));
        if (!file.empty()) return AlphaTuple(io::read_alpha_file(file));
        throw ParseError("one of --alpha or --alpha-file is required");
    }
};

void emit_verdict(std::ostream& os, const pfcomp::PFVerdict& v) {
    os << "is_pf: " << (v.is_pf ? "true" : "false") << "\n";
    os << "is_density: " << (v.is_density ? "true" : "false") << "\n";
    os << "witness_kind: " << pfcomp::witness_kind_str(v.witness_kind) << "\n";
    std::string data;
    switch (v.witness_kind) {
    case pfcomp::WitnessKind::kDensityMultiple:
        data = "scale=" + rational_str(v.witness_scale) + "; alpha=" + join_rationals(v.witness_alpha);
        break;
    case pfcomp::WitnessKind::kUnequalEvaluations:
        data = "point_a=" + point_str(v.point_a) + "; eval_a=" + rational_str(v.eval_a) +
               "; point_b=" + point_str(v.point_b) + "; eval_b=" + rational_str(v.eval_b);
        break;
    case pfcomp::WitnessKind::kRateCollision:
        data = v.point_a.empty()
                   ? std::string("repeated alpha entries")
                   : "point_a=" + point_str(v.point_a) + "; point_b=" + point_str(v.point_b);
        break;
    default:
        data = "none";
        break;
    }
    os << "witness_data: " << data << "\n";
    os << "reason: " << v.reason << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact hypoexponential density toolkit"};
    app.require_subcommand(1);

    // density
    auto* cd = app.add_subcommand("density", "tabulate the density on a grid");
    AlphaOpts ad;
    ad.attach(cd);
    std::string d_from = "0", d_to, d_step;
    cd->add_option("--from", d_from, "grid start (rational)");
    cd->add_option("--to", d_to, "grid end (rational)")->required();
    cd->add_option("--step", d_step, "grid step (rational)")->required();

    // moments
    auto* cm = app.add_subcommand("moments", "exact raw moments");
    AlphaOpts am;
    am.attach(cm);
    int m_pmax = 0;
    cm->add_option("--pmax", m_pmax, "largest order")->required();

    // recover
    auto* cr = app.add_subcommand("recover", "recover alpha from a moment file");
    std::string r_file, r_output;
    int r_m = 0;
    cr->add_option("--moments", r_file, "CSV file with p,mu rows")->required();
    cr->add_option("--m", r_m, "number of scales to recover")->required();
    cr->add_option("-o,--output", r_output, "write output here instead of stdout");

    // pfcheck
    auto* cp = app.add_subcommand("pfcheck", "polynomial post-composition verdict");
    AlphaOpts ap;
    ap.attach(cp);
    std::string p_poly;
    cp->add_option("--poly", p_poly, "polynomial as degree:coefficient pairs")->required();

    // tnn
    auto* ct = app.add_subcommand("tnn", "randomized search for a negative translation-kernel minor");
    AlphaOpts at;
    at.attach(ct);
    std::string t_poly;
    int t_order = 3, t_threads = 0;
    std::uint64_t t_trials = 10000, t_seed = 12345;
    double t_box = 0;
    ct->add_option("--poly", t_poly, "test p(Lambda) instead of Lambda");
    ct->add_option("--order", t_order, "minor order (default 3)");
    ct->add_option("--trials", t_trials, "number of random configurations");
    ct->add_option("--box", t_box, "draw points in [0, box] (default 2*sum alpha)");
    ct->add_option("--seed", t_seed, "RNG seed");
    ct->add_option("--threads", t_threads, "worker threads (HWLAB_THREADS fallback)");
    double t_threshold = -1e-8;
    ct->add_option("--threshold", t_threshold,
                   "call it a violation below this determinant (default -1e-8)");

    // pade
    auto* cq = app.add_subcommand("pade", "denominator reconstruction from cumulants");
    AlphaOpts aq;
    aq.attach(cq);
    int q_m = 0;
    cq->add_option("--m", q_m, "denominator degree (default: number of distinct entries)");

    // sample
    auto* cs = app.add_subcommand("sample", "draw from the density");
    AlphaOpts as_;
    as_.attach(cs);
    std::uint64_t s_n = 0, s_seed = 12345;
    cs->add_option("-n,--count", s_n, "number of draws")->required();
    cs->add_option("--seed", s_seed, "RNG seed");

    // maclaurin
    auto* cl = app.add_subcommand("maclaurin", "one-sided derivatives at 0+");
    AlphaOpts al;
    al.attach(cl);
    int l_nmax = 0;
    cl->add_option("--nmax", l_nmax, "largest derivative order")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(cd)) {
            Sink out(ad.output);
            const AlphaTuple alpha = ad.tuple();
            const Rational from = parse_rational(d_from);
            const Rational to = parse_rational(d_to);
            const Rational step = parse_rational(d_step);
            if (sign(step) <= 0) throw DomainError("step must be positive");
            if (to < from) throw DomainError("grid end before start");
            if ((to - from) / step > 10000000) throw SizeError("more than 1e7 grid rows");
            const RateMixture lam = density::build_density(alpha);
            *out << "x,lambda\n";
            for (Rational x = from; x <= to; x += step)
                *out << fmt_double(to_double(x)) << "," << fmt_double(lam(to_double(x))) << "\n";
        } else if (app.got_subcommand(cm)) {
            Sink out(am.output);
            const AlphaTuple alpha = am.tuple();
            if (m_pmax < 0) throw DomainError("pmax must be >= 0");
            const auto mu = moments::moments(alpha, m_pmax);
            *out << "p,mu\n";
            for (size_t p = 0; p < mu.size(); ++p)
                *out << p << "," << io::csv_field(rational_str(mu[p])) << "\n";
        } else if (app.got_subcommand(cr)) {
            Sink out(r_output);
            const auto mu = io::read_moments_csv(r_file);
            const auto res = moments::recover_alpha(mu, r_m);
            *out << "feasible: " << (res.feasible ? "true" : "false") << "\n";
            if (!res.reason.empty()) *out << "reason: " << res.reason << "\n";
            if (res.feasible) {
                *out << "alpha: " << join_rationals(res.alpha) << "\n";
                *out << "exact: " << (res.exact ? "true" : "false") << "\n";
            }
            if (!res.F.is_zero())
                *out << "F_coefficients: " << join_rationals(res.F.coeffs()) << "\n";
            if (!res.certificates.empty()) {
                std::string cert;
                for (const auto& c : res.certificates) {
                    if (!cert.empty()) cert += "; ";
                    cert += "root=" + rational_str(c.root) + " in [" + rational_str(c.lo) + "," +
                            rational_str(c.hi) + "] mult=" + std::to_string(c.multiplicity) +
                            (c.exact ? " exact" : " approx");
                }
                *out << "sturm_certificate: " << cert << "\n";
            }
        } else if (app.got_subcommand(cp)) {
            Sink out(ap.output);
            const AlphaTuple alpha = ap.tuple();
            const Poly p = io::parse_poly_spec(p_poly);
            emit_verdict(*out, pfcomp::pf_post_composition(alpha, p));
        } else if (app.got_subcommand(ct)) {
            Sink out(at.output);
            const AlphaTuple alpha = at.tuple();
            RateMixture f = t_poly.empty() ? density::build_density(alpha)
                                           : pfcomp::compose_mixture(alpha, io::parse_poly_spec(t_poly));
            double box = t_box;
            if (box <= 0) {
                Rational s(0);
                for (const Rational& a : alpha.values()) s += a;
                box = 2 * to_double(s);
            }
            const auto rep = oracle::tnn_minor_sample(f, t_order, t_trials, box, t_seed, t_threads);
            *out << "order: " << rep.order << "\n";
            *out << "trials: " << rep.trials << "\n";
            *out << "box: " << fmt_double(box) << "\n";
            *out << "seed: " << t_seed << "\n";
            *out << "min_det: " << fmt_double(rep.min_det) << "\n";
            *out << "trial: " << rep.trial << "\n";
            *out << "xs: " << join_doubles(rep.xs) << "\n";
            *out << "ys: " << join_doubles(rep.ys) << "\n";
            *out << "violation: " << (rep.min_det < t_threshold ? "true" : "false") << "\n";
        } else if (app.got_subcommand(cq)) {
            Sink out(aq.output);
            const AlphaTuple alpha = aq.tuple();
            int m = q_m;
            if (m <= 0) {
                std::set<Rational> uniq(alpha.values().begin(), alpha.values().end());
                m = static_cast<int>(uniq.size());
            }
            const auto pp = pade::pade_denominator(moments::cumulants(alpha, 2 * m), m);
            const int rank = pade::kronecker_rank(moments::power_sums(alpha, 2 * m + 1));
            *out << "m: " << m << "\n";
            *out << "P: " << join_rationals(pp.P.coeffs()) << "\n";
            *out << "Q: " << join_rationals(pp.Q.coeffs()) << "\n";
            *out << "kronecker_rank: " << rank << "\n";
        } else if (app.got_subcommand(cs)) {
            Sink out(as_.output);
            const AlphaTuple alpha = as_.tuple();
            *out << "x\n";
            for (double x : oracle::draw_samples(alpha, s_n, s_seed)) *out << fmt_double(x) << "\n";
        } else if (app.got_subcommand(cl)) {
            Sink out(al.output);
            const AlphaTuple alpha = al.tuple();
            if (l_nmax < 0) throw DomainError("nmax must be >= 0");
            *out << "n,value\n";
            for (int n = 0; n <= l_nmax; ++n)
                *out << n << "," << io::csv_field(rational_str(density::maclaurin_coeff(alpha, n)))
                     << "\n";
        }
        return 0;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ToleranceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const ConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
