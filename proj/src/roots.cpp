#include "hwlab/roots.hpp"

#include "hwlab/errors.hpp"

#include <algorithm>
#include <cassert>

namespace hwlab::roots {

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
    std::vector<std::pair<Poly, int>> out;
    if (f.degree() <= 0) return out;
    // Yun's recurrences need b, c, d kept in their exact quotient scaling;
    // only the emitted factors are normalized monic (gcd already is).
    Poly g = Poly::gcd(f, f.derivative());
    Poly b = Poly::div_exact(f, g);
    Poly c = Poly::div_exact(f.derivative(), g);
    Poly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        Poly a = Poly::gcd(b, d);
        if (a.degree() > 0) out.emplace_back(a, i);
        b = Poly::div_exact(b, a);
        c = Poly::div_exact(d, a);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

std::vector<Poly> sturm_sequence(const Poly& f) {
    std::vector<Poly> chain;
    if (f.is_zero()) return chain;
    chain.push_back(f);
    Poly d = f.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d);
    while (true) {
        Poly q, r;
        Poly::divrem(chain[chain.size() - 2], chain.back(), q, r);
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

int sign_changes_at(const std::vector<Poly>& chain, const Rational& x) {
    int changes = 0, prev = 0;
    for (const Poly& p : chain) {
        int s = p.is_zero() ? 0 : sign(p(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

int count_roots(const std::vector<Poly>& chain, const Rational& lo, const Rational& hi) {
    return sign_changes_at(chain, lo) - sign_changes_at(chain, hi);
}

Rational cauchy_root_bound(const Poly& f) {
    if (f.is_zero()) throw DomainError("root bound of zero polynomial");
    Rational mx(0);
    for (int k = 0; k < f.degree(); ++k) {
        const Rational a = abs(f.coeff(k));
        if (a > mx) mx = a;
    }
    return Rational(1) + mx / Rational(abs(f.leading()));
}

namespace {

// Positive case of the Stern-Brocot walk: simplest rational in [lo, hi],
// 0 < lo <= hi.
Rational simplest_pos(const Rational& lo, const Rational& hi) {
    Integer fl = lo.get_num() / lo.get_den(); // floor for positive lo
    Rational n(fl);
    if (n >= lo) return n;            // lo is an integer
    if (n + 1 <= hi) return n + 1;    // an integer sits inside
    Rational flo = lo - n, fhi = hi - n;
    return n + Rational(1) / simplest_pos(Rational(1) / fhi, Rational(1) / flo);
}

} // namespace

Rational simplest_in_interval(const Rational& lo, const Rational& hi) {
    if (lo > hi) throw DomainError("simplest_in_interval: empty interval");
    if (sign(lo) <= 0 && sign(hi) >= 0) return Rational(0);
    if (sign(hi) < 0) return -simplest_pos(-hi, -lo);
    return simplest_pos(lo, hi);
}

std::vector<RootInterval> isolate_real_roots(const Poly& f) {
    std::vector<RootInterval> out;
    if (f.degree() <= 0) return out;
    std::vector<Poly> chain = sturm_sequence(f);
    Rational bound = cauchy_root_bound(f) + 1;

    // Invariant for every stacked interval: f is nonzero at both endpoints.
    struct Item { Rational lo, hi; int count; };
    std::vector<Item> stack;
    int total = count_roots(chain, -bound, bound);
    if (total > 0) stack.push_back({-bound, bound, total});

    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        if (it.count == 1) {
            // Shrink a little before accepting, so later refinement starts
            // from a genuine sign change on a short interval.
            out.push_back({it.lo, it.hi, false, Rational(0)});
            continue;
        }
        Rational mid = (it.lo + it.hi) / 2;
        if (sign(f(mid)) == 0) {
            out.push_back({mid, mid, true, mid});
            // Step off the root by ever finer offsets until the gap
            // around mid holds no further root.
            Rational delta = (it.hi - it.lo) / 4;
            while (sign(f(mid - delta)) == 0 || sign(f(mid + delta)) == 0 ||
                   count_roots(chain, mid - delta, mid + delta) > 1)
                delta /= 2;
            int left = count_roots(chain, it.lo, mid - delta);
            int right = count_roots(chain, mid + delta, it.hi);
            if (left > 0) stack.push_back({it.lo, mid - delta, left});
            if (right > 0) stack.push_back({mid + delta, it.hi, right});
            continue;
        }
        int left = count_roots(chain, it.lo, mid);
        int right = it.count - left;
        if (left > 0) stack.push_back({it.lo, mid, left});
        if (right > 0) stack.push_back({mid, it.hi, right});
    }
    std::sort(out.begin(), out.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

RootInterval refine_root(const Poly& f, RootInterval iv, const Rational& width) {
    if (iv.exact) return iv;
    Rational lo = iv.lo, hi = iv.hi;
    int slo = sign(f(lo));
    assert(slo != 0 && sign(f(hi)) != 0);

    auto snap = [&](RootInterval& dst) -> bool {
        Rational cand = simplest_in_interval(lo, hi);
        if (sign(f(cand)) == 0) {
            dst = {cand, cand, true, cand};
            return true;
        }
        return false;
    };

    RootInterval result;
    if (snap(result)) return result;
    while (hi - lo > width) {
        Rational mid = (lo + hi) / 2;
        int sm = sign(f(mid));
        if (sm == 0) return {mid, mid, true, mid};
        if (sm == slo) lo = mid; else hi = mid;
        if (snap(result)) return result;
    }
    return {lo, hi, false, (lo + hi) / 2};
}

} // namespace hwlab::roots
