#include "hwlab/rational.hpp"

#include "hwlab/errors.hpp"

#include <cctype>
#include <cstdlib>

namespace hwlab {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

[[noreturn]] void bad(std::string_view text) {
    throw ParseError("not a rational: '" + std::string(text) + "'");
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) bad(text);

    bool neg = false;
    if (s.front() == '+' || s.front() == '-') {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) bad(text);

    auto slash = s.find('/');
    if (slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) bad(text);
        Integer n(std::string(num), 10), d(std::string(den), 10);
        if (sgn(d) == 0) bad(text);
        Rational q;
        q.get_num() = neg ? Integer(-n) : n;
        q.get_den() = d;
        q.canonicalize();
        return q;
    }

    // [digits][.digits][e[+-]digits], at least one digit before the exponent
    std::string_view ipart = s, fpart, epart;
    auto epos = s.find_first_of("eE");
    if (epos != std::string_view::npos) {
        epart = s.substr(epos + 1);
        ipart = s.substr(0, epos);
        if (epart.empty()) bad(text);
    }
    auto dot = ipart.find('.');
    if (dot != std::string_view::npos) {
        fpart = ipart.substr(dot + 1);
        ipart = ipart.substr(0, dot);
    }
    if (ipart.empty() && fpart.empty()) bad(text);
    if (!ipart.empty() && !all_digits(ipart)) bad(text);
    if (!fpart.empty() && !all_digits(fpart)) bad(text);

    long expo = 0;
    if (!epart.empty()) {
        bool eneg = false;
        if (epart.front() == '+' || epart.front() == '-') {
            eneg = epart.front() == '-';
            epart.remove_prefix(1);
        }
        if (!all_digits(epart) || epart.size() > 6) bad(text);
        expo = std::strtol(std::string(epart).c_str(), nullptr, 10);
        if (eneg) expo = -expo;
    }

    std::string digits = std::string(ipart) + std::string(fpart);
    if (digits.empty()) bad(text);
    Integer mant(digits, 10);
    long shift = expo - static_cast<long>(fpart.size());

    Rational q(mant);
    if (shift > 0) {
        Integer p10;
        mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(shift));
        q *= Rational(p10);
    } else if (shift < 0) {
        Integer p10;
        mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
        q /= Rational(p10);
    }
    if (neg) q = -q;
    return q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

Rational rat_pow(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    if (sgn(q) == 0) {
        if (e < 0) throw DomainError("rat_pow: zero base with negative exponent");
        return Rational(0);
    }
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), q.get_num().get_mpz_t(), a);
    mpz_pow_ui(d.get_mpz_t(), q.get_den().get_mpz_t(), a);
    Rational r;
    if (e < 0) {
        r.get_num() = d;
        r.get_den() = n;
    } else {
        r.get_num() = n;
        r.get_den() = d;
    }
    r.canonicalize();
    return r;
}

Integer factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

Rational rational_from_bits(std::uint64_t bits, unsigned num_range, unsigned den_range) {
    if (num_range == 0 || den_range == 0) throw DomainError("rational_from_bits: empty range");
    std::uint64_t lo = bits & 0xffffffffULL, hi = bits >> 32;
    long num = static_cast<long>(lo % (2 * num_range + 1)) - static_cast<long>(num_range);
    unsigned long den = 1 + hi % den_range;
    Rational q(static_cast<long>(num), den);
    q.canonicalize();
    return q;
}

} // namespace hwlab
