#include "fglwb/exact.hpp"

#include <cstdlib>

namespace fglwb {

Rat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string rat_to_short_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return rat_to_string(r);
}

Rat rat_from_string(const std::string& text) {
    auto slash = text.find('/');
    BigInt num, den = 1;
    try {
        if (slash == std::string::npos) {
            num = BigInt(text);
        } else {
            num = BigInt(text.substr(0, slash));
            den = BigInt(text.substr(slash + 1));
        }
    } catch (const std::invalid_argument&) {
        throw DomainError("not a rational literal: '" + text + "'");
    }
    return make_rat(num, den);
}

bool GcdCertificate::holds() const {
    if (inputs.size() != lambda.size() || g <= 0) return false;
    BigInt sum = 0;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        sum += lambda[i] * inputs[i];
        if (inputs[i] % g != 0) return false;
    }
    return sum == g;
}

GcdCertificate ext_gcd_vector(const std::vector<BigInt>& m) {
    if (m.empty()) throw DomainError("ext_gcd_vector: empty input");
    for (const auto& v : m)
        if (v == 0) throw DomainError("ext_gcd_vector: zero entry");

    GcdCertificate cert;
    cert.inputs = m;
    cert.lambda.assign(m.size(), BigInt(0));

    // Running state: g = sum lambda_i m_i over the prefix seen so far.
    cert.g = abs(m[0]);
    cert.lambda[0] = sgn(m[0]);
    for (std::size_t k = 1; k < m.size(); ++k) {
        if (m[k] % cert.g == 0) continue;
        // Extended Euclid on (g, |m_k|): s*g + t*|m_k| = gcd.
        BigInt a = cert.g, b = abs(m[k]);
        BigInt s0 = 1, s1 = 0, t0 = 0, t1 = 1;
        while (b != 0) {
            BigInt q = a / b;
            BigInt r = a - q * b;
            a = b;
            b = r;
            BigInt s2 = s0 - q * s1;
            BigInt t2 = t0 - q * t1;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        for (std::size_t i = 0; i < k; ++i) cert.lambda[i] *= s0;
        cert.lambda[k] = t0 * sgn(m[k]);
        cert.g = a;
    }
    return cert;
}

DyadicSplit dyadic_split(const Rat& r) {
    if (r == 0) throw DomainError("dyadic_split: zero");
    DyadicSplit out;
    out.sign = sgn(r) < 0 ? -1 : 1;
    BigInt num = abs(r.get_num());
    BigInt den = r.get_den();
    // r is reduced, so at most one of num/den is even.
    mp_bitcnt_t zn = mpz_scan1(num.get_mpz_t(), 0);
    mp_bitcnt_t zd = mpz_scan1(den.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(num.get_mpz_t(), num.get_mpz_t(), zn);
    mpz_tdiv_q_2exp(den.get_mpz_t(), den.get_mpz_t(), zd);
    out.exponent = static_cast<long>(zn) - static_cast<long>(zd);
    out.odd = make_rat(num, den);
    return out;
}

bool is_dyadic_unit(const Rat& r) {
    if (r == 0) return false;
    return dyadic_split(r).odd == 1;
}

BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) throw DomainError("binomial: k out of range");
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

long prime_power_base(long n) {
    if (n < 2) return 0;
    long p = 0;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return n;
    while (n % p == 0) n /= p;
    return n == 1 ? p : 0;
}

}  // namespace fglwb
