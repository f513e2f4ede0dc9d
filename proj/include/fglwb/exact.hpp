// Exact integer and rational scalars.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace fglwb {

using BigInt = mpz_class;
using Rat = mpq_class;

/// Raised when an operation is called outside its domain.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when two routes to the same quantity disagree.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Reduced rational num/den; throws DomainError on den == 0.
Rat make_rat(const BigInt& num, const BigInt& den = 1);

/// Always "p/q" with q > 0, including q == 1.
std::string rat_to_string(const Rat& r);
/// "p" when q == 1, otherwise "p/q".
std::string rat_to_short_string(const Rat& r);
/// Accepts "p", "-p", "p/q", "-p/q".
Rat rat_from_string(const std::string& text);

struct GcdCertificate {
    std::vector<BigInt> inputs;
    BigInt g;
    std::vector<BigInt> lambda;

    bool holds() const;
};

/// Left fold of two-term extended Euclid. Entries may be negative; g > 0.
GcdCertificate ext_gcd_vector(const std::vector<BigInt>& m);

struct DyadicSplit {
    int sign = 1;
    long exponent = 0;  // power of two, may be negative
    Rat odd;            // odd numerator and odd denominator, positive
};

/// r = sign * 2^exponent * odd.
DyadicSplit dyadic_split(const Rat& r);

/// True iff r = +-2^a for some integer a.
bool is_dyadic_unit(const Rat& r);

BigInt binomial(long n, long k);

/// If n = p^s for a prime p returns p, otherwise 0. Trial division.
long prime_power_base(long n);

}  // namespace fglwb
