#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ectk {

using BigInt = mpz_class;
using Rat = mpq_class;

// Thrown when an enumeration, sampling or determinant request exceeds its
// configured cap. `total` is the refused size, as a decimal string, so the
// caller can decide whether to raise the cap.
class cap_exceeded : public std::runtime_error {
public:
    cap_exceeded(const std::string& what, const BigInt& total)
        : std::runtime_error(what + " (total " + total.get_str() + ")"),
          total_(total.get_str()) {}

    const std::string& total() const { return total_; }

private:
    std::string total_;
};

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);

// base^e for e >= 0; int_pow(0, 0) = 1.
BigInt int_pow(const BigInt& base, unsigned long e);

// n (n-1) ... (n-len+1); equals n!/(n-len)! for len <= n.
BigInt falling_factorial(unsigned long n, unsigned long len);

// q^e for any integer e; negative e inverts (q must be nonzero then).
Rat rat_pow(const Rat& q, long e);

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline double to_double(const Rat& q) { return q.get_d(); }

// Fixed-point decimal rendering with `digits` fractional digits, truncated
// toward zero. Deterministic, no floating point involved.
std::string decimal_string(const Rat& q, int digits);

}  // namespace ectk
