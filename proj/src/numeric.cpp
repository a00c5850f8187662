#include "ectk/numeric.hpp"

#include <vector>

namespace ectk {

BigInt factorial(unsigned long n) {
    // Per-thread memo; values are shared read-only once returned.
    thread_local std::vector<BigInt> cache{1_mpz};
    while (cache.size() <= n) cache.push_back(cache.back() * (unsigned long)cache.size());
    return cache[n];
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt int_pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

BigInt falling_factorial(unsigned long n, unsigned long len) {
    BigInt r = 1;
    for (unsigned long i = 0; i < len; ++i) {
        if (i > n) return 0;
        r *= BigInt(n - i);
    }
    return r;
}

Rat rat_pow(const Rat& q, long e) {
    if (e == 0) return Rat(1);
    unsigned long a = e > 0 ? (unsigned long)e : (unsigned long)(-e);
    Rat r;
    mpz_pow_ui(r.get_num().get_mpz_t(), q.get_num().get_mpz_t(), a);
    mpz_pow_ui(r.get_den().get_mpz_t(), q.get_den().get_mpz_t(), a);
    r.canonicalize();
    if (e < 0) {
        if (r == 0) throw std::domain_error("rat_pow: zero to a negative power");
        r = 1 / r;
    }
    return r;
}

std::string decimal_string(const Rat& q, int digits) {
    BigInt num = q.get_num();
    BigInt den = q.get_den();
    bool neg = num < 0;
    if (neg) num = -num;
    BigInt scale = int_pow(BigInt(10), (unsigned long)digits);
    BigInt scaled = num * scale / den;  // truncated toward zero
    BigInt ip = scaled / scale;
    BigInt fp = scaled % scale;
    std::string frac = fp.get_str();
    frac.insert(frac.begin(), (size_t)digits - frac.size(), '0');
    std::string out = ip.get_str();
    if (digits > 0) out += "." + frac;
    if (neg && (ip != 0 || fp != 0)) out.insert(out.begin(), '-');
    return out;
}

}  // namespace ectk
