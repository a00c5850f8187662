#include "ectk/closedform.hpp"

#include <algorithm>

namespace ectk {

namespace {

// Scalar (N!)^k / (prod_l l^{m_l} m_l!); integral since N!/prod l^{m_l} m_l!
// counts the permutations of cycle type lambda.
BigInt lambda_scalar(int k, const CycleType& lambda) {
    BigInt num = int_pow(factorial((unsigned long)lambda.sum()), (unsigned long)k);
    BigInt den = lambda.symmetry_factor();
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error("lambda scalar not integral");
    return q;
}

// Body of the N-cyclic generating polynomial without its scalar prefactor.
Polynomial ncyclic_body(const Shape& shape, int N) {
    bool remark = false;
    for (int n : shape.sizes)
        if (n < N + 1) remark = true;

    if (remark) {
        // prod_i e_1(X_i)^{n_{i-1}-N} e_N(X_i); the e_{N+1} product vanishes
        // and one e_1 per factor cancels into the exponent.
        Polynomial out(1);
        for (int i = 1; i <= shape.k(); ++i) {
            out = out * e_sym(shape, i, 1).pow((unsigned long)(shape.size(shape.prev(i)) - N));
            out = out * e_sym(shape, i, N);
        }
        return out;
    }

    Polynomial prefix(1), head(1), tail(1);
    for (int i = 1; i <= shape.k(); ++i) {
        prefix = prefix * e_sym(shape, i, 1).pow((unsigned long)(shape.size(shape.prev(i)) - (N + 1)));
        head = head * e_sym(shape, i, 1) * e_sym(shape, i, N);
        tail = tail * e_sym(shape, i, N + 1);
    }
    return prefix * (head - tail * int_pow(BigInt(N + 1), (unsigned long)shape.k()));
}

}  // namespace

Polynomial p_ec(const Shape& shape) {
    if (shape.min_size() == 1) {
        Polynomial out(1);
        for (int i = 1; i <= shape.k(); ++i)
            out = out * e_sym(shape, i, 1).pow((unsigned long)shape.size(shape.prev(i)));
        return out;
    }
    Polynomial prefix(1), head(1), tail(1);
    for (int i = 1; i <= shape.k(); ++i) {
        prefix = prefix * e_sym(shape, i, 1).pow((unsigned long)(shape.size(shape.prev(i)) - 2));
        head = head * e_sym(shape, i, 1).pow(2);
        tail = tail * e_sym(shape, i, 2);
    }
    return prefix * (head - tail * int_pow(BigInt(2), (unsigned long)shape.k()));
}

Polynomial p_ncyclic(const Shape& shape, int N) {
    if (N < 1 || N > shape.min_size())
        throw std::domain_error("p_ncyclic: need 1 <= N <= min n_i (no N-choice set otherwise)");
    return ncyclic_body(shape, N) * lambda_scalar(shape.k(), CycleType::single(N));
}

Polynomial p_lambda(const Shape& shape, const CycleType& lambda) {
    int N = lambda.sum();
    if (N > shape.min_size())
        throw std::domain_error("p_lambda: |lambda| exceeds min n_i (no N-choice set)");
    return ncyclic_body(shape, N) * lambda_scalar(shape.k(), lambda);
}

BigInt card_ec(const Shape& shape) {
    BigInt prefix = 1, full = 1, reduced = 1;
    for (int i = 1; i <= shape.k(); ++i) {
        prefix *= int_pow(BigInt(shape.size(i)), (unsigned long)(shape.size(shape.prev(i)) - 1));
        full *= shape.size(i);
        reduced *= shape.size(i) - 1;
    }
    return prefix * (full - reduced);
}

std::pair<Rat, Rat> card_ncyclic_forms(const Shape& shape, int N) {
    if (N < 1) throw std::domain_error("card_ncyclic: N must be >= 1");
    Rat bracket = 0;
    {
        Rat full = 1, reduced = 1;
        for (int n : shape.sizes) {
            full *= n;
            reduced *= n - N;
        }
        bracket = full - reduced;
    }

    Rat geometric = rat_pow(Rat(factorial((unsigned long)N)), shape.k()) / N;
    Rat algebraic = Rat(1, (unsigned long)N);
    for (int i = 1; i <= shape.k(); ++i) {
        long n = shape.size(i);
        long e_prev = shape.size(shape.prev(i));
        geometric *= Rat(binomial((unsigned long)n, (unsigned long)N));
        geometric *= rat_pow(Rat(n), e_prev - (N + 1));
        algebraic *= rat_pow(Rat(n), e_prev - N);
        if (n >= N)
            algebraic *= Rat(falling_factorial((unsigned long)(n - 1), (unsigned long)(N - 1)));
        else
            algebraic *= 0;  // (n-1)!/(n-N)! with n < N: empty class
    }
    geometric *= bracket;
    algebraic *= bracket;
    return {geometric, algebraic};
}

BigInt card_ncyclic(const Shape& shape, int N) {
    if (N < 1) throw std::domain_error("card_ncyclic: N must be >= 1");
    if (N > shape.min_size()) return 0;
    auto [geometric, algebraic] = card_ncyclic_forms(shape, N);
    if (geometric != algebraic)
        throw std::logic_error("card_ncyclic: printed forms disagree on shape " + shape.str() +
                               ", N=" + std::to_string(N));
    if (!is_integer(geometric)) throw std::logic_error("card_ncyclic: non-integer value");
    return geometric.get_num();
}

BigInt card_lambda(const Shape& shape, const CycleType& lambda) {
    int N = lambda.sum();
    if (N > shape.min_size()) return 0;
    Rat value = Rat(card_ncyclic(shape, N)) * Rat(BigInt(N)) / Rat(lambda.symmetry_factor());
    if (!is_integer(value)) throw std::logic_error("card_lambda: non-integer value");
    return value.get_num();
}

Rat prob_ec_uniform(long n, long k) {
    if (n < 1 || k < 1) throw std::domain_error("prob_ec_uniform: need n, k >= 1");
    return Rat(1) - rat_pow(Rat(n - 1, n), k);
}

Rat prob_ncyclic_uniform(long n, long k, int N) {
    if (n < 1 || k < 1 || N < 1) throw std::domain_error("prob_ncyclic_uniform: need n, k, N >= 1");
    if (N > n) return Rat(0);
    Rat value = Rat(1, (unsigned long)N);
    value *= rat_pow(Rat(n), -k * (long)(N - 1));
    value *= rat_pow(Rat(falling_factorial((unsigned long)(n - 1), (unsigned long)(N - 1))), k);
    value *= Rat(1) - rat_pow(Rat(n - N, n), k);
    return value;
}

ProportionalLimit limit_proportional(long c, int N) {
    if (c < 1 || N < 1) throw std::domain_error("limit_proportional: need c, N >= 1");
    ProportionalLimit out;
    out.prefactor_exponent = -c * (long)N * (N - 1) / 2;
    out.tail_exponent = -c * (long)N;
    out.value = std::exp((double)out.prefactor_exponent) *
                (1.0 - std::exp((double)out.tail_exponent)) / (double)N;
    return out;
}

BigInt recursion_mn2(long m, long n) {
    if (m < 1 || n < 1) throw std::domain_error("recursion_mn2: need m, n >= 1");
    BigInt total = int_pow(BigInt(2), (unsigned long)n) * int_pow(BigInt(n), (unsigned long)m) *
                   BigInt(m) * BigInt(m);
    BigInt two_cycles = 0, six_cycles = 0;
    for (long a = 1; a <= m - 1; ++a)
        for (long b = 1; b <= n - 1; ++b) {
            BigInt choose = binomial((unsigned long)m, (unsigned long)a) *
                            binomial((unsigned long)n, (unsigned long)b);
            two_cycles += choose * card_ec(Shape({(int)a, (int)b, 1})) *
                          card_ec(Shape({(int)(m - a), (int)(n - b), 1}));
            six_cycles += choose * BigInt(a) * int_pow(BigInt(b), (unsigned long)a) *
                          BigInt(m - a) * int_pow(BigInt(n - b), (unsigned long)(m - a));
        }
    return total - two_cycles - six_cycles;
}

}  // namespace ectk
