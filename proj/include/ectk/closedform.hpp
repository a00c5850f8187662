#pragma once

#include <utility>

#include "ectk/domain.hpp"
#include "ectk/poly.hpp"

namespace ectk {

// Generating polynomial of the eventually constant k-tuples:
//   prod_i e_1(X_i)^{n_{i-1}-2} (prod_j e_1(X_j)^2 - 2^k prod_j e_2(X_j)),
// switching to prod_i e_1(X_i)^{n_{i-1}} when some n_i = 1 (where the e_2
// product vanishes and every tuple is eventually constant).
Polynomial p_ec(const Shape& shape);

// Generating polynomial of the eventually N-cyclic k-tuples:
//   ((N!)^k / N) prod_i e_1(X_i)^{n_{i-1}-(N+1)}
//     (prod_j e_1(X_j) e_N(X_j) - (N+1)^k prod_j e_{N+1}(X_j)),
// switching to (N!)^{k-1} (N-1)! prod_i e_1(X_i)^{n_{i-1}-N} e_N(X_i) when
// some n_i < N+1. Throws std::domain_error unless 1 <= N <= min n_i.
Polynomial p_ncyclic(const Shape& shape, int N);

// (N / prod_l l^{m_l} m_l!) * p_ncyclic(shape, N); integer coefficients.
// Throws std::domain_error when |lambda| > min n_i.
Polynomial p_lambda(const Shape& shape, const CycleType& lambda);

// #EC = prod_i n_i^{n_{i-1}-1} (prod_j n_j - prod_j (n_j - 1)).
BigInt card_ec(const Shape& shape);

// Both printed forms of #EC(N), evaluated independently:
//  geometric: prod_i C(n_i,N) * (N!)^k/N * prod_i n_i^{n_{i-1}-(N+1)}
//             * (prod_j n_j - prod_j (n_j-N))
//  algebraic: (1/N) prod_i n_i^{n_{i-1}-N} (n_i-1)!/(n_i-N)!
//             * (prod_j n_j - prod_j (n_j-N))
std::pair<Rat, Rat> card_ncyclic_forms(const Shape& shape, int N);

// The common value of both forms; 0 when N > min n_i. A mismatch between the
// forms is an internal fault (std::logic_error), never expected to fire.
BigInt card_ncyclic(const Shape& shape, int N);

// (N / prod_l l^{m_l} m_l!) * card_ncyclic; 0 when |lambda| > min n_i.
BigInt card_lambda(const Shape& shape, const CycleType& lambda);

// p_k(n) = 1 - (1 - 1/n)^k, the chance a uniform k-tuple between k sets of
// size n is eventually constant.
Rat prob_ec_uniform(long n, long k);

// p_{k,N}(n) = (1/N) n^{-k(N-1)} ((n-1)!/(n-N)!)^k (1 - (1 - N/n)^k);
// returns 0 when N > n. The closed form is stated for n >= N+1 but evaluates
// consistently at n = N as well (callers may flag that case).
Rat prob_ncyclic_uniform(long n, long k, int N);

// lim_{n->inf} p_{cn,N}(n) = (1/N) e^{-c N(N-1)/2} (1 - e^{-cN}).
// The exponents are reported exactly alongside the double evaluation.
struct ProportionalLimit {
    double value = 0.0;
    long prefactor_exponent = 0;  // -c * N(N-1)/2
    long tail_exponent = 0;       // -c * N
};
ProportionalLimit limit_proportional(long c, int N);

// Inclusion-exclusion recursion for the eventually constant count on shape
// (m, n, 2): total minus the two-3-cycle classes minus the 6-cycle classes.
// Always equals card_ec({m, n, 2}).
BigInt recursion_mn2(long m, long n);

}  // namespace ectk
