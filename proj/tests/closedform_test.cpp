#include <doctest.h>

#include <cmath>
#include <random>

#include "ectk/closedform.hpp"
#include "ectk/matrixtree.hpp"
#include "ectk/oracle.hpp"

using namespace ectk;

namespace {

Polynomial x(int comp, int idx) { return Polynomial::variable(VarId{comp, idx}); }

Polynomial all_tuples_gf(const Shape& s) {
    Polynomial gf(1);
    for (int i = 1; i <= s.k(); ++i)
        gf = gf * e_sym(s, i, 1).pow((unsigned long)s.size(s.prev(i)));
    return gf;
}

// Independent route to the same generating polynomials: the scalar times the
// sum over N-choice sets of (prod_{u in U} x_u) det L(U). Exercises none of
// the elementary-symmetric reductions used by the closed forms.
Polynomial choice_set_sum(const Shape& s, int N) {
    Polynomial sum;
    for (auto& u : all_choice_sets(s, N)) {
        Monomial root_cycle;
        for (int i = 1; i <= s.k(); ++i)
            for (int v : u.members[(size_t)i - 1])
                root_cycle = root_cycle * Monomial::var(VarId{i, v});
        sum += Polynomial::from_monomial(root_cycle) * sym_det(laplacian_submatrix(s, u));
    }
    return sum;
}

BigInt census_count(const Census& c, const CycleType& t) {
    auto it = c.by_type.find(t);
    return it == c.by_type.end() ? BigInt(0) : it->second.count;
}

}  // namespace

TEST_CASE("eventually constant generating polynomial") {
    SUBCASE("pairs worked example") {
        Shape s({2, 2});
        Polynomial expect = (x(1, 1) + x(1, 2)).pow(2) * (x(2, 1) + x(2, 2)).pow(2) -
                            BigInt(4) * (x(1, 1) * x(1, 2) * x(2, 1) * x(2, 2));
        CHECK(p_ec(s) == expect);
        CHECK(p_ec(s).term_count() == 8);
        CHECK(p_ec(s).evaluate_all_ones() == 12);
    }
    SUBCASE("singleton components force a single product") {
        Shape s({1, 1});
        CHECK(p_ec(s) == x(1, 1) * x(2, 1));
    }
    SUBCASE("singleton branch equals the choice-set sum") {
        for (const char* str : {"1,2", "1,1,2", "3,1"}) {
            Shape s = Shape::parse(str);
            CAPTURE(str);
            CHECK(p_ec(s) == choice_set_sum(s, 1));
            CHECK(p_ec(s) == all_tuples_gf(s));  // every tuple eventually constant
        }
    }
    SUBCASE("homogeneous of degree sum n_i") {
        for (const char* str : {"2,2", "3,2", "2,2,2", "4"}) {
            Shape s = Shape::parse(str);
            CHECK(p_ec(s).is_homogeneous());
            CHECK(p_ec(s).degree() == s.total_vertices());
        }
    }
}

TEST_CASE("eventually N-cyclic generating polynomial") {
    SUBCASE("swap on two points") {
        Shape s({2});
        CHECK(p_ncyclic(s, 2) == x(1, 1) * x(1, 2));
    }
    SUBCASE("N=1 reduces to the eventually constant polynomial") {
        for (const char* str : {"2,2", "3,3", "1,2", "2,3,2"}) {
            Shape s = Shape::parse(str);
            CAPTURE(str);
            CHECK(p_ncyclic(s, 1) == p_ec(s));
        }
    }
    SUBCASE("two 3-cycles among 27 endomorphisms") {
        CHECK(p_ncyclic(Shape({3}), 3).evaluate_all_ones() == 2);
    }
    SUBCASE("out-of-range N is a domain error") {
        CHECK_THROWS_AS(p_ncyclic(Shape({2, 3}), 3), std::domain_error);
        CHECK_THROWS_AS(p_ncyclic(Shape({2, 2}), 0), std::domain_error);
    }
    SUBCASE("agrees with the independent choice-set determinant sum") {
        for (const char* str : {"2,2", "2,3", "3,3", "4", "2,2,2"}) {
            Shape s = Shape::parse(str);
            CAPTURE(str);
            for (int N = 1; N <= s.min_size(); ++N) {
                BigInt scalar = int_pow(factorial((unsigned long)N), (unsigned long)s.k()) / N;
                CHECK(p_ncyclic(s, N) == choice_set_sum(s, N) * scalar);
            }
        }
    }
}

TEST_CASE("lambda-cyclic generating polynomial") {
    SUBCASE("single-part types coincide with the N-cyclic polynomial") {
        Shape s({3, 3});
        for (int N = 1; N <= 3; ++N) CHECK(p_lambda(s, CycleType::single(N)) == p_ncyclic(s, N));
    }
    SUBCASE("two fixed points on (2,2): ratio 2/(1^2 2!) = 1") {
        Shape s({2, 2});
        CHECK(p_lambda(s, CycleType({1, 1})) == p_ncyclic(s, 2));
    }
    SUBCASE("census weight sums match type by type") {
        for (const char* str : {"2,2", "2,3", "3"}) {
            Shape s = Shape::parse(str);
            CAPTURE(str);
            Census c = census(s);
            for (int N = 1; N <= s.min_size(); ++N)
                for (auto& lam : partitions(N)) {
                    CAPTURE(lam.str());
                    auto it = c.by_type.find(lam);
                    Polynomial seen = it == c.by_type.end() ? Polynomial() : it->second.weight_sum;
                    CHECK(p_lambda(s, lam) == seen);
                }
        }
    }
    SUBCASE("transpositions-with-a-fixed-point count on a 3-set") {
        CHECK(p_lambda(Shape({3}), CycleType({2, 1})).evaluate_all_ones() == 3);
    }
    SUBCASE("completeness: the classes sum to the all-tuples function") {
        for (const char* str : {"2,2", "3,3", "2,2,2", "1,2"}) {
            Shape s = Shape::parse(str);
            CAPTURE(str);
            Polynomial sum;
            BigInt card_sum = 0;
            for (int N = 1; N <= s.min_size(); ++N)
                for (auto& lam : partitions(N)) {
                    sum += p_lambda(s, lam);
                    card_sum += card_lambda(s, lam);
                }
            CHECK(sum == all_tuples_gf(s));
            CHECK(card_sum == s.total_tuples());
        }
    }
    SUBCASE("multisymmetry under within-component transpositions") {
        std::mt19937_64 gen(3);
        for (const char* str : {"3,3", "2,2,2", "4,3"}) {
            Shape s = Shape::parse(str);
            CAPTURE(str);
            for (int trial = 0; trial < 4; ++trial) {
                int comp = (int)(gen() % (std::uint64_t)s.k()) + 1;
                int a = (int)(gen() % (std::uint64_t)s.size(comp)) + 1;
                int b = (int)(gen() % (std::uint64_t)s.size(comp)) + 1;
                auto transpose = [&](VarId v) {
                    if (v.component == comp && v.index == a) return VarId{comp, b};
                    if (v.component == comp && v.index == b) return VarId{comp, a};
                    return v;
                };
                CHECK(p_ec(s) == p_ec(s).map_vars(transpose));
                CHECK(p_ncyclic(s, 2) == p_ncyclic(s, 2).map_vars(transpose));
                CHECK(p_lambda(s, CycleType({1, 1})) ==
                      p_lambda(s, CycleType({1, 1})).map_vars(transpose));
            }
        }
    }
}

TEST_CASE("cardinalities") {
    SUBCASE("single endomorphisms: n^{n-1}") {
        CHECK(card_ec(Shape({3})) == 9);
        for (int n = 1; n <= 7; ++n)
            CHECK(card_ec(Shape({n})) == int_pow(BigInt(n), (unsigned long)(n - 1)));
    }
    SUBCASE("pairs formula n1^{n2-1} n2^{n1-1} (n1+n2-1)") {
        for (int n1 = 1; n1 <= 5; ++n1)
            for (int n2 = 1; n2 <= 5; ++n2) {
                BigInt expect = int_pow(BigInt(n1), (unsigned long)(n2 - 1)) *
                                int_pow(BigInt(n2), (unsigned long)(n1 - 1)) *
                                BigInt(n1 + n2 - 1);
                CHECK(card_ec(Shape({n1, n2})) == expect);
            }
        CHECK(card_ec(Shape({2, 2})) == 12);
    }
    SUBCASE("triples formula on the all-2 shape") {
        CHECK(card_ec(Shape({2, 2, 2})) == 56);  // 8 * (4+4+4-6+1)
    }
    SUBCASE("eventually N-cyclic counts") {
        CHECK(card_ncyclic(Shape({2}), 2) == 1);  // the transposition
        CHECK(card_ncyclic(Shape({3}), 3) == 2);  // the two 3-cycles
        for (const char* str : {"2,2", "2,3"})
            CHECK(card_ncyclic(Shape::parse(str), 1) == card_ec(Shape::parse(str)));
        CHECK(card_ncyclic(Shape({2, 2}), 3) == 0);  // no 3-choice set
    }
    SUBCASE("both printed forms agree for k <= 3, n_i <= 6") {
        for (int k = 1; k <= 3; ++k) {
            std::vector<int> sizes((size_t)k, 1);
            while (true) {
                Shape s(sizes);
                for (int N = 1; N <= s.min_size(); ++N) {
                    auto [geometric, algebraic] = card_ncyclic_forms(s, N);
                    CHECK(geometric == algebraic);
                    CHECK(is_integer(geometric));
                    CHECK(card_ncyclic(s, N) == geometric.get_num());
                }
                int pos = k - 1;
                while (pos >= 0 && sizes[(size_t)pos] == 6) sizes[(size_t)pos--] = 1;
                if (pos < 0) break;
                ++sizes[(size_t)pos];
            }
        }
    }
    SUBCASE("lambda counts against totality on (2,2)") {
        Shape s({2, 2});
        CHECK(card_lambda(s, CycleType({1})) == card_ec(s));
        CHECK(card_lambda(s, CycleType({1, 1})) ==
              s.total_tuples() - card_ec(s) - card_ncyclic(s, 2));
        CHECK(card_lambda(s, CycleType({1, 1})) == 2);
        CHECK(card_lambda(s, CycleType({2, 1})) == 0);  // |lambda| > min size
    }
    SUBCASE("lambda counts against the census on (3)") {
        Shape s({3});
        Census c = census(s);
        for (int N = 1; N <= 3; ++N)
            for (auto& lam : partitions(N))
                CHECK(card_lambda(s, lam) == census_count(c, lam));
    }
    SUBCASE("consistency: polynomials at all ones equal the counts") {
        for (const char* str : {"2,2", "2,3", "3,3", "2,2,2", "1,2"}) {
            Shape s = Shape::parse(str);
            CAPTURE(str);
            CHECK(p_ec(s).evaluate_all_ones() == Rat(card_ec(s)));
            for (int N = 1; N <= s.min_size(); ++N) {
                CHECK(p_ncyclic(s, N).evaluate_all_ones() == Rat(card_ncyclic(s, N)));
                for (auto& lam : partitions(N))
                    CHECK(p_lambda(s, lam).evaluate_all_ones() == Rat(card_lambda(s, lam)));
            }
        }
    }
}

TEST_CASE("probabilities") {
    SUBCASE("single endomorphism is eventually constant with probability 1/n") {
        for (long n = 1; n <= 9; ++n) CHECK(prob_ec_uniform(n, 1) == Rat(1, (unsigned long)n));
    }
    SUBCASE("pairs on two points: 12/16") {
        CHECK(prob_ec_uniform(2, 2) == Rat(3, 4));
    }
    SUBCASE("singleton sets are always eventually constant") {
        for (long k = 1; k <= 5; ++k) CHECK(prob_ec_uniform(1, k) == 1);
    }
    SUBCASE("N-cyclic specializations") {
        CHECK(prob_ncyclic_uniform(2, 1, 2) == Rat(1, 4));
        CHECK(prob_ncyclic_uniform(3, 1, 3) == Rat(2, 27));
        CHECK(prob_ncyclic_uniform(5, 2, 7) == 0);  // N > n
        for (auto [n, k] : std::vector<std::pair<long, long>>{{2, 2}, {3, 3}})
            CHECK(prob_ncyclic_uniform(n, k, 1) == prob_ec_uniform(n, k));
    }
    SUBCASE("probability equals cardinality over total") {
        for (auto [n, k] : std::vector<std::pair<long, long>>{{2, 2}, {3, 2}, {2, 3}}) {
            Shape s(std::vector<int>((size_t)k, (int)n));
            Rat total(s.total_tuples());
            CHECK(prob_ec_uniform(n, k) == Rat(card_ec(s)) / total);
            for (int N = 1; N <= (int)n; ++N)
                CHECK(prob_ncyclic_uniform(n, k, N) == Rat(card_ncyclic(s, N)) / total);
        }
    }
    SUBCASE("the formula remains consistent at n = N") {
        // Stated for n >= N+1; at n = N it still matches the exact count.
        for (int n = 2; n <= 4; ++n) {
            Shape s(std::vector<int>(2, n));
            CHECK(prob_ncyclic_uniform(n, 2, n) ==
                  Rat(card_ncyclic(s, n)) / Rat(s.total_tuples()));
        }
    }
}

TEST_CASE("asymptotics as finite assertions") {
    SUBCASE("|n p_k(n) - k| <= k^2/n") {
        for (long n : {100L, 1000L, 10000L})
            for (long k = 1; k <= 5; ++k) {
                Rat dev = Rat(n) * prob_ec_uniform(n, k) - k;
                if (dev < 0) dev = -dev;
                CHECK(dev <= Rat(k * k, (unsigned long)n));
            }
    }
    SUBCASE("N-cyclic analogue with the derived constant") {
        // From the expansion n p - k = -(C(k,2) N + k^2 C(N,2))/n + O(1/n^2);
        // the slack k^2 absorbs the higher-order terms at n >= 100.
        for (long n : {100L, 1000L, 10000L})
            for (long k = 1; k <= 3; ++k)
                for (int N = 1; N <= 3; ++N) {
                    Rat dev = Rat(n) * prob_ncyclic_uniform(n, k, N) - k;
                    if (dev < 0) dev = -dev;
                    long bound = k * k * (1 + N * (N - 1) / 2) + N * k * (k - 1) / 2;
                    CHECK(dev <= Rat(bound, (unsigned long)n));
                }
    }
    SUBCASE("proportional limit values") {
        ProportionalLimit l11 = limit_proportional(1, 1);
        CHECK(l11.prefactor_exponent == 0);
        CHECK(l11.tail_exponent == -1);
        CHECK(std::abs(l11.value - 0.6321205588285577) < 1e-12);  // 1 - 1/e

        ProportionalLimit l12 = limit_proportional(1, 2);
        CHECK(l12.prefactor_exponent == -1);
        CHECK(l12.tail_exponent == -2);
        CHECK(std::abs(l12.value - 0.5 * std::exp(-1.0) * (1.0 - std::exp(-2.0))) < 1e-15);
    }
    SUBCASE("exact probabilities approach the limit") {
        for (long c = 1; c <= 2; ++c) {
            double lim = limit_proportional(c, 1).value;
            for (long n : {1000L, 10000L})
                CHECK(std::abs(to_double(prob_ec_uniform(n, c * n)) - lim) < 1e-3);
        }
    }
}

TEST_CASE("recursion for shapes (m, n, 2)") {
    CHECK(recursion_mn2(2, 2) == 56);
    CHECK(recursion_mn2(2, 2) == card_ec(Shape({2, 2, 2})));
    for (long m = 1; m <= 4; ++m)
        for (long n = 1; n <= 4; ++n) {
            CAPTURE(m);
            CAPTURE(n);
            CHECK(recursion_mn2(m, n) == card_ec(Shape({(int)m, (int)n, 2})));
        }
    // The m = n = 1 case reduces to the total count: every tuple on (1,1,2)
    // is eventually constant.
    CHECK(recursion_mn2(1, 1) == Shape({1, 1, 2}).total_tuples());
}
