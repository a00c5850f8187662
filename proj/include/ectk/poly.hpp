#pragma once

#include <compare>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ectk/numeric.hpp"

namespace ectk {

struct Shape;

// Formal variable x[component][index], both 1-based. Ordered by
// (component, index); this ordering fixes the canonical monomial form.
struct VarId {
    int component = 0;
    int index = 0;

    auto operator<=>(const VarId&) const = default;

    std::string str() const;                  // "x[1][2]"
    static VarId parse(const std::string&);   // throws std::invalid_argument
};

// Product of variables with positive exponents, stored sparse and sorted by
// VarId. The empty monomial is the constant 1.
class Monomial {
public:
    Monomial() = default;
    static Monomial var(VarId v, int exp = 1);
    static Monomial from_exponents(std::vector<std::pair<VarId, int>> exps);

    const std::vector<std::pair<VarId, int>>& exponents() const { return exps_; }
    int degree() const { return degree_; }
    bool is_one() const { return exps_.empty(); }
    int exponent(VarId v) const;

    Monomial operator*(const Monomial& o) const;
    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

    // Canonical order: total degree first, then lexicographic with the
    // higher exponent on the earliest variable sorting first, so that for
    // equal degree x[1][1]^2 < x[1][1]x[1][2] < x[1][2]^2.
    static int cmp(const Monomial& a, const Monomial& b);
    bool operator<(const Monomial& o) const { return cmp(*this, o) < 0; }

    std::string str() const;  // "x[1][1]^2*x[2][1]", "1" for the empty monomial

private:
    std::vector<std::pair<VarId, int>> exps_;  // sorted by VarId, exps > 0
    int degree_ = 0;
};

// Sparse multivariate polynomial with arbitrary-precision integer
// coefficients. Zero coefficients are never stored; the zero polynomial has
// no terms. All operations are pure; values are safe to share across threads.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(long c) { add_term(Monomial(), BigInt(c)); }
    Polynomial(const BigInt& c) { add_term(Monomial(), c); }
    static Polynomial variable(VarId v) { return from_monomial(Monomial::var(v)); }
    static Polynomial from_monomial(const Monomial& m, const BigInt& coeff = 1);

    const std::map<Monomial, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    // Degree of the zero polynomial is -1 (reporting convention).
    int degree() const;
    bool is_homogeneous() const;

    void add_term(const Monomial& m, const BigInt& coeff);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const BigInt& c) const;
    Polynomial& operator+=(const Polynomial& o);

    Polynomial pow(unsigned long e) const;  // pow(anything, 0) = 1

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

    // Exact substitution; every variable occurring in the polynomial must be
    // covered or a std::domain_error is thrown.
    Rat evaluate(const std::map<VarId, Rat>& assignment) const;
    Rat evaluate_all_ones() const;

    // Applies a variable relabeling to every monomial (used for the
    // multisymmetry checks).
    Polynomial map_vars(const std::function<VarId(VarId)>& f) const;

    std::set<VarId> variables() const;

    std::string str() const;  // "0" for zero, terms in canonical order

    // {"terms":[{"exps":{"x[1][2]":3,...},"coeff":"<decimal>"}]}, terms in
    // canonical monomial order, coefficients as decimal strings.
    nlohmann::json to_json() const;
    static Polynomial from_json(const nlohmann::json&);

private:
    std::map<Monomial, BigInt> terms_;
};

inline Polynomial operator*(const BigInt& c, const Polynomial& p) { return p * c; }

// j-th elementary symmetric polynomial of the variables of one shape
// component, minus an excluded index set: sum over j-element subsets S of the
// remaining indices of prod_{v in S} x[component][v]. j = 0 gives 1; j larger
// than the number of available variables gives 0.
Polynomial e_sym(const Shape& shape, int component, const std::set<int>& excluded, int j);
Polynomial e_sym(const Shape& shape, int component, int j);

}  // namespace ectk
