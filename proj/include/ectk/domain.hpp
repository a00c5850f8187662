#pragma once

#include <map>
#include <string>
#include <vector>

#include "ectk/numeric.hpp"
#include "ectk/poly.hpp"

namespace ectk {

// Component sizes (n_1,...,n_k) of the k cyclically arranged vertex sets.
// Component indices are 1-based everywhere and wrap modulo k, so the
// component before 1 is k.
struct Shape {
    std::vector<int> sizes;

    Shape() = default;
    explicit Shape(std::vector<int> s);

    int k() const { return (int)sizes.size(); }
    int size(int component) const { return sizes[(size_t)component - 1]; }

    // Wraps any integer onto 1..k.
    int comp_mod(int i) const;
    int next(int component) const { return comp_mod(component + 1); }
    int prev(int component) const { return comp_mod(component - 1); }

    int min_size() const;
    int total_vertices() const;  // sum n_i

    // Number of k-tuples: prod_i n_i ^ n_{i-1}.
    BigInt total_tuples() const;

    VarId var(int component, int index) const;  // bounds-checked

    std::string str() const;                   // "2,3,2"
    static Shape parse(const std::string&);    // throws std::invalid_argument

    bool operator==(const Shape&) const = default;
};

// One function per component: maps[i][v-1] = f_{i+1}(v), a 1-based vertex of
// component i+2 (mod k). Immutable by convention once built.
struct KTuple {
    std::vector<std::vector<int>> maps;

    // f_{component}(v), both 1-based.
    int apply(int component, int v) const { return maps[(size_t)component - 1][(size_t)v - 1]; }
};

bool valid(const Shape& shape, const KTuple& t);

// Integer partition recording the disjoint-cycle lengths of a permutation,
// weakly decreasing. (1) is the eventually-constant class; (N) the single
// N-cycle class.
struct CycleType {
    std::vector<int> parts;

    CycleType() = default;
    explicit CycleType(std::vector<int> p);
    static CycleType single(int N) { return CycleType({N}); }

    int sum() const;
    std::map<int, int> multiplicities() const;  // l -> m_l

    // prod_l l^{m_l} m_l!  (the centralizer order of the cycle type in S_N).
    BigInt symmetry_factor() const;

    std::string str() const;                 // "2+1+1"
    static CycleType parse(const std::string&);

    bool operator==(const CycleType&) const = default;
    bool operator<(const CycleType& o) const;
};

// All partitions of N, in the CycleType order (deterministic).
std::vector<CycleType> partitions(int N);

// Vertex subset with exactly N members in each component; members[i] is the
// sorted 1-based index list for component i+1.
struct NChoiceSet {
    std::vector<std::vector<int>> members;

    int N() const { return members.empty() ? 0 : (int)members[0].size(); }
    bool contains(int component, int v) const;

    std::string str() const;  // "1,2;1,3"
    // Parses and validates against the shape (equal cardinalities, distinct
    // in-range indices); throws std::invalid_argument.
    static NChoiceSet parse(const std::string&, const Shape&);

    bool operator==(const NChoiceSet&) const = default;
    bool operator<(const NChoiceSet& o) const { return members < o.members; }
};

// Every N-choice set of the shape, N fixed, in lexicographic order.
std::vector<NChoiceSet> all_choice_sets(const Shape& shape, int N);

// The composition f_k ... f_1 : X_1 -> X_1 as a 1-based array of length n_1.
std::vector<int> composite(const Shape& shape, const KTuple& t);

// Eventual image of X_1 under the endomorphism: iterates image-taking until
// the image set is fixed, which happens within n_1 steps since images weakly
// shrink. The endomorphism permutes the returned (sorted) set.
std::vector<int> stable_image(const Shape& shape, const std::vector<int>& endo);

// Cycle type of the permutation induced on the stable image. Total: every
// valid tuple gets exactly one type, with 1 <= |type| <= min n_i.
CycleType classify(const Shape& shape, const KTuple& t);

// w(f) = prod_i prod_{v in X_i} x_{f_i(v)}, of total degree sum n_i.
Monomial weight(const Shape& shape, const KTuple& t);

// Vertex set of the cyclic part of the tuple's functional digraph: component
// 1 is the stable image of the composite, the rest are successive images
// under f_1, f_2, .... Each f_i restricts to a bijection between consecutive
// parts, so the result is an N-choice set.
NChoiceSet cyclic_part_vertices(const Shape& shape, const KTuple& t);

}  // namespace ectk
