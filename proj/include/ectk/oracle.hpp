#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ectk/domain.hpp"
#include "ectk/poly.hpp"

namespace ectk {

inline constexpr std::uint64_t kDefaultEnumCap = 10'000'000;

// Deterministic mixed-radix enumeration of all k-tuples of a shape, in
// numeric order of the tuple index. Cells are ordered (component, vertex)
// with the last cell varying fastest; the cell for (i, v) holds f_i(v).
class TupleEnumerator {
public:
    // Enumerates tuple indices [begin, end); end = total_tuples when omitted.
    // Throws cap_exceeded when total_tuples(shape) > cap.
    TupleEnumerator(const Shape& shape, std::uint64_t cap = kDefaultEnumCap);
    TupleEnumerator(const Shape& shape, std::uint64_t begin, std::uint64_t end,
                    std::uint64_t cap = kDefaultEnumCap);

    std::uint64_t total() const { return total_; }

    // Fills `out` with the next tuple; false once the range is exhausted.
    bool next(KTuple& out);

private:
    Shape shape_;
    std::vector<int> radix_;       // per cell
    std::vector<int> cell_comp_;   // component of each cell (1-based)
    std::vector<int> cell_vertex_; // vertex of each cell (1-based)
    std::vector<int> digits_;
    std::uint64_t total_ = 0;
    std::uint64_t remaining_ = 0;
    bool first_ = true;

    void seek(std::uint64_t index);
    void write(KTuple& out) const;
};

struct CensusEntry {
    BigInt count;
    Polynomial weight_sum;
};

// Classification of every k-tuple of a shape by the cycle type of its
// stabilized composite. Counts always; weight sums when enabled.
struct Census {
    std::map<CycleType, CensusEntry> by_type;
    bool with_weights = false;

    BigInt total_count() const;
    Polynomial total_weight() const;
    void merge(const Census& other);

    bool operator==(const Census& o) const;
};

struct CensusOptions {
    std::uint64_t cap = kDefaultEnumCap;
    int workers = 1;
    // Default rule: weights accumulate only when sum n_i <= 24.
    std::optional<bool> with_weights;
};

// Exhaustively classifies all tuples. Sharding over workers is merge-order
// independent: the result is identical for any worker count.
Census census(const Shape& shape, const CensusOptions& opts = {});

struct ForestSum {
    BigInt count;
    Polynomial weight_sum;
};

// Enumerates every assignment of one out-edge per non-root vertex (targets in
// the next component) and keeps those whose trails all reach U. The weight of
// an assignment is the product of x_target over its edges.
ForestSum enumerate_forests(const Shape& shape, const NChoiceSet& u,
                            std::uint64_t cap = kDefaultEnumCap);

// Counts k-tuples of bijections U_i -> U_{i+1} whose composition has the
// requested cycle type; nullopt means the single N-cycle type (N).
BigInt enumerate_cycles(const Shape& shape, const NChoiceSet& u,
                        const std::optional<CycleType>& lambda = std::nullopt,
                        std::uint64_t cap = kDefaultEnumCap);

// Exhaustive check of the cyclic/forest factorization over one choice set:
// the tuples whose cyclic vertex set is U must biject onto (cycle covers of
// U) x (forests rooted at U) with multiplicative weights.
struct DecompositionReport {
    bool bijection_holds = false;
    bool weights_factor = false;
    BigInt class_size;                           // tuples with cyclic vertex set U
    BigInt cycle_count;                          // |C_U|, enumerated independently
    BigInt forest_count;                         // |F_U|, enumerated independently
    std::map<CycleType, BigInt> class_size_by_type;

    bool ok() const { return bijection_holds && weights_factor; }
};

DecompositionReport verify_decomposition(const Shape& shape, const NChoiceSet& u,
                                         std::uint64_t cap = kDefaultEnumCap);

// Uniform tuple sampling with a fixed PRNG stream: identical
// (shape, trials, seed) always produces identical counts.
struct SampleResult {
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::map<CycleType, std::uint64_t> counts;

    Rat frequency(const CycleType& t) const;
};

SampleResult sample_tuples(const Shape& shape, std::uint64_t trials, std::uint64_t seed);

}  // namespace ectk
