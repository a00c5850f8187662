#pragma once

#include <string>
#include <vector>

#include "ectk/matrixtree.hpp"
#include "ectk/oracle.hpp"

namespace ectk {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // first counterexample or a short summary
};

struct VerifyOptions {
    std::uint64_t enum_cap = kDefaultEnumCap;
    int det_cap = kDefaultDetCap;
    int workers = 1;
};

// Oracle census against every closed form: counts, weight-sum polynomials,
// completeness, and (on uniform shapes) the probability corollaries.
std::vector<CheckResult> verify_census_suite(const Shape& shape, const VerifyOptions& = {});

// Three-way forest-weight identity det L(U) = closed form = enumeration,
// over every N-choice set of the shape.
std::vector<CheckResult> verify_matrixtree_suite(const Shape& shape, const VerifyOptions& = {});

// Cyclic/forest bijection over every choice set, the cycle-count lemma, and
// the partition of each N-cyclic class by choice sets.
std::vector<CheckResult> verify_decomposition_suite(const Shape& shape, const VerifyOptions& = {});

std::vector<CheckResult> verify_all(const Shape& shape, const VerifyOptions& = {});

bool all_passed(const std::vector<CheckResult>&);

}  // namespace ectk
