#include "ectk/verify.hpp"

#include "ectk/closedform.hpp"

namespace ectk {

namespace {

void push(std::vector<CheckResult>& out, const std::string& name, bool pass,
          const std::string& detail = "") {
    out.push_back({name, pass, pass ? "" : detail});
}

Polynomial all_tuples_gf(const Shape& shape) {
    Polynomial gf(1);
    for (int i = 1; i <= shape.k(); ++i)
        gf = gf * e_sym(shape, i, 1).pow((unsigned long)shape.size(shape.prev(i)));
    return gf;
}

const CensusEntry& entry_or_empty(const Census& c, const CycleType& t) {
    static const CensusEntry empty{};
    auto it = c.by_type.find(t);
    return it == c.by_type.end() ? empty : it->second;
}

std::vector<CycleType> all_types(const Shape& shape) {
    std::vector<CycleType> out;
    for (int N = 1; N <= shape.min_size(); ++N)
        for (auto& lam : partitions(N)) out.push_back(lam);
    return out;
}

}  // namespace

std::vector<CheckResult> verify_census_suite(const Shape& shape, const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    Census c = census(shape, {opts.enum_cap, opts.workers, std::nullopt});
    BigInt total = shape.total_tuples();

    push(out, "census-totality", c.total_count() == total,
         "classified " + c.total_count().get_str() + " of " + total.get_str());

    bool in_range = true;
    std::string bad;
    for (auto& [type, entry] : c.by_type)
        if (type.sum() < 1 || type.sum() > shape.min_size()) {
            in_range = false;
            bad = type.str();
        }
    push(out, "census-types-in-range", in_range, "type " + bad + " out of range");

    push(out, "card-ec", entry_or_empty(c, CycleType::single(1)).count == card_ec(shape),
         "census " + entry_or_empty(c, CycleType::single(1)).count.get_str() + " vs formula " +
             card_ec(shape).get_str());

    for (int N = 1; N <= shape.min_size(); ++N) {
        BigInt seen = entry_or_empty(c, CycleType::single(N)).count;
        BigInt formula = card_ncyclic(shape, N);
        push(out, "card-ncyclic[N=" + std::to_string(N) + "]", seen == formula,
             "census " + seen.get_str() + " vs formula " + formula.get_str());
    }

    BigInt card_sum = 0;
    for (auto& lam : all_types(shape)) {
        BigInt seen = entry_or_empty(c, lam).count;
        BigInt formula = card_lambda(shape, lam);
        card_sum += formula;
        push(out, "card-lambda[" + lam.str() + "]", seen == formula,
             "census " + seen.get_str() + " vs formula " + formula.get_str());
    }
    push(out, "completeness-cards", card_sum == total,
         "sum of card_lambda " + card_sum.get_str() + " vs total " + total.get_str());

    if (c.with_weights) {
        Polynomial gf = all_tuples_gf(shape);
        push(out, "census-weight-total", c.total_weight() == gf,
             "census weight sum differs from the all-tuples generating function");

        push(out, "poly-ec", entry_or_empty(c, CycleType::single(1)).weight_sum == p_ec(shape),
             "census weight sum for type 1 differs from the closed form");

        for (int N = 1; N <= shape.min_size(); ++N)
            push(out, "poly-ncyclic[N=" + std::to_string(N) + "]",
                 entry_or_empty(c, CycleType::single(N)).weight_sum == p_ncyclic(shape, N),
                 "census weight sum for type " + std::to_string(N) +
                     " differs from the closed form");

        Polynomial lambda_sum;
        for (auto& lam : all_types(shape)) {
            Polynomial formula = p_lambda(shape, lam);
            lambda_sum += formula;
            push(out, "poly-lambda[" + lam.str() + "]",
                 entry_or_empty(c, lam).weight_sum == formula,
                 "census weight sum for type " + lam.str() + " differs from the closed form");
        }
        push(out, "completeness-polys", lambda_sum == gf,
             "sum of p_lambda differs from the all-tuples generating function");
    }

    bool uniform = true;
    for (int n : shape.sizes) uniform = uniform && n == shape.sizes[0];
    if (uniform) {
        long n = shape.sizes[0], k = shape.k();
        Rat frac(entry_or_empty(c, CycleType::single(1)).count, total);
        frac.canonicalize();
        push(out, "prob-ec-uniform", prob_ec_uniform(n, k) == frac,
             "formula vs census fraction differ");
        for (int N = 1; N <= (int)n; ++N) {
            Rat fracN(entry_or_empty(c, CycleType::single(N)).count, total);
            fracN.canonicalize();
            push(out, "prob-ncyclic-uniform[N=" + std::to_string(N) + "]",
                 prob_ncyclic_uniform(n, k, N) == fracN, "formula vs census fraction differ");
        }
    }
    return out;
}

std::vector<CheckResult> verify_matrixtree_suite(const Shape& shape, const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    for (int N = 1; N <= shape.min_size(); ++N) {
        bool pass = true;
        std::string detail;
        for (auto& u : all_choice_sets(shape, N)) {
            Polynomial det = sym_det(laplacian_submatrix(shape, u), opts.det_cap);
            Polynomial closed = forest_weight_closed(shape, u, opts.det_cap);
            Polynomial enumerated = enumerate_forests(shape, u, opts.enum_cap).weight_sum;
            if (!(det == closed && closed == enumerated)) {
                pass = false;
                detail = "counterexample U=" + u.str();
                break;
            }
        }
        push(out, "matrixtree[N=" + std::to_string(N) + "]", pass, detail);
    }
    return out;
}

std::vector<CheckResult> verify_decomposition_suite(const Shape& shape,
                                                    const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    Census c = census(shape, {opts.enum_cap, opts.workers, false});

    for (int N = 1; N <= shape.min_size(); ++N) {
        bool bijection = true, weights = true, sizes = true;
        std::string detail;
        BigInt single_cycle_sum = 0;
        for (auto& u : all_choice_sets(shape, N)) {
            DecompositionReport rep = verify_decomposition(shape, u, opts.enum_cap);
            if (!rep.bijection_holds) {
                bijection = false;
                detail = "U=" + u.str();
            }
            if (!rep.weights_factor) {
                weights = false;
                detail = "U=" + u.str();
            }
            if (rep.class_size != rep.cycle_count * rep.forest_count) {
                sizes = false;
                detail = "U=" + u.str();
            }
            auto it = rep.class_size_by_type.find(CycleType::single(N));
            if (it != rep.class_size_by_type.end()) single_cycle_sum += it->second;
        }
        std::string tag = "[N=" + std::to_string(N) + "]";
        push(out, "decomposition-bijection" + tag, bijection, detail);
        push(out, "decomposition-weights" + tag, weights, detail);
        push(out, "decomposition-class-size" + tag, sizes, detail);

        BigInt census_count = 0;
        auto it = c.by_type.find(CycleType::single(N));
        if (it != c.by_type.end()) census_count = it->second.count;
        push(out, "decomposition-partition" + tag, single_cycle_sum == census_count,
             "sum over choice sets " + single_cycle_sum.get_str() + " vs census " +
                 census_count.get_str());

        // Cycle-count lemma on one representative choice set (the count is
        // the same for every U).
        NChoiceSet u0 = all_choice_sets(shape, N).front();
        BigInt single = enumerate_cycles(shape, u0, std::nullopt, opts.enum_cap);
        BigInt single_formula =
            int_pow(factorial((unsigned long)N), (unsigned long)shape.k()) / N;
        push(out, "cycle-lemma" + tag, single == single_formula,
             "enumerated " + single.get_str() + " vs " + single_formula.get_str());

        for (auto& lam : partitions(N)) {
            BigInt seen = enumerate_cycles(shape, u0, lam, opts.enum_cap);
            BigInt formula = int_pow(factorial((unsigned long)N), (unsigned long)shape.k()) *
                             factorial((unsigned long)N) / lam.symmetry_factor() /
                             factorial((unsigned long)N);
            push(out, "cycle-lemma-lambda[" + lam.str() + "]", seen == formula,
                 "enumerated " + seen.get_str() + " vs " + formula.get_str());
        }
    }
    return out;
}

std::vector<CheckResult> verify_all(const Shape& shape, const VerifyOptions& opts) {
    std::vector<CheckResult> out = verify_census_suite(shape, opts);
    auto mt = verify_matrixtree_suite(shape, opts);
    out.insert(out.end(), mt.begin(), mt.end());
    auto dec = verify_decomposition_suite(shape, opts);
    out.insert(out.end(), dec.begin(), dec.end());
    return out;
}

bool all_passed(const std::vector<CheckResult>& checks) {
    for (auto& c : checks)
        if (!c.pass) return false;
    return true;
}

}  // namespace ectk
