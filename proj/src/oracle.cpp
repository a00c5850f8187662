#include "ectk/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <thread>

namespace ectk {

namespace {

std::uint64_t checked_total(const Shape& shape, std::uint64_t cap) {
    BigInt total = shape.total_tuples();
    if (total > BigInt((unsigned long)cap))
        throw cap_exceeded("tuple enumeration exceeds cap", total);
    return total.get_ui();
}

// Unbiased bounded draw on the raw 64-bit stream. std::uniform_int_distribution
// is implementation-defined, so it cannot back a byte-identical contract.
std::uint64_t bounded(std::mt19937_64& gen, std::uint64_t n) {
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
        x = gen();
    } while (x >= limit);
    return x % n;
}

}  // namespace

TupleEnumerator::TupleEnumerator(const Shape& shape, std::uint64_t cap)
    : TupleEnumerator(shape, 0, checked_total(shape, cap), cap) {}

TupleEnumerator::TupleEnumerator(const Shape& shape, std::uint64_t begin, std::uint64_t end,
                                 std::uint64_t cap)
    : shape_(shape) {
    total_ = checked_total(shape, cap);
    end = std::min(end, total_);
    begin = std::min(begin, end);
    for (int i = 1; i <= shape_.k(); ++i)
        for (int v = 1; v <= shape_.size(i); ++v) {
            radix_.push_back(shape_.size(shape_.next(i)));
            cell_comp_.push_back(i);
            cell_vertex_.push_back(v);
        }
    digits_.assign(radix_.size(), 0);
    remaining_ = end - begin;
    seek(begin);
}

void TupleEnumerator::seek(std::uint64_t index) {
    for (size_t c = radix_.size(); c-- > 0;) {
        digits_[c] = (int)(index % (std::uint64_t)radix_[c]);
        index /= (std::uint64_t)radix_[c];
    }
}

void TupleEnumerator::write(KTuple& out) const {
    if ((int)out.maps.size() != shape_.k()) {
        out.maps.assign((size_t)shape_.k(), {});
        for (int i = 1; i <= shape_.k(); ++i)
            out.maps[(size_t)i - 1].assign((size_t)shape_.size(i), 1);
    }
    for (size_t c = 0; c < digits_.size(); ++c)
        out.maps[(size_t)cell_comp_[c] - 1][(size_t)cell_vertex_[c] - 1] = digits_[c] + 1;
}

bool TupleEnumerator::next(KTuple& out) {
    if (remaining_ == 0) return false;
    if (!first_) {
        size_t c = digits_.size();
        while (c-- > 0) {
            if (++digits_[c] < radix_[c]) break;
            digits_[c] = 0;
        }
    }
    first_ = false;
    --remaining_;
    write(out);
    return true;
}

BigInt Census::total_count() const {
    BigInt t = 0;
    for (auto& [type, entry] : by_type) t += entry.count;
    return t;
}

Polynomial Census::total_weight() const {
    Polynomial p;
    for (auto& [type, entry] : by_type) p += entry.weight_sum;
    return p;
}

void Census::merge(const Census& other) {
    for (auto& [type, entry] : other.by_type) {
        auto& mine = by_type[type];
        mine.count += entry.count;
        mine.weight_sum += entry.weight_sum;
    }
}

bool Census::operator==(const Census& o) const {
    if (with_weights != o.with_weights || by_type.size() != o.by_type.size()) return false;
    for (auto it = by_type.begin(), jt = o.by_type.begin(); it != by_type.end(); ++it, ++jt) {
        if (!(it->first == jt->first) || it->second.count != jt->second.count ||
            !(it->second.weight_sum == jt->second.weight_sum))
            return false;
    }
    return true;
}

namespace {

Census census_range(const Shape& shape, std::uint64_t begin, std::uint64_t end,
                    std::uint64_t cap, bool with_weights) {
    Census c;
    c.with_weights = with_weights;
    TupleEnumerator en(shape, begin, end, cap);
    KTuple t;
    while (en.next(t)) {
        CycleType type = classify(shape, t);
        auto& entry = c.by_type[type];
        entry.count += 1;
        if (with_weights) entry.weight_sum.add_term(weight(shape, t), 1);
    }
    return c;
}

}  // namespace

Census census(const Shape& shape, const CensusOptions& opts) {
    std::uint64_t total = checked_total(shape, opts.cap);
    bool with_weights = opts.with_weights.value_or(shape.total_vertices() <= 24);
    int workers = std::max(1, opts.workers);

    if (workers == 1 || total < 2)
        return census_range(shape, 0, total, opts.cap, with_weights);

    std::vector<Census> parts((size_t)workers);
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
        std::uint64_t begin = total / (std::uint64_t)workers * (std::uint64_t)w;
        std::uint64_t end = w + 1 == workers ? total : total / (std::uint64_t)workers * (std::uint64_t)(w + 1);
        threads.emplace_back([&, w, begin, end] {
            parts[(size_t)w] = census_range(shape, begin, end, opts.cap, with_weights);
        });
    }
    for (auto& th : threads) th.join();
    Census merged;
    merged.with_weights = with_weights;
    for (auto& part : parts) merged.merge(part);
    return merged;
}

ForestSum enumerate_forests(const Shape& shape, const NChoiceSet& u, std::uint64_t cap) {
    // Non-root cells in (component, vertex) order; each picks a target in the
    // next component.
    struct Cell {
        int comp, vertex, radix;
    };
    std::vector<Cell> cells;
    BigInt assignments = 1;
    for (int i = 1; i <= shape.k(); ++i)
        for (int v = 1; v <= shape.size(i); ++v)
            if (!u.contains(i, v)) {
                cells.push_back({i, v, shape.size(shape.next(i))});
                assignments *= cells.back().radix;
            }
    if (assignments > BigInt((unsigned long)cap))
        throw cap_exceeded("forest enumeration exceeds cap", assignments);

    // Flat vertex ids for trail walking: component offsets into 0..|X|-1.
    std::vector<int> offset((size_t)shape.k() + 1, 0);
    for (int i = 1; i <= shape.k(); ++i) offset[(size_t)i] = offset[(size_t)i - 1] + shape.size(i);
    auto flat = [&](int comp, int v) { return offset[(size_t)comp - 1] + v - 1; };
    int total_vertices = offset[(size_t)shape.k()];

    std::vector<char> is_root((size_t)total_vertices, 0);
    for (int i = 1; i <= shape.k(); ++i)
        for (int v : u.members[(size_t)i - 1]) is_root[(size_t)flat(i, v)] = 1;

    ForestSum out;
    if (cells.empty()) {
        out.count = 1;
        out.weight_sum = Polynomial(1);  // the empty forest
        return out;
    }

    std::vector<int> digits(cells.size(), 0);
    std::vector<int> succ((size_t)total_vertices, -1);
    while (true) {
        for (size_t c = 0; c < cells.size(); ++c)
            succ[(size_t)flat(cells[c].comp, cells[c].vertex)] =
                flat(shape.next(cells[c].comp), digits[c] + 1);

        // Valid iff every non-root trail reaches a root within |X| steps.
        bool ok = true;
        for (size_t c = 0; c < cells.size() && ok; ++c) {
            int cur = flat(cells[c].comp, cells[c].vertex);
            int steps = 0;
            while (!is_root[(size_t)cur]) {
                cur = succ[(size_t)cur];
                if (++steps > total_vertices) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            out.count += 1;
            std::vector<std::pair<VarId, int>> exps;
            for (size_t c = 0; c < cells.size(); ++c)
                exps.emplace_back(VarId{shape.next(cells[c].comp), digits[c] + 1}, 1);
            out.weight_sum.add_term(Monomial::from_exponents(std::move(exps)), 1);
        }

        size_t c = cells.size();
        while (c-- > 0) {
            if (++digits[c] < cells[c].radix) break;
            digits[c] = 0;
            if (c == 0) return out;
        }
    }
}

namespace {

// Enumerates k-tuples of bijections U_i -> U_{i+1} as permutations of
// 0..N-1 acting on the sorted member lists; calls fn with the composite
// permutation on U_1 positions.
template <typename Fn>
void for_each_cycle_cover(int k, int N, Fn&& fn) {
    std::vector<std::vector<int>> perms((size_t)k);
    std::vector<int> base((size_t)N);
    for (int i = 0; i < N; ++i) base[(size_t)i] = i;
    for (auto& p : perms) p = base;

    std::vector<int> comp((size_t)N);
    while (true) {
        for (int v = 0; v < N; ++v) {
            int cur = v;
            for (int i = 0; i < k; ++i) cur = perms[(size_t)i][(size_t)cur];
            comp[(size_t)v] = cur;
        }
        fn(perms, comp);

        int level = k - 1;
        while (level >= 0 && !std::next_permutation(perms[(size_t)level].begin(), perms[(size_t)level].end()))
            --level;
        if (level < 0) break;
        for (int i = level + 1; i < k; ++i) perms[(size_t)i] = base;
    }
}

CycleType cycle_type_of_perm(const std::vector<int>& perm) {
    std::vector<char> seen(perm.size(), 0);
    std::vector<int> lengths;
    for (size_t s = 0; s < perm.size(); ++s) {
        if (seen[s]) continue;
        int len = 0;
        size_t cur = s;
        while (!seen[cur]) {
            seen[cur] = 1;
            cur = (size_t)perm[cur];
            ++len;
        }
        lengths.push_back(len);
    }
    return CycleType(std::move(lengths));
}

}  // namespace

BigInt enumerate_cycles(const Shape& shape, const NChoiceSet& u,
                        const std::optional<CycleType>& lambda, std::uint64_t cap) {
    int N = u.N();
    BigInt total = int_pow(factorial((unsigned long)N), (unsigned long)shape.k());
    if (total > BigInt((unsigned long)cap))
        throw cap_exceeded("cycle enumeration exceeds cap", total);
    CycleType want = lambda.value_or(CycleType::single(N));
    if (want.sum() != N) throw std::domain_error("cycle type does not match choice set size");

    BigInt count = 0;
    for_each_cycle_cover(shape.k(), N, [&](const auto&, const std::vector<int>& comp) {
        if (cycle_type_of_perm(comp) == want) count += 1;
    });
    return count;
}

DecompositionReport verify_decomposition(const Shape& shape, const NChoiceSet& u,
                                         std::uint64_t cap) {
    DecompositionReport report;
    int N = u.N();

    // Independent sides of the product.
    ForestSum forests = enumerate_forests(shape, u, cap);
    report.forest_count = forests.count;
    BigInt cycle_total = int_pow(factorial((unsigned long)N), (unsigned long)shape.k());
    report.cycle_count = cycle_total;

    // Forest assignments keyed by the out-edges of X \ U; cycle covers keyed
    // by the restricted maps on U.
    std::set<std::pair<std::vector<int>, std::vector<int>>> pairs;
    bool weights_ok = true;
    bool all_pairs_valid = true;

    TupleEnumerator en(shape, cap);
    KTuple t;
    while (en.next(t)) {
        if (!(cyclic_part_vertices(shape, t) == u)) continue;
        report.class_size += 1;
        CycleType type = classify(shape, t);
        report.class_size_by_type[type] += 1;

        std::vector<int> cycle_key, forest_key;
        Monomial cycle_weight, forest_weight_m;
        for (int i = 1; i <= shape.k(); ++i) {
            for (int v : u.members[(size_t)i - 1]) {
                int target = t.apply(i, v);
                cycle_key.push_back(target);
                if (!u.contains(shape.next(i), target)) all_pairs_valid = false;
                cycle_weight = cycle_weight * Monomial::var(VarId{shape.next(i), target});
            }
            for (int v = 1; v <= shape.size(i); ++v)
                if (!u.contains(i, v)) {
                    int target = t.apply(i, v);
                    forest_key.push_back(target);
                    forest_weight_m = forest_weight_m * Monomial::var(VarId{shape.next(i), target});
                }
        }
        if (!pairs.emplace(std::move(cycle_key), std::move(forest_key)).second)
            all_pairs_valid = false;  // pairing failed to be injective
        if (!(weight(shape, t) == cycle_weight * forest_weight_m)) weights_ok = false;
    }

    // Bijectivity onto the full product: injective pairing with valid parts,
    // hitting exactly |C_U| x |F_U| pairs.
    report.bijection_holds =
        all_pairs_valid && BigInt((unsigned long)pairs.size()) == cycle_total * forests.count &&
        report.class_size == cycle_total * forests.count;
    report.weights_factor = weights_ok;
    return report;
}

Rat SampleResult::frequency(const CycleType& t) const {
    auto it = counts.find(t);
    unsigned long c = it == counts.end() ? 0 : (unsigned long)it->second;
    Rat f(BigInt(c), BigInt((unsigned long)trials));
    f.canonicalize();
    return f;
}

SampleResult sample_tuples(const Shape& shape, std::uint64_t trials, std::uint64_t seed) {
    if (trials < 1) throw std::domain_error("sample_tuples: trials must be >= 1");
    SampleResult r;
    r.trials = trials;
    r.seed = seed;
    std::mt19937_64 gen(seed);

    KTuple t;
    t.maps.assign((size_t)shape.k(), {});
    for (int i = 1; i <= shape.k(); ++i) t.maps[(size_t)i - 1].assign((size_t)shape.size(i), 1);

    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        for (int i = 1; i <= shape.k(); ++i) {
            int radix = shape.size(shape.next(i));
            for (int v = 1; v <= shape.size(i); ++v)
                t.maps[(size_t)i - 1][(size_t)v - 1] = (int)bounded(gen, (std::uint64_t)radix) + 1;
        }
        ++r.counts[classify(shape, t)];
    }
    return r;
}

}  // namespace ectk
