#include "ectk/domain.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ectk {

namespace {

std::vector<int> parse_int_list(const std::string& s, char sep, const std::string& what) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad " + what + ": '" + s + "'");
        }
        if (pos != item.size()) throw std::invalid_argument("bad " + what + ": '" + s + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty " + what + ": '" + s + "'");
    return out;
}

}  // namespace

Shape::Shape(std::vector<int> s) : sizes(std::move(s)) {
    if (sizes.empty()) throw std::invalid_argument("shape needs at least one component");
    for (int n : sizes)
        if (n < 1) throw std::invalid_argument("shape sizes must be positive");
}

int Shape::comp_mod(int i) const {
    int m = (i - 1) % k();
    if (m < 0) m += k();
    return m + 1;
}

int Shape::min_size() const { return *std::min_element(sizes.begin(), sizes.end()); }

int Shape::total_vertices() const { return std::accumulate(sizes.begin(), sizes.end(), 0); }

BigInt Shape::total_tuples() const {
    BigInt total = 1;
    for (int i = 1; i <= k(); ++i)
        total *= int_pow(BigInt(size(i)), (unsigned long)size(prev(i)));
    return total;
}

VarId Shape::var(int component, int index) const {
    if (component < 1 || component > k() || index < 1 || index > size(component))
        throw std::domain_error("variable out of range for shape");
    return VarId{component, index};
}

std::string Shape::str() const {
    std::string out;
    for (int n : sizes) {
        if (!out.empty()) out += ",";
        out += std::to_string(n);
    }
    return out;
}

Shape Shape::parse(const std::string& s) { return Shape(parse_int_list(s, ',', "shape")); }

bool valid(const Shape& shape, const KTuple& t) {
    if ((int)t.maps.size() != shape.k()) return false;
    for (int i = 1; i <= shape.k(); ++i) {
        if ((int)t.maps[(size_t)i - 1].size() != shape.size(i)) return false;
        for (int target : t.maps[(size_t)i - 1])
            if (target < 1 || target > shape.size(shape.next(i))) return false;
    }
    return true;
}

CycleType::CycleType(std::vector<int> p) : parts(std::move(p)) {
    if (parts.empty()) throw std::invalid_argument("cycle type needs at least one part");
    for (int l : parts)
        if (l < 1) throw std::invalid_argument("cycle type parts must be positive");
    std::sort(parts.begin(), parts.end(), std::greater<int>());
}

int CycleType::sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::map<int, int> CycleType::multiplicities() const {
    std::map<int, int> m;
    for (int l : parts) ++m[l];
    return m;
}

BigInt CycleType::symmetry_factor() const {
    BigInt f = 1;
    for (auto& [l, m] : multiplicities()) f *= int_pow(BigInt(l), (unsigned long)m) * factorial((unsigned long)m);
    return f;
}

std::string CycleType::str() const {
    std::string out;
    for (int l : parts) {
        if (!out.empty()) out += "+";
        out += std::to_string(l);
    }
    return out;
}

CycleType CycleType::parse(const std::string& s) {
    return CycleType(parse_int_list(s, '+', "cycle type"));
}

bool CycleType::operator<(const CycleType& o) const {
    if (sum() != o.sum()) return sum() < o.sum();
    return parts < o.parts;
}

std::vector<CycleType> partitions(int N) {
    std::vector<CycleType> out;
    std::vector<int> cur;
    // Parts generated weakly decreasing.
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.push_back(CycleType(cur));
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    if (N >= 1) rec(N, N);
    std::sort(out.begin(), out.end());
    return out;
}

bool NChoiceSet::contains(int component, int v) const {
    const auto& part = members[(size_t)component - 1];
    return std::binary_search(part.begin(), part.end(), v);
}

std::string NChoiceSet::str() const {
    std::string out;
    for (const auto& part : members) {
        if (!out.empty()) out += ";";
        std::string sub;
        for (int v : part) {
            if (!sub.empty()) sub += ",";
            sub += std::to_string(v);
        }
        out += sub;
    }
    return out;
}

NChoiceSet NChoiceSet::parse(const std::string& s, const Shape& shape) {
    NChoiceSet u;
    std::string part;
    std::istringstream in(s);
    while (std::getline(in, part, ';')) u.members.push_back(parse_int_list(part, ',', "choice set"));
    if ((int)u.members.size() != shape.k())
        throw std::invalid_argument("choice set needs one part per component");
    size_t n = u.members[0].size();
    for (int i = 1; i <= shape.k(); ++i) {
        auto& m = u.members[(size_t)i - 1];
        std::sort(m.begin(), m.end());
        if (std::adjacent_find(m.begin(), m.end()) != m.end())
            throw std::invalid_argument("choice set indices must be distinct");
        if (m.size() != n) throw std::invalid_argument("choice set parts must have equal size");
        if (m.empty() || m.front() < 1 || m.back() > shape.size(i))
            throw std::invalid_argument("choice set index out of range");
    }
    return u;
}

std::vector<NChoiceSet> all_choice_sets(const Shape& shape, int N) {
    if (N < 1 || N > shape.min_size()) return {};
    std::vector<std::vector<std::vector<int>>> per_comp((size_t)shape.k());
    for (int i = 1; i <= shape.k(); ++i) {
        int n = shape.size(i);
        std::vector<int> pick((size_t)N);
        for (int j = 0; j < N; ++j) pick[(size_t)j] = j + 1;
        while (true) {
            per_comp[(size_t)i - 1].push_back(pick);
            int pos = N - 1;
            while (pos >= 0 && pick[(size_t)pos] == n - N + pos + 1) --pos;
            if (pos < 0) break;
            ++pick[(size_t)pos];
            for (int j = pos + 1; j < N; ++j) pick[(size_t)j] = pick[(size_t)j - 1] + 1;
        }
    }
    std::vector<NChoiceSet> out;
    std::vector<size_t> idx((size_t)shape.k(), 0);
    while (true) {
        NChoiceSet u;
        for (int i = 0; i < shape.k(); ++i) u.members.push_back(per_comp[(size_t)i][idx[(size_t)i]]);
        out.push_back(std::move(u));
        int pos = shape.k() - 1;
        while (pos >= 0 && ++idx[(size_t)pos] == per_comp[(size_t)pos].size()) {
            idx[(size_t)pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return out;
}

std::vector<int> composite(const Shape& shape, const KTuple& t) {
    std::vector<int> h((size_t)shape.size(1));
    for (int v = 1; v <= shape.size(1); ++v) {
        int cur = v;
        for (int i = 1; i <= shape.k(); ++i) cur = t.apply(i, cur);
        h[(size_t)v - 1] = cur;
    }
    return h;
}

std::vector<int> stable_image(const Shape& shape, const std::vector<int>& endo) {
    (void)shape;
    int n = (int)endo.size();
    std::vector<char> cur((size_t)n + 1, 1), next((size_t)n + 1, 0);
    int cur_size = n;
    while (true) {
        std::fill(next.begin(), next.end(), 0);
        int next_size = 0;
        for (int v = 1; v <= n; ++v)
            if (cur[(size_t)v]) {
                int w = endo[(size_t)v - 1];
                if (!next[(size_t)w]) {
                    next[(size_t)w] = 1;
                    ++next_size;
                }
            }
        if (next_size == cur_size) break;  // image stabilized; endo permutes it
        std::swap(cur, next);
        cur_size = next_size;
    }
    std::vector<int> out;
    out.reserve((size_t)cur_size);
    for (int v = 1; v <= n; ++v)
        if (cur[(size_t)v]) out.push_back(v);
    return out;
}

CycleType classify(const Shape& shape, const KTuple& t) {
    std::vector<int> h = composite(shape, t);
    std::vector<int> img = stable_image(shape, h);
    std::vector<char> seen((size_t)shape.size(1) + 1, 0);
    std::vector<int> lengths;
    for (int start : img) {
        if (seen[(size_t)start]) continue;
        int len = 0, cur = start;
        while (!seen[(size_t)cur]) {
            seen[(size_t)cur] = 1;
            cur = h[(size_t)cur - 1];
            ++len;
        }
        lengths.push_back(len);
    }
    return CycleType(std::move(lengths));
}

Monomial weight(const Shape& shape, const KTuple& t) {
    std::vector<std::pair<VarId, int>> exps;
    // Targets in component j come from f_{j-1}; counting in-degrees per
    // component keeps the exponent list sorted without a separate pass.
    for (int j = 1; j <= shape.k(); ++j) {
        int src = shape.prev(j);
        std::vector<int> indeg((size_t)shape.size(j) + 1, 0);
        for (int v = 1; v <= shape.size(src); ++v) ++indeg[(size_t)t.apply(src, v)];
        for (int v = 1; v <= shape.size(j); ++v)
            if (indeg[(size_t)v] > 0) exps.emplace_back(VarId{j, v}, indeg[(size_t)v]);
    }
    return Monomial::from_exponents(std::move(exps));
}

NChoiceSet cyclic_part_vertices(const Shape& shape, const KTuple& t) {
    NChoiceSet u;
    u.members.resize((size_t)shape.k());
    u.members[0] = stable_image(shape, composite(shape, t));
    for (int i = 1; i < shape.k(); ++i) {
        std::vector<int> next;
        next.reserve(u.members[(size_t)i - 1].size());
        for (int v : u.members[(size_t)i - 1]) next.push_back(t.apply(i, v));
        std::sort(next.begin(), next.end());
        u.members[(size_t)i] = std::move(next);
    }
    return u;
}

}  // namespace ectk
