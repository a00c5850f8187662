#include <doctest.h>

#include <algorithm>

#include "ectk/domain.hpp"
#include "ectk/oracle.hpp"

using namespace ectk;

namespace {

KTuple tuple(std::vector<std::vector<int>> maps) { return KTuple{std::move(maps)}; }

}  // namespace

TEST_CASE("shape basics") {
    Shape s = Shape::parse("2,3,2");
    CHECK(s.k() == 3);
    CHECK(s.size(1) == 2);
    CHECK(s.size(3) == 2);
    CHECK(s.str() == "2,3,2");
    CHECK(s.prev(1) == 3);  // indices wrap: n_0 = n_k
    CHECK(s.next(3) == 1);
    CHECK(s.min_size() == 2);
    CHECK(s.total_vertices() == 7);

    CHECK(Shape({2, 2}).total_tuples() == 16);
    CHECK(Shape({2, 3}).total_tuples() == 72);  // 3^2 * 2^3
    CHECK(Shape({1, 1}).total_tuples() == 1);
    CHECK(Shape({3}).total_tuples() == 27);

    CHECK_THROWS_AS(Shape::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Shape::parse("2,0"), std::invalid_argument);
    CHECK_THROWS_AS(Shape::parse("2,,3"), std::invalid_argument);
    CHECK_THROWS_AS(Shape::parse("a"), std::invalid_argument);
}

TEST_CASE("cycle types") {
    CycleType t = CycleType::parse("1+2+1");
    CHECK(t.parts == std::vector<int>{2, 1, 1});  // stored weakly decreasing
    CHECK(t.str() == "2+1+1");
    CHECK(t.sum() == 4);
    CHECK(t.multiplicities() == std::map<int, int>{{1, 2}, {2, 1}});
    CHECK(t.symmetry_factor() == 4);  // 1^2 * 2! * 2^1 * 1!

    CHECK_THROWS_AS(CycleType::parse("2+0"), std::invalid_argument);
    CHECK_THROWS_AS(CycleType::parse(""), std::invalid_argument);

    CHECK(partitions(1).size() == 1);
    CHECK(partitions(4).size() == 5);
    CHECK(partitions(7).size() == 15);
    // Each partition sums to N and no duplicates.
    auto p5 = partitions(5);
    CHECK(p5.size() == 7);
    for (auto& lam : p5) CHECK(lam.sum() == 5);
}

TEST_CASE("choice sets") {
    Shape s({3, 2});
    NChoiceSet u = NChoiceSet::parse("3,1;1,2", s);
    CHECK(u.N() == 2);
    CHECK(u.str() == "1,3;1,2");  // members kept sorted
    CHECK(u.contains(1, 3));
    CHECK(!u.contains(1, 2));

    CHECK_THROWS_AS(NChoiceSet::parse("1;1;1", s), std::invalid_argument);   // wrong arity
    CHECK_THROWS_AS(NChoiceSet::parse("1,2;1", s), std::invalid_argument);   // unequal sizes
    CHECK_THROWS_AS(NChoiceSet::parse("1,1;1,2", s), std::invalid_argument); // repeated index
    CHECK_THROWS_AS(NChoiceSet::parse("4;1", s), std::invalid_argument);     // out of range

    CHECK(all_choice_sets(s, 1).size() == 6);
    CHECK(all_choice_sets(s, 2).size() == 3);
    CHECK(all_choice_sets(s, 3).empty());
}

TEST_CASE("composite") {
    SUBCASE("identity then swap") {
        Shape s({2, 2});
        KTuple t = tuple({{1, 2}, {2, 1}});
        CHECK(composite(s, t) == std::vector<int>{2, 1});
    }
    SUBCASE("k=1 composite is the map itself") {
        Shape s({4});
        KTuple t = tuple({{2, 3, 1, 1}});
        CHECK(composite(s, t) == std::vector<int>{2, 3, 1, 1});
    }
    SUBCASE("constant maps compose to a constant") {
        Shape s({2, 2});
        KTuple t = tuple({{1, 1}, {2, 2}});
        CHECK(composite(s, t) == std::vector<int>{2, 2});
    }
}

TEST_CASE("stable image") {
    Shape s({3});
    CHECK(stable_image(s, {1, 2, 3}) == std::vector<int>{1, 2, 3});
    CHECK(stable_image(s, {1, 1, 1}) == std::vector<int>{1});
    // images: {1,2,3} -> {1,2} -> {1,2}
    CHECK(stable_image(s, {2, 1, 1}) == std::vector<int>{1, 2});
}

TEST_CASE("classify") {
    Shape s({3});
    CHECK(classify(s, tuple({{1, 2, 3}})) == CycleType({1, 1, 1}));
    CHECK(classify(s, tuple({{2, 2, 2}})) == CycleType({1}));
    CHECK(classify(s, tuple({{2, 1, 1}})) == CycleType({2}));
}

TEST_CASE("weight") {
    SUBCASE("forced singleton targets") {
        Shape s({1, 1});
        Monomial w = weight(s, tuple({{1}, {1}}));
        CHECK(w == Monomial::var(VarId{1, 1}) * Monomial::var(VarId{2, 1}));
    }
    SUBCASE("constant map squares its target") {
        Shape s({2});
        CHECK(weight(s, tuple({{1, 1}})) == Monomial::var(VarId{1, 1}, 2));
    }
    SUBCASE("reads off all four targets") {
        Shape s({2, 2});
        Monomial w = weight(s, tuple({{1, 1}, {2, 2}}));
        CHECK(w == Monomial::var(VarId{2, 1}, 2) * Monomial::var(VarId{1, 2}, 2));
    }
}

TEST_CASE("cyclic part vertices") {
    SUBCASE("forced singletons") {
        Shape s({1, 1});
        CHECK(cyclic_part_vertices(s, tuple({{1}, {1}})) == NChoiceSet{{{1}, {1}}});
    }
    SUBCASE("identity-like tuple keeps everything cyclic") {
        Shape s({2, 2});
        CHECK(cyclic_part_vertices(s, tuple({{1, 2}, {1, 2}})) == NChoiceSet{{{1, 2}, {1, 2}}});
    }
    SUBCASE("composite constant at 1") {
        Shape s({2, 2});
        CHECK(cyclic_part_vertices(s, tuple({{1, 1}, {1, 1}})) == NChoiceSet{{{1}, {1}}});
    }
}

TEST_CASE("classification invariants on tiny shapes, exhaustively") {
    for (const char* shape_str : {"2,2", "3", "2,3", "1,1,2", "2,2,2"}) {
        Shape s = Shape::parse(shape_str);
        CAPTURE(shape_str);
        BigInt seen = 0;
        TupleEnumerator en(s);
        KTuple t;
        while (en.next(t)) {
            seen += 1;
            REQUIRE(valid(s, t));
            CycleType type = classify(s, t);
            int N = type.sum();
            CHECK(N >= 1);
            CHECK(N <= s.min_size());

            // The composite restricted to the stable image permutes it.
            std::vector<int> h = composite(s, t);
            std::vector<int> img = stable_image(s, h);
            std::vector<int> mapped;
            for (int v : img) mapped.push_back(h[(size_t)v - 1]);
            std::sort(mapped.begin(), mapped.end());
            CHECK(mapped == img);
            CHECK((int)img.size() == N);

            // All parts of the cyclic vertex set share the cardinality N.
            NChoiceSet u = cyclic_part_vertices(s, t);
            for (auto& part : u.members) CHECK((int)part.size() == N);

            // Eventually constant iff some iterate of the composite is
            // constant; n_1 + 1 iterations are always enough.
            std::vector<int> iter = h;
            for (int step = 0; step < s.size(1); ++step) {
                std::vector<int> next((size_t)s.size(1));
                for (int v = 1; v <= s.size(1); ++v)
                    next[(size_t)v - 1] = h[(size_t)iter[(size_t)v - 1] - 1];
                iter = std::move(next);
            }
            bool constant = std::all_of(iter.begin(), iter.end(),
                                        [&](int v) { return v == iter[0]; });
            CHECK(constant == (type == CycleType({1})));

            // Weight has total degree sum n_i and multiplies over components.
            Monomial w = weight(s, t);
            CHECK(w.degree() == s.total_vertices());
            Monomial per_component;
            for (int i = 1; i <= s.k(); ++i) {
                std::vector<std::pair<VarId, int>> exps;
                for (int v = 1; v <= s.size(i); ++v)
                    exps.emplace_back(VarId{s.next(i), t.apply(i, v)}, 1);
                per_component = per_component * Monomial::from_exponents(std::move(exps));
            }
            CHECK(w == per_component);
        }
        CHECK(seen == s.total_tuples());
    }
}
