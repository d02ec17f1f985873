#include <doctest.h>

#include <random>
#include <vector>

#include "cwl/chord_diagram.hpp"
#include "cwl/closure.hpp"

using namespace cwl;

namespace {

// disjoint union with circles of b appended after those of a
ChordDiagram disjoint_union(const ChordDiagram& a, const ChordDiagram& b) {
    std::vector<Chord> chords = a.chords();
    const int shift = a.num_circles();
    for (const auto& c : b.chords())
        chords.push_back({{c.first.circle + shift, c.first.pos},
                          {c.second.circle + shift, c.second.pos}});
    return ChordDiagram(a.num_circles() + b.num_circles(), chords);
}

// random diagram: random leg counts, random perfect matching
ChordDiagram random_diagram(std::mt19937_64& rng, int max_circles) {
    while (true) {
        const int n = 1 + static_cast<int>(rng() % max_circles);
        std::vector<Leg> legs;
        for (int i = 0; i < n; ++i) {
            const int k = static_cast<int>(rng() % 4);
            for (int p = 0; p < k; ++p) legs.push_back({i, p});
        }
        if (legs.size() % 2) continue;
        std::shuffle(legs.begin(), legs.end(), rng);
        std::vector<Chord> chords;
        for (size_t t = 0; t + 1 < legs.size(); t += 2) chords.push_back({legs[t], legs[t + 1]});
        return ChordDiagram(n, chords);
    }
}

}  // namespace

TEST_SUITE("closure") {

TEST_CASE("one-circle constants") {
    CHECK(iota1_le1(one_circle_seed(Sign::Plus)) == ClosureValue{0, Rational(1, 6)});
    CHECK(iota1_le1(one_circle_seed(Sign::Minus)) == ClosureValue{0, Rational(-1, 3)});
    CHECK(iota1_le1(two_circle_seed(Sign::Plus)) == ClosureValue{0, Rational(1, 4)});
    CHECK(iota1_le1(two_circle_seed(Sign::Minus)) == ClosureValue{0, Rational(-1, 4)});
}

TEST_CASE("chains close into -2") {
    for (int m = 1; m <= 6; ++m)
        for (const auto& d : enumerate_chains(m).items())
            CHECK(iota1_le1(d) == ClosureValue{-2, 0});
}

TEST_CASE("degenerate leg counts kill the diagram") {
    CHECK(iota1_le1(ChordDiagram::trivial(1)) == ClosureValue{0, 0});
    ChordDiagram one_leg = infect(ChordDiagram::trivial(1), 0, 0);
    CHECK(iota1_le1(one_leg) == ClosureValue{0, 0});
    // five legs on a circle
    ChordDiagram five(2, {{{0, 0}, {0, 1}}, {{0, 2}, {0, 3}}, {{0, 4}, {1, 0}},
                          {{1, 1}, {1, 2}}});
    CHECK(iota1_le1(five) == ClosureValue{0, 0});
}

TEST_CASE("nu normalization") {
    CHECK(iota_theta(ChordDiagram::trivial(1)) == Rational(1, 48));
    CHECK(iota_theta(one_circle_seed(Sign::Plus)) == Rational(1, 6));
    CHECK(iota_theta(*enumerate_chains(3).items().begin()) == 0);
    // bare circle next to a chain of one: only the nu terms survive
    ChordDiagram d11(1, {{{0, 0}, {0, 1}}});
    CHECK(iota_theta(disjoint_union(d11, ChordDiagram::trivial(1))) == Rational(-1, 24));
    CHECK(iota_theta(disjoint_union(ChordDiagram::trivial(1), ChordDiagram::trivial(1))) == 0);
}

TEST_CASE("E^±(2) closure values") {
    std::multiset<Rational> plus, minus;
    for (const auto& d : enumerate_essential(2, Sign::Plus).items())
        plus.insert(iota_theta(d));
    for (const auto& d : enumerate_essential(2, Sign::Minus).items())
        minus.insert(iota_theta(d));
    CHECK(plus == std::multiset<Rational>{Rational(1, 6), Rational(1, 6), Rational(1, 4)});
    CHECK(minus == std::multiset<Rational>{Rational(-1, 3), Rational(-1, 3), Rational(-1, 4)});
}

TEST_CASE("nu contribution of a bare circle scales the constant part by 1/48") {
    std::mt19937_64 rng(20240812);
    for (int t = 0; t < 100; ++t) {
        ChordDiagram d = random_diagram(rng, 3);
        bool bare = false;
        for (int i = 0; i < d.num_circles(); ++i) bare = bare || d.legs_on(i) == 0;
        if (bare) continue;
        ChordDiagram with_circle = disjoint_union(d, ChordDiagram::trivial(1));
        CHECK(iota_theta(with_circle) == iota1_le1(d).c0 / 48);
        // a second bare circle kills the theta part outright
        ChordDiagram two = disjoint_union(with_circle, ChordDiagram::trivial(1));
        CHECK(iota_theta(two) == 0);
    }
}

TEST_CASE("closure is multiplicative over disjoint union") {
    std::mt19937_64 rng(20240811);
    for (int t = 0; t < 200; ++t) {
        ChordDiagram a = random_diagram(rng, 3);
        ChordDiagram b = random_diagram(rng, 3);
        ClosureValue va = iota1_le1(a), vb = iota1_le1(b);
        ClosureValue expected{va.c0 * vb.c0, va.c0 * vb.c1 + va.c1 * vb.c0};
        CHECK(iota1_le1(disjoint_union(a, b)) == expected);
    }
}

TEST_CASE("essential diagrams have pure theta closure with the right sign") {
    for (int n : {1, 2, 3})
        for (Sign sg : {Sign::Plus, Sign::Minus})
            for (const auto& d : enumerate_essential(n, sg).items()) {
                ClosureValue v = iota1_le1(d);
                CHECK(v.c0 == 0);
                CHECK((sg == Sign::Plus ? v.c1 > 0 : v.c1 < 0));
                CHECK(structural_class(d) ==
                      (sg == Sign::Plus ? DiagramClass::PlusEssential
                                        : DiagramClass::MinusEssential));
            }
}

TEST_CASE("closure values in the essential range") {
    // only 1/6, -1/3, 1/4, -1/4 arise on essential diagrams up to 4 circles
    std::set<Rational> seen;
    for (int n = 1; n <= 4; ++n)
        for (Sign sg : {Sign::Plus, Sign::Minus})
            for (const auto& d : enumerate_essential(n, sg).items()) seen.insert(iota_theta(d));
    CHECK(seen == std::set<Rational>{Rational(-1, 3), Rational(-1, 4), Rational(1, 6),
                                     Rational(1, 4)});
}

}  // TEST_SUITE
