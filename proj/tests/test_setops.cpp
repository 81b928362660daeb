#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oddsum/setops.hpp"
#include "oracles.hpp"

using namespace oddsum;

namespace {

IntSet random_set(std::mt19937_64& rng, size_t max_terms, uint64_t max_val,
                  uint64_t min_val = 0) {
    std::vector<uint64_t> e;
    const size_t terms = rng() % (max_terms + 1);
    for (size_t i = 0; i < terms; ++i)
        e.push_back(min_val + rng() % (max_val - min_val));
    return IntSet(std::move(e));
}

}  // namespace

TEST_CASE("dilate") {
    CHECK(setops::dilate(IntSet({1, 2, 3}), 2) == IntSet({2, 4, 6}));
    CHECK(setops::dilate(IntSet({1, 2, 3}), 1) == IntSet({1, 2, 3}));
    CHECK(setops::dilate(IntSet({1, 2, 3}), 3) == IntSet({3, 6, 9}));
    CHECK(setops::dilate(IntSet({1, 2, 3}), 3).size() == 3);
    CHECK_THROWS_AS(setops::dilate(IntSet({1}), 0), std::invalid_argument);
    CHECK_THROWS_AS(setops::dilate(IntSet({UINT64_MAX}), 2), std::overflow_error);
}

TEST_CASE("symdiff") {
    CHECK(setops::symdiff({IntSet({1, 2}), IntSet({1, 2})}).empty());
    CHECK(setops::symdiff({IntSet({1, 2, 3}), IntSet({2, 4, 6}), IntSet({3, 6, 9})}) ==
          IntSet({1, 4, 9}));
    CHECK(setops::symdiff({IntSet({4, 7})}) == IntSet({4, 7}));
    CHECK(setops::symdiff({}).empty());
}

TEST_CASE("oplus") {
    CHECK(setops::oplus(IntSet({1, 2}), IntSet({1, 2})) == IntSet({2, 4}));
    CHECK(setops::oplus(IntSet({1, 2, 3, 4, 5}), IntSet({0, 1})) == IntSet({1, 6}));
    CHECK(setops::oplus(IntSet({3, 9, 12}), IntSet({0})) == IntSet({3, 9, 12}));
    CHECK(setops::oplus(IntSet({1, 2}), IntSet()).empty());
}

TEST_CASE("oplus_grid") {
    const GridSet s4(2, {{0, 0}, {1, 0}, {0, 1}, {2, 0}});

    CHECK(setops::oplus_grid(GridSet(2, {{0, 0}}), s4) == s4);

    const GridSet line = GridSet::cube(1);
    CHECK(setops::oplus_grid(line, line) == GridSet(1, {{0}, {2}}));

    CHECK(setops::oplus_grid(s4, GridSet(2, {{0, 0}})) == s4);

    CHECK_THROWS_AS(setops::oplus_grid(GridSet(1, {{0}}), GridSet(2, {{0, 0}})),
                    std::invalid_argument);
}

TEST_CASE("nabla") {
    CHECK(setops::nabla(IntSet({1}), IntSet({1, 2, 3, 4})) == IntSet({1, 2, 3, 4}));
    CHECK(setops::nabla(IntSet({1, 2, 3}), IntSet({1, 2, 3})) == IntSet({1, 4, 9}));
    CHECK(setops::nabla(IntSet({5, 8}), IntSet({1})) == IntSet({5, 8}));
    CHECK_THROWS_AS(setops::nabla(IntSet({0, 1}), IntSet({1})), std::invalid_argument);
}

TEST_CASE("oplus is commutative and associative (vs counting)") {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 60; ++i) {
        const IntSet a = random_set(rng, 8, 40);
        const IntSet b = random_set(rng, 8, 40);
        const IntSet c = random_set(rng, 8, 40);
        CHECK(setops::oplus(a, b) == setops::oplus(b, a));
        CHECK(setops::oplus(setops::oplus(a, b), c) ==
              setops::oplus(a, setops::oplus(b, c)));
        CHECK(setops::oplus(a, b) == setops::oplus_counting(a, b));
    }
}

TEST_CASE("symdiff agrees with counting") {
    std::mt19937_64 rng(103);
    for (int i = 0; i < 40; ++i) {
        std::vector<IntSet> sets;
        std::vector<std::vector<uint64_t>> raw;
        for (size_t j = rng() % 5; j; --j) {
            sets.push_back(random_set(rng, 10, 60));
            raw.push_back(sets.back().elements());
        }
        CHECK(setops::symdiff(sets) == setops::symdiff_counting(sets));
        CHECK(setops::symdiff(sets).elements() == oracle::symdiff(raw));
    }
}

TEST_CASE("nabla equals symmetric difference of dilations, both ways") {
    std::mt19937_64 rng(107);
    for (int i = 0; i < 60; ++i) {
        const IntSet a = random_set(rng, 6, 30, 1);
        const IntSet b = random_set(rng, 6, 30, 1);
        if (a.empty() || b.empty()) continue;
        const IntSet via_a = setops::nabla(a, b);
        std::vector<IntSet> dil_b;
        for (uint64_t x : b.elements()) dil_b.push_back(setops::dilate(a, x));
        CHECK(via_a == setops::symdiff(dil_b));
        CHECK(via_a == setops::nabla_counting(a, b));
        CHECK(via_a == setops::nabla(b, a));
    }
}

TEST_CASE("gcd invariance of oplus size") {
    std::mt19937_64 rng(109);
    for (int i = 0; i < 40; ++i) {
        const IntSet a = random_set(rng, 8, 50);
        const IntSet b = random_set(rng, 8, 50);
        const uint64_t d = 1 + rng() % 7;
        const size_t base = setops::oplus(a, b).size();
        CHECK(setops::oplus(setops::dilate(a, d), setops::dilate(b, d)).size() == base);
    }
}

TEST_CASE("2-cube bound on random grid sets") {
    std::mt19937_64 rng(113);
    for (uint64_t r = 1; r <= 3; ++r) {
        const GridSet cube = GridSet::cube(r);
        for (int i = 0; i < 100; ++i) {
            std::vector<GridSet::Point> pts;
            const size_t count = 1 + rng() % 12;
            for (size_t j = 0; j < count; ++j) {
                GridSet::Point p(r);
                // negative coordinates are legal grid elements
                for (uint64_t d = 0; d < r; ++d) p[d] = int64_t(rng() % 8) - 4;
                pts.push_back(std::move(p));
            }
            const GridSet a(r, std::move(pts));
            CHECK(setops::oplus_grid(cube, a).size() >= (size_t(1) << r));
        }
    }
}

TEST_CASE("set literals") {
    CHECK(IntSet::parse("1,2,3") == IntSet({1, 2, 3}));
    CHECK(IntSet::parse("7") == IntSet({7}));
    CHECK(IntSet({3, 1, 2}).to_string() == "1,2,3");
    CHECK_THROWS_AS(IntSet::parse("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(IntSet::parse("a"), std::invalid_argument);

    const GridSet g = GridSet::parse("(0,0),(1,2),(-3,4)");
    CHECK(g.dimension() == 2);
    CHECK(g.size() == 3);
    CHECK(g.to_string() == "(-3,4),(0,0),(1,2)");
    CHECK_THROWS_AS(GridSet::parse("(1,2"), std::invalid_argument);
}
