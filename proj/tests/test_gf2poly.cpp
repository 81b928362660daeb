#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "oddsum/gf2poly.hpp"
#include "oracles.hpp"

using oddsum::Gf2Poly;
using oddsum::add;
using oddsum::mul;

namespace {

Gf2Poly random_poly(std::mt19937_64& rng, size_t max_terms, uint64_t max_exp) {
    std::vector<uint64_t> e;
    const size_t terms = rng() % (max_terms + 1);
    for (size_t i = 0; i < terms; ++i) e.push_back(rng() % max_exp);
    return Gf2Poly::from_set(std::move(e));
}

}  // namespace

TEST_CASE("from_set basics") {
    CHECK(Gf2Poly::from_set({}).is_zero());
    CHECK(Gf2Poly::from_set({}).support_size() == 0);

    const Gf2Poly p = Gf2Poly::from_set({0, 1, 2});
    CHECK(p.support() == std::vector<uint64_t>{0, 1, 2});
    CHECK(p.to_string() == "1+x+x^2");

    const Gf2Poly q = Gf2Poly::from_set({1, 2, 3, 4});
    CHECK(q.support_size() == 4);

    // duplicates collapse
    CHECK(Gf2Poly::from_set({5, 5, 7}) == Gf2Poly::from_set({5, 7}));
}

TEST_CASE("add is XOR of supports") {
    const Gf2Poly one_x = Gf2Poly::from_set({0, 1});
    CHECK(add(one_x, one_x).is_zero());

    CHECK(add(one_x, Gf2Poly::from_set({1, 2})) == Gf2Poly::from_set({0, 2}));

    CHECK(add(Gf2Poly::from_set({1, 2, 3}), Gf2Poly::from_set({2, 4, 6})) ==
          Gf2Poly::from_set({1, 3, 4, 6}));
}

TEST_CASE("add mixes representations") {
    // products come out dense; sets stay sparse
    const Gf2Poly near0 = mul(Gf2Poly::geometric(1, 100), Gf2Poly::geometric(1, 100));
    const Gf2Poly shifted =
        mul(Gf2Poly::from_set({uint64_t(1) << 20}), Gf2Poly::geometric(1, 100));
    const Gf2Poly far =
        mul(Gf2Poly::from_set({uint64_t(1) << 30}), Gf2Poly::geometric(1, 50));

    // dense + dense, different bases, union still within the dense window
    std::vector<uint64_t> expect = near0.support();
    for (uint64_t e : shifted.support()) expect.push_back(e);
    CHECK(add(near0, shifted) == Gf2Poly::from_set(expect));

    // dense + dense, union span too wide for the dense window
    std::vector<uint64_t> expect_far = near0.support();
    for (uint64_t e : far.support()) expect_far.push_back(e);
    CHECK(add(near0, far) == Gf2Poly::from_set(expect_far));

    // dense + sparse with cancellation
    const Gf2Poly sparse = Gf2Poly::from_set({0, 2, 5000});
    const Gf2Poly sum = add(near0, sparse);
    CHECK(!sum.contains(0));  // near0 contains 0, cancels
    CHECK(sum.contains(5000));
    CHECK(add(sum, sparse) == near0);
}

TEST_CASE("mul examples") {
    const Gf2Poly one_x = Gf2Poly::from_set({0, 1});
    CHECK(mul(one_x, one_x) == Gf2Poly::from_set({0, 2}));

    const Gf2Poly p = Gf2Poly::from_set({0, 1, 2});
    const Gf2Poly q = Gf2Poly::from_set({0, 2, 4});
    CHECK(mul(p, q).support() == oracle::mul_support({0, 1, 2}, {0, 2, 4}));
    CHECK(mul(p, q) == Gf2Poly::from_set({0, 1, 3, 5, 6}));

    const Gf2Poly s = Gf2Poly::from_set({1, 2});
    CHECK(mul(s, s) == Gf2Poly::from_set({2, 4}));
}

TEST_CASE("support_size and eval_at_one") {
    CHECK(Gf2Poly().support_size() == 0);
    CHECK(Gf2Poly().eval_at_one() == 0);
    CHECK(Gf2Poly::from_set({0, 1, 3}).support_size() == 3);
    CHECK(Gf2Poly::from_set({0, 1, 2}).eval_at_one() == 1);

    // n=3, a=(1,2): the shifted two-factor product has 5 odd coefficients.
    const Gf2Poly prod = mul(Gf2Poly::geometric(1, 3), Gf2Poly::geometric(2, 3));
    CHECK(prod.support_size() == 5);
    CHECK(prod.support_size() ==
          oracle::mul_support({0, 1, 2}, {0, 2, 4}).size());
}

TEST_CASE("inflate") {
    CHECK(Gf2Poly::from_set({0, 1}).inflate(3) == Gf2Poly::from_set({0, 3}));

    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        const Gf2Poly p = random_poly(rng, 12, 1000);
        CHECK(p.inflate(1) == p);
        const uint64_t d = 1 + rng() % 9;
        CHECK(p.inflate(d).support_size() == p.support_size());
    }
    CHECK_THROWS_AS(Gf2Poly::from_set({1}).inflate(0), std::invalid_argument);
}

TEST_CASE("residue_split") {
    const auto qs = Gf2Poly::from_set({0, 1, 2, 3}).residue_split(2);
    REQUIRE(qs.size() == 2);
    CHECK(qs[0] == Gf2Poly::from_set({0, 1}));
    CHECK(qs[1] == Gf2Poly::from_set({0, 1}));

    const Gf2Poly p = Gf2Poly::from_set({0, 5, 9, 17});
    const auto whole = p.residue_split(1);
    REQUIRE(whole.size() == 1);
    CHECK(whole[0] == p);

    // Each residue piece of the n=3, a=(1,2) product has odd weight.
    const Gf2Poly prod = mul(Gf2Poly::from_set({0, 1, 2}), Gf2Poly::from_set({0, 2, 4}));
    for (const Gf2Poly& qi : prod.residue_split(3)) CHECK(qi.eval_at_one() == 1);
}

TEST_CASE("residue_split round-trips") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 60; ++i) {
        const Gf2Poly p = random_poly(rng, 24, 500);
        const uint64_t t = 1 + rng() % 16;
        Gf2Poly back;
        uint64_t residue = 0;
        for (const Gf2Poly& qi : p.residue_split(t)) {
            back = add(back, mul(Gf2Poly::from_set({residue}), qi.inflate(t)));
            ++residue;
        }
        CHECK(back == p);
    }
}

TEST_CASE("geometric") {
    CHECK(Gf2Poly::geometric(1, 4) == Gf2Poly::from_set({0, 1, 2, 3}));
    CHECK(Gf2Poly::geometric(2, 3) == Gf2Poly::from_set({0, 2, 4}));
    CHECK(Gf2Poly::geometric(9, 1) == Gf2Poly::from_set({0}));
    CHECK_THROWS_AS(Gf2Poly::geometric(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(Gf2Poly::geometric(UINT64_MAX, 3), std::overflow_error);
}

TEST_CASE("pow_one_plus_y") {
    CHECK(Gf2Poly::pow_one_plus_y(0) == Gf2Poly::from_set({0}));
    CHECK(Gf2Poly::pow_one_plus_y(6) == Gf2Poly::from_set({0, 2, 4, 6}));
    CHECK(Gf2Poly::pow_one_plus_y(3) == Gf2Poly::from_set({0, 1, 2, 3}));
    CHECK(Gf2Poly::pow_one_plus_y(3).support_size() == 4);
}

TEST_CASE("pow_one_plus_y matches repeated squaring") {
    const Gf2Poly base = Gf2Poly::from_set({0, 1});
    for (uint64_t e = 0; e < 1024; ++e) {
        Gf2Poly acc = Gf2Poly::from_set({0});
        Gf2Poly sq = base;
        for (uint64_t bits = e; bits; bits >>= 1) {
            if (bits & 1) acc = mul(acc, sq);
            sq = mul(sq, sq);
        }
        REQUIRE(Gf2Poly::pow_one_plus_y(e) == acc);
    }
}

TEST_CASE("ring laws on random polynomials") {
    std::mt19937_64 rng(23);
    const Gf2Poly zero;
    const Gf2Poly one = Gf2Poly::from_set({0});
    for (int i = 0; i < 40; ++i) {
        const Gf2Poly p = random_poly(rng, 10, 200);
        const Gf2Poly q = random_poly(rng, 10, 200);
        const Gf2Poly r = random_poly(rng, 10, 200);

        CHECK(add(p, q) == add(q, p));
        CHECK(add(add(p, q), r) == add(p, add(q, r)));
        CHECK(add(p, zero) == p);
        CHECK(add(p, p).is_zero());

        CHECK(mul(p, q) == mul(q, p));
        CHECK(mul(mul(p, q), r) == mul(p, mul(q, r)));
        CHECK(mul(p, one) == p);
        CHECK(mul(p, zero).is_zero());

        CHECK(mul(p, add(q, r)) == add(mul(p, q), mul(p, r)));
    }
}

TEST_CASE("Frobenius: squaring doubles exponents") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 40; ++i) {
        const Gf2Poly p = random_poly(rng, 14, 5000);
        CHECK(mul(p, p) == p.inflate(2));
    }
}

TEST_CASE("mul agrees with exhaustive pair counting") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 200; ++i) {
        std::vector<uint64_t> a, b;
        for (size_t j = rng() % 13; j; --j) a.push_back(rng() % 64);
        for (size_t j = rng() % 13; j; --j) b.push_back(rng() % 64);
        const Gf2Poly prod = mul(Gf2Poly::from_set(a), Gf2Poly::from_set(b));
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        REQUIRE(prod.support() == oracle::mul_support(a, b));
    }
}

TEST_CASE("wide-span products use the same arithmetic") {
    std::mt19937_64 rng(43);
    const uint64_t far = uint64_t(1) << 40;
    for (int i = 0; i < 30; ++i) {
        std::vector<uint64_t> a, b;
        for (size_t j = 1 + rng() % 8; j; --j) a.push_back(rng() % 5 ? rng() % 50 : far + rng() % 50);
        for (size_t j = 1 + rng() % 8; j; --j) b.push_back(rng() % 5 ? rng() % 50 : far + rng() % 50);
        const Gf2Poly prod = mul(Gf2Poly::from_set(a), Gf2Poly::from_set(b));
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        REQUIRE(prod.support() == oracle::mul_support(a, b));
    }
}

TEST_CASE("karatsuba route matches the term-wise kernel") {
    // Operands dense enough, and spanning enough bits, to take the
    // recursive path; the oracle is plain pair counting.
    std::mt19937_64 rng(47);
    std::vector<uint64_t> a, b;
    for (uint64_t e = 0; e < (1 << 17); ++e) {
        if (rng() & 1) a.push_back(e);
        if (rng() & 1) b.push_back(e);
    }
    const Gf2Poly pa = Gf2Poly::from_set(a);
    const Gf2Poly pb = Gf2Poly::from_set(b);
    const Gf2Poly prod = mul(pa, pb);

    // Cross-check on truncated inputs where the quadratic oracle is feasible.
    std::vector<uint64_t> ta(a.begin(), a.begin() + 300);
    std::vector<uint64_t> tb(b.begin(), b.begin() + 300);
    CHECK(mul(Gf2Poly::from_set(ta), Gf2Poly::from_set(tb)).support() ==
          oracle::mul_support(ta, tb));

    // Self-consistency of the big product: (pa*pb)*x == pa*(pb*x) exercises
    // reassociation across kernel routes.
    const Gf2Poly x = Gf2Poly::from_set({0, 1, 64, 1000});
    CHECK(mul(prod, x) == mul(pa, mul(pb, x)));
}

TEST_CASE("karatsuba squaring matches Frobenius at awkward sizes") {
    // Squaring doubles exponents with no cancellation, so inflate(2) is an
    // exact oracle for the recursive kernel, including odd word splits.
    std::mt19937_64 rng(53);
    for (uint64_t span : {uint64_t(1) << 17, (uint64_t(1) << 17) + 2377,
                          (uint64_t(3) << 16) + 91}) {
        std::vector<uint64_t> e{0, span};
        for (int i = 0; i < 60000; ++i) e.push_back(rng() % span);
        const Gf2Poly p = Gf2Poly::from_set(std::move(e));
        REQUIRE(mul(p, p) == p.inflate(2));
    }
}

TEST_CASE("exponent overflow is detected") {
    const Gf2Poly big = Gf2Poly::from_set({UINT64_MAX - 3, UINT64_MAX});
    CHECK_THROWS_AS(mul(big, big), std::overflow_error);
    CHECK_THROWS_AS(big.inflate(2), std::overflow_error);
    CHECK_THROWS_AS(mul(big, Gf2Poly::from_set({1})), std::overflow_error);
    CHECK(mul(big, Gf2Poly::from_set({0})) == big);
}

TEST_CASE("degree and min_exponent") {
    const Gf2Poly p = Gf2Poly::from_set({3, 7, 100});
    CHECK(p.degree() == 100);
    CHECK(p.min_exponent() == 3);
    CHECK(p.contains(7));
    CHECK(!p.contains(8));
    CHECK_THROWS_AS(Gf2Poly().degree(), std::logic_error);
}

TEST_CASE("rendering") {
    CHECK(Gf2Poly().to_string() == "0");
    CHECK(Gf2Poly::from_set({0}).to_string() == "1");
    CHECK(Gf2Poly::from_set({0, 1, 3}).to_string() == "1+x+x^3");
    CHECK(mul(Gf2Poly::from_set({0, 1}), Gf2Poly::from_set({0, 1})).to_string() ==
          "1+x^2");
}
