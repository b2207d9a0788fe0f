#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <random>

#include "skewcode/galois.hpp"

using namespace skewcode;

TEST_CASE("GF(9) construction") {
    auto f = Field::create(3, 2);
    CHECK(f->p() == 3);
    CHECK(f->q() == 9);
    CHECK(f->modulus() == std::vector<std::uint32_t>({2, 2, 1})); // z^2 + 2z + 2

    // generator has multiplicative order exactly 8
    FieldElement a = f->generator();
    FieldElement acc = f->one();
    for (int i = 1; i <= 8; ++i) {
        acc = f->mul(acc, a);
        if (i < 8) CHECK(acc != f->one());
    }
    CHECK(acc == f->one());

    // a^2 = a + 1 under z^2 + 2z + 2
    CHECK(f->mul(a, a) == f->add(a, f->one()));
}

TEST_CASE("prime field GF(3)") {
    auto f = Field::create(3, 1);
    CHECK(f->q() == 3);
    CHECK(f->generator() == f->from_int(2));
    CHECK(f->mul(f->from_int(2), f->from_int(2)) == f->one());
}

TEST_CASE("GF(27) construction") {
    auto f = Field::create(3, 3);
    CHECK(f->q() == 27);
    FieldElement a = f->generator();
    FieldElement acc = f->one();
    for (int i = 0; i < 26; ++i) acc = f->mul(acc, a);
    CHECK(acc == f->one());
}

TEST_CASE("field arithmetic axioms (exhaustive on GF(9))") {
    auto f = Field::create(3, 2);
    for (std::uint32_t i = 0; i < 9; ++i)
        for (std::uint32_t j = 0; j < 9; ++j) {
            FieldElement a{i}, b{j};
            CHECK(f->add(a, b) == f->add(b, a));
            CHECK(f->mul(a, b) == f->mul(b, a));
            CHECK(f->sub(f->add(a, b), b) == a);
            if (j != 0) CHECK(f->mul(f->div(a, b), b) == a);
        }
    for (std::uint32_t i = 1; i < 9; ++i)
        CHECK(f->mul(FieldElement{i}, f->inv(FieldElement{i})) == f->one());
}

TEST_CASE("frobenius") {
    auto f = Field::create(3, 2);
    FieldElement a = f->generator();
    CHECK(f->frobenius(a, 0) == a);
    CHECK(f->frobenius(a, 1) == f->pow(a, 3));
    CHECK(f->frobenius(a, 2) == a); // theta^m = identity

    std::mt19937 rng(12345);
    auto f81 = Field::create(3, 4);
    for (int c = 0; c < 500; ++c) {
        FieldElement x{static_cast<std::uint32_t>(rng() % 81)};
        FieldElement y{static_cast<std::uint32_t>(rng() % 81)};
        std::uint32_t d = 1 + rng() % 4;
        CHECK(f81->frobenius(f81->mul(x, y), d) ==
              f81->mul(f81->frobenius(x, d), f81->frobenius(y, d)));
        CHECK(f81->frobenius(f81->add(x, y), d) ==
              f81->add(f81->frobenius(x, d), f81->frobenius(y, d)));
    }
}

TEST_CASE("automorphism order and fixed subfield") {
    auto f = Field::create(3, 4);
    for (std::uint32_t d : {1u, 2u, 4u}) {
        auto s = SkewAutomorphism::make(*f, d);
        CHECK(s.t == 4 / d);
        std::uint64_t q0 = 1;
        for (std::uint32_t i = 0; i < d; ++i) q0 *= 3;
        CHECK(s.q0 == q0);
        std::size_t fixed = 0;
        for (std::uint32_t i = 0; i < 81; ++i) {
            FieldElement a{i};
            CHECK(s.apply_pow(*f, a, s.t) == a); // sigma^t = id
            bool is_fixed = s.apply(*f, a) == a;
            CHECK(is_fixed == f->in_subfield(a, s.q0));
            if (is_fixed) ++fixed;
        }
        CHECK(fixed == s.q0);
    }
}

TEST_CASE("smallest splitting extension") {
    auto f9 = Field::create(3, 2);
    auto s = SkewAutomorphism::make(*f9, 1);

    auto t4 = smallest_splitting_extension(f9, s, 4);
    CHECK(t4.s == 2);
    CHECK(t4.top->q() == 81);

    auto id = SkewAutomorphism::make(*f9, 2); // sigma trivial
    auto t1 = smallest_splitting_extension(f9, id, 1);
    CHECK(t1.s == 1);

    auto t8 = smallest_splitting_extension(f9, s, 8);
    CHECK(t8.s == 4);
    CHECK(t8.top->q() == 6561); // GF(3^8)
}

TEST_CASE("embedding is a ring homomorphism (exhaustive GF(9) -> GF(81))") {
    auto f9 = Field::create(3, 2);
    auto tw = field_extension(f9, 2);
    CHECK(tw.embed(f9->one()) == tw.top->one());
    CHECK(tw.embed(f9->zero()) == tw.top->zero());
    for (std::uint32_t i = 0; i < 9; ++i)
        for (std::uint32_t j = 0; j < 9; ++j) {
            FieldElement a{i}, b{j};
            CHECK(tw.embed(f9->add(a, b)) == tw.top->add(tw.embed(a), tw.embed(b)));
            CHECK(tw.embed(f9->mul(a, b)) == tw.top->mul(tw.embed(a), tw.embed(b)));
        }
    // injective
    for (std::uint32_t i = 0; i < 9; ++i)
        for (std::uint32_t j = i + 1; j < 9; ++j)
            CHECK(tw.embed(FieldElement{i}) != tw.embed(FieldElement{j}));
}

TEST_CASE("element text round-trip") {
    auto f = Field::create(3, 2);
    for (std::uint32_t i = 0; i < 9; ++i) {
        FieldElement a{i};
        CHECK(f->parse_element(f->element_to_string(a)) == a);
    }
    CHECK(f->parse_element("a^2") == f->pow(f->generator(), 2));
    CHECK(f->parse_element("0") == f->zero());
    CHECK(f->parse_element("[1,2]") == f->from_coeffs({1, 2}));
    CHECK_THROWS_AS((void)f->parse_element("zzz"), ParseError);
}

TEST_CASE("field spec text") {
    auto f = parse_field_spec("GF(3^2)");
    CHECK(f->q() == 9);
    CHECK(field_spec_string(*f) == "GF(3^2)");
    CHECK(parse_field_spec("GF(9)")->q() == 9);
    CHECK_THROWS_AS((void)parse_field_spec("GF(6)"), ParseError);
    CHECK_THROWS_AS((void)Field::create(4, 1), HypothesisError);
    CHECK_THROWS_AS((void)Field::create(3, 0), HypothesisError);
    CHECK_THROWS_AS((void)Field::create(2, 30), BudgetExceeded);
}

TEST_CASE("dlog/exp consistency") {
    auto f = Field::create(3, 3);
    for (std::uint32_t i = 1; i < 27; ++i) {
        auto k = f->dlog(FieldElement{i});
        REQUIRE(k.has_value());
        CHECK(f->exp_of(*k) == FieldElement{i});
    }
    CHECK(!f->dlog(f->zero()).has_value());
}
