#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "skewcode/cyclic_code.hpp"
#include "skewcode/distance_lab.hpp"

using namespace skewcode;

namespace {
Matrix from_rows(const FieldPtr& f, const std::vector<std::vector<std::uint32_t>>& rows) {
    Matrix m(f, rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = {rows[i][j]};
    return m;
}
} // namespace

TEST_CASE("rref / rank / nullspace") {
    auto f = Field::create(3, 2);
    // second row is 2x the first in GF(9)
    Matrix m = from_rows(f, {{1, 2, 0, 1}, {2, 1, 0, 2}, {0, 0, 1, 1}});
    CHECK(rank(m) == 2);
    Matrix ns = nullspace(m);
    CHECK(ns.rows == 2);
    CHECK(is_zero_matrix(mat_mul(m, transpose(ns))));

    Matrix r = rref(m);
    CHECK(rank(r) == 2);
    CHECK(row_space_equal(m, r));
}

TEST_CASE("row space comparison") {
    auto f = Field::create(3, 2);
    auto s = SkewAutomorphism::make(*f, 1);
    auto code = cyclic_from_generator(f, s, 4, SkewPoly::parse(f, s, "x-a^2"));
    Matrix G = generator_matrix(code);
    CHECK(row_space_equal(G, G));

    // unit-scaled generator spans the same code
    auto scaled = cyclic_from_generator(f, s, 4,
                                        code.g.scaled_left(f->generator()).monic());
    CHECK(row_space_equal(G, generator_matrix(scaled)));

    CHECK(!row_space_equal(G, parity_check_matrix(code)));
    for (std::size_t i = 0; i < G.rows; ++i) {
        std::vector<FieldElement> row(G.a.begin() + i * G.cols,
                                      G.a.begin() + (i + 1) * G.cols);
        CHECK(in_row_space(G, row));
    }
}

TEST_CASE("exact distance of known codes") {
    auto f = Field::create(3, 2);
    auto s = SkewAutomorphism::make(*f, 1);
    auto code = cyclic_from_generator(f, s, 4, SkewPoly::parse(f, s, "x-a^2"));
    auto rep = exact_min_distance(generator_matrix(code));
    CHECK(rep.k == 3);
    CHECK(rep.distance == 2);
    CHECK(!rep.truncated);
    CHECK(rep.weight_distribution[0] == 1);
    std::uint64_t total = 0;
    for (auto w : rep.weight_distribution) total += w;
    CHECK(total == 729);
    CHECK(rep.distance <= 4 - rep.k + 1); // Singleton

    Matrix id = from_rows(f, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(exact_min_distance(id).distance == 1);
}

TEST_CASE("dual distance two ways") {
    auto f = Field::create(3, 2);
    auto s = SkewAutomorphism::make(*f, 1);
    std::mt19937 rng(21);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<FieldElement> co(1 + rng() % 4);
        for (auto& e : co) e.rep = static_cast<std::uint32_t>(rng() % 9);
        SkewPoly r(f, s, co);
        if (r.is_zero()) continue;
        SkewPoly g = gcrd(r, SkewPoly::xn_minus_one(f, s, 4));
        if (g.deg() == 0 || g.deg() == 4) continue;
        auto code = cyclic_from_generator(f, s, 4, g);
        Matrix H = parity_check_matrix(code);       // dual generator matrix
        Matrix N = nullspace(generator_matrix(code)); // independent dual basis
        CHECK(row_space_equal(H, N));
        CHECK(exact_min_distance(H).distance == exact_min_distance(N).distance);
    }
}

TEST_CASE("adding a generator row never increases distance") {
    auto f = Field::create(3, 2);
    auto s = SkewAutomorphism::make(*f, 1);
    auto code = cyclic_from_generator(f, s, 8, SkewPoly::parse(f, s, "x-a^2"));
    Matrix G = generator_matrix(code);
    std::size_t prev = 0;
    for (std::size_t k = 1; k <= G.rows && k <= 4; ++k) {
        Matrix sub(f, k, G.cols);
        std::copy(G.a.begin(), G.a.begin() + k * G.cols, sub.a.begin());
        std::size_t d = exact_min_distance(sub).distance;
        if (k > 1) CHECK(d <= prev);
        prev = d;
    }
}

TEST_CASE("budget truncation") {
    auto f = Field::create(3, 2);
    auto s = SkewAutomorphism::make(*f, 1);
    auto code = cyclic_from_generator(f, s, 8, SkewPoly::parse(f, s, "x-a^2"));
    auto rep = exact_min_distance(generator_matrix(code), 1000);
    CHECK(rep.truncated);
    CHECK(rep.enumerated <= 1000);
    auto full = exact_min_distance(generator_matrix(code));
    CHECK(!full.truncated);
    CHECK(rep.distance >= full.distance);
}

TEST_CASE("support-rank distance agrees with enumeration") {
    auto f = Field::create(3, 2);
    auto s = SkewAutomorphism::make(*f, 1);
    std::mt19937 rng(22);
    for (int rep = 0; rep < 30; ++rep) {
        std::uint32_t n = (rng() % 2) ? 4 : 8;
        std::vector<FieldElement> co(1 + rng() % n);
        for (auto& e : co) e.rep = static_cast<std::uint32_t>(rng() % 9);
        SkewPoly r(f, s, co);
        if (r.is_zero()) continue;
        SkewPoly g = gcrd(r, SkewPoly::xn_minus_one(f, s, n));
        if (g.deg() == static_cast<int>(n)) continue;
        auto code = cyclic_from_generator(f, s, n, g);
        if (code.k > 5) continue;
        Matrix G = generator_matrix(code);
        CHECK(min_distance_by_rank(G) == exact_min_distance(G).distance);
    }
}
