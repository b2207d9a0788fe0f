#include "skewcode/cyclic_code.hpp"

#include <algorithm>
#include <numeric>

namespace skewcode {

namespace {

void check_assumptions(const Field& field, const SkewAutomorphism& sigma, std::uint32_t n) {
    if (n == 0) throw ParseError("length must be positive");
    if (n % sigma.t != 0)
        throw HypothesisError("order of sigma must divide the length n");
    if (std::gcd(static_cast<std::uint64_t>(n), field.q()) != 1)
        throw HypothesisError("gcd(n, q) must be 1");
}

} // namespace

SkewCyclicCode cyclic_from_generator(const FieldPtr& field, const SkewAutomorphism& sigma,
                                     std::uint32_t n, const SkewPoly& g) {
    check_assumptions(*field, sigma, n);
    if (g.is_zero() || !g.is_monic()) throw HypothesisError("generator must be monic");
    if (static_cast<std::uint32_t>(g.deg()) > n) throw HypothesisError("deg g exceeds n");
    SkewPoly xn1 = SkewPoly::xn_minus_one(field, sigma, n);
    auto div = left_divide(xn1, g); // x^n - 1 = g * q + r; centrality gives h * g too
    if (!div.remainder.is_zero())
        throw HypothesisError("generator does not divide x^n - 1");
    SkewCyclicCode code;
    code.field = field;
    code.sigma = sigma;
    code.n = n;
    code.g = g;
    code.h = div.quotient;
    if (code.h * g != xn1 || g * code.h != xn1)
        throw HypothesisError("generator does not right-divide x^n - 1");
    code.k = n - static_cast<std::size_t>(g.deg());
    return code;
}

Matrix generator_matrix(const SkewCyclicCode& code) {
    Matrix m(code.field, code.k, code.n, MatrixRole::generator);
    for (std::size_t i = 0; i < code.k; ++i) {
        SkewPoly row =
            SkewPoly::monomial(code.field, code.sigma, code.field->one(),
                               static_cast<std::uint32_t>(i)) *
            code.g;
        for (std::size_t j = 0; j < code.n; ++j) m.at(i, j) = row.coeff(j);
    }
    return m;
}

SkewCyclicCode dual_code(const SkewCyclicCode& code) {
    if (code.h.is_zero() || code.h.coeff(0) == code.field->zero())
        throw HypothesisError("parity check has zero constant term");
    SkewPoly ht = reverse_anti_map(code.h).monic();
    SkewCyclicCode dual = cyclic_from_generator(code.field, code.sigma, code.n, ht);
    return dual;
}

Matrix parity_check_matrix(const SkewCyclicCode& code) {
    Matrix m = generator_matrix(dual_code(code));
    m.role = MatrixRole::dual_generator;
    return m;
}

bool contains(const SkewCyclicCode& code, const SkewPoly& c) {
    if (c.deg() >= static_cast<int>(code.n))
        throw ParseError("codeword degree must be below n");
    return reduce_mod_xn1(c * code.h, code.n).is_zero();
}

bool contains(const SkewCyclicCode& code, const std::vector<FieldElement>& word) {
    if (word.size() != code.n) throw ParseError("word length mismatch");
    return contains(code, SkewPoly(code.field, code.sigma, word));
}

bool is_classical_cyclic(const SkewCyclicCode& code) {
    for (FieldElement c : code.g.coeffs())
        if (!code.field->in_subfield(c, code.sigma.q0)) return false;
    return true;
}

bool generates_same_code(const SkewCyclicCode& code, const SkewPoly& f) {
    if (f.is_zero()) return code.k == 0;
    auto div = right_divide(f, code.g);
    if (!div.remainder.is_zero()) return false;
    return gcrd(div.quotient, code.h).deg() == 0;
}

BchBoundReport bch_bound(const SkewCyclicCode& code, std::uint64_t size_budget) {
    BchBoundReport rep;
    rep.tower = smallest_splitting_extension(code.field, code.sigma, code.n, size_budget);
    const Field& top = *rep.tower.top;
    std::uint64_t qs_1 = top.q() - 1;
    std::uint64_t sub = 1;
    for (std::uint32_t i = 0; i < code.n; ++i) sub *= code.sigma.q0; // q0^n
    std::uint64_t step = qs_1 / (sub - 1);
    rep.gamma = top.exp_of(step);

    for (std::uint64_t j = 0; j + 1 < sub; ++j) {
        FieldElement alpha = top.exp_of(step * j % qs_1);
        if (is_right_root(code.g, rep.tower, alpha)) rep.root_exponents.push_back(j);
    }

    // longest run of consecutive exponents, no wraparound
    rep.b = 0;
    rep.delta = 1;
    std::size_t run = 0, run_start = 0;
    for (std::size_t i = 0; i < rep.root_exponents.size(); ++i) {
        if (i == 0 || rep.root_exponents[i] != rep.root_exponents[i - 1] + 1) {
            run = 1;
            run_start = i;
        } else {
            ++run;
        }
        if (run + 1 > rep.delta) {
            rep.delta = run + 1;
            rep.b = rep.root_exponents[run_start];
        }
    }

    // norm parity rows (1, N_1(gamma^j), ..., N_{n-1}(gamma^j)) for the run
    std::size_t nrows = rep.delta - 1;
    SkewAutomorphism top_sigma = SkewAutomorphism::make(top, code.sigma.d);
    rep.parity_rows = Matrix(rep.tower.top, nrows, code.n, MatrixRole::parity);
    for (std::size_t r = 0; r < nrows; ++r) {
        FieldElement gj = top.exp_of(step * (rep.b + r) % qs_1);
        for (std::size_t i = 0; i < code.n; ++i)
            rep.parity_rows.at(r, i) = norm_closed(top, top_sigma, gj, i);
    }
    return rep;
}

} // namespace skewcode
