#ifndef SKEWCODE_CYCLIC_CODE_HPP
#define SKEWCODE_CYCLIC_CODE_HPP

#include <cstdint>
#include <vector>

#include "skewcode/central.hpp"
#include "skewcode/distance_lab.hpp"
#include "skewcode/skew_poly.hpp"

namespace skewcode {

/// Skew cyclic code of length n over F_q, generated by a monic right divisor
/// g of x^n - 1, with parity-check polynomial h: x^n - 1 = h * g (= g * h,
/// since x^n - 1 is central). Requires t | n and gcd(n, q) = 1.
struct SkewCyclicCode {
    FieldPtr field;
    SkewAutomorphism sigma;
    std::uint32_t n = 0;
    SkewPoly g; // monic generator
    SkewPoly h; // parity check, deg h = k
    std::size_t k = 0;
};

SkewCyclicCode cyclic_from_generator(const FieldPtr& field, const SkewAutomorphism& sigma,
                                     std::uint32_t n, const SkewPoly& g);

/// k x n matrix whose row i holds the coefficients of x^i * g.
Matrix generator_matrix(const SkewCyclicCode& code);

/// Dual code, generated by the reversed parity check h~ (made monic).
SkewCyclicCode dual_code(const SkewCyclicCode& code);

/// (n-k) x n matrix: generator matrix of the dual; G * H^T = 0.
Matrix parity_check_matrix(const SkewCyclicCode& code);

/// Membership: c(x) * h(x) = 0 mod x^n - 1 (equivalently g right-divides c).
bool contains(const SkewCyclicCode& code, const SkewPoly& c);
bool contains(const SkewCyclicCode& code, const std::vector<FieldElement>& word);

/// True when g has all coefficients in the fixed subfield F_{q0}, so the code
/// is also cyclic in the ordinary (commutative) sense.
bool is_classical_cyclic(const SkewCyclicCode& code);

/// True when f generates the same code: f = p * g with gcrd(p, h) = 1.
bool generates_same_code(const SkewCyclicCode& code, const SkewPoly& f);

/// BCH-style lower bound from a run of consecutive right roots gamma^b,
/// gamma^{b+1}, ..., gamma^{b+delta-2} of g, with gamma primitive in F_{q0^n}.
/// Runs do not wrap around the exponent range.
struct BchBoundReport {
    std::uint64_t b = 0;      // start of the longest run
    std::size_t delta = 1;    // bound: d >= delta
    std::vector<std::uint64_t> root_exponents; // all j with x - gamma^j a right root of g
    FieldTower tower;
    FieldElement gamma;
    Matrix parity_rows; // rows (1, N_1(gamma^j), ..., N_{n-1}(gamma^j)), j in the run
};

BchBoundReport bch_bound(const SkewCyclicCode& code,
                         std::uint64_t size_budget = Field::default_size_budget());

} // namespace skewcode

#endif
