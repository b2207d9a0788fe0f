#ifndef SKEWCODE_CENTRAL_HPP
#define SKEWCODE_CENTRAL_HPP

#include <cstdint>
#include <vector>

#include "skewcode/comm_poly.hpp"
#include "skewcode/skew_poly.hpp"

namespace skewcode {

/// Right roots of x^n - 1 in a coefficient field inside the splitting tower.
struct RightRootSet {
    FieldTower tower;
    FieldElement gamma;                   // primitive element of F_{q0^n} in the top field
    std::uint64_t subfield_order = 0;     // q0^n
    std::vector<FieldElement> roots;      // right roots lying in the requested field (top reps)
    std::vector<std::uint64_t> gamma_exponents; // dlog of each root base gamma... see note
};

/// All right roots of x^n - 1 lying in the coefficient field of size
/// `coefficient_q` (a subfield of the splitting field). The set is computed
/// both via the images {alpha^{q0}/alpha} and by exhaustive norm
/// evaluation; the two must agree.
RightRootSet right_roots_of_unity_poly(const FieldPtr& field, const SkewAutomorphism& sigma,
                                       std::uint32_t n, std::uint64_t coefficient_q,
                                       std::uint64_t size_budget = Field::default_size_budget());

/// Complete factorizations of `target` into monic linear skew factors over
/// its own coefficient field, as ordered chains (leftmost factor first; the
/// chain product left-to-right equals the target).
struct FactorizationTree {
    std::vector<std::vector<SkewPoly>> chains;
    std::uint64_t ordered_count = 0;
    std::uint64_t multiset_count = 0;
};

FactorizationTree enumerate_linear_factorizations(const SkewPoly& target,
                                                  std::uint64_t chain_budget = 100000);

/// x^n - 1 = f_1* f_2* ... f_t* with pairwise coprime t.s.m factors, plus the
/// CRT Bezout data and idempotents.
struct TsmFactorization {
    std::uint32_t n = 0;
    SkewPoly modulus_poly;              // x^n - 1 (or the general two-sided input)
    std::vector<SkewPoly> factors;      // sorted by (degree, coefficient order)
    std::vector<SkewPoly> cofactor_b;   // b_i with b_i * fhat_i + c_i * f_i = 1
    std::vector<SkewPoly> cofactor_c;
    std::vector<SkewPoly> idempotents;  // e_i = b_i * fhat_i mod x^n - 1
};

/// Factor a two-sided element of the shape above into t.s.m elements:
/// substitute Y = x^t and factor commutatively over F_q. For x^n - 1 with
/// gcd(n, q) = 1 and t | n the factors are distinct and pairwise coprime.
std::vector<SkewPoly> tsm_factors(const SkewPoly& f);

/// Full CRT data for x^n - 1. Verifies the idempotent identities.
TsmFactorization tsm_factorization(const FieldPtr& field, const SkewAutomorphism& sigma,
                                   std::uint32_t n);

/// Populate Bezout cofactors and idempotents for given pairwise-coprime
/// two-sided factors whose product is x^n - 1.
TsmFactorization crt_idempotents(const FieldPtr& field, const SkewAutomorphism& sigma,
                                 std::uint32_t n, std::vector<SkewPoly> factors);

/// Reduce mod x^n - 1 (remainder of right division; x^n - 1 is two-sided).
SkewPoly reduce_mod_xn1(const SkewPoly& f, std::uint32_t n);

} // namespace skewcode

#endif
