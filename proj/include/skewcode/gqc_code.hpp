#ifndef SKEWCODE_GQC_CODE_HPP
#define SKEWCODE_GQC_CODE_HPP

#include <cstdint>
#include <vector>

#include "skewcode/cyclic_code.hpp"

namespace skewcode {

/// Skew generalized quasi-cyclic code of block lengths (m_1, ..., m_l):
/// the left R-submodule of R/(x^{m_1}-1) x ... x R/(x^{m_l}-1) generated by
/// rho tuples. Codewords are blockwise concatenations of coefficient vectors.
/// Requires t | m_i and gcd(q, m_i) = 1 for every block.
struct GqcCode {
    FieldPtr field;
    SkewAutomorphism sigma;
    std::vector<std::uint32_t> block_lengths;
    std::vector<std::vector<SkewPoly>> generators; // rho tuples of l polynomials

    std::size_t l() const { return block_lengths.size(); }
    std::size_t rho() const { return generators.size(); }
    std::size_t total_length() const;
    bool is_qc() const; // all block lengths equal
};

GqcCode gqc_from_generators(const FieldPtr& field, const SkewAutomorphism& sigma,
                            const std::vector<std::uint32_t>& block_lengths,
                            const std::vector<std::vector<SkewPoly>>& generators);

/// All x^j-shifts of all generators, j < lcm(m_i), reduced blockwise: a
/// spanning (not reduced) matrix whose row space is the code.
Matrix gqc_span_matrix(const GqcCode& code);

/// Membership of a blockwise word of length sum m_i.
bool gqc_contains(const GqcCode& code, const std::vector<FieldElement>& word);

/// Parity-check data for a 1-generator code: h_i annihilates block i
/// (h_i = quotient of x^{m_i}-1 by gcrd(c_i, x^{m_i}-1)), and h is their
/// least common multiple with every h_i dividing h on the right -- the monic
/// minimal-degree polynomial with h(x) c(x) = 0 blockwise; deg h is the code
/// dimension.
struct OneGenParityCheck {
    std::vector<SkewPoly> h_blocks;
    SkewPoly h;
};

OneGenParityCheck one_gen_parity_check(const GqcCode& code);

/// deg h; equals the rank of the expanded generator matrix.
std::size_t one_gen_dimension(const GqcCode& code);

/// (deg h) x (sum m_i) matrix; row j concatenates the blockwise coefficients
/// of x^j * c_i mod x^{m_i}-1.
Matrix gqc_generator_matrix(const GqcCode& code);

/// Consecutive-root bound for 1-generator codes: d >= sum_{i not in K}
/// (delta_i + 1), minimized over block subsets K whose parity lcm stays
/// strictly below h (the sets on which a nonzero codeword can vanish).
/// delta_i is the per-block consecutive-run length.
struct OneGenDistanceBound {
    std::vector<std::size_t> deltas;   // per block
    std::vector<std::size_t> omitted;  // the maximizing K (block indices)
    std::size_t bound = 0;
};

OneGenDistanceBound one_gen_distance_bound(const GqcCode& code,
                                           std::uint64_t size_budget = Field::default_size_budget());

/// Canonical decomposition over the merged pool of two-sided maximal factors
/// g_1*, ..., g_s* of the x^{m_i}-1. Component k lives in (R/(g_k*))^l; its
/// F_q-dimension is a multiple of deg g_k*, and the quotient is the module
/// rank k_k. The minimal generator count of the code is max_k rank.
struct GqcDecomposition {
    std::vector<SkewPoly> tsm_pool;                 // distinct factors, merged
    std::vector<std::vector<int>> d_flags;          // l x s membership flags
    std::vector<std::vector<SkewPoly>> idempotents; // l x s (zero when flag 0)
    std::vector<std::size_t> component_dims;        // F_q dimensions of the C_k
    std::vector<std::size_t> component_ranks;       // k_k = ceil(dim / deg g_k*)
    std::size_t l = 0;
};

GqcDecomposition canonical_decomposition(const GqcCode& code);
std::size_t rho_of_decomposition(const GqcDecomposition& dec);

/// T_{sigma,l} on the interleaved layout (m groups of l):
/// (a_0, ..., a_{m-1}) -> (sigma(a_{m-1}), sigma(a_0), ..., sigma(a_{m-2})).
std::vector<FieldElement> qc_shift(const FieldPtr& field, const SkewAutomorphism& sigma,
                                   const std::vector<FieldElement>& word, std::size_t l);

/// Blockwise layout (l blocks of m) -> interleaved layout (m groups of l).
std::vector<FieldElement> interleave(const std::vector<FieldElement>& blockwise, std::size_t l);
std::vector<FieldElement> deinterleave(const std::vector<FieldElement>& grouped, std::size_t l);

/// Product bound for QC codes: d(C) >= d(Ctilde) * d(B), with Ctilde the skew
/// cyclic code over F_{q^l} generated by the lifted generators v_i (basis
/// 1, xi, ..., xi^{l-1}) and B the F_q code of length l spanned by all
/// generator coefficient columns.
struct LallyBoundReport {
    FieldTower tower; // F_q inside F_{q^l}
    SkewPoly ctilde_generator;
    std::size_t d_ctilde = 0;
    std::size_t d_b = 0;
    std::size_t bound = 0;
};

LallyBoundReport lally_bound(const GqcCode& code,
                             std::uint64_t size_budget = Field::default_size_budget(),
                             std::uint64_t distance_budget = 10000000);

/// <a, b> = sum_i a_i conj(b_i) mod x^m - 1, with conj(a x^j) =
/// sigma^{-j}(a) x^{m-j}. Vanishing for all x^j a is equivalent to Euclidean
/// orthogonality of all T_{sigma,l}-shifts.
SkewPoly hermitian_product(const std::vector<SkewPoly>& a, const std::vector<SkewPoly>& b,
                           std::uint32_t m);

/// Dual structure report for a QC code: K = max module rank, K' = min module
/// rank over the decomposition components; the dual is an (l - K')-generator
/// QC code; the dual is 1-generator iff l = 2 and every component rank is 1.
struct QcDualReport {
    std::size_t K = 0;
    std::size_t K_prime = 0;
    std::size_t dual_generator_count = 0;
    bool self_dual_consistent = false; // l even and l <= 2*rho
    bool one_generator_dual = false;
};

QcDualReport qc_dual_generator_counts(const GqcCode& code, const GqcDecomposition& dec);

} // namespace skewcode

#endif
