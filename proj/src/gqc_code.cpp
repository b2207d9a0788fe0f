#include "skewcode/gqc_code.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace skewcode {

namespace {

std::uint32_t blocks_lcm(const std::vector<std::uint32_t>& ms) {
    std::uint64_t L = 1;
    for (auto m : ms) L = std::lcm(L, static_cast<std::uint64_t>(m));
    return static_cast<std::uint32_t>(L);
}

SkewPoly x_pow(const FieldPtr& field, const SkewAutomorphism& sigma, std::uint32_t j) {
    return SkewPoly::monomial(field, sigma, field->one(), j);
}

// gcrd(c, x^m - 1); x^m - 1 itself when c = 0.
SkewPoly block_generator(const GqcCode& code, const SkewPoly& c, std::uint32_t m) {
    SkewPoly xm1 = SkewPoly::xn_minus_one(code.field, code.sigma, m);
    if (c.is_zero()) return xm1;
    return gcrd(c, xm1);
}

void require_one_generator(const GqcCode& code) {
    if (code.rho() != 1) throw HypothesisError("operation requires a 1-generator code");
}

} // namespace

std::size_t GqcCode::total_length() const {
    std::size_t n = 0;
    for (auto m : block_lengths) n += m;
    return n;
}

bool GqcCode::is_qc() const {
    return !block_lengths.empty() &&
           std::all_of(block_lengths.begin(), block_lengths.end(),
                       [&](std::uint32_t m) { return m == block_lengths[0]; });
}

GqcCode gqc_from_generators(const FieldPtr& field, const SkewAutomorphism& sigma,
                            const std::vector<std::uint32_t>& block_lengths,
                            const std::vector<std::vector<SkewPoly>>& generators) {
    if (block_lengths.empty()) throw ParseError("at least one block required");
    if (generators.empty()) throw ParseError("at least one generator required");
    for (auto m : block_lengths) {
        if (m == 0) throw ParseError("block length must be positive");
        if (m % sigma.t != 0)
            throw HypothesisError("order of sigma must divide every block length");
        if (std::gcd(static_cast<std::uint64_t>(m), field->q()) != 1)
            throw HypothesisError("gcd(q, m_i) must be 1");
    }
    GqcCode code;
    code.field = field;
    code.sigma = sigma;
    code.block_lengths = block_lengths;
    for (const auto& tuple : generators) {
        if (tuple.size() != block_lengths.size())
            throw ParseError("generator tuple size must match block count");
        std::vector<SkewPoly> reduced;
        bool all_zero = true;
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            if (!tuple[i].is_zero()) all_zero = false;
            reduced.push_back(reduce_mod_xn1(tuple[i], block_lengths[i]));
        }
        // a literally-zero tuple is a mistake; x^{m_i}-1 entries (the zero
        // code) are legitimate and reduce to zero above
        if (all_zero) throw HypothesisError("zero generator tuple rejected");
        code.generators.push_back(std::move(reduced));
    }
    return code;
}

Matrix gqc_span_matrix(const GqcCode& code) {
    std::uint32_t L = blocks_lcm(code.block_lengths);
    std::size_t n = code.total_length();
    Matrix m(code.field, code.rho() * L, n, MatrixRole::generator);
    std::size_t r = 0;
    for (const auto& tuple : code.generators)
        for (std::uint32_t j = 0; j < L; ++j, ++r) {
            SkewPoly xj = x_pow(code.field, code.sigma, j);
            std::size_t off = 0;
            for (std::size_t i = 0; i < tuple.size(); ++i) {
                SkewPoly blk = reduce_mod_xn1(xj * tuple[i], code.block_lengths[i]);
                for (std::uint32_t c = 0; c < code.block_lengths[i]; ++c)
                    m.at(r, off + c) = blk.coeff(c);
                off += code.block_lengths[i];
            }
        }
    return m;
}

bool gqc_contains(const GqcCode& code, const std::vector<FieldElement>& word) {
    if (word.size() != code.total_length()) throw ParseError("word length mismatch");
    return in_row_space(gqc_span_matrix(code), word);
}

OneGenParityCheck one_gen_parity_check(const GqcCode& code) {
    require_one_generator(code);
    const auto& tuple = code.generators[0];
    OneGenParityCheck pc;
    pc.h = SkewPoly::one(code.field, code.sigma);
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        std::uint32_t mi = code.block_lengths[i];
        SkewPoly xm1 = SkewPoly::xn_minus_one(code.field, code.sigma, mi);
        SkewPoly gi = block_generator(code, tuple[i], mi);
        SkewPoly hi = right_divide(xm1, gi).quotient.monic();
        pc.h_blocks.push_back(hi);
        pc.h = lclm(pc.h, hi);
    }
    // each block must be annihilated: h * c_i = 0 mod x^{m_i} - 1
    for (std::size_t i = 0; i < tuple.size(); ++i)
        if (!reduce_mod_xn1(pc.h * tuple[i], code.block_lengths[i]).is_zero())
            throw std::logic_error("parity check fails to annihilate a block");
    return pc;
}

std::size_t one_gen_dimension(const GqcCode& code) {
    OneGenParityCheck pc = one_gen_parity_check(code);
    std::size_t k = static_cast<std::size_t>(pc.h.deg());
    if (rank(gqc_span_matrix(code)) != k)
        throw std::logic_error("dimension disagrees with expanded-matrix rank");
    return k;
}

Matrix gqc_generator_matrix(const GqcCode& code) {
    require_one_generator(code);
    OneGenParityCheck pc = one_gen_parity_check(code);
    std::size_t k = static_cast<std::size_t>(pc.h.deg());
    std::size_t n = code.total_length();
    const auto& tuple = code.generators[0];
    Matrix m(code.field, k, n, MatrixRole::generator);
    for (std::size_t j = 0; j < k; ++j) {
        SkewPoly xj = x_pow(code.field, code.sigma, static_cast<std::uint32_t>(j));
        std::size_t off = 0;
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            SkewPoly blk = reduce_mod_xn1(xj * tuple[i], code.block_lengths[i]);
            for (std::uint32_t c = 0; c < code.block_lengths[i]; ++c)
                m.at(j, off + c) = blk.coeff(c);
            off += code.block_lengths[i];
        }
    }
    if (rank(m) != k) throw std::logic_error("generator matrix rank below deg h");
    return m;
}

OneGenDistanceBound one_gen_distance_bound(const GqcCode& code, std::uint64_t size_budget) {
    require_one_generator(code);
    std::size_t l = code.l();
    if (l > 20) throw BudgetExceeded("subset search limited to 20 blocks");
    OneGenParityCheck pc = one_gen_parity_check(code);
    OneGenDistanceBound out;
    if (pc.h.deg() == 0) return out; // zero code, vacuous bound

    const auto& tuple = code.generators[0];
    for (std::size_t i = 0; i < l; ++i) {
        SkewPoly gi = block_generator(code, tuple[i], code.block_lengths[i]);
        SkewCyclicCode blk =
            cyclic_from_generator(code.field, code.sigma, code.block_lengths[i], gi);
        // delta_i = length of the consecutive-root run; block contribution
        // delta_i + 1 equals the per-block BCH bound
        out.deltas.push_back(bch_bound(blk, size_budget).delta - 1);
    }

    // a nonzero codeword can vanish exactly on a block set K only when
    // lcm_{i in K} h_i stays strictly below h, so the guaranteed weight is
    // the minimum complement sum over all such K (K empty always works)
    std::size_t best_sum = std::numeric_limits<std::size_t>::max();
    std::uint32_t best_mask = 0;
    for (std::uint32_t mask = 0; mask < (1u << l); ++mask) {
        std::size_t sum = 0;
        for (std::size_t i = 0; i < l; ++i)
            if (!(mask & (1u << i))) sum += out.deltas[i] + 1;
        if (sum >= best_sum) continue;
        SkewPoly e = SkewPoly::one(code.field, code.sigma);
        for (std::size_t i = 0; i < l; ++i)
            if (mask & (1u << i)) e = lclm(e, pc.h_blocks[i]);
        if (e != pc.h) {
            best_sum = sum;
            best_mask = mask;
        }
    }
    out.bound = best_sum;
    for (std::size_t i = 0; i < l; ++i)
        if (best_mask & (1u << i)) out.omitted.push_back(i);
    return out;
}

GqcDecomposition canonical_decomposition(const GqcCode& code) {
    std::size_t l = code.l();
    GqcDecomposition dec;
    dec.l = l;

    // per-block factorizations, merged into one pool of distinct factors
    std::vector<TsmFactorization> block_fact;
    for (auto m : code.block_lengths)
        block_fact.push_back(tsm_factorization(code.field, code.sigma, m));
    for (const auto& bf : block_fact)
        for (const auto& f : bf.factors)
            if (std::find(dec.tsm_pool.begin(), dec.tsm_pool.end(), f) == dec.tsm_pool.end())
                dec.tsm_pool.push_back(f);
    std::sort(dec.tsm_pool.begin(), dec.tsm_pool.end(), [](const SkewPoly& a, const SkewPoly& b) {
        if (a.deg() != b.deg()) return a.deg() < b.deg();
        for (std::size_t i = a.coeffs().size(); i-- > 0;)
            if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] < b.coeffs()[i];
        return false;
    });

    std::size_t s = dec.tsm_pool.size();
    dec.d_flags.assign(l, std::vector<int>(s, 0));
    dec.idempotents.assign(
        l, std::vector<SkewPoly>(s, SkewPoly::zero(code.field, code.sigma)));
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t k = 0; k < s; ++k) {
            const auto& bf = block_fact[i];
            auto it = std::find(bf.factors.begin(), bf.factors.end(), dec.tsm_pool[k]);
            if (it != bf.factors.end()) {
                dec.d_flags[i][k] = 1;
                dec.idempotents[i][k] = bf.idempotents[it - bf.factors.begin()];
            }
        }

    // component k: blockwise right-multiply by the idempotent, reduce mod g_k*
    std::uint32_t L = blocks_lcm(code.block_lengths);
    std::vector<Matrix> lifted; // projections inside the original ambient space
    for (std::size_t k = 0; k < s; ++k) {
        std::size_t dk = static_cast<std::size_t>(dec.tsm_pool[k].deg());
        Matrix comp(code.field, code.rho() * L, l * dk);
        Matrix lift(code.field, code.rho() * L, code.total_length());
        std::size_t r = 0;
        for (const auto& tuple : code.generators)
            for (std::uint32_t j = 0; j < L; ++j, ++r) {
                SkewPoly xj = x_pow(code.field, code.sigma, j);
                std::size_t off = 0;
                for (std::size_t i = 0; i < l; ++i) {
                    std::uint32_t mi = code.block_lengths[i];
                    if (dec.d_flags[i][k]) {
                        SkewPoly proj = reduce_mod_xn1(
                            reduce_mod_xn1(xj * tuple[i], mi) * dec.idempotents[i][k], mi);
                        for (std::uint32_t c = 0; c < mi; ++c)
                            lift.at(r, off + c) = proj.coeff(c);
                        SkewPoly red = right_divide(proj, dec.tsm_pool[k]).remainder;
                        for (std::size_t c = 0; c < dk; ++c)
                            comp.at(r, i * dk + c) = red.coeff(c);
                    }
                    off += mi;
                }
            }
        // module rank = minimal generator count of the component: dim/deg when
        // the quotient acts like a field, rounded up when it is a matrix ring
        // (simple modules then have dimension deg/t, and a cyclic module covers
        // t simples at once, so ceil(dim/deg) is still the generator count)
        std::size_t dim = rank(comp);
        dec.component_dims.push_back(dim);
        dec.component_ranks.push_back((dim + dk - 1) / dk);
        lifted.push_back(std::move(lift));
    }

    // reconstruction: the stacked lifted components span the original code
    Matrix stacked(code.field, 0, code.total_length());
    for (const auto& lm : lifted) {
        stacked.rows += lm.rows;
        stacked.a.insert(stacked.a.end(), lm.a.begin(), lm.a.end());
    }
    if (!row_space_equal(stacked, gqc_span_matrix(code)))
        throw std::logic_error("component lifts do not reconstruct the code");
    return dec;
}

std::size_t rho_of_decomposition(const GqcDecomposition& dec) {
    std::size_t r = 0;
    for (auto k : dec.component_ranks) r = std::max(r, k);
    return r;
}

std::vector<FieldElement> qc_shift(const FieldPtr& field, const SkewAutomorphism& sigma,
                                   const std::vector<FieldElement>& word, std::size_t l) {
    if (l == 0 || word.size() % l != 0) throw ParseError("length not divisible by l");
    std::size_t m = word.size() / l;
    std::vector<FieldElement> out(word.size());
    for (std::size_t j = 0; j < m; ++j) {
        std::size_t src = (j + m - 1) % m;
        for (std::size_t i = 0; i < l; ++i)
            out[j * l + i] = sigma.apply(*field, word[src * l + i]);
    }
    return out;
}

std::vector<FieldElement> interleave(const std::vector<FieldElement>& blockwise, std::size_t l) {
    if (l == 0 || blockwise.size() % l != 0) throw ParseError("length not divisible by l");
    std::size_t m = blockwise.size() / l;
    std::vector<FieldElement> out(blockwise.size());
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < m; ++j) out[j * l + i] = blockwise[i * m + j];
    return out;
}

std::vector<FieldElement> deinterleave(const std::vector<FieldElement>& grouped, std::size_t l) {
    if (l == 0 || grouped.size() % l != 0) throw ParseError("length not divisible by l");
    std::size_t m = grouped.size() / l;
    std::vector<FieldElement> out(grouped.size());
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < m; ++j) out[i * m + j] = grouped[j * l + i];
    return out;
}

LallyBoundReport lally_bound(const GqcCode& code, std::uint64_t size_budget,
                             std::uint64_t distance_budget) {
    if (!code.is_qc()) throw HypothesisError("product bound requires equal block lengths");
    std::size_t l = code.l();
    std::uint32_t m = code.block_lengths[0];

    // sigma extends to theta^{d*l} on F_{q^l}: same restriction to F_q, same
    // order t, fixed field F_{q0^l}. Requires l = 1 mod t.
    std::uint32_t t = code.sigma.t;
    if (l % t != 1 % t)
        throw HypothesisError("sigma does not extend to F_{q^l} with order t (need l = 1 mod t)");

    LallyBoundReport rep;
    rep.tower = field_extension(code.field, static_cast<std::uint32_t>(l), size_budget);
    const FieldPtr& top = rep.tower.top;
    SkewAutomorphism top_sigma =
        SkewAutomorphism::make(*top, static_cast<std::uint32_t>(code.sigma.d * l));

    // basis 1, xi, ..., xi^{l-1} with xi in the fixed field F_{q0^l} of the
    // extension, so that lifting commutes with the skew shift
    std::uint64_t q0l = 1;
    for (std::size_t i = 0; i < l; ++i) q0l *= code.sigma.q0;
    FieldElement xi = top->exp_of((top->q() - 1) / (q0l - 1));
    {
        // xi must generate F_{q^l} over F_q: its q-power orbit has size l
        FieldElement y = xi;
        std::size_t orbit = 0;
        do {
            y = top->pow(y, static_cast<std::int64_t>(code.field->q()));
            ++orbit;
        } while (y != xi && orbit <= l);
        if (orbit != l)
            throw HypothesisError("basis element does not generate the extension");
    }

    // lift each generator tuple to v(x) over F_{q^l} via the basis 1, xi, ...
    std::vector<SkewPoly> lifted;
    for (const auto& tuple : code.generators) {
        std::vector<FieldElement> coeffs(m, top->zero());
        for (std::size_t b = 0; b < l; ++b) {
            FieldElement xib = top->pow(xi, static_cast<std::int64_t>(b));
            for (std::uint32_t j = 0; j < m; ++j)
                coeffs[j] = top->add(
                    coeffs[j], top->mul(rep.tower.embed(tuple[b].coeff(j)), xib));
        }
        lifted.push_back(SkewPoly(top, top_sigma, coeffs));
    }

    SkewPoly g = SkewPoly::xn_minus_one(top, top_sigma, m);
    for (const auto& v : lifted)
        if (!v.is_zero()) g = gcrd(g, v);
    g = g.monic();
    rep.ctilde_generator = g;
    SkewCyclicCode ctilde = cyclic_from_generator(top, top_sigma, m, g);
    rep.d_ctilde = ctilde.k == 0 ? 0 : min_distance_by_rank(generator_matrix(ctilde));

    // B: F_q code of length l spanned by the generator coefficient columns
    Matrix b(code.field, code.rho() * m, l);
    std::size_t r = 0;
    for (const auto& tuple : code.generators)
        for (std::uint32_t j = 0; j < m; ++j, ++r)
            for (std::size_t i = 0; i < l; ++i) b.at(r, i) = tuple[i].coeff(j);
    rep.d_b = rank(b) == 0 ? 0 : min_distance_by_rank(b);
    (void)distance_budget;
    rep.bound = rep.d_ctilde * rep.d_b;
    return rep;
}

SkewPoly hermitian_product(const std::vector<SkewPoly>& a, const std::vector<SkewPoly>& b,
                           std::uint32_t m) {
    if (a.size() != b.size() || a.empty()) throw ParseError("tuple length mismatch");
    const FieldPtr& field = a[0].field();
    const SkewAutomorphism& sigma = a[0].sigma();
    SkewPoly acc = SkewPoly::zero(field, sigma);
    for (std::size_t i = 0; i < a.size(); ++i) {
        // conj(sum b_j x^j) = sum sigma^{-j}(b_j) x^{(m-j) mod m}, mod x^m - 1
        std::vector<FieldElement> conj(m, field->zero());
        SkewPoly bi = reduce_mod_xn1(b[i], m);
        for (std::uint32_t j = 0; j <= static_cast<std::uint32_t>(std::max(bi.deg(), 0)); ++j) {
            if (bi.coeff(j) == field->zero()) continue;
            std::uint32_t back = (sigma.t - j % sigma.t) % sigma.t;
            FieldElement c = sigma.apply_pow(*field, bi.coeff(j), back);
            std::uint32_t pos = (m - j) % m;
            conj[pos] = field->add(conj[pos], c);
        }
        acc = acc + reduce_mod_xn1(reduce_mod_xn1(a[i], m) * SkewPoly(field, sigma, conj), m);
    }
    return reduce_mod_xn1(acc, m);
}

QcDualReport qc_dual_generator_counts(const GqcCode& code, const GqcDecomposition& dec) {
    if (!code.is_qc()) throw HypothesisError("dual structure report requires equal blocks");
    QcDualReport rep;
    std::size_t l = code.l();
    rep.K = rho_of_decomposition(dec);
    rep.K_prime = dec.component_ranks.empty()
                      ? 0
                      : *std::min_element(dec.component_ranks.begin(), dec.component_ranks.end());
    rep.dual_generator_count = l - std::min(rep.K_prime, l);
    rep.self_dual_consistent = (l % 2 == 0) && (l <= 2 * rep.K);
    rep.one_generator_dual =
        l == 2 && std::all_of(dec.component_ranks.begin(), dec.component_ranks.end(),
                              [](std::size_t k) { return k == 1; });
    return rep;
}

} // namespace skewcode
