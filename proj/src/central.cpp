#include "skewcode/central.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace skewcode {

SkewPoly reduce_mod_xn1(const SkewPoly& f, std::uint32_t n) {
    if (f.deg() < static_cast<int>(n)) return f;
    auto mod = SkewPoly::xn_minus_one(f.field(), f.sigma(), n);
    return right_divide(f, mod).remainder;
}

RightRootSet right_roots_of_unity_poly(const FieldPtr& field, const SkewAutomorphism& sigma,
                                       std::uint32_t n, std::uint64_t coefficient_q,
                                       std::uint64_t size_budget) {
    if (n % sigma.t != 0) throw HypothesisError("order of sigma must divide n");
    RightRootSet out;
    out.tower = smallest_splitting_extension(field, sigma, n, size_budget);
    const Field& T = *out.tower.top;
    // q0^n, the order of the subfield whose elements are the phi-roots
    std::uint64_t q0n = 1;
    for (std::uint32_t i = 0; i < n; ++i) q0n *= sigma.q0;
    out.subfield_order = q0n;
    if ((T.q() - 1) % (q0n - 1) != 0) throw std::logic_error("splitting field too small");
    out.gamma = T.exp_of((T.q() - 1) / (q0n - 1));
    if (coefficient_q == 0) coefficient_q = T.q();
    if ((coefficient_q - 1) != 0 && (T.q() - 1) % (coefficient_q - 1) != 0)
        throw HypothesisError("coefficient field is not a subfield of the splitting field");

    auto xn1 = SkewPoly::xn_minus_one(field, sigma, n);

    // quotient-image route: {gamma^{i(q0-1)} : i} intersected with the coefficient field
    std::set<std::uint32_t> via_gamma;
    for (std::uint64_t i = 1; i < q0n; ++i) {
        FieldElement alpha = T.pow(out.gamma, static_cast<std::int64_t>(i));
        FieldElement beta = T.div(T.pow(alpha, static_cast<std::int64_t>(sigma.q0)), alpha);
        if (T.in_subfield(beta, coefficient_q)) via_gamma.insert(beta.rep);
    }
    // Exhaustive norm-evaluation route over the coefficient subfield
    std::set<std::uint32_t> via_norm;
    std::uint64_t step = (T.q() - 1) / (coefficient_q - 1);
    for (std::uint64_t k = 0; k < coefficient_q - 1; ++k) {
        FieldElement beta = T.exp_of(k * step);
        if (is_right_root(xn1, out.tower, beta)) via_norm.insert(beta.rep);
    }
    if (is_right_root(xn1, out.tower, T.zero())) via_norm.insert(0);
    if (via_gamma != via_norm)
        throw std::logic_error("right-root computations disagree (norm route vs quotient-image route)");

    for (auto rep : via_norm) out.roots.push_back({rep});
    std::sort(out.roots.begin(), out.roots.end());
    // present roots as gamma exponents where possible
    std::uint64_t gamma_log = *T.dlog(out.gamma);
    for (auto r : out.roots) {
        auto lg = T.dlog(r);
        // r = gamma^e with e = lg / gamma_log over Z_{q^s-1}; roots of x^n-1 all
        // lie in <gamma>, so lg is a multiple of gamma_log
        out.gamma_exponents.push_back(lg ? (*lg / gamma_log) : 0);
    }
    return out;
}

namespace {

void chains_dfs(const SkewPoly& target, std::vector<SkewPoly>& suffix,
                FactorizationTree& tree, std::uint64_t chain_budget) {
    const Field& F = *target.field();
    if (target.deg() == 0) {
        // unit: complete chain (suffix holds factors rightmost-first)
        if (tree.chains.size() >= chain_budget)
            throw BudgetExceeded("factorization chain budget exceeded");
        std::vector<SkewPoly> chain(suffix.rbegin(), suffix.rend());
        tree.chains.push_back(std::move(chain));
        return;
    }
    for (std::uint64_t rep = 0; rep < F.q(); ++rep) {
        FieldElement beta{static_cast<std::uint32_t>(rep)};
        if (eval_right_remainder(target, beta) != F.zero()) continue;
        SkewPoly lin(target.field(), target.sigma(),
                     {F.neg(beta), F.one()});
        auto d = right_divide(target, lin);
        suffix.push_back(lin);
        chains_dfs(d.quotient, suffix, tree, chain_budget);
        suffix.pop_back();
    }
}

} // namespace

FactorizationTree enumerate_linear_factorizations(const SkewPoly& target,
                                                  std::uint64_t chain_budget) {
    if (target.is_zero() || !target.is_monic())
        throw HypothesisError("factorization target must be monic");
    FactorizationTree tree;
    std::vector<SkewPoly> suffix;
    chains_dfs(target, suffix, tree, chain_budget);
    tree.ordered_count = tree.chains.size();
    std::set<std::vector<std::vector<std::uint32_t>>> multisets;
    for (const auto& chain : tree.chains) {
        std::vector<std::vector<std::uint32_t>> key;
        for (const auto& f : chain) {
            std::vector<std::uint32_t> reps;
            for (auto c : f.coeffs()) reps.push_back(c.rep);
            key.push_back(std::move(reps));
        }
        std::sort(key.begin(), key.end());
        multisets.insert(std::move(key));
    }
    tree.multiset_count = multisets.size();
    return tree;
}

std::vector<SkewPoly> tsm_factors(const SkewPoly& f) {
    if (f.is_zero()) throw HypothesisError("cannot factor zero");
    if (!is_two_sided(f)) throw HypothesisError("input is not a two-sided element");
    auto field = f.field();
    auto sigma = f.sigma();
    std::uint32_t t = sigma.t;
    int low = 0;
    while (f.coeff(low) == field->zero()) ++low;
    std::vector<SkewPoly> out;
    // substituted polynomial P(Y), coefficients at degrees low + k*t
    std::vector<FieldElement> pc;
    for (int i = low; i <= f.deg(); i += t) pc.push_back(f.coeff(i));
    CommPoly P(field, std::move(pc));
    FieldElement lead = P.c.back();
    for (const auto& p : comm_factor(P)) {
        std::vector<FieldElement> sc((p.deg() * t) + 1, field->zero());
        for (int i = 0; i <= p.deg(); ++i) sc[i * t] = p.coeff(i);
        out.push_back(SkewPoly(field, sigma, std::move(sc)));
    }
    if (lead != field->one() && !out.empty())
        out[0] = out[0].scaled_left(lead); // only for non-monic general inputs
    // trailing x^low contributes `low` copies of the t.s.m element x
    for (int i = 0; i < low; ++i)
        out.push_back(SkewPoly::monomial(field, sigma, field->one(), 1));
    // verify the product reconstructs f
    SkewPoly prod = SkewPoly::one(field, sigma);
    for (const auto& g : out) prod = prod * g;
    if (prod != f) throw std::logic_error("t.s.m factor product mismatch");
    return out;
}

TsmFactorization crt_idempotents(const FieldPtr& field, const SkewAutomorphism& sigma,
                                 std::uint32_t n, std::vector<SkewPoly> factors) {
    TsmFactorization out;
    out.n = n;
    out.modulus_poly = SkewPoly::xn_minus_one(field, sigma, n);
    // sanity: product and pairwise coprimality
    SkewPoly prod = SkewPoly::one(field, sigma);
    for (const auto& g : factors) {
        if (!is_two_sided(g)) throw HypothesisError("factor is not two-sided");
        prod = prod * g;
    }
    if (prod != out.modulus_poly) throw HypothesisError("factor product is not x^n - 1");
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i + 1; j < factors.size(); ++j)
            if (gcrd(factors[i], factors[j]).deg() != 0)
                throw HypothesisError("factors are not pairwise coprime");
    out.factors = std::move(factors);

    for (std::size_t i = 0; i < out.factors.size(); ++i) {
        SkewPoly fhat = SkewPoly::one(field, sigma);
        for (std::size_t j = 0; j < out.factors.size(); ++j)
            if (j != i) fhat = fhat * out.factors[j];
        auto [d, u, v] = extended_gcrd(fhat, out.factors[i]);
        if (d.deg() != 0) throw HypothesisError("factors are not pairwise coprime");
        // u*fhat + v*f_i = 1
        out.cofactor_b.push_back(u);
        out.cofactor_c.push_back(v);
        out.idempotents.push_back(reduce_mod_xn1(u * fhat, n));
    }
    // CRT idempotent identities, checked constructively
    SkewPoly sum = SkewPoly::zero(field, sigma);
    for (std::size_t i = 0; i < out.idempotents.size(); ++i) {
        sum = sum + out.idempotents[i];
        if (reduce_mod_xn1(out.idempotents[i] * out.idempotents[i], n) != out.idempotents[i])
            throw std::logic_error("e_i not idempotent");
        for (std::size_t j = 0; j < out.idempotents.size(); ++j)
            if (j != i &&
                !reduce_mod_xn1(out.idempotents[i] * out.idempotents[j], n).is_zero())
                throw std::logic_error("idempotents not orthogonal");
    }
    if (sum != SkewPoly::one(field, sigma)) throw std::logic_error("idempotents do not sum to 1");
    return out;
}

TsmFactorization tsm_factorization(const FieldPtr& field, const SkewAutomorphism& sigma,
                                   std::uint32_t n) {
    if (n == 0 || n % sigma.t != 0) throw HypothesisError("order of sigma must divide n");
    if (std::gcd(std::uint64_t(n), field->q()) != 1)
        throw HypothesisError("requires gcd(n, q) = 1");
    auto factors = tsm_factors(SkewPoly::xn_minus_one(field, sigma, n));
    return crt_idempotents(field, sigma, n, std::move(factors));
}

} // namespace skewcode
