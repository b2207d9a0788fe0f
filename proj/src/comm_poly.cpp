#include "skewcode/comm_poly.hpp"

#include <algorithm>

namespace skewcode {

CommPoly::CommPoly(FieldPtr f, std::vector<FieldElement> coeffs)
    : field(std::move(f)), c(std::move(coeffs)) {
    while (!c.empty() && c.back() == field->zero()) c.pop_back();
}

CommPoly CommPoly::one(FieldPtr f) {
    auto e = f->one();
    return CommPoly(std::move(f), {e});
}

CommPoly CommPoly::yn_minus_one(FieldPtr f, std::uint32_t n) {
    std::vector<FieldElement> v(n + 1, f->zero());
    v[0] = f->neg(f->one());
    v[n] = f->one();
    return CommPoly(std::move(f), std::move(v));
}

CommPoly CommPoly::monic() const {
    if (is_zero()) throw std::domain_error("cannot normalize zero polynomial");
    FieldElement inv = field->inv(c.back());
    std::vector<FieldElement> v(c);
    for (auto& e : v) e = field->mul(inv, e);
    return CommPoly(field, std::move(v));
}

CommPoly CommPoly::operator+(const CommPoly& o) const {
    std::vector<FieldElement> v(std::max(c.size(), o.c.size()), field->zero());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = field->add(coeff(i), o.coeff(i));
    return CommPoly(field, std::move(v));
}

CommPoly CommPoly::operator-(const CommPoly& o) const {
    std::vector<FieldElement> v(std::max(c.size(), o.c.size()), field->zero());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = field->sub(coeff(i), o.coeff(i));
    return CommPoly(field, std::move(v));
}

CommPoly CommPoly::operator*(const CommPoly& o) const {
    if (is_zero() || o.is_zero()) return zero(field);
    std::vector<FieldElement> v(c.size() + o.c.size() - 1, field->zero());
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < o.c.size(); ++j)
            v[i + j] = field->add(v[i + j], field->mul(c[i], o.c[j]));
    return CommPoly(field, std::move(v));
}

bool operator<(const CommPoly& a, const CommPoly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    for (int i = a.deg(); i >= 0; --i)
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
}

FieldElement CommPoly::eval(FieldElement x) const {
    FieldElement acc = field->zero();
    for (std::size_t i = c.size(); i-- > 0;)
        acc = field->add(field->mul(acc, x), c[i]);
    return acc;
}

std::pair<CommPoly, CommPoly> comm_divmod(const CommPoly& f, const CommPoly& g) {
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    const Field& F = *f.field;
    std::vector<FieldElement> rem(f.c);
    std::vector<FieldElement> quot;
    int dg = g.deg();
    if (f.deg() >= dg) quot.assign(f.deg() - dg + 1, F.zero());
    FieldElement gl = F.inv(g.c.back());
    for (int d = static_cast<int>(rem.size()) - 1; d >= dg; --d) {
        if (rem[d] == F.zero()) continue;
        FieldElement a = F.mul(rem[d], gl);
        quot[d - dg] = a;
        for (int j = 0; j <= dg; ++j)
            rem[d - dg + j] = F.sub(rem[d - dg + j], F.mul(a, g.coeff(j)));
    }
    return {CommPoly(f.field, std::move(quot)), CommPoly(f.field, std::move(rem))};
}

namespace {

// Smallest-by-ordering monic irreducible factor; f monic, deg f >= 1.
CommPoly smallest_factor(const CommPoly& f, std::uint64_t candidate_budget) {
    const Field& F = *f.field;
    // linear factors via root scan, smallest rep first
    for (std::uint64_t r = 0; r < F.q(); ++r) {
        FieldElement x{static_cast<std::uint32_t>(r)};
        if (f.eval(x) == F.zero())
            return CommPoly(f.field, {F.neg(x), F.one()});
    }
    // trial division by monic polynomials of increasing degree; the smallest
    // divisor found is irreducible
    for (int k = 2; k <= f.deg() / 2; ++k) {
        std::uint64_t count = 1;
        for (int i = 0; i < k; ++i) {
            if (count > candidate_budget / F.q())
                throw BudgetExceeded("factorization trial-division budget exceeded");
            count *= F.q();
        }
        std::vector<FieldElement> cand(k + 1, F.zero());
        cand[k] = F.one();
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::uint64_t v = idx;
            // lexicographic from the top coefficient down
            for (int i = k - 1; i >= 0; --i) {
                cand[i] = FieldElement{static_cast<std::uint32_t>(v % F.q())};
                v /= F.q();
            }
            CommPoly g(f.field, cand);
            if (g.deg() != k) continue;
            if (comm_divmod(f, g).second.is_zero()) return g;
        }
    }
    return f; // irreducible
}

} // namespace

std::vector<CommPoly> comm_factor(const CommPoly& f, std::uint64_t candidate_budget) {
    if (f.is_zero()) throw std::domain_error("cannot factor zero polynomial");
    std::vector<CommPoly> out;
    CommPoly rest = f.monic();
    while (rest.deg() >= 1) {
        CommPoly p = smallest_factor(rest, candidate_budget);
        out.push_back(p);
        rest = comm_divmod(rest, p).first;
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace skewcode
