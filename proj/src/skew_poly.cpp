#include "skewcode/skew_poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace skewcode {

namespace {

void require_compatible(const SkewPoly& a, const SkewPoly& b) {
    if (!a.field() || !b.field() || !a.field()->same_field(*b.field()))
        throw ParseError("skew polynomials over different fields");
    if (a.sigma().d != b.sigma().d)
        throw ParseError("skew polynomials with different automorphisms");
}

} // namespace

SkewPoly::SkewPoly(FieldPtr field, SkewAutomorphism sigma, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), sigma_(sigma), c_(std::move(coeffs)) {
    trim();
}

void SkewPoly::trim() {
    while (!c_.empty() && c_.back() == field_->zero()) c_.pop_back();
}

SkewPoly SkewPoly::zero(FieldPtr field, SkewAutomorphism sigma) {
    return SkewPoly(std::move(field), sigma, {});
}

SkewPoly SkewPoly::one(FieldPtr field, SkewAutomorphism sigma) {
    auto e = field->one();
    return SkewPoly(std::move(field), sigma, {e});
}

SkewPoly SkewPoly::constant(FieldPtr field, SkewAutomorphism sigma, FieldElement c) {
    return SkewPoly(std::move(field), sigma, {c});
}

SkewPoly SkewPoly::monomial(FieldPtr field, SkewAutomorphism sigma, FieldElement c,
                            std::uint32_t i) {
    std::vector<FieldElement> v(i + 1, field->zero());
    v[i] = c;
    return SkewPoly(std::move(field), sigma, std::move(v));
}

SkewPoly SkewPoly::xn_minus_one(FieldPtr field, SkewAutomorphism sigma, std::uint32_t n) {
    std::vector<FieldElement> v(n + 1, field->zero());
    v[0] = field->neg(field->one());
    v[n] = field->one();
    return SkewPoly(std::move(field), sigma, std::move(v));
}

FieldElement SkewPoly::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

bool SkewPoly::is_monic() const { return !is_zero() && c_.back() == field_->one(); }

SkewPoly SkewPoly::monic() const {
    if (is_zero()) throw std::domain_error("cannot normalize zero polynomial");
    return scaled_left(field_->inv(c_.back()));
}

SkewPoly SkewPoly::operator+(const SkewPoly& other) const {
    require_compatible(*this, other);
    std::vector<FieldElement> v(std::max(c_.size(), other.c_.size()), field_->zero());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = field_->add(coeff(i), other.coeff(i));
    return SkewPoly(field_, sigma_, std::move(v));
}

SkewPoly SkewPoly::operator-(const SkewPoly& other) const { return *this + (-other); }

SkewPoly SkewPoly::operator-() const {
    std::vector<FieldElement> v(c_);
    for (auto& e : v) e = field_->neg(e);
    return SkewPoly(field_, sigma_, std::move(v));
}

SkewPoly SkewPoly::operator*(const SkewPoly& other) const {
    require_compatible(*this, other);
    if (is_zero() || other.is_zero()) return zero(field_, sigma_);
    std::vector<FieldElement> v(c_.size() + other.c_.size() - 1, field_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == field_->zero()) continue;
        for (std::size_t j = 0; j < other.c_.size(); ++j) {
            FieldElement tw = sigma_.apply_pow(*field_, other.c_[j], i);
            v[i + j] = field_->add(v[i + j], field_->mul(c_[i], tw));
        }
    }
    return SkewPoly(field_, sigma_, std::move(v));
}

SkewPoly SkewPoly::scaled_left(FieldElement c) const {
    std::vector<FieldElement> v(c_);
    for (auto& e : v) e = field_->mul(c, e);
    return SkewPoly(field_, sigma_, std::move(v));
}

bool operator==(const SkewPoly& a, const SkewPoly& b) {
    require_compatible(a, b);
    return a.c_ == b.c_;
}

// ---- division ----

DivisionResult right_divide(const SkewPoly& f, const SkewPoly& g) {
    require_compatible(f, g);
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    const Field& F = *f.field();
    const SkewAutomorphism& sig = f.sigma();
    std::vector<FieldElement> rem(f.coeffs());
    std::vector<FieldElement> quot;
    int dg = g.deg();
    FieldElement glead = g.leading();
    if (f.deg() >= dg) quot.assign(f.deg() - dg + 1, F.zero());
    auto rdeg = [&]() {
        int d = static_cast<int>(rem.size()) - 1;
        while (d >= 0 && rem[d] == F.zero()) --d;
        return d;
    };
    for (int d = rdeg(); d >= dg; d = rdeg()) {
        std::size_t i = static_cast<std::size_t>(d - dg); // quotient term a x^i
        FieldElement a = F.div(rem[d], sig.apply_pow(F, glead, i));
        quot[i] = a;
        for (int j = 0; j <= dg; ++j) {
            FieldElement tw = sig.apply_pow(F, g.coeff(j), i);
            rem[i + j] = F.sub(rem[i + j], F.mul(a, tw));
        }
    }
    DivisionResult r;
    r.side = DivisionSide::right;
    r.quotient = SkewPoly(f.field(), sig, std::move(quot));
    r.remainder = SkewPoly(f.field(), sig, std::move(rem));
    return r;
}

DivisionResult left_divide(const SkewPoly& f, const SkewPoly& g) {
    require_compatible(f, g);
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    const Field& F = *f.field();
    const SkewAutomorphism& sig = f.sigma();
    std::vector<FieldElement> rem(f.coeffs());
    std::vector<FieldElement> quot;
    int dg = g.deg();
    FieldElement glead = g.leading();
    if (f.deg() >= dg) quot.assign(f.deg() - dg + 1, F.zero());
    auto rdeg = [&]() {
        int d = static_cast<int>(rem.size()) - 1;
        while (d >= 0 && rem[d] == F.zero()) --d;
        return d;
    };
    // f = g * q + r: term (g_k x^k)(a x^i) = g_k sigma^k(a) x^{k+i}
    for (int d = rdeg(); d >= dg; d = rdeg()) {
        std::size_t i = static_cast<std::size_t>(d - dg);
        // need g_lead * sigma^{dg}(a) = rem[d]
        FieldElement a = F.div(rem[d], glead);
        // invert sigma^{dg}: sigma has order t, apply t - (dg mod t) more times
        std::uint64_t back = (sig.t - (dg % sig.t)) % sig.t;
        a = sig.apply_pow(F, a, back);
        quot[i] = a;
        for (int k = 0; k <= dg; ++k) {
            FieldElement tw = sig.apply_pow(F, a, k);
            rem[k + i] = F.sub(rem[k + i], F.mul(g.coeff(k), tw));
        }
    }
    DivisionResult r;
    r.side = DivisionSide::left;
    r.quotient = SkewPoly(f.field(), sig, std::move(quot));
    r.remainder = SkewPoly(f.field(), sig, std::move(rem));
    return r;
}

bool right_divides(const SkewPoly& g, const SkewPoly& f) {
    if (f.is_zero()) return true;
    return right_divide(f, g).remainder.is_zero();
}

// ---- gcd / lcm ----

std::tuple<SkewPoly, SkewPoly, SkewPoly> extended_gcrd(const SkewPoly& f, const SkewPoly& g) {
    require_compatible(f, g);
    if (f.is_zero() && g.is_zero()) throw std::domain_error("gcrd(0, 0) undefined");
    auto field = f.field();
    auto sig = f.sigma();
    SkewPoly r0 = f, r1 = g;
    SkewPoly u0 = SkewPoly::one(field, sig), u1 = SkewPoly::zero(field, sig);
    SkewPoly v0 = SkewPoly::zero(field, sig), v1 = SkewPoly::one(field, sig);
    while (!r1.is_zero()) {
        auto d = right_divide(r0, r1);
        SkewPoly r2 = d.remainder;
        SkewPoly u2 = u0 - d.quotient * u1;
        SkewPoly v2 = v0 - d.quotient * v1;
        r0 = r1; r1 = r2;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    FieldElement lc = r0.leading();
    FieldElement lci = field->inv(lc);
    return {r0.scaled_left(lci), u0.scaled_left(lci), v0.scaled_left(lci)};
}

SkewPoly gcrd(const SkewPoly& f, const SkewPoly& g) { return std::get<0>(extended_gcrd(f, g)); }

std::tuple<SkewPoly, SkewPoly, SkewPoly> extended_gcld(const SkewPoly& f, const SkewPoly& g) {
    require_compatible(f, g);
    if (f.is_zero() && g.is_zero()) throw std::domain_error("gcld(0, 0) undefined");
    auto field = f.field();
    auto sig = f.sigma();
    SkewPoly r0 = f, r1 = g;
    SkewPoly u0 = SkewPoly::one(field, sig), u1 = SkewPoly::zero(field, sig);
    SkewPoly v0 = SkewPoly::zero(field, sig), v1 = SkewPoly::one(field, sig);
    while (!r1.is_zero()) {
        auto d = left_divide(r0, r1);
        SkewPoly r2 = d.remainder;
        SkewPoly u2 = u0 - u1 * d.quotient;
        SkewPoly v2 = v0 - v1 * d.quotient;
        r0 = r1; r1 = r2;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    // invariant: r0 = f*u0 + g*v0; scale on the right to make r0 monic
    FieldElement lc = r0.leading();
    // r0 * c has leading sigma^{deg}(c) * lc ... scale by constant on the right:
    // (sum a_i x^i) * c = sum a_i sigma^i(c) x^i. Want sigma^{deg}(c) = lc^{-1}.
    std::uint64_t back = (sig.t - (static_cast<std::uint64_t>(r0.deg()) % sig.t)) % sig.t;
    FieldElement c = sig.apply_pow(*field, field->inv(lc), back);
    SkewPoly cc = SkewPoly::constant(field, sig, c);
    return {r0 * cc, u0 * cc, v0 * cc};
}

SkewPoly gcld(const SkewPoly& f, const SkewPoly& g) { return std::get<0>(extended_gcld(f, g)); }

SkewPoly lclm(const SkewPoly& f, const SkewPoly& g) {
    require_compatible(f, g);
    if (f.is_zero() || g.is_zero()) throw std::domain_error("lclm of zero polynomial");
    auto field = f.field();
    auto sig = f.sigma();
    SkewPoly r0 = f, r1 = g;
    SkewPoly u0 = SkewPoly::one(field, sig), u1 = SkewPoly::zero(field, sig);
    while (!r1.is_zero()) {
        auto d = right_divide(r0, r1);
        SkewPoly r2 = d.remainder;
        SkewPoly u2 = u0 - d.quotient * u1;
        r0 = r1; r1 = r2;
        u0 = u1; u1 = u2;
    }
    // u1 * f = +-(v1 * g) is the least common left multiple
    return (u1 * f).monic();
}

SkewPoly lcrm(const SkewPoly& f, const SkewPoly& g) {
    require_compatible(f, g);
    if (f.is_zero() || g.is_zero()) throw std::domain_error("lcrm of zero polynomial");
    auto field = f.field();
    auto sig = f.sigma();
    SkewPoly r0 = f, r1 = g;
    SkewPoly u0 = SkewPoly::one(field, sig), u1 = SkewPoly::zero(field, sig);
    while (!r1.is_zero()) {
        auto d = left_divide(r0, r1);
        SkewPoly r2 = d.remainder;
        SkewPoly u2 = u0 - u1 * d.quotient;
        r0 = r1; r1 = r2;
        u0 = u1; u1 = u2;
    }
    // normalize with a right scalar so f and g stay left divisors
    SkewPoly m = f * u1;
    std::uint64_t back = (sig.t - (static_cast<std::uint64_t>(m.deg()) % sig.t)) % sig.t;
    FieldElement c = sig.apply_pow(*field, field->inv(m.leading()), back);
    return m * SkewPoly::constant(field, sig, c);
}

// ---- norms and right roots ----

FieldElement norm(const Field& field, const SkewAutomorphism& sigma, FieldElement alpha,
                  std::uint64_t i) {
    FieldElement acc = field.one();
    for (std::uint64_t j = 0; j < i; ++j)
        acc = field.mul(sigma.apply_pow(field, alpha, j), acc);
    return acc;
}

FieldElement norm_closed(const Field& field, const SkewAutomorphism& sigma, FieldElement alpha,
                         std::uint64_t i) {
    if (i == 0) return field.one();
    if (alpha == field.zero()) return field.zero();
    std::uint64_t ord = field.q() - 1;
    std::uint64_t e = 0, term = 1;
    for (std::uint64_t j = 0; j < i; ++j) {
        e = (e + term) % ord;
        term = (term * (sigma.q0 % ord)) % ord;
    }
    return field.pow(alpha, static_cast<std::int64_t>(e));
}

FieldElement eval_right_remainder(const SkewPoly& f, FieldElement alpha) {
    const Field& F = *f.field();
    FieldElement acc = F.zero();
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (f.coeff(i) == F.zero()) continue;
        acc = F.add(acc, F.mul(f.coeff(i), norm_closed(F, f.sigma(), alpha, i)));
    }
    return acc;
}

FieldElement eval_right_remainder(const SkewPoly& f, const FieldTower& tower, FieldElement alpha) {
    const Field& T = *tower.top;
    FieldElement acc = T.zero();
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (f.coeff(i) == f.field()->zero()) continue;
        FieldElement c = tower.embed(f.coeff(i));
        acc = T.add(acc, T.mul(c, norm_closed(T, f.sigma(), alpha, i)));
    }
    return acc;
}

bool is_right_root(const SkewPoly& f, FieldElement alpha) {
    return eval_right_remainder(f, alpha) == f.field()->zero();
}

bool is_right_root(const SkewPoly& f, const FieldTower& tower, FieldElement alpha) {
    return eval_right_remainder(f, tower, alpha) == tower.top->zero();
}

SkewPoly lift_to_top(const SkewPoly& f, const FieldTower& tower) {
    std::vector<FieldElement> v;
    v.reserve(f.coeffs().size());
    for (auto c : f.coeffs()) v.push_back(tower.embed(c));
    SkewAutomorphism sig = SkewAutomorphism::make(*tower.top, f.sigma().d);
    return SkewPoly(tower.top, sig, std::move(v));
}

// ---- Ore polynomials ----

OrePoly ore_map(const SkewPoly& f) {
    OrePoly o;
    o.field = f.field();
    o.q0 = f.sigma().q0;
    o.terms = f.coeffs();
    return o;
}

OrePoly ore_compose(const OrePoly& F, const OrePoly& G) {
    if (!F.field->same_field(*G.field) || F.q0 != G.q0)
        throw ParseError("Ore polynomials over different rings");
    OrePoly o;
    o.field = F.field;
    o.q0 = F.q0;
    if (F.terms.empty() || G.terms.empty()) return o;
    const Field& fld = *F.field;
    o.terms.assign(F.terms.size() + G.terms.size() - 1, fld.zero());
    // substitution F(G): a_j (b_s Y^{q0^s})^{q0^j} = a_j b_s^{q0^j} Y^{q0^{j+s}}
    for (std::size_t j = 0; j < F.terms.size(); ++j) {
        if (F.terms[j] == fld.zero()) continue;
        std::uint64_t e = 1, ord = fld.q() - 1;
        for (std::size_t r = 0; r < j; ++r) e = (e * (F.q0 % ord)) % ord;
        for (std::size_t s = 0; s < G.terms.size(); ++s) {
            if (G.terms[s] == fld.zero()) continue;
            FieldElement tw = fld.pow(G.terms[s], static_cast<std::int64_t>(e));
            o.terms[j + s] = fld.add(o.terms[j + s], fld.mul(F.terms[j], tw));
        }
    }
    while (!o.terms.empty() && o.terms.back() == fld.zero()) o.terms.pop_back();
    return o;
}

// ---- two-sidedness ----

bool is_two_sided(const SkewPoly& f) {
    if (f.is_zero()) return true;
    std::uint32_t t = f.sigma().t;
    int low = 0;
    while (f.coeff(low) == f.field()->zero()) ++low;
    for (int i = low; i <= f.deg(); ++i) {
        if (f.coeff(i) != f.field()->zero() && (i - low) % t != 0) return false;
    }
    return true;
}

bool is_central(const SkewPoly& f) {
    if (f.is_zero()) return true;
    std::uint32_t t = f.sigma().t;
    for (int i = 0; i <= f.deg(); ++i) {
        if (f.coeff(i) == f.field()->zero()) continue;
        if (i % t != 0) return false;
        if (!f.field()->in_subfield(f.coeff(i), f.sigma().q0)) return false;
    }
    return true;
}

SkewPoly reverse_anti_map(const SkewPoly& h) {
    if (h.is_zero()) throw std::domain_error("reverse of zero polynomial");
    if (h.coeff(0) == h.field()->zero())
        throw HypothesisError("reverse requires nonzero constant term");
    const Field& F = *h.field();
    int k = h.deg();
    std::vector<FieldElement> v(k + 1, F.zero());
    for (int i = 0; i <= k; ++i)
        v[i] = h.sigma().apply_pow(F, h.coeff(k - i), i);
    return SkewPoly(h.field(), h.sigma(), std::move(v));
}

// ---- text form ----

std::string SkewPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = deg(); i >= 0; --i) {
        FieldElement c = coeff(i);
        if (c == field_->zero()) continue;
        if (!first) os << " + ";
        first = false;
        bool is_one = c == field_->one();
        if (i == 0) {
            os << field_->element_to_string(c);
        } else {
            if (!is_one) os << field_->element_to_string(c) << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

SkewPoly SkewPoly::parse(const FieldPtr& field, const SkewAutomorphism& sigma,
                         const std::string& text) {
    // terms joined by + / -; a term is  coef, coef*x^i, x^i, x
    std::string s;
    for (char c : text) {
        // tolerate unicode minus from copied sources
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s.empty()) throw ParseError("empty polynomial");
    std::vector<std::pair<std::string, bool>> terms; // text, negated
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    std::string cur;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if ((c == '+' || c == '-') && !cur.empty() && cur.back() != '^' && cur.back() != '[' &&
            cur.find('[') == std::string::npos) {
            terms.emplace_back(cur, neg);
            cur.clear();
            neg = c == '-';
        } else if ((c == '+' || c == '-') && cur.find('[') != std::string::npos &&
                   cur.find(']') != std::string::npos) {
            terms.emplace_back(cur, neg);
            cur.clear();
            neg = c == '-';
        } else {
            cur += c;
        }
    }
    if (cur.empty()) throw ParseError("trailing operator in polynomial");
    terms.emplace_back(cur, neg);

    std::vector<FieldElement> coeffs;
    auto bump = [&](std::size_t idx, FieldElement val) {
        if (coeffs.size() <= idx) coeffs.resize(idx + 1, field->zero());
        coeffs[idx] = field->add(coeffs[idx], val);
    };
    for (auto& [term, negated] : terms) {
        std::string t = term;
        FieldElement c = field->one();
        std::size_t xpos = t.find('x');
        std::size_t exp = 0;
        if (xpos == std::string::npos) {
            c = field->parse_element(t);
        } else {
            std::string cpart = t.substr(0, xpos);
            if (!cpart.empty() && cpart.back() == '*') cpart.pop_back();
            if (!cpart.empty()) c = field->parse_element(cpart);
            std::string rest = t.substr(xpos + 1);
            if (rest.empty()) {
                exp = 1;
            } else if (rest[0] == '^') {
                exp = std::stoul(rest.substr(1));
            } else {
                throw ParseError("cannot parse term: " + term);
            }
        }
        if (negated) c = field->neg(c);
        bump(exp, c);
    }
    return SkewPoly(field, sigma, std::move(coeffs));
}

} // namespace skewcode
