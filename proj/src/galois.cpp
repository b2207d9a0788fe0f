#include "skewcode/galois.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

namespace skewcode {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

namespace {

// ---- polynomials over the prime field Z_p, used only for modulus work ----

using ZpPoly = std::vector<std::uint32_t>; // coeff i of z^i, normalized

void zp_trim(ZpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int zp_deg(const ZpPoly& f) { return static_cast<int>(f.size()) - 1; }

ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    ZpPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<std::uint32_t>((c[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    zp_trim(c);
    return c;
}

// a mod f, f monic
ZpPoly zp_mod(ZpPoly a, const ZpPoly& f, std::uint64_t p) {
    zp_trim(a);
    while (zp_deg(a) >= zp_deg(f)) {
        std::uint64_t lead = a.back();
        std::size_t shift = a.size() - f.size();
        for (std::size_t i = 0; i < f.size(); ++i) {
            std::uint64_t sub = (lead * f[i]) % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        zp_trim(a);
    }
    return a;
}

ZpPoly zp_powmod_x(std::uint64_t e, const ZpPoly& f, std::uint64_t p) {
    ZpPoly result{1};
    ZpPoly base{0, 1};
    base = zp_mod(base, f, p);
    while (e > 0) {
        if (e & 1) result = zp_mod(zp_mul(result, base, p), f, p);
        base = zp_mod(zp_mul(base, base, p), f, p);
        e >>= 1;
    }
    return result;
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b, std::uint64_t p) {
    zp_trim(a);
    zp_trim(b);
    while (!b.empty()) {
        // make b monic for the reduction
        std::uint64_t lc = b.back();
        if (lc != 1) {
            // lc^{-1} mod p by Fermat
            std::uint64_t inv = 1, base = lc, e = p - 2;
            while (e > 0) {
                if (e & 1) inv = (inv * base) % p;
                base = (base * base) % p;
                e >>= 1;
            }
            for (auto& c : b) c = static_cast<std::uint32_t>((std::uint64_t(c) * inv) % p);
        }
        ZpPoly r = zp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// f monic of degree m over Z_p: irreducible iff z^{p^m} = z (mod f) and
// gcd(z^{p^{m/r}} - z, f) = 1 for every prime r | m.
bool zp_irreducible(const ZpPoly& f, std::uint64_t p) {
    int m = zp_deg(f);
    if (m < 1) return false;
    if (m == 1) return true;
    ZpPoly xm = zp_powmod_x(ipow(p, static_cast<std::uint32_t>(m)), f, p);
    ZpPoly x{0, 1};
    if (xm != zp_mod(x, f, p)) return false;
    for (std::uint64_t r : prime_factors(static_cast<std::uint64_t>(m))) {
        ZpPoly xr = zp_powmod_x(ipow(p, static_cast<std::uint32_t>(m / r)), f, p);
        // xr - x
        ZpPoly diff = xr;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = static_cast<std::uint32_t>((diff[1] + p - 1) % p);
        zp_trim(diff);
        ZpPoly g = zp_gcd(f, diff, p);
        if (zp_deg(g) != 0) return false;
    }
    return true;
}

// x has multiplicative order p^m - 1 mod f (f irreducible monic degree m).
bool zp_x_primitive(const ZpPoly& f, std::uint64_t p, std::uint64_t q) {
    for (std::uint64_t r : prime_factors(q - 1)) {
        ZpPoly e = zp_powmod_x((q - 1) / r, f, p);
        if (e == ZpPoly{1}) return false;
    }
    return true;
}

// Conway-style candidate ordering: degree-m monic polynomials ranked by the
// word ((-1)^1 a_{m-1}, (-1)^2 a_{m-2}, ..., (-1)^m a_0) with entries read
// in Z_p. Enumerate words in lexicographic order and map back.
ZpPoly conway_candidate(std::uint64_t index, std::uint32_t m, std::uint64_t p) {
    std::vector<std::uint32_t> word(m);
    for (std::uint32_t i = 0; i < m; ++i) {
        word[m - 1 - i] = static_cast<std::uint32_t>(index % p);
        index /= p;
    }
    // word[j-1] = (-1)^j a_{m-j}
    ZpPoly f(m + 1, 0);
    f[m] = 1;
    for (std::uint32_t j = 1; j <= m; ++j) {
        std::uint32_t w = word[j - 1];
        f[m - j] = (j % 2 == 1) ? static_cast<std::uint32_t>((p - w) % p) : w;
    }
    return f;
}

std::vector<std::uint32_t> find_modulus(std::uint64_t p, std::uint32_t m) {
    std::uint64_t q = ipow(p, m);
    std::uint64_t total = q; // p^m candidate words
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        ZpPoly f = conway_candidate(idx, m, p);
        if (f[0] == 0) continue; // z | f
        if (!zp_irreducible(f, p)) continue;
        if (!zp_x_primitive(f, p, q)) continue;
        return f;
    }
    throw std::logic_error("no primitive polynomial found (unreachable)");
}

// Optional override table: lines "p m c0 c1 ... cm".
std::optional<std::vector<std::uint32_t>> table_lookup(std::uint64_t p, std::uint32_t m) {
    const char* path = std::getenv("SKEWCODE_FIELD_TABLE");
    if (!path) return std::nullopt;
    std::ifstream in(path);
    if (!in) throw ParseError(std::string("cannot open field table ") + path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::uint64_t tp;
        std::uint32_t tm;
        if (!(ss >> tp >> tm)) continue;
        if (tp != p || tm != m) continue;
        std::vector<std::uint32_t> coeffs;
        std::uint32_t c;
        while (ss >> c) coeffs.push_back(c);
        if (coeffs.size() != m + 1) throw ParseError("field table entry has wrong length");
        return coeffs;
    }
    return std::nullopt;
}

} // namespace

FieldPtr Field::create(std::uint64_t p, std::uint32_t m, std::uint64_t size_budget) {
    if (!is_prime(p)) throw HypothesisError("field characteristic must be prime");
    if (m == 0) throw HypothesisError("extension degree must be positive");
    // overflow-safe budget check
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        if (q > size_budget / p) throw BudgetExceeded("field size exceeds budget");
        q *= p;
    }
    std::vector<std::uint32_t> modulus;
    if (auto t = table_lookup(p, m)) {
        modulus = *t;
    } else {
        modulus = find_modulus(p, m);
    }
    return create_with_modulus(p, m, modulus, size_budget);
}

FieldPtr Field::create_with_modulus(std::uint64_t p, std::uint32_t m,
                                    const std::vector<std::uint32_t>& modulus,
                                    std::uint64_t size_budget) {
    if (!is_prime(p)) throw HypothesisError("field characteristic must be prime");
    if (m == 0) throw HypothesisError("extension degree must be positive");
    if (modulus.size() != m + 1 || modulus[m] != 1)
        throw ParseError("modulus must be monic of degree m");
    for (auto c : modulus)
        if (c >= p) throw ParseError("modulus coefficient out of range");
    ZpPoly f(modulus.begin(), modulus.end());
    if (!zp_irreducible(f, p)) throw ParseError("modulus is not irreducible");

    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        if (q > size_budget / p) throw BudgetExceeded("field size exceeds budget");
        q *= p;
    }
    auto field = std::shared_ptr<Field>(new Field());
    field->p_ = p;
    field->m_ = m;
    field->q_ = q;
    field->modulus_ = modulus;
    field->build_tables();
    if (!zp_x_primitive(f, p, q)) throw ParseError("modulus root is not primitive");
    return field;
}

void Field::build_tables() {
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    // walk powers of z, reducing by the modulus in digit form
    std::vector<std::uint32_t> cur(m_, 0);
    cur[0] = 1;
    auto pack = [&](const std::vector<std::uint32_t>& v) {
        std::uint32_t r = 0;
        for (std::uint32_t i = m_; i-- > 0;)
            r = static_cast<std::uint32_t>(r * p_ + v[i]);
        return r;
    };
    for (std::uint64_t k = 0; k < q_ - 1; ++k) {
        std::uint32_t rep = pack(cur);
        exp_[k] = rep;
        log_[rep] = static_cast<std::uint32_t>(k);
        // cur *= z
        std::uint32_t carry = cur[m_ - 1];
        for (std::uint32_t i = m_; i-- > 1;) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (carry != 0) {
            for (std::uint32_t i = 0; i < m_; ++i) {
                std::uint64_t sub = (std::uint64_t(carry) * modulus_[i]) % p_;
                cur[i] = static_cast<std::uint32_t>((cur[i] + p_ - sub) % p_);
            }
        }
    }
    gen_ = {exp_[1 % (q_ - 1)]};
    if (q_ == 2) gen_ = {1};
    // element of log 1 is z itself (for m=1, z reduces to -modulus[0], still a generator)
    if (q_ <= 2048) {
        add_.assign(q_ * q_, 0);
        for (std::uint64_t a = 0; a < q_; ++a)
            for (std::uint64_t b = 0; b < q_; ++b) {
                std::uint64_t r = 0, mul = 1, x = a, y = b;
                for (std::uint32_t i = 0; i < m_; ++i) {
                    r += ((x % p_ + y % p_) % p_) * mul;
                    mul *= p_;
                    x /= p_;
                    y /= p_;
                }
                add_[a * q_ + b] = static_cast<std::uint32_t>(r);
            }
    }
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
    if (!add_.empty()) return {add_[std::uint64_t(a.rep) * q_ + b.rep]};
    std::uint64_t r = 0, mul = 1, x = a.rep, y = b.rep;
    for (std::uint32_t i = 0; i < m_; ++i) {
        r += ((x % p_ + y % p_) % p_) * mul;
        mul *= p_;
        x /= p_;
        y /= p_;
    }
    return {static_cast<std::uint32_t>(r)};
}

FieldElement Field::neg(FieldElement a) const {
    std::uint64_t r = 0, mul = 1, x = a.rep;
    for (std::uint32_t i = 0; i < m_; ++i) {
        r += ((p_ - x % p_) % p_) * mul;
        mul *= p_;
        x /= p_;
    }
    return {static_cast<std::uint32_t>(r)};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::mul(FieldElement a, FieldElement b) const {
    if (a.rep == 0 || b.rep == 0) return {0};
    std::uint64_t k = (std::uint64_t(log_[a.rep]) + log_[b.rep]) % (q_ - 1);
    return {exp_[k]};
}

FieldElement Field::inv(FieldElement a) const {
    if (a.rep == 0) throw std::domain_error("inverse of zero");
    std::uint64_t k = (q_ - 1 - log_[a.rep]) % (q_ - 1);
    return {exp_[k]};
}

FieldElement Field::div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

FieldElement Field::pow(FieldElement a, std::int64_t e) const {
    if (a.rep == 0) {
        if (e < 0) throw std::domain_error("inverse of zero");
        return e == 0 ? one() : zero();
    }
    std::int64_t ord = static_cast<std::int64_t>(q_ - 1);
    std::int64_t k = (static_cast<std::int64_t>(log_[a.rep]) * (e % ord)) % ord;
    if (k < 0) k += ord;
    return {exp_[k]};
}

FieldElement Field::from_int(std::uint64_t k) const {
    return {static_cast<std::uint32_t>(k % p_)};
}

FieldElement Field::from_coeffs(const std::vector<std::uint32_t>& coeffs) const {
    if (coeffs.size() > m_) throw ParseError("too many coefficients for this field");
    std::uint64_t r = 0, mul = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        std::uint64_t c = i < coeffs.size() ? coeffs[i] : 0;
        if (c >= p_) throw ParseError("coefficient out of range");
        r += c * mul;
        mul *= p_;
    }
    return {static_cast<std::uint32_t>(r)};
}

std::vector<std::uint32_t> Field::coeffs(FieldElement a) const {
    std::vector<std::uint32_t> out(m_);
    std::uint64_t x = a.rep;
    for (std::uint32_t i = 0; i < m_; ++i) {
        out[i] = static_cast<std::uint32_t>(x % p_);
        x /= p_;
    }
    return out;
}

std::optional<std::uint64_t> Field::dlog(FieldElement a) const {
    if (a.rep == 0) return std::nullopt;
    return log_[a.rep];
}

FieldElement Field::frobenius(FieldElement a, std::uint32_t d) const {
    if (a.rep == 0) return a;
    std::uint64_t e = 1;
    for (std::uint32_t i = 0; i < d % m_; ++i) e = (e * p_) % (q_ - 1);
    std::uint64_t k = (log_[a.rep] * e) % (q_ - 1);
    return {exp_[k]};
}

bool Field::in_subfield(FieldElement a, std::uint64_t subq) const {
    if (a.rep == 0) return true;
    std::uint64_t k = (log_[a.rep] * (subq % (q_ - 1))) % (q_ - 1);
    return exp_[k] == a.rep;
}

bool Field::same_field(const Field& other) const {
    return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
}

// ---- element text form: "0", digits, "a^k", "a", "[c0,c1,...]" ----

FieldElement Field::parse_element(const std::string& text) const {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty element");
    if (s[0] == '[') {
        if (s.back() != ']') throw ParseError("unterminated coefficient list");
        std::vector<std::uint32_t> cs;
        std::string body = s.substr(1, s.size() - 2);
        std::istringstream ss(body);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) throw ParseError("empty coefficient");
            cs.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
        }
        return from_coeffs(cs);
    }
    if (s == "a") return generator();
    if (s.rfind("a^", 0) == 0) {
        std::uint64_t k = std::stoull(s.substr(2));
        return exp_of(k);
    }
    bool digits = std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (digits) return from_int(std::stoull(s));
    throw ParseError("cannot parse field element: " + text);
}

std::string Field::element_to_string(FieldElement a) const {
    if (a.rep == 0) return "0";
    if (a.rep < p_) return std::to_string(a.rep);
    return "a^" + std::to_string(*dlog(a));
}

// ---- automorphism ----

SkewAutomorphism SkewAutomorphism::make(const Field& field, std::uint32_t d) {
    if (d == 0 || d > field.m() || field.m() % d != 0)
        throw HypothesisError("sigma exponent d must divide m");
    SkewAutomorphism s;
    s.d = d;
    s.t = field.m() / d;
    s.q0 = 1;
    for (std::uint32_t i = 0; i < d; ++i) s.q0 *= field.p();
    return s;
}

FieldElement SkewAutomorphism::apply_pow(const Field& field, FieldElement a, std::uint64_t i) const {
    std::uint64_t steps = (std::uint64_t(d) * i) % field.m();
    return field.frobenius(a, static_cast<std::uint32_t>(steps));
}

// ---- towers ----

FieldElement FieldTower::embed(FieldElement a) const {
    if (base->same_field(*top)) return a;
    if (a.rep == 0) return a;
    std::uint64_t k = *base->dlog(a);
    return top->pow(embed_image, static_cast<std::int64_t>(k));
}

FieldTower identity_tower(const FieldPtr& base) {
    FieldTower t;
    t.base = base;
    t.top = base;
    t.s = 1;
    t.embed_image = base->generator();
    return t;
}

namespace {

// Root of the base modulus in the top field, smallest discrete log.
FieldElement embedding_image(const Field& base, const Field& top) {
    std::uint64_t order = base.q() - 1;
    std::uint64_t big = top.q() - 1;
    if (big % order != 0) throw HypothesisError("no subfield embedding exists");
    // candidates have order dividing q-1: exponents multiple of big/order
    std::uint64_t step = big / order;
    for (std::uint64_t k = step; k < big; k += step) {
        FieldElement beta = top.exp_of(k);
        // evaluate base modulus at beta (integer coefficients lift to top)
        FieldElement acc = top.zero();
        const auto& mod = base.modulus();
        for (std::size_t i = mod.size(); i-- > 0;) {
            acc = top.mul(acc, beta);
            acc = top.add(acc, top.from_int(mod[i]));
        }
        if (acc == top.zero()) return beta;
    }
    throw std::logic_error("modulus has no root in extension (unreachable)");
}

} // namespace

FieldTower smallest_splitting_extension(const FieldPtr& base, const SkewAutomorphism& sigma,
                                        std::uint32_t n, std::uint64_t size_budget) {
    if (n == 0) throw HypothesisError("length must be positive");
    if (std::gcd(static_cast<std::uint64_t>(n), base->q()) != 1)
        throw HypothesisError("requires gcd(n, q) = 1");
    std::uint64_t dn = std::uint64_t(sigma.d) * n;
    std::uint64_t g = std::gcd(dn, std::uint64_t(base->m()));
    std::uint32_t s = static_cast<std::uint32_t>(dn / g);
    FieldTower tower;
    tower.base = base;
    tower.s = s;
    if (s == 1) {
        tower.top = base;
        tower.embed_image = base->generator();
        return tower;
    }
    tower.top = Field::create(base->p(), base->m() * s, size_budget);
    tower.embed_image = embedding_image(*base, *tower.top);
    return tower;
}

FieldTower field_extension(const FieldPtr& base, std::uint32_t s, std::uint64_t size_budget) {
    if (s == 0) throw HypothesisError("extension degree must be positive");
    FieldTower tower;
    tower.base = base;
    tower.s = s;
    if (s == 1) {
        tower.top = base;
        tower.embed_image = base->generator();
        return tower;
    }
    tower.top = Field::create(base->p(), base->m() * s, size_budget);
    tower.embed_image = embedding_image(*base, *tower.top);
    return tower;
}

// ---- field spec text ----

FieldPtr parse_field_spec(const std::string& text, std::uint64_t size_budget) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.rfind("GF(", 0) != 0 || s.back() != ')')
        throw ParseError("field spec must look like GF(p^m): " + text);
    std::string body = s.substr(3, s.size() - 4);
    std::uint64_t p;
    std::uint32_t m = 1;
    auto caret = body.find('^');
    if (caret == std::string::npos) {
        std::uint64_t q = std::stoull(body);
        // split q into p^m
        if (q < 2) throw ParseError("field size must be at least 2");
        auto fs = prime_factors(q);
        if (fs.size() != 1) throw ParseError("field size must be a prime power");
        p = fs[0];
        std::uint64_t r = q;
        m = 0;
        while (r > 1) {
            r /= p;
            ++m;
        }
        std::uint64_t check = 1;
        for (std::uint32_t i = 0; i < m; ++i) check *= p;
        if (check != q) throw ParseError("field size must be a prime power");
    } else {
        p = std::stoull(body.substr(0, caret));
        m = static_cast<std::uint32_t>(std::stoul(body.substr(caret + 1)));
    }
    return Field::create(p, m, size_budget);
}

std::string field_spec_string(const Field& field) {
    if (field.m() == 1) return "GF(" + std::to_string(field.p()) + ")";
    return "GF(" + std::to_string(field.p()) + "^" + std::to_string(field.m()) + ")";
}

} // namespace skewcode
