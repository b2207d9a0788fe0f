#ifndef SKEWCODE_GALOIS_HPP
#define SKEWCODE_GALOIS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skewcode/errors.hpp"

namespace skewcode {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// An element of GF(p^m). `rep` packs the power-basis coefficient vector
/// (c_0, ..., c_{m-1}) over GF(p) as the base-p integer sum c_i p^i, so
/// reps range over [0, q).
struct FieldElement {
    std::uint32_t rep = 0;
    friend bool operator==(FieldElement a, FieldElement b) { return a.rep == b.rep; }
    friend bool operator!=(FieldElement a, FieldElement b) { return a.rep != b.rep; }
    friend bool operator<(FieldElement a, FieldElement b) { return a.rep < b.rep; }
};

/// Exact arithmetic in GF(p^m) = GF(p)[z]/(modulus). Multiplication goes
/// through discrete log/exp tables built at construction; addition is
/// digitwise mod p (table-backed for small fields). Immutable once built.
class Field {
  public:
    /// Deterministic modulus: the shipped table (or SKEWCODE_FIELD_TABLE
    /// override) when it has an entry, otherwise the smallest monic
    /// primitive polynomial in the Conway-style coefficient ordering.
    static FieldPtr create(std::uint64_t p, std::uint32_t m,
                           std::uint64_t size_budget = default_size_budget());
    static FieldPtr create_with_modulus(std::uint64_t p, std::uint32_t m,
                                        const std::vector<std::uint32_t>& modulus,
                                        std::uint64_t size_budget = default_size_budget());

    static constexpr std::uint64_t default_size_budget() { return 1ull << 24; }

    std::uint64_t p() const { return p_; }
    std::uint32_t m() const { return m_; }
    std::uint64_t q() const { return q_; }
    /// Monic degree-m modulus, coefficients c_0 .. c_m over GF(p).
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    FieldElement zero() const { return {0}; }
    FieldElement one() const { return {1}; }
    /// The class of z: a verified primitive element.
    FieldElement generator() const { return gen_; }

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement inv(FieldElement a) const;
    FieldElement div(FieldElement a, FieldElement b) const;
    FieldElement pow(FieldElement a, std::int64_t e) const;

    /// k * 1 (image of the integer k).
    FieldElement from_int(std::uint64_t k) const;
    FieldElement from_coeffs(const std::vector<std::uint32_t>& coeffs) const;
    std::vector<std::uint32_t> coeffs(FieldElement a) const;

    /// generator()^k.
    FieldElement exp_of(std::uint64_t k) const { return {exp_[k % (q_ - 1)]}; }
    /// Discrete log to base generator(); nullopt for 0.
    std::optional<std::uint64_t> dlog(FieldElement a) const;

    /// theta^d applied to a, theta(a) = a^p.
    FieldElement frobenius(FieldElement a, std::uint32_t d) const;
    /// True iff a lies in the subfield of size subq (a^subq == a).
    bool in_subfield(FieldElement a, std::uint64_t subq) const;

    /// True iff a == k*1 for some integer k (prime subfield membership).
    bool is_prime_fieldid(FieldElement a) const { return a.rep < p_; }

    std::uint64_t element_count() const { return q_; }

    FieldElement parse_element(const std::string& text) const;
    std::string element_to_string(FieldElement a) const;

    bool same_field(const Field& other) const;

  private:
    Field() = default;
    void build_tables();

    std::uint64_t p_ = 0, q_ = 0;
    std::uint32_t m_ = 0;
    std::vector<std::uint32_t> modulus_;
    FieldElement gen_;
    std::vector<std::uint32_t> exp_; // size q-1
    std::vector<std::uint32_t> log_; // size q; log_[0] unused
    std::vector<std::uint32_t> add_; // q*q when q small, else empty
};

/// sigma = theta^d on GF(p^m), with d | m. Identity is d = m.
struct SkewAutomorphism {
    std::uint32_t d = 1; // Frobenius exponent
    std::uint32_t t = 1; // order of sigma
    std::uint64_t q0 = 0; // size of fixed subfield, p^d

    static SkewAutomorphism make(const Field& field, std::uint32_t d);

    FieldElement apply(const Field& field, FieldElement a) const {
        return field.frobenius(a, d);
    }
    FieldElement apply_pow(const Field& field, FieldElement a, std::uint64_t i) const;
    bool is_identity(const Field& field) const { return q0 == field.q(); }
};

/// F_q embedded in F_{q^s}, with the embedding determined by mapping the
/// base primitive element to the base-modulus root of smallest discrete log.
struct FieldTower {
    FieldPtr base;
    FieldPtr top;
    std::uint32_t s = 1;
    FieldElement embed_image; // image of base generator in top

    FieldElement embed(FieldElement a) const;
};

/// The smallest extension F_{q^s} of F_q containing F_{q0^n}, i.e. the
/// minimal s with d*n | m*s. Requires gcd(n, q) = 1.
FieldTower smallest_splitting_extension(const FieldPtr& base, const SkewAutomorphism& sigma,
                                        std::uint32_t n,
                                        std::uint64_t size_budget = Field::default_size_budget());

/// Trivial tower F_q inside itself.
FieldTower identity_tower(const FieldPtr& base);

/// F_q inside F_{q^s} for a given degree s.
FieldTower field_extension(const FieldPtr& base, std::uint32_t s,
                           std::uint64_t size_budget = Field::default_size_budget());

/// "GF(p^m)" or "GF(q)" with q a prime power.
FieldPtr parse_field_spec(const std::string& text,
                          std::uint64_t size_budget = Field::default_size_budget());
std::string field_spec_string(const Field& field);

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

} // namespace skewcode

#endif
