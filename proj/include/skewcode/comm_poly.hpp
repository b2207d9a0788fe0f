#ifndef SKEWCODE_COMM_POLY_HPP
#define SKEWCODE_COMM_POLY_HPP

#include <vector>

#include "skewcode/galois.hpp"

namespace skewcode {

/// Ordinary commutative polynomial over a Field, as a normalized coefficient
/// vector. Only what the t.s.m machinery needs.
struct CommPoly {
    FieldPtr field;
    std::vector<FieldElement> c;

    CommPoly() = default;
    CommPoly(FieldPtr f, std::vector<FieldElement> coeffs);

    static CommPoly zero(FieldPtr f) { return CommPoly(std::move(f), {}); }
    static CommPoly one(FieldPtr f);
    static CommPoly yn_minus_one(FieldPtr f, std::uint32_t n);

    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    FieldElement coeff(std::size_t i) const { return i < c.size() ? c[i] : FieldElement{0}; }
    CommPoly monic() const;

    CommPoly operator+(const CommPoly& o) const;
    CommPoly operator-(const CommPoly& o) const;
    CommPoly operator*(const CommPoly& o) const;
    friend bool operator==(const CommPoly& a, const CommPoly& b) { return a.c == b.c; }
    friend bool operator!=(const CommPoly& a, const CommPoly& b) { return !(a == b); }
    /// Ordering used to report factors deterministically: (degree, coeff reps).
    friend bool operator<(const CommPoly& a, const CommPoly& b);

    FieldElement eval(FieldElement x) const;
};

/// Euclidean division, f = q*g + r.
std::pair<CommPoly, CommPoly> comm_divmod(const CommPoly& f, const CommPoly& g);

/// Deterministic factorization of a monic polynomial into monic irreducibles
/// (with multiplicity), sorted by (degree, lexicographic coefficients).
/// Root scan first, then trial division by increasing degree; throws
/// BudgetExceeded if a degree level would need more than `candidate_budget`
/// trial divisors.
std::vector<CommPoly> comm_factor(const CommPoly& f, std::uint64_t candidate_budget = 10000000);

} // namespace skewcode

#endif
