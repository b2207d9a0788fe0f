#ifndef SKEWCODE_SKEW_POLY_HPP
#define SKEWCODE_SKEW_POLY_HPP

#include <string>
#include <tuple>
#include <vector>

#include "skewcode/galois.hpp"

namespace skewcode {

/// Element of R = F_q[x; sigma], multiplication rule (a x^i)(b x^j) =
/// a sigma^i(b) x^{i+j}. Coefficients are normalized (no zero leading
/// coefficient); the zero polynomial has an empty coefficient vector and
/// degree -1.
class SkewPoly {
  public:
    SkewPoly() = default;
    SkewPoly(FieldPtr field, SkewAutomorphism sigma, std::vector<FieldElement> coeffs);

    static SkewPoly zero(FieldPtr field, SkewAutomorphism sigma);
    static SkewPoly one(FieldPtr field, SkewAutomorphism sigma);
    static SkewPoly constant(FieldPtr field, SkewAutomorphism sigma, FieldElement c);
    /// c * x^i
    static SkewPoly monomial(FieldPtr field, SkewAutomorphism sigma, FieldElement c, std::uint32_t i);
    /// x^n - 1
    static SkewPoly xn_minus_one(FieldPtr field, SkewAutomorphism sigma, std::uint32_t n);

    const FieldPtr& field() const { return field_; }
    const SkewAutomorphism& sigma() const { return sigma_; }
    const std::vector<FieldElement>& coeffs() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    FieldElement coeff(std::size_t i) const { return i < c_.size() ? c_[i] : FieldElement{0}; }
    FieldElement leading() const;
    bool is_monic() const;
    SkewPoly monic() const;

    SkewPoly operator+(const SkewPoly& other) const;
    SkewPoly operator-(const SkewPoly& other) const;
    SkewPoly operator-() const;
    SkewPoly operator*(const SkewPoly& other) const; // skew product
    SkewPoly scaled_left(FieldElement c) const;      // c * f

    friend bool operator==(const SkewPoly& a, const SkewPoly& b);
    friend bool operator!=(const SkewPoly& a, const SkewPoly& b) { return !(a == b); }

    std::string to_string() const;
    static SkewPoly parse(const FieldPtr& field, const SkewAutomorphism& sigma,
                          const std::string& text);

  private:
    void trim();
    FieldPtr field_;
    SkewAutomorphism sigma_;
    std::vector<FieldElement> c_;
};

enum class DivisionSide { right, left };

/// f = quotient * g + remainder  (right)  or  f = g * quotient + remainder (left),
/// with deg(remainder) < deg(g).
struct DivisionResult {
    SkewPoly quotient;
    SkewPoly remainder;
    DivisionSide side = DivisionSide::right;
};

DivisionResult right_divide(const SkewPoly& f, const SkewPoly& g);
DivisionResult left_divide(const SkewPoly& f, const SkewPoly& g);

/// "g right-divides f" := f = q*g with zero remainder.
bool right_divides(const SkewPoly& g, const SkewPoly& f);

/// Monic greatest common right divisor: generator of Rf + Rg, with Bezout
/// identity u*f + v*g = d from extended_gcrd.
SkewPoly gcrd(const SkewPoly& f, const SkewPoly& g);
std::tuple<SkewPoly, SkewPoly, SkewPoly> extended_gcrd(const SkewPoly& f, const SkewPoly& g);

/// Monic greatest common left divisor: generator of fR + gR, with Bezout
/// identity f*u + g*v = d from extended_gcld.
SkewPoly gcld(const SkewPoly& f, const SkewPoly& g);
std::tuple<SkewPoly, SkewPoly, SkewPoly> extended_gcld(const SkewPoly& f, const SkewPoly& g);

/// Least common left multiple: the monic e of minimal degree with e = u*f = v*g
/// (f and g right-divide e). deg lclm + deg gcrd = deg f + deg g.
SkewPoly lclm(const SkewPoly& f, const SkewPoly& g);
/// Least common right multiple: minimal monic e = f*u = g*v (f and g left-divide e).
SkewPoly lcrm(const SkewPoly& f, const SkewPoly& g);

/// N_{sigma,i}(alpha) = sigma^{i-1}(alpha) ... sigma(alpha) alpha, N_{sigma,0} = 1.
FieldElement norm(const Field& field, const SkewAutomorphism& sigma, FieldElement alpha,
                  std::uint64_t i);
/// Closed form alpha^{(q0^i - 1)/(q0 - 1)} (exponent reduced mod q-1).
FieldElement norm_closed(const Field& field, const SkewAutomorphism& sigma, FieldElement alpha,
                         std::uint64_t i);

/// Remainder of right division of f by (x - alpha): sum_i a_i N_{sigma,i}(alpha).
FieldElement eval_right_remainder(const SkewPoly& f, FieldElement alpha);
/// Same, with f's coefficients embedded into the tower top field and alpha in the top field.
FieldElement eval_right_remainder(const SkewPoly& f, const FieldTower& tower, FieldElement alpha);
bool is_right_root(const SkewPoly& f, FieldElement alpha);
bool is_right_root(const SkewPoly& f, const FieldTower& tower, FieldElement alpha);

/// Lift f coefficientwise through the tower embedding (same sigma exponent).
SkewPoly lift_to_top(const SkewPoly& f, const FieldTower& tower);

/// a_0 Y + a_1 Y^{q0} + ... + a_n Y^{q0^n} under composition.
struct OrePoly {
    FieldPtr field;
    std::uint64_t q0 = 0;
    std::vector<FieldElement> terms; // index i is the coefficient of Y^{q0^i}

    friend bool operator==(const OrePoly& a, const OrePoly& b) {
        return a.q0 == b.q0 && a.terms == b.terms;
    }
};

OrePoly ore_map(const SkewPoly& f);
OrePoly ore_compose(const OrePoly& F, const OrePoly& G);

/// Two-sided shape: nonzero coefficients only at degrees e + k*t for the
/// lowest nonzero degree e. Zero counts as two-sided.
bool is_two_sided(const SkewPoly& f);
/// Coefficients in F_{q0} and only degrees divisible by t.
bool is_central(const SkewPoly& f);

/// h~ with coefficient sigma^i(h_{k-i}) at x^i, k = deg h. Requires h_0 != 0.
SkewPoly reverse_anti_map(const SkewPoly& h);

} // namespace skewcode

#endif
