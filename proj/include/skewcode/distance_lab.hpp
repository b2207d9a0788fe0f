#ifndef SKEWCODE_DISTANCE_LAB_HPP
#define SKEWCODE_DISTANCE_LAB_HPP

#include <cstdint>
#include <vector>

#include "skewcode/galois.hpp"

namespace skewcode {

enum class MatrixRole { plain, generator, parity, dual_generator };

/// Dense matrix over a Field, row-major. All arithmetic exact.
struct Matrix {
    FieldPtr field;
    std::size_t rows = 0, cols = 0;
    std::vector<FieldElement> a;
    MatrixRole role = MatrixRole::plain;

    Matrix() = default;
    Matrix(FieldPtr f, std::size_t r, std::size_t c, MatrixRole ro = MatrixRole::plain)
        : field(std::move(f)), rows(r), cols(c), a(r * c, FieldElement{0}), role(ro) {}

    FieldElement& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    FieldElement at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);
Matrix transpose(const Matrix& m);
Matrix mat_mul(const Matrix& a, const Matrix& b);
bool is_zero_matrix(const Matrix& m);
/// Basis of the right nullspace {x : m x^T = 0}, rows = basis vectors.
Matrix nullspace(const Matrix& m);
/// Equality of row spaces via reduced row-echelon forms.
bool row_space_equal(const Matrix& a, const Matrix& b);
/// True iff v lies in the row space of m.
bool in_row_space(const Matrix& m, const std::vector<FieldElement>& v);

struct DistanceReport {
    std::size_t k = 0;
    std::size_t distance = 0; // 0 means the zero code
    std::vector<std::uint64_t> weight_distribution; // counts per weight 0..n
    std::uint64_t enumerated = 0;
    bool truncated = false;
};

/// Brute-force oracle: enumerate all q^k messages of the full-rank generator
/// matrix, recording the full weight distribution. If q^k exceeds `budget`
/// the report is truncated (distance from the enumerated prefix only).
DistanceReport exact_min_distance(const Matrix& gen, std::uint64_t budget = 10000000,
                                  bool distance_only = false);

/// Exact minimum distance by support enumeration: smallest w such that some
/// w columns can carry a nonzero codeword. Cost 2^cols rank computations;
/// independent of q^k, used where message enumeration is infeasible.
std::size_t min_distance_by_rank(const Matrix& gen);

} // namespace skewcode

#endif
