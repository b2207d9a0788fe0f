#include "skewcode/distance_lab.hpp"

#include <algorithm>

namespace skewcode {

namespace {

void require_same(const Matrix& a, const Matrix& b) {
    if (!a.field || !b.field || !a.field->same_field(*b.field))
        throw ParseError("matrices over different fields");
}

std::vector<std::size_t> pivot_columns(const Matrix& r) {
    std::vector<std::size_t> piv;
    const Field& F = *r.field;
    for (std::size_t i = 0; i < r.rows; ++i) {
        std::size_t c = 0;
        while (c < r.cols && r.at(i, c) == F.zero()) ++c;
        if (c < r.cols) piv.push_back(c);
    }
    return piv;
}

} // namespace

Matrix rref(const Matrix& m) {
    Matrix r = m;
    const Field& F = *r.field;
    std::size_t lead = 0;
    for (std::size_t row = 0; row < r.rows && lead < r.cols; ++row) {
        std::size_t i = row;
        while (i < r.rows && r.at(i, lead) == F.zero()) ++i;
        if (i == r.rows) {
            ++lead;
            --row;
            continue;
        }
        if (i != row)
            for (std::size_t c = 0; c < r.cols; ++c) std::swap(r.at(i, c), r.at(row, c));
        FieldElement inv = F.inv(r.at(row, lead));
        for (std::size_t c = 0; c < r.cols; ++c) r.at(row, c) = F.mul(inv, r.at(row, c));
        for (std::size_t j = 0; j < r.rows; ++j) {
            if (j == row) continue;
            FieldElement f = r.at(j, lead);
            if (f == F.zero()) continue;
            for (std::size_t c = 0; c < r.cols; ++c)
                r.at(j, c) = F.sub(r.at(j, c), F.mul(f, r.at(row, c)));
        }
        ++lead;
    }
    // move zero rows to the bottom (they are already below by construction)
    return r;
}

std::size_t rank(const Matrix& m) {
    Matrix r = rref(m);
    return pivot_columns(r).size();
}

Matrix transpose(const Matrix& m) {
    Matrix t(m.field, m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    require_same(a, b);
    if (a.cols != b.rows) throw ParseError("matrix dimension mismatch");
    const Field& F = *a.field;
    Matrix c(a.field, a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            FieldElement v = a.at(i, k);
            if (v == F.zero()) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                c.at(i, j) = F.add(c.at(i, j), F.mul(v, b.at(k, j)));
        }
    return c;
}

bool is_zero_matrix(const Matrix& m) {
    const Field& F = *m.field;
    return std::all_of(m.a.begin(), m.a.end(), [&](FieldElement e) { return e == F.zero(); });
}

Matrix nullspace(const Matrix& m) {
    const Field& F = *m.field;
    Matrix r = rref(m);
    auto piv = pivot_columns(r);
    std::vector<bool> is_piv(m.cols, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols; ++c)
        if (!is_piv[c]) free_cols.push_back(c);
    Matrix basis(m.field, free_cols.size(), m.cols);
    for (std::size_t b = 0; b < free_cols.size(); ++b) {
        std::size_t fc = free_cols[b];
        basis.at(b, fc) = F.one();
        for (std::size_t i = 0; i < piv.size(); ++i)
            basis.at(b, piv[i]) = F.neg(r.at(i, fc));
    }
    return basis;
}

bool row_space_equal(const Matrix& a, const Matrix& b) {
    require_same(a, b);
    if (a.cols != b.cols) throw ParseError("matrix column mismatch");
    Matrix ra = rref(a), rb = rref(b);
    auto pa = pivot_columns(ra), pb = pivot_columns(rb);
    if (pa.size() != pb.size()) return false;
    for (std::size_t i = 0; i < pa.size(); ++i)
        for (std::size_t c = 0; c < a.cols; ++c)
            if (ra.at(i, c) != rb.at(i, c)) return false;
    return true;
}

bool in_row_space(const Matrix& m, const std::vector<FieldElement>& v) {
    if (v.size() != m.cols) throw ParseError("vector length mismatch");
    Matrix aug(m.field, m.rows + 1, m.cols);
    aug.a.assign(m.a.begin(), m.a.end());
    aug.a.insert(aug.a.end(), v.begin(), v.end());
    return rank(aug) == rank(m);
}

DistanceReport exact_min_distance(const Matrix& gen, std::uint64_t budget, bool distance_only) {
    const Field& F = *gen.field;
    std::size_t k = gen.rows, n = gen.cols;
    DistanceReport rep;
    rep.k = k;
    if (!distance_only) rep.weight_distribution.assign(n + 1, 0);
    if (k == 0) {
        rep.distance = 0;
        if (!distance_only) rep.weight_distribution[0] = 1;
        rep.enumerated = 1;
        return rep;
    }
    std::uint64_t total = 1;
    bool overflow = false;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > budget / F.q() + 1) {
            overflow = true;
            break;
        }
        total *= F.q();
    }
    rep.truncated = overflow || total > budget;

    // scaled rows: scaled[i][v] = v * row_i, laid out flat
    std::vector<FieldElement> scaled(k * F.q() * n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::uint64_t v = 0; v < F.q(); ++v)
            for (std::size_t c = 0; c < n; ++c)
                scaled[(i * F.q() + v) * n + c] =
                    F.mul(FieldElement{static_cast<std::uint32_t>(v)}, gen.at(i, c));

    // DFS over message digits with partial sums per level
    std::vector<FieldElement> partial((k + 1) * n, F.zero());
    std::size_t best = n + 1;
    std::uint64_t visited = 0;
    std::uint64_t limit = rep.truncated ? budget : total;

    std::vector<std::uint64_t> digit(k, 0);
    // iterative odometer with incremental prefix sums
    std::size_t level = 0;
    while (true) {
        if (level == k) {
            // leaf: weight of partial[k]
            std::size_t w = 0;
            const FieldElement* row = &partial[k * n];
            for (std::size_t c = 0; c < n; ++c)
                if (row[c] != F.zero()) ++w;
            if (!distance_only) ++rep.weight_distribution[w];
            if (w != 0 && w < best) best = w;
            ++visited;
            if (visited >= limit) break;
            // advance odometer; refill prefix sums from the changed digit
            std::size_t i = k;
            while (i > 0 && digit[i - 1] + 1 == F.q()) {
                digit[i - 1] = 0;
                --i;
            }
            if (i == 0) break;
            ++digit[i - 1];
            level = i - 1;
        }
        // fill partial sums down to the leaf
        for (; level < k; ++level) {
            const FieldElement* src = &partial[level * n];
            FieldElement* dst = &partial[(level + 1) * n];
            const FieldElement* add = &scaled[(level * F.q() + digit[level]) * n];
            for (std::size_t c = 0; c < n; ++c) dst[c] = F.add(src[c], add[c]);
        }
    }
    rep.enumerated = visited;
    rep.distance = best <= n ? best : 0;
    return rep;
}

std::size_t min_distance_by_rank(const Matrix& gen) {
    std::size_t k = rank(gen), n = gen.cols;
    if (k == 0) return 0;
    // smallest w for which deleting the complementary columns drops the rank
    for (std::size_t w = 1; w <= n; ++w) {
        std::vector<std::size_t> comb(w);
        for (std::size_t i = 0; i < w; ++i) comb[i] = i;
        bool more = true;
        while (more) {
            std::vector<bool> in_supp(n, false);
            for (auto c : comb) in_supp[c] = true;
            Matrix sub(gen.field, gen.rows, n - w);
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (in_supp[c]) continue;
                for (std::size_t r = 0; r < gen.rows; ++r) sub.at(r, cc) = gen.at(r, c);
                ++cc;
            }
            if (rank(sub) < k) return w;
            // next combination in lexicographic order
            more = false;
            for (std::size_t i = w; i-- > 0;) {
                if (comb[i] < n - w + i) {
                    ++comb[i];
                    for (std::size_t j = i + 1; j < w; ++j) comb[j] = comb[j - 1] + 1;
                    more = true;
                    break;
                }
            }
        }
    }
    return 0; // unreachable for k >= 1
}

} // namespace skewcode
