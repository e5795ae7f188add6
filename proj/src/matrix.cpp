#include "otkit/matrix.hpp"

#include <optional>
#include <utility>

#include "otkit/errors.hpp"

namespace otk {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<QVector>& rows) {
    if (rows.empty()) return {};
    RationalMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        assert(rows[i].size() == m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

QVector RationalMatrix::row(std::size_t i) const {
    QVector out(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out[j] = at(i, j);
    return out;
}

QVector RationalMatrix::col(std::size_t j) const {
    QVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, j);
    return out;
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RationalMatrix RationalMatrix::columns_subset(
    const std::vector<std::size_t>& cols) const {
    RationalMatrix s(rows_, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        assert(cols[j] < cols_);
        for (std::size_t i = 0; i < rows_; ++i) s.at(i, j) = at(i, cols[j]);
    }
    return s;
}

QVector RationalMatrix::apply(const QVector& v) const {
    assert(v.size() == cols_);
    QVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational acc = 0;
        for (std::size_t j = 0; j < cols_; ++j)
            if (sgn(at(i, j)) != 0 && sgn(v[j]) != 0) acc += at(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

void RationalMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap(entries_[a * cols_ + j], entries_[b * cols_ + j]);
}

RrefResult rref(RationalMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (sgn(m.at(i, c)) != 0) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        m.swap_rows(r, piv);
        const Rational inv = Rational(1) / m.at(r, c);
        for (std::size_t j = c; j < cols; ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(m.at(i, c)) == 0) continue;
            const Rational factor = m.at(i, c);
            for (std::size_t j = c; j < cols; ++j)
                m.at(i, j) -= factor * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return RrefResult{std::move(m), std::move(pivots), r};
}

std::size_t rank_of(const RationalMatrix& m) { return rref(m).rank; }

SubspaceBasis SubspaceBasis::from_vectors(std::size_t ambient_dim,
                                          const std::vector<QVector>& vectors) {
    for (const auto& v : vectors) assert(v.size() == ambient_dim);
    RrefResult r = rref(RationalMatrix::from_rows(vectors));
    RationalMatrix rows(r.rank, ambient_dim);
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t j = 0; j < ambient_dim; ++j)
            rows.at(i, j) = r.matrix.at(i, j);
    return SubspaceBasis(ambient_dim, std::move(rows));
}

bool SubspaceBasis::contains(const QVector& v) const {
    if (v.size() != ambient_)
        throw InvalidParameterError("vector length does not match ambient dimension");
    QVector residual = v;
    // Rows are in RREF: eliminating each pivot coordinate leaves zero exactly
    // for span members.
    for (std::size_t i = 0; i < vectors_.rows(); ++i) {
        std::size_t p = 0;
        while (p < ambient_ && sgn(vectors_.at(i, p)) == 0) ++p;
        assert(p < ambient_);
        if (sgn(residual[p]) == 0) continue;
        const Rational factor = residual[p];
        for (std::size_t j = 0; j < ambient_; ++j)
            residual[j] -= factor * vectors_.at(i, j);
    }
    return is_zero_vector(residual);
}

SubspaceBasis kernel_basis(const RationalMatrix& m) {
    const std::size_t cols = m.cols();
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    std::vector<QVector> vectors;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        QVector v(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            v[r.pivots[i]] = -r.matrix.at(i, f);
        vectors.push_back(std::move(v));
    }
    return SubspaceBasis::from_vectors(cols, vectors);
}

std::optional<QVector> solve_columns(const RationalMatrix& m, const QVector& target) {
    assert(target.size() == m.rows());
    RationalMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = target[i];
    }
    RrefResult r = rref(std::move(aug));
    QVector solution(m.cols());
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        if (r.pivots[i] == m.cols()) return std::nullopt;  // inconsistent
        solution[r.pivots[i]] = r.matrix.at(i, m.cols());
    }
    return solution;
}

}  // namespace otk
