#include <homcalc/errors.hpp>
#include <homcalc/qmatrix.hpp>

#include <algorithm>
#include <utility>

namespace homcalc
{

QVector zero_vector(std::size_t n)
{
    return QVector(n, Rational(0));
}

QVector unit_vector(std::size_t n, std::size_t i)
{
    QVector v = zero_vector(n);
    v.at(i) = Rational(1);
    return v;
}

bool is_zero(const QVector &v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational &q) { return q.is_zero(); });
}

QVector add(const QVector &a, const QVector &b)
{
    if (a.size() != b.size()) {
        throw StructureError("vector add: size mismatch");
    }
    QVector out = a;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] += b[i];
    }
    return out;
}

QVector scale(const Rational &s, const QVector &v)
{
    QVector out = v;
    for (auto &q : out) {
        q *= s;
    }
    return out;
}

void axpy(QVector &a, const Rational &s, const QVector &b)
{
    if (a.size() != b.size()) {
        throw StructureError("axpy: size mismatch");
    }
    if (s.is_zero()) {
        return;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!b[i].is_zero()) {
            a[i] += s * b[i];
        }
    }
}

std::string to_string(const QVector &v)
{
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? ", " : "") + v[i].to_string();
    }
    return out + "]";
}

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : m_rows(rows), m_cols(cols), m_data(rows * cols, Rational(0))
{
}

QMatrix QMatrix::identity(std::size_t n)
{
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = Rational(1);
    }
    return m;
}

QMatrix QMatrix::diagonal(const QVector &entries)
{
    QMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        m(i, i) = entries[i];
    }
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector> &rows)
{
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    QMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) {
            throw StructureError("QMatrix::from_rows: ragged rows");
        }
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

QVector QMatrix::column(std::size_t j) const
{
    QVector v(m_rows);
    for (std::size_t i = 0; i < m_rows; ++i) {
        v[i] = (*this)(i, j);
    }
    return v;
}

QVector QMatrix::apply(const QVector &v) const
{
    if (v.size() != m_cols) {
        throw StructureError("QMatrix::apply: size mismatch");
    }
    QVector out = zero_vector(m_rows);
    for (std::size_t i = 0; i < m_rows; ++i) {
        for (std::size_t j = 0; j < m_cols; ++j) {
            if (!v[j].is_zero() && !(*this)(i, j).is_zero()) {
                out[i] += (*this)(i, j) * v[j];
            }
        }
    }
    return out;
}

bool QMatrix::is_zero() const
{
    return std::all_of(m_data.begin(), m_data.end(), [](const Rational &q) { return q.is_zero(); });
}

Rational QMatrix::determinant() const
{
    if (!is_square()) {
        throw StructureError("determinant of a non-square matrix");
    }
    QMatrix a = *this;
    const std::size_t n = m_rows;
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero()) {
            ++pivot;
        }
        if (pivot == n) {
            return Rational(0);
        }
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(col, j));
            }
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a(i, col).is_zero()) {
                continue;
            }
            const Rational factor = a(i, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j) {
                a(i, j) -= factor * a(col, j);
            }
        }
    }
    return det;
}

std::optional<QMatrix> QMatrix::inverse() const
{
    if (!is_square()) {
        throw StructureError("inverse of a non-square matrix");
    }
    const std::size_t n = m_rows;
    QMatrix a = *this;
    QMatrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero()) {
            ++pivot;
        }
        if (pivot == n) {
            return std::nullopt;
        }
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        }
        const Rational p = a(col, col).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) *= p;
            inv(col, j) *= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col).is_zero()) {
                continue;
            }
            const Rational factor = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= factor * a(col, j);
                inv(i, j) -= factor * inv(col, j);
            }
        }
    }
    return inv;
}

QMatrix QMatrix::pow(int exponent) const
{
    if (!is_square()) {
        throw StructureError("power of a non-square matrix");
    }
    QMatrix base = *this;
    if (exponent < 0) {
        auto inv = inverse();
        if (!inv) {
            throw PreconditionError("negative power of a singular matrix");
        }
        base = std::move(*inv);
        exponent = -exponent;
    }
    QMatrix result = identity(m_rows);
    while (exponent > 0) {
        if (exponent & 1) {
            result = result * base;
        }
        exponent >>= 1;
        if (exponent > 0) {
            base = base * base;
        }
    }
    return result;
}

std::vector<std::vector<std::string>> QMatrix::to_strings() const
{
    std::vector<std::vector<std::string>> out(m_rows, std::vector<std::string>(m_cols));
    for (std::size_t i = 0; i < m_rows; ++i) {
        for (std::size_t j = 0; j < m_cols; ++j) {
            out[i][j] = (*this)(i, j).to_string();
        }
    }
    return out;
}

QMatrix operator*(const QMatrix &a, const QMatrix &b)
{
    if (a.m_cols != b.m_rows) {
        throw StructureError("matrix product: inner dimensions differ");
    }
    QMatrix out(a.m_rows, b.m_cols);
    for (std::size_t i = 0; i < a.m_rows; ++i) {
        for (std::size_t k = 0; k < a.m_cols; ++k) {
            const Rational &aik = a(i, k);
            if (aik.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < b.m_cols; ++j) {
                if (!b(k, j).is_zero()) {
                    out(i, j) += aik * b(k, j);
                }
            }
        }
    }
    return out;
}

QMatrix operator+(const QMatrix &a, const QMatrix &b)
{
    if (a.m_rows != b.m_rows || a.m_cols != b.m_cols) {
        throw StructureError("matrix sum: shape mismatch");
    }
    QMatrix out = a;
    for (std::size_t i = 0; i < out.m_data.size(); ++i) {
        out.m_data[i] += b.m_data[i];
    }
    return out;
}

QMatrix operator-(const QMatrix &a, const QMatrix &b)
{
    return a + (Rational(-1) * b);
}

QMatrix operator*(const Rational &s, const QMatrix &a)
{
    QMatrix out = a;
    for (auto &q : out.m_data) {
        q *= s;
    }
    return out;
}

} // namespace homcalc
