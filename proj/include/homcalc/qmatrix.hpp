#ifndef HOMCALC_QMATRIX_HPP
#define HOMCALC_QMATRIX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <homcalc/rational.hpp>

namespace homcalc
{

using QVector = std::vector<Rational>;

QVector zero_vector(std::size_t n);
QVector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const QVector &v);
QVector add(const QVector &a, const QVector &b);
QVector scale(const Rational &s, const QVector &v);
/// a += s * b
void axpy(QVector &a, const Rational &s, const QVector &b);
std::string to_string(const QVector &v);

/// Dense row-major matrix of exact rationals.
class QMatrix
{
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols);

    static QMatrix identity(std::size_t n);
    static QMatrix diagonal(const QVector &entries);
    /// Throws StructureError on ragged input.
    static QMatrix from_rows(const std::vector<QVector> &rows);

    std::size_t rows() const
    {
        return m_rows;
    }
    std::size_t cols() const
    {
        return m_cols;
    }

    Rational &operator()(std::size_t i, std::size_t j)
    {
        return m_data[i * m_cols + j];
    }
    const Rational &operator()(std::size_t i, std::size_t j) const
    {
        return m_data[i * m_cols + j];
    }

    QVector column(std::size_t j) const;
    QVector apply(const QVector &v) const;

    bool is_zero() const;
    bool is_square() const
    {
        return m_rows == m_cols;
    }

    Rational determinant() const;
    /// Gauss-Jordan; nullopt when singular.
    std::optional<QMatrix> inverse() const;
    /// Negative powers go through one inversion; throws PreconditionError if
    /// singular.
    QMatrix pow(int exponent) const;

    std::vector<std::vector<std::string>> to_strings() const;

    friend QMatrix operator*(const QMatrix &a, const QMatrix &b);
    friend QMatrix operator+(const QMatrix &a, const QMatrix &b);
    friend QMatrix operator-(const QMatrix &a, const QMatrix &b);
    friend QMatrix operator*(const Rational &s, const QMatrix &a);
    friend bool operator==(const QMatrix &a, const QMatrix &b) = default;

private:
    std::size_t m_rows = 0;
    std::size_t m_cols = 0;
    std::vector<Rational> m_data;
};

} // namespace homcalc

#endif
