#ifndef HOMCALC_HOMLIE_HPP
#define HOMCALC_HOMLIE_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include <homcalc/qmatrix.hpp>
#include <homcalc/report.hpp>

namespace homcalc
{

/// bracket[i][j] holds the coordinates of [e_i, e_j].
using BracketTable = std::vector<std::vector<QVector>>;

BracketTable zero_brackets(std::size_t dim);

/// Plain (untwisted) Lie algebra given by structure constants.
struct LieAlgebraData {
    std::size_t dim = 0;
    BracketTable c;
};

/// Finite-dimensional Hom-Lie algebra (g, [.,.], alpha).
///
/// `alpha` acts on coordinate columns: alpha(e_j) is column j. The
/// constructor enforces shapes and antisymmetry of the structure constants;
/// Hom-Jacobi and multiplicativity of alpha are left to the checkers.
class HomLieAlgebra
{
public:
    HomLieAlgebra(std::size_t dim, BracketTable c, QMatrix alpha);

    std::size_t dim() const
    {
        return m_dim;
    }
    const BracketTable &structure_constants() const
    {
        return m_c;
    }
    const QMatrix &alpha() const
    {
        return m_alpha;
    }

    const QVector &bracket_basis(std::size_t i, std::size_t j) const
    {
        return m_c[i][j];
    }
    QVector bracket(const QVector &u, const QVector &v) const;
    QVector apply_alpha(const QVector &v) const
    {
        return m_alpha.apply(v);
    }

private:
    std::size_t m_dim;
    BracketTable m_c;
    QMatrix m_alpha;
};

/// Representation (rho, beta) of a Hom-Lie algebra on Q^dimV.
/// rho[i] is the matrix of rho(e_i). beta must be invertible.
class Representation
{
public:
    /// Throws StructureError on shape mismatch and PreconditionError when
    /// beta is singular.
    Representation(HomLieAlgebra algebra, std::size_t dimV, std::vector<QMatrix> rho, QMatrix beta);

    const HomLieAlgebra &algebra() const
    {
        return m_algebra;
    }
    std::size_t dimV() const
    {
        return m_dimV;
    }
    const std::vector<QMatrix> &rho() const
    {
        return m_rho;
    }
    const QMatrix &beta() const
    {
        return m_beta;
    }

    /// rho extended linearly: sum_i x_i rho[i].
    QMatrix rho_of(const QVector &x) const;

private:
    HomLieAlgebra m_algebra;
    std::size_t m_dimV;
    std::vector<QMatrix> m_rho;
    QMatrix m_beta;
};

/// Element of C^k(g; V): an alternating k-linear map, stored on strictly
/// increasing basis index tuples only. Missing tuples are zero.
class VectorCochain
{
public:
    using Tuple = std::vector<std::size_t>;

    VectorCochain(std::size_t degree, std::size_t dim, std::size_t dimV);

    /// The cochain sending e_tuple to `value` (tuple is sorted, with sign).
    static VectorCochain basis(std::size_t dim, std::size_t dimV, Tuple tuple, QVector value);

    std::size_t degree() const
    {
        return m_degree;
    }
    std::size_t dim() const
    {
        return m_dim;
    }
    std::size_t dimV() const
    {
        return m_dimV;
    }
    const std::map<Tuple, QVector> &values() const
    {
        return m_values;
    }

    /// Sets the value on a tuple of distinct indices in any order; the
    /// permutation sign is applied so the stored tuple is increasing.
    void set(Tuple tuple, const QVector &value);
    /// Value on basis elements in any order (zero on repeated indices).
    QVector at(Tuple tuple) const;
    /// Multilinear alternating evaluation on arbitrary vectors.
    QVector evaluate(std::span<const QVector> args) const;

    bool is_zero() const;

    VectorCochain &operator+=(const VectorCochain &other);
    friend VectorCochain operator+(VectorCochain a, const VectorCochain &b)
    {
        return a += b;
    }
    friend VectorCochain operator*(const Rational &s, VectorCochain a);
    friend bool operator==(const VectorCochain &a, const VectorCochain &b);

private:
    std::size_t m_degree;
    std::size_t m_dim;
    std::size_t m_dimV;
    std::map<Tuple, QVector> m_values;
};

/// All strictly increasing k-tuples from {0..n-1}, lexicographic.
std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t n, std::size_t k);

Report check_hom_jacobi(const HomLieAlgebra &g);
Report check_alpha_morphism(const HomLieAlgebra &g);
Report check_representation(const Representation &r);

/// d^s eta for the family
///   d^s eta(x_1..x_{k+1}) = sum_i (-1)^{i+1} beta^{k+1+s} rho(x_i) beta^{-k-2-s}
///                               eta(alpha x_1, .., ^x_i, .., alpha x_{k+1})
///                         + sum_{i<j} (-1)^{i+j} eta([x_i,x_j], alpha x_1, .., ^x_i, .., ^x_j, ..).
VectorCochain coboundary_vec(const Representation &r, int s, const VectorCochain &eta);

/// Applies coboundary_vec twice to every basis cochain of degree <= max_k.
/// The first item records whether `r` is a representation at all; the d^2
/// items are only run when it is.
Report check_d_squared_vec(const Representation &r, int s, int max_k);

struct YauTwistResult {
    std::optional<HomLieAlgebra> algebra;
    Report report;
};

/// [x,y]' = alpha[x,y]. Requires the input to satisfy the Jacobi identity and
/// alpha to be multiplicative for the untwisted bracket; otherwise no algebra
/// is returned and the report says why.
YauTwistResult yau_twist(const LieAlgebraData &g, const QMatrix &alpha);

/// (rho = ad, beta = alpha). Throws PreconditionError if alpha is singular.
Representation adjoint_rep(const HomLieAlgebra &g);

/// rho = 0 on Q^dimV with the given invertible beta.
Representation trivial_rep(const HomLieAlgebra &g, std::size_t dimV, const QMatrix &beta);

} // namespace homcalc

#endif
