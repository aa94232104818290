#ifndef HOMCALC_POLY_HPP
#define HOMCALC_POLY_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <homcalc/rational.hpp>

namespace homcalc
{

using VarList = std::vector<std::string>;
using VarListPtr = std::shared_ptr<const VarList>;
using Exponents = std::vector<std::uint32_t>;

VarListPtr make_vars(VarList names);

/// Strict weak order putting the graded-lex larger monomial first.
struct GrlexGreater {
    bool operator()(const Exponents &a, const Exponents &b) const;
};

/// Exact multivariate polynomial over the rationals.
///
/// Terms are kept in a map sorted by descending graded-lexicographic order
/// with no zero coefficients, so two polynomials over the same variables are
/// equal exactly when their term maps are equal. Every binary operation
/// requires both operands to use the same variable list (same names in the
/// same order) and throws StructureError otherwise.
class Poly
{
public:
    using TermMap = std::map<Exponents, Rational, GrlexGreater>;

    /// Zero polynomial over no variables.
    Poly();
    /// Zero polynomial over `vars`.
    explicit Poly(VarListPtr vars);
    Poly(VarListPtr vars, const Rational &constant);

    static Poly variable(VarListPtr vars, std::size_t index);
    static Poly monomial(VarListPtr vars, Exponents exponents, const Rational &coefficient);

    /// Parses the textual syntax `3*x^2 - 1/2*x*y + 1`. Throws ParseError with
    /// the offending character offset.
    static Poly parse(std::string_view text, VarListPtr vars);

    const VarList &variables() const
    {
        return *m_vars;
    }
    const VarListPtr &variables_ptr() const
    {
        return m_vars;
    }
    std::size_t num_variables() const
    {
        return m_vars->size();
    }
    const TermMap &terms() const
    {
        return m_terms;
    }

    bool is_zero() const
    {
        return m_terms.empty();
    }
    bool is_constant() const;
    /// Constant term (zero if absent).
    Rational constant_term() const;
    /// -1 for the zero polynomial.
    long total_degree() const;

    bool same_variables(const Poly &other) const;

    Poly derivative(std::size_t index) const;
    /// Simultaneous substitution x_j -> images[j]. The images may live over a
    /// different variable list; the result lives over theirs.
    Poly substitute(std::span<const Poly> images) const;
    Poly pow(unsigned exponent) const;

    std::string to_string() const;

    Poly &operator+=(const Poly &other);
    Poly &operator-=(const Poly &other);
    Poly &operator*=(const Poly &other);
    Poly &operator*=(const Rational &scalar);

    friend Poly operator+(Poly a, const Poly &b)
    {
        return a += b;
    }
    friend Poly operator-(Poly a, const Poly &b)
    {
        return a -= b;
    }
    friend Poly operator*(const Poly &a, const Poly &b);
    friend Poly operator*(Poly a, const Rational &s)
    {
        return a *= s;
    }
    friend Poly operator*(const Rational &s, Poly a)
    {
        return a *= s;
    }
    friend Poly operator-(Poly a);

    /// Structural equality; polynomials over different variable lists are
    /// never equal.
    friend bool operator==(const Poly &a, const Poly &b);

    friend std::ostream &operator<<(std::ostream &os, const Poly &p)
    {
        return os << p.to_string();
    }

private:
    void require_same_variables(const Poly &other, const char *op) const;
    void add_term(const Exponents &e, const Rational &c);

    VarListPtr m_vars;
    TermMap m_terms;
};

enum class PolyOp { add, sub, mul };

/// Dispatches one ring operation; throws StructureError on variable mismatch.
Poly poly_arith(const Poly &a, const Poly &b, PolyOp op);

} // namespace homcalc

#endif
