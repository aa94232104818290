#ifndef HOMCALC_BASE_GEOMETRY_HPP
#define HOMCALC_BASE_GEOMETRY_HPP

#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include <homcalc/poly.hpp>
#include <homcalc/report.hpp>

namespace homcalc
{

/// Polynomial base algebra Q[x_1..x_n] together with the pullback
/// endomorphism phi*, stored by the images of the variables.
class BaseGeometry
{
public:
    /// Throws StructureError if the image count or variable lists disagree.
    BaseGeometry(VarListPtr vars, std::vector<Poly> phi_images);

    /// Base with phi* = id.
    static BaseGeometry identity(VarListPtr vars);

    const VarListPtr &vars() const
    {
        return m_vars;
    }
    std::size_t num_variables() const
    {
        return m_vars->size();
    }
    const std::vector<Poly> &phi_images() const
    {
        return m_phi;
    }

    /// Computed once at construction: phi*(phi*(x_j)) == x_j for every j.
    bool is_involutive() const
    {
        return m_involutive;
    }
    bool is_identity() const
    {
        return m_identity;
    }

    Poly zero() const
    {
        return Poly(m_vars);
    }
    Poly constant(const Rational &c) const
    {
        return Poly(m_vars, c);
    }
    Poly variable(std::size_t j) const
    {
        return Poly::variable(m_vars, j);
    }
    Poly parse(std::string_view text) const
    {
        return Poly::parse(text, m_vars);
    }

    /// (phi*)^power (f). On an involutive base the power is reduced mod 2, so
    /// any integer is accepted; otherwise only non-negative powers are and a
    /// negative one throws PreconditionError.
    Poly phi(int power, const Poly &f) const;

    friend bool operator==(const BaseGeometry &a, const BaseGeometry &b)
    {
        return *a.m_vars == *b.m_vars && a.m_phi == b.m_phi;
    }

private:
    Poly phi_once(const Poly &f) const;

    VarListPtr m_vars;
    std::vector<Poly> m_phi;
    bool m_involutive = false;
    bool m_identity = false;
};

using BasePtr = std::shared_ptr<const BaseGeometry>;

Poly apply_phi(const BaseGeometry &base, int power, const Poly &f);

/// Passes iff phi* applied twice fixes every variable; on failure the witness
/// lists each offending variable with its double image.
Report check_involution(const BaseGeometry &base);

/// f -> (phi*)^twist( sum_j coefficient_j * df/dx_j ).
///
/// With twist 1 this is a phi*-twisted derivation:
/// D(fg) = phi*(f) D(g) + phi*(g) D(f).
class TwistedDerivation
{
public:
    TwistedDerivation(BasePtr base, std::vector<Poly> coefficients, int twist_exponent);

    const BasePtr &base() const
    {
        return m_base;
    }
    const std::vector<Poly> &coefficients() const
    {
        return m_coefficients;
    }
    int twist_exponent() const
    {
        return m_twist;
    }

    Poly operator()(const Poly &f) const;

    friend bool operator==(const TwistedDerivation &a, const TwistedDerivation &b)
    {
        return a.m_twist == b.m_twist && a.m_coefficients == b.m_coefficients;
    }

private:
    BasePtr m_base;
    std::vector<Poly> m_coefficients;
    int m_twist;
};

Poly apply_derivation(const TwistedDerivation &derivation, const Poly &f);

} // namespace homcalc

#endif
