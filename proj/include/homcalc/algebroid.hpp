#ifndef HOMCALC_ALGEBROID_HPP
#define HOMCALC_ALGEBROID_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <homcalc/base_geometry.hpp>
#include <homcalc/report.hpp>

namespace homcalc
{

/// Which of the two Hom-Lie algebroid definitions an instance claims.
///
///  A: [X,fY] = phi*(f)[X,Y] + rho(X)(f) alpha(Y),        rho(fX) = phi*(f) rho(X)
///  B: [X,fY] = phi*(f)[X,Y] + rho(alpha(X))(f) alpha(Y), rho(fX) = f rho(X)
enum class Variant { A, B };

std::string to_string(Variant v);
/// Accepts "A" or "B"; throws ParseError otherwise.
Variant parse_variant(std::string_view text);

/// Element of the free module of sections: sum_i coefficient_i * e_i.
class Section
{
public:
    Section() = default;
    explicit Section(std::vector<Poly> coefficients);

    static Section zero(const BaseGeometry &base, std::size_t rank);
    static Section basis(const BaseGeometry &base, std::size_t rank, std::size_t i);

    std::size_t rank() const
    {
        return m_coefficients.size();
    }
    const std::vector<Poly> &coefficients() const
    {
        return m_coefficients;
    }
    const Poly &operator[](std::size_t i) const
    {
        return m_coefficients[i];
    }

    bool is_zero() const;
    /// e.g. `x*e1 - (x^2 + 1)*e2`; `0` for the zero section.
    std::string to_string() const;

    Section &operator+=(const Section &other);
    Section &operator-=(const Section &other);
    friend Section operator+(Section a, const Section &b)
    {
        return a += b;
    }
    friend Section operator-(Section a, const Section &b)
    {
        return a -= b;
    }
    friend Section operator-(Section a);
    /// Plain (untwisted) module scaling.
    friend Section operator*(const Poly &f, Section x);
    friend bool operator==(const Section &a, const Section &b) = default;

private:
    std::vector<Poly> m_coefficients;
};

using SectionMatrix = std::vector<std::vector<Section>>;
using PolyMatrix = std::vector<std::vector<Poly>>;

/// Hom-Lie algebroid on the free rank-r module over a polynomial base.
///
/// Structure is given on the basis e_1..e_r:
///   bracket[i][j]  = [e_i, e_j]
///   anchor[i]      = rho(e_i), a phi*-twisted derivation
///   alpha[i][j]    = coefficient of e_j in alpha(e_i)
/// and extended to all sections through the variant's scaling laws. The
/// constructor only validates shapes; the axioms are the business of
/// check_axioms.
class HomAlgebroid
{
public:
    HomAlgebroid(BasePtr base, std::size_t rank, SectionMatrix bracket,
                 std::vector<TwistedDerivation> anchor, PolyMatrix alpha, Variant variant);

    const BasePtr &base_ptr() const
    {
        return m_base;
    }
    const BaseGeometry &base() const
    {
        return *m_base;
    }
    std::size_t rank() const
    {
        return m_rank;
    }
    const SectionMatrix &bracket_sf() const
    {
        return m_bracket;
    }
    const std::vector<TwistedDerivation> &anchor_sf() const
    {
        return m_anchor;
    }
    const PolyMatrix &alpha_sf() const
    {
        return m_alpha;
    }
    Variant variant() const
    {
        return m_variant;
    }

    /// anchor[i].coefficients() laid out as an r x n matrix.
    PolyMatrix anchor_matrix() const;

    Section zero_section() const
    {
        return Section::zero(*m_base, m_rank);
    }
    Section basis(std::size_t i) const
    {
        return Section::basis(*m_base, m_rank, i);
    }
    /// alpha(e_i) as a section.
    Section alpha_of_basis(std::size_t i) const
    {
        return Section(m_alpha.at(i));
    }

    HomAlgebroid with_variant(Variant v) const;
    HomAlgebroid with_anchor(std::vector<TwistedDerivation> anchor) const;
    HomAlgebroid with_bracket(SectionMatrix bracket) const;
    HomAlgebroid with_alpha(PolyMatrix alpha) const;

    /// Same base, rank, variant and structure functions.
    friend bool operator==(const HomAlgebroid &a, const HomAlgebroid &b);

private:
    BasePtr m_base;
    std::size_t m_rank;
    SectionMatrix m_bracket;
    std::vector<TwistedDerivation> m_anchor;
    PolyMatrix m_alpha;
    Variant m_variant;
};

using AlgebroidPtr = std::shared_ptr<const HomAlgebroid>;

/// Anchor with twist 1: rho(e_i)(f) = phi*( sum_j coefficients[i][j] df/dx_j ).
std::vector<TwistedDerivation> make_anchor(const BasePtr &base, const PolyMatrix &coefficients);

/// alpha(sum f_i e_i) = sum phi*(f_i) alpha(e_i).
Section apply_alpha(const HomAlgebroid &ab, const Section &x);

/// rho(sum g_i e_i)(f) = sum s(g_i) rho(e_i)(f), s = phi* (A) or id (B).
Poly apply_anchor(const HomAlgebroid &ab, const Section &x, const Poly &f);

/// The operator entering the variant's Hom-Leibniz rule: rho(X)(f) for A,
/// rho(alpha(X))(f) for B.
Poly leibniz_anchor(const HomAlgebroid &ab, const Section &x, const Poly &f);

/// Extension of the structure functions to arbitrary sections:
///   [f e_i, g e_j] = phi*(f)phi*(g)[e_i,e_j] + phi*(f) L(e_i)(g) alpha(e_j)
///                    - phi*(g) L(e_j)(f) alpha(e_i)
/// with L the variant's leibniz_anchor.
Section bracket(const HomAlgebroid &ab, const Section &x, const Section &y);

/// Deterministic and seeded probe data used to decide identities on the
/// (infinite-dimensional) section module.
struct ProbeSet {
    /// Basis sections and x_j * e_i.
    std::vector<Section> structured;
    /// `trials` random sections with coefficient degree <= max_degree.
    std::vector<Section> random;
    /// 1, the base variables, and `trials` random polynomials.
    std::vector<Poly> functions;

    std::vector<Section> all_sections() const;
};

ProbeSet make_probes(const HomAlgebroid &ab, const CheckConfig &config);

/// Individual axiom checks. Each returns one item named by `name`.
CheckItem check_antisymmetry(const HomAlgebroid &ab, const ProbeSet &probes, std::string name);
CheckItem check_alpha_scaling(const HomAlgebroid &ab, const ProbeSet &probes, std::string name);
CheckItem check_section_hom_jacobi(const HomAlgebroid &ab, const ProbeSet &probes,
                                   std::string name);
CheckItem check_section_alpha_morphism(const HomAlgebroid &ab, const ProbeSet &probes,
                                       std::string name);
CheckItem check_hom_leibniz(const HomAlgebroid &ab, const ProbeSet &probes, std::string name);
/// rho(alpha(X)) o phi* = phi* o rho(X)
CheckItem check_rep_alpha(const HomAlgebroid &ab, const ProbeSet &probes, std::string name);
/// rho([X,Y]) o phi* = rho(alpha(X)) rho(Y) - rho(alpha(Y)) rho(X)
CheckItem check_rep_bracket(const HomAlgebroid &ab, const ProbeSet &probes, std::string name);
CheckItem check_phi_morphism(const HomAlgebroid &ab, const ProbeSet &probes, std::string name);
CheckItem check_anchor_product_rule(const HomAlgebroid &ab, const ProbeSet &probes,
                                    std::string name);
CheckItem check_classical_degeneration(const HomAlgebroid &ab, std::string name);
CheckItem check_anchor_scaling(const HomAlgebroid &ab, const ProbeSet &probes, std::string name);

/// Full axiom suite of the declared variant, including the derived
/// properties (a)-(e), on basis/structured probes and seeded random ones.
Report check_axioms(const HomAlgebroid &ab, const CheckConfig &config = {});

} // namespace homcalc

#endif
