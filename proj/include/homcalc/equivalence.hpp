#ifndef HOMCALC_EQUIVALENCE_HPP
#define HOMCALC_EQUIVALENCE_HPP

#include <optional>
#include <span>

#include <homcalc/algebroid.hpp>
#include <homcalc/cochain.hpp>
#include <homcalc/report.hpp>

namespace homcalc
{

/// The operators d^s of one algebroid, for every s >= 0.
class DifferentialFamily
{
public:
    explicit DifferentialFamily(AlgebroidPtr ab) : m_ctx(std::move(ab)) {}

    const HomAlgebroid &algebroid() const
    {
        return m_ctx.algebroid();
    }
    const CochainContext &context() const
    {
        return m_ctx;
    }

    Cochain apply(int s, const Cochain &c) const
    {
        return Cochain::d(s, c);
    }
    /// (d^s c)(args)
    Poly evaluate(int s, const Cochain &c, std::span<const Section> args) const
    {
        return m_ctx.evaluate(apply(s, c), args);
    }

private:
    CochainContext m_ctx;
};

struct FamilyResult {
    std::optional<DifferentialFamily> family;
    Report report;
};

/// Refuses (no family) unless check_axioms passes; the report carries the
/// axiom items either way.
FamilyResult build_family(AlgebroidPtr ab, const CheckConfig &config = {});

/// Conditions (i)-(v) for variant A, 1)-5) for variant B, evaluated on the
/// family's own operators. The variant need not match the algebroid's.
Report check_theorem_conditions(const DifferentialFamily &fam, Variant variant,
                                const CheckConfig &config = {});

struct AnchorResult {
    /// r x n coefficient matrix in the storage convention of make_anchor.
    std::optional<PolyMatrix> anchor;
    Report report;
};

/// A: rho(e_i)(x_j) = phi*(d^0 x_j (e_i));  B: rho(e_i)(x_j) = d^1(phi* x_j)(e_i).
/// Refuses when the variant's function-linearity condition fails.
AnchorResult reconstruct_anchor(const DifferentialFamily &fam, Variant variant,
                                const CheckConfig &config = {});

struct BracketResult {
    std::optional<SectionMatrix> bracket;
    Report report;
};

/// Reads [e_i, e_j] off its values under the duals xi = e_k^*:
///   A: xi([X,Y]) = rho(X) phi* xi(aY) - rho(Y) phi* xi(aX) - d^0 xi(X,Y)
///   B: xi([X,Y]) = phi* rho(X) xi(aY) - phi* rho(Y) xi(aX) - d^1 xi(X,Y)
/// with rho built from `anchor` under the variant's scaling law.
BracketResult reconstruct_bracket(const DifferentialFamily &fam, Variant variant,
                                  const PolyMatrix &anchor);

struct RoundTripResult {
    std::optional<HomAlgebroid> reconstruction;
    Report report;
};

/// Family -> anchor and bracket -> algebroid, compared exactly against the
/// input, then rechecked on its own.
RoundTripResult round_trip(const HomAlgebroid &ab, const CheckConfig &config = {});

struct ConvertResult {
    std::optional<HomAlgebroid> algebroid;
    Report report;
};

/// Same base, rank, alpha and bracket; the anchor becomes rho o alpha^{-1}
/// (A -> B) or rho o alpha (B -> A). Needs alpha invertible over the base
/// (constant nonzero determinant) and the result to pass the target variant's
/// axioms and theorem conditions; otherwise refuses.
ConvertResult convert(const HomAlgebroid &ab, Variant target, const CheckConfig &config = {});

/// Determinant of a square polynomial matrix by cofactor expansion.
Poly poly_determinant(const BaseGeometry &base, const PolyMatrix &m);

} // namespace homcalc

#endif
