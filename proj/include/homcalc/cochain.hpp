#ifndef HOMCALC_COCHAIN_HPP
#define HOMCALC_COCHAIN_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <homcalc/algebroid.hpp>
#include <homcalc/report.hpp>

namespace homcalc
{

enum class CochainKind { basis, function, wedge, d, alpha_star, phi_bar, sum };

struct CochainNode;

/// Immutable, shareable cochain expression on the sections of an algebroid.
///
/// Leaves:
///   basis(k, t, comps)  sum over increasing tuples T of comps[T] * e_T^*,
///                       where pulled-out coefficients go through (phi*)^t
///   function(f)         degree 0
/// Nodes: wedge, d(s, .), alpha_star, phi_bar, weighted sum.
class Cochain
{
public:
    using Tuple = std::vector<std::size_t>;

    /// Tuples are 0-based, in any order of distinct indices (the permutation
    /// sign is applied). twist must be 0 or 1.
    static Cochain basis(std::size_t degree, int twist, const std::map<Tuple, Poly> &components);
    /// e_i^* with constant component 1 (0-based i).
    static Cochain dual(const BaseGeometry &base, std::size_t i, int twist = 0);
    static Cochain function(Poly f);
    static Cochain wedge(Cochain a, Cochain b);
    static Cochain d(int s, Cochain c);
    static Cochain alpha_star(Cochain c);
    static Cochain phi_bar(Cochain c);
    /// All terms must share one degree. An empty sum is the zero cochain of
    /// `degree`.
    static Cochain sum(std::vector<std::pair<Rational, Cochain>> terms, std::size_t degree = 0);
    static Cochain zero(std::size_t degree)
    {
        return sum({}, degree);
    }

    CochainKind kind() const;
    std::size_t degree() const;
    const CochainNode &node() const
    {
        return *m_node;
    }

    std::string to_string() const;

private:
    explicit Cochain(std::shared_ptr<const CochainNode> node) : m_node(std::move(node)) {}

    std::shared_ptr<const CochainNode> m_node;
};

struct CochainNode {
    CochainKind kind;
    std::size_t degree = 0;
    // basis
    int twist = 0;
    std::map<Cochain::Tuple, Poly> components;
    // function
    Poly f;
    // d
    int s = 0;
    // children (wedge: two, d/alpha_star/phi_bar: one, sum: any)
    std::vector<Cochain> children;
    std::vector<Rational> weights;
};

/// Evaluates cochains over one algebroid. Refuses a base whose phi* is not an
/// involution, since d^s needs negative powers of phi*.
class CochainContext
{
public:
    explicit CochainContext(AlgebroidPtr ab);

    const HomAlgebroid &algebroid() const
    {
        return *m_ab;
    }
    const AlgebroidPtr &algebroid_ptr() const
    {
        return m_ab;
    }

    /// Throws StructureError when args.size() differs from the degree.
    Poly evaluate(const Cochain &c, std::span<const Section> args) const;

private:
    Poly eval(const CochainNode &n, const std::vector<Section> &args) const;

    AlgebroidPtr m_ab;
};

/// Section tuples on which cochain identities of degree k are decided: all
/// increasing tuples of structured probes (capped) plus seeded random tuples.
std::vector<std::vector<Section>> decisive_tuples(const ProbeSet &probes, std::size_t k,
                                                  const CheckConfig &config);

/// lhs == rhs on the decisive tuples of their (common) degree.
CheckItem check_cochains_equal(const CochainContext &ctx, const Cochain &lhs, const Cochain &rhs,
                               const ProbeSet &probes, const CheckConfig &config,
                               std::string name);

/// d^s(a ^ b) = d^{s+l} a ^ phibar alpha* b + (-1)^k phibar alpha* a ^ d^{s+k} b
Report check_leibniz(const CochainContext &ctx, const Cochain &a, const Cochain &b, int s,
                     const CheckConfig &config = {});

/// alpha* d^s = d^s alpha*  and  phibar d^s = d^{s+1} phibar, applied to c.
Report check_commutation(const CochainContext &ctx, const Cochain &c, int s,
                         const CheckConfig &config = {});

/// d^s d^s c = 0.
Report check_d_squared(const CochainContext &ctx, const Cochain &c, int s,
                       const CheckConfig &config = {});

/// iv/v belong to variant A (d^0), 4/5 to variant B (d^1).
enum class Linearity { iv, v, four, five };

Linearity parse_linearity(std::string_view text);
std::string to_string(Linearity which);

/// iv/4: d f(gX) = g d f(X);  v/5: d xi(f X1, X2) = phi*(f) d xi(X1, X2) for
/// the basis duals xi. Throws PreconditionError when the algebroid's variant
/// does not own the condition.
Report check_linearity(const CochainContext &ctx, Linearity which, const CheckConfig &config = {});

/// Same check without the variant guard; the condition may simply fail.
CheckItem check_linearity_item(const CochainContext &ctx, Linearity which,
                               const CheckConfig &config, std::string name);

/// Fixed generators of the given degree (0, 1 or 2) used by the identity
/// batteries: functions, twisted and untwisted basis forms, and wedges.
std::vector<Cochain> builtin_cochains(const HomAlgebroid &ab, std::size_t degree);

} // namespace homcalc

#endif
