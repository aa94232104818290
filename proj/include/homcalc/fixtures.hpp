#ifndef HOMCALC_FIXTURES_HPP
#define HOMCALC_FIXTURES_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <homcalc/algebroid.hpp>
#include <homcalc/homlie.hpp>

namespace homcalc
{

// Algebroids over polynomial bases.
//
//   twisted-line    Q[x], x -> -x, rank 1: the tangent algebroid of the line
//                   twisted by the reflection (alpha(e) = -e, rho(e) = phi* d/dx)
//   tangent-line    Q[x], phi = id, alpha = id, rho(e) = d/dx
//   twisted-affine  Q[x], x -> -x, rank 2: span{d/dx, x d/dx} twisted by the
//                   reflection
//   twisted-plane   Q[x,y], (x,y) -> (y,x), rank 2: the tangent algebroid of
//                   the plane twisted by the swap
HomAlgebroid twisted_line();
HomAlgebroid tangent_line();
HomAlgebroid twisted_affine();
HomAlgebroid twisted_plane();

std::vector<std::string> builtin_algebroid_names();
/// Throws StructureError for an unknown name.
HomAlgebroid builtin_algebroid(std::string_view name);

// Lie algebras given by structure constants (0-based indices below).
LieAlgebraData lie_abelian(std::size_t dim);
/// [e1,e2] = e2
LieAlgebraData lie_aff2();
/// [e1,e2] = e3
LieAlgebraData lie_h3();
/// basis h, e, f: [h,e] = 2e, [h,f] = -2f, [e,f] = h
LieAlgebraData lie_sl2();
LieAlgebraData direct_sum(const LieAlgebraData &a, const LieAlgebraData &b);
QMatrix block_diagonal(const QMatrix &a, const QMatrix &b);

/// heisenberg: h3 with alpha = id; aff2: aff2 twisted by diag(1,2).
std::vector<std::string> builtin_homlie_names();
HomLieAlgebra builtin_homlie(std::string_view name);

struct NamedRepresentation {
    std::string name;
    Representation rep;
};

/// Yau twists of small Lie algebras (dim <= 4) by seeded random
/// automorphisms, each paired with trivial and adjoint representations.
std::vector<NamedRepresentation> homlie_battery(std::uint64_t seed);

struct Mutation {
    std::string description;
    HomAlgebroid algebroid;
};

/// Single-coefficient perturbations of twisted-line, each breaking an axiom.
std::vector<Mutation> twisted_line_mutations();

/// Adds a constant/linear perturbation to one structure coefficient:
/// what is "bracket" ([e1,e1] += e1), "anchor" (a_11 += x_1) or "alpha"
/// (alpha_11 += 1). Throws StructureError otherwise or at rank 0.
HomAlgebroid perturb(const HomAlgebroid &ab, std::string_view what);

} // namespace homcalc

#endif
