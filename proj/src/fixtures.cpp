#include <homcalc/fixtures.hpp>
#include <homcalc/errors.hpp>
#include <homcalc/io.hpp>
#include <homcalc/sampling.hpp>

namespace homcalc
{

HomAlgebroid twisted_line()
{
    return algebroid_from_json(Json::parse(R"({
        "base": {"vars": ["x"], "phi": ["-x"]},
        "rank": 1,
        "alpha": [["-1"]],
        "anchor": [["1"]],
        "bracket": [[["0"]]],
        "variant": "A"
    })"));
}

HomAlgebroid tangent_line()
{
    return algebroid_from_json(Json::parse(R"({
        "base": {"vars": ["x"], "phi": ["x"]},
        "rank": 1,
        "alpha": [["1"]],
        "anchor": [["1"]],
        "bracket": [[["0"]]],
        "variant": "A"
    })"));
}

HomAlgebroid twisted_affine()
{
    // e1 = d/dx, e2 = x d/dx, [e1,e2] = e1; the reflection sends e1 to -e1.
    return algebroid_from_json(Json::parse(R"({
        "base": {"vars": ["x"], "phi": ["-x"]},
        "rank": 2,
        "alpha": [["-1", "0"], ["0", "1"]],
        "anchor": [["1"], ["x"]],
        "bracket": [[["0", "0"], ["-1", "0"]], [["1", "0"], ["0", "0"]]],
        "variant": "A"
    })"));
}

HomAlgebroid twisted_plane()
{
    return algebroid_from_json(Json::parse(R"({
        "base": {"vars": ["x", "y"], "phi": ["y", "x"]},
        "rank": 2,
        "alpha": [["0", "1"], ["1", "0"]],
        "anchor": [["1", "0"], ["0", "1"]],
        "bracket": [[["0", "0"], ["0", "0"]], [["0", "0"], ["0", "0"]]],
        "variant": "A"
    })"));
}

std::vector<std::string> builtin_algebroid_names()
{
    return {"twisted-line", "tangent-line", "twisted-affine", "twisted-plane"};
}

HomAlgebroid builtin_algebroid(std::string_view name)
{
    if (name == "twisted-line") {
        return twisted_line();
    }
    if (name == "tangent-line") {
        return tangent_line();
    }
    if (name == "twisted-affine") {
        return twisted_affine();
    }
    if (name == "twisted-plane") {
        return twisted_plane();
    }
    throw StructureError("unknown builtin algebroid '" + std::string(name) + "'");
}

// ------------------------------------------------------------ Lie algebras

LieAlgebraData lie_abelian(std::size_t dim)
{
    return {dim, zero_brackets(dim)};
}

namespace
{

void set_bracket(LieAlgebraData &g, std::size_t i, std::size_t j, std::size_t k, Rational v)
{
    g.c[i][j][k] = v;
    g.c[j][i][k] = -v;
}

} // namespace

LieAlgebraData lie_aff2()
{
    LieAlgebraData g = lie_abelian(2);
    set_bracket(g, 0, 1, 1, Rational(1));
    return g;
}

LieAlgebraData lie_h3()
{
    LieAlgebraData g = lie_abelian(3);
    set_bracket(g, 0, 1, 2, Rational(1));
    return g;
}

LieAlgebraData lie_sl2()
{
    LieAlgebraData g = lie_abelian(3);
    set_bracket(g, 0, 1, 1, Rational(2));
    set_bracket(g, 0, 2, 2, Rational(-2));
    set_bracket(g, 1, 2, 0, Rational(1));
    return g;
}

LieAlgebraData direct_sum(const LieAlgebraData &a, const LieAlgebraData &b)
{
    LieAlgebraData g = lie_abelian(a.dim + b.dim);
    for (std::size_t i = 0; i < a.dim; ++i) {
        for (std::size_t j = 0; j < a.dim; ++j) {
            for (std::size_t k = 0; k < a.dim; ++k) {
                g.c[i][j][k] = a.c[i][j][k];
            }
        }
    }
    for (std::size_t i = 0; i < b.dim; ++i) {
        for (std::size_t j = 0; j < b.dim; ++j) {
            for (std::size_t k = 0; k < b.dim; ++k) {
                g.c[a.dim + i][a.dim + j][a.dim + k] = b.c[i][j][k];
            }
        }
    }
    return g;
}

QMatrix block_diagonal(const QMatrix &a, const QMatrix &b)
{
    QMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            m(i, j) = a(i, j);
        }
    }
    for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            m(a.rows() + i, a.cols() + j) = b(i, j);
        }
    }
    return m;
}

std::vector<std::string> builtin_homlie_names()
{
    return {"heisenberg", "aff2"};
}

HomLieAlgebra builtin_homlie(std::string_view name)
{
    if (name == "heisenberg") {
        const LieAlgebraData g = lie_h3();
        return HomLieAlgebra(g.dim, g.c, QMatrix::identity(3));
    }
    if (name == "aff2") {
        auto twisted = yau_twist(lie_aff2(), QMatrix::diagonal({Rational(1), Rational(2)}));
        return *twisted.algebra;
    }
    throw StructureError("unknown builtin Hom-Lie algebra '" + std::string(name) + "'");
}

// ------------------------------------------------------------------ battery

namespace
{

/// Random invertible upper-triangular matrix (columns are images).
QMatrix random_invertible(Sampler &rng, std::size_t n)
{
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = rng.nonzero_coefficient();
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = rng.coefficient();
        }
    }
    return m;
}

/// e1 -> e1 + b e2, e2 -> c e2.
QMatrix aff2_automorphism(Sampler &rng)
{
    QMatrix m = QMatrix::identity(2);
    m(1, 0) = rng.coefficient();
    m(1, 1) = rng.nonzero_coefficient();
    return m;
}

/// A on span{e1,e2}, e3 -> det(A) e3, plus e3-shifts of e1 and e2.
QMatrix h3_automorphism(Sampler &rng)
{
    QMatrix m(3, 3);
    m(0, 0) = rng.nonzero_coefficient();
    m(0, 1) = rng.coefficient();
    m(1, 0) = rng.coefficient();
    m(1, 1) = rng.nonzero_coefficient();
    if ((m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).is_zero()) {
        m(0, 1) = m(0, 1) + Rational(1);
    }
    m(2, 0) = rng.coefficient();
    m(2, 1) = rng.coefficient();
    m(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    return m;
}

/// h -> h, e -> l e, f -> f / l.
QMatrix sl2_automorphism(Sampler &rng)
{
    const Rational l = rng.nonzero_coefficient();
    return QMatrix::diagonal({Rational(1), l, l.inverse()});
}

} // namespace

std::vector<NamedRepresentation> homlie_battery(std::uint64_t seed)
{
    Sampler rng(seed);
    struct Input {
        std::string name;
        LieAlgebraData g;
        QMatrix alpha;
    };
    std::vector<Input> inputs;
    inputs.push_back({"abelian2", lie_abelian(2), random_invertible(rng, 2)});
    inputs.push_back({"abelian3", lie_abelian(3), random_invertible(rng, 3)});
    inputs.push_back({"aff2", lie_aff2(), aff2_automorphism(rng)});
    inputs.push_back({"h3", lie_h3(), h3_automorphism(rng)});
    inputs.push_back({"sl2", lie_sl2(), sl2_automorphism(rng)});
    inputs.push_back({"aff2+aff2", direct_sum(lie_aff2(), lie_aff2()),
                      block_diagonal(aff2_automorphism(rng), aff2_automorphism(rng))});
    inputs.push_back({"h3+abelian1", direct_sum(lie_h3(), lie_abelian(1)),
                      block_diagonal(h3_automorphism(rng), random_invertible(rng, 1))});
    inputs.push_back({"sl2+abelian1", direct_sum(lie_sl2(), lie_abelian(1)),
                      block_diagonal(sl2_automorphism(rng), random_invertible(rng, 1))});

    std::vector<NamedRepresentation> out;
    for (auto &in : inputs) {
        YauTwistResult twisted = yau_twist(in.g, in.alpha);
        if (!twisted.algebra) {
            throw StructureError("battery input " + in.name + " is not admissible");
        }
        const HomLieAlgebra &g = *twisted.algebra;
        out.push_back({in.name + "/trivial1",
                       trivial_rep(g, 1, QMatrix::diagonal({rng.nonzero_coefficient()}))});
        out.push_back({in.name + "/trivial2", trivial_rep(g, 2, random_invertible(rng, 2))});
        out.push_back({in.name + "/adjoint", adjoint_rep(g)});
    }
    return out;
}

// ---------------------------------------------------------------- mutations

namespace
{

HomAlgebroid with_bracket_entry(const HomAlgebroid &ab, const char *value)
{
    SectionMatrix b = ab.bracket_sf();
    b[0][0] = Section({ab.base().parse(value)});
    return ab.with_bracket(std::move(b));
}

HomAlgebroid with_anchor_entry(const HomAlgebroid &ab, const char *value)
{
    PolyMatrix a = ab.anchor_matrix();
    a[0][0] = ab.base().parse(value);
    return ab.with_anchor(make_anchor(ab.base_ptr(), a));
}

HomAlgebroid with_alpha_entry(const HomAlgebroid &ab, const char *value)
{
    PolyMatrix m = ab.alpha_sf();
    m[0][0] = ab.base().parse(value);
    return ab.with_alpha(std::move(m));
}

} // namespace

std::vector<Mutation> twisted_line_mutations()
{
    const HomAlgebroid fx = twisted_line();
    std::vector<Mutation> out;
    for (const char *v : {"1", "x", "-1/2"}) {
        out.push_back({std::string("bracket [e1,e1] = ") + v + "*e1", with_bracket_entry(fx, v)});
    }
    // Only odd parts break the twisted line: an even coefficient commutes with
    // x -> -x and gives a valid algebroid again.
    for (const char *v : {"x", "1 + x", "x^3", "-x"}) {
        out.push_back({std::string("anchor a11 = ") + v, with_anchor_entry(fx, v)});
    }
    for (const char *v : {"0", "1", "-2"}) {
        out.push_back({std::string("alpha a11 = ") + v, with_alpha_entry(fx, v)});
    }
    return out;
}

HomAlgebroid perturb(const HomAlgebroid &ab, std::string_view what)
{
    if (ab.rank() == 0) {
        throw StructureError("cannot perturb a rank-0 algebroid");
    }
    const BaseGeometry &base = ab.base();
    if (what == "bracket") {
        SectionMatrix b = ab.bracket_sf();
        b[0][0] += ab.basis(0);
        return ab.with_bracket(std::move(b));
    }
    if (what == "anchor") {
        if (base.num_variables() == 0) {
            throw StructureError("cannot perturb the anchor of a base without variables");
        }
        PolyMatrix a = ab.anchor_matrix();
        a[0][0] += base.variable(0);
        return ab.with_anchor(make_anchor(ab.base_ptr(), a));
    }
    if (what == "alpha") {
        PolyMatrix m = ab.alpha_sf();
        m[0][0] += base.constant(Rational(1));
        return ab.with_alpha(std::move(m));
    }
    throw StructureError("perturbation must be bracket, anchor or alpha");
}

} // namespace homcalc
