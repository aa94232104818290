#include <doctest.h>

#include <homcalc/equivalence.hpp>
#include <homcalc/errors.hpp>
#include <homcalc/fixtures.hpp>
#include <homcalc/io.hpp>

using namespace homcalc;

namespace
{

AlgebroidPtr share(HomAlgebroid ab)
{
    return std::make_shared<const HomAlgebroid>(std::move(ab));
}

Poly P(const HomAlgebroid &ab, const char *text)
{
    return ab.base().parse(text);
}

DifferentialFamily family(const HomAlgebroid &ab)
{
    FamilyResult fr = build_family(share(ab));
    REQUIRE(fr.family);
    return *fr.family;
}

HomAlgebroid rank0()
{
    return algebroid_from_json(Json::parse(R"({
        "base": {"vars": ["x"], "phi": ["-x"]}, "rank": 0,
        "alpha": [], "anchor": [], "bracket": [], "variant": "A"})"));
}

/// Two abelian generators with zero anchor; phi swaps the variables and
/// alpha swaps the generators.
HomAlgebroid abelian_zero_anchor()
{
    return algebroid_from_json(Json::parse(R"({
        "base": {"vars": ["x", "y"], "phi": ["y", "x"]}, "rank": 2,
        "alpha": [["0", "1"], ["1", "0"]], "anchor": [["0", "0"], ["0", "0"]],
        "bracket": [[["0", "0"], ["0", "0"]], [["0", "0"], ["0", "0"]]], "variant": "A"})"));
}

/// alpha(e) = x e is not invertible over the polynomial ring.
HomAlgebroid singular_alpha()
{
    return algebroid_from_json(Json::parse(R"({
        "base": {"vars": ["x"], "phi": ["x"]}, "rank": 1,
        "alpha": [["x"]], "anchor": [["0"]], "bracket": [[["0"]]], "variant": "A"})"));
}

} // namespace

TEST_CASE("build_family examples")
{
    const HomAlgebroid fx3 = twisted_line();
    const DifferentialFamily fam = family(fx3);
    const Section e = fx3.basis(0);
    const Cochain x = Cochain::function(P(fx3, "x"));
    CHECK(fam.evaluate(0, x, std::span<const Section>(&e, 1)) == P(fx3, "1"));
    CHECK(fam.evaluate(1, x, std::span<const Section>(&e, 1)) == P(fx3, "-1"));

    const HomAlgebroid fx4 = tangent_line();
    const DifferentialFamily fam4 = family(fx4);
    const Section xe({P(fx4, "x")});
    const Cochain cube = Cochain::function(P(fx4, "x^3"));
    for (int s = 0; s <= 2; ++s) {
        CHECK(fam4.evaluate(s, cube, std::span<const Section>(&xe, 1)) == P(fx4, "3*x^3"));
    }

    const FamilyResult refused = build_family(share(perturb(fx3, "bracket")));
    CHECK_FALSE(refused.family);
    CHECK_FALSE(refused.report.passed());
    CHECK(refused.report.first_failure()->name == "source (2) antisymmetry");
}

TEST_CASE("check_theorem_conditions examples")
{
    const Report a = check_theorem_conditions(family(twisted_line()), Variant::A);
    CHECK(a.passed());
    CHECK(a.items().size() == 5);
    CHECK(a.items()[0].name == "(i) d_squared");
    CHECK(a.items()[4].name == "(v) form_twisted_linearity");

    const Report b = check_theorem_conditions(family(twisted_line()), Variant::B);
    CHECK_FALSE(b.passed());
    const CheckItem *four = b.find("4) function_linearity");
    REQUIRE(four != nullptr);
    CHECK_FALSE(four->passed);
    CHECK(b.find("1) d_squared")->passed);
    CHECK(b.find("2) graded_leibniz")->passed);
    CHECK(b.find("3) commutation")->passed);

    for (Variant v : {Variant::A, Variant::B}) {
        CHECK(check_theorem_conditions(family(tangent_line()), v).passed());
    }
}

TEST_CASE("reconstruct_anchor examples")
{
    const AnchorResult a = reconstruct_anchor(family(twisted_line()), Variant::A);
    REQUIRE(a.anchor);
    CHECK((*a.anchor)[0][0] == P(twisted_line(), "1"));

    const AnchorResult c = reconstruct_anchor(family(tangent_line()), Variant::A);
    REQUIRE(c.anchor);
    CHECK((*c.anchor)[0][0] == P(tangent_line(), "1"));

    // The B recipe on the raw A-family: rho(e)(x) = d^1(phi* x)(e) = 1, but
    // the family is not B-linear, so the recipe refuses.
    const DifferentialFamily fam = family(twisted_line());
    const Section e = twisted_line().basis(0);
    CHECK(fam.evaluate(1, Cochain::function(P(twisted_line(), "-x")),
                       std::span<const Section>(&e, 1))
          == P(twisted_line(), "1"));
    const AnchorResult b = reconstruct_anchor(fam, Variant::B);
    CHECK_FALSE(b.anchor);
    CHECK_FALSE(b.report.passed());
}

TEST_CASE("reconstruct_bracket examples")
{
    const HomAlgebroid fx3 = twisted_line();
    const DifferentialFamily fam = family(fx3);
    const BracketResult br = reconstruct_bracket(fam, Variant::A, fx3.anchor_matrix());
    REQUIRE(br.bracket);
    CHECK((*br.bracket)[0][0].is_zero());
    CHECK(br.report.passed());

    // The (x e, e) probe: rho(xe) phi* xi(a e) - rho(e) phi* xi(a xe) - d^0 xi(xe, e) = 1.
    const Section xe({P(fx3, "x")});
    const Section e = fx3.basis(0);
    const Cochain xi = Cochain::dual(fx3.base(), 0);
    const std::vector<Section> args{xe, e};
    const Poly dxi = fam.evaluate(0, xi, args);
    CHECK(dxi.is_zero());
    const Poly t1 = apply_anchor(fx3, xe, apply_phi(fx3.base(), 1, fam.context().evaluate(xi, std::vector<Section>{apply_alpha(fx3, e)})));
    const Poly t2 = apply_anchor(fx3, e, apply_phi(fx3.base(), 1, fam.context().evaluate(xi, std::vector<Section>{apply_alpha(fx3, xe)})));
    CHECK(t1 - t2 - dxi == P(fx3, "1"));
    CHECK(bracket(fx3, xe, e) == e);

    const HomAlgebroid fx4 = tangent_line();
    const BracketResult b4 = reconstruct_bracket(family(fx4), Variant::A, fx4.anchor_matrix());
    REQUIRE(b4.bracket);
    CHECK((*b4.bracket)[0][0].is_zero());

    const HomAlgebroid ab = abelian_zero_anchor();
    const BracketResult b0 = reconstruct_bracket(family(ab), Variant::A, ab.anchor_matrix());
    REQUIRE(b0.bracket);
    for (const auto &row : *b0.bracket) {
        for (const auto &entry : row) {
            CHECK(entry.is_zero());
        }
    }
}

TEST_CASE("round_trip examples")
{
    for (const auto &name : builtin_algebroid_names()) {
        INFO(name);
        const RoundTripResult rt = round_trip(builtin_algebroid(name));
        CHECK(rt.report.passed());
        REQUIRE(rt.reconstruction);
        CHECK(*rt.reconstruction == builtin_algebroid(name));
        CHECK(rt.report.find("anchor_matches") != nullptr);
        CHECK(rt.report.find("identity hom_jacobi") != nullptr);
    }
    CHECK(round_trip(rank0()).report.passed());
    CHECK(round_trip(abelian_zero_anchor()).report.passed());
}

TEST_CASE("round_trip on a converted variant-B instance")
{
    const ConvertResult conv = convert(twisted_affine(), Variant::B);
    REQUIRE(conv.algebroid);
    const RoundTripResult rt = round_trip(*conv.algebroid);
    CHECK(rt.report.passed());
    REQUIRE(rt.reconstruction);
    CHECK(*rt.reconstruction == *conv.algebroid);
}

TEST_CASE("convert examples")
{
    const HomAlgebroid fx3 = twisted_line();
    const ConvertResult b = convert(fx3, Variant::B);
    REQUIRE(b.algebroid);
    CHECK(b.report.passed());
    CHECK(b.algebroid->variant() == Variant::B);
    CHECK(b.algebroid->anchor_matrix()[0][0] == P(fx3, "-1"));
    // rho_B(e)(f) = -phi*(f')
    CHECK(apply_anchor(*b.algebroid, b.algebroid->basis(0), P(fx3, "x^2")) == P(fx3, "2*x"));

    const ConvertResult back = convert(*b.algebroid, Variant::A);
    REQUIRE(back.algebroid);
    CHECK(*back.algebroid == fx3);

    const HomAlgebroid fx4 = tangent_line();
    const ConvertResult b4 = convert(fx4, Variant::B);
    REQUIRE(b4.algebroid);
    CHECK(*b4.algebroid == fx4.with_variant(Variant::B));
}

TEST_CASE("convert is an involution on every builtin")
{
    for (const auto &name : builtin_algebroid_names()) {
        INFO(name);
        const HomAlgebroid ab = builtin_algebroid(name);
        const ConvertResult there = convert(ab, Variant::B);
        REQUIRE(there.algebroid);
        const ConvertResult back = convert(*there.algebroid, Variant::A);
        REQUIRE(back.algebroid);
        CHECK(*back.algebroid == ab);
    }
}

TEST_CASE("convert refusals")
{
    const ConvertResult s = convert(singular_alpha(), Variant::B);
    CHECK_FALSE(s.algebroid);
    REQUIRE(s.report.first_failure() != nullptr);
    CHECK(s.report.first_failure()->name == "alpha_invertible");
    CHECK(s.report.first_failure()->witness.at("determinant") == "x");

    const ConvertResult broken = convert(perturb(twisted_line(), "bracket"), Variant::B);
    CHECK_FALSE(broken.algebroid);
    CHECK_FALSE(broken.report.passed());

    const ConvertResult same = convert(twisted_line(), Variant::A);
    REQUIRE(same.algebroid);
    CHECK(*same.algebroid == twisted_line());
}

TEST_CASE("poly_determinant")
{
    const HomAlgebroid aff = twisted_affine();
    CHECK(poly_determinant(aff.base(), aff.alpha_sf()) == P(aff, "-1"));
    const PolyMatrix m = {{P(aff, "x"), P(aff, "1")}, {P(aff, "2"), P(aff, "x")}};
    CHECK(poly_determinant(aff.base(), m) == P(aff, "x^2 - 2"));
}
