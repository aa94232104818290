#include <doctest.h>

#include <algorithm>
#include <map>

#include <homcalc/errors.hpp>
#include <homcalc/fixtures.hpp>
#include <homcalc/homlie.hpp>

#include "gen.hpp"

using namespace homcalc;

namespace
{

HomLieAlgebra from_lie(const LieAlgebraData &g, const QMatrix &alpha)
{
    return HomLieAlgebra(g.dim, g.c, alpha);
}

QMatrix diag(std::initializer_list<long> d)
{
    QVector v;
    for (long x : d) {
        v.push_back(Rational(x));
    }
    return QMatrix::diagonal(v);
}

QVector vec(std::initializer_list<long> d)
{
    QVector v;
    for (long x : d) {
        v.push_back(Rational(x));
    }
    return v;
}

// ---- classical Chevalley-Eilenberg oracle (alpha = beta = id) -------------

using Tuple = std::vector<std::size_t>;
using Values = std::map<Tuple, QVector>;

/// Value of an alternating cochain on basis elements in arbitrary order.
QVector ce_at(const Values &eta, Tuple t, std::size_t dimV)
{
    int sign = 1;
    for (std::size_t i = 0; i < t.size(); ++i) {
        for (std::size_t j = i + 1; j < t.size(); ++j) {
            if (t[i] == t[j]) {
                return zero_vector(dimV);
            }
            if (t[i] > t[j]) {
                std::swap(t[i], t[j]);
                sign = -sign;
            }
        }
    }
    auto it = eta.find(t);
    if (it == eta.end()) {
        return zero_vector(dimV);
    }
    return scale(Rational(sign), it->second);
}

/// d eta(e_t0..e_tk) = sum_i (-1)^i rho(e_ti) eta(..^i..)
///                   + sum_{i<j} (-1)^{i+j} eta([e_ti,e_tj], ..^i..^j..)
Values ce_differential(const LieAlgebraData &g, const std::vector<QMatrix> &rho, std::size_t dimV,
                       const Values &eta, std::size_t k)
{
    Values out;
    for (const Tuple &t : increasing_tuples(g.dim, k + 1)) {
        QVector acc = zero_vector(dimV);
        for (std::size_t i = 0; i < t.size(); ++i) {
            Tuple rest;
            for (std::size_t m = 0; m < t.size(); ++m) {
                if (m != i) {
                    rest.push_back(t[m]);
                }
            }
            const QVector v = rho[t[i]].apply(ce_at(eta, rest, dimV));
            axpy(acc, Rational(i % 2 == 0 ? 1 : -1), v);
        }
        for (std::size_t i = 0; i < t.size(); ++i) {
            for (std::size_t j = i + 1; j < t.size(); ++j) {
                Tuple rest;
                for (std::size_t m = 0; m < t.size(); ++m) {
                    if (m != i && m != j) {
                        rest.push_back(t[m]);
                    }
                }
                const QVector &br = g.c[t[i]][t[j]];
                for (std::size_t m = 0; m < g.dim; ++m) {
                    if (br[m].is_zero()) {
                        continue;
                    }
                    Tuple args{m};
                    args.insert(args.end(), rest.begin(), rest.end());
                    axpy(acc, Rational((i + j) % 2 == 0 ? 1 : -1) * br[m], ce_at(eta, args, dimV));
                }
            }
        }
        if (!is_zero(acc)) {
            out[t] = acc;
        }
    }
    return out;
}

VectorCochain random_cochain(gen::Gen &g, std::size_t k, std::size_t dim, std::size_t dimV)
{
    VectorCochain eta(k, dim, dimV);
    for (const auto &t : increasing_tuples(dim, k)) {
        eta.set(t, g.vector(dimV));
    }
    return eta;
}

} // namespace

TEST_CASE("check_hom_jacobi examples")
{
    CHECK(check_hom_jacobi(from_lie(lie_abelian(2), QMatrix::identity(2))).passed());
    CHECK(check_hom_jacobi(from_lie(lie_aff2(), diag({1, 2}))).passed());
    CHECK(check_hom_jacobi(from_lie(lie_h3(), QMatrix::identity(3))).passed());

    LieAlgebraData bad = lie_h3();
    bad.c[0][2][0] = Rational(1);
    bad.c[2][0][0] = Rational(-1);
    const Report r = check_hom_jacobi(from_lie(bad, QMatrix::identity(3)));
    REQUIRE_FALSE(r.passed());
    CHECK(r.first_failure()->witness.at("triple") == Json::array({"e1", "e2", "e3"}));
}

TEST_CASE("non-antisymmetric structure constants are rejected at construction")
{
    LieAlgebraData g = lie_abelian(2);
    g.c[0][1][0] = Rational(1);
    CHECK_THROWS_AS(HomLieAlgebra(2, g.c, QMatrix::identity(2)), PreconditionError);
}

TEST_CASE("check_alpha_morphism examples")
{
    CHECK(check_alpha_morphism(from_lie(lie_aff2(), diag({1, 2}))).passed());
    CHECK(check_alpha_morphism(from_lie(lie_sl2(), QMatrix::identity(3))).passed());
    CHECK_FALSE(check_alpha_morphism(from_lie(lie_aff2(), diag({2, 2}))).passed());
}

TEST_CASE("check_representation examples")
{
    const HomLieAlgebra aff = from_lie(lie_aff2(), diag({1, 2}));
    CHECK(check_representation(trivial_rep(aff, 2, QMatrix::identity(2))).passed());

    // ad(e1): e1 -> 0, e2 -> e2;  ad(e2): e1 -> -e2, e2 -> 0.
    const Representation ad = adjoint_rep(aff);
    CHECK(ad.rho()[0] == QMatrix::from_rows({vec({0, 0}), vec({0, 1})}));
    CHECK(ad.rho()[1] == QMatrix::from_rows({vec({0, 0}), vec({-1, 0})}));
    CHECK(ad.beta() == diag({1, 2}));
    CHECK(check_representation(ad).passed());

    const Representation wrong_beta(aff, 2, ad.rho(), QMatrix::identity(2));
    const Report r = check_representation(wrong_beta);
    REQUIRE_FALSE(r.passed());
    CHECK(r.first_failure()->name == "rho_alpha_beta");
    CHECK(r.first_failure()->witness.at("x") == "e2");

    CHECK_THROWS_AS(Representation(aff, 2, ad.rho(), diag({1, 0})), PreconditionError);
}

TEST_CASE("coboundary_vec examples")
{
    const HomLieAlgebra aff = from_lie(lie_aff2(), QMatrix::identity(2));
    const Representation triv = trivial_rep(aff, 1, QMatrix::identity(1));
    const VectorCochain xi = VectorCochain::basis(2, 1, {1}, vec({1}));
    CHECK(coboundary_vec(triv, 0, xi).at({0, 1}) == vec({-1}));

    const VectorCochain zero(1, 2, 1);
    CHECK(coboundary_vec(triv, 0, zero).is_zero());

    const HomLieAlgebra h3 = from_lie(lie_h3(), QMatrix::identity(3));
    const Representation th = trivial_rep(h3, 1, QMatrix::identity(1));
    const VectorCochain d = coboundary_vec(th, 0, VectorCochain::basis(3, 1, {2}, vec({1})));
    CHECK(d.at({0, 1}) == vec({-1}));
    CHECK(d.at({0, 2}) == vec({0}));
    CHECK(d.at({1, 2}) == vec({0}));
    CHECK(d.at({1, 0}) == vec({1}));
}

TEST_CASE("check_d_squared_vec examples")
{
    const HomLieAlgebra h3 = from_lie(lie_h3(), QMatrix::identity(3));
    CHECK(check_d_squared_vec(trivial_rep(h3, 1, QMatrix::identity(1)), 0, 2).passed());

    const HomLieAlgebra aff = *yau_twist(lie_aff2(), diag({1, 2})).algebra;
    for (int s = 0; s <= 2; ++s) {
        CHECK(check_d_squared_vec(adjoint_rep(aff), s, 2).passed());
    }
    // Degree 1 into degree 3 > dim: zero for any cochain.
    gen::Gen g(5);
    const Representation ad = adjoint_rep(aff);
    const VectorCochain eta = random_cochain(g, 1, 2, 2);
    CHECK(coboundary_vec(ad, 0, coboundary_vec(ad, 0, eta)).is_zero());
}

TEST_CASE("check_d_squared_vec refuses a non-representation")
{
    const HomLieAlgebra aff = from_lie(lie_aff2(), diag({1, 2}));
    const Representation bad(aff, 2, adjoint_rep(aff).rho(), QMatrix::identity(2));
    const Report r = check_d_squared_vec(bad, 0, 2);
    REQUIRE_FALSE(r.passed());
    CHECK(r.first_failure()->name == "is_representation");
}

TEST_CASE("yau_twist examples")
{
    const auto ab = yau_twist(lie_abelian(3), diag({2, 3, 5}));
    REQUIRE(ab.algebra);
    CHECK(ab.algebra->structure_constants() == lie_abelian(3).c);

    const auto aff = yau_twist(lie_aff2(), diag({1, 2}));
    REQUIRE(aff.algebra);
    CHECK(aff.algebra->bracket_basis(0, 1) == vec({0, 2}));
    CHECK(check_hom_jacobi(*aff.algebra).passed());
    CHECK(check_alpha_morphism(*aff.algebra).passed());

    const auto sl = yau_twist(lie_sl2(), QMatrix::identity(3));
    REQUIRE(sl.algebra);
    CHECK(sl.algebra->structure_constants() == lie_sl2().c);

    // diag(2,2) is not an automorphism of aff2.
    const auto bad = yau_twist(lie_aff2(), diag({2, 2}));
    CHECK_FALSE(bad.algebra);
    CHECK_FALSE(bad.report.passed());
}

TEST_CASE("adjoint_rep examples")
{
    const HomLieAlgebra ab = from_lie(lie_abelian(2), diag({3, 1}));
    const Representation ad = adjoint_rep(ab);
    for (const QMatrix &m : ad.rho()) {
        CHECK(m.is_zero());
    }
    CHECK(check_representation(adjoint_rep(from_lie(lie_h3(), QMatrix::identity(3)))).passed());
    CHECK_THROWS_AS(adjoint_rep(from_lie(lie_aff2(), diag({1, 0}))), PreconditionError);
}

TEST_CASE("coboundary_vec is linear in eta")
{
    gen::Gen g(6);
    for (const auto &named : homlie_battery(6)) {
        const Representation &r = named.rep;
        const std::size_t n = r.algebra().dim();
        for (std::size_t k = 0; k <= std::min<std::size_t>(n, 2); ++k) {
            const VectorCochain a = random_cochain(g, k, n, r.dimV());
            const VectorCochain b = random_cochain(g, k, n, r.dimV());
            const Rational p = g.rational(), q = g.rational();
            for (int s = 0; s <= 2; ++s) {
                CHECK(coboundary_vec(r, s, p * a + q * b)
                      == p * coboundary_vec(r, s, a) + q * coboundary_vec(r, s, b));
            }
        }
    }
}

TEST_CASE("battery: representations pass and d^s squares to zero")
{
    const auto battery = homlie_battery(7);
    CHECK(battery.size() >= 20);
    for (const auto &named : battery) {
        INFO(named.name);
        const Representation &r = named.rep;
        CHECK(check_hom_jacobi(r.algebra()).passed());
        CHECK(check_alpha_morphism(r.algebra()).passed());
        CHECK(check_representation(r).passed());
        for (int s = 0; s <= 2; ++s) {
            CHECK(check_d_squared_vec(r, s, static_cast<int>(r.algebra().dim())).passed());
        }
    }
}

TEST_CASE("untwisted d^0 is the classical Chevalley-Eilenberg differential on h3")
{
    const LieAlgebraData h3 = lie_h3();
    const HomLieAlgebra g = from_lie(h3, QMatrix::identity(3));
    gen::Gen rng(8);
    const std::vector<Representation> reps = {trivial_rep(g, 1, QMatrix::identity(1)),
                                              trivial_rep(g, 2, QMatrix::identity(2)),
                                              adjoint_rep(g)};
    for (const Representation &r : reps) {
        for (std::size_t k = 0; k <= 2; ++k) {
            for (int t = 0; t < 5; ++t) {
                const VectorCochain eta = random_cochain(rng, k, 3, r.dimV());
                const VectorCochain ours = coboundary_vec(r, 0, eta);
                const Values oracle = ce_differential(h3, r.rho(), r.dimV(), eta.values(), k);
                for (const auto &tuple : increasing_tuples(3, k + 1)) {
                    CHECK(ours.at(tuple) == ce_at(oracle, tuple, r.dimV()));
                }
            }
        }
    }
}
