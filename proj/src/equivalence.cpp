#include <homcalc/equivalence.hpp>
#include <homcalc/errors.hpp>

#include <algorithm>

namespace homcalc
{

namespace
{

/// Folds `from` into `into`: instance counts add, the first failure wins.
void absorb(CheckItem &into, CheckItem from, const Json &context)
{
    into.instances += from.instances;
    if (!from.passed && into.passed) {
        into.passed = false;
        into.witness = std::move(from.witness);
        for (const auto &[key, value] : context.items()) {
            into.witness[key] = value;
        }
    }
}

std::string label(Variant v, const char *roman, const char *arabic, const char *what)
{
    return std::string(v == Variant::A ? roman : arabic) + " " + what;
}

int max_generator_degree(const CheckConfig &config)
{
    return std::clamp(config.max_cochain_degree, 0, 2);
}

} // namespace

FamilyResult build_family(AlgebroidPtr ab, const CheckConfig &config)
{
    FamilyResult result;
    result.report = Report("differential family");
    result.report.set_config(config.to_json());
    const Report axioms = check_axioms(*ab, config);
    result.report.append(axioms, "source ");
    if (axioms.passed()) {
        result.family.emplace(std::move(ab));
    }
    return result;
}

Report check_theorem_conditions(const DifferentialFamily &fam, Variant variant,
                                const CheckConfig &config)
{
    const CochainContext &ctx = fam.context();
    const HomAlgebroid &ab = fam.algebroid();
    Report report("theorem conditions (variant " + to_string(variant) + ")");
    Json cfg = config.to_json();
    cfg["variant"] = to_string(variant);
    report.set_config(cfg);

    const ProbeSet probes = make_probes(ab, config);
    const int max_deg = max_generator_degree(config);
    std::vector<std::vector<Cochain>> gens;
    for (int k = 0; k <= max_deg; ++k) {
        gens.push_back(builtin_cochains(ab, static_cast<std::size_t>(k)));
    }

    CheckItem squared{label(variant, "(i)", "1)", "d_squared")};
    CheckItem leibniz{label(variant, "(ii)", "2)", "graded_leibniz")};
    CheckItem commute{label(variant, "(iii)", "3)", "commutation")};
    for (int s = config.s_min; s <= config.s_max; ++s) {
        for (int k = 0; k <= max_deg; ++k) {
            for (const auto &c : gens[k]) {
                absorb(squared,
                       check_cochains_equal(ctx, Cochain::d(s, Cochain::d(s, c)),
                                            Cochain::zero(c.degree() + 2), probes, config, ""),
                       Json{{"s", s}});
                absorb(commute,
                       check_cochains_equal(ctx, Cochain::alpha_star(Cochain::d(s, c)),
                                            Cochain::d(s, Cochain::alpha_star(c)), probes, config,
                                            ""),
                       Json{{"s", s}, {"identity", "alpha* d = d alpha*"}});
                absorb(commute,
                       check_cochains_equal(ctx, Cochain::phi_bar(Cochain::d(s, c)),
                                            Cochain::d(s + 1, Cochain::phi_bar(c)), probes,
                                            config, ""),
                       Json{{"s", s}, {"identity", "phibar d^s = d^(s+1) phibar"}});
            }
        }
        for (int k = 0; k <= max_deg; ++k) {
            for (int l = 0; l <= max_deg; ++l) {
                for (const auto &a : gens[k]) {
                    for (const auto &b : gens[l]) {
                        Report r = check_leibniz(ctx, a, b, s, config);
                        absorb(leibniz, r.items().front(), Json{{"k", k}, {"l", l}});
                    }
                }
            }
        }
    }
    report.add(std::move(squared));
    report.add(std::move(leibniz));
    report.add(std::move(commute));
    report.add(check_linearity_item(ctx, variant == Variant::A ? Linearity::iv : Linearity::four,
                                    config,
                                    label(variant, "(iv)", "4)", "function_linearity")));
    report.add(check_linearity_item(ctx, variant == Variant::A ? Linearity::v : Linearity::five,
                                    config,
                                    label(variant, "(v)", "5)", "form_twisted_linearity")));
    return report;
}

AnchorResult reconstruct_anchor(const DifferentialFamily &fam, Variant variant,
                                const CheckConfig &config)
{
    const HomAlgebroid &ab = fam.algebroid();
    const BaseGeometry &base = ab.base();
    AnchorResult result;
    result.report = Report("anchor reconstruction (variant " + to_string(variant) + ")");
    result.report.set_config(config.to_json());
    CheckItem pre = check_linearity_item(
        fam.context(), variant == Variant::A ? Linearity::iv : Linearity::four, config,
        label(variant, "(iv)", "4)", "function_linearity"));
    const bool ok = pre.passed;
    result.report.add(std::move(pre));
    if (!ok) {
        return result;
    }
    PolyMatrix anchor(ab.rank());
    for (std::size_t i = 0; i < ab.rank(); ++i) {
        const Section e = ab.basis(i);
        for (std::size_t j = 0; j < base.num_variables(); ++j) {
            Poly value; // rho(e_i)(x_j)
            if (variant == Variant::A) {
                value = base.phi(1, fam.evaluate(0, Cochain::function(base.variable(j)),
                                                 std::span<const Section>(&e, 1)));
            } else {
                value = fam.evaluate(1, Cochain::function(base.phi(1, base.variable(j))),
                                     std::span<const Section>(&e, 1));
            }
            // rho(e_i)(x_j) = phi*(a_ij) for twist-1 anchors.
            anchor[i].push_back(base.phi(1, value));
        }
    }
    result.report.add_pass("anchor_read_off", ab.rank() * base.num_variables());
    result.anchor = std::move(anchor);
    return result;
}

BracketResult reconstruct_bracket(const DifferentialFamily &fam, Variant variant,
                                  const PolyMatrix &anchor)
{
    const HomAlgebroid &ab = fam.algebroid();
    const BaseGeometry &base = ab.base();
    const std::size_t r = ab.rank();
    BracketResult result;
    result.report = Report("bracket reconstruction (variant " + to_string(variant) + ")");
    if (anchor.size() != r) {
        throw StructureError("reconstruct_bracket: anchor has the wrong number of rows");
    }
    const HomAlgebroid rebuilt =
        ab.with_anchor(make_anchor(ab.base_ptr(), anchor)).with_variant(variant);
    auto rho = [&](std::size_t i, const Poly &f) {
        return apply_anchor(rebuilt, rebuilt.basis(i), f);
    };
    const int s = variant == Variant::A ? 0 : 1;

    SectionMatrix bracket(r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            std::vector<Section> args{ab.basis(i), ab.basis(j)};
            std::vector<Poly> coeffs;
            for (std::size_t k = 0; k < r; ++k) {
                const Poly xi_aj = ab.alpha_sf()[j][k];
                const Poly xi_ai = ab.alpha_sf()[i][k];
                const Poly d_xi = fam.evaluate(s, Cochain::dual(base, k), args);
                Poly value;
                if (variant == Variant::A) {
                    value = rho(i, base.phi(1, xi_aj)) - rho(j, base.phi(1, xi_ai)) - d_xi;
                } else {
                    value = base.phi(1, rho(i, xi_aj)) - base.phi(1, rho(j, xi_ai)) - d_xi;
                }
                coeffs.push_back(std::move(value));
            }
            bracket[i].emplace_back(std::move(coeffs));
        }
    }
    CheckAccumulator anti("reconstructed_bracket_antisymmetric");
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            const Section sum = bracket[i][j] + bracket[j][i];
            anti.record(sum.is_zero(), [&] {
                return Json{{"pair", Json::array({i + 1, j + 1})}, {"residual", sum.to_string()}};
            });
        }
    }
    result.report.add(std::move(anti).finish());
    result.bracket = std::move(bracket);
    return result;
}

RoundTripResult round_trip(const HomAlgebroid &ab, const CheckConfig &config)
{
    RoundTripResult result;
    Report &report = result.report;
    report = Report("round trip (variant " + to_string(ab.variant()) + ")");
    report.set_config(config.to_json());

    auto fam = build_family(std::make_shared<const HomAlgebroid>(ab), config);
    if (!fam.family) {
        report.append(fam.report);
        return result;
    }
    report.add_pass("source_axioms");
    const Variant v = ab.variant();
    AnchorResult anchor = reconstruct_anchor(*fam.family, v, config);
    report.append(anchor.report);
    if (!anchor.anchor) {
        return result;
    }
    BracketResult br = reconstruct_bracket(*fam.family, v, *anchor.anchor);
    report.append(br.report);

    CheckAccumulator anchor_eq("anchor_matches");
    const PolyMatrix original = ab.anchor_matrix();
    for (std::size_t i = 0; i < ab.rank(); ++i) {
        for (std::size_t j = 0; j < ab.base().num_variables(); ++j) {
            const Poly &want = original[i][j];
            const Poly &got = (*anchor.anchor)[i][j];
            anchor_eq.record(want == got, [&] {
                return Json{{"entry", Json::array({i + 1, j + 1})},
                            {"expected", want.to_string()},
                            {"reconstructed", got.to_string()}};
            });
        }
    }
    report.add(std::move(anchor_eq).finish());
    CheckAccumulator bracket_eq("bracket_matches");
    for (std::size_t i = 0; i < ab.rank(); ++i) {
        for (std::size_t j = 0; j < ab.rank(); ++j) {
            const Section &want = ab.bracket_sf()[i][j];
            const Section &got = (*br.bracket)[i][j];
            bracket_eq.record(want == got, [&] {
                return Json{{"pair", Json::array({i + 1, j + 1})},
                            {"expected", want.to_string()},
                            {"reconstructed", got.to_string()}};
            });
        }
    }
    report.add(std::move(bracket_eq).finish());

    HomAlgebroid rebuilt(ab.base_ptr(), ab.rank(), *br.bracket,
                         make_anchor(ab.base_ptr(), *anchor.anchor), ab.alpha_sf(), v);
    report.append(check_axioms(rebuilt, config), "rebuilt ");
    const ProbeSet probes = make_probes(rebuilt, config);
    report.add(check_rep_alpha(rebuilt, probes, "identity rep_alpha_phi"));
    report.add(check_section_alpha_morphism(rebuilt, probes, "identity alpha_morphism"));
    report.add(check_rep_bracket(rebuilt, probes, "identity rep_bracket"));
    report.add(check_hom_leibniz(rebuilt, probes, "identity hom_leibniz"));
    report.add(check_section_hom_jacobi(rebuilt, probes, "identity hom_jacobi"));
    result.reconstruction = std::move(rebuilt);
    return result;
}

Poly poly_determinant(const BaseGeometry &base, const PolyMatrix &m)
{
    const std::size_t n = m.size();
    if (n == 0) {
        return base.constant(Rational(1));
    }
    if (n == 1) {
        return m[0][0];
    }
    Poly det = base.zero();
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) {
            continue;
        }
        PolyMatrix minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Poly> row;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != c) {
                    row.push_back(m[r][k]);
                }
            }
            minor.push_back(std::move(row));
        }
        const Poly term = m[0][c] * poly_determinant(base, minor);
        if (c % 2 == 0) {
            det += term;
        } else {
            det -= term;
        }
    }
    return det;
}

namespace
{

/// Inverse of a polynomial matrix whose determinant is a nonzero constant.
std::optional<PolyMatrix> poly_inverse(const BaseGeometry &base, const PolyMatrix &m, Poly &det)
{
    const std::size_t n = m.size();
    det = poly_determinant(base, m);
    if (det.is_zero() || !det.is_constant()) {
        return std::nullopt;
    }
    const Rational inv = det.constant_term().inverse();
    PolyMatrix out(n, std::vector<Poly>(n, base.zero()));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // adj[i][j] = (-1)^{i+j} minor(j, i)
            PolyMatrix minor;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == j) {
                    continue;
                }
                std::vector<Poly> row;
                for (std::size_t c = 0; c < n; ++c) {
                    if (c != i) {
                        row.push_back(m[r][c]);
                    }
                }
                minor.push_back(std::move(row));
            }
            Poly cof = poly_determinant(base, minor) * inv;
            out[i][j] = (i + j) % 2 == 0 ? cof : -cof;
        }
    }
    return out;
}

} // namespace

ConvertResult convert(const HomAlgebroid &ab, Variant target, const CheckConfig &config)
{
    ConvertResult result;
    Report &report = result.report;
    report = Report("convert " + to_string(ab.variant()) + " -> " + to_string(target));
    Json cfg = config.to_json();
    cfg["target"] = to_string(target);
    report.set_config(cfg);

    const Report source = check_axioms(ab, config);
    if (!source.passed()) {
        report.append(source, "source ");
        return result;
    }
    report.add_pass("source_axioms");
    if (target == ab.variant()) {
        report.add_pass("same_variant");
        result.algebroid = ab;
        return result;
    }

    const BaseGeometry &base = ab.base();
    const std::size_t r = ab.rank();
    const std::size_t n = base.num_variables();
    Poly det;
    const auto inverse = poly_inverse(base, ab.alpha_sf(), det);
    if (!inverse) {
        report.add_fail("alpha_invertible",
                        Json{{"determinant", det.to_string()},
                             {"reason", "alpha needs a nonzero constant determinant"}});
        return result;
    }
    report.add_pass("alpha_invertible");

    const PolyMatrix a = ab.anchor_matrix();
    PolyMatrix b(r, std::vector<Poly>(n, base.zero()));
    // rho(sum_i g_i e_i) under the source scaling law, written back in the
    // coefficient convention: the phi* on g_i moves onto the stored row.
    const PolyMatrix &mix = ab.variant() == Variant::A ? *inverse : ab.alpha_sf();
    for (std::size_t k = 0; k < r; ++k) {
        for (std::size_t i = 0; i < r; ++i) {
            if (mix[k][i].is_zero()) {
                continue;
            }
            const Poly g = base.phi(1, mix[k][i]);
            for (std::size_t j = 0; j < n; ++j) {
                b[k][j] += g * a[i][j];
            }
        }
    }
    HomAlgebroid converted(ab.base_ptr(), r, ab.bracket_sf(), make_anchor(ab.base_ptr(), b),
                           ab.alpha_sf(), target);
    const Report axioms = check_axioms(converted, config);
    report.append(axioms, "target ");
    if (!axioms.passed()) {
        return result;
    }
    DifferentialFamily fam(std::make_shared<const HomAlgebroid>(converted));
    const Report conditions = check_theorem_conditions(fam, target, config);
    report.append(conditions, "target ");
    if (!conditions.passed()) {
        return result;
    }
    result.algebroid = std::move(converted);
    return result;
}

} // namespace homcalc
