#include <homcalc/cochain.hpp>
#include <homcalc/errors.hpp>

#include <algorithm>
#include <numeric>

namespace homcalc
{

namespace
{

int permutation_sign(const std::vector<std::size_t> &p)
{
    int sign = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            if (p[i] > p[j]) {
                sign = -sign;
            }
        }
    }
    return sign;
}

/// Sorts t in place; returns the sign of the sorting permutation, or 0 on a
/// repeated index.
int sort_with_sign(std::vector<std::size_t> &t)
{
    const int sign = permutation_sign(t);
    std::sort(t.begin(), t.end());
    if (std::adjacent_find(t.begin(), t.end()) != t.end()) {
        return 0;
    }
    return sign;
}

std::shared_ptr<CochainNode> make_node(CochainKind kind, std::size_t degree)
{
    auto n = std::make_shared<CochainNode>();
    n->kind = kind;
    n->degree = degree;
    return n;
}

} // namespace

Cochain Cochain::basis(std::size_t degree, int twist, const std::map<Tuple, Poly> &components)
{
    if (degree == 0) {
        throw StructureError("basis cochain must have degree >= 1; use a function for degree 0");
    }
    if (twist != 0 && twist != 1) {
        throw StructureError("basis cochain twist must be 0 or 1");
    }
    auto n = make_node(CochainKind::basis, degree);
    n->twist = twist;
    for (const auto &[tuple, value] : components) {
        if (tuple.size() != degree) {
            throw StructureError("basis cochain component has the wrong number of indices");
        }
        Tuple sorted = tuple;
        const int sign = sort_with_sign(sorted);
        if (sign == 0) {
            throw StructureError("basis cochain component repeats an index");
        }
        Poly v = sign > 0 ? value : -value;
        auto it = n->components.find(sorted);
        if (it == n->components.end()) {
            if (!v.is_zero()) {
                n->components.emplace(std::move(sorted), std::move(v));
            }
        } else {
            it->second += v;
            if (it->second.is_zero()) {
                n->components.erase(it);
            }
        }
    }
    return Cochain(std::move(n));
}

Cochain Cochain::dual(const BaseGeometry &base, std::size_t i, int twist)
{
    return basis(1, twist, {{Tuple{i}, base.constant(Rational(1))}});
}

Cochain Cochain::function(Poly f)
{
    auto n = make_node(CochainKind::function, 0);
    n->f = std::move(f);
    return Cochain(std::move(n));
}

Cochain Cochain::wedge(Cochain a, Cochain b)
{
    auto n = make_node(CochainKind::wedge, a.degree() + b.degree());
    n->children = {std::move(a), std::move(b)};
    return Cochain(std::move(n));
}

Cochain Cochain::d(int s, Cochain c)
{
    auto n = make_node(CochainKind::d, c.degree() + 1);
    n->s = s;
    n->children = {std::move(c)};
    return Cochain(std::move(n));
}

Cochain Cochain::alpha_star(Cochain c)
{
    auto n = make_node(CochainKind::alpha_star, c.degree());
    n->children = {std::move(c)};
    return Cochain(std::move(n));
}

Cochain Cochain::phi_bar(Cochain c)
{
    auto n = make_node(CochainKind::phi_bar, c.degree());
    n->children = {std::move(c)};
    return Cochain(std::move(n));
}

Cochain Cochain::sum(std::vector<std::pair<Rational, Cochain>> terms, std::size_t degree)
{
    if (!terms.empty()) {
        degree = terms.front().second.degree();
    }
    auto n = make_node(CochainKind::sum, degree);
    for (auto &[w, c] : terms) {
        if (c.degree() != degree) {
            throw StructureError("sum of cochains of different degrees");
        }
        n->weights.push_back(w);
        n->children.push_back(std::move(c));
    }
    return Cochain(std::move(n));
}

CochainKind Cochain::kind() const
{
    return m_node->kind;
}

std::size_t Cochain::degree() const
{
    return m_node->degree;
}

std::string Cochain::to_string() const
{
    const CochainNode &n = *m_node;
    switch (n.kind) {
    case CochainKind::function:
        return "(" + n.f.to_string() + ")";
    case CochainKind::basis: {
        std::string out;
        for (const auto &[tuple, value] : n.components) {
            std::string term = "(" + value.to_string() + ")*e";
            for (std::size_t k = 0; k < tuple.size(); ++k) {
                term += (k ? "," : "") + std::to_string(tuple[k] + 1);
            }
            term += "^*";
            out += out.empty() ? term : " + " + term;
        }
        if (out.empty()) {
            out = "0";
        }
        return "[" + out + (n.twist ? "]_t" : "]");
    }
    case CochainKind::wedge:
        return "(" + n.children[0].to_string() + " ^ " + n.children[1].to_string() + ")";
    case CochainKind::d:
        return "d" + std::to_string(n.s) + n.children[0].to_string();
    case CochainKind::alpha_star:
        return "alpha*" + n.children[0].to_string();
    case CochainKind::phi_bar:
        return "phibar" + n.children[0].to_string();
    case CochainKind::sum: {
        if (n.children.empty()) {
            return "0";
        }
        std::string out;
        for (std::size_t i = 0; i < n.children.size(); ++i) {
            out += (i ? " + " : "") + n.weights[i].to_string() + "*" + n.children[i].to_string();
        }
        return "(" + out + ")";
    }
    }
    return "?";
}

// --------------------------------------------------------------- evaluation

CochainContext::CochainContext(AlgebroidPtr ab) : m_ab(std::move(ab))
{
    if (!m_ab) {
        throw StructureError("CochainContext: null algebroid");
    }
    if (!m_ab->base().is_involutive()) {
        throw PreconditionError("cochain calculus needs an involutive phi* (phi* o phi* = id)");
    }
}

Poly CochainContext::evaluate(const Cochain &c, std::span<const Section> args) const
{
    if (args.size() != c.degree()) {
        throw StructureError("cochain of degree " + std::to_string(c.degree()) + " applied to "
                             + std::to_string(args.size()) + " sections");
    }
    for (const auto &x : args) {
        if (x.rank() != m_ab->rank()) {
            throw StructureError("section rank does not match the algebroid");
        }
    }
    return eval(c.node(), std::vector<Section>(args.begin(), args.end()));
}

Poly CochainContext::eval(const CochainNode &n, const std::vector<Section> &args) const
{
    const HomAlgebroid &ab = *m_ab;
    const BaseGeometry &base = ab.base();
    switch (n.kind) {
    case CochainKind::function:
        if (n.f.variables() != *base.vars()) {
            throw StructureError("function cochain is not over the base variables");
        }
        return n.f;

    case CochainKind::basis: {
        const std::size_t k = n.degree;
        Poly total = base.zero();
        std::vector<std::size_t> perm(k);
        for (const auto &[tuple, value] : n.components) {
            if (tuple.back() >= ab.rank()) {
                throw StructureError("basis cochain index exceeds the rank");
            }
            // det of M[m][p] = (phi*)^t(args[m][tuple[p]])
            std::vector<std::vector<Poly>> m(k);
            for (std::size_t a = 0; a < k; ++a) {
                for (std::size_t p = 0; p < k; ++p) {
                    m[a].push_back(base.phi(n.twist, args[a][tuple[p]]));
                }
            }
            std::iota(perm.begin(), perm.end(), 0);
            Poly det = base.zero();
            do {
                Poly term = base.constant(Rational(permutation_sign(perm)));
                for (std::size_t a = 0; a < k && !term.is_zero(); ++a) {
                    term *= m[a][perm[a]];
                }
                det += term;
            } while (std::next_permutation(perm.begin(), perm.end()));
            if (!det.is_zero()) {
                total += value * det;
            }
        }
        return total;
    }

    case CochainKind::wedge: {
        const std::size_t k = n.children[0].degree();
        const std::size_t total_args = args.size();
        // Shuffles: choose the k positions that feed the left factor.
        std::vector<bool> pick(total_args, false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
        Poly out = base.zero();
        do {
            std::vector<Section> left, right;
            std::vector<std::size_t> order;
            for (std::size_t i = 0; i < total_args; ++i) {
                if (pick[i]) {
                    left.push_back(args[i]);
                    order.push_back(i);
                }
            }
            for (std::size_t i = 0; i < total_args; ++i) {
                if (!pick[i]) {
                    right.push_back(args[i]);
                    order.push_back(i);
                }
            }
            const Poly a = eval(n.children[0].node(), left);
            if (a.is_zero()) {
                continue;
            }
            const Poly b = eval(n.children[1].node(), right);
            if (b.is_zero()) {
                continue;
            }
            Poly term = a * b;
            if (permutation_sign(order) < 0) {
                out -= term;
            } else {
                out += term;
            }
        } while (std::prev_permutation(pick.begin(), pick.end()));
        return out;
    }

    case CochainKind::d: {
        const CochainNode &child = n.children[0].node();
        const int k = static_cast<int>(child.degree);
        const int s = n.s;
        const std::size_t m = args.size();
        std::vector<Section> alpha_args;
        alpha_args.reserve(m);
        for (const auto &x : args) {
            alpha_args.push_back(apply_alpha(ab, x));
        }
        Poly out = base.zero();
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<Section> rest;
            for (std::size_t j = 0; j < m; ++j) {
                if (j != i) {
                    rest.push_back(alpha_args[j]);
                }
            }
            const Poly inner = base.phi(-k - 2 - s, eval(child, rest));
            const Poly term = base.phi(k + 1 + s, apply_anchor(ab, args[i], inner));
            if (i % 2 == 0) {
                out += term;
            } else {
                out -= term;
            }
        }
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                std::vector<Section> rest{bracket(ab, args[i], args[j])};
                for (std::size_t l = 0; l < m; ++l) {
                    if (l != i && l != j) {
                        rest.push_back(alpha_args[l]);
                    }
                }
                const Poly term = eval(child, rest);
                if ((i + j) % 2 == 0) {
                    out += term;
                } else {
                    out -= term;
                }
            }
        }
        return out;
    }

    case CochainKind::alpha_star: {
        std::vector<Section> moved;
        moved.reserve(args.size());
        for (const auto &x : args) {
            moved.push_back(apply_alpha(ab, x));
        }
        return base.phi(1, eval(n.children[0].node(), moved));
    }

    case CochainKind::phi_bar:
        return base.phi(1, eval(n.children[0].node(), args));

    case CochainKind::sum: {
        Poly out = base.zero();
        for (std::size_t i = 0; i < n.children.size(); ++i) {
            if (n.weights[i].is_zero()) {
                continue;
            }
            out += eval(n.children[i].node(), args) * n.weights[i];
        }
        return out;
    }
    }
    throw StructureError("unknown cochain node");
}

// ------------------------------------------------------------------ checks

std::vector<std::vector<Section>> decisive_tuples(const ProbeSet &probes, std::size_t k,
                                                  const CheckConfig &config)
{
    constexpr std::size_t structured_cap = 30;
    std::vector<std::vector<Section>> out;
    if (k == 0) {
        out.emplace_back();
        return out;
    }
    const auto &s = probes.structured;
    if (s.size() >= k) {
        std::vector<bool> pick(s.size(), false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
        do {
            std::vector<Section> t;
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (pick[i]) {
                    t.push_back(s[i]);
                }
            }
            out.push_back(std::move(t));
        } while (out.size() < structured_cap && std::prev_permutation(pick.begin(), pick.end()));
    }
    const auto &r = probes.random;
    const std::size_t trials = std::min<std::size_t>(r.size(), static_cast<std::size_t>(
                                                                   std::max(config.trials, 0)));
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<Section> tuple;
        for (std::size_t m = 0; m < k; ++m) {
            tuple.push_back(r[(t + m) % r.size()]);
        }
        // Every other tuple leads with a structured probe.
        if (t % 2 == 1 && !s.empty()) {
            tuple[0] = s[(t / 2) % s.size()];
        }
        out.push_back(std::move(tuple));
    }
    return out;
}

namespace
{

Json sections_json(const std::vector<Section> &args)
{
    Json a = Json::array();
    for (const auto &x : args) {
        a.push_back(x.to_string());
    }
    return a;
}

} // namespace

CheckItem check_cochains_equal(const CochainContext &ctx, const Cochain &lhs, const Cochain &rhs,
                               const ProbeSet &probes, const CheckConfig &config,
                               std::string name)
{
    if (lhs.degree() != rhs.degree()) {
        throw StructureError("comparing cochains of different degrees");
    }
    CheckAccumulator acc(std::move(name));
    for (const auto &args : decisive_tuples(probes, lhs.degree(), config)) {
        const Poly l = ctx.evaluate(lhs, args);
        const Poly r = ctx.evaluate(rhs, args);
        acc.record(l == r, [&] {
            return Json{{"cochain", lhs.to_string()},
                        {"args", sections_json(args)},
                        {"lhs", l.to_string()},
                        {"rhs", r.to_string()}};
        });
    }
    return std::move(acc).finish();
}

Report check_leibniz(const CochainContext &ctx, const Cochain &a, const Cochain &b, int s,
                     const CheckConfig &config)
{
    Report report("graded Leibniz rule for d" + std::to_string(s));
    report.set_config(config.to_json());
    const int k = static_cast<int>(a.degree());
    const int l = static_cast<int>(b.degree());
    const Cochain lhs = Cochain::d(s, Cochain::wedge(a, b));
    const Cochain rhs = Cochain::sum(
        {{Rational(1),
          Cochain::wedge(Cochain::d(s + l, a), Cochain::phi_bar(Cochain::alpha_star(b)))},
         {Rational(k % 2 == 0 ? 1 : -1),
          Cochain::wedge(Cochain::phi_bar(Cochain::alpha_star(a)), Cochain::d(s + k, b))}});
    const ProbeSet probes = make_probes(ctx.algebroid(), config);
    CheckItem item = check_cochains_equal(ctx, lhs, rhs, probes, config, "leibniz");
    if (!item.passed) {
        item.witness["a"] = a.to_string();
        item.witness["b"] = b.to_string();
        item.witness["s"] = s;
    }
    report.add(std::move(item));
    return report;
}

Report check_commutation(const CochainContext &ctx, const Cochain &c, int s,
                         const CheckConfig &config)
{
    Report report("commutation of d" + std::to_string(s) + " with alpha* and phibar");
    report.set_config(config.to_json());
    const ProbeSet probes = make_probes(ctx.algebroid(), config);
    report.add(check_cochains_equal(ctx, Cochain::alpha_star(Cochain::d(s, c)),
                                    Cochain::d(s, Cochain::alpha_star(c)), probes, config,
                                    "alpha_star_commutes"));
    report.add(check_cochains_equal(ctx, Cochain::phi_bar(Cochain::d(s, c)),
                                    Cochain::d(s + 1, Cochain::phi_bar(c)), probes, config,
                                    "phi_bar_shifts_s"));
    return report;
}

Report check_d_squared(const CochainContext &ctx, const Cochain &c, int s,
                       const CheckConfig &config)
{
    Report report("d" + std::to_string(s) + " o d" + std::to_string(s) + " = 0");
    report.set_config(config.to_json());
    const ProbeSet probes = make_probes(ctx.algebroid(), config);
    report.add(check_cochains_equal(ctx, Cochain::d(s, Cochain::d(s, c)),
                                    Cochain::zero(c.degree() + 2), probes, config, "d_squared"));
    return report;
}

Linearity parse_linearity(std::string_view text)
{
    if (text == "iv") {
        return Linearity::iv;
    }
    if (text == "v") {
        return Linearity::v;
    }
    if (text == "4") {
        return Linearity::four;
    }
    if (text == "5") {
        return Linearity::five;
    }
    throw ParseError("linearity condition must be one of iv, v, 4, 5", 0);
}

std::string to_string(Linearity which)
{
    switch (which) {
    case Linearity::iv:
        return "iv";
    case Linearity::v:
        return "v";
    case Linearity::four:
        return "4";
    case Linearity::five:
        return "5";
    }
    return "?";
}

CheckItem check_linearity_item(const CochainContext &ctx, Linearity which,
                               const CheckConfig &config, std::string name)
{
    const HomAlgebroid &ab = ctx.algebroid();
    const BaseGeometry &base = ab.base();
    const int s = (which == Linearity::iv || which == Linearity::v) ? 0 : 1;
    const ProbeSet probes = make_probes(ab, config);
    CheckAccumulator acc(std::move(name));

    if (which == Linearity::iv || which == Linearity::four) {
        // d f(g X) = g d f(X)
        for (const auto &f : probes.functions) {
            const Cochain df = Cochain::d(s, Cochain::function(f));
            for (std::size_t i = 0; i < ab.rank(); ++i) {
                const Section x = ab.basis(i);
                const Poly at_x = ctx.evaluate(df, std::span<const Section>(&x, 1));
                for (const auto &g : probes.functions) {
                    const Section gx = g * x;
                    const Poly lhs = ctx.evaluate(df, std::span<const Section>(&gx, 1));
                    const Poly rhs = g * at_x;
                    acc.record(lhs == rhs, [&] {
                        return Json{{"f", f.to_string()},
                                    {"g", g.to_string()},
                                    {"X", x.to_string()},
                                    {"d" + std::to_string(s) + "f(gX)", lhs.to_string()},
                                    {"g*d" + std::to_string(s) + "f(X)", rhs.to_string()},
                                    {"phi*(g)*d" + std::to_string(s) + "f(X)",
                                     (base.phi(1, g) * at_x).to_string()}};
                    });
                }
            }
        }
        return std::move(acc).finish();
    }

    // d xi(f X1, X2) = phi*(f) d xi(X1, X2)
    for (std::size_t c = 0; c < ab.rank(); ++c) {
        const Cochain dxi = Cochain::d(s, Cochain::dual(base, c));
        for (std::size_t i = 0; i < ab.rank(); ++i) {
            for (std::size_t j = 0; j < ab.rank(); ++j) {
                std::vector<Section> args{ab.basis(i), ab.basis(j)};
                const Poly plain = ctx.evaluate(dxi, args);
                for (const auto &f : probes.functions) {
                    std::vector<Section> scaled{f * ab.basis(i), ab.basis(j)};
                    const Poly lhs = ctx.evaluate(dxi, scaled);
                    const Poly rhs = base.phi(1, f) * plain;
                    acc.record(lhs == rhs, [&] {
                        return Json{{"xi", "e" + std::to_string(c + 1) + "^*"},
                                    {"f", f.to_string()},
                                    {"X1", args[0].to_string()},
                                    {"X2", args[1].to_string()},
                                    {"lhs", lhs.to_string()},
                                    {"rhs", rhs.to_string()}};
                    });
                }
            }
        }
    }
    return std::move(acc).finish();
}

Report check_linearity(const CochainContext &ctx, Linearity which, const CheckConfig &config)
{
    const bool for_a = which == Linearity::iv || which == Linearity::v;
    const Variant v = ctx.algebroid().variant();
    if (for_a != (v == Variant::A)) {
        throw PreconditionError("linearity condition " + to_string(which)
                                + " does not belong to variant " + homcalc::to_string(v));
    }
    Report report("linearity condition " + to_string(which));
    report.set_config(config.to_json());
    report.add(check_linearity_item(ctx, which, config, "linearity_" + to_string(which)));
    return report;
}

std::vector<Cochain> builtin_cochains(const HomAlgebroid &ab, std::size_t degree)
{
    const BaseGeometry &base = ab.base();
    const std::size_t n = base.num_variables();
    const std::size_t r = ab.rank();
    const Poly first = n > 0 ? base.variable(0) : base.constant(Rational(1));
    const Poly last = n > 0 ? base.variable(n - 1) : base.constant(Rational(2));
    switch (degree) {
    case 0:
        return {Cochain::function(first),
                Cochain::function((first + base.constant(Rational(1))) * last)};
    case 1:
        if (r == 0) {
            return {Cochain::zero(1)};
        }
        return {Cochain::dual(base, 0, 0), Cochain::basis(1, 1, {{{r - 1}, first}})};
    case 2: {
        if (r == 0) {
            return {Cochain::zero(2)};
        }
        std::vector<Cochain> out{
            Cochain::wedge(Cochain::dual(base, 0, 0), Cochain::dual(base, r - 1, 1))};
        if (r >= 2) {
            out.push_back(Cochain::basis(2, 0, {{{0, 1}, last}}));
        } else {
            out.push_back(Cochain::d(0, Cochain::dual(base, 0, 0)));
        }
        return out;
    }
    default:
        throw StructureError("builtin cochains exist for degrees 0, 1 and 2 only");
    }
}

} // namespace homcalc
