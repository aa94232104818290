#include <homcalc/errors.hpp>
#include <homcalc/homlie.hpp>

#include <algorithm>
#include <utility>

namespace homcalc
{

namespace
{

std::string basis_name(std::size_t i)
{
    return "e" + std::to_string(i + 1);
}

Json tuple_json(const std::vector<std::size_t> &t)
{
    Json out = Json::array();
    for (auto i : t) {
        out.push_back(basis_name(i));
    }
    return out;
}

/// Sorts `t` in place; returns the permutation sign, or 0 on a repeated index.
int sort_with_sign(std::vector<std::size_t> &t)
{
    int sign = 1;
    for (std::size_t i = 1; i < t.size(); ++i) {
        for (std::size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
            if (t[j - 1] == t[j]) {
                return 0;
            }
            std::swap(t[j - 1], t[j]);
            sign = -sign;
        }
    }
    return sign;
}

} // namespace

BracketTable zero_brackets(std::size_t dim)
{
    return BracketTable(dim, std::vector<QVector>(dim, zero_vector(dim)));
}

std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t n, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    if (k > n) {
        return out;
    }
    std::vector<std::size_t> t(k);
    for (std::size_t i = 0; i < k; ++i) {
        t[i] = i;
    }
    while (true) {
        out.push_back(t);
        std::size_t i = k;
        while (i > 0 && t[i - 1] == n - k + i - 1) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++t[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            t[j] = t[j - 1] + 1;
        }
    }
    return out;
}

HomLieAlgebra::HomLieAlgebra(std::size_t dim, BracketTable c, QMatrix alpha)
    : m_dim(dim), m_c(std::move(c)), m_alpha(std::move(alpha))
{
    if (m_c.size() != dim || m_alpha.rows() != dim || m_alpha.cols() != dim) {
        throw StructureError("HomLieAlgebra: shape mismatch");
    }
    for (const auto &row : m_c) {
        if (row.size() != dim) {
            throw StructureError("HomLieAlgebra: shape mismatch");
        }
        for (const auto &v : row) {
            if (v.size() != dim) {
                throw StructureError("HomLieAlgebra: shape mismatch");
            }
        }
    }
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            if (add(m_c[i][j], m_c[j][i]) != zero_vector(dim)) {
                throw PreconditionError("HomLieAlgebra: structure constants are not antisymmetric at ("
                                        + basis_name(i) + ", " + basis_name(j) + ")");
            }
        }
    }
}

QVector HomLieAlgebra::bracket(const QVector &u, const QVector &v) const
{
    if (u.size() != m_dim || v.size() != m_dim) {
        throw StructureError("HomLieAlgebra::bracket: dimension mismatch");
    }
    QVector out = zero_vector(m_dim);
    for (std::size_t i = 0; i < m_dim; ++i) {
        if (u[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < m_dim; ++j) {
            if (!v[j].is_zero()) {
                axpy(out, u[i] * v[j], m_c[i][j]);
            }
        }
    }
    return out;
}

Representation::Representation(HomLieAlgebra algebra, std::size_t dimV, std::vector<QMatrix> rho,
                               QMatrix beta)
    : m_algebra(std::move(algebra)), m_dimV(dimV), m_rho(std::move(rho)), m_beta(std::move(beta))
{
    if (m_rho.size() != m_algebra.dim()) {
        throw StructureError("Representation: need one rho matrix per basis element");
    }
    for (const auto &m : m_rho) {
        if (m.rows() != dimV || m.cols() != dimV) {
            throw StructureError("Representation: rho matrix has the wrong shape");
        }
    }
    if (m_beta.rows() != dimV || m_beta.cols() != dimV) {
        throw StructureError("Representation: beta has the wrong shape");
    }
    if (m_beta.determinant().is_zero()) {
        throw PreconditionError("Representation: beta is singular");
    }
}

QMatrix Representation::rho_of(const QVector &x) const
{
    QMatrix out(m_dimV, m_dimV);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!x[i].is_zero()) {
            out = out + x[i] * m_rho[i];
        }
    }
    return out;
}

VectorCochain::VectorCochain(std::size_t degree, std::size_t dim, std::size_t dimV)
    : m_degree(degree), m_dim(dim), m_dimV(dimV)
{
}

VectorCochain VectorCochain::basis(std::size_t dim, std::size_t dimV, Tuple tuple, QVector value)
{
    VectorCochain c(tuple.size(), dim, dimV);
    c.set(std::move(tuple), value);
    return c;
}

void VectorCochain::set(Tuple tuple, const QVector &value)
{
    if (tuple.size() != m_degree || value.size() != m_dimV) {
        throw StructureError("VectorCochain::set: arity or value size mismatch");
    }
    for (auto i : tuple) {
        if (i >= m_dim) {
            throw StructureError("VectorCochain::set: basis index out of range");
        }
    }
    const int sign = sort_with_sign(tuple);
    if (sign == 0) {
        throw StructureError("VectorCochain::set: repeated index in an alternating cochain");
    }
    QVector stored = scale(Rational(sign), value);
    if (homcalc::is_zero(stored)) {
        m_values.erase(tuple);
    } else {
        m_values[std::move(tuple)] = std::move(stored);
    }
}

QVector VectorCochain::at(Tuple tuple) const
{
    if (tuple.size() != m_degree) {
        throw StructureError("VectorCochain::at: arity mismatch");
    }
    const int sign = sort_with_sign(tuple);
    if (sign == 0) {
        return zero_vector(m_dimV);
    }
    const auto it = m_values.find(tuple);
    return it == m_values.end() ? zero_vector(m_dimV) : scale(Rational(sign), it->second);
}

QVector VectorCochain::evaluate(std::span<const QVector> args) const
{
    if (args.size() != m_degree) {
        throw StructureError("VectorCochain::evaluate: arity mismatch");
    }
    for (const auto &a : args) {
        if (a.size() != m_dim) {
            throw StructureError("VectorCochain::evaluate: argument dimension mismatch");
        }
    }
    QVector out = zero_vector(m_dimV);
    for (const auto &[tuple, value] : m_values) {
        // Coefficient of e_tuple in args[0] ^ ... ^ args[k-1].
        QMatrix minor(m_degree, m_degree);
        for (std::size_t a = 0; a < m_degree; ++a) {
            for (std::size_t b = 0; b < m_degree; ++b) {
                minor(a, b) = args[b][tuple[a]];
            }
        }
        axpy(out, minor.determinant(), value);
    }
    return out;
}

bool VectorCochain::is_zero() const
{
    return m_values.empty();
}

VectorCochain &VectorCochain::operator+=(const VectorCochain &other)
{
    if (other.m_degree != m_degree || other.m_dim != m_dim || other.m_dimV != m_dimV) {
        throw StructureError("VectorCochain: adding cochains of different shape");
    }
    for (const auto &[tuple, value] : other.m_values) {
        auto it = m_values.find(tuple);
        QVector sum = it == m_values.end() ? value : add(it->second, value);
        if (homcalc::is_zero(sum)) {
            if (it != m_values.end()) {
                m_values.erase(it);
            }
        } else {
            m_values[tuple] = std::move(sum);
        }
    }
    return *this;
}

VectorCochain operator*(const Rational &s, VectorCochain a)
{
    if (s.is_zero()) {
        a.m_values.clear();
        return a;
    }
    for (auto &[tuple, value] : a.m_values) {
        value = scale(s, value);
    }
    return a;
}

bool operator==(const VectorCochain &a, const VectorCochain &b)
{
    return a.m_degree == b.m_degree && a.m_dim == b.m_dim && a.m_dimV == b.m_dimV
           && a.m_values == b.m_values;
}

Report check_hom_jacobi(const HomLieAlgebra &g)
{
    Report report("hom_jacobi");
    // Antisymmetry is a constructor invariant; recorded so the report is
    // self-describing.
    report.add_pass("antisymmetry", g.dim() * g.dim());
    CheckAccumulator acc("hom_jacobi");
    const std::size_t n = g.dim();
    for (const auto &t : increasing_tuples(n, 3)) {
        const QVector x = unit_vector(n, t[0]);
        const QVector y = unit_vector(n, t[1]);
        const QVector z = unit_vector(n, t[2]);
        QVector sum = g.bracket(g.apply_alpha(x), g.bracket(y, z));
        sum = add(sum, g.bracket(g.apply_alpha(y), g.bracket(z, x)));
        sum = add(sum, g.bracket(g.apply_alpha(z), g.bracket(x, y)));
        acc.record(is_zero(sum),
                   [&] { return Json{{"triple", tuple_json(t)}, {"residual", to_string(sum)}}; });
    }
    report.add(std::move(acc).finish());
    return report;
}

Report check_alpha_morphism(const HomLieAlgebra &g)
{
    Report report("alpha_morphism");
    CheckAccumulator acc("alpha_morphism");
    const std::size_t n = g.dim();
    for (const auto &t : increasing_tuples(n, 2)) {
        const QVector lhs = g.apply_alpha(g.bracket_basis(t[0], t[1]));
        const QVector rhs =
            g.bracket(g.apply_alpha(unit_vector(n, t[0])), g.apply_alpha(unit_vector(n, t[1])));
        acc.record(lhs == rhs, [&] {
            return Json{{"pair", tuple_json(t)},
                        {"alpha_of_bracket", to_string(lhs)},
                        {"bracket_of_alpha", to_string(rhs)}};
        });
    }
    report.add(std::move(acc).finish());
    return report;
}

Report check_representation(const Representation &r)
{
    Report report("representation");
    const auto &g = r.algebra();
    const std::size_t n = g.dim();
    const QMatrix &beta = r.beta();

    CheckAccumulator axiom1("rho_alpha_beta");
    for (std::size_t i = 0; i < n; ++i) {
        const QVector x = unit_vector(n, i);
        const QMatrix lhs = r.rho_of(g.apply_alpha(x)) * beta;
        const QMatrix rhs = beta * r.rho()[i];
        axiom1.record(lhs == rhs, [&] {
            return Json{{"x", basis_name(i)}, {"residual", (lhs - rhs).to_strings()}};
        });
    }
    report.add(std::move(axiom1).finish());

    CheckAccumulator axiom2("rho_bracket");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const QVector x = unit_vector(n, i);
            const QVector y = unit_vector(n, j);
            const QMatrix lhs = r.rho_of(g.bracket_basis(i, j)) * beta;
            const QMatrix rhs = r.rho_of(g.apply_alpha(x)) * r.rho()[j]
                                - r.rho_of(g.apply_alpha(y)) * r.rho()[i];
            axiom2.record(lhs == rhs, [&] {
                return Json{{"x", basis_name(i)},
                            {"y", basis_name(j)},
                            {"residual", (lhs - rhs).to_strings()}};
            });
        }
    }
    report.add(std::move(axiom2).finish());
    return report;
}

VectorCochain coboundary_vec(const Representation &r, int s, const VectorCochain &eta)
{
    const auto &g = r.algebra();
    const std::size_t n = g.dim();
    if (eta.dim() != n || eta.dimV() != r.dimV()) {
        throw StructureError("coboundary_vec: cochain does not match the representation");
    }
    if (s < 0) {
        throw PreconditionError("coboundary_vec: s must be non-negative");
    }
    const std::size_t k = eta.degree();
    const int ki = static_cast<int>(k);
    VectorCochain out(k + 1, n, r.dimV());
    if (eta.is_zero() || k + 1 > n) {
        return out;
    }
    const QMatrix beta_pos = r.beta().pow(ki + 1 + s);
    const QMatrix beta_neg = r.beta().pow(-ki - 2 - s);

    std::vector<QVector> alpha_images(n);
    for (std::size_t i = 0; i < n; ++i) {
        alpha_images[i] = g.alpha().column(i);
    }

    for (const auto &tuple : increasing_tuples(n, k + 1)) {
        QVector value = zero_vector(r.dimV());
        std::vector<QVector> args;
        args.reserve(k);
        for (std::size_t i = 0; i <= k; ++i) {
            args.clear();
            for (std::size_t m = 0; m <= k; ++m) {
                if (m != i) {
                    args.push_back(alpha_images[tuple[m]]);
                }
            }
            const QVector inner = beta_neg.apply(eta.evaluate(args));
            const QVector term = beta_pos.apply(r.rho()[tuple[i]].apply(inner));
            axpy(value, Rational(i % 2 == 0 ? 1 : -1), term);
        }
        for (std::size_t i = 0; i <= k; ++i) {
            for (std::size_t j = i + 1; j <= k; ++j) {
                args.clear();
                args.push_back(g.bracket_basis(tuple[i], tuple[j]));
                for (std::size_t m = 0; m <= k; ++m) {
                    if (m != i && m != j) {
                        args.push_back(alpha_images[tuple[m]]);
                    }
                }
                axpy(value, Rational((i + j) % 2 == 0 ? 1 : -1), eta.evaluate(args));
            }
        }
        if (!is_zero(value)) {
            out.set(tuple, value);
        }
    }
    return out;
}

Report check_d_squared_vec(const Representation &r, int s, int max_k)
{
    Report report("d_squared");
    const Report rep = check_representation(r);
    if (!rep.passed()) {
        report.add_fail("is_representation", rep.first_failure()->witness);
        return report;
    }
    report.add_pass("is_representation");
    const std::size_t n = r.algebra().dim();
    for (int k = 0; k <= max_k; ++k) {
        CheckAccumulator acc("d" + std::to_string(s) + "_squared_degree_" + std::to_string(k));
        for (const auto &tuple : increasing_tuples(n, static_cast<std::size_t>(k))) {
            for (std::size_t v = 0; v < r.dimV(); ++v) {
                const VectorCochain eta =
                    VectorCochain::basis(n, r.dimV(), tuple, unit_vector(r.dimV(), v));
                const VectorCochain dd = coboundary_vec(r, s, coboundary_vec(r, s, eta));
                acc.record(dd.is_zero(), [&] {
                    Json residual = Json::object();
                    for (const auto &[t, val] : dd.values()) {
                        std::string key;
                        for (auto i : t) {
                            key += (key.empty() ? "" : ",") + basis_name(i);
                        }
                        residual[key] = to_string(val);
                    }
                    return Json{{"cochain", tuple_json(tuple)},
                                {"value_basis", v + 1},
                                {"residual", residual}};
                });
            }
        }
        report.add(std::move(acc).finish());
    }
    return report;
}

YauTwistResult yau_twist(const LieAlgebraData &lie, const QMatrix &alpha)
{
    YauTwistResult result{std::nullopt, Report("yau_twist")};
    std::optional<HomLieAlgebra> plain;
    try {
        plain.emplace(lie.dim, lie.c, QMatrix::identity(lie.dim));
    } catch (const Error &e) {
        result.report.add_fail("input_shape_and_antisymmetry", Json{{"error", e.what()}});
        return result;
    }
    if (alpha.rows() != lie.dim || alpha.cols() != lie.dim) {
        result.report.add_fail("alpha_shape", Json{{"error", "alpha must be dim x dim"}});
        return result;
    }
    // With alpha = id the Hom-Jacobi identity is the ordinary Jacobi identity.
    result.report.append(check_hom_jacobi(*plain), "input_");
    const HomLieAlgebra with_alpha(lie.dim, lie.c, alpha);
    result.report.append(check_alpha_morphism(with_alpha), "input_");
    if (!result.report.passed()) {
        return result;
    }
    BracketTable twisted = zero_brackets(lie.dim);
    for (std::size_t i = 0; i < lie.dim; ++i) {
        for (std::size_t j = 0; j < lie.dim; ++j) {
            twisted[i][j] = alpha.apply(lie.c[i][j]);
        }
    }
    result.algebra.emplace(lie.dim, std::move(twisted), alpha);
    return result;
}

Representation adjoint_rep(const HomLieAlgebra &g)
{
    if (g.alpha().determinant().is_zero()) {
        throw PreconditionError("adjoint_rep: alpha is singular");
    }
    const std::size_t n = g.dim();
    std::vector<QMatrix> rho;
    rho.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        QMatrix ad(n, n);
        for (std::size_t j = 0; j < n; ++j) {
            const QVector &col = g.bracket_basis(i, j);
            for (std::size_t m = 0; m < n; ++m) {
                ad(m, j) = col[m];
            }
        }
        rho.push_back(std::move(ad));
    }
    return Representation(g, n, std::move(rho), g.alpha());
}

Representation trivial_rep(const HomLieAlgebra &g, std::size_t dimV, const QMatrix &beta)
{
    return Representation(g, dimV, std::vector<QMatrix>(g.dim(), QMatrix(dimV, dimV)), beta);
}

} // namespace homcalc
