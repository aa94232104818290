#include <homcalc/base_geometry.hpp>
#include <homcalc/errors.hpp>

#include <utility>

namespace homcalc
{

BaseGeometry::BaseGeometry(VarListPtr vars, std::vector<Poly> phi_images)
    : m_vars(std::move(vars)), m_phi(std::move(phi_images))
{
    if (!m_vars) {
        throw StructureError("BaseGeometry: null variable list");
    }
    if (m_phi.size() != m_vars->size()) {
        throw StructureError("BaseGeometry: need exactly one phi image per variable");
    }
    for (const auto &img : m_phi) {
        if (img.variables() != *m_vars) {
            throw StructureError("BaseGeometry: phi image over a different variable list");
        }
    }
    m_identity = true;
    for (std::size_t j = 0; j < m_phi.size(); ++j) {
        m_identity = m_identity && m_phi[j] == variable(j);
    }
    m_involutive = true;
    for (std::size_t j = 0; j < m_phi.size(); ++j) {
        if (phi_once(m_phi[j]) != variable(j)) {
            m_involutive = false;
            break;
        }
    }
}

BaseGeometry BaseGeometry::identity(VarListPtr vars)
{
    std::vector<Poly> images;
    for (std::size_t j = 0; j < vars->size(); ++j) {
        images.push_back(Poly::variable(vars, j));
    }
    return BaseGeometry(std::move(vars), std::move(images));
}


Poly BaseGeometry::phi_once(const Poly &f) const
{
    if (f.variables_ptr() != m_vars && f.variables() != *m_vars) {
        throw StructureError("phi*: polynomial is not over the base variables");
    }
    if (m_identity) {
        return f;
    }
    return f.substitute(m_phi);
}

Poly BaseGeometry::phi(int power, const Poly &f) const
{
    if (m_involutive) {
        return (power % 2 == 0) ? f : phi_once(f);
    }
    if (power < 0) {
        throw PreconditionError("phi*: negative power on a non-involutive base");
    }
    Poly out = f;
    for (int i = 0; i < power; ++i) {
        out = phi_once(out);
    }
    return out;
}

Poly apply_phi(const BaseGeometry &base, int power, const Poly &f)
{
    return base.phi(power, f);
}

Report check_involution(const BaseGeometry &base)
{
    Report report("involution");
    CheckAccumulator acc("phi_squared_is_identity");
    Json violations = Json::array();
    for (std::size_t j = 0; j < base.num_variables(); ++j) {
        const Poly twice = base.phi_images()[j].substitute(base.phi_images());
        const bool ok = twice == base.variable(j);
        if (!ok) {
            violations.push_back(
                Json{{"variable", base.vars()->at(j)}, {"double_image", twice.to_string()}});
        }
        acc.record(ok, [] { return Json::object(); });
    }
    CheckItem item = std::move(acc).finish();
    if (!item.passed) {
        item.witness = Json{{"violations", violations}};
    }
    report.add(std::move(item));
    return report;
}

TwistedDerivation::TwistedDerivation(BasePtr base, std::vector<Poly> coefficients,
                                     int twist_exponent)
    : m_base(std::move(base)), m_coefficients(std::move(coefficients)), m_twist(twist_exponent)
{
    if (!m_base) {
        throw StructureError("TwistedDerivation: null base");
    }
    if (m_coefficients.size() != m_base->num_variables()) {
        throw StructureError("TwistedDerivation: need one coefficient per base variable");
    }
    for (const auto &c : m_coefficients) {
        if (c.variables() != *m_base->vars()) {
            throw StructureError("TwistedDerivation: coefficient over a different variable list");
        }
    }
    if (m_twist < 0) {
        throw PreconditionError("TwistedDerivation: twist exponent must be non-negative");
    }
}

Poly TwistedDerivation::operator()(const Poly &f) const
{
    Poly sum = m_base->zero();
    for (std::size_t j = 0; j < m_coefficients.size(); ++j) {
        if (m_coefficients[j].is_zero()) {
            continue;
        }
        sum += m_coefficients[j] * f.derivative(j);
    }
    return m_base->phi(m_twist, sum);
}

Poly apply_derivation(const TwistedDerivation &derivation, const Poly &f)
{
    return derivation(f);
}

} // namespace homcalc
