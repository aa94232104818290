#include <homcalc/errors.hpp>
#include <homcalc/poly.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <utility>

namespace homcalc
{

VarListPtr make_vars(VarList names)
{
    return std::make_shared<const VarList>(std::move(names));
}

bool GrlexGreater::operator()(const Exponents &a, const Exponents &b) const
{
    const auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
    const auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
    if (da != db) {
        return da > db;
    }
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace
{

const VarListPtr &empty_vars()
{
    static const VarListPtr vars = make_vars({});
    return vars;
}

} // namespace

Poly::Poly() : m_vars(empty_vars()) {}

Poly::Poly(VarListPtr vars) : m_vars(vars ? std::move(vars) : empty_vars()) {}

Poly::Poly(VarListPtr vars, const Rational &constant) : Poly(std::move(vars))
{
    if (!constant.is_zero()) {
        m_terms.emplace(Exponents(m_vars->size(), 0), constant);
    }
}

Poly Poly::variable(VarListPtr vars, std::size_t index)
{
    Poly p(std::move(vars));
    if (index >= p.num_variables()) {
        throw StructureError("Poly::variable: index out of range");
    }
    Exponents e(p.num_variables(), 0);
    e[index] = 1;
    p.m_terms.emplace(std::move(e), Rational(1));
    return p;
}

Poly Poly::monomial(VarListPtr vars, Exponents exponents, const Rational &coefficient)
{
    Poly p(std::move(vars));
    if (exponents.size() != p.num_variables()) {
        throw StructureError("Poly::monomial: exponent count does not match variable count");
    }
    if (!coefficient.is_zero()) {
        p.m_terms.emplace(std::move(exponents), coefficient);
    }
    return p;
}

bool Poly::is_constant() const
{
    return m_terms.empty()
           || (m_terms.size() == 1
               && std::all_of(m_terms.begin()->first.begin(), m_terms.begin()->first.end(),
                              [](std::uint32_t e) { return e == 0; }));
}

Rational Poly::constant_term() const
{
    if (m_terms.empty()) {
        return Rational(0);
    }
    // The constant monomial is the grlex-smallest, hence the last entry.
    const auto &last = *m_terms.rbegin();
    if (std::all_of(last.first.begin(), last.first.end(), [](std::uint32_t e) { return e == 0; })) {
        return last.second;
    }
    return Rational(0);
}

long Poly::total_degree() const
{
    if (m_terms.empty()) {
        return -1;
    }
    const auto &lead = m_terms.begin()->first;
    return static_cast<long>(std::accumulate(lead.begin(), lead.end(), std::uint64_t{0}));
}

bool Poly::same_variables(const Poly &other) const
{
    return m_vars == other.m_vars || *m_vars == *other.m_vars;
}

void Poly::require_same_variables(const Poly &other, const char *op) const
{
    if (!same_variables(other)) {
        throw StructureError(std::string("Poly ") + op + ": variable lists differ");
    }
}

void Poly::add_term(const Exponents &e, const Rational &c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            m_terms.erase(it);
        }
    }
}

Poly &Poly::operator+=(const Poly &other)
{
    require_same_variables(other, "add");
    for (const auto &[e, c] : other.m_terms) {
        add_term(e, c);
    }
    return *this;
}

Poly &Poly::operator-=(const Poly &other)
{
    require_same_variables(other, "sub");
    for (const auto &[e, c] : other.m_terms) {
        add_term(e, -c);
    }
    return *this;
}

Poly operator*(const Poly &a, const Poly &b)
{
    a.require_same_variables(b, "mul");
    if (a.m_terms.empty() || b.m_terms.empty()) {
        return Poly(a.m_vars);
    }
    if (b.m_terms.size() == 1 && b.m_terms.begin()->first == Exponents(b.num_variables(), 0)) {
        Poly out = a;
        return out *= b.m_terms.begin()->second;
    }
    if (a.m_terms.size() == 1 && a.m_terms.begin()->first == Exponents(a.num_variables(), 0)) {
        Poly out = b;
        return out *= a.m_terms.begin()->second;
    }
    Poly out(a.m_vars);
    Exponents e(a.num_variables());
    for (const auto &[ea, ca] : a.m_terms) {
        for (const auto &[eb, cb] : b.m_terms) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
            }
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Poly &Poly::operator*=(const Poly &other)
{
    *this = *this * other;
    return *this;
}

Poly &Poly::operator*=(const Rational &scalar)
{
    if (scalar.is_zero()) {
        m_terms.clear();
        return *this;
    }
    for (auto &[e, c] : m_terms) {
        c *= scalar;
    }
    return *this;
}

Poly operator-(Poly a)
{
    for (auto &[e, c] : a.m_terms) {
        c = -c;
    }
    return a;
}

bool operator==(const Poly &a, const Poly &b)
{
    return a.same_variables(b) && a.m_terms == b.m_terms;
}

Poly Poly::derivative(std::size_t index) const
{
    if (index >= num_variables()) {
        throw StructureError("Poly::derivative: variable index out of range");
    }
    Poly out(m_vars);
    for (const auto &[e, c] : m_terms) {
        if (e[index] == 0) {
            continue;
        }
        Exponents d = e;
        --d[index];
        out.add_term(d, c * Rational(static_cast<long>(e[index])));
    }
    return out;
}

Poly Poly::pow(unsigned exponent) const
{
    Poly result(m_vars, Rational(1));
    Poly base = *this;
    while (exponent > 0) {
        if (exponent & 1U) {
            result *= base;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            base *= base;
        }
    }
    return result;
}

Poly Poly::substitute(std::span<const Poly> images) const
{
    if (images.size() != num_variables()) {
        throw StructureError("Poly::substitute: need one image per variable");
    }
    VarListPtr target = images.empty() ? m_vars : images.front().m_vars;
    for (const auto &img : images) {
        if (!(img.m_vars == target || *img.m_vars == *target)) {
            throw StructureError("Poly::substitute: images use different variable lists");
        }
    }
    const bool monomial_images = std::all_of(images.begin(), images.end(), [](const Poly &img) {
        return img.m_terms.size() == 1;
    });
    if (monomial_images) {
        // Each variable goes to c_j * x^{a_j}: map exponents directly.
        Poly out(target);
        const std::size_t m = target->size();
        for (const auto &[e, c] : m_terms) {
            Exponents mapped(m, 0);
            Rational coeff = c;
            for (std::size_t j = 0; j < e.size(); ++j) {
                if (e[j] == 0) {
                    continue;
                }
                const auto &[a, cj] = *images[j].m_terms.begin();
                for (std::size_t i = 0; i < m; ++i) {
                    mapped[i] += e[j] * a[i];
                }
                if (!cj.is_one()) {
                    for (std::uint32_t k = 0; k < e[j]; ++k) {
                        coeff *= cj;
                    }
                }
            }
            out.add_term(mapped, coeff);
        }
        return out;
    }
    // powers[j][k] = images[j]^k, filled lazily.
    std::vector<std::vector<Poly>> powers(images.size());
    auto power = [&](std::size_t j, std::uint32_t k) -> const Poly & {
        auto &cache = powers[j];
        if (cache.empty()) {
            cache.emplace_back(target, Rational(1));
        }
        while (cache.size() <= k) {
            cache.push_back(cache.back() * images[j]);
        }
        return cache[k];
    };
    Poly out(target);
    for (const auto &[e, c] : m_terms) {
        Poly term(target, c);
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] != 0) {
                term *= power(j, e[j]);
            }
        }
        out += term;
    }
    return out;
}

std::string Poly::to_string() const
{
    if (m_terms.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : m_terms) {
        if (first) {
            if (c.sign() < 0) {
                os << '-';
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const Rational mag = c.abs();
        std::string mono;
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) {
                continue;
            }
            if (!mono.empty()) {
                mono += '*';
            }
            mono += (*m_vars)[j];
            if (e[j] > 1) {
                mono += '^' + std::to_string(e[j]);
            }
        }
        if (mono.empty()) {
            os << mag.to_string();
        } else if (mag.is_one()) {
            os << mono;
        } else {
            os << mag.to_string() << '*' << mono;
        }
    }
    return os.str();
}

namespace
{

class PolyParser
{
public:
    PolyParser(std::string_view text, VarListPtr vars) : m_text(text), m_vars(std::move(vars)) {}

    Poly parse()
    {
        Poly result = expression();
        if (!at_end()) {
            fail(std::string("unexpected character '") + peek() + "'");
        }
        return result;
    }

private:
    /// Sum of terms; stops at the end of input or at an unmatched ')'.
    Poly expression()
    {
        Poly result(m_vars);
        skip_ws();
        if (at_end() || peek() == ')') {
            fail("empty polynomial");
        }
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            ++m_pos;
            skip_ws();
        }
        add(result, term(), negative);
        skip_ws();
        while (!at_end() && peek() != ')') {
            if (peek() != '+' && peek() != '-') {
                fail(std::string("unexpected character '") + peek() + "'");
            }
            negative = peek() == '-';
            ++m_pos;
            skip_ws();
            add(result, term(), negative);
            skip_ws();
        }
        return result;
    }

    static void add(Poly &acc, const Poly &t, bool negative)
    {
        if (negative) {
            acc -= t;
        } else {
            acc += t;
        }
    }

    Poly term()
    {
        Poly t = factor();
        skip_ws();
        while (!at_end() && peek() == '*') {
            ++m_pos;
            skip_ws();
            t *= factor();
            skip_ws();
        }
        return t;
    }

    Poly factor()
    {
        if (at_end()) {
            fail("expected a number or variable");
        }
        const char ch = peek();
        if (ch == '(') {
            ++m_pos;
            Poly inner = expression();
            if (at_end() || peek() != ')') {
                fail("expected ')'");
            }
            ++m_pos;
            skip_ws();
            if (!at_end() && peek() == '^') {
                ++m_pos;
                skip_ws();
                inner = inner.pow(static_cast<unsigned>(integer()));
            }
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            return Poly(m_vars, number());
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            const std::size_t start = m_pos;
            while (!at_end()
                   && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
                ++m_pos;
            }
            const std::string name(m_text.substr(start, m_pos - start));
            const auto &vars = *m_vars;
            const auto it = std::find(vars.begin(), vars.end(), name);
            if (it == vars.end()) {
                m_pos = start;
                fail("unknown variable '" + name + "'");
            }
            std::uint32_t exponent = 1;
            skip_ws();
            if (!at_end() && peek() == '^') {
                ++m_pos;
                skip_ws();
                exponent = static_cast<std::uint32_t>(integer());
            }
            Exponents e(vars.size(), 0);
            e[static_cast<std::size_t>(it - vars.begin())] = exponent;
            return Poly::monomial(m_vars, std::move(e), Rational(1));
        }
        fail(std::string("unexpected character '") + ch + "'");
    }

    Rational number()
    {
        const std::size_t start = m_pos;
        integer();
        if (!at_end() && peek() == '/') {
            ++m_pos;
            const std::size_t den = m_pos;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
                ++m_pos;
            }
            if (den == m_pos) {
                fail("expected denominator");
            }
        }
        try {
            return Rational::parse(m_text.substr(start, m_pos - start));
        } catch (const ParseError &e) {
            throw ParseError("bad rational coefficient", start + e.position());
        }
    }

    unsigned long integer()
    {
        const std::size_t start = m_pos;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            ++m_pos;
        }
        if (start == m_pos) {
            fail("expected digits");
        }
        const std::string digits(m_text.substr(start, m_pos - start));
        if (digits.size() > 9) {
            m_pos = start;
            fail("integer too large");
        }
        return std::stoul(digits);
    }

    [[noreturn]] void fail(const std::string &msg) const
    {
        throw ParseError("polynomial '" + std::string(m_text) + "': " + msg, m_pos);
    }

    bool at_end() const
    {
        return m_pos >= m_text.size();
    }
    char peek() const
    {
        return m_text[m_pos];
    }
    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
            ++m_pos;
        }
    }

    std::string_view m_text;
    VarListPtr m_vars;
    std::size_t m_pos = 0;
};

} // namespace

Poly Poly::parse(std::string_view text, VarListPtr vars)
{
    return PolyParser(text, vars ? std::move(vars) : empty_vars()).parse();
}

Poly poly_arith(const Poly &a, const Poly &b, PolyOp op)
{
    switch (op) {
        case PolyOp::add:
            return a + b;
        case PolyOp::sub:
            return a - b;
        case PolyOp::mul:
            return a * b;
    }
    throw StructureError("poly_arith: unknown operation");
}

} // namespace homcalc
