#include <homcalc/errors.hpp>
#include <homcalc/rational.hpp>

#include <cctype>
#include <stdexcept>
#include <utility>

namespace homcalc
{

Rational::Rational(long num, long den)
{
    if (den == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    m_value = mpq_class(num, den);
    m_value.canonicalize();
}

Rational::Rational(mpq_class value) : m_value(std::move(value))
{
    m_value.canonicalize();
}

namespace
{

std::size_t scan_digits(std::string_view text, std::size_t pos)
{
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
    }
    return pos;
}

} // namespace

Rational Rational::parse(std::string_view text)
{
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    const std::size_t num_begin = pos;
    pos = scan_digits(text, pos);
    if (pos == num_begin) {
        throw ParseError("expected digits in rational '" + std::string(text) + "'", pos);
    }
    mpz_class num(std::string(text.substr(num_begin, pos - num_begin)));
    mpz_class den(1);
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        const std::size_t den_begin = pos;
        pos = scan_digits(text, pos);
        if (pos == den_begin) {
            throw ParseError("expected denominator in rational '" + std::string(text) + "'", pos);
        }
        den = mpz_class(std::string(text.substr(den_begin, pos - den_begin)));
        if (den == 0) {
            throw ParseError("zero denominator in rational '" + std::string(text) + "'", den_begin);
        }
    }
    if (pos != text.size()) {
        throw ParseError("trailing characters in rational '" + std::string(text) + "'", pos);
    }
    if (negative) {
        num = -num;
    }
    return Rational(mpq_class(num, den));
}

Rational Rational::abs() const
{
    return Rational(mpq_class(::abs(m_value)));
}

Rational Rational::inverse() const
{
    if (is_zero()) {
        throw std::domain_error("Rational: inverse of zero");
    }
    return Rational(mpq_class(1 / m_value));
}

std::string Rational::to_string() const
{
    return m_value.get_str();
}

Rational &Rational::operator+=(const Rational &other)
{
    m_value += other.m_value;
    return *this;
}

Rational &Rational::operator-=(const Rational &other)
{
    m_value -= other.m_value;
    return *this;
}

Rational &Rational::operator*=(const Rational &other)
{
    m_value *= other.m_value;
    return *this;
}

Rational &Rational::operator/=(const Rational &other)
{
    if (other.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    m_value /= other.m_value;
    return *this;
}

} // namespace homcalc
