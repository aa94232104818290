#ifndef HOMCALC_RATIONAL_HPP
#define HOMCALC_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace homcalc
{

/// Exact rational number backed by GMP. Always kept in lowest terms with a
/// positive denominator.
class Rational
{
public:
    Rational() = default;

    template <std::integral T>
    Rational(T value) : m_value(static_cast<long>(value))
    {
    }

    /// Throws std::domain_error if `den` is zero.
    Rational(long num, long den);

    explicit Rational(mpq_class value);

    /// Accepts `3`, `-7`, `+2`, `-1/2`. Throws ParseError otherwise.
    static Rational parse(std::string_view text);

    bool is_zero() const
    {
        return sgn(m_value) == 0;
    }
    bool is_one() const
    {
        return m_value == 1;
    }
    bool is_integer() const
    {
        return m_value.get_den() == 1;
    }
    int sign() const
    {
        return sgn(m_value);
    }

    Rational abs() const;
    /// Throws std::domain_error on zero.
    Rational inverse() const;

    std::string to_string() const;

    const mpq_class &value() const
    {
        return m_value;
    }

    Rational &operator+=(const Rational &other);
    Rational &operator-=(const Rational &other);
    Rational &operator*=(const Rational &other);
    Rational &operator/=(const Rational &other);

    friend Rational operator+(Rational a, const Rational &b)
    {
        return a += b;
    }
    friend Rational operator-(Rational a, const Rational &b)
    {
        return a -= b;
    }
    friend Rational operator*(Rational a, const Rational &b)
    {
        return a *= b;
    }
    friend Rational operator/(Rational a, const Rational &b)
    {
        return a /= b;
    }
    friend Rational operator-(const Rational &a)
    {
        return Rational(mpq_class(-a.m_value));
    }

    friend bool operator==(const Rational &a, const Rational &b)
    {
        return a.m_value == b.m_value;
    }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.m_value, b.m_value);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &q)
    {
        return os << q.to_string();
    }

private:
    mpq_class m_value{0};
};

} // namespace homcalc

#endif
