#include <homcalc/sampling.hpp>

#include <algorithm>

namespace homcalc
{

std::vector<Exponents> monomials_up_to(std::size_t num_vars, int max_degree)
{
    std::vector<Exponents> out;
    if (max_degree < 0) {
        return out;
    }
    Exponents e(num_vars, 0);
    // Enumerate by total degree, then lexicographically within a degree.
    for (int d = 0; d <= max_degree; ++d) {
        std::vector<Exponents> level;
        auto fill = [&](auto &&self, std::size_t j, int remaining) -> void {
            if (j + 1 >= num_vars) {
                if (num_vars == 0) {
                    if (remaining == 0) {
                        level.push_back(e);
                    }
                    return;
                }
                e[j] = static_cast<std::uint32_t>(remaining);
                level.push_back(e);
                return;
            }
            for (int k = remaining; k >= 0; --k) {
                e[j] = static_cast<std::uint32_t>(k);
                self(self, j + 1, remaining - k);
            }
        };
        fill(fill, 0, d);
        std::sort(level.begin(), level.end(), [](const Exponents &a, const Exponents &b) {
            return GrlexGreater{}(b, a);
        });
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

Rational Sampler::coefficient()
{
    static const Rational table[] = {Rational(0), Rational(1), Rational(-1),
                                     Rational(1, 2), Rational(-1, 2), Rational(2)};
    return table[index(6)];
}

Rational Sampler::nonzero_coefficient()
{
    static const Rational table[] = {Rational(1), Rational(-1), Rational(1, 2), Rational(-1, 2),
                                     Rational(2)};
    return table[index(5)];
}

Poly Sampler::poly(const VarListPtr &vars, int max_degree)
{
    Poly out(vars);
    for (const auto &e : monomials_up_to(vars->size(), max_degree)) {
        const Rational c = coefficient();
        if (!c.is_zero()) {
            out += Poly::monomial(vars, e, c);
        }
    }
    return out;
}

} // namespace homcalc
