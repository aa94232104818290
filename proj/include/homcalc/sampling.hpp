#ifndef HOMCALC_SAMPLING_HPP
#define HOMCALC_SAMPLING_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include <homcalc/poly.hpp>

namespace homcalc
{

/// All exponent vectors in `num_vars` variables of total degree <= max_degree,
/// in ascending graded-lex order.
std::vector<Exponents> monomials_up_to(std::size_t num_vars, int max_degree);

/// Seeded source of random test data. Uses mt19937_64 with plain modulo
/// reduction so the stream is identical on every platform.
class Sampler
{
public:
    explicit Sampler(std::uint64_t seed) : m_rng(seed) {}

    std::uint64_t next()
    {
        return m_rng();
    }
    std::size_t index(std::size_t n)
    {
        return static_cast<std::size_t>(m_rng() % n);
    }

    /// Uniform over {0, 1, -1, 1/2, -1/2, 2}.
    Rational coefficient();
    /// Uniform over {1, -1, 1/2, -1/2, 2}.
    Rational nonzero_coefficient();
    /// Every monomial of degree <= max_degree gets an independent coefficient().
    Poly poly(const VarListPtr &vars, int max_degree);

private:
    std::mt19937_64 m_rng;
};

} // namespace homcalc

#endif
