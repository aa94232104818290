// Seeded generators for the property tests. Deliberately independent of the
// library's own Sampler so a bug there cannot hide a bug here.
#ifndef HOMCALC_TESTS_GEN_HPP
#define HOMCALC_TESTS_GEN_HPP

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include <homcalc/algebroid.hpp>
#include <homcalc/poly.hpp>
#include <homcalc/qmatrix.hpp>

namespace gen
{

class Gen
{
public:
    explicit Gen(std::uint64_t seed) : m_rng(seed) {}

    int small(int lo, int hi)
    {
        return std::uniform_int_distribution<int>(lo, hi)(m_rng);
    }

    homcalc::Rational rational()
    {
        static const long nums[] = {0, 1, -1, 2, -3, 5, 1, -1};
        static const long dens[] = {1, 1, 2, 3, 1, 4, 7, 1};
        return homcalc::Rational(nums[small(0, 7)], dens[small(0, 7)]);
    }

    homcalc::Rational nonzero_rational()
    {
        homcalc::Rational q = rational();
        while (q.is_zero()) {
            q = rational();
        }
        return q;
    }

    /// Random polynomial with up to `terms` monomials of degree <= max_degree.
    homcalc::Poly poly(const homcalc::VarListPtr &vars, int max_degree, int terms = 4)
    {
        homcalc::Poly p(vars);
        const int count = small(0, terms);
        for (int t = 0; t < count; ++t) {
            homcalc::Exponents e(vars->size(), 0);
            int budget = small(0, max_degree);
            for (std::size_t v = 0; v < e.size() && budget > 0; ++v) {
                const int d = (v + 1 == e.size()) ? budget : small(0, budget);
                e[v] = static_cast<std::uint32_t>(d);
                budget -= d;
            }
            p += homcalc::Poly::monomial(vars, e, rational());
        }
        return p;
    }

    homcalc::Section section(const homcalc::HomAlgebroid &ab, int max_degree)
    {
        std::vector<homcalc::Poly> c;
        for (std::size_t i = 0; i < ab.rank(); ++i) {
            c.push_back(poly(ab.base().vars(), max_degree, 3));
        }
        return homcalc::Section(std::move(c));
    }

    homcalc::QVector vector(std::size_t n)
    {
        homcalc::QVector v;
        for (std::size_t i = 0; i < n; ++i) {
            v.push_back(rational());
        }
        return v;
    }

private:
    std::mt19937_64 m_rng;
};

/// Number of property-test iterations; HOMCALC_PROPTEST_ITERS overrides.
inline int iterations(int fallback = 40)
{
    if (const char *env = std::getenv("HOMCALC_PROPTEST_ITERS")) {
        return std::max(1, std::atoi(env));
    }
    return fallback;
}

inline std::string data_path(const std::string &name)
{
    const char *dir = std::getenv("HOMCALC_DATA_DIR");
    return std::string(dir ? dir : "data") + "/" + name;
}

} // namespace gen

#endif
