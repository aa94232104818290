// Classical Lie algebroid calculus (alpha = phi = id) written out directly
// from the Cartan formula, as an oracle for the twisted machinery.
#ifndef HOMCALC_TESTS_CLASSICAL_HPP
#define HOMCALC_TESTS_CLASSICAL_HPP

#include <map>
#include <vector>

#include <homcalc/algebroid.hpp>

namespace classical
{

using homcalc::Poly;
using homcalc::Section;

/// Anchor coefficients a[i][j] (e_i acts as sum_j a_ij d/dx_j) and structure
/// constants c[i][j] = [e_i, e_j], read straight from the instance data.
struct Algebroid {
    std::vector<std::vector<Poly>> a;
    std::vector<std::vector<Section>> c;
    std::size_t rank;
    std::size_t nvars;
};

inline Algebroid from(const homcalc::HomAlgebroid &ab)
{
    return {ab.anchor_matrix(), ab.bracket_sf(), ab.rank(), ab.base().num_variables()};
}

/// X(h) = sum_i X_i sum_j a_ij dh/dx_j
inline Poly act(const Algebroid &A, const Section &X, const Poly &h)
{
    Poly out(h.variables_ptr());
    for (std::size_t i = 0; i < A.rank; ++i) {
        for (std::size_t j = 0; j < A.nvars; ++j) {
            out += X[i] * A.a[i][j] * h.derivative(j);
        }
    }
    return out;
}

/// [X,Y] = sum X_i Y_j c_ij + sum_k (X(Y_k) - Y(X_k)) e_k
inline Section bracket(const Algebroid &A, const Section &X, const Section &Y)
{
    std::vector<Poly> out;
    for (std::size_t k = 0; k < A.rank; ++k) {
        out.push_back(act(A, X, Y[k]) - act(A, Y, X[k]));
    }
    for (std::size_t i = 0; i < A.rank; ++i) {
        for (std::size_t j = 0; j < A.rank; ++j) {
            for (std::size_t k = 0; k < A.rank; ++k) {
                out[k] += X[i] * Y[j] * A.c[i][j][k];
            }
        }
    }
    return Section(std::move(out));
}

/// A form given by its function-linear components on increasing index
/// tuples (degree 0: the single entry under the empty tuple).
struct Form {
    std::size_t degree;
    std::map<std::vector<std::size_t>, Poly> comps;
};

inline Poly eval_form(const Form &w, const std::vector<Section> &args, const Poly &zero)
{
    Poly out = zero;
    for (const auto &[t, coeff] : w.comps) {
        if (w.degree == 0) {
            out += coeff;
        } else if (w.degree == 1) {
            out += coeff * args[0][t[0]];
        } else {
            out += coeff * (args[0][t[0]] * args[1][t[1]] - args[0][t[1]] * args[1][t[0]]);
        }
    }
    return out;
}

/// Cartan formula:
///   dw(X_0..X_k) = sum_i (-1)^i X_i(w(..^i..))
///                + sum_{i<j} (-1)^{i+j} w([X_i,X_j], ..^i..^j..)
inline Poly d(const Algebroid &A, const Form &w, const std::vector<Section> &args, const Poly &zero)
{
    Poly out = zero;
    const std::size_t n = args.size();
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Section> rest;
        for (std::size_t m = 0; m < n; ++m) {
            if (m != i) {
                rest.push_back(args[m]);
            }
        }
        const Poly term = act(A, args[i], eval_form(w, rest, zero));
        out += (i % 2 == 0) ? term : -term;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<Section> rest{bracket(A, args[i], args[j])};
            for (std::size_t m = 0; m < n; ++m) {
                if (m != i && m != j) {
                    rest.push_back(args[m]);
                }
            }
            const Poly term = eval_form(w, rest, zero);
            out += ((i + j) % 2 == 0) ? term : -term;
        }
    }
    return out;
}

} // namespace classical

#endif
