#pragma once

// Exact feasibility of {x >= 0 : Ax = b} by the phase-one simplex method.
// Bland's rule picks entering and leaving variables, so the method cannot cycle.

#include <cstddef>
#include <optional>
#include <vector>

#include "drep/rational.hpp"

namespace drep {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// A nonnegative solution of Ax = b, or nullopt when none exists.
inline std::optional<std::vector<Rational>> lp_feasible_point(const RationalMatrix& A, const std::vector<Rational>& b)
{
    const std::size_t m = A.size();
    const std::size_t n = m ? A.front().size() : 0;
    const std::size_t cols = n + m; // originals then artificials
    const std::size_t rhs = cols;

    RationalMatrix T(m, std::vector<Rational>(cols + 1));
    std::vector<std::size_t> basis(m);
    std::vector<Rational> z(cols + 1);
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j)
            T[i][j] = flip ? Rational(-A[i][j]) : A[i][j];
        T[i][n + i] = 1;
        T[i][rhs] = flip ? Rational(-b[i]) : b[i];
        basis[i] = n + i;
        for (std::size_t j = 0; j < n; ++j)
            z[j] -= T[i][j];
        z[rhs] -= T[i][rhs];
    }

    auto pivot = [&](std::size_t r, std::size_t c) {
        const Rational p = T[r][c];
        for (auto& v : T[r])
            v /= p;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || T[i][c] == 0)
                continue;
            const Rational f = T[i][c];
            for (std::size_t j = 0; j <= cols; ++j)
                if (T[r][j] != 0)
                    T[i][j] -= f * T[r][j];
        }
        if (z[c] != 0) {
            const Rational f = z[c];
            for (std::size_t j = 0; j <= cols; ++j)
                if (T[r][j] != 0)
                    z[j] -= f * T[r][j];
        }
        basis[r] = c;
    };

    while (true) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (z[j] < 0) {
                enter = j;
                break;
            }
        if (enter == cols)
            break;
        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (T[i][enter] <= 0)
                continue;
            Rational ratio = T[i][rhs] / T[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m)
            break; // unbounded cannot happen: the objective is bounded below by 0
        pivot(leave, enter);
    }

    if (z[rhs] != 0)
        return std::nullopt;
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n)
            x[basis[i]] = T[i][rhs];
    return x;
}

inline bool lp_feasible(const RationalMatrix& A, const std::vector<Rational>& b)
{
    return lp_feasible_point(A, b).has_value();
}

} // namespace drep
