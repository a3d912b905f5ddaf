#pragma once

// Exact linear feasibility over the rationals.
//
// Decides whether A x = b has a solution x >= 0 with a phase-one simplex run on
// a dense rational tableau. Bland's rule guarantees termination. The answer is
// always backed by a certificate that is checked before it is returned: a
// solution x, or a Farkas vector y with y'A <= 0 and y'b > 0.

#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "credal/errors.hpp"
#include "credal/rational.hpp"

namespace credal::lp {

struct FeasiblePoint {
    RationalVector x;
};

/// y with y'A <= 0 componentwise and y'b > 0.
struct FarkasCertificate {
    RationalVector y;
};

using FeasibilityResult = std::variant<FeasiblePoint, FarkasCertificate>;

/// Dense row-major matrix, just enough for building constraint systems.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_, cols_;
    RationalVector data_;
};

namespace detail {

inline bool verify_point(const Matrix& a, std::span<const Rational> b, const RationalVector& x) {
    for (const auto& v : x)
        if (sgn(v) < 0) return false;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        Rational acc = 0;
        for (std::size_t c = 0; c < a.cols(); ++c) acc += a(r, c) * x[c];
        if (acc != b[r]) return false;
    }
    return true;
}

inline bool verify_farkas(const Matrix& a, std::span<const Rational> b, const RationalVector& y) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
        Rational acc = 0;
        for (std::size_t r = 0; r < a.rows(); ++r) acc += y[r] * a(r, c);
        if (sgn(acc) > 0) return false;
    }
    return sgn(dot(y, b)) > 0;
}

}  // namespace detail

/// Solves the feasibility problem {x >= 0 : A x = b} exactly.
inline FeasibilityResult solve_feasibility(const Matrix& a, std::span<const Rational> b) {
    const std::size_t m = a.rows();
    const std::size_t k = a.cols();
    if (b.size() != m) throw DimensionMismatch("right-hand side length does not match the constraint matrix");

    // Tableau over [x | artificials], with rows negated where b < 0.
    const std::size_t width = k + m;
    std::vector<RationalVector> t(m, RationalVector(width, Rational(0)));
    RationalVector rhs(m);
    std::vector<int> sign(m, 1);
    std::vector<std::size_t> basis(m);
    for (std::size_t r = 0; r < m; ++r) {
        sign[r] = sgn(b[r]) < 0 ? -1 : 1;
        for (std::size_t c = 0; c < k; ++c) t[r][c] = sign[r] < 0 ? Rational(-a(r, c)) : a(r, c);
        t[r][k + r] = 1;
        rhs[r] = sign[r] < 0 ? Rational(-b[r]) : b[r];
        basis[r] = k + r;
    }

    // Reduced costs of the phase-one objective (sum of artificials).
    RationalVector cost(width, Rational(0));
    Rational cost_rhs = 0;  // minus the current objective value
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < k; ++c) cost[c] -= t[r][c];
        cost_rhs -= rhs[r];
    }

    for (;;) {
        std::size_t enter = width;
        for (std::size_t c = 0; c < width; ++c)
            if (sgn(cost[c]) < 0) {
                enter = c;
                break;
            }
        if (enter == width) break;

        std::size_t leave = m;
        Rational best_ratio;
        for (std::size_t r = 0; r < m; ++r) {
            if (sgn(t[r][enter]) <= 0) continue;
            Rational ratio = rhs[r] / t[r][enter];
            if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[leave])) {
                leave = r;
                best_ratio = std::move(ratio);
            }
        }
        if (leave == m) throw std::logic_error("phase-one simplex reported an unbounded direction");

        const Rational pivot = t[leave][enter];
        for (auto& v : t[leave])
            if (sgn(v) != 0) v /= pivot;
        rhs[leave] /= pivot;

        auto eliminate = [&](RationalVector& row, Rational& row_rhs) {
            if (sgn(row[enter]) == 0) return;
            const Rational factor = row[enter];
            for (std::size_t c = 0; c < width; ++c)
                if (sgn(t[leave][c]) != 0) row[c] -= factor * t[leave][c];
            row_rhs -= factor * rhs[leave];
        };
        for (std::size_t r = 0; r < m; ++r)
            if (r != leave) eliminate(t[r], rhs[r]);
        eliminate(cost, cost_rhs);
        basis[leave] = enter;
    }

    if (sgn(cost_rhs) == 0) {
        RationalVector x(k, Rational(0));
        for (std::size_t r = 0; r < m; ++r)
            if (basis[r] < k) x[basis[r]] = rhs[r];
        if (!detail::verify_point(a, b, x)) throw std::logic_error("simplex produced an invalid feasible point");
        return FeasiblePoint{std::move(x)};
    }

    // Dual of the flipped system: y'_r = 1 - reduced cost of artificial r.
    RationalVector y(m);
    for (std::size_t r = 0; r < m; ++r) {
        y[r] = 1 - cost[k + r];
        if (sign[r] < 0) y[r] = -y[r];
    }
    if (!detail::verify_farkas(a, b, y)) throw std::logic_error("simplex produced an invalid Farkas certificate");
    return FarkasCertificate{std::move(y)};
}

}  // namespace credal::lp
