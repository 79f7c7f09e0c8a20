#pragma once

#include <Eigen/Dense>
#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "tfim/errors.hpp"

namespace tfim {

// Entries of every nested Toeplitz matrix T^{(n)}_{ij} = c_{i-j}, n <= max_order.
struct ToeplitzSymbol {
    std::vector<double> coeffs; // c_m for m = -M..M-1
    int max_order = 0;          // M

    ToeplitzSymbol() = default;
    ToeplitzSymbol(std::vector<double> cs, int order) : coeffs(std::move(cs)), max_order(order) {
        if (static_cast<int>(coeffs.size()) != 2 * order)
            throw InvalidArgument("symbol needs 2*M coefficients (m = -M..M-1)");
        for (double c : coeffs)
            if (!std::isfinite(c)) throw InvalidArgument("symbol coefficient not finite");
    }

    double c(int m) const { return coeffs[static_cast<size_t>(m + max_order)]; }
};

enum class DetMethod { PivotedElimination, FastRecursion };

struct DetSweepOptions {
    double tol_pivot = 1e-10; // relative to the symbol's coefficient scale
    int check_stride = 0;     // 0 -> ceil(upto/16)
    int check_order_cap = std::numeric_limits<int>::max();
    double check_tol = 1e-8;
};

struct DeterminantSweep {
    std::vector<double> values; // D_n, n = 1..upto
    DetMethod method = DetMethod::FastRecursion;
    std::vector<int> breakdown_orders;

    double at(int order) const { return values[static_cast<size_t>(order - 1)]; }
    int upto() const { return static_cast<int>(values.size()); }
};

inline Eigen::MatrixXd toeplitz_matrix(const ToeplitzSymbol& sym, int n) {
    Eigen::MatrixXd t(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t(i, j) = sym.c(i - j);
    return t;
}

// Trusted path: determinant of T^{(n)} by row-pivoted elimination, O(n^3).
inline double det_single(const ToeplitzSymbol& sym, int n) {
    if (n < 1 || n > sym.max_order)
        throw InvalidArgument("det_single order out of range: " + std::to_string(n));
    if (n == 1) return sym.c(0);
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(toeplitz_matrix(sym, n));
    return lu.determinant();
}

// ln of the Hadamard bound prod_i ||row_i||_2 for T^{(n)}; -inf for a zero row.
inline double log_hadamard_bound(const ToeplitzSymbol& sym, int n) {
    double lh = 0.0;
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) {
            const double e = sym.c(i - j);
            s += e * e;
        }
        lh += 0.5 * std::log(s);
    }
    return lh;
}

namespace detail {

// Re-seed the minor recursion at one order with a full-pivot factorization.
// Returns the determinant; on a well-conditioned matrix also produces the
// forward/backward solutions f = T^{-1} e_first, b = T^{-1} e_last and marks
// the recursion alive again.
inline double reseed_order(const ToeplitzSymbol& sym, int n, std::vector<double>& f,
                           std::vector<double>& b, bool& alive) {
    const Eigen::MatrixXd t = toeplitz_matrix(sym, n);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(t);
    lu.setThreshold(1e-10);
    const double det = lu.determinant();
    if (lu.isInvertible()) {
        Eigen::VectorXd e0 = Eigen::VectorXd::Zero(n);
        Eigen::VectorXd en = Eigen::VectorXd::Zero(n);
        e0(0) = 1.0;
        en(n - 1) = 1.0;
        const Eigen::VectorXd fv = lu.solve(e0);
        const Eigen::VectorXd bv = lu.solve(en);
        f.assign(fv.data(), fv.data() + n);
        b.assign(bv.data(), bv.data() + n);
        alive = true;
    } else {
        f.clear();
        b.clear();
        alive = false;
    }
    return det;
}

}  // namespace detail

// All leading-minor determinants D_1..D_upto in O(upto^2) via the bordering
// recursion for nonsymmetric Toeplitz matrices.  With f_n = T_n^{-1} e_1 and
// b_n = T_n^{-1} e_n,
//   eps_f = sum_j c_{n-j} f_n[j],   eps_b = sum_j c_{-j-1} b_n[j],
//   D_{n+1}/D_n = (1 - eps_f eps_b) / f_n[0],
// and (f, b) extend by a rank-one cross update.  Orders where the pivot falls
// below tol_pivot (times the coefficient scale) are recomputed by det_single
// and the recursion is re-seeded; every check_stride-th order is cross-checked
// against det_single.
inline DeterminantSweep det_sweep(const ToeplitzSymbol& sym, int upto, DetSweepOptions opt = {}) {
    if (upto < 1 || upto > sym.max_order)
        throw InvalidArgument("det_sweep upto out of range: " + std::to_string(upto));
    const int stride = opt.check_stride > 0 ? opt.check_stride : (upto + 15) / 16;

    double scale = 0.0;
    for (double c : sym.coeffs) scale = std::max(scale, std::abs(c));
    const double pivot_floor = opt.tol_pivot * std::max(scale, 1e-300);

    DeterminantSweep out;
    out.method = DetMethod::FastRecursion;
    out.values.resize(upto);

    std::vector<double> f, b, f_next, b_next;
    bool alive = false;
    double det;

    const double c0 = sym.c(0);
    if (std::abs(c0) > pivot_floor) {
        det = c0;
        f.assign(1, 1.0 / c0);
        b.assign(1, 1.0 / c0);
        alive = true;
    } else {
        det = detail::reseed_order(sym, 1, f, b, alive);
        out.breakdown_orders.push_back(1);
    }
    out.values[0] = det;

    auto cross_check = [&](int order, double value) {
        if (order % stride != 0 || order > opt.check_order_cap) return;
        const double ref = det_single(sym, order);
        if (std::abs(value - ref) > opt.check_tol)
            throw CrossCheckFailure("determinant recursion drifted at order " +
                                    std::to_string(order) + ": " + std::to_string(value) +
                                    " vs " + std::to_string(ref));
    };
    cross_check(1, det);

    for (int n = 1; n < upto; ++n) {
        bool stepped = false;
        if (alive) {
            double eps_f = 0.0, eps_b = 0.0;
            for (int j = 0; j < n; ++j) {
                eps_f += sym.c(n - j) * f[j];
                eps_b += sym.c(-j - 1) * b[j];
            }
            const double denom = 1.0 - eps_f * eps_b;
            const double pivot = denom / f[0];
            if (std::isfinite(pivot) && std::abs(pivot) > pivot_floor &&
                std::abs(denom) > opt.tol_pivot) {
                f_next.resize(n + 1);
                b_next.resize(n + 1);
                const double inv = 1.0 / denom;
                f_next[0] = f[0] * inv;
                b_next[0] = -eps_b * f[0] * inv;
                for (int i = 1; i < n; ++i) {
                    f_next[i] = (f[i] - eps_f * b[i - 1]) * inv;
                    b_next[i] = (b[i - 1] - eps_b * f[i]) * inv;
                }
                f_next[n] = -eps_f * b[n - 1] * inv;
                b_next[n] = b[n - 1] * inv;
                f.swap(f_next);
                b.swap(b_next);
                det *= pivot;
                stepped = true;
            }
        }
        if (!stepped) {
            det = detail::reseed_order(sym, n + 1, f, b, alive);
            out.breakdown_orders.push_back(n + 1);
        }
        out.values[n] = det;
        cross_check(n + 1, det);
    }
    return out;
}

// Reference sweep: det_single at every order.
inline DeterminantSweep det_sweep_naive(const ToeplitzSymbol& sym, int upto) {
    if (upto < 1 || upto > sym.max_order)
        throw InvalidArgument("det_sweep_naive upto out of range");
    DeterminantSweep out;
    out.method = DetMethod::PivotedElimination;
    out.values.resize(upto);
    for (int n = 1; n <= upto; ++n) out.values[n - 1] = det_single(sym, n);
    return out;
}

}  // namespace tfim
