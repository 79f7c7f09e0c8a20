#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "tfim/errors.hpp"

namespace tfim {

// Momentum quantization for the fermionic ground-state sector.
//
// NeveuSchwarzEven: k = (2m+1)pi/N, m = 0..N/2-1, even N.  Excludes k = pi,
// so Lambda_k > 0 for every coupling; this is the default.
// PaperOdd: k = (2m+1)pi/N, m = 0..(N-1)/2, odd N.  Includes k = pi, where
// Lambda vanishes at lambda = 1.
enum class Grid { NeveuSchwarzEven, PaperOdd };

inline const char* grid_name(Grid g) {
    return g == Grid::NeveuSchwarzEven ? "ns-even" : "paper-odd";
}

struct ChainParams {
    int n_sites = 0;       // N
    double coupling = 0.0; // lambda >= 0
    Grid grid = Grid::NeveuSchwarzEven;
};

inline constexpr int kMaxSites = 8192;

inline void validate_params(const ChainParams& p) {
    if (p.n_sites < 2)
        throw InvalidArgument("n_sites must be >= 2, got " + std::to_string(p.n_sites));
    if (p.n_sites > kMaxSites)
        throw InvalidArgument("n_sites exceeds configured max " + std::to_string(kMaxSites));
    if (!(p.coupling >= 0.0) || !std::isfinite(p.coupling))
        throw InvalidArgument("coupling must be finite and >= 0");
    if (p.grid == Grid::NeveuSchwarzEven && p.n_sites % 2 != 0)
        throw InvalidArgument("NeveuSchwarzEven grid requires even n_sites");
    if (p.grid == Grid::PaperOdd && p.n_sites % 2 != 1)
        throw InvalidArgument("PaperOdd grid requires odd n_sites");
}

// Momenta k in (0, pi], strictly increasing.
inline std::vector<double> momentum_grid(const ChainParams& p) {
    validate_params(p);
    const int n = p.n_sites;
    const int count = (p.grid == Grid::NeveuSchwarzEven) ? n / 2 : (n + 1) / 2;
    std::vector<double> ks(count);
    for (int m = 0; m < count; ++m) {
        const int num = 2 * m + 1;
        // the PaperOdd endpoint is exactly pi; avoid an ulp of drift there
        ks[m] = (num == n) ? M_PI : num * M_PI / n;
    }
    return ks;
}

// Lambda_k = sqrt(1 + lambda^2 + 2 lambda cos k).
inline double dispersion(const ChainParams& p, double k) {
    validate_params(p);
    if (!(k > 0.0) || k > M_PI * (1.0 + 1e-14))
        throw InvalidArgument("momentum k must lie in (0, pi]");
    const double l = p.coupling;
    return std::sqrt(1.0 + l * l + 2.0 * l * std::cos(k));
}

struct WickCoefficients {
    ChainParams params;
    std::vector<double> dispersion; // Lambda_k over the grid
    std::vector<double> l_seq;      // L_n, n = 0..N (even in n)
    std::vector<double> g_seq;      // G_n, n = -N..N

    int n_sites() const { return params.n_sites; }

    double l(int n) const { return l_seq[static_cast<size_t>(n)]; }

    // G_n, n in [-N, N]
    double g(int n) const { return g_seq[static_cast<size_t>(n + params.n_sites)]; }
};

namespace detail {

inline void kahan_add(double& sum, double& comp, double value) {
    const double y = value - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
}

}  // namespace detail

// L_n = (2/N) sum_k cos(kn)/Lambda_k for n = 0..N, then G_n = L_n + lambda L_{n+1}
// with the even parity L_{-m} = L_m.  The n-dependence of cos(kn) is generated by
// the Chebyshev recurrence per momentum; the k-sum is Kahan-compensated because the
// terms alternate in sign.
inline WickCoefficients wick_coefficients(const ChainParams& p) {
    validate_params(p);
    const int n_sites = p.n_sites;
    const double lambda = p.coupling;

    WickCoefficients w;
    w.params = p;

    const auto ks = momentum_grid(p);
    w.dispersion.resize(ks.size());
    for (size_t i = 0; i < ks.size(); ++i) {
        const double l2 = 1.0 + lambda * lambda + 2.0 * lambda * std::cos(ks[i]);
        const double lam = std::sqrt(std::max(l2, 0.0));
        if (lam < 1e-12)
            throw DegenerateMode("Lambda_k ~ 0 at k = " + std::to_string(ks[i]) +
                                 " (lambda = " + std::to_string(lambda) +
                                 "); use the ns-even grid or offset lambda");
        w.dispersion[i] = lam;
    }

    std::vector<double> acc(n_sites + 1, 0.0), comp(n_sites + 1, 0.0);
    for (size_t i = 0; i < ks.size(); ++i) {
        const double weight = 1.0 / w.dispersion[i];
        const double c = std::cos(ks[i]);
        double u_prev = weight;     // weight * cos(0)
        double u_cur = weight * c;  // weight * cos(k)
        detail::kahan_add(acc[0], comp[0], u_prev);
        if (n_sites >= 1) detail::kahan_add(acc[1], comp[1], u_cur);
        for (int n = 2; n <= n_sites; ++n) {
            const double u_next = 2.0 * c * u_cur - u_prev;
            detail::kahan_add(acc[n], comp[n], u_next);
            u_prev = u_cur;
            u_cur = u_next;
        }
    }
    w.l_seq.resize(n_sites + 1);
    const double norm = 2.0 / n_sites;
    for (int n = 0; n <= n_sites; ++n) w.l_seq[n] = norm * acc[n];

    // G_n = L_n + lambda L_{n+1}; at n = N the antiperiodicity of the grid
    // (cos(k(N+r)) = -cos(kr)) resolves L_{N+1} = -L_1.
    w.g_seq.resize(2 * n_sites + 1);
    for (int n = -n_sites; n <= n_sites; ++n) {
        const double l_next = (n + 1 <= n_sites) ? w.l_seq[std::abs(n + 1)] : -w.l_seq[1];
        w.g_seq[n + n_sites] = w.l_seq[std::abs(n)] + lambda * l_next;
    }
    return w;
}

}  // namespace tfim
