#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace tfim::pauli {

// Dense real state vectors over N spins, basis state b: bit i = 0 means
// sigma^z_i = +1.  The Hamiltonian and the ground states handled here are
// real, so sigma^y enters through the real antisymmetric Ytilde = -i sigma^y.

using State = std::vector<double>;

inline int z_of_bit(uint32_t b, int site) { return (b >> site) & 1u ? -1 : 1; }

inline double dot(const State& a, const State& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const State& a) { return dot(a, a); }

// out = (sum_i sigma^x_i) psi
inline State apply_sum_x(int n_sites, const State& psi) {
    const size_t dim = psi.size();
    State out(dim, 0.0);
    for (uint32_t b = 0; b < dim; ++b) {
        const double a = psi[b];
        if (a == 0.0) continue;
        for (int i = 0; i < n_sites; ++i) out[b ^ (1u << i)] += a;
    }
    return out;
}

// out = (sum_i Ytilde_i) psi with Ytilde|b> = (-1)^{b_i} |b ^ bit_i>;
// then sum_i sigma^y_i = i * sum_i Ytilde_i.
inline State apply_sum_ytilde(int n_sites, const State& psi) {
    const size_t dim = psi.size();
    State out(dim, 0.0);
    for (uint32_t b = 0; b < dim; ++b) {
        const double a = psi[b];
        if (a == 0.0) continue;
        for (int i = 0; i < n_sites; ++i) {
            const double sign = (b >> i) & 1u ? -1.0 : 1.0;
            out[b ^ (1u << i)] += sign * a;
        }
    }
    return out;
}

// out = (sum_i sigma^z_i) psi (diagonal)
inline State apply_sum_z(int n_sites, const State& psi) {
    const size_t dim = psi.size();
    State out(dim);
    for (uint32_t b = 0; b < dim; ++b)
        out[b] = (n_sites - 2 * std::popcount(b)) * psi[b];
    return out;
}

// <sigma^x_s1 sigma^x_s2>
inline double corr_xx(const State& psi, int s1, int s2) {
    if (s1 == s2) return norm2(psi);
    const uint32_t mask = (1u << s1) | (1u << s2);
    double s = 0.0;
    for (uint32_t b = 0; b < psi.size(); ++b) s += psi[b] * psi[b ^ mask];
    return s;
}

// <sigma^y_s1 sigma^y_s2> = -sum_b (-1)^{b_{s1}+b_{s2}} psi[b] psi[b^mask]
inline double corr_yy(const State& psi, int s1, int s2) {
    if (s1 == s2) return norm2(psi);
    const uint32_t mask = (1u << s1) | (1u << s2);
    double s = 0.0;
    for (uint32_t b = 0; b < psi.size(); ++b) {
        const double sign = std::popcount(b & mask) & 1u ? 1.0 : -1.0;
        s += sign * psi[b] * psi[b ^ mask];
    }
    return s;
}

// <sigma^z_s1 sigma^z_s2>
inline double corr_zz(const State& psi, int s1, int s2) {
    double s = 0.0;
    for (uint32_t b = 0; b < psi.size(); ++b) {
        const double z = z_of_bit(b, s1) * z_of_bit(b, s2);
        s += z * psi[b] * psi[b];
    }
    return s;
}

inline double site_z(const State& psi, int site) {
    double s = 0.0;
    for (uint32_t b = 0; b < psi.size(); ++b) s += z_of_bit(b, site) * psi[b] * psi[b];
    return s;
}

}  // namespace tfim::pauli
