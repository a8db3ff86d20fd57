#ifndef TSYS_HIROTA_SCALARS_HPP
#define TSYS_HIROTA_SCALARS_HPP

#include <vector>

#include "tsys/spectral_function.hpp"

namespace tsys::hirota {

template <class M>
struct PhiPair {
    Poly<M> phi;      // (u + i/2)^N
    Poly<M> phi_bar;  // (u - i/2)^N
};

// Scalar pair entering the bilinear relation for the periodic chain;
// satisfies phi_bar = phi^{[-2]}.
template <class M>
PhiPair<M> phi_periodic(int sites) {
    if (sites < 1) throw std::domain_error("phi_periodic: sites >= 1 required");
    Poly<M> up = Poly<M>::linear(M::half_shift(1));    // u + i/2
    Poly<M> dn = Poly<M>::linear(M::half_shift(-1));   // u - i/2
    return {up.pow(sites), dn.pow(sites)};
}

// Scalar function for the open chain with boundary parameters alpha, beta, xi:
//   -(1/u) (u + i(alpha - 1/2)) (sqrt(1+xi^2)(u - i/2) - i*beta) (u + i/2)^{2N+1}
template <class M>
SpectralFunction<M> phi_open(int sites, const typename M::Real& alpha,
                             const typename M::Real& beta, const typename M::Real& xi) {
    if (sites < 1) throw std::domain_error("phi_open: sites >= 1 required");
    using P = Poly<M>;
    using C = typename M::Coeff;
    const C i1 = M::half_shift(2);  // i
    typename M::Real root = M::sqrt_real(xi * xi + 1);
    // (u + i(alpha - 1/2))
    P f1 = P::linear(i1 * M::from_real(alpha) - M::half_shift(1));
    // sqrt(1+xi^2) * u - sqrt(1+xi^2)*i/2 - i*beta
    P f2(std::vector<C>{C(M::from_real(root) * M::half_shift(-1) - i1 * M::from_real(beta)),
                        M::from_real(root)});
    P f3 = P::linear(M::half_shift(1)).pow(2 * sites + 1);
    P num = -(f1 * f2 * f3);
    return SpectralFunction<M>(num, P::x());
}

// Inhomogeneous term of the T-Q relation for the open chain:
//   -2 (1 - sqrt(1+xi^2)) (u + i/2)^{2N+1} (u - i/2)^{2N+1}
template <class M>
Poly<M> delta_open(int sites, const typename M::Real& xi) {
    if (sites < 1) throw std::domain_error("delta_open: sites >= 1 required");
    using P = Poly<M>;
    typename M::Real root = M::sqrt_real(xi * xi + 1);
    typename M::Coeff pref =
        M::from_int(-2) * (M::from_int(1) - M::from_real(root));
    P up = P::linear(M::half_shift(1)).pow(2 * sites + 1);
    P dn = P::linear(M::half_shift(-1)).pow(2 * sites + 1);
    return up * dn * pref;
}

// Quantum determinant T_{2,k} = prod_{j=0}^{k-1} phi^{[k-2j]} phibar^{[2j-k]}
// with phibar = bar(phi); T_{2,0} = 1.
template <class M>
SpectralFunction<M> quantum_determinant(const SpectralFunction<M>& phi, int k) {
    if (k < 0) throw std::domain_error("quantum_determinant: k >= 0 required");
    SpectralFunction<M> phi_bar = phi.bar();
    SpectralFunction<M> r = SpectralFunction<M>::one();
    for (int j = 0; j < k; ++j)
        r *= phi.shift(k - 2 * j) * phi_bar.shift(2 * j - k);
    return r;
}

// X_k, Y_k and the psi ladders entering the auxiliary linear problems:
//   X_k        = prod_{j=0}^{k}   phi^{[k-2j]}
//   Y_k        = prod_{j=0}^{k-1} phibar^{[2j-k]}
//   psi_{l,k}  = prod_{j=0}^{k-l-1} phi^{[k-2j]}          (psi_{k,k} = 1)
//   psibar_{l,k} = prod_{j=0}^{k-l-1} phibar^{[2j-k]}
template <class M>
struct AuxFactors {
    using SF = SpectralFunction<M>;
    std::vector<SF> X;                    // index k
    std::vector<SF> Y;                    // index k
    std::vector<std::vector<SF>> psi;     // psi[k][l], 0 <= l <= k
    std::vector<std::vector<SF>> psi_bar; // psi_bar[k][l]
};

template <class M>
AuxFactors<M> aux_factors(const SpectralFunction<M>& phi, int kmax) {
    if (kmax < 0) throw std::domain_error("aux_factors: kmax >= 0 required");
    using SF = SpectralFunction<M>;
    SF phi_bar = phi.bar();
    AuxFactors<M> out;
    out.X.resize(kmax + 1);
    out.Y.resize(kmax + 1);
    out.psi.resize(kmax + 1);
    out.psi_bar.resize(kmax + 1);
    for (int k = 0; k <= kmax; ++k) {
        SF x = SF::one();
        for (int j = 0; j <= k; ++j) x *= phi.shift(k - 2 * j);
        out.X[k] = x;
        SF y = SF::one();
        for (int j = 0; j <= k - 1; ++j) y *= phi_bar.shift(2 * j - k);
        out.Y[k] = y;
        out.psi[k].resize(k + 1);
        out.psi_bar[k].resize(k + 1);
        for (int l = 0; l <= k; ++l) {
            SF p = SF::one(), pb = SF::one();
            for (int j = 0; j <= k - l - 1; ++j) {
                p *= phi.shift(k - 2 * j);
                pb *= phi_bar.shift(2 * j - k);
            }
            out.psi[k][l] = p;
            out.psi_bar[k][l] = pb;
        }
    }
    return out;
}

}  // namespace tsys::hirota

#endif
