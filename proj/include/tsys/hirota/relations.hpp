#ifndef TSYS_HIROTA_RELATIONS_HPP
#define TSYS_HIROTA_RELATIONS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "tsys/hirota/scalars.hpp"
#include "tsys/shift_series.hpp"

namespace tsys::hirota {

// Scalar data of one eigenstate: the tower T_0..T_kmax together with the
// scalars phi, phibar, delta and the bilinear right-hand sides. T_{-1} = 0
// and the T_0 convention (1 for open, phi^- for periodic) are fixed here so
// the evaluators never special-case them.
template <class M>
struct TFamily {
    using SF = SpectralFunction<M>;

    bool open = true;
    std::vector<SF> T;    // T_0 .. T_kmax
    std::vector<SF> rhs;  // bilinear RHS at level k: qdet (open), phi^{[k]} phibar^{[-k]} (periodic)
    SF phi, phi_bar, delta;

    int kmax() const { return int(T.size()) - 1; }

    SF T_at(int k) const {
        if (k == -1) return SF::zero();
        if (k < -1 || k > kmax())
            throw std::out_of_range("TFamily: T_" + std::to_string(k) + " not stored");
        return T[k];
    }
    SF rhs_at(int k) const {
        if (k < 0 || k >= int(rhs.size()))
            throw std::out_of_range("TFamily: rhs at k=" + std::to_string(k) + " not stored");
        return rhs[k];
    }
};

// Assembles an open-chain family: T_0 = 1 is prepended, RHS is the quantum
// determinant tower derived from phi.
template <class M>
TFamily<M> make_open_family(const SpectralFunction<M>& phi, const SpectralFunction<M>& delta,
                            std::vector<SpectralFunction<M>> t_from_1) {
    TFamily<M> f;
    f.open = true;
    f.phi = phi;
    f.phi_bar = phi.bar();
    f.delta = delta;
    f.T.push_back(SpectralFunction<M>::one());
    for (auto& t : t_from_1) f.T.push_back(std::move(t));
    for (int k = 0; k <= f.kmax(); ++k) f.rhs.push_back(quantum_determinant(phi, k));
    return f;
}

// Assembles a periodic family: T_0 = phi^- is prepended and the RHS at level
// k is phi^{[k]} phibar^{[-k]}.
template <class M>
TFamily<M> make_periodic_family(const PhiPair<M>& pp,
                                std::vector<SpectralFunction<M>> t_from_1) {
    TFamily<M> f;
    f.open = false;
    f.phi = SpectralFunction<M>(pp.phi);
    f.phi_bar = SpectralFunction<M>(pp.phi_bar);
    f.delta = SpectralFunction<M>::zero();
    f.T.push_back(f.phi.shift(-1));
    for (auto& t : t_from_1) f.T.push_back(std::move(t));
    for (int k = 0; k <= f.kmax(); ++k)
        f.rhs.push_back(f.phi.shift(k) * f.phi_bar.shift(-k));
    return f;
}

// T_k^+ T_k^- - T_{k+1} T_{k-1} - RHS_k
template <class M>
SpectralFunction<M> hirota_residual(const TFamily<M>& fam, int k) {
    return fam.T_at(k).shift(1) * fam.T_at(k).shift(-1) -
           fam.T_at(k + 1) * fam.T_at(k - 1) - fam.rhs_at(k);
}

// Same combination with the three terms exposed, for relative normalization
// of sampled residuals.
template <class M>
std::vector<SpectralFunction<M>> hirota_terms(const TFamily<M>& fam, int k) {
    return {fam.T_at(k).shift(1) * fam.T_at(k).shift(-1),
            fam.T_at(k + 1) * fam.T_at(k - 1), fam.rhs_at(k)};
}

enum class LaxVariant { periodic, open_hom, open_inhom };
enum class LaxSide { first, second };

template <class M>
struct LaxWitness {
    LaxVariant variant;
    LaxSide side;
    int k = 0;
    SpectralFunction<M> residual;
    std::vector<SpectralFunction<M>> terms;  // for relative normalization
};

// Left-minus-right residual of the auxiliary linear problem. Q must be real
// analytic so that bar(Q) = Q holds for the conjugated occurrences.
template <class M>
LaxWitness<M> lax_residual(const TFamily<M>& fam, const Poly<M>& q, int k,
                           LaxVariant variant, LaxSide side, double tol = 1e-9) {
    using SF = SpectralFunction<M>;
    if (!q.real_analytic(M::exact ? 0.0 : tol))
        throw std::domain_error("lax_residual: Q must be real analytic");
    SF Q{q};
    LaxWitness<M> w;
    w.variant = variant;
    w.side = side;
    w.k = k;

    const SF phi = fam.phi, phib = fam.phi_bar;
    std::vector<SF> terms;
    SF res;
    if (variant == LaxVariant::periodic) {
        if (side == LaxSide::first) {
            terms = {fam.T_at(k + 1) * Q.shift(k), fam.T_at(k).shift(-1) * Q.shift(k + 2),
                     phi.shift(k) * Q.shift(-k - 2)};
            res = terms[0] - terms[1] - terms[2];
        } else {
            terms = {fam.T_at(k - 1) * Q.shift(-k - 2), fam.T_at(k).shift(-1) * Q.shift(-k),
                     phib.shift(-k) * Q.shift(k)};
            res = terms[0] - terms[1] + terms[2];
        }
    } else {
        auto aux = aux_factors(phi, k + 1);
        if (side == LaxSide::first) {
            terms = {fam.T_at(k + 1) * Q.shift(k),
                     phib.shift(k) * fam.T_at(k).shift(-1) * Q.shift(k + 2),
                     aux.X[k] * Q.shift(-k - 2)};
            res = terms[0] - terms[1] - terms[2];
            if (variant == LaxVariant::open_inhom) {
                for (int l = 0; l <= k; ++l) {
                    SF t = aux.psi[k][l] * fam.delta.shift(2 * l - k) *
                           fam.T_at(l).shift(l - k - 1);
                    terms.push_back(t);
                    res -= t;
                }
            }
        } else {
            terms = {phi.shift(-k) * fam.T_at(k - 1) * Q.shift(-k - 2),
                     fam.T_at(k).shift(-1) * Q.shift(-k), aux.Y[k] * Q.shift(k)};
            res = terms[0] - terms[1] + terms[2];
            if (variant == LaxVariant::open_inhom) {
                for (int l = 0; l <= k - 1; ++l) {
                    SF t = aux.psi_bar[k - 1][l].shift(-1) * fam.delta.shift(k - 2 * l - 2) *
                           fam.T_at(l).shift(k - l - 1);
                    terms.push_back(t);
                    res += t;
                }
            }
        }
    }
    w.residual = res;
    w.terms = std::move(terms);
    return w;
}

// Solves the first equation of the auxiliary linear problem for T_{k+1},
// given T_0..T_k, Q and the scalars. Linearity makes this a plain division
// by Q^{[k]}.
template <class M>
SpectralFunction<M> solve_t_next(const TFamily<M>& fam, const Poly<M>& q, int k,
                                 LaxVariant variant) {
    using SF = SpectralFunction<M>;
    SF Q{q};
    const SF phi = fam.phi, phib = fam.phi_bar;
    SF rhs;
    if (variant == LaxVariant::periodic) {
        rhs = fam.T_at(k).shift(-1) * Q.shift(k + 2) + phi.shift(k) * Q.shift(-k - 2);
    } else {
        auto aux = aux_factors(phi, k + 1);
        rhs = phib.shift(k) * fam.T_at(k).shift(-1) * Q.shift(k + 2) +
              aux.X[k] * Q.shift(-k - 2);
        if (variant == LaxVariant::open_inhom)
            for (int l = 0; l <= k; ++l)
                rhs += aux.psi[k][l] * fam.delta.shift(2 * l - k) *
                       fam.T_at(l).shift(l - k - 1);
    }
    return rhs / Q.shift(k);
}

// H_{k,a} = T_{k+1} T_{k-a-1}^{[a]} - T_k^- T_{k-a}^{[a+1]} + T_{2,k-a}^{[a]} T_a^{[a-k-1]}
template <class M>
SpectralFunction<M> hirota_like_residual(const TFamily<M>& fam, int k, int a) {
    if (a < 0 || a > k - 1)
        throw std::out_of_range("hirota_like_residual: need 0 <= a <= k-1");
    return fam.T_at(k + 1) * fam.T_at(k - a - 1).shift(a) -
           fam.T_at(k).shift(-1) * fam.T_at(k - a).shift(a + 1) +
           fam.rhs_at(k - a).shift(a) * fam.T_at(a).shift(a - k - 1);
}

template <class M>
std::vector<SpectralFunction<M>> hirota_like_terms(const TFamily<M>& fam, int k, int a) {
    return {fam.T_at(k + 1) * fam.T_at(k - a - 1).shift(a),
            fam.T_at(k).shift(-1) * fam.T_at(k - a).shift(a + 1),
            fam.rhs_at(k - a).shift(a) * fam.T_at(a).shift(a - k - 1)};
}

// Compatibility combination of the inhomogeneous auxiliary problem:
//   (T_k^+ T_k^- - T_{k+1} T_{k-1} - T_{2,k}) phi^{[-k]} Q^{[-k-2]}
//     - sum_{a=0}^{k-1} Delta^{[-k+2a]} (prod_{j<a} phibar^{[-k+2j]}) H_{k,a}
template <class M>
SpectralFunction<M> compatibility_residual(const TFamily<M>& fam, const Poly<M>& q, int k) {
    using SF = SpectralFunction<M>;
    SF Q{q};
    SF lhs = hirota_residual(fam, k) * fam.phi.shift(-k) * Q.shift(-k - 2);
    SF rhs = SF::zero();
    for (int a = 0; a <= k - 1; ++a) {
        SF pref = fam.delta.shift(-k + 2 * a);
        for (int j = 0; j <= a - 1; ++j) pref *= fam.phi_bar.shift(-k + 2 * j);
        rhs += pref * hirota_like_residual(fam, k, a);
    }
    return lhs - rhs;
}

// T_1 Q - phibar Q^{[2]} - phi Q^{[-2]} - Delta
template <class M>
SpectralFunction<M> tq_residual(const SpectralFunction<M>& t1, const Poly<M>& q,
                                const SpectralFunction<M>& phi,
                                const SpectralFunction<M>& delta) {
    using SF = SpectralFunction<M>;
    SF Q{q};
    return t1 * Q - phi.bar() * Q.shift(2) - phi * Q.shift(-2) - delta;
}

template <class M>
std::vector<SpectralFunction<M>> tq_terms(const SpectralFunction<M>& t1, const Poly<M>& q,
                                          const SpectralFunction<M>& phi,
                                          const SpectralFunction<M>& delta) {
    using SF = SpectralFunction<M>;
    SF Q{q};
    return {t1 * Q, phi.bar() * Q.shift(2), phi * Q.shift(-2), delta};
}

// Closed form of T_k for the diagonal (Delta = 0) case, built from
// A = phi Q^{[-2]}/Q and B = phibar Q^{[2]}/Q:
//   T_k = sum_{l=0}^{k} prod_{j=0}^{k-l-1} B^{[k-1-2j]} prod_{i=0}^{l-1} A^{[2l-k-1-2i]}
template <class M>
SpectralFunction<M> tk_from_q_diag(const SpectralFunction<M>& a, const SpectralFunction<M>& b,
                                   int k) {
    using SF = SpectralFunction<M>;
    SF sum = SF::zero();
    for (int l = 0; l <= k; ++l) {
        SF term = SF::one();
        for (int j = 0; j <= k - l - 1; ++j) term *= b.shift(k - 1 - 2 * j);
        for (int i = 0; i <= l - 1; ++i) term *= a.shift(2 * l - k - 1 - 2 * i);
        sum += term;
    }
    return sum;
}

// Determinant solution of the bilinear hierarchy: T_k = det M^{(k)} with
//   M^{(k)}_{ij} = T_1^{[k+1-2i]} d_{ij} + phibar^{[k+1-2i]} d_{i,j+1}
//                + phi^{[k+1-2i]} d_{i,j-1}.
// Tridiagonal, so the determinant is computed by the three-term continuant
// recursion (no divisions).
template <class M>
SpectralFunction<M> det_solution(const SpectralFunction<M>& t1, const SpectralFunction<M>& phi,
                                 int k) {
    using SF = SpectralFunction<M>;
    if (k < 0) throw std::domain_error("det_solution: k >= 0 required");
    if (k == 0) return SF::one();
    SF phib = phi.bar();
    auto diag = [&](int i) { return t1.shift(k + 1 - 2 * i); };
    auto sub = [&](int i) { return phib.shift(k + 1 - 2 * i); };   // entry (i, i-1)
    auto sup = [&](int i) { return phi.shift(k + 1 - 2 * i); };    // entry (i, i+1)
    SF dPrev = SF::one();  // det of leading 0x0
    SF dCur = diag(1);     // det of leading 1x1
    for (int m = 2; m <= k; ++m) {
        SF dNext = diag(m) * dCur - sub(m) * sup(m - 1) * dPrev;
        dPrev = dCur;
        dCur = dNext;
    }
    return dCur;
}

// Generating series for the diagonal case:
//   W_diag = (1 - D B D)^{-1} (1 - D A D)^{-1}
template <class M>
ShiftSeries<M> w_series_diag(const SpectralFunction<M>& a, const SpectralFunction<M>& b,
                             int order) {
    using SS = ShiftSeries<M>;
    SS dbd = SS::term(b.shift(-1), 2, order);  // D B D = B^{[-1]} D^2
    SS dad = SS::term(a.shift(-1), 2, order);
    return series_from_inverse(dbd, order) * series_from_inverse(dad, order);
}

// Generating series for the inhomogeneous case:
//   W = [1 - D (A+B+C) D + D A D^2 B D]^{-1}
template <class M>
ShiftSeries<M> w_series_inhom(const SpectralFunction<M>& a, const SpectralFunction<M>& b,
                              const SpectralFunction<M>& c, int order) {
    using SS = ShiftSeries<M>;
    SS x = SS::term((a + b + c).shift(-1), 2, order);
    SS corr = SS::term(a.shift(-1) * b.shift(-3), 4, order);  // D A D^2 B D
    return series_from_inverse(x - corr, order);
}

}  // namespace tsys::hirota

#endif
