#include "tsys/chain/fusion.hpp"

#include <stdexcept>

namespace tsys::chain {

namespace {
const Cd I_UNIT(0.0, 1.0);
}

Matrix permutation2() {
    Matrix p = Matrix::Zero(4, 4);
    p(0, 0) = 1;
    p(1, 2) = 1;
    p(2, 1) = 1;
    p(3, 3) = 1;
    return p;
}

Matrix r_fundamental(Cd u) { return u * Matrix::Identity(4, 4) + I_UNIT * permutation2(); }

Matrix projector_sym(int n) {
    if (n < 1) throw std::invalid_argument("projector_sym: n >= 1 required");
    const int dim = 1 << n;
    std::vector<int> dims(n, 2);
    Matrix acc = Matrix::Identity(dim, dim);
    double fact = 1.0;
    const Matrix p2 = permutation2();
    for (int k = 1; k <= n; ++k) {
        fact *= k;
        Matrix factor = Matrix::Identity(dim, dim);  // l = k term
        for (int l = 1; l <= k - 1; ++l) factor += embed(p2, dims, {l - 1, k - 1});
        acc = acc * factor;
    }
    return acc / fact;
}

Matrix k_fundamental(Cd u, double alpha, Cd xi_plus, Cd xi_minus) {
    Matrix k(2, 2);
    k(0, 0) = I_UNIT * alpha + u;
    k(0, 1) = u * xi_plus;
    k(1, 0) = u * xi_minus;
    k(1, 1) = I_UNIT * alpha - u;
    return k;
}

Cd chi1_den(int twoj, Cd u) {
    Cd r = 1.0;
    for (int k = 0; k <= twoj - 2; ++k) r *= u + I_UNIT * (0.5 * (twoj - 1 - 2 * k));
    return r;
}

Cd chi2_den(int twoj, Cd u) {
    Cd r = 1.0;
    for (int k = 1; k <= 2 * twoj - 3; ++k) r *= u + I_UNIT * (0.5 * (twoj - k));
    return r;
}

Poly<FloatModel> chi1_den_poly(int twoj) {
    auto p = Poly<FloatModel>::one();
    for (int k = 0; k <= twoj - 2; ++k)
        p *= Poly<FloatModel>::linear(Cd(0.0, 0.5 * (twoj - 1 - 2 * k)));
    return p;
}

Poly<FloatModel> chi2_den_poly(int twoj) {
    auto p = Poly<FloatModel>::one();
    for (int k = 1; k <= 2 * twoj - 3; ++k)
        p *= Poly<FloatModel>::linear(Cd(0.0, 0.5 * (twoj - k)));
    return p;
}

Matrix fuse_r_full(int twoj, Cd u) {
    if (twoj < 1) throw std::invalid_argument("fuse_r_full: twoj >= 1 required");
    std::vector<int> dims(twoj + 1, 2);  // a_1..a_{2j}, b
    const int dim = 1 << (twoj + 1);
    Matrix prod = Matrix::Identity(dim, dim);
    for (int k = 1; k <= twoj; ++k) {
        Cd arg = u + I_UNIT * (0.5 * (2 * k - twoj - 1));  // u + (k - j - 1/2) i
        prod = prod * embed(r_fundamental(arg), dims, {k - 1, twoj});
    }
    Matrix pa = kron(projector_sym(twoj), Matrix::Identity(2, 2));
    Cd den = chi1_den(twoj, u);
    if (std::abs(den) == 0.0) throw std::domain_error("fuse_r_full: normalization pole hit");
    return (pa * prod * pa) / den;
}

Matrix fuse_r(int twoj, Cd u) {
    Matrix full = fuse_r_full(twoj, u);
    Matrix w = kron(sym_isometry(twoj), Matrix::Identity(2, 2));
    return w.adjoint() * full * w;
}

Matrix fuse_k_full(int twoj, Cd u, double alpha, Cd xi_plus, Cd xi_minus) {
    if (twoj < 1) throw std::invalid_argument("fuse_k_full: twoj >= 1 required");
    std::vector<int> dims(twoj, 2);
    const int dim = 1 << twoj;
    Matrix prod = Matrix::Identity(dim, dim);
    for (int k = 1; k <= twoj; ++k) {
        Matrix brace = Matrix::Identity(dim, dim);
        for (int l = 1; l <= k - 1; ++l) {
            Cd arg = 2.0 * u + I_UNIT * double(k + l - twoj - 1);
            brace = brace * embed(r_fundamental(arg), dims, {l - 1, k - 1});
        }
        Cd karg = u + I_UNIT * (0.5 * (2 * k - twoj - 1));
        brace = brace * embed(k_fundamental(karg, alpha, xi_plus, xi_minus), dims, {k - 1});
        prod = prod * brace;
    }
    Matrix pa = projector_sym(twoj);
    Cd den = chi2_den(twoj, u);
    if (std::abs(den) == 0.0) throw std::domain_error("fuse_k_full: normalization pole hit");
    return (pa * prod * pa) / den;
}

Matrix fuse_k(int twoj, Cd u, double alpha, Cd xi_plus, Cd xi_minus) {
    Matrix full = fuse_k_full(twoj, u, alpha, xi_plus, xi_minus);
    Matrix w = sym_isometry(twoj);
    return w.adjoint() * full * w;
}

}  // namespace tsys::chain
