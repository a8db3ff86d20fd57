#ifndef TSYS_CHAIN_FUSION_HPP
#define TSYS_CHAIN_FUSION_HPP

#include "tsys/chain/operators.hpp"
#include "tsys/poly.hpp"

namespace tsys::chain {

// Fundamental R-matrix u + i P on C^2 x C^2.
Matrix r_fundamental(Cd u);
Matrix permutation2();

// Symmetric projector on (C^2)^{\otimes n} built by the ordered product
// (1/n!) prod_{k=1}^{n} (sum_{l=1}^{k} P_{a_l a_k}) with P_{a_k a_k} = 1.
Matrix projector_sym(int n);

// General boundary matrix [[i alpha + u, u xi+], [u xi-, i alpha - u]].
Matrix k_fundamental(Cd u, double alpha, Cd xi_plus, Cd xi_minus);

// Normalization denominators (the fused operators carry their reciprocals).
Cd chi1_den(int twoj, Cd u);
Cd chi2_den(int twoj, Cd u);
Poly<FloatModel> chi1_den_poly(int twoj);
Poly<FloatModel> chi2_den_poly(int twoj);

// Fused R-matrix with auxiliary spin j = twoj/2 on the unprojected space
// (C^2)^{\otimes twoj} x C^2, projector-sandwiched and chi1-normalized.
Matrix fuse_r_full(int twoj, Cd u);

// Same operator compressed to the (twoj+1)-dimensional symmetric auxiliary
// space: acts on C^{twoj+1} x C^2.
Matrix fuse_r(int twoj, Cd u);

// Fused K-matrices on (C^2)^{\otimes twoj}, and the compressed form on
// C^{twoj+1}.
Matrix fuse_k_full(int twoj, Cd u, double alpha, Cd xi_plus, Cd xi_minus);
Matrix fuse_k(int twoj, Cd u, double alpha, Cd xi_plus, Cd xi_minus);

}  // namespace tsys::chain

#endif
