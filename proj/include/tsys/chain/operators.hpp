#ifndef TSYS_CHAIN_OPERATORS_HPP
#define TSYS_CHAIN_OPERATORS_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace tsys::chain {

using Cd = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Dense operator together with its tensor-leg structure (ordered list of
// local dimensions whose product equals the matrix dimension).
struct OperatorMatrix {
    Matrix mat;
    std::vector<int> legs;

    OperatorMatrix() = default;
    OperatorMatrix(Matrix m, std::vector<int> l);

    int dim() const { return int(mat.rows()); }
    static OperatorMatrix identity(std::vector<int> legs);
};

int legs_product(const std::vector<int>& legs);

Matrix kron(const Matrix& a, const Matrix& b);

// Embeds a gate acting on the listed legs (in the listed order) into the
// full space described by dims; identity on all other legs.
Matrix embed(const Matrix& gate, const std::vector<int>& dims, const std::vector<int>& legs);

// Trace over leg 0 of dimension d0; the remaining legs stay in order.
Matrix partial_trace_first(const Matrix& m, int d0);

// Isometry from C^{n+1} onto the symmetric subspace of (C^2)^{\otimes n};
// columns are the normalized totally symmetric basis states.
Matrix sym_isometry(int n);

// Pauli matrices and single-site embeddings on an N-site chain (site index
// starts at 1 at the leftmost tensor factor).
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();
Matrix site_op(const Matrix& op1, int site, int sites);
Matrix sigma_z_total(int sites);

double frobenius(const Matrix& m);

// ||[a,b]|| / (||a|| ||b||), the scale-free commutator residual.
double commutator_residual(const Matrix& a, const Matrix& b);

}  // namespace tsys::chain

#endif
