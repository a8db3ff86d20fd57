#include "tsys/chain/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace tsys::chain {

int legs_product(const std::vector<int>& legs) {
    int p = 1;
    for (int d : legs) p *= d;
    return p;
}

OperatorMatrix::OperatorMatrix(Matrix m, std::vector<int> l) : mat(std::move(m)), legs(std::move(l)) {
    if (mat.rows() != mat.cols()) throw std::invalid_argument("OperatorMatrix: square matrix expected");
    if (legs_product(legs) != mat.rows())
        throw std::invalid_argument("OperatorMatrix: leg dimensions do not match matrix size");
}

OperatorMatrix OperatorMatrix::identity(std::vector<int> legs) {
    int d = legs_product(legs);
    return OperatorMatrix(Matrix::Identity(d, d), std::move(legs));
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return r;
}

namespace {

// Mixed-radix index helpers for heterogeneous legs.
void decompose(int idx, const std::vector<int>& dims, std::vector<int>& out) {
    for (int k = int(dims.size()) - 1; k >= 0; --k) {
        out[k] = idx % dims[k];
        idx /= dims[k];
    }
}

int compose(const std::vector<int>& digits, const std::vector<int>& dims) {
    int idx = 0;
    for (size_t k = 0; k < dims.size(); ++k) idx = idx * dims[k] + digits[k];
    return idx;
}

}  // namespace

Matrix embed(const Matrix& gate, const std::vector<int>& dims, const std::vector<int>& legs) {
    int gd = 1;
    for (int l : legs) {
        if (l < 0 || l >= int(dims.size())) throw std::out_of_range("embed: leg index out of range");
        gd *= dims[l];
    }
    if (gate.rows() != gd || gate.cols() != gd)
        throw std::invalid_argument("embed: gate dimension does not match selected legs");

    const int total = legs_product(dims);
    Matrix r = Matrix::Zero(total, total);
    std::vector<int> gdims;
    for (int l : legs) gdims.push_back(dims[l]);

    std::vector<int> digits(dims.size()), gin(legs.size()), gout(legs.size());
    for (int col = 0; col < total; ++col) {
        decompose(col, dims, digits);
        for (size_t k = 0; k < legs.size(); ++k) gin[k] = digits[legs[k]];
        const int gcol = compose(gin, gdims);
        for (int grow = 0; grow < gd; ++grow) {
            Cd v = gate(grow, gcol);
            if (v == Cd(0.0, 0.0)) continue;
            decompose(grow, gdims, gout);
            std::vector<int> rdigits = digits;
            for (size_t k = 0; k < legs.size(); ++k) rdigits[legs[k]] = gout[k];
            r(compose(rdigits, dims), col) += v;
        }
    }
    return r;
}

Matrix partial_trace_first(const Matrix& m, int d0) {
    if (m.rows() % d0 != 0) throw std::invalid_argument("partial_trace_first: dimension mismatch");
    const int rest = int(m.rows()) / d0;
    Matrix r = Matrix::Zero(rest, rest);
    for (int a = 0; a < d0; ++a) r += m.block(a * rest, a * rest, rest, rest);
    return r;
}

Matrix sym_isometry(int n) {
    const int dim = 1 << n;
    Matrix u = Matrix::Zero(dim, n + 1);
    std::vector<double> norm(n + 1, 0.0);
    for (int s = 0; s < dim; ++s) norm[__builtin_popcount(unsigned(s))] += 1.0;
    for (int s = 0; s < dim; ++s) {
        int m = __builtin_popcount(unsigned(s));
        u(s, m) = 1.0 / std::sqrt(norm[m]);
    }
    return u;
}

Matrix pauli_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}
Matrix pauli_y() {
    Matrix m(2, 2);
    m << Cd(0, 0), Cd(0, -1), Cd(0, 1), Cd(0, 0);
    return m;
}
Matrix pauli_z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

Matrix site_op(const Matrix& op1, int site, int sites) {
    if (site < 1 || site > sites) throw std::out_of_range("site_op: site out of range");
    std::vector<int> dims(sites, 2);
    return embed(op1, dims, {site - 1});
}

Matrix sigma_z_total(int sites) {
    Matrix r = Matrix::Zero(1 << sites, 1 << sites);
    for (int n = 1; n <= sites; ++n) r += site_op(pauli_z(), n, sites);
    return r;
}

double frobenius(const Matrix& m) { return m.norm(); }

double commutator_residual(const Matrix& a, const Matrix& b) {
    double scale = frobenius(a) * frobenius(b);
    if (scale == 0.0) return 0.0;
    return frobenius(a * b - b * a) / scale;
}

}  // namespace tsys::chain
