#ifndef TSYS_DETKIT_DETKIT_HPP
#define TSYS_DETKIT_DETKIT_HPP

#include <algorithm>
#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tsys/hirota/relations.hpp"
#include "tsys/model.hpp"
#include "tsys/spectral_function.hpp"

namespace tsys::detkit {

template <class T>
struct FieldTraits;

template <>
struct FieldTraits<GaussianRational> {
    static constexpr bool exact = true;
    static GaussianRational zero() { return GaussianRational(); }
    static GaussianRational one() { return GaussianRational(1); }
    static bool is_zero(const GaussianRational& x) { return x.is_zero(); }
};

template <>
struct FieldTraits<std::complex<double>> {
    static constexpr bool exact = false;
    static std::complex<double> zero() { return {0.0, 0.0}; }
    static std::complex<double> one() { return {1.0, 0.0}; }
    static bool is_zero(const std::complex<double>& x) {
        return x.real() == 0.0 && x.imag() == 0.0;
    }
};

template <class M>
struct FieldTraits<SpectralFunction<M>> {
    static constexpr bool exact = true;  // fraction arithmetic divides exactly
    static SpectralFunction<M> zero() { return SpectralFunction<M>::zero(); }
    static SpectralFunction<M> one() { return SpectralFunction<M>::one(); }
    static bool is_zero(const SpectralFunction<M>& x) { return x.is_zero(); }
};

// Small dense rectangular matrix over a field-like entry type.
template <class T>
class Mat {
  public:
    Mat(int rows, int cols)
        : rows_(rows), cols_(cols), a_(size_t(rows) * cols, FieldTraits<T>::zero()) {
        if (rows < 0 || cols < 0) throw std::domain_error("Mat: negative shape");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    T& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const T& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  private:
    int rows_, cols_;
    std::vector<T> a_;
};

// Determinant by fraction-free (Bareiss) condensation when entry division is
// exact, by partially pivoted LU for plain floating entries. The empty
// matrix has determinant 1.
template <class T>
T det(Mat<T> m) {
    using F = FieldTraits<T>;
    if (m.rows() != m.cols()) throw std::domain_error("det: square matrix required");
    const int n = m.rows();
    if (n == 0) return F::one();

    if constexpr (F::exact) {
        T prev = F::one();
        bool negate = false;
        for (int k = 0; k < n - 1; ++k) {
            if (F::is_zero(m.at(k, k))) {
                int p = -1;
                for (int i = k + 1; i < n; ++i)
                    if (!F::is_zero(m.at(i, k))) {
                        p = i;
                        break;
                    }
                if (p < 0) return F::zero();
                for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
                negate = !negate;
            }
            for (int i = k + 1; i < n; ++i)
                for (int j = k + 1; j < n; ++j)
                    m.at(i, j) = (m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j)) / prev;
            prev = m.at(k, k);
        }
        T d = m.at(n - 1, n - 1);
        return negate ? -d : d;
    } else {
        bool negate = false;
        T d = F::one();
        for (int k = 0; k < n; ++k) {
            int p = k;
            double best = std::abs(m.at(k, k));
            for (int i = k + 1; i < n; ++i)
                if (std::abs(m.at(i, k)) > best) {
                    best = std::abs(m.at(i, k));
                    p = i;
                }
            if (best == 0.0) return F::zero();
            if (p != k) {
                for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
                negate = !negate;
            }
            d = d * m.at(k, k);
            for (int i = k + 1; i < n; ++i) {
                T f = m.at(i, k) / m.at(k, k);
                for (int j = k; j < n; ++j) m.at(i, j) = m.at(i, j) - f * m.at(k, j);
            }
        }
        return negate ? -d : d;
    }
}

// Minor determinant after removing the listed rows and columns (0-indexed).
// Removing everything leaves the empty matrix, whose determinant is 1; this
// convention is what makes the Jacobi identity close at size 2.
template <class T>
T minor_det(const Mat<T>& m, std::vector<int> removed_rows, std::vector<int> removed_cols) {
    if (removed_rows.size() != removed_cols.size())
        throw std::domain_error("minor_det: row/column removal counts differ");
    auto check = [&](const std::vector<int>& v, int bound) {
        for (int x : v)
            if (x < 0 || x >= bound) throw std::out_of_range("minor_det: index out of range");
    };
    check(removed_rows, m.rows());
    check(removed_cols, m.cols());
    std::sort(removed_rows.begin(), removed_rows.end());
    std::sort(removed_cols.begin(), removed_cols.end());
    auto keep = [](const std::vector<int>& removed, int bound) {
        std::vector<int> k;
        for (int i = 0; i < bound; ++i)
            if (!std::binary_search(removed.begin(), removed.end(), i)) k.push_back(i);
        return k;
    };
    std::vector<int> kr = keep(removed_rows, m.rows()), kc = keep(removed_cols, m.cols());
    Mat<T> sub(int(kr.size()), int(kc.size()));
    for (size_t i = 0; i < kr.size(); ++i)
        for (size_t j = 0; j < kc.size(); ++j) sub.at(int(i), int(j)) = m.at(kr[i], kc[j]);
    return det(sub);
}

// D[p1,p2|q1,q2] D - D[p1|q1] D[p2|q2] + D[p1|q2] D[p2|q1]; identically zero.
template <class T>
T jacobi_residual(const Mat<T>& m, int p1, int p2, int q1, int q2) {
    if (p1 == p2 || q1 == q2) throw std::domain_error("jacobi_residual: indices must differ");
    return minor_det(m, {p1, p2}, {q1, q2}) * det(m) -
           minor_det(m, {p1}, {q1}) * minor_det(m, {p2}, {q2}) +
           minor_det(m, {p1}, {q2}) * minor_det(m, {p2}, {q1});
}

// Maximal minor ("bracket") of a rectangular matrix with n+1 rows and r+1
// columns: determinant of the square matrix formed by the listed rows, in
// the listed order. Antisymmetric; zero when two indices coincide.
template <class T>
T bracket(const Mat<T>& x, const std::vector<int>& rows) {
    if (int(rows.size()) != x.cols())
        throw std::domain_error("bracket: need exactly cols() row indices");
    for (int r : rows)
        if (r < 0 || r >= x.rows()) throw std::out_of_range("bracket: row index out of range");
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = i + 1; j < rows.size(); ++j)
            if (rows[i] == rows[j]) return FieldTraits<T>::zero();
    Mat<T> sq(x.cols(), x.cols());
    for (int i = 0; i < x.cols(); ++i)
        for (int j = 0; j < x.cols(); ++j) sq.at(i, j) = x.at(rows[i], j);
    return det(sq);
}

// (i_0..i_r)(j_0..j_r) - sum_p (j_p, i_1..i_r)(j_0..j_{p-1}, i_0, j_{p+1}..j_r)
template <class T>
T plucker_residual(const Mat<T>& x, const std::vector<int>& i, const std::vector<int>& j) {
    if (int(i.size()) != x.cols() || int(j.size()) != x.cols())
        throw std::domain_error("plucker_residual: index lists must have cols() entries");
    T res = bracket(x, i) * bracket(x, j);
    for (size_t p = 0; p < j.size(); ++p) {
        std::vector<int> left = i;
        left[0] = j[p];
        std::vector<int> right = j;
        right[p] = i[0];
        res = res - bracket(x, left) * bracket(x, right);
    }
    return res;
}

// Rectangular matrix of the bilinear-hierarchy construction: with r = k and
// n = r + a + 2, the first r+1 rows are M^{(r+1)} and the remaining rows are
// unit rows at columns 0, r-a, r-a+1, ..., r.
template <class M>
Mat<SpectralFunction<M>> build_hirota_plucker_matrix(const SpectralFunction<M>& t1,
                                                     const SpectralFunction<M>& phi, int k,
                                                     int a) {
    using SF = SpectralFunction<M>;
    if (a < 0 || a > k - 1) throw std::out_of_range("build_hirota_plucker_matrix: bad (k,a)");
    const int r = k, n = r + a + 2;
    SF phib = phi.bar();
    Mat<SF> x(n + 1, r + 1);
    // M^{(r+1)}_{ij} with 1-based i,j mapped onto rows/cols 0..r
    for (int i = 1; i <= r + 1; ++i) {
        int s = r + 2 - 2 * i;
        if (i - 2 >= 0) x.at(i - 1, i - 2) = phib.shift(s);
        x.at(i - 1, i - 1) = t1.shift(s);
        if (i <= r) x.at(i - 1, i) = phi.shift(s);
    }
    x.at(r + 1, 0) = SF::one();
    for (int m = 0; m <= a; ++m) x.at(r + 2 + m, r - a + m) = SF::one();
    return x;
}

template <class M>
struct PluckerHirotaReport {
    bool residual_zero = false;       // the indexed relation closes exactly
    int surviving_terms = 0;          // nonvanishing bracket products, LHS included
    bool matched = false;             // the surviving terms align with H_{k,a}
    SpectralFunction<M> factor;       // common ratio bracket-product / H-term
    SpectralFunction<M> residual;     // LHS - sum(RHS)
};

// Runs the indexed maximal-minor relation on the constructed matrix and
// compares its surviving terms against the three terms of H_{k,a} built from
// the determinant solution. The common overall factor is measured, not
// assumed.
template <class M>
PluckerHirotaReport<M> verify_hirota_like_via_plucker(const SpectralFunction<M>& t1,
                                                      const SpectralFunction<M>& phi, int k,
                                                      int a) {
    using SF = SpectralFunction<M>;
    const int r = k;
    Mat<SF> x = build_hirota_plucker_matrix(t1, phi, k, a);

    std::vector<int> iIdx(r + 1), jIdx(r + 1);
    for (int l = 1; l <= r - a - 1; ++l) iIdx[l] = jIdx[l] = l;
    jIdx[0] = 0;
    iIdx[0] = r + 1;
    for (int l = r - a; l <= r; ++l) {
        jIdx[l] = l;
        iIdx[l] = l + a + 2;
    }

    PluckerHirotaReport<M> rep;
    SF lhs = bracket(x, iIdx) * bracket(x, jIdx);
    std::vector<SF> rhs_terms(r + 1);
    SF rhs_sum = SF::zero();
    int nonzero = lhs.is_zero() ? 0 : 1;
    for (int p = 0; p <= r; ++p) {
        std::vector<int> left = iIdx;
        left[0] = jIdx[p];
        std::vector<int> right = jIdx;
        right[p] = iIdx[0];
        rhs_terms[p] = bracket(x, left) * bracket(x, right);
        if (!rhs_terms[p].is_zero()) ++nonzero;
        rhs_sum += rhs_terms[p];
    }
    rep.residual = lhs - rhs_sum;
    rep.residual_zero = rep.residual.is_zero();
    rep.surviving_terms = nonzero;

    // The identity reads lhs - sum_p rhs_p = 0; collect the three surviving
    // products with their identity-side signs (+lhs, -rhs_p).
    std::vector<SF> products;
    if (!lhs.is_zero()) products.push_back(lhs);
    for (int p = 0; p <= r; ++p)
        if (!rhs_terms[p].is_zero()) products.push_back(-rhs_terms[p]);

    // Three terms of H_{k,a} on determinant-solution data.
    using hirota::det_solution;
    using hirota::quantum_determinant;
    SF h1 = det_solution(t1, phi, k + 1) * det_solution(t1, phi, k - a - 1).shift(a);
    SF h2 = -(det_solution(t1, phi, k).shift(-1) * det_solution(t1, phi, k - a).shift(a + 1));
    SF h3 = quantum_determinant(phi, k - a).shift(a) * det_solution(t1, phi, a).shift(a - k - 1);
    std::vector<SF> hterms = {h1, h2, h3};

    if (products.size() == 3) {
        // Find the pairing product_i = factor * hterm_{sigma(i)} with one
        // common factor across all three.
        int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (auto& pm : perm) {
            if (hterms[pm[0]].is_zero()) continue;
            SF f = products[0] / hterms[pm[0]];
            bool ok = !f.is_zero();
            for (int t = 1; t < 3 && ok; ++t)
                ok = (products[t] - f * hterms[pm[t]]).is_zero();
            if (ok) {
                rep.matched = true;
                rep.factor = f;
                break;
            }
        }
    }
    return rep;
}

}  // namespace tsys::detkit

#endif
