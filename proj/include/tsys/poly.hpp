#ifndef TSYS_POLY_HPP
#define TSYS_POLY_HPP

#include <algorithm>
#include <cassert>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tsys/model.hpp"

namespace tsys {

// Value of a rational function evaluated with overflow-safe scaling:
// the represented number is mant * 2^exp2.
struct ScaledValue {
    std::complex<double> mant{0.0, 0.0};
    long exp2 = 0;

    bool is_zero() const { return mant.real() == 0.0 && mant.imag() == 0.0; }
    double log2_abs() const {
        if (is_zero()) return -1e18;
        return std::log2(std::abs(mant)) + double(exp2);
    }
    // Collapses to a plain double-range complex; saturates on overflow.
    std::complex<double> collapse() const {
        if (is_zero()) return {0.0, 0.0};
        double l = log2_abs();
        if (l > 1020.0) {
            double s = std::abs(mant);
            return mant / s * 1e300;
        }
        if (l < -1020.0) return {0.0, 0.0};
        return std::complex<double>(std::ldexp(mant.real(), int(exp2)),
                                    std::ldexp(mant.imag(), int(exp2)));
    }
};

inline ScaledValue normalize_scaled(std::complex<double> m, long e) {
    double a = std::abs(m);
    if (a == 0.0) return {};
    int k = 0;
    std::frexp(a, &k);
    // keep |mant| in [0.5, 1)
    m = std::complex<double>(std::ldexp(m.real(), -k), std::ldexp(m.imag(), -k));
    return {m, e + k};
}

inline ScaledValue scaled_div(const ScaledValue& a, const ScaledValue& b) {
    if (b.is_zero()) throw std::domain_error("scaled_div: division by zero");
    if (a.is_zero()) return {};
    return normalize_scaled(a.mant / b.mant, a.exp2 - b.exp2);
}

inline ScaledValue scaled_mul(const ScaledValue& a, const ScaledValue& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return normalize_scaled(a.mant * b.mant, a.exp2 + b.exp2);
}

// Dense univariate polynomial in the spectral parameter u, ascending degree.
// The zero polynomial has an empty coefficient list and degree -1.
template <class M>
class Poly {
  public:
    using C = typename M::Coeff;

    Poly() = default;
    explicit Poly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }
    explicit Poly(const C& c0) : c_{c0} { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return constant(M::from_int(1)); }
    static Poly constant(const C& c) {
        Poly p;
        p.c_.push_back(c);
        p.trim();
        return p;
    }
    static Poly x() {
        Poly p;
        p.c_ = {M::from_int(0), M::from_int(1)};
        return p;
    }
    // u + c
    static Poly linear(const C& c) {
        Poly p;
        p.c_ = {c, M::from_int(1)};
        return p;
    }

    int degree() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<C>& coeffs() const { return c_; }
    C coeff(int k) const {
        if (k < 0 || k >= int(c_.size())) return M::from_int(0);
        return c_[k];
    }
    C leading() const {
        if (is_zero()) throw std::domain_error("Poly: leading coefficient of zero");
        return c_.back();
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<C> r(std::max(a.c_.size(), b.c_.size()), M::from_int(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<C> r(std::max(a.c_.size(), b.c_.size()), M::from_int(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a) {
        std::vector<C> r = a.c_;
        for (auto& v : r) v = -v;
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        std::vector<C> r(a.c_.size() + b.c_.size() - 1, M::from_int(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const C& s) {
        std::vector<C> r = a.c_;
        for (auto& v : r) v *= s;
        return Poly(std::move(r));
    }
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    bool operator==(const Poly& b) const
        requires(M::exact)
    {
        if (c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] == b.c_[i])) return false;
        return true;
    }

    Poly pow(int n) const {
        if (n < 0) throw std::domain_error("Poly::pow: negative exponent");
        Poly r = one();
        for (int i = 0; i < n; ++i) r *= *this;
        return r;
    }

    // f(u) -> f(u + i*k/2)
    Poly shift(int k) const {
        if (k == 0 || is_zero()) return *this;
        const C s = M::half_shift(k);
        // Synthetic Horner: res(u) = (((c_d)(u+s) + c_{d-1})(u+s) + ...)
        std::vector<C> res{c_.back()};
        for (int j = degree() - 1; j >= 0; --j) {
            res.push_back(M::from_int(0));
            for (int m = int(res.size()) - 1; m >= 1; --m)
                res[m] = res[m - 1] + res[m] * s;
            res[0] = res[0] * s + c_[j];
        }
        return Poly(std::move(res));
    }

    // bar f(u) = (f(u*))*: conjugate all coefficients.
    Poly bar() const {
        std::vector<C> r = c_;
        for (auto& v : r) v = M::conj(v);
        return Poly(std::move(r));
    }

    bool real_analytic(double tol = 1e-9) const {
        for (const auto& v : c_)
            if (!M::is_real(v, tol)) return false;
        return true;
    }

    C eval(const C& u) const {
        C acc = M::from_int(0);
        for (int j = degree(); j >= 0; --j) acc = acc * u + c_[j];
        return acc;
    }

    // Overflow-safe evaluation (float model): Horner with renormalization.
    ScaledValue eval_scaled(const std::complex<double>& u) const
        requires(!M::exact)
    {
        ScaledValue acc{};
        ScaledValue zu = normalize_scaled(u, 0);
        bool u_zero = zu.is_zero();
        for (int j = degree(); j >= 0; --j) {
            if (!acc.is_zero() && !u_zero) acc = scaled_mul(acc, zu);
            else if (u_zero) acc = ScaledValue{};
            // add c_[j] at scale: bring coefficient into acc's frame
            std::complex<double> cj = c_[j];
            if (cj != std::complex<double>(0.0, 0.0)) {
                ScaledValue cv = normalize_scaled(cj, 0);
                if (acc.is_zero()) {
                    acc = cv;
                } else {
                    long de = cv.exp2 - acc.exp2;
                    if (de > 1020) acc = cv;
                    else if (de >= -1020)
                        acc = normalize_scaled(acc.mant + std::complex<double>(
                                                   std::ldexp(cv.mant.real(), int(de)),
                                                   std::ldexp(cv.mant.imag(), int(de))),
                                               acc.exp2);
                }
            }
        }
        return acc;
    }

    double max_abs_coeff() const {
        double m = 0.0;
        for (const auto& v : c_) m = std::max(m, M::abs_approx(v));
        return m;
    }

    // Quotient and remainder; coefficient arithmetic is field arithmetic in
    // both models, so this is plain long division.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::domain_error("Poly::divmod: division by zero polynomial");
        if (a.degree() < b.degree()) return {zero(), a};
        std::vector<C> rem = a.c_;
        std::vector<C> quo(a.degree() - b.degree() + 1, M::from_int(0));
        const C lead = b.leading();
        for (int k = a.degree() - b.degree(); k >= 0; --k) {
            C f = rem[k + b.degree()] / lead;
            quo[k] = f;
            if (!M::is_zero(f))
                for (int j = 0; j <= b.degree(); ++j) rem[k + j] -= f * b.c_[j];
            rem[k + b.degree()] = M::from_int(0);
        }
        return {Poly(std::move(quo)), Poly(std::move(rem))};
    }

    Poly monic() const {
        if (is_zero()) return *this;
        Poly r = *this;
        const C inv = M::from_int(1) / leading();
        for (auto& v : r.c_) v *= inv;
        return r;
    }

    // Number of leading coefficients of u^0, u^1, ... that are exactly zero.
    int trailing_zero_count() const {
        int n = 0;
        while (n < int(c_.size()) && M::is_zero(c_[n])) ++n;
        return n;
    }
    Poly shift_down(int m) const {  // divide by u^m; caller guarantees divisibility
        if (m == 0) return *this;
        if (trailing_zero_count() < m)
            throw std::domain_error("Poly::shift_down: not divisible by u^m");
        return Poly(std::vector<C>(c_.begin() + m, c_.end()));
    }

  private:
    std::vector<C> c_;

    void trim() {
        while (!c_.empty() && M::is_zero(c_.back())) c_.pop_back();
    }
};

// Monic gcd via Euclid with per-step monic normalization (exact model only).
template <class M>
Poly<M> poly_gcd(Poly<M> a, Poly<M> b) {
    static_assert(M::exact, "poly_gcd is exact-model only");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    a = a.monic();
    b = b.monic();
    while (!b.is_zero()) {
        auto [q, r] = Poly<M>::divmod(a, b);
        (void)q;
        a = b;
        b = r.is_zero() ? r : r.monic();
    }
    return a;
}

template <class M>
bool approx_equal(const Poly<M>& a, const Poly<M>& b, double tol = 1e-9) {
    int d = std::max(a.degree(), b.degree());
    for (int k = 0; k <= d; ++k)
        if (M::abs_approx(a.coeff(k) - b.coeff(k)) > tol) return false;
    return true;
}

}  // namespace tsys

#endif
