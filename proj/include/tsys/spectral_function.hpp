#ifndef TSYS_SPECTRAL_FUNCTION_HPP
#define TSYS_SPECTRAL_FUNCTION_HPP

#include <stdexcept>
#include <utility>

#include "tsys/poly.hpp"

namespace tsys {

// Rational function of the spectral parameter u, kept as numerator over a
// monic denominator. The exact model reduces by polynomial gcd; the float
// model cancels only exact common monomial factors of u (numerical gcd is
// not attempted).
template <class M>
class SpectralFunction {
  public:
    using C = typename M::Coeff;
    using P = Poly<M>;

    SpectralFunction() : num_(P::zero()), den_(P::one()) {}
    explicit SpectralFunction(P num) : num_(std::move(num)), den_(P::one()) {}
    SpectralFunction(P num, P den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero())
            throw std::domain_error("SpectralFunction: zero denominator");
        reduce();
    }

    static SpectralFunction zero() { return SpectralFunction(); }
    static SpectralFunction one() { return SpectralFunction(P::one()); }
    static SpectralFunction constant(const C& c) { return SpectralFunction(P::constant(c)); }
    static SpectralFunction x() { return SpectralFunction(P::x()); }

    const P& num() const { return num_; }
    const P& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    friend SpectralFunction operator+(const SpectralFunction& a, const SpectralFunction& b) {
        return SpectralFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend SpectralFunction operator-(const SpectralFunction& a, const SpectralFunction& b) {
        return SpectralFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend SpectralFunction operator-(const SpectralFunction& a) {
        SpectralFunction r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend SpectralFunction operator*(const SpectralFunction& a, const SpectralFunction& b) {
        return SpectralFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend SpectralFunction operator/(const SpectralFunction& a, const SpectralFunction& b) {
        if (b.is_zero()) throw std::domain_error("SpectralFunction: division by zero");
        return SpectralFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    SpectralFunction& operator+=(const SpectralFunction& b) { return *this = *this + b; }
    SpectralFunction& operator-=(const SpectralFunction& b) { return *this = *this - b; }
    SpectralFunction& operator*=(const SpectralFunction& b) { return *this = *this * b; }
    SpectralFunction& operator/=(const SpectralFunction& b) { return *this = *this / b; }

    SpectralFunction pow(int n) const {
        SpectralFunction r = one();
        for (int i = 0; i < n; ++i) r *= *this;
        return r;
    }

    // f(u) -> f(u + i*k/2)
    SpectralFunction shift(int k) const {
        if (k == 0) return *this;
        return SpectralFunction(num_.shift(k), den_.shift(k));
    }

    SpectralFunction bar() const { return SpectralFunction(num_.bar(), den_.bar()); }

    bool real_analytic(double tol = 1e-9) const {
        return num_.real_analytic(tol) && den_.real_analytic(tol);
    }

    // Exact value (throws on a denominator zero in the exact model).
    C eval(const C& u) const {
        C d = den_.eval(u);
        if (M::is_zero(d)) throw std::domain_error("SpectralFunction: pole hit in eval");
        return num_.eval(u) / d;
    }

    ScaledValue eval_scaled(const std::complex<double>& u) const
        requires(!M::exact)
    {
        ScaledValue n = num_.eval_scaled(u);
        ScaledValue d = den_.eval_scaled(u);
        if (d.is_zero()) throw std::domain_error("SpectralFunction: pole hit in eval_scaled");
        return scaled_div(n, d);
    }

    // Exact identity test (exact model).
    bool equals(const SpectralFunction& b) const
        requires(M::exact)
    {
        return (num_ * b.den_) == (b.num_ * den_);
    }

  private:
    P num_, den_;

    void reduce() {
        if (num_.is_zero()) {
            den_ = P::one();
            return;
        }
        if constexpr (M::exact) {
            P g = poly_gcd<M>(num_, den_);
            if (g.degree() > 0) {
                num_ = P::divmod(num_, g).first;
                den_ = P::divmod(den_, g).first;
            }
        } else {
            int m = std::min(num_.trailing_zero_count(), den_.trailing_zero_count());
            if (m > 0) {
                num_ = num_.shift_down(m);
                den_ = den_.shift_down(m);
            }
        }
        // monic denominator
        C lead = den_.leading();
        if (!(M::is_zero(lead - M::from_int(1)))) {
            C inv = M::from_int(1) / lead;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }
};

template <class M>
SpectralFunction<M> sf_from_poly(const Poly<M>& p) {
    return SpectralFunction<M>(p);
}

}  // namespace tsys

#endif
