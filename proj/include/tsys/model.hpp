#ifndef TSYS_MODEL_HPP
#define TSYS_MODEL_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace tsys {

// Complex number with exact rational real and imaginary parts.
struct GaussianRational {
    mpq_class re;
    mpq_class im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(long n) : re(n), im(0) {}
    GaussianRational(const mpq_class& r) : re(r), im(0) {}
    GaussianRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational ratio(long num, long den) {
        if (den == 0) throw std::domain_error("GaussianRational: zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return GaussianRational(q);
    }
    // i*num/den
    static GaussianRational imag_ratio(long num, long den) {
        if (den == 0) throw std::domain_error("GaussianRational: zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return GaussianRational(mpq_class(0), q);
    }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    GaussianRational conj() const { return GaussianRational(re, -im); }

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re + b.re, a.im + b.im);
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re - b.re, a.im - b.im);
    }
    friend GaussianRational operator-(const GaussianRational& a) {
        return GaussianRational(-a.re, -a.im);
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        mpq_class n2 = b.re * b.re + b.im * b.im;
        if (sgn(n2) == 0) throw std::domain_error("GaussianRational: division by zero");
        return GaussianRational((a.re * b.re + a.im * b.im) / n2,
                                (a.im * b.re - a.re * b.im) / n2);
    }
    GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
    GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
    GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
    GaussianRational& operator/=(const GaussianRational& b) { return *this = *this / b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }

    std::string str() const {
        return "(" + re.get_str() + (sgn(im) >= 0 ? "+" : "") + im.get_str() + "i)";
    }
};

// Exact square root of a nonnegative rational, or failure if it is not a
// perfect rational square.
inline bool exact_sqrt(const mpq_class& x, mpq_class& out) {
    if (sgn(x) < 0) return false;
    mpz_class n = x.get_num(), d = x.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return false;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    out = mpq_class(sn, sd);
    out.canonicalize();
    return true;
}

// Exact coefficient model: field operations hold exactly, zero tests are exact.
struct ExactModel {
    static constexpr bool exact = true;
    using Coeff = GaussianRational;
    using Real = mpq_class;

    static Coeff conj(const Coeff& c) { return c.conj(); }
    static bool is_zero(const Coeff& c) { return c.is_zero(); }
    static bool is_real(const Coeff& c, double /*tol*/ = 0.0) { return sgn(c.im) == 0; }
    static Coeff from_int(long n) { return Coeff(n); }
    static Coeff from_real(const Real& r) { return Coeff(r); }
    // i*k/2 -- the half-unit shift step
    static Coeff half_shift(int k) { return Coeff::imag_ratio(k, 2); }
    static std::complex<double> to_complex(const Coeff& c) { return c.to_complex(); }
    static double abs_approx(const Coeff& c) { return std::abs(c.to_complex()); }
    static Real sqrt_real(const Real& r) {
        mpq_class s;
        if (!exact_sqrt(r, s))
            throw std::domain_error("ExactModel: sqrt of " + r.get_str() +
                                    " is not rational; use the float model");
        return s;
    }
    static Real real_of(double v) {
        mpq_class q(v);  // exact binary-to-rational conversion
        return q;
    }
};

// Floating coefficient model: equality means difference within a tolerance
// supplied at the comparison site (default 1e-9).
struct FloatModel {
    static constexpr bool exact = false;
    using Coeff = std::complex<double>;
    using Real = double;

    static constexpr double default_tol = 1e-9;

    static Coeff conj(const Coeff& c) { return std::conj(c); }
    static bool is_zero(const Coeff& c) { return c.real() == 0.0 && c.imag() == 0.0; }
    static bool is_real(const Coeff& c, double tol = default_tol) {
        return std::abs(c.imag()) <= tol;
    }
    static Coeff from_int(long n) { return Coeff(double(n), 0.0); }
    static Coeff from_real(Real r) { return Coeff(r, 0.0); }
    static Coeff half_shift(int k) { return Coeff(0.0, 0.5 * k); }
    static std::complex<double> to_complex(const Coeff& c) { return c; }
    static double abs_approx(const Coeff& c) { return std::abs(c); }
    static Real sqrt_real(Real r) {
        if (r < 0) throw std::domain_error("FloatModel: sqrt of negative value");
        return std::sqrt(r);
    }
    static Real real_of(double v) { return v; }
};

}  // namespace tsys

#endif
