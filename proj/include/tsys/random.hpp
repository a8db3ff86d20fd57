#ifndef TSYS_RANDOM_HPP
#define TSYS_RANDOM_HPP

#include <random>

#include "tsys/spectral_function.hpp"

namespace tsys {

// Deterministic generators for property tests and identity suites. Exact
// coefficients are kept small so that repeated products stay cheap.
class RandomSource {
  public:
    explicit RandomSource(std::uint64_t seed) : eng_(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(eng_);
    }
    double real(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(eng_);
    }

    GaussianRational exact_rational() {
        mpq_class re(integer(-9, 9), integer(1, 6));
        re.canonicalize();
        mpq_class im(integer(-9, 9), integer(1, 6));
        im.canonicalize();
        return GaussianRational(re, im);
    }
    GaussianRational exact_rational_real() {
        mpq_class re(integer(-9, 9), integer(1, 6));
        re.canonicalize();
        return GaussianRational(re);
    }
    GaussianRational exact_rational_nonzero() {
        for (;;) {
            auto c = exact_rational();
            if (!c.is_zero()) return c;
        }
    }

    std::complex<double> complex_in_disc(double radius) {
        for (;;) {
            double re = real(-radius, radius), im = real(-radius, radius);
            std::complex<double> z(re, im);
            if (std::abs(z) <= radius) return z;
        }
    }

    template <class M>
    typename M::Coeff coeff() {
        if constexpr (M::exact) return exact_rational();
        else return complex_in_disc(2.0);
    }
    template <class M>
    typename M::Coeff coeff_real() {
        if constexpr (M::exact) return exact_rational_real();
        else return typename M::Coeff(real(-2.0, 2.0), 0.0);
    }

    // Random polynomial of exact degree d (leading coefficient nonzero).
    template <class M>
    Poly<M> poly(int d, bool real_coeffs = false) {
        std::vector<typename M::Coeff> c(d + 1);
        for (int i = 0; i <= d; ++i)
            c[i] = real_coeffs ? coeff_real<M>() : coeff<M>();
        while (M::is_zero(c[d])) c[d] = real_coeffs ? coeff_real<M>() : coeff<M>();
        return Poly<M>(std::move(c));
    }

    // Random rational function with numerator degree dn and denominator
    // degree dd; real_coeffs yields a real-analytic function.
    template <class M>
    SpectralFunction<M> rational(int dn, int dd, bool real_coeffs = false) {
        return SpectralFunction<M>(poly<M>(dn, real_coeffs), poly<M>(dd, real_coeffs));
    }

    std::mt19937_64& engine() { return eng_; }

  private:
    std::mt19937_64 eng_;
};

}  // namespace tsys

#endif
