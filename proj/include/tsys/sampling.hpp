#ifndef TSYS_SAMPLING_HPP
#define TSYS_SAMPLING_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "tsys/random.hpp"
#include "tsys/spectral_function.hpp"

namespace tsys {

// Fixed sample set for float-model residual certification. Points keep
// |Re u| >= 0.25 because every structural denominator zero in this problem
// sits on the imaginary axis; |u| stays <= 3.
inline std::vector<std::complex<double>> residual_sample_points(std::uint64_t seed, int count) {
    RandomSource rng(seed);
    std::vector<std::complex<double>> pts;
    pts.reserve(count);
    while (int(pts.size()) < count) {
        double re = rng.real(0.25, 2.5) * (rng.integer(0, 1) ? 1.0 : -1.0);
        double im = rng.real(-1.5, 1.5);
        pts.emplace_back(re, im);
    }
    return pts;
}

// max_s |f(u_s)| with overflow-safe evaluation; points where the value does
// not exist (pole) are skipped.
inline double sampled_abs_max(const SpectralFunction<FloatModel>& f,
                              const std::vector<std::complex<double>>& pts) {
    double m = 0.0;
    for (const auto& u : pts) {
        try {
            m = std::max(m, std::abs(f.eval_scaled(u).collapse()));
        } catch (const std::domain_error&) {
        }
    }
    return m;
}

// Relative sup-residual over the sample set: at each point the residual is
// normalized by the largest participating term, so common denominator
// blow-ups cancel out.
inline double sampled_relative_residual(const SpectralFunction<FloatModel>& residual,
                                        const std::vector<SpectralFunction<FloatModel>>& terms,
                                        const std::vector<std::complex<double>>& pts) {
    double worst = 0.0;
    for (const auto& u : pts) {
        try {
            ScaledValue r = residual.eval_scaled(u);
            if (r.is_zero()) continue;
            double scale_log2 = -1e18;
            for (const auto& t : terms) {
                ScaledValue tv = t.eval_scaled(u);
                if (!tv.is_zero()) scale_log2 = std::max(scale_log2, tv.log2_abs());
            }
            double rel_log2 = r.log2_abs() - std::max(scale_log2, 0.0);
            worst = std::max(worst, std::exp2(std::min(rel_log2, 1000.0)));
        } catch (const std::domain_error&) {
        }
    }
    return worst;
}

// Relative difference between two rational functions on a sample set.
inline double sampled_relative_diff(const SpectralFunction<FloatModel>& a,
                                    const SpectralFunction<FloatModel>& b,
                                    const std::vector<std::complex<double>>& pts) {
    return sampled_relative_residual(a - b, {a, b}, pts);
}

}  // namespace tsys

#endif
