#ifndef TSYS_SHIFT_SERIES_HPP
#define TSYS_SHIFT_SERIES_HPP

#include <map>
#include <stdexcept>

#include "tsys/spectral_function.hpp"

namespace tsys {

// Finite formal sum sum_m c_m D^m where D is the half-unit downward shift
// operator, subject to the commutation rule D f = f^- D, i.e.
// (c D^m)(d D^n) = c * d^{[-m]} * D^{m+n}. Truncation order is explicit and
// preserved by every operation.
template <class M>
class ShiftSeries {
  public:
    using SF = SpectralFunction<M>;

    explicit ShiftSeries(int order) : order_(order) {
        if (order < 0) throw std::domain_error("ShiftSeries: negative order");
    }

    static ShiftSeries one(int order) {
        ShiftSeries s(order);
        s.set(0, SF::one());
        return s;
    }
    static ShiftSeries term(const SF& c, int power, int order) {
        ShiftSeries s(order);
        s.set(power, c);
        return s;
    }

    int order() const { return order_; }

    SF coeff(int m) const {
        auto it = c_.find(m);
        return it == c_.end() ? SF::zero() : it->second;
    }

    void set(int power, const SF& c) {
        if (power < 0) throw std::domain_error("ShiftSeries: negative power");
        if (power > order_) return;  // beyond truncation
        if (c.is_zero()) c_.erase(power);
        else c_[power] = c;
    }

    bool is_zero() const { return c_.empty(); }

    friend ShiftSeries operator+(const ShiftSeries& a, const ShiftSeries& b) {
        ShiftSeries r(std::min(a.order_, b.order_));
        for (const auto& [m, c] : a.c_) r.set(m, c);
        for (const auto& [m, c] : b.c_) r.set(m, r.coeff(m) + c);
        return r;
    }
    friend ShiftSeries operator-(const ShiftSeries& a, const ShiftSeries& b) {
        ShiftSeries r(std::min(a.order_, b.order_));
        for (const auto& [m, c] : a.c_) r.set(m, c);
        for (const auto& [m, c] : b.c_) r.set(m, r.coeff(m) - c);
        return r;
    }
    friend ShiftSeries operator*(const ShiftSeries& a, const ShiftSeries& b) {
        ShiftSeries r(std::min(a.order_, b.order_));
        for (const auto& [m, cm] : a.c_) {
            if (m > r.order_) continue;
            for (const auto& [n, dn] : b.c_) {
                if (m + n > r.order_) continue;
                r.set(m + n, r.coeff(m + n) + cm * dn.shift(-m));
            }
        }
        return r;
    }
    ShiftSeries& operator+=(const ShiftSeries& b) { return *this = *this + b; }
    ShiftSeries& operator-=(const ShiftSeries& b) { return *this = *this - b; }
    ShiftSeries& operator*=(const ShiftSeries& b) { return *this = *this * b; }

    const std::map<int, SF>& terms() const { return c_; }

  private:
    int order_;
    std::map<int, SF> c_;  // power -> coefficient, powers in [0, order_]
};

// Truncated inverse of (1 - terms) by the geometric series
// 1 + terms + terms^2 + ...; requires the constant coefficient of `terms`
// to vanish so that the series terminates at the truncation order.
template <class M>
ShiftSeries<M> series_from_inverse(const ShiftSeries<M>& terms, int order) {
    if (!terms.coeff(0).is_zero())
        throw std::domain_error("series_from_inverse: nonzero constant coefficient");
    ShiftSeries<M> result = ShiftSeries<M>::one(order);
    ShiftSeries<M> power = ShiftSeries<M>::one(order);
    for (int p = 1; p <= order; ++p) {
        power *= terms;
        if (power.is_zero()) break;
        result += power;
    }
    return result;
}

// Reads T_k out of a generating series W = sum_k D^k T_k D^k: the D^{2k}
// coefficient is T_k^{[-k]}, so shift it back up by k.
template <class M>
SpectralFunction<M> extract_tk(const ShiftSeries<M>& w, int k) {
    if (k < 0) throw std::domain_error("extract_tk: negative k");
    if (w.order() < 2 * k)
        throw std::domain_error("extract_tk: truncation order below 2k");
    return w.coeff(2 * k).shift(k);
}

}  // namespace tsys

#endif
