#include "szq/poly.hpp"

#include <algorithm>
#include <cmath>

#include "szq/error.hpp"

namespace szq {

ComplexPoly::ComplexPoly() : c_{cplx(0.0)} {}

ComplexPoly::ComplexPoly(std::vector<cplx> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.push_back(0.0);
    trim();
}

ComplexPoly ComplexPoly::constant(cplx c) { return ComplexPoly({c}); }

ComplexPoly ComplexPoly::monomial(int k, cplx c) {
    if (k < 0) throw Error(Condition::degree, "negative monomial degree");
    std::vector<cplx> v(static_cast<std::size_t>(k) + 1, 0.0);
    v.back() = c;
    return ComplexPoly(std::move(v));
}

ComplexPoly ComplexPoly::from_roots(const std::vector<cplx>& roots) {
    std::vector<cplx> c{1.0};
    for (cplx r : roots) {
        std::vector<cplx> next(c.size() + 1, 0.0);
        for (std::size_t j = 0; j < c.size(); ++j) {
            next[j + 1] += c[j];
            next[j] -= r * c[j];
        }
        c = std::move(next);
    }
    return ComplexPoly(std::move(c));
}

void ComplexPoly::trim() {
    while (c_.size() > 1 && c_.back() == cplx(0.0)) c_.pop_back();
}

cplx ComplexPoly::coeff(int k) const noexcept {
    if (k < 0 || k > degree()) return 0.0;
    return c_[static_cast<std::size_t>(k)];
}

bool ComplexPoly::is_zero() const noexcept { return c_.size() == 1 && c_[0] == cplx(0.0); }

double ComplexPoly::max_abs_coeff() const noexcept {
    double m = 0.0;
    for (cplx v : c_) m = std::max(m, std::abs(v));
    return m;
}

cplx ComplexPoly::operator()(cplx z) const noexcept {
    cplx acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

ComplexPoly ComplexPoly::shifted(int k) const {
    if (is_zero()) return *this;
    std::vector<cplx> v(static_cast<std::size_t>(k), 0.0);
    v.insert(v.end(), c_.begin(), c_.end());
    return ComplexPoly(std::move(v));
}

ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b) {
    std::vector<cplx> v(std::max(a.c_.size(), b.c_.size()), 0.0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return ComplexPoly(std::move(v));
}

ComplexPoly operator-(const ComplexPoly& a, const ComplexPoly& b) { return a + cplx(-1.0) * b; }

ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b) {
    std::vector<cplx> v(a.c_.size() + b.c_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return ComplexPoly(std::move(v));
}

ComplexPoly operator*(cplx s, const ComplexPoly& a) {
    std::vector<cplx> v = a.c_;
    for (cplx& x : v) x *= s;
    return ComplexPoly(std::move(v));
}

ComplexPoly reciprocal(const ComplexPoly& p, int n) {
    if (n < 0 || (!p.is_zero() && p.degree() > n))
        throw Error(Condition::degree, "declared degree " + std::to_string(n) +
                                           " below actual degree " + std::to_string(p.degree()));
    std::vector<cplx> v(static_cast<std::size_t>(n) + 1, 0.0);
    for (int k = 0; k <= n; ++k) v[static_cast<std::size_t>(k)] = std::conj(p.coeff(n - k));
    return ComplexPoly(std::move(v));
}

}  // namespace szq
