#pragma once

#include <complex>
#include <vector>

namespace szq {

using cplx = std::complex<double>;

// Dense polynomial, coefficient k multiplies z^k. Always trimmed; the zero
// polynomial is stored as the single coefficient 0.
class ComplexPoly {
public:
    ComplexPoly();
    explicit ComplexPoly(std::vector<cplx> coeffs);

    static ComplexPoly constant(cplx c);
    static ComplexPoly monomial(int k, cplx c = 1.0);
    // Monic polynomial with the given zeros.
    static ComplexPoly from_roots(const std::vector<cplx>& roots);

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const std::vector<cplx>& coeffs() const noexcept { return c_; }
    cplx coeff(int k) const noexcept;
    cplx leading() const noexcept { return c_.back(); }
    bool is_zero() const noexcept;
    bool is_monic() const noexcept { return c_.back() == cplx(1.0, 0.0); }
    double max_abs_coeff() const noexcept;

    cplx operator()(cplx z) const noexcept;
    ComplexPoly shifted(int k) const;  // times z^k

    friend ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b);
    friend ComplexPoly operator-(const ComplexPoly& a, const ComplexPoly& b);
    friend ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b);
    friend ComplexPoly operator*(cplx s, const ComplexPoly& a);
    friend bool operator==(const ComplexPoly& a, const ComplexPoly& b) = default;

private:
    void trim();
    std::vector<cplx> c_;
};

// P*(z) = z^n conj(P(1/conj z)) with P regarded as an element of degree n.
ComplexPoly reciprocal(const ComplexPoly& p, int n);

}  // namespace szq
