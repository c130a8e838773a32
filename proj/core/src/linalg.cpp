#include "linalg.hpp"

namespace szq::detail {

SplitLU::SplitLU(const CMatrix& a) : n_(a.rows()) {
    Eigen::MatrixXd r(2 * n_, 2 * n_);
    r.topLeftCorner(n_, n_) = a.real();
    r.topRightCorner(n_, n_) = -a.imag();
    r.bottomLeftCorner(n_, n_) = a.imag();
    r.bottomRightCorner(n_, n_) = a.real();
    lu_.compute(r);
    rcond_ = n_ == 0 ? 1.0 : lu_.rcond();
    if (!std::isfinite(rcond_)) rcond_ = 0.0;
}

CVector SplitLU::solve(const CVector& b) const {
    Eigen::VectorXd rb(2 * n_);
    rb.head(n_) = b.real();
    rb.tail(n_) = b.imag();
    Eigen::VectorXd x = lu_.solve(rb);
    CVector out(n_);
    for (Eigen::Index i = 0; i < n_; ++i) out(i) = {x(i), x(n_ + i)};
    return out;
}

CVector least_squares(const CMatrix& a, const CVector& b) {
    return a.colPivHouseholderQr().solve(b);
}

}  // namespace szq::detail
