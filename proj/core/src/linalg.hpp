#pragma once

#include <Eigen/Dense>

namespace szq::detail {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Partial-pivoted LU of [Re -Im; Im Re] with a one-norm reciprocal
// condition estimate.
class SplitLU {
public:
    SplitLU() = default;
    explicit SplitLU(const CMatrix& a);

    double rcond() const noexcept { return rcond_; }
    double condition() const noexcept { return rcond_ > 0.0 ? 1.0 / rcond_ : INFINITY; }
    CVector solve(const CVector& b) const;

private:
    Eigen::Index n_ = 0;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
    double rcond_ = 0.0;
};

CVector least_squares(const CMatrix& a, const CVector& b);

}  // namespace szq::detail
