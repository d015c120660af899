#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

namespace rlnc {

/// Sample mean with a symmetric confidence half-width.
struct Estimate {
    double mean = std::numeric_limits<double>::quiet_NaN();
    double halfWidth = std::numeric_limits<double>::quiet_NaN();
    std::size_t count = 0;

    bool valid() const { return count >= 2 && std::isfinite(halfWidth); }
    double lower() const { return mean - halfWidth; }
    double upper() const { return mean + halfWidth; }
    bool contains(double value) const {
        return valid() && value >= lower() && value <= upper();
    }
};

/// Regularized incomplete beta function I_x(a, b).
double incomplete_beta(double a, double b, double x);

/// Two-sided Student-t critical value: P(|T_df| <= t) = confidence.
double student_t_critical(std::size_t df, double confidence);

/// Student-t confidence interval over independent replications.
Estimate estimate_mean(const std::vector<double>& samples, double confidence = 0.95);

}  // namespace rlnc
