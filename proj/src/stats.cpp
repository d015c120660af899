#include "rlnc/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace rlnc {

namespace {

// Continued-fraction kernel for the incomplete beta (Lentz's method).
double beta_cf(double a, double b, double x) {
    constexpr int kMaxIter = 300;
    constexpr double kEps = 3e-15;
    constexpr double kTiny = 1e-300;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) break;
    }
    return h;
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double lbeta = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b);
    const double front = std::exp(lbeta + a * std::log(x) + b * std::log1p(-x));
    if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_cf(a, b, x) / a;
    return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double student_t_critical(std::size_t df, double confidence) {
    if (df == 0) throw std::invalid_argument("student_t_critical: df must be positive");
    if (!(confidence > 0.0 && confidence < 1.0))
        throw std::invalid_argument("student_t_critical: confidence must be in (0, 1)");

    // P(|T| <= t) = 1 - I_{df/(df + t^2)}(df/2, 1/2); monotone in t, so bisect.
    const auto twoSided = [df](double t) {
        const double x = static_cast<double>(df) / (static_cast<double>(df) + t * t);
        return 1.0 - incomplete_beta(static_cast<double>(df) / 2.0, 0.5, x);
    };
    double lo = 0.0;
    double hi = 1.0;
    while (twoSided(hi) < confidence) {
        hi *= 2.0;
        if (hi > 1e8) break;
    }
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (twoSided(mid) < confidence)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

Estimate estimate_mean(const std::vector<double>& samples, double confidence) {
    Estimate e;
    e.count = samples.size();
    if (samples.empty()) return e;
    double sum = 0.0;
    for (double v : samples) sum += v;
    e.mean = sum / static_cast<double>(samples.size());
    if (samples.size() < 2) return e;
    double ss = 0.0;
    for (double v : samples) {
        const double d = v - e.mean;
        ss += d * d;
    }
    const double variance = ss / static_cast<double>(samples.size() - 1);
    const double stderr_ = std::sqrt(variance / static_cast<double>(samples.size()));
    e.halfWidth = student_t_critical(samples.size() - 1, confidence) * stderr_;
    return e;
}

}  // namespace rlnc
