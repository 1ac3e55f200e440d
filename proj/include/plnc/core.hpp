#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace plnc {

using cplx = std::complex<double>;

// Shared tolerance policy: one dedup/zero-distance tolerance for the whole
// library, a coarser one for grouping by radius.
inline constexpr double kDedupTol = 1e-9;
inline constexpr double kZeroDistTol = 1e-9;
inline constexpr double kRadiusTol = 1e-6;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

inline bool is_finite(cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Principal argument mapped to [-pi, pi).
inline double arg_pm_pi(cplx z) {
    double a = std::arg(z);
    if (a >= kPi) a -= 2.0 * kPi;
    return a;
}

// Fade state z = gamma * e^{j theta}, the uplink coefficient ratio h_B/h_A.
struct FadeState {
    cplx value{};
    double gamma = 0.0;
    double theta = 0.0;

    FadeState() = default;
    explicit FadeState(cplx z) : value(z), gamma(std::abs(z)), theta(arg_pm_pi(z)) {
        if (!is_finite(z)) throw std::invalid_argument("fade state must be finite");
    }
};

inline FadeState fade_state(double re, double im) { return FadeState(cplx(re, im)); }

// Deduplicate complex values at tolerance `tol` (transitive chaining via
// union on proximity), then sort by (|v| rounded to 1e-9, arg).
inline std::vector<cplx> dedup_and_sort(std::vector<cplx> vals, double tol) {
    std::vector<cplx> kept;
    kept.reserve(vals.size());
    std::sort(vals.begin(), vals.end(), [](cplx a, cplx b) { return std::abs(a) < std::abs(b); });
    for (cplx v : vals) {
        bool dup = false;
        double va = std::abs(v);
        for (auto it = kept.rbegin(); it != kept.rend(); ++it) {
            if (va - std::abs(*it) > tol) break;  // kept is sorted by |.|
            if (std::abs(v - *it) < tol) { dup = true; break; }
        }
        if (!dup) kept.push_back(v);
    }
    std::sort(kept.begin(), kept.end(), [](cplx a, cplx b) {
        auto ra = std::llround(std::abs(a) * 1e9);
        auto rb = std::llround(std::abs(b) * 1e9);
        if (ra != rb) return ra < rb;
        return arg_pm_pi(a) < arg_pm_pi(b);
    });
    return kept;
}

}  // namespace plnc
