#include "dsq/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace dsq {

SpectrumFloat eigenvalues_float(const IntSymMatrix& m, double tol) {
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    int n = m.order();
    std::vector<double> a(static_cast<std::size_t>(n) * n);
    double trace = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = m.at(i, j).get_d();
    for (int i = 0; i < n; ++i) trace += a[static_cast<std::size_t>(i) * n + i];
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::fabs(at(p, q)));
        if (off < tol) break;
        if (sweep == max_sweeps - 1)
            throw std::runtime_error("rotation sweeps exhausted without convergence");
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (std::fabs(apq) < tol) continue;
                double theta = (at(q, q) - at(p, p)) / (2 * apq);
                double t = std::copysign(1.0, theta) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1), s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
    }

    SpectrumFloat spec;
    spec.tol = tol;
    spec.values.reserve(n);
    for (int i = 0; i < n; ++i) spec.values.push_back(at(i, i));
    std::sort(spec.values.begin(), spec.values.end(), std::greater<>());
    double sum = 0;
    for (double v : spec.values) sum += v;
    if (std::fabs(sum - trace) > n * tol)
        throw std::runtime_error("eigenvalue sum drifted from the trace");
    return spec;
}

}  // namespace dsq
