#include "rssiprox/ml/svm.hpp"

#include <algorithm>
#include <cmath>

#include "rssiprox/rng.hpp"

namespace rssiprox::ml {

namespace {

// Hard stop for pathological inputs where updates keep cycling.
constexpr int kMaxSweeps = 100000;
constexpr double kMinAlphaStep = 1e-5;

} // namespace

double rbf_kernel(std::span<const double> a, std::span<const double> b, double gamma) {
    double sq = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const double d = a[j] - b[j];
        sq += d * d;
    }
    return std::exp(-gamma * sq);
}

double scale_gamma(const Matrix& x) {
    const auto& v = x.values();
    if (v.empty()) return 1.0;
    double mean = 0.0;
    for (double e : v) mean += e;
    mean /= static_cast<double>(v.size());
    double var = 0.0;
    for (double e : v) var += (e - mean) * (e - mean);
    var /= static_cast<double>(v.size());
    return var > 0.0 ? 1.0 / (static_cast<double>(x.cols()) * var) : 1.0;
}

double SvmModel::decision(std::span<const double> x) const {
    double f = bias;
    for (std::size_t i = 0; i < support_vectors.rows(); ++i) {
        f += dual_coef[i] * rbf_kernel(support_vectors.row(i), x, gamma);
    }
    return f;
}

int SvmModel::predict_one(std::span<const double> x) const {
    return decision(x) > 0.0 ? 1 : 0;
}

SvmFit fit_svm(const Matrix& x, const Labels& y, const SvmParams& params, std::uint64_t seed) {
    check_training_set(x, y, true);
    const std::size_t n = x.rows();
    const double gamma = params.gamma.value_or(scale_gamma(x));
    const double c = params.c;
    const double tol = params.tol;

    std::vector<double> sign(n);
    for (std::size_t i = 0; i < n; ++i) sign[i] = y[i] == 1 ? 1.0 : -1.0;

    std::vector<double> kernel(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const double k = rbf_kernel(x.row(i), x.row(j), gamma);
            kernel[i * n + j] = k;
            kernel[j * n + i] = k;
        }
    }
    auto K = [&](std::size_t i, std::size_t j) { return kernel[i * n + j]; };

    std::vector<double> alpha(n, 0.0);
    double b = 0.0;
    auto f = [&](std::size_t i) {
        double s = b;
        for (std::size_t k = 0; k < n; ++k) {
            if (alpha[k] != 0.0) s += alpha[k] * sign[k] * K(k, i);
        }
        return s;
    };

    Rng rng(seed);
    int passes = 0;
    int sweeps = 0;
    while (passes < params.max_passes && sweeps < kMaxSweeps) {
        ++sweeps;
        int changed = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const double ei = f(i) - sign[i];
            const bool violates = (sign[i] * ei < -tol && alpha[i] < c) || (sign[i] * ei > tol && alpha[i] > 0.0);
            if (!violates) continue;

            std::size_t j = rng.index(n - 1);
            if (j >= i) ++j;
            const double ej = f(j) - sign[j];
            const double ai_old = alpha[i];
            const double aj_old = alpha[j];

            double lo = 0.0;
            double hi = 0.0;
            if (sign[i] != sign[j]) {
                lo = std::max(0.0, aj_old - ai_old);
                hi = std::min(c, c + aj_old - ai_old);
            } else {
                lo = std::max(0.0, ai_old + aj_old - c);
                hi = std::min(c, ai_old + aj_old);
            }
            if (lo >= hi) continue;

            const double eta = 2.0 * K(i, j) - K(i, i) - K(j, j);
            if (eta >= 0.0) continue;

            double aj = std::clamp(aj_old - sign[j] * (ei - ej) / eta, lo, hi);
            if (std::abs(aj - aj_old) < kMinAlphaStep) continue;
            double ai = std::clamp(ai_old + sign[i] * sign[j] * (aj_old - aj), 0.0, c);
            alpha[i] = ai;
            alpha[j] = aj;

            const double b1 = b - ei - sign[i] * (ai - ai_old) * K(i, i) - sign[j] * (aj - aj_old) * K(i, j);
            const double b2 = b - ej - sign[i] * (ai - ai_old) * K(i, j) - sign[j] * (aj - aj_old) * K(j, j);
            if (ai > 0.0 && ai < c) b = b1;
            else if (aj > 0.0 && aj < c) b = b2;
            else b = (b1 + b2) / 2.0;
            ++changed;
        }
        passes = changed == 0 ? passes + 1 : 0;
    }

    SvmFit fit;
    fit.alphas = alpha;
    fit.sweeps = sweeps;
    fit.model.gamma = gamma;
    fit.model.bias = b;
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < n; ++i) {
        if (alpha[i] > 0.0) {
            support.push_back(i);
            fit.model.dual_coef.push_back(alpha[i] * sign[i]);
        }
    }
    fit.model.support_vectors = x.select_rows(support);
    return fit;
}

} // namespace rssiprox::ml
