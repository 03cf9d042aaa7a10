#include "rssiprox/ml/logistic.hpp"

#include <algorithm>
#include <cmath>

namespace rssiprox::ml {

namespace {

double linear(const LogisticModel& m, std::span<const double> x) {
    double z = m.bias;
    for (std::size_t j = 0; j < x.size(); ++j) {
        z += m.weights[j] * x[j];
    }
    return z;
}

double sigmoid(double z) {
    if (z >= 0.0) {
        return 1.0 / (1.0 + std::exp(-z));
    }
    const double e = std::exp(z);
    return e / (1.0 + e);
}

// log(1 + e^z) without overflow
double softplus(double z) {
    return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
}

} // namespace

double LogisticModel::probability(std::span<const double> x) const {
    return sigmoid(linear(*this, x));
}

int LogisticModel::predict_one(std::span<const double> x) const {
    return probability(x) >= 0.5 ? 1 : 0;
}

double cross_entropy(const LogisticModel& model, const Matrix& x, const Labels& y) {
    double loss = 0.0;
    for (std::size_t i = 0; i < x.rows(); ++i) {
        const double z = linear(model, x.row(i));
        loss += softplus(z) - y[i] * z;
    }
    return loss / static_cast<double>(x.rows());
}

LogisticFit fit_logistic(const Matrix& x, const Labels& y, const LrParams& params) {
    check_training_set(x, y, true);
    const std::size_t n = x.rows();
    const std::size_t d = x.cols();

    LogisticFit fit;
    fit.model.weights.assign(d, 0.0);
    fit.loss_history.reserve(static_cast<std::size_t>(params.iterations) + 1);

    std::vector<double> grad(d);
    for (int it = 0; it < params.iterations; ++it) {
        fit.loss_history.push_back(cross_entropy(fit.model, x, y));
        std::fill(grad.begin(), grad.end(), 0.0);
        double grad_b = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const auto row = x.row(i);
            const double residual = fit.model.probability(row) - y[i];
            for (std::size_t j = 0; j < d; ++j) {
                grad[j] += residual * row[j];
            }
            grad_b += residual;
        }
        const double step = params.learning_rate / static_cast<double>(n);
        for (std::size_t j = 0; j < d; ++j) {
            fit.model.weights[j] -= step * grad[j];
        }
        fit.model.bias -= step * grad_b;
    }
    fit.loss_history.push_back(cross_entropy(fit.model, x, y));
    return fit;
}

} // namespace rssiprox::ml
