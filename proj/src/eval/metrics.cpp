#include "rssiprox/eval/metrics.hpp"

#include <stdexcept>

namespace rssiprox::eval {

ConfusionMatrix confusion(const ml::Labels& truth, const ml::Labels& predicted) {
    if (truth.size() != predicted.size()) {
        throw std::invalid_argument("confusion: label vectors differ in length");
    }
    ConfusionMatrix cm;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        const int t = truth[i];
        const int p = predicted[i];
        if ((t != 0 && t != 1) || (p != 0 && p != 1)) {
            throw std::invalid_argument("confusion: labels must be 0 or 1");
        }
        if (t == 1 && p == 1) ++cm.tp;
        else if (t == 0 && p == 1) ++cm.fp;
        else if (t == 1 && p == 0) ++cm.fn;
        else ++cm.tn;
    }
    return cm;
}

double accuracy(const ConfusionMatrix& cm) {
    if (cm.total() == 0) {
        throw std::invalid_argument("accuracy: empty confusion matrix");
    }
    return static_cast<double>(cm.tp + cm.tn) / static_cast<double>(cm.total());
}

double f1(const ConfusionMatrix& cm, int positive_class) {
    if (positive_class != 0 && positive_class != 1) {
        throw std::invalid_argument("f1: positive_class must be 0 or 1");
    }
    const ConfusionMatrix m = positive_class == 1 ? cm : cm.swapped();
    if (m.tp + m.fp + m.fn == 0) {
        throw std::invalid_argument("f1: class never occurs in truth or predictions");
    }
    // 2 / (1/P + 1/R) reduces to this; with tp = 0 both P and R are zero
    return static_cast<double>(2 * m.tp) / static_cast<double>(2 * m.tp + m.fp + m.fn);
}

} // namespace rssiprox::eval
