#pragma once

#include <cmath>
#include <limits>

namespace airgen::ndcore {

enum class Activation { LeakyRelu, Sigmoid, Linear };

inline double leaky_relu(double x, double slope) {
    return x >= 0.0 ? x : slope * x;
}

inline double leaky_relu_grad(double pre_activation, double slope) {
    return pre_activation >= 0.0 ? 1.0 : slope;
}

/// Sign-split logistic function, stable over the full double range. The
/// result is pinned strictly inside (0, 1): saturation never reaches an exact
/// 0 or 1, so downstream logs stay finite.
inline double sigmoid(double x) {
    double p;
    if (x >= 0.0) {
        p = 1.0 / (1.0 + std::exp(-x));
    } else {
        const double e = std::exp(x);
        p = e / (1.0 + e);
    }
    constexpr double lo = std::numeric_limits<double>::min();
    constexpr double hi = 1.0 - std::numeric_limits<double>::epsilon() / 2.0;
    if (p < lo) return lo;
    if (p > hi) return hi;
    return p;
}

/// Derivative from the already-computed output value.
inline double sigmoid_grad_from_output(double p) {
    return p * (1.0 - p);
}

inline const char* activation_name(Activation a) {
    switch (a) {
        case Activation::LeakyRelu: return "leaky_relu";
        case Activation::Sigmoid: return "sigmoid";
        case Activation::Linear: return "linear";
    }
    return "?";
}

} // namespace airgen::ndcore
