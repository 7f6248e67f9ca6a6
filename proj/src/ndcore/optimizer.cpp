#include "airgen/ndcore/optimizer.hpp"

#include <cmath>
#include <string>

#include "airgen/errors.hpp"

namespace airgen::ndcore {

OptimizerState OptimizerState::for_params(const MlpParams& params, double learning_rate,
                                          double decay_1, double decay_2, double epsilon) {
    if (!(learning_rate > 0.0)) throw ConfigError("optimizer: learning_rate must be positive");
    if (decay_1 < 0.0 || decay_1 >= 1.0 || decay_2 < 0.0 || decay_2 >= 1.0) {
        throw ConfigError("optimizer: decay rates must lie in [0, 1)");
    }
    OptimizerState state;
    state.learning_rate = learning_rate;
    state.decay_1 = decay_1;
    state.decay_2 = decay_2;
    state.epsilon = epsilon;
    state.first_moment = make_gradients_like(params);
    state.second_moment = make_gradients_like(params);
    return state;
}

namespace {

void update_span(double* __restrict__ param, const double* __restrict__ grad,
                 double* __restrict__ m, double* __restrict__ v, std::size_t n,
                 const OptimizerState& s, double bias1, double bias2) {
    const double lr = s.learning_rate;
    const bool use_m = s.decay_1 > 0.0;
    const bool use_v = s.decay_2 > 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double g = grad[i];
        double step_num = g;
        if (use_m) {
            m[i] = s.decay_1 * m[i] + (1.0 - s.decay_1) * g;
            step_num = m[i] / bias1;
        } else {
            m[i] = g;
        }
        double denom = 1.0;
        if (use_v) {
            v[i] = s.decay_2 * v[i] + (1.0 - s.decay_2) * g * g;
            denom = std::sqrt(v[i] / bias2) + s.epsilon;
        } else {
            v[i] = g * g;
        }
        param[i] -= lr * step_num / denom;
    }
}

} // namespace

void optimizer_step(OptimizerState& state, MlpParams& params, const GradientSet& grads) {
    if (grads.layers.size() != params.layers.size() ||
        state.first_moment.layers.size() != params.layers.size()) {
        throw ShapeError("optimizer_step: layer count mismatch");
    }
    state.step_count += 1;
    const double bias1 = 1.0 - std::pow(state.decay_1, static_cast<double>(state.step_count));
    const double bias2 = 1.0 - std::pow(state.decay_2, static_cast<double>(state.step_count));

    for (std::size_t k = 0; k < params.layers.size(); ++k) {
        Layer& layer = params.layers[k];
        const LayerGrad& g = grads.layers[k];
        LayerGrad& m = state.first_moment.layers[k];
        LayerGrad& v = state.second_moment.layers[k];
        if (!g.d_weight.same_shape(layer.weight) || g.d_bias.size() != layer.bias.size()) {
            throw ShapeError("optimizer_step: gradient shape mismatch at layer " +
                             std::to_string(k));
        }
        update_span(layer.weight.data(), g.d_weight.data(), m.d_weight.data(),
                    v.d_weight.data(), layer.weight.size(), state, bias1, bias2);
        update_span(layer.bias.data(), g.d_bias.data(), m.d_bias.data(), v.d_bias.data(),
                    layer.bias.size(), state, bias1, bias2);
    }
}

} // namespace airgen::ndcore
