#pragma once

#include <cstdint>

#include "airgen/ndcore/mlp.hpp"

namespace airgen::ndcore {

/// Adaptive-moment optimizer state for one network. decay_1/decay_2 set to 0
/// switch the corresponding moment machinery off entirely, so (0, 0) is plain
/// gradient descent at the given learning rate.
struct OptimizerState {
    double learning_rate = 0.0002;
    double decay_1 = 0.5;
    double decay_2 = 0.999;
    double epsilon = 1e-8;
    std::int64_t step_count = 0;
    GradientSet first_moment;
    GradientSet second_moment;

    static OptimizerState for_params(const MlpParams& params, double learning_rate,
                                     double decay_1 = 0.5, double decay_2 = 0.999,
                                     double epsilon = 1e-8);
};

/// One bias-corrected update, in place. Gradients must be shape-congruent
/// with the parameters the state was built for.
void optimizer_step(OptimizerState& state, MlpParams& params, const GradientSet& grads);

} // namespace airgen::ndcore
