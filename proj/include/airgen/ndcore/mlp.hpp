#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "airgen/ndcore/activations.hpp"
#include "airgen/ndcore/matrix.hpp"
#include "airgen/ndcore/rng.hpp"

namespace airgen::ndcore {

struct Layer {
    Matrix weight;             // out x in
    std::vector<double> bias;  // out
    Activation activation = Activation::Linear;

    std::size_t in_size() const noexcept { return weight.cols(); }
    std::size_t out_size() const noexcept { return weight.rows(); }
};

/// Parameters of one dense network. Hidden layers are LeakyReLU, the output
/// layer is Sigmoid or Linear; validate() enforces both rules plus dimension
/// chaining.
struct MlpParams {
    std::vector<Layer> layers;
    double leaky_slope = 0.2;

    std::size_t input_size() const { return layers.front().in_size(); }
    std::size_t output_size() const { return layers.back().out_size(); }
    std::vector<std::size_t> layer_sizes() const;

    void validate() const;
};

/// Glorot-uniform weights (+-sqrt(6/(fan_in+fan_out))), zero biases.
/// `sizes` lists every layer width, e.g. {72, 256, 256, 24}.
MlpParams make_mlp(std::span<const std::size_t> sizes, Activation output_activation,
                   double leaky_slope, Rng& rng);

struct ForwardCache {
    Matrix input;
    std::vector<Matrix> pre_act;   // per layer, before activation
    std::vector<Matrix> post_act;  // per layer, after activation
};

/// Batched forward pass; rows are samples. Fills `cache` when given (needed
/// for mlp_backward).
Matrix mlp_forward(const MlpParams& params, const Matrix& input_batch,
                   ForwardCache* cache = nullptr);

struct LayerGrad {
    Matrix d_weight;
    std::vector<double> d_bias;
};

struct GradientSet {
    std::vector<LayerGrad> layers;
};

/// Zero-filled gradient holder shaped after `params`.
GradientSet make_gradients_like(const MlpParams& params);

/// Backpropagates `output_grad` (dL/d output, post-activation) through the
/// cached forward pass. Gradients are summed over the batch; callers that
/// want batch means fold 1/B into `output_grad`. When `input_grad` is
/// non-null it receives dL/d input, which is how discriminator gradients
/// chain into the generator.
GradientSet mlp_backward(const MlpParams& params, const ForwardCache& cache,
                         const Matrix& output_grad, Matrix* input_grad = nullptr);

} // namespace airgen::ndcore
