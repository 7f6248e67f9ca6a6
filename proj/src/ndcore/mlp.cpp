#include "airgen/ndcore/mlp.hpp"

#include <cmath>
#include <string>

#include "airgen/errors.hpp"

namespace airgen::ndcore {

std::vector<std::size_t> MlpParams::layer_sizes() const {
    std::vector<std::size_t> sizes;
    sizes.reserve(layers.size() + 1);
    sizes.push_back(input_size());
    for (const Layer& l : layers) sizes.push_back(l.out_size());
    return sizes;
}

void MlpParams::validate() const {
    if (layers.empty()) throw ShapeError("MlpParams: no layers");
    for (std::size_t k = 0; k < layers.size(); ++k) {
        const Layer& l = layers[k];
        if (l.bias.size() != l.out_size()) {
            throw ShapeError("layer " + std::to_string(k) + ": bias length " +
                             std::to_string(l.bias.size()) + " vs " +
                             std::to_string(l.out_size()) + " outputs");
        }
        if (k > 0 && l.in_size() != layers[k - 1].out_size()) {
            throw ShapeError("layer " + std::to_string(k) + ": input size " +
                             std::to_string(l.in_size()) + " does not chain from " +
                             std::to_string(layers[k - 1].out_size()));
        }
        const bool hidden = k + 1 < layers.size();
        if (hidden && l.activation != Activation::LeakyRelu) {
            throw ShapeError("layer " + std::to_string(k) + ": hidden layers use LeakyReLU");
        }
        if (!hidden && l.activation == Activation::LeakyRelu) {
            throw ShapeError("output layer activation must be Sigmoid or Linear");
        }
    }
    if (!(leaky_slope > 0.0 && leaky_slope < 1.0)) {
        throw ShapeError("leaky_slope must lie in (0, 1)");
    }
}

MlpParams make_mlp(std::span<const std::size_t> sizes, Activation output_activation,
                   double leaky_slope, Rng& rng) {
    if (sizes.size() < 2) throw ShapeError("make_mlp: need at least input and output sizes");
    MlpParams params;
    params.leaky_slope = leaky_slope;
    for (std::size_t k = 0; k + 1 < sizes.size(); ++k) {
        const std::size_t fan_in = sizes[k], fan_out = sizes[k + 1];
        Layer layer;
        layer.weight = Matrix(fan_out, fan_in);
        const double bound = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
        for (std::size_t i = 0; i < layer.weight.size(); ++i) {
            layer.weight.data()[i] = rng.uniform(-bound, bound);
        }
        layer.bias.assign(fan_out, 0.0);
        layer.activation =
            (k + 2 < sizes.size()) ? Activation::LeakyRelu : output_activation;
        params.layers.push_back(std::move(layer));
    }
    params.validate();
    return params;
}

namespace {

void apply_activation(Matrix& m, Activation act, double slope) {
    double* __restrict__ p = m.data();
    const std::size_t n = m.size();
    switch (act) {
        case Activation::LeakyRelu:
            for (std::size_t i = 0; i < n; ++i) p[i] = leaky_relu(p[i], slope);
            break;
        case Activation::Sigmoid:
            for (std::size_t i = 0; i < n; ++i) p[i] = sigmoid(p[i]);
            break;
        case Activation::Linear:
            break;
    }
}

} // namespace

Matrix mlp_forward(const MlpParams& params, const Matrix& input_batch, ForwardCache* cache) {
    if (params.layers.empty()) throw ShapeError("mlp_forward: no layers");
    if (input_batch.cols() != params.input_size()) {
        throw ShapeError("mlp_forward: layer 0 expects " +
                         std::to_string(params.input_size()) + " inputs, batch has " +
                         std::to_string(input_batch.cols()) + " columns");
    }
    if (cache) {
        cache->input = input_batch;
        cache->pre_act.clear();
        cache->post_act.clear();
    }
    Matrix current = input_batch;
    for (std::size_t k = 0; k < params.layers.size(); ++k) {
        const Layer& layer = params.layers[k];
        Matrix z = matmul(current, transpose(layer.weight));
        add_row_vector(z, layer.bias);
        if (cache) cache->pre_act.push_back(z);
        apply_activation(z, layer.activation, params.leaky_slope);
        if (cache) cache->post_act.push_back(z);
        current = std::move(z);
    }
    return current;
}

GradientSet make_gradients_like(const MlpParams& params) {
    GradientSet grads;
    grads.layers.reserve(params.layers.size());
    for (const Layer& l : params.layers) {
        grads.layers.push_back({Matrix(l.out_size(), l.in_size()),
                                std::vector<double>(l.out_size(), 0.0)});
    }
    return grads;
}

GradientSet mlp_backward(const MlpParams& params, const ForwardCache& cache,
                         const Matrix& output_grad, Matrix* input_grad) {
    const std::size_t n_layers = params.layers.size();
    if (cache.pre_act.size() != n_layers || cache.post_act.size() != n_layers) {
        throw ShapeError("mlp_backward: cache does not match network depth");
    }
    if (!output_grad.same_shape(cache.post_act.back())) {
        throw ShapeError("mlp_backward: output_grad is " +
                         std::to_string(output_grad.rows()) + "x" +
                         std::to_string(output_grad.cols()) + ", expected " +
                         std::to_string(cache.post_act.back().rows()) + "x" +
                         std::to_string(cache.post_act.back().cols()));
    }

    GradientSet grads;
    grads.layers.resize(n_layers);

    Matrix delta = output_grad;  // dL/d activation of current layer
    for (std::size_t k = n_layers; k-- > 0;) {
        const Layer& layer = params.layers[k];
        // Through the activation: delta <- delta (.) act'(z).
        switch (layer.activation) {
            case Activation::LeakyRelu: {
                const Matrix& z = cache.pre_act[k];
                for (std::size_t i = 0; i < delta.size(); ++i) {
                    delta.data()[i] *= leaky_relu_grad(z.data()[i], params.leaky_slope);
                }
                break;
            }
            case Activation::Sigmoid: {
                const Matrix& a = cache.post_act[k];
                for (std::size_t i = 0; i < delta.size(); ++i) {
                    delta.data()[i] *= sigmoid_grad_from_output(a.data()[i]);
                }
                break;
            }
            case Activation::Linear:
                break;
        }

        const Matrix& layer_input = (k == 0) ? cache.input : cache.post_act[k - 1];
        LayerGrad& lg = grads.layers[k];
        lg.d_weight = matmul_tn(delta, layer_input);  // [out x in], summed over batch
        lg.d_bias.assign(layer.out_size(), 0.0);
        for (std::size_t r = 0; r < delta.rows(); ++r) {
            const double* __restrict__ row = delta.row(r);
            for (std::size_t c = 0; c < delta.cols(); ++c) lg.d_bias[c] += row[c];
        }

        if (k > 0 || input_grad) {
            Matrix prev = matmul(delta, layer.weight);  // dL/d layer input
            if (k == 0) {
                *input_grad = std::move(prev);
            } else {
                delta = std::move(prev);
            }
        }
    }
    return grads;
}

} // namespace airgen::ndcore
