#include "airgen/cgan/checkpoint.hpp"

#include <fstream>

#include <json.hpp>

#include "airgen/errors.hpp"

namespace airgen::cgan {

namespace {

constexpr int kFormatVersion = 1;

nlohmann::json params_to_json(const ndcore::MlpParams& params) {
    nlohmann::json layers = nlohmann::json::array();
    for (const ndcore::Layer& l : params.layers) {
        nlohmann::json weight = nlohmann::json::array();
        for (std::size_t r = 0; r < l.weight.rows(); ++r) {
            weight.push_back(std::vector<double>(l.weight.row(r),
                                                 l.weight.row(r) + l.weight.cols()));
        }
        layers.push_back({{"activation", ndcore::activation_name(l.activation)},
                          {"weight", std::move(weight)},
                          {"bias", l.bias}});
    }
    return layers;
}

ndcore::Activation activation_from_name(const std::string& name) {
    if (name == "leaky_relu") return ndcore::Activation::LeakyRelu;
    if (name == "sigmoid") return ndcore::Activation::Sigmoid;
    if (name == "linear") return ndcore::Activation::Linear;
    throw CheckpointError("unknown activation: '" + name + "'");
}

ndcore::MlpParams params_from_json(const nlohmann::json& layers, double leaky_slope) {
    ndcore::MlpParams params;
    params.leaky_slope = leaky_slope;
    for (const auto& jl : layers) {
        const auto& weight = jl.at("weight");
        if (weight.empty() || weight[0].empty()) {
            throw CheckpointError("empty weight matrix in checkpoint");
        }
        const std::size_t rows = weight.size();
        const std::size_t cols = weight[0].size();
        ndcore::Layer layer;
        layer.weight = ndcore::Matrix(rows, cols);
        for (std::size_t r = 0; r < rows; ++r) {
            if (weight[r].size() != cols) {
                throw CheckpointError("ragged weight matrix in checkpoint");
            }
            for (std::size_t c = 0; c < cols; ++c) {
                layer.weight(r, c) = weight[r][c].get<double>();
            }
        }
        layer.bias = jl.at("bias").get<std::vector<double>>();
        layer.activation = activation_from_name(jl.at("activation").get<std::string>());
        params.layers.push_back(std::move(layer));
    }
    try {
        params.validate();
    } catch (const ShapeError& e) {
        throw CheckpointError(std::string("checkpoint architecture invalid: ") + e.what());
    }
    return params;
}

} // namespace

void save_checkpoint(const GeneratorModel& gen, const DiscriminatorModel& disc,
                     const TrainConfig& cfg, const std::string& path) {
    nlohmann::json j;
    j["format_version"] = kFormatVersion;
    j["architecture"] = {
        {"generator_layers", gen.params.layer_sizes()},
        {"discriminator_layers", disc.params.layer_sizes()},
        {"latent_dim", gen.latent_dim},
        {"num_classes", kNumClasses},
        {"leaky_slope", gen.params.leaky_slope},
    };
    j["generator"] = params_to_json(gen.params);
    j["discriminator"] = params_to_json(disc.params);
    if (gen.scale) {
        j["scale"] = {{"min", gen.scale->data_min}, {"max", gen.scale->data_max}};
    } else {
        j["scale"] = nullptr;
    }
    j["train_config"] = {
        {"learning_rate", cfg.learning_rate},
        {"batch_size", cfg.batch_size},
        {"epochs", cfg.epochs},
        {"latent_dim", cfg.latent_dim},
        {"hidden_units", cfg.hidden_units},
        {"leaky_slope", cfg.leaky_slope},
        {"loss_mode", loss_mode_name(cfg.loss_mode)},
        {"seed", cfg.seed},
        {"eval_samples_per_epoch", cfg.eval_samples_per_epoch},
        {"scale_inputs", cfg.scale_inputs},
        {"adam_decay1", cfg.adam_decay1},
        {"adam_decay2", cfg.adam_decay2},
        {"adam_epsilon", cfg.adam_epsilon},
    };
    j["rng_state_note"] =
        "all randomness derives from train_config.seed; init/shuffle/eval streams are "
        "split off it deterministically, so retraining with this config reproduces "
        "these parameters exactly";

    std::ofstream out(path);
    if (!out) throw IoError("cannot write checkpoint: " + path);
    out << j.dump() << '\n';
}

Checkpoint load_checkpoint(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open checkpoint: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw CheckpointError("corrupt checkpoint " + path + ": " + e.what());
    }

    try {
        if (j.at("format_version").get<int>() != kFormatVersion) {
            throw CheckpointError("unsupported checkpoint format_version in " + path);
        }
        const auto& jc = j.at("train_config");
        TrainConfig cfg;
        cfg.learning_rate = jc.at("learning_rate").get<double>();
        cfg.batch_size = jc.at("batch_size").get<std::size_t>();
        cfg.epochs = jc.at("epochs").get<std::size_t>();
        cfg.latent_dim = jc.at("latent_dim").get<std::size_t>();
        cfg.hidden_units = jc.at("hidden_units").get<std::size_t>();
        cfg.leaky_slope = jc.at("leaky_slope").get<double>();
        cfg.loss_mode = loss_mode_from_name(jc.at("loss_mode").get<std::string>());
        cfg.seed = jc.at("seed").get<std::uint64_t>();
        cfg.eval_samples_per_epoch = jc.at("eval_samples_per_epoch").get<std::size_t>();
        cfg.scale_inputs = jc.at("scale_inputs").get<bool>();
        cfg.adam_decay1 = jc.at("adam_decay1").get<double>();
        cfg.adam_decay2 = jc.at("adam_decay2").get<double>();
        cfg.adam_epsilon = jc.at("adam_epsilon").get<double>();

        const double slope = j.at("architecture").at("leaky_slope").get<double>();
        Checkpoint ckpt;
        ckpt.generator.params = params_from_json(j.at("generator"), slope);
        ckpt.generator.latent_dim = j.at("architecture").at("latent_dim").get<std::size_t>();
        ckpt.discriminator.params = params_from_json(j.at("discriminator"), slope);
        ckpt.config = cfg;
        if (!j.at("scale").is_null()) {
            ckpt.generator.scale = ScaleTransform{j["scale"].at("min").get<double>(),
                                                  j["scale"].at("max").get<double>()};
        }

        // Declared architecture must match the stored tensors.
        const auto gen_sizes = j.at("architecture").at("generator_layers")
                                   .get<std::vector<std::size_t>>();
        const auto disc_sizes = j.at("architecture").at("discriminator_layers")
                                    .get<std::vector<std::size_t>>();
        if (gen_sizes != ckpt.generator.params.layer_sizes() ||
            disc_sizes != ckpt.discriminator.params.layer_sizes()) {
            throw CheckpointError(path + ": architecture declaration does not match tensors");
        }
        if (ckpt.generator.params.input_size() != ckpt.generator.latent_dim + kNumClasses) {
            throw CheckpointError(path + ": generator input size does not match latent_dim");
        }
        if (ckpt.discriminator.params.input_size() != kHoursPerDay + kNumClasses) {
            throw CheckpointError(path + ": discriminator input size mismatch");
        }
        return ckpt;
    } catch (const nlohmann::json::exception& e) {
        throw CheckpointError("corrupt checkpoint " + path + ": " + e.what());
    } catch (const ConfigError& e) {
        throw CheckpointError("corrupt checkpoint " + path + ": " + e.what());
    }
}

} // namespace airgen::cgan
