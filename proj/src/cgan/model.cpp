#include "airgen/cgan/model.hpp"

#include <string>

#include "airgen/errors.hpp"

namespace airgen::cgan {

void TrainConfig::validate() const {
    if (!(learning_rate > 0.0)) throw ConfigError("learning_rate must be positive");
    if (batch_size == 0) throw ConfigError("batch_size must be positive");
    if (latent_dim == 0) throw ConfigError("latent_dim must be positive");
    if (hidden_units == 0) throw ConfigError("hidden_units must be positive");
    if (!(leaky_slope > 0.0 && leaky_slope < 1.0)) {
        throw ConfigError("leaky_slope must lie in (0, 1)");
    }
    if (eval_samples_per_epoch == 0) {
        throw ConfigError("eval_samples_per_epoch must be positive");
    }
    if (!(adam_decay1 >= 0.0 && adam_decay1 < 1.0) ||
        !(adam_decay2 >= 0.0 && adam_decay2 < 1.0)) {
        throw ConfigError("adam decay rates must lie in [0, 1)");
    }
}

GeneratorModel make_generator(const TrainConfig& cfg, ndcore::Rng& rng) {
    const std::size_t sizes[] = {cfg.latent_dim + kNumClasses, cfg.hidden_units,
                                 cfg.hidden_units, kHoursPerDay};
    GeneratorModel gen;
    gen.params = ndcore::make_mlp(sizes, ndcore::Activation::Linear, cfg.leaky_slope, rng);
    gen.latent_dim = cfg.latent_dim;
    return gen;
}

DiscriminatorModel make_discriminator(const TrainConfig& cfg, ndcore::Rng& rng) {
    const std::size_t sizes[] = {kHoursPerDay + kNumClasses, cfg.hidden_units,
                                 cfg.hidden_units, 1};
    DiscriminatorModel disc;
    disc.params = ndcore::make_mlp(sizes, ndcore::Activation::Sigmoid, cfg.leaky_slope, rng);
    return disc;
}

std::array<double, kNumClasses> one_hot(ClassLabel label) {
    std::array<double, kNumClasses> y{};
    y[label.id] = 1.0;
    return y;
}

ndcore::Matrix sample_latent(std::size_t n, std::size_t latent_dim, ndcore::Rng& rng) {
    if (n == 0) throw ConfigError("sample_latent: n must be positive");
    ndcore::Matrix z(n, latent_dim);
    for (std::size_t i = 0; i < z.size(); ++i) z.data()[i] = rng.uniform(-1.0, 1.0);
    return z;
}

ndcore::Matrix concat_condition(const ndcore::Matrix& left,
                                std::span<const ClassLabel> labels) {
    if (labels.size() != left.rows()) {
        throw ShapeError("conditioning: " + std::to_string(labels.size()) + " labels for " +
                         std::to_string(left.rows()) + " rows");
    }
    ndcore::Matrix out(left.rows(), left.cols() + kNumClasses);
    for (std::size_t r = 0; r < left.rows(); ++r) {
        double* dst = out.row(r);
        const double* src = left.row(r);
        for (std::size_t c = 0; c < left.cols(); ++c) dst[c] = src[c];
        dst[left.cols() + labels[r].id] = 1.0;
    }
    return out;
}

ndcore::Matrix generate_batch(const GeneratorModel& gen, const ndcore::Matrix& latents,
                              std::span<const ClassLabel> labels) {
    if (latents.cols() != gen.latent_dim) {
        throw ShapeError("generate: latent rows have " + std::to_string(latents.cols()) +
                         " entries, generator expects " + std::to_string(gen.latent_dim));
    }
    ndcore::Matrix out = ndcore::mlp_forward(gen.params, concat_condition(latents, labels));
    if (gen.scale) {
        for (std::size_t i = 0; i < out.size(); ++i) {
            out.data()[i] = gen.scale->from_unit(out.data()[i]);
        }
    }
    return out;
}

std::array<double, kHoursPerDay> generate(const GeneratorModel& gen,
                                          std::span<const double> z, ClassLabel label) {
    ndcore::Matrix latents(1, gen.latent_dim,
                           std::vector<double>(z.begin(), z.end()));
    const ClassLabel labels[] = {label};
    const ndcore::Matrix out = generate_batch(gen, latents, labels);
    std::array<double, kHoursPerDay> series{};
    for (std::size_t h = 0; h < kHoursPerDay; ++h) series[h] = out(0, h);
    return series;
}

double discriminate(const DiscriminatorModel& disc, std::span<const double> series,
                    ClassLabel label) {
    if (series.size() != kHoursPerDay) {
        throw ShapeError("discriminate: series has " + std::to_string(series.size()) +
                         " values, expected 24");
    }
    ndcore::Matrix x(1, kHoursPerDay, std::vector<double>(series.begin(), series.end()));
    const ClassLabel labels[] = {label};
    const ndcore::Matrix out =
        ndcore::mlp_forward(disc.params, concat_condition(x, labels));
    return out(0, 0);
}

const char* loss_mode_name(LossMode mode) {
    return mode == LossMode::PaperSaturating ? "paper_saturating" : "non_saturating";
}

LossMode loss_mode_from_name(const std::string& name) {
    if (name == "paper_saturating") return LossMode::PaperSaturating;
    if (name == "non_saturating") return LossMode::NonSaturating;
    throw ConfigError("unknown loss_mode: '" + name + "'");
}

} // namespace airgen::cgan
