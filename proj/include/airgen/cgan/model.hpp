#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "airgen/data/daily_series.hpp"
#include "airgen/ndcore/mlp.hpp"

namespace airgen::cgan {

using data::ClassLabel;
using data::kHoursPerDay;
using data::kNumClasses;

/// Generator objective. PaperSaturating minimizes E[log(1 - D(G(z,y), y))];
/// NonSaturating minimizes -E[log D(G(z,y), y)], which gives stronger
/// gradients while the discriminator is ahead.
enum class LossMode { PaperSaturating, NonSaturating };

struct TrainConfig {
    double learning_rate = 0.0002;
    std::size_t batch_size = 16;
    std::size_t epochs = 2000;
    std::size_t latent_dim = 64;
    std::size_t hidden_units = 256;  // two hidden layers of this width
    double leaky_slope = 0.2;
    LossMode loss_mode = LossMode::PaperSaturating;
    std::uint64_t seed = 1;
    std::size_t eval_samples_per_epoch = 10000;
    bool scale_inputs = false;

    // Adaptive-moment settings; 0.5 first-moment decay is the usual choice
    // for adversarial training.
    double adam_decay1 = 0.5;
    double adam_decay2 = 0.999;
    double adam_epsilon = 1e-8;

    void validate() const;
};

/// Affine map taking raw concentrations into [-1, 1] and back; stored with
/// the generator when scale_inputs is on.
struct ScaleTransform {
    double data_min = 0.0;
    double data_max = 1.0;

    double to_unit(double v) const {
        return -1.0 + 2.0 * (v - data_min) / (data_max - data_min);
    }
    double from_unit(double u) const {
        return data_min + (u + 1.0) * 0.5 * (data_max - data_min);
    }
};

/// MLP mapping [z (latent_dim) || y (8)] to a 24-hour series. Hidden layers
/// LeakyReLU, linear output (concentrations live on the real line).
struct GeneratorModel {
    ndcore::MlpParams params;
    std::size_t latent_dim = 64;
    std::optional<ScaleTransform> scale;
};

/// MLP mapping [x (24) || y (8)] to a realness probability; sigmoid output.
struct DiscriminatorModel {
    ndcore::MlpParams params;
};

GeneratorModel make_generator(const TrainConfig& cfg, ndcore::Rng& rng);
DiscriminatorModel make_discriminator(const TrainConfig& cfg, ndcore::Rng& rng);

std::array<double, kNumClasses> one_hot(ClassLabel label);

/// Appends the one-hot class block to each row: [left || y].
ndcore::Matrix concat_condition(const ndcore::Matrix& left,
                                std::span<const ClassLabel> labels);

/// n latent rows, entries i.i.d. uniform on [-1, 1].
ndcore::Matrix sample_latent(std::size_t n, std::size_t latent_dim, ndcore::Rng& rng);

/// One conditioned sample from latent row z. Applies the inverse scale
/// transform when the generator carries one; raw outputs may be negative.
std::array<double, kHoursPerDay> generate(const GeneratorModel& gen,
                                          std::span<const double> z, ClassLabel label);

/// Batched generation: latent rows + per-row labels -> series rows.
ndcore::Matrix generate_batch(const GeneratorModel& gen, const ndcore::Matrix& latents,
                              std::span<const ClassLabel> labels);

/// Probability that (series, label) comes from the real data.
double discriminate(const DiscriminatorModel& disc, std::span<const double> series,
                    ClassLabel label);

const char* loss_mode_name(LossMode mode);
LossMode loss_mode_from_name(const std::string& name);

} // namespace airgen::cgan
