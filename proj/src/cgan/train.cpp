#include "airgen/cgan/train.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "airgen/cgan/loss.hpp"
#include "airgen/errors.hpp"
#include "airgen/eval/rmse.hpp"
#include "airgen/io_util.hpp"
#include "airgen/ndcore/optimizer.hpp"

namespace airgen::cgan {

namespace {

using ndcore::Matrix;

struct EvalContext {
    std::array<std::array<double, kHoursPerDay>, kNumClasses> reps{};
    std::uint64_t seed_base = 0;
    std::size_t samples = 0;
};

/// Mean RMSE of freshly generated samples against rep_c, classes covered
/// uniformly. Draws from a stream independent of the training RNG.
double epoch_mean_rmse(const GeneratorModel& gen, const EvalContext& ctx,
                       std::size_t epoch) {
    ndcore::Rng rng(ctx.seed_base + epoch);
    const std::size_t per_class = ctx.samples / kNumClasses;
    const std::size_t remainder = ctx.samples % kNumClasses;
    double total = 0.0;
    constexpr std::size_t kChunk = 512;
    for (int c = 0; c < kNumClasses; ++c) {
        std::size_t left = per_class + (static_cast<std::size_t>(c) < remainder ? 1 : 0);
        while (left > 0) {
            const std::size_t n = std::min(left, kChunk);
            const Matrix z = sample_latent(n, gen.latent_dim, rng);
            const std::vector<ClassLabel> labels(n, ClassLabel{c});
            const Matrix series = generate_batch(gen, z, labels);
            for (std::size_t r = 0; r < n; ++r) {
                total += eval::rmse(ctx.reps[c], series.row_span(r));
            }
            left -= n;
        }
    }
    return total / static_cast<double>(ctx.samples);
}

} // namespace

TrainResult train(const data::LabeledDataset& dataset, const TrainConfig& cfg,
                  const EpochCallback& on_epoch) {
    cfg.validate();
    if (!dataset.balanced) {
        throw ConfigError("train: dataset must be balanced (run balance first)");
    }
    const std::size_t n_samples = dataset.size();
    if (cfg.batch_size > n_samples) {
        throw ConfigError("train: batch_size " + std::to_string(cfg.batch_size) +
                          " exceeds dataset size " + std::to_string(n_samples));
    }

    ndcore::Rng master(cfg.seed);
    ndcore::Rng gen_init(master.derive_seed());
    ndcore::Rng disc_init(master.derive_seed());
    ndcore::Rng train_rng(master.derive_seed());
    const std::uint64_t eval_seed_base = master.derive_seed();

    GeneratorModel gen = make_generator(cfg, gen_init);
    DiscriminatorModel disc = make_discriminator(cfg, disc_init);

    // Real series as one matrix; scaled into [-1, 1] when configured. The
    // adversarial game is then played in scaled space and only evaluation /
    // generation maps back.
    Matrix real_series(n_samples, kHoursPerDay);
    std::vector<ClassLabel> real_labels(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) {
        const auto& s = dataset.samples[i];
        for (std::size_t h = 0; h < kHoursPerDay; ++h) real_series(i, h) = s.values[h];
        real_labels[i] = s.label;
    }
    if (cfg.scale_inputs) {
        double lo = real_series.data()[0], hi = real_series.data()[0];
        for (std::size_t i = 0; i < real_series.size(); ++i) {
            lo = std::min(lo, real_series.data()[i]);
            hi = std::max(hi, real_series.data()[i]);
        }
        if (!(hi > lo)) throw ConfigError("train: degenerate data range, cannot scale");
        gen.scale = ScaleTransform{lo, hi};
        for (std::size_t i = 0; i < real_series.size(); ++i) {
            real_series.data()[i] = gen.scale->to_unit(real_series.data()[i]);
        }
    }

    EvalContext eval_ctx;
    eval_ctx.seed_base = eval_seed_base;
    eval_ctx.samples = cfg.eval_samples_per_epoch;
    {
        const auto stats = data::class_band_stats(dataset);
        for (int c = 0; c < kNumClasses; ++c) eval_ctx.reps[c] = stats[c].mean;
    }

    ndcore::OptimizerState gen_opt = ndcore::OptimizerState::for_params(
        gen.params, cfg.learning_rate, cfg.adam_decay1, cfg.adam_decay2, cfg.adam_epsilon);
    ndcore::OptimizerState disc_opt = ndcore::OptimizerState::for_params(
        disc.params, cfg.learning_rate, cfg.adam_decay1, cfg.adam_decay2, cfg.adam_epsilon);

    const std::size_t B = cfg.batch_size;
    const std::size_t batches_per_epoch = n_samples / B;
    std::vector<std::size_t> order(n_samples);
    std::iota(order.begin(), order.end(), std::size_t{0});

    TrainResult result{std::move(gen), std::move(disc), {}};
    result.history.epochs.reserve(cfg.epochs);

    for (std::size_t epoch = 1; epoch <= cfg.epochs; ++epoch) {
        const auto t0 = std::chrono::steady_clock::now();
        train_rng.shuffle(order);

        double d_loss_sum = 0.0;
        double g_loss_sum = 0.0;

        for (std::size_t b = 0; b < batches_per_epoch; ++b) {
            // --- Discriminator update: real batch + fresh fake batch.
            Matrix real_x(B, kHoursPerDay);
            std::vector<ClassLabel> real_y(B);
            for (std::size_t i = 0; i < B; ++i) {
                const std::size_t idx = order[b * B + i];
                const double* src = real_series.row(idx);
                double* dst = real_x.row(i);
                for (std::size_t h = 0; h < kHoursPerDay; ++h) dst[h] = src[h];
                real_y[i] = real_labels[idx];
            }

            std::vector<ClassLabel> fake_y(B);
            for (auto& y : fake_y) y = ClassLabel{static_cast<int>(train_rng.uniform_index(8))};
            const Matrix z_d = sample_latent(B, result.generator.latent_dim, train_rng);
            const Matrix fake_x =
                ndcore::mlp_forward(result.generator.params,
                                    concat_condition(z_d, fake_y));

            // One stacked pass over [real; fake] rows.
            Matrix stacked(2 * B, kHoursPerDay + kNumClasses);
            {
                const Matrix real_in = concat_condition(real_x, real_y);
                const Matrix fake_in = concat_condition(fake_x, fake_y);
                for (std::size_t i = 0; i < B; ++i) {
                    std::copy(real_in.row(i), real_in.row(i) + real_in.cols(), stacked.row(i));
                    std::copy(fake_in.row(i), fake_in.row(i) + fake_in.cols(),
                              stacked.row(B + i));
                }
            }
            ndcore::ForwardCache d_cache;
            const Matrix d_out = ndcore::mlp_forward(result.discriminator.params, stacked,
                                                     &d_cache);
            std::vector<double> p_real(B), p_fake(B);
            for (std::size_t i = 0; i < B; ++i) {
                p_real[i] = d_out(i, 0);
                p_fake[i] = d_out(B + i, 0);
            }
            const double dl = d_loss_from_probs(p_real, p_fake);

            Matrix d_grad_out(2 * B, 1);
            {
                const auto gr = d_loss_grad_real(p_real);
                const auto gf = d_loss_grad_fake(p_fake);
                for (std::size_t i = 0; i < B; ++i) {
                    d_grad_out(i, 0) = gr[i];
                    d_grad_out(B + i, 0) = gf[i];
                }
            }
            const ndcore::GradientSet d_grads =
                ndcore::mlp_backward(result.discriminator.params, d_cache, d_grad_out);
            ndcore::optimizer_step(disc_opt, result.discriminator.params, d_grads);

            // --- Generator update through the frozen discriminator.
            std::vector<ClassLabel> g_y(B);
            for (auto& y : g_y) y = ClassLabel{static_cast<int>(train_rng.uniform_index(8))};
            const Matrix z_g = sample_latent(B, result.generator.latent_dim, train_rng);

            ndcore::ForwardCache g_cache;
            const Matrix g_out = ndcore::mlp_forward(result.generator.params,
                                                     concat_condition(z_g, g_y), &g_cache);
            ndcore::ForwardCache dg_cache;
            const Matrix p_out = ndcore::mlp_forward(result.discriminator.params,
                                                     concat_condition(g_out, g_y), &dg_cache);
            std::vector<double> p_g(B);
            for (std::size_t i = 0; i < B; ++i) p_g[i] = p_out(i, 0);
            const double gl = g_loss_from_probs(p_g, cfg.loss_mode);

            Matrix g_grad_out(B, 1);
            {
                const auto gg = g_loss_grad(p_g, cfg.loss_mode);
                for (std::size_t i = 0; i < B; ++i) g_grad_out(i, 0) = gg[i];
            }
            Matrix d_input_grad;
            ndcore::mlp_backward(result.discriminator.params, dg_cache, g_grad_out,
                                 &d_input_grad);
            // Only the series block of the discriminator input feeds back.
            Matrix gen_out_grad(B, kHoursPerDay);
            for (std::size_t i = 0; i < B; ++i) {
                const double* src = d_input_grad.row(i);
                double* dst = gen_out_grad.row(i);
                for (std::size_t h = 0; h < kHoursPerDay; ++h) dst[h] = src[h];
            }
            const ndcore::GradientSet g_grads =
                ndcore::mlp_backward(result.generator.params, g_cache, gen_out_grad);
            ndcore::optimizer_step(gen_opt, result.generator.params, g_grads);

            if (!std::isfinite(dl) || !std::isfinite(gl)) {
                throw TrainingDiverged("training diverged at epoch " + std::to_string(epoch) +
                                       ", batch " + std::to_string(b + 1) +
                                       ": d_loss=" + format_double(dl) +
                                       ", g_loss=" + format_double(gl));
            }
            d_loss_sum += dl;
            g_loss_sum += gl;
        }

        EpochRecord rec;
        rec.epoch = epoch;
        rec.d_loss = d_loss_sum / static_cast<double>(batches_per_epoch);
        rec.g_loss = g_loss_sum / static_cast<double>(batches_per_epoch);
        rec.mean_rmse = epoch_mean_rmse(result.generator, eval_ctx, epoch);
        rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                          .count();
        result.history.epochs.push_back(rec);
        if (on_epoch) on_epoch(result.generator, result.discriminator, rec);
    }

    return result;
}

void save_history_csv(const TrainingHistory& history, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write history file: " + path);
    out << "epoch,d_loss,g_loss,mean_rmse,seconds\n";
    for (const EpochRecord& r : history.epochs) {
        out << r.epoch << ',' << format_double(r.d_loss) << ',' << format_double(r.g_loss)
            << ',' << format_double(r.mean_rmse) << ',' << format_double(r.seconds) << '\n';
    }
}

TrainingHistory load_history_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open history file: " + path);
    std::string line;
    if (!std::getline(in, line) || line != "epoch,d_loss,g_loss,mean_rmse,seconds") {
        throw DataError("bad history header in " + path);
    }
    TrainingHistory history;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string field;
        EpochRecord r;
        std::getline(ss, field, ',');
        r.epoch = static_cast<std::size_t>(std::stoull(field));
        std::getline(ss, field, ',');
        r.d_loss = parse_double(field);
        std::getline(ss, field, ',');
        r.g_loss = parse_double(field);
        std::getline(ss, field, ',');
        r.mean_rmse = parse_double(field);
        std::getline(ss, field, ',');
        r.seconds = parse_double(field);
        history.epochs.push_back(r);
    }
    return history;
}

} // namespace airgen::cgan
