#include "airgen/cgan/loss.hpp"

#include <algorithm>
#include <cmath>

#include "airgen/errors.hpp"

namespace airgen::cgan {

namespace {

double clamped_log(double x) {
    return std::log(std::max(x, kLogClamp));
}

std::vector<double> discriminate_rows(const DiscriminatorModel& disc,
                                      const ConditionedBatch& batch) {
    if (batch.size() == 0) throw ShapeError("loss: empty batch");
    const ndcore::Matrix out =
        ndcore::mlp_forward(disc.params, concat_condition(batch.series, batch.labels));
    std::vector<double> probs(out.rows());
    for (std::size_t r = 0; r < out.rows(); ++r) probs[r] = out(r, 0);
    return probs;
}

} // namespace

double d_loss_from_probs(std::span<const double> p_real, std::span<const double> p_fake) {
    double sum_real = 0.0;
    for (double p : p_real) sum_real += clamped_log(p);
    double sum_fake = 0.0;
    for (double p : p_fake) sum_fake += clamped_log(1.0 - p);
    return -0.5 * sum_real / static_cast<double>(p_real.size()) -
           0.5 * sum_fake / static_cast<double>(p_fake.size());
}

double g_loss_from_probs(std::span<const double> p_fake, LossMode mode) {
    double sum = 0.0;
    if (mode == LossMode::PaperSaturating) {
        for (double p : p_fake) sum += clamped_log(1.0 - p);
        return sum / static_cast<double>(p_fake.size());
    }
    for (double p : p_fake) sum += clamped_log(p);
    return -sum / static_cast<double>(p_fake.size());
}

double d_loss(const DiscriminatorModel& disc, const ConditionedBatch& real_batch,
              const ConditionedBatch& fake_batch) {
    return d_loss_from_probs(discriminate_rows(disc, real_batch),
                             discriminate_rows(disc, fake_batch));
}

double g_loss(const DiscriminatorModel& disc, const ConditionedBatch& fake_batch,
              LossMode mode) {
    return g_loss_from_probs(discriminate_rows(disc, fake_batch), mode);
}

std::vector<double> d_loss_grad_real(std::span<const double> p_real) {
    const double m = static_cast<double>(p_real.size());
    std::vector<double> grad(p_real.size());
    for (std::size_t i = 0; i < p_real.size(); ++i) {
        grad[i] = -0.5 / (m * std::max(p_real[i], kLogClamp));
    }
    return grad;
}

std::vector<double> d_loss_grad_fake(std::span<const double> p_fake) {
    const double m = static_cast<double>(p_fake.size());
    std::vector<double> grad(p_fake.size());
    for (std::size_t i = 0; i < p_fake.size(); ++i) {
        grad[i] = 0.5 / (m * std::max(1.0 - p_fake[i], kLogClamp));
    }
    return grad;
}

std::vector<double> g_loss_grad(std::span<const double> p_fake, LossMode mode) {
    const double m = static_cast<double>(p_fake.size());
    std::vector<double> grad(p_fake.size());
    if (mode == LossMode::PaperSaturating) {
        for (std::size_t i = 0; i < p_fake.size(); ++i) {
            grad[i] = -1.0 / (m * std::max(1.0 - p_fake[i], kLogClamp));
        }
    } else {
        for (std::size_t i = 0; i < p_fake.size(); ++i) {
            grad[i] = -1.0 / (m * std::max(p_fake[i], kLogClamp));
        }
    }
    return grad;
}

} // namespace airgen::cgan
