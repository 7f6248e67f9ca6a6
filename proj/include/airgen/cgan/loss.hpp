#pragma once

#include <span>
#include <vector>

#include "airgen/cgan/model.hpp"

namespace airgen::cgan {

/// Log arguments are clamped below at this value, so a saturated
/// discriminator yields a large finite loss instead of -inf.
inline constexpr double kLogClamp = 1e-12;

/// A conditioned batch: series rows paired with their class labels.
struct ConditionedBatch {
    ndcore::Matrix series;          // B x 24
    std::vector<ClassLabel> labels; // B

    std::size_t size() const { return labels.size(); }
};

/// Discriminator loss, minimized:
///   -(1/2) mean[log D(x,y)] - (1/2) mean[log(1 - D(G(z,y),y))].
double d_loss(const DiscriminatorModel& disc, const ConditionedBatch& real_batch,
              const ConditionedBatch& fake_batch);

/// Generator loss, minimized. PaperSaturating: mean[log(1 - D(G(z,y),y))];
/// NonSaturating: -mean[log D(G(z,y),y)].
double g_loss(const DiscriminatorModel& disc, const ConditionedBatch& fake_batch,
              LossMode mode);

// The same losses expressed on already-computed probabilities, plus their
// derivatives w.r.t. each probability. The training loop uses these so that
// the scalar losses above and the backward pass share one definition.

double d_loss_from_probs(std::span<const double> p_real, std::span<const double> p_fake);
double g_loss_from_probs(std::span<const double> p_fake, LossMode mode);

/// d/dp of the real-sample term of d_loss, per sample (m = batch size).
std::vector<double> d_loss_grad_real(std::span<const double> p_real);
/// d/dp of the fake-sample term of d_loss, per sample.
std::vector<double> d_loss_grad_fake(std::span<const double> p_fake);
/// d/dp of g_loss, per sample.
std::vector<double> g_loss_grad(std::span<const double> p_fake, LossMode mode);

} // namespace airgen::cgan
