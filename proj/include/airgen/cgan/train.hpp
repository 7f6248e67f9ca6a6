#pragma once

#include <functional>
#include <string>
#include <vector>

#include "airgen/cgan/model.hpp"
#include "airgen/data/dataset.hpp"

namespace airgen::cgan {

struct EpochRecord {
    std::size_t epoch = 0;   // 1-based
    double d_loss = 0.0;     // mean over the epoch's batches
    double g_loss = 0.0;
    double mean_rmse = 0.0;  // over eval_samples_per_epoch fresh samples
    double seconds = 0.0;    // wall clock for the epoch
};

struct TrainingHistory {
    std::vector<EpochRecord> epochs;
};

void save_history_csv(const TrainingHistory& history, const std::string& path);
TrainingHistory load_history_csv(const std::string& path);

struct TrainResult {
    GeneratorModel generator;
    DiscriminatorModel discriminator;
    TrainingHistory history;
};

/// Called after every epoch with the current models and that epoch's record.
using EpochCallback =
    std::function<void(const GeneratorModel&, const DiscriminatorModel&, const EpochRecord&)>;

/// Adversarial training on a balanced dataset. Per minibatch: one
/// discriminator update on the real batch plus an equally sized fresh fake
/// batch, then one generator update through the frozen discriminator. After
/// each epoch the generator is scored by mean RMSE against the class
/// representatives. Fully deterministic for a given (dataset, cfg).
TrainResult train(const data::LabeledDataset& dataset, const TrainConfig& cfg,
                  const EpochCallback& on_epoch = {});

} // namespace airgen::cgan
