#pragma once

#include <string>

#include "airgen/cgan/model.hpp"

namespace airgen::cgan {

struct Checkpoint {
    GeneratorModel generator;
    DiscriminatorModel discriminator;
    TrainConfig config;
};

/// JSON checkpoint: full architecture, row-major weights, biases, the train
/// config, and the scale transform when one is attached. Doubles round-trip
/// exactly, so save followed by load reproduces the parameters bit for bit.
void save_checkpoint(const GeneratorModel& gen, const DiscriminatorModel& disc,
                     const TrainConfig& cfg, const std::string& path);

Checkpoint load_checkpoint(const std::string& path);

} // namespace airgen::cgan
