#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "airgen/cgan/model.hpp"
#include "airgen/data/dataset.hpp"

namespace airgen::eval {

using data::ClassLabel;
using data::kHoursPerDay;
using data::kNumClasses;

struct FakeSample {
    std::array<double, kHoursPerDay> values{};
    ClassLabel label;
};

struct GenerationMeta {
    std::string checkpoint_id;  // path or synthetic id of the source generator
    std::uint64_t seed = 0;
    std::size_t samples_per_class = 0;
};

/// A named collection of generated samples, e.g. "fake-1".
struct FakeDataset {
    std::string name;
    std::vector<FakeSample> samples;
    GenerationMeta meta;
};

/// reps_per_class fresh samples per class, deterministic in `seed`.
FakeDataset generate_fake_dataset(const cgan::GeneratorModel& gen,
                                  std::size_t reps_per_class, std::uint64_t seed,
                                  std::string name = "fake",
                                  std::string checkpoint_id = "");

/// Same statistics as data::band_stats, over the generated samples of one
/// class.
data::ClassBandStats fake_band_stats(const FakeDataset& fake, ClassLabel label);

/// CSV rows `label,h0..h23` plus a JSON metadata sidecar.
void save_fake_dataset_csv(const FakeDataset& fake, const std::string& csv_path,
                           const std::string& meta_path = "");
FakeDataset load_fake_dataset_csv(const std::string& csv_path, std::string name = "");

} // namespace airgen::eval
