#include "airgen/eval/fake_dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "airgen/errors.hpp"
#include "airgen/io_util.hpp"
#include "airgen/ndcore/accurate_sum.hpp"

namespace airgen::eval {

FakeDataset generate_fake_dataset(const cgan::GeneratorModel& gen,
                                  std::size_t reps_per_class, std::uint64_t seed,
                                  std::string name, std::string checkpoint_id) {
    if (reps_per_class == 0) throw ConfigError("generate_fake_dataset: reps_per_class >= 1");
    ndcore::Rng rng(seed);
    FakeDataset fake;
    fake.name = std::move(name);
    fake.meta = {std::move(checkpoint_id), seed, reps_per_class};
    fake.samples.reserve(reps_per_class * kNumClasses);

    constexpr std::size_t kChunk = 512;
    for (int c = 0; c < kNumClasses; ++c) {
        std::size_t left = reps_per_class;
        while (left > 0) {
            const std::size_t n = std::min(left, kChunk);
            const ndcore::Matrix z = cgan::sample_latent(n, gen.latent_dim, rng);
            const std::vector<ClassLabel> labels(n, ClassLabel{c});
            const ndcore::Matrix series = cgan::generate_batch(gen, z, labels);
            for (std::size_t r = 0; r < n; ++r) {
                FakeSample s;
                s.label = ClassLabel{c};
                for (std::size_t h = 0; h < kHoursPerDay; ++h) s.values[h] = series(r, h);
                fake.samples.push_back(s);
            }
            left -= n;
        }
    }
    return fake;
}

data::ClassBandStats fake_band_stats(const FakeDataset& fake, ClassLabel label) {
    std::vector<const FakeSample*> members;
    for (const FakeSample& s : fake.samples) {
        if (s.label == label) members.push_back(&s);
    }
    if (members.empty()) {
        throw StatsError("fake_band_stats: class " + std::to_string(label.id) +
                         " is empty in dataset '" + fake.name + "'");
    }

    data::ClassBandStats stats;
    stats.label = label;
    const double n = static_cast<double>(members.size());
    for (std::size_t h = 0; h < kHoursPerDay; ++h) {
        ndcore::KahanSum sum;
        double lo = members.front()->values[h];
        double hi = lo;
        for (const FakeSample* s : members) {
            const double v = s->values[h];
            sum.add(v);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        const double mean = sum.value() / n;
        ndcore::KahanSum sq;
        for (const FakeSample* s : members) {
            const double d = s->values[h] - mean;
            sq.add(d * d);
        }
        stats.mean[h] = mean;
        stats.stdev[h] = std::sqrt(sq.value() / n);
        stats.min[h] = lo;
        stats.max[h] = hi;
    }
    return stats;
}

void save_fake_dataset_csv(const FakeDataset& fake, const std::string& csv_path,
                           const std::string& meta_path) {
    std::ofstream out(csv_path);
    if (!out) throw IoError("cannot write fake dataset: " + csv_path);
    out << "label";
    for (std::size_t h = 0; h < kHoursPerDay; ++h) out << ",h" << h;
    out << '\n';
    for (const FakeSample& s : fake.samples) {
        out << s.label.id;
        for (std::size_t h = 0; h < kHoursPerDay; ++h) {
            out << ',' << format_double(s.values[h]);
        }
        out << '\n';
    }
    if (!meta_path.empty()) {
        nlohmann::json j;
        j["name"] = fake.name;
        j["checkpoint"] = fake.meta.checkpoint_id;
        j["seed"] = fake.meta.seed;
        j["samples_per_class"] = fake.meta.samples_per_class;
        j["total_samples"] = fake.samples.size();
        std::ofstream meta(meta_path);
        if (!meta) throw IoError("cannot write metadata: " + meta_path);
        meta << j.dump(2) << '\n';
    }
}

FakeDataset load_fake_dataset_csv(const std::string& csv_path, std::string name) {
    std::ifstream in(csv_path);
    if (!in) throw IoError("cannot open fake dataset: " + csv_path);
    std::string line;
    if (!std::getline(in, line)) throw DataError("empty fake dataset: " + csv_path);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("label,h0,", 0) != 0) {
        throw DataError(csv_path + ": expected header 'label,h0..h23'");
    }

    FakeDataset fake;
    fake.name = name.empty() ? csv_path : std::move(name);
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string field;
        if (!std::getline(ss, field, ',')) {
            throw DataError(csv_path + " row " + std::to_string(row) + ": missing label");
        }
        FakeSample s;
        s.label = ClassLabel{std::stoi(field)};
        for (std::size_t h = 0; h < kHoursPerDay; ++h) {
            if (!std::getline(ss, field, ',')) {
                throw DataError(csv_path + " row " + std::to_string(row) +
                                ": expected 24 values");
            }
            s.values[h] = parse_double(field);
            if (!std::isfinite(s.values[h])) {
                throw DataError(csv_path + " row " + std::to_string(row) +
                                ": non-finite value");
            }
        }
        if (std::getline(ss, field, ',')) {
            throw DataError(csv_path + " row " + std::to_string(row) + ": too many fields");
        }
        fake.samples.push_back(s);
    }
    return fake;
}

} // namespace airgen::eval
