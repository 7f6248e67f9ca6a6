#include "airgen/data/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include <json.hpp>

#include "airgen/errors.hpp"
#include "airgen/ndcore/accurate_sum.hpp"
#include "airgen/ndcore/rng.hpp"

namespace airgen::data {

std::array<std::size_t, kNumClasses> LabeledDataset::per_class_counts() const {
    std::array<std::size_t, kNumClasses> counts{};
    for (const DailySeries& s : samples) counts[s.label.id] += 1;
    return counts;
}

LabeledDataset balance(const LabeledDataset& dataset, std::uint64_t seed) {
    const auto counts = dataset.per_class_counts();
    std::size_t min_count = std::numeric_limits<std::size_t>::max();
    for (int c = 0; c < kNumClasses; ++c) {
        if (counts[c] == 0) {
            throw BalanceError("cannot balance: class " + std::to_string(c) + " (" +
                               ClassLabel{c}.name() + ") is empty");
        }
        min_count = std::min(min_count, counts[c]);
    }

    std::array<std::vector<std::size_t>, kNumClasses> by_class;
    for (std::size_t i = 0; i < dataset.samples.size(); ++i) {
        by_class[dataset.samples[i].label.id].push_back(i);
    }

    ndcore::Rng master(seed);
    LabeledDataset out;
    out.balanced = true;
    out.balance_seed = seed;
    out.samples.reserve(min_count * kNumClasses);
    for (int c = 0; c < kNumClasses; ++c) {
        ndcore::Rng class_rng(master.derive_seed());
        std::vector<std::size_t>& idx = by_class[c];
        class_rng.shuffle(idx);
        idx.resize(min_count);
        std::sort(idx.begin(), idx.end());  // keep the original within-class order
        for (std::size_t i : idx) out.samples.push_back(dataset.samples[i]);
    }
    return out;
}

ClassBandStats band_stats(const LabeledDataset& dataset, ClassLabel label) {
    std::vector<const DailySeries*> members;
    for (const DailySeries& s : dataset.samples) {
        if (s.label == label) members.push_back(&s);
    }
    if (members.size() < 2) {
        throw StatsError("band_stats: class " + std::to_string(label.id) + " has " +
                         std::to_string(members.size()) + " samples, need at least 2");
    }

    ClassBandStats stats;
    stats.label = label;
    const double n = static_cast<double>(members.size());
    for (std::size_t h = 0; h < kHoursPerDay; ++h) {
        ndcore::KahanSum sum;
        double lo = members.front()->values[h];
        double hi = lo;
        for (const DailySeries* s : members) {
            const double v = s->values[h];
            sum.add(v);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        const double mean = sum.value() / n;
        ndcore::KahanSum sq;
        for (const DailySeries* s : members) {
            const double d = s->values[h] - mean;
            sq.add(d * d);
        }
        stats.mean[h] = mean;
        stats.stdev[h] = std::sqrt(sq.value() / n);  // population variant
        stats.min[h] = lo;
        stats.max[h] = hi;
    }
    return stats;
}

std::array<ClassBandStats, kNumClasses> class_band_stats(const LabeledDataset& dataset) {
    std::array<ClassBandStats, kNumClasses> all;
    for (int c = 0; c < kNumClasses; ++c) all[c] = band_stats(dataset, ClassLabel{c});
    return all;
}

void save_dataset(const LabeledDataset& dataset, const std::string& path) {
    nlohmann::json j;
    j["format_version"] = 1;
    j["balanced"] = dataset.balanced;
    if (dataset.balance_seed) {
        j["balance_seed"] = *dataset.balance_seed;
    } else {
        j["balance_seed"] = nullptr;
    }
    nlohmann::json samples = nlohmann::json::array();
    for (const DailySeries& s : dataset.samples) {
        samples.push_back({{"date", format_date(s.date)},
                           {"label", s.label.id},
                           {"values", s.values}});
    }
    j["samples"] = std::move(samples);
    std::ofstream out(path);
    if (!out) throw IoError("cannot write dataset file: " + path);
    out << j.dump() << '\n';
}

LabeledDataset load_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open dataset file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw DataError("malformed dataset file " + path + ": " + e.what());
    }
    try {
        if (j.at("format_version").get<int>() != 1) {
            throw DataError("unsupported dataset format_version in " + path);
        }
        LabeledDataset dataset;
        dataset.balanced = j.at("balanced").get<bool>();
        if (!j.at("balance_seed").is_null()) {
            dataset.balance_seed = j["balance_seed"].get<std::uint64_t>();
        }
        for (const auto& js : j.at("samples")) {
            DailySeries s;
            s.date = parse_date(js.at("date").get<std::string>());
            s.label = ClassLabel{js.at("label").get<int>()};
            const auto& vals = js.at("values");
            if (vals.size() != kHoursPerDay) {
                throw DataError("sample in " + path + " does not have 24 values");
            }
            for (std::size_t h = 0; h < kHoursPerDay; ++h) {
                s.values[h] = vals[h].get<double>();
                if (!std::isfinite(s.values[h]) || s.values[h] < 0.0) {
                    throw DataError("sample in " + path + " has invalid value at hour " +
                                    std::to_string(h));
                }
            }
            dataset.samples.push_back(s);
        }
        return dataset;
    } catch (const nlohmann::json::exception& e) {
        throw DataError("malformed dataset file " + path + ": " + e.what());
    }
}

} // namespace airgen::data
