#include "airgen/eval/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "airgen/errors.hpp"
#include "airgen/eval/rmse.hpp"
#include "airgen/io_util.hpp"
#include "airgen/ndcore/accurate_sum.hpp"

namespace airgen::eval {

namespace {

struct Scored {
    double value;
    int label;
};

RmseReport aggregate(std::string name, const std::vector<Scored>& scores) {
    if (scores.empty()) throw EvalError("evaluate: no samples in '" + name + "'");

    RmseReport report;
    report.dataset_name = std::move(name);
    report.sample_count = scores.size();

    ndcore::KahanSum total;
    double lo = scores.front().value, hi = scores.front().value;
    std::array<ndcore::KahanSum, kNumClasses> class_sum;
    std::array<std::size_t, kNumClasses> class_n{};
    for (const Scored& s : scores) {
        total.add(s.value);
        lo = std::min(lo, s.value);
        hi = std::max(hi, s.value);
        class_sum[s.label].add(s.value);
        class_n[s.label] += 1;
    }
    const double n = static_cast<double>(scores.size());
    const double mean = total.value() / n;

    ndcore::KahanSum sq;
    std::array<ndcore::KahanSum, kNumClasses> class_sq;
    for (const Scored& s : scores) {
        const double d = s.value - mean;
        sq.add(d * d);
    }
    std::array<double, kNumClasses> class_mean{};
    for (int c = 0; c < kNumClasses; ++c) {
        if (class_n[c] > 0) class_mean[c] = class_sum[c].value() / static_cast<double>(class_n[c]);
    }
    for (const Scored& s : scores) {
        const double d = s.value - class_mean[s.label];
        class_sq[s.label].add(d * d);
    }

    report.overall = {lo, mean, std::sqrt(sq.value() / n), hi};
    for (int c = 0; c < kNumClasses; ++c) {
        report.per_class[c].count = class_n[c];
        if (class_n[c] > 0) {
            report.per_class[c].mean = class_mean[c];
            report.per_class[c].stdev =
                std::sqrt(class_sq[c].value() / static_cast<double>(class_n[c]));
        }
    }

    // With equal-sized classes the overall mean and the mean of class means
    // coincide by definition; verify the aggregation kept them together.
    const bool balanced =
        std::all_of(class_n.begin(), class_n.end(),
                    [&](std::size_t k) { return k == class_n[0] && k > 0; });
    if (balanced) {
        ndcore::KahanSum cm;
        for (int c = 0; c < kNumClasses; ++c) cm.add(class_mean[c]);
        const double mean_of_means = cm.value() / kNumClasses;
        if (std::abs(mean_of_means - mean) > 1e-12 * std::max(1.0, std::abs(mean))) {
            throw EvalError("evaluate: aggregation inconsistency (overall mean " +
                            format_double(mean) + " vs mean of class means " +
                            format_double(mean_of_means) + ")");
        }
    }
    return report;
}

} // namespace

RmseReport evaluate(const FakeDataset& fake,
                    const std::array<data::ClassBandStats, kNumClasses>& reps) {
    for (int c = 0; c < kNumClasses; ++c) {
        if (reps[c].label.id != c) {
            throw EvalError("evaluate: representative for class " + std::to_string(c) +
                            " is missing or out of order");
        }
    }
    std::vector<Scored> scores;
    scores.reserve(fake.samples.size());
    for (const FakeSample& s : fake.samples) {
        scores.push_back({rmse(reps[s.label.id].mean, s.values), s.label.id});
    }
    return aggregate(fake.name, scores);
}

RmseReport evaluate_real(const data::LabeledDataset& dataset,
                         const std::array<data::ClassBandStats, kNumClasses>& reps,
                         std::string name) {
    for (int c = 0; c < kNumClasses; ++c) {
        if (reps[c].label.id != c) {
            throw EvalError("evaluate: representative for class " + std::to_string(c) +
                            " is missing or out of order");
        }
    }
    std::vector<Scored> scores;
    scores.reserve(dataset.samples.size());
    for (const data::DailySeries& s : dataset.samples) {
        scores.push_back({rmse(reps[s.label.id].mean, s.values), s.label.id});
    }
    return aggregate(std::move(name), scores);
}

std::vector<RmseReport> rank_datasets(std::vector<RmseReport> reports) {
    if (reports.empty()) throw EvalError("rank_datasets: no reports");
    std::sort(reports.begin(), reports.end(), [](const RmseReport& a, const RmseReport& b) {
        if (a.overall.mean != b.overall.mean) return a.overall.mean < b.overall.mean;
        if (a.overall.stdev != b.overall.stdev) return a.overall.stdev < b.overall.stdev;
        return a.dataset_name < b.dataset_name;
    });
    return reports;
}

void save_report_json(const RmseReport& report, const std::string& path) {
    nlohmann::json j;
    j["dataset"] = report.dataset_name;
    j["sample_count"] = report.sample_count;
    j["overall"] = {{"min", report.overall.min},
                    {"mean", report.overall.mean},
                    {"stdev", report.overall.stdev},
                    {"max", report.overall.max}};
    nlohmann::json per_class = nlohmann::json::array();
    for (int c = 0; c < kNumClasses; ++c) {
        per_class.push_back({{"class", c},
                             {"mean", report.per_class[c].mean},
                             {"stdev", report.per_class[c].stdev},
                             {"count", report.per_class[c].count}});
    }
    j["per_class"] = std::move(per_class);
    std::ofstream out(path);
    if (!out) throw IoError("cannot write report: " + path);
    out << j.dump(2) << '\n';
}

void save_overall_table_csv(const std::vector<RmseReport>& reports, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write table: " + path);
    out << "dataset,min,mean,stdev,max\n";
    for (const RmseReport& r : reports) {
        out << r.dataset_name << ',' << format_double(r.overall.min) << ','
            << format_double(r.overall.mean) << ',' << format_double(r.overall.stdev) << ','
            << format_double(r.overall.max) << '\n';
    }
}

void save_per_class_table_csv(const std::vector<RmseReport>& reports, const std::string& path,
                              bool formatted) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write table: " + path);
    if (formatted) {
        out << "dataset";
        for (int c = 0; c < kNumClasses; ++c) out << ",class" << c;
        out << '\n';
        for (const RmseReport& r : reports) {
            out << r.dataset_name;
            for (int c = 0; c < kNumClasses; ++c) {
                char buf[64];
                std::snprintf(buf, sizeof(buf), ",%.1f±%.1f", r.per_class[c].mean,
                              r.per_class[c].stdev);
                out << buf;
            }
            out << '\n';
        }
    } else {
        out << "dataset";
        for (int c = 0; c < kNumClasses; ++c) {
            out << ",class" << c << "_mean,class" << c << "_stdev";
        }
        out << '\n';
        for (const RmseReport& r : reports) {
            out << r.dataset_name;
            for (int c = 0; c < kNumClasses; ++c) {
                out << ',' << format_double(r.per_class[c].mean) << ','
                    << format_double(r.per_class[c].stdev);
            }
            out << '\n';
        }
    }
}

} // namespace airgen::eval
