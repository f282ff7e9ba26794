#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>

#include "recur/config.hpp"
#include "recur/hyperplane.hpp"
#include "recur/loaders.hpp"
#include "recur/prequential.hpp"
#include "recur/report.hpp"
#include "recur/sweep.hpp"

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Recurring-concept stream classifier with a pool of Fourier spectra"};
    app.require_subcommand(1);

    std::string schedule_path, out_path;
    auto* gen = app.add_subcommand("generate", "Write a hyperplane stream described by a schedule file");
    gen->add_option("--schedule", schedule_path, "Schedule file")->required()->check(CLI::ExistingFile);
    gen->add_option("--out", out_path, "Output CSV")->required();

    std::string config_path, stream_path, report_path, pool_dump_path;
    bool timing = false;
    auto* run = app.add_subcommand("run", "Prequential evaluation of one config");
    run->add_option("--config", config_path, "Config file")->required()->check(CLI::ExistingFile);
    run->add_option("--stream", stream_path, "CSV or ARFF stream, overriding the config's source");
    run->add_option("--report", report_path, "Report CSV")->required();
    run->add_option("--pool-dump", pool_dump_path, "Write the final pool here");
    run->add_flag("--timing", timing, "Add an instances_per_sec column");

    std::string configs_dir, grid_base, sweep_report;
    unsigned threads = 0;
    bool sweep_timing = false;
    auto* sw = app.add_subcommand("sweep", "Run many configs and collect one report");
    auto* dir_opt = sw->add_option("--configs", configs_dir, "Directory of *.cfg files")->check(CLI::ExistingDirectory);
    auto* grid_opt = sw->add_option("--grid", grid_base, "Base config expanded into the standard grid")
                         ->check(CLI::ExistingFile);
    dir_opt->excludes(grid_opt);
    sw->add_option("--report", sweep_report, "Report CSV")->required();
    sw->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");
    sw->add_flag("--timing", sweep_timing, "Add an instances_per_sec column");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            const auto schedule = recur::stream::load_schedule(schedule_path);
            const auto records = recur::stream::generate(schedule);
            auto out = open_out(out_path);
            recur::stream::write_csv(out, schedule.space(), records);
            std::printf("wrote %zu records to %s\n", records.size(), out_path.c_str());
        } else if (*run) {
            auto config = recur::eval::load_config(config_path);
            if (!stream_path.empty()) {
                config.stream = stream_path;
                config.schedule.clear();
            }
            const auto data = recur::eval::load_stream(config);
            std::ofstream dump;
            if (!pool_dump_path.empty()) dump = open_out(pool_dump_path);
            const auto report = recur::eval::prequential_run(config, data, dump.is_open() ? &dump : nullptr);
            auto out = open_out(report_path);
            recur::eval::write_report(out, std::span(&report, 1), timing);
            std::printf("%s: accuracy %.4f over %llu records, %llu drifts, %llu reuses\n", report.name.c_str(),
                        report.accuracy, static_cast<unsigned long long>(report.records),
                        static_cast<unsigned long long>(report.drift_count),
                        static_cast<unsigned long long>(report.reuse_count));
        } else if (*sw) {
            std::vector<recur::eval::RunConfig> configs;
            if (!configs_dir.empty()) {
                configs = recur::eval::load_config_dir(configs_dir);
            } else if (!grid_base.empty()) {
                configs = recur::eval::standard_grid(recur::eval::load_config(grid_base));
            } else {
                throw std::runtime_error("sweep needs --configs or --grid");
            }
            const auto reports = recur::eval::sweep(configs, threads);
            auto out = open_out(sweep_report);
            recur::eval::write_report(out, reports, sweep_timing);
            std::size_t failed = 0;
            for (const auto& r : reports) failed += r.status != "ok";
            std::printf("%zu runs, %zu failed\n", reports.size(), failed);
            return failed == 0 ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
