#include "recur/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <stdexcept>
#include <thread>

namespace recur::eval {

std::vector<RunReport> sweep(std::span<const RunConfig> configs, unsigned threads) {
    if (configs.empty()) throw std::invalid_argument("sweep needs at least one config");
    std::vector<RunReport> reports(configs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < configs.size(); i = next++) {
            try {
                reports[i] = run_config(configs[i]);
            } catch (const std::exception& e) {
                RunReport failed;
                failed.name = configs[i].name;
                failed.variant = std::string(pool::to_string(configs[i].engine.pool.variant));
                failed.detector = std::string(drift::to_string(configs[i].engine.detector.kind));
                failed.pool_size = configs[i].engine.pool.pool_size;
                failed.seed = configs[i].engine.seed;
                failed.status = std::string("failed: ") + e.what();
                reports[i] = std::move(failed);
            }
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, configs.size()));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    return reports;
}

std::vector<RunConfig> load_config_dir(const std::string& dir) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".cfg") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    std::vector<RunConfig> configs;
    for (const auto& f : files) configs.push_back(load_config(f.string()));
    if (configs.empty()) throw std::runtime_error("no .cfg files in '" + dir + "'");
    return configs;
}

std::vector<RunConfig> standard_grid(const RunConfig& base) {
    std::vector<RunConfig> out;
    for (auto variant : {pool::Variant::kEp, pool::Variant::kFct}) {
        for (double noise : {0.0, 0.2, 0.3}) {
            for (std::size_t pool_size : {std::size_t{1}, std::size_t{10}}) {
                for (auto detector : {drift::DetectorKind::kAdwin, drift::DetectorKind::kBlockSeq}) {
                    RunConfig c = base;
                    c.engine.pool.variant = variant;
                    c.engine.pool.pool_size = pool_size;
                    c.engine.detector.kind = detector;
                    c.noise_rate = noise;
                    char buf[128];
                    std::snprintf(buf, sizeof buf, "%s-%s-noise%.1f-pool%zu-%s", base.name.c_str(),
                                  std::string(pool::to_string(variant)).c_str(), noise, pool_size,
                                  std::string(drift::to_string(detector)).c_str());
                    c.name = buf;
                    out.push_back(std::move(c));
                }
            }
        }
    }
    return out;
}

}  // namespace recur::eval
