#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

namespace mlim {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  std::string experiment;
  nlohmann::json params;  // the whole config object
  std::uint64_t seed = 0;
  std::filesystem::path out_dir;
};

/// Reads a JSON config. `seed_override` wins over the config's "seed"; one of
/// the two must be present. A config "experiment" key, if any, must match.
ExperimentConfig load_config(const std::filesystem::path& file, const std::string& experiment,
                             std::optional<std::uint64_t> seed_override,
                             const std::filesystem::path& out_dir);

struct ExperimentReport {
  std::size_t items = 0;
  std::vector<std::string> violations;
  std::vector<std::filesystem::path> artifacts;
  nlohmann::json summary;
  bool ok() const { return violations.empty(); }
};

/// Runs one of: convergence, expander-gap, duality, forests. Artifacts (CSV and
/// JSON) are written to cfg.out_dir and depend only on the config and seed.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

const std::vector<std::string>& experiment_names();

/// Worker count: MATROID_LIMITS_THREADS if set and positive, else the
/// hardware concurrency (at least 1).
std::size_t worker_limit();

/// Seed for item `index` of a run seeded with `base`.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// Evaluates f(0..count-1) on up to worker_limit() threads; results come back
/// in index order. The first exception thrown by any task is rethrown.
template <class F>
auto parallel_map(std::size_t count, F f) -> std::vector<decltype(f(std::size_t{0}))> {
  using R = decltype(f(std::size_t{0}));
  std::vector<std::optional<R>> slots(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        slots[i].emplace(f(i));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min(worker_limit(), count);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
  std::vector<R> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace mlim
