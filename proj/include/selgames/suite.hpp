#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "selgames/engine.hpp"

namespace selgames {

struct CheckReport {
    int id = 0;
    std::string name;
    std::size_t instances = 0;
    std::vector<std::string> violations;
    /// Observations that do not count against the check.
    std::vector<std::string> notes;
    double elapsed_ms = 0;
    bool passed() const { return violations.empty(); }
};

struct SuiteReport {
    std::vector<CheckReport> checks;
    bool passed() const;
};

struct SuiteOptions {
    std::uint64_t seed = 7;
    std::size_t instances = 200;
    /// Check ids to run (1..12); empty runs all.
    std::vector<int> only;
    std::uint64_t node_budget = 10'000'000;
    std::function<void(const CheckReport&)> on_check;
};

SuiteReport run_suite(const SuiteOptions& options);

nlohmann::json suite_report_to_json(const SuiteReport& report, bool with_elapsed = true);

// ---- instance generators ----

/// Random model with at most `max_points` points and at most `max_opens` opens.
SpaceModel small_model(std::mt19937_64& rng, int max_points = 5, std::size_t max_opens = 16);
/// Random partition topology; every finite regular space has this form.
SpaceModel regular_model(std::mt19937_64& rng, int max_points = 4);
/// Gdelta cover with factor presentations in which each requirement lies inside one target.
GdeltaCover random_gdelta_cover(const SpaceModel& model, std::mt19937_64& rng,
                                const std::vector<PointSet>& requirements);
/// K_s = intersection over the pool of cl(sigma(s + U)) for every pool history s shorter than
/// the horizon along which sigma has not yet covered the space.
std::vector<PointSet> menger_kernels(const GameSpec& spec, const Strategy& sigma);

}  // namespace selgames
