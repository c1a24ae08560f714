#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "selgames/solver.hpp"

namespace selgames::io {

using json = nlohmann::json;

/// Malformed document: wrong shape, wrong type, unknown name.
class ParseError : public Error {
public:
    using Error::Error;
};

json to_json(PointSet s);
/// Sorted array of distinct points; throws InvariantError naming the violated rule.
PointSet point_set_from_json(const json& j, int point_count = kMaxPoints);
json to_json(const std::vector<PointSet>& sets);

/// Space file: {point_count, opens, compact_pool, small_ideal, label[, rothberger_pool]}.
/// Implicit spaces are written with their opens enumerated.
json model_to_json(const SpaceModel& model);
SpaceModel model_from_json(const json& j);

using CoverInput = std::variant<CoverFamily, GdeltaCover>;
/// Cover file: {elements[, factors]}; factors[i] presents elements[i].
json cover_to_json(const CoverFamily& fam);
json cover_to_json(const GdeltaCover& cover);
CoverInput cover_from_json(const json& j, int point_count = kMaxPoints);

json move_to_json(const Move& m);
Move move_from_json(const json& j);

json class_set_to_json(const ClassSet& classes);

/// Game file: {kind, g1_params?, space_ref, one_pool, horizon}. space_ref is a path relative to
/// `base_dir` or "catalog:<name>"; an inline "space" object is also accepted. A missing or
/// "default" one_pool means the derived pool of the kind.
json spec_to_json(const GameSpec& spec, const std::string& space_ref);
GameSpec spec_from_json(const json& j, const std::filesystem::path& base_dir = {});

/// Spaces addressable by name: discrete(n), indiscrete(n), chain(n), random(seed,n,k),
/// fortissimo(N,c), refined(seed,n).
SpaceModel catalog_space(const std::string& name);

struct CatalogEntry {
    std::string kind;  // "space", "strategy" or "construction"
    std::string name;
    std::string summary;
};
std::vector<CatalogEntry> catalog();

/// Strategy file: {side, name, table: [{covered, remaining, pending?, move}]} or
/// {side, rule, params}. Derived rules (translate_easy, translate_hard, menger_equivalence,
/// refine_menger) carry their source strategy and source game.
json strategy_to_json(const Strategy& s);
Strategy strategy_from_json(const json& j, const GameSpec& spec, const std::filesystem::path& base_dir = {});

/// Table of a Stationary or Positional strategy over every position reachable against all
/// opposing moves. Throws Error for strategies with longer memory.
StrategyTable tabulate(const GameSpec& spec, const Strategy& s);

/// Strategy file of a translated strategy, reloadable against the dual spec.
json derived_strategy_to_json(const std::string& rule, const Strategy& source, const GameSpec& source_spec,
                              const std::string& space_ref);

/// For a translate_hard output: every reachable history of Two picks in the dual game with One's
/// cover and, per pick, the least source move witnessing it.
json witness_map(const Strategy& source_two, const GameSpec& source_spec, const GameSpec& dual);

json transcript_to_json(const GameSpec& spec, const Transcript& t);

json solve_result_to_json(const SolveResult& r, const std::string& strategy_ref);

json read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const json& j);

}  // namespace selgames::io
