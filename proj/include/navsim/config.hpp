#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "navsim/belief.hpp"
#include "navsim/planner.hpp"

namespace navsim {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One experiment: an environment, a high-level strategy, and every model and
// solver parameter. Parameters left out of the config file take the defaults
// of the selected strategy.
struct RunConfig {
    std::string env = "ENV-TRAINING";
    std::string strategy_key = "ccpomcp";
    HlpStrategy strategy = CcPomcpStrategy{};
    ModelConfig model;
    BeliefParams belief;
    std::uint64_t seed = 1;
    std::size_t n_runs = 1;
    std::size_t workers = 0;  // 0 resolves to hardware concurrency
};

// Parses `key = value` lines ('#' starts a comment, blank lines ignored).
// Unknown keys, malformed numbers, and out-of-range values raise ConfigError.
// Strategy keys: "static-<k>" | "pomcp" | "ccpomcp".
RunConfig parse_config(const std::string& text);

// parse_config over the file's contents. Raises ConfigError on I/O failure.
RunConfig load_config(const std::string& path);

}  // namespace navsim
