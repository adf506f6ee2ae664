#pragma once

#include "navsim/mcts.hpp"

namespace navsim {

// One online POMCP planning call from the current belief. Chooses the root
// action with the highest mean discounted return, ties to Move. Returns Move
// without searching when the belief holds no active particles.
Action plan_pomcp(const ParticleBelief& belief, const GridMap& map,
                  const SearchParams& params, const ModelConfig& cfg, Rng& rng);

// Root statistics of the same search, for inspection.
RootStats pomcp_search(const ParticleBelief& belief, const GridMap& map,
                       const SearchParams& params, const ModelConfig& cfg,
                       Rng& rng);

}  // namespace navsim
