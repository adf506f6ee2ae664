#pragma once

#include <cstddef>
#include <vector>

#include "navsim/grid.hpp"
#include "navsim/model.hpp"
#include "navsim/rng.hpp"

namespace navsim {

struct BeliefParams {
    std::size_t n_particles = 1000;
    double reinvig_fraction = 0.1;  // share of actives jittered on a GPS fix
    int jitter_radius = 1;          // Chebyshev radius of that jitter
};

// Unweighted particle filter over agent states. The particle count is fixed
// for the life of an episode. Particles that hit a terminal state stay in the
// vector unchanged so the failure fraction accumulates monotonically. All
// active particles share one ref and one waypoint_index (dead reckoning is
// deterministic); only position and terminal vary.
struct ParticleBelief {
    std::vector<AgentState> particles;
};

// n_particles identical particles at the start cell. Throws
// std::invalid_argument when n_particles == 0.
ParticleBelief init_belief(const GridMap& map, std::size_t n_particles);

// Advances every active particle by one Move step through the model with
// independent noise draws; no observation filtering. Terminal particles are
// carried unchanged.
void propagate(ParticleBelief& belief, const GridMap& map,
               const ModelConfig& cfg, Rng& rng);

// Reclassifies active particles against surfacing hazards after an executed
// Localize. Particles sitting on a hazard cell become FailedSurfaced.
void apply_localize(ParticleBelief& belief, const GridMap& map);

// Conditions active particles on a GPS fix at obs. Most active slots snap to
// obs; a reinvig_fraction share is scattered uniformly over traversable cells
// within jitter_radius of obs to keep the filter from collapsing. Every
// surviving active gets ref = obs and the nearest not-yet-passed waypoint.
void update_with_gps(ParticleBelief& belief, const GridMap& map, Coord obs,
                     const BeliefParams& params, Rng& rng);

// Rounded mean position of active particles (half away from zero). Falls back
// to all particles when none are active.
Coord mean_position(const ParticleBelief& belief);

// Fraction of all particles in a failure terminal.
double failure_fraction(const ParticleBelief& belief);

std::size_t active_count(const ParticleBelief& belief);

// Uniform draw among active particles. Throws std::logic_error when none.
const AgentState& sample_active(const ParticleBelief& belief, Rng& rng);

}  // namespace navsim
