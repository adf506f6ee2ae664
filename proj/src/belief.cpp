#include "navsim/belief.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace navsim {

ParticleBelief init_belief(const GridMap& map, std::size_t n_particles) {
    if (n_particles == 0)
        throw std::invalid_argument("init_belief: n_particles == 0");
    ParticleBelief b;
    b.particles.assign(n_particles, initial_state(map));
    return b;
}

void propagate(ParticleBelief& belief, const GridMap& map,
               const ModelConfig& cfg, Rng& rng) {
    for (AgentState& p : belief.particles) {
        if (!p.active()) continue;
        p = step(map, p, Action::Move, cfg, rng).next_state;
    }
}

void apply_localize(ParticleBelief& belief, const GridMap& map) {
    for (AgentState& p : belief.particles) {
        if (!p.active()) continue;
        p.terminal = classify_localize(map, p.position);
    }
}

void update_with_gps(ParticleBelief& belief, const GridMap& map, Coord obs,
                     const BeliefParams& params, Rng& rng) {
    std::vector<std::size_t> actives;
    std::size_t anchor = map.path.size();
    for (std::size_t i = 0; i < belief.particles.size(); ++i) {
        if (!belief.particles[i].active()) continue;
        actives.push_back(i);
        anchor = std::min(anchor, belief.particles[i].waypoint_index);
    }
    if (actives.empty()) return;

    std::vector<Coord> jitter_cells;
    const int r = params.jitter_radius;
    for (int y = obs.y - r; y <= obs.y + r; ++y) {
        for (int x = obs.x - r; x <= obs.x + r; ++x) {
            const Coord c{x, y};
            if (c == obs || !map.in_bounds(c)) continue;
            if (map.cell(c) == CellKind::Obstacle) continue;
            jitter_cells.push_back(c);
        }
    }

    std::size_t n_jitter = jitter_cells.empty()
        ? 0
        : static_cast<std::size_t>(std::llround(
              params.reinvig_fraction * static_cast<double>(actives.size())));
    n_jitter = std::min(n_jitter, actives.size());

    const std::size_t wpi = nearest_waypoint_index(map, obs, anchor);
    const std::size_t n_exact = actives.size() - n_jitter;
    for (std::size_t k = 0; k < actives.size(); ++k) {
        AgentState& p = belief.particles[actives[k]];
        p.position = k < n_exact ? obs
                                 : jitter_cells[rand_index(rng, jitter_cells.size())];
        p.ref = obs;
        p.waypoint_index = wpi;
    }
}

Coord mean_position(const ParticleBelief& belief) {
    long long sx = 0, sy = 0, n = 0;
    for (const AgentState& p : belief.particles) {
        if (!p.active()) continue;
        sx += p.position.x;
        sy += p.position.y;
        ++n;
    }
    if (n == 0) {
        for (const AgentState& p : belief.particles) {
            sx += p.position.x;
            sy += p.position.y;
            ++n;
        }
    }
    const double inv = 1.0 / static_cast<double>(n);
    return {static_cast<int>(std::llround(static_cast<double>(sx) * inv)),
            static_cast<int>(std::llround(static_cast<double>(sy) * inv))};
}

double failure_fraction(const ParticleBelief& belief) {
    std::size_t failed = 0;
    for (const AgentState& p : belief.particles)
        if (is_failure(p.terminal)) ++failed;
    return static_cast<double>(failed) /
           static_cast<double>(belief.particles.size());
}

std::size_t active_count(const ParticleBelief& belief) {
    std::size_t n = 0;
    for (const AgentState& p : belief.particles)
        if (p.active()) ++n;
    return n;
}

const AgentState& sample_active(const ParticleBelief& belief, Rng& rng) {
    const std::size_t n = active_count(belief);
    if (n == 0) throw std::logic_error("sample_active: no active particles");
    std::size_t k = rand_index(rng, n);
    for (const AgentState& p : belief.particles) {
        if (!p.active()) continue;
        if (k == 0) return p;
        --k;
    }
    throw std::logic_error("sample_active: unreachable");
}

}  // namespace navsim
