#pragma once

// Small maps shared across the test suites. Raw builders skip parse_map so
// grids without a walkable waypoint chain (BFS corpora) stay constructible.

#include <string>
#include <vector>

#include "navsim/belief.hpp"
#include "navsim/grid.hpp"
#include "navsim/model.hpp"
#include "navsim/rng.hpp"

namespace fx {

using navsim::CellKind;
using navsim::Coord;
using navsim::GridMap;

// width = rows[0].size(), height = rows.size(); path is caller-supplied and
// not validated (BFS-only grids may have none).
inline GridMap raw_map(const std::vector<std::string>& rows, Coord start,
                       Coord goal, std::vector<Coord> path = {}) {
    GridMap m;
    m.height = static_cast<int>(rows.size());
    m.width = static_cast<int>(rows.front().size());
    m.cells.resize(static_cast<std::size_t>(m.width) * m.height);
    for (int y = 0; y < m.height; ++y)
        for (int x = 0; x < m.width; ++x) {
            const char ch = rows[y][static_cast<std::size_t>(x)];
            m.cell({x, y}) = ch == '#'   ? CellKind::Obstacle
                             : ch == '~' ? CellKind::SurfaceHazard
                                         : CellKind::Free;
        }
    m.start = start;
    m.goal = goal;
    m.path = std::move(path);
    return m;
}

// 5x5, straight free path along row 2. The deterministic solver-vs-oracle
// instance.
inline GridMap line5() {
    return navsim::parse_map(
        ".....\n"
        ".....\n"
        "S***G\n"
        ".....\n"
        ".....\n");
}

// 3x3, obstacle in the center, path around it: 5 waypoints.
inline const char* ring3_text() {
    return "S**\n"
           ".#*\n"
           "..G\n";
}

inline GridMap ring3() { return navsim::parse_map(ring3_text()); }

// 7x7, obstacle at (4,3), declared path over the top of it. Replan fixture:
// a fix at (3,3) has to bridge around the obstacle to reach (5,3).
inline GridMap bridge7() {
    GridMap m = raw_map(
        {
            ".......",
            ".......",
            ".......",
            "....#..",
            ".......",
            ".......",
            ".......",
        },
        {0, 3}, {6, 3},
        {{0, 3},
         {0, 2},
         {1, 2},
         {2, 2},
         {3, 2},
         {4, 2},
         {5, 2},
         {5, 3},
         {6, 3}});
    m.validate();
    return m;
}

// 5x5, vertical wall at x = 2 with its only gap at (2,3).
inline GridMap wallgap5() {
    return raw_map(
        {
            "..#..",
            "..#..",
            "..#..",
            ".....",
            "..#..",
        },
        {0, 2}, {4, 2});
}

// 1x4 free corridor, no waypoints needed.
inline GridMap corridor4() {
    return raw_map({".", ".", ".", "."}, {0, 0}, {0, 3});
}

// 1x3 vertical path whose middle waypoint sits in a hazard lane. A cadence
// localize on step 1 surfaces inside it.
inline GridMap lane3() { return navsim::parse_map("S\n+\nG\n"); }

// 1x5 vertical path with one hazard waypoint at (0,1); used for beliefs that
// stand inside a lane.
inline GridMap lane5() { return navsim::parse_map("S\n+\n*\n*\nG\n"); }

// 1x5 vertical path hazardous everywhere except the endpoints: localizing is
// certain failure at every interior cell.
inline GridMap alllane5() { return navsim::parse_map("S\n+\n+\n+\nG\n"); }

// Seeded random grid corpus for shortest-path cross-checks: sizes 2..8,
// ~25% obstacles, start/goal forced free, no declared path.
inline std::vector<GridMap> random_corpus(std::uint64_t seed, int count) {
    std::vector<GridMap> out;
    navsim::Rng rng = navsim::make_rng(seed);
    for (int i = 0; i < count; ++i) {
        const int w = 2 + static_cast<int>(navsim::rand_index(rng, 7));
        const int h = 2 + static_cast<int>(navsim::rand_index(rng, 7));
        std::vector<std::string> rows(static_cast<std::size_t>(h),
                                      std::string(static_cast<std::size_t>(w), '.'));
        for (int y = 0; y < h; ++y)
            for (int x = 0; x < w; ++x)
                if (navsim::rand01(rng) < 0.25)
                    rows[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = '#';
        rows[0][0] = '.';
        rows[static_cast<std::size_t>(h - 1)][static_cast<std::size_t>(w - 1)] = '.';
        out.push_back(raw_map(rows, {0, 0}, {w - 1, h - 1}));
    }
    return out;
}

// A belief whose particles all sit at one state.
inline navsim::ParticleBelief belief_at(navsim::AgentState s, std::size_t n) {
    navsim::ParticleBelief b;
    b.particles.assign(n, s);
    return b;
}

}  // namespace fx
