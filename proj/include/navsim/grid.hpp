#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace navsim {

// Grid coordinate: x = column, y = row, origin at the top-left, y grows
// downward (matches row-major text maps).
struct Coord {
    int x = 0;
    int y = 0;

    bool operator==(const Coord&) const = default;
};

struct CoordHash {
    std::size_t operator()(const Coord& c) const {
        return std::hash<std::uint64_t>{}(
            (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.x)) << 32) |
            static_cast<std::uint32_t>(c.y));
    }
};

inline int manhattan(Coord a, Coord b) {
    return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

inline bool adjacent4(Coord a, Coord b) { return manhattan(a, b) == 1; }

enum class CellKind : std::uint8_t {
    Free,
    Obstacle,
    // Traversable underwater, fatal to surface (localize) in.
    SurfaceHazard,
};

// Named rectangle used to bucket metrics by map area. Bounds inclusive.
struct Region {
    std::string name;
    int x0 = 0, y0 = 0, x1 = 0, y1 = 0;

    bool contains(Coord c) const {
        return c.x >= x0 && c.x <= x1 && c.y >= y0 && c.y <= y1;
    }
    bool operator==(const Region&) const = default;
};

enum class ParseErrorKind {
    MissingGrid,
    NonRectangular,
    UnknownCell,
    MissingStart,
    DuplicateStart,
    MissingGoal,
    DuplicateGoal,
    AmbiguousPath,
    BrokenPath,
    BadRegion,
    InvalidMap,
    UnknownEnvironment,
};

struct ParseError : std::runtime_error {
    ParseErrorKind kind;
    ParseError(ParseErrorKind k, const std::string& msg)
        : std::runtime_error(msg), kind(k) {}
};

// Immutable after construction; safe to share across concurrent episodes.
struct GridMap {
    int width = 0;
    int height = 0;
    std::vector<CellKind> cells;  // row-major, size = width * height
    Coord start;
    Coord goal;
    std::vector<Coord> path;  // ordered waypoints, start..goal, 4-adjacent
    std::vector<Region> regions;

    bool in_bounds(Coord c) const {
        return c.x >= 0 && c.x < width && c.y >= 0 && c.y < height;
    }
    CellKind cell(Coord c) const {
        return cells[static_cast<std::size_t>(c.y) * width + c.x];
    }
    CellKind& cell(Coord c) {
        return cells[static_cast<std::size_t>(c.y) * width + c.x];
    }

    // First declared region containing c, or "" if none.
    const std::string& region_at(Coord c) const;

    // Throws ParseError{InvalidMap} if any structural invariant is violated.
    void validate() const;

    bool operator==(const GridMap&) const = default;
};

// Terminal classification of an agent configuration.
enum class Terminal : std::uint8_t {
    Active,
    ReachedGoal,
    FailedCollision,
    FailedOffMap,
    FailedSurfaced,
};

inline bool is_failure(Terminal t) {
    return t == Terminal::FailedCollision || t == Terminal::FailedOffMap ||
           t == Terminal::FailedSurfaced;
}

// Movement never dies on a hazard cell (traversal happens underwater).
Terminal classify_move(const GridMap& map, Coord pos);

// Surfacing on a SurfaceHazard is fatal; otherwise as classify_move.
Terminal classify_localize(const GridMap& map, Coord pos);

// Line-oriented ASCII map format. Optional `region <name> <x0> <y0> <x1> <y1>`
// header lines, then one char per cell:
//   '.' Free   '#' Obstacle   '~' SurfaceHazard
//   'S' start  'G' goal       '*' waypoint on Free   '+' waypoint on hazard
// Waypoint order is recovered by walking 4-adjacency from S to G; a branching
// chain is an AmbiguousPath error.
GridMap parse_map(const std::string& text);
std::string serialize_map(const GridMap& map);

// Built-in environments: ENV-TRAINING, ENV-TUNNEL, ENV-STT.
GridMap builtin_env(const std::string& name);
std::vector<std::string> builtin_env_names();

const char* to_string(Terminal t);
const char* to_string(CellKind k);

}  // namespace navsim
