#include "navsim/grid.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace navsim {

namespace {

const std::string kNoRegion;

[[noreturn]] void fail(ParseErrorKind kind, const std::string& msg) {
    throw ParseError(kind, msg);
}

}  // namespace

const std::string& GridMap::region_at(Coord c) const {
    for (const auto& r : regions) {
        if (r.contains(c)) return r.name;
    }
    return kNoRegion;
}

void GridMap::validate() const {
    auto bad = [&](const std::string& msg) { fail(ParseErrorKind::InvalidMap, msg); };
    if (width <= 0 || height <= 0) bad("empty grid");
    if (cells.size() != static_cast<std::size_t>(width) * height) bad("cell array size mismatch");
    if (!in_bounds(start) || !in_bounds(goal)) bad("start/goal out of bounds");
    if (cell(start) == CellKind::Obstacle) bad("start on obstacle");
    if (cell(goal) == CellKind::Obstacle) bad("goal on obstacle");
    if (path.empty()) bad("empty path");
    if (path.front() != start) bad("path must begin at start");
    if (path.back() != goal) bad("goal must equal the final waypoint");
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (!in_bounds(path[i])) bad("waypoint out of bounds");
        if (cell(path[i]) == CellKind::Obstacle) bad("waypoint on obstacle");
        if (i > 0 && !adjacent4(path[i - 1], path[i]))
            bad("consecutive waypoints must be 4-adjacent");
    }
    for (const auto& r : regions) {
        if (r.x0 > r.x1 || r.y0 > r.y1 || r.x0 < 0 || r.y0 < 0 || r.x1 >= width ||
            r.y1 >= height)
            bad("region '" + r.name + "' out of bounds");
    }
}

Terminal classify_move(const GridMap& map, Coord pos) {
    if (!map.in_bounds(pos)) return Terminal::FailedOffMap;
    if (map.cell(pos) == CellKind::Obstacle) return Terminal::FailedCollision;
    if (pos == map.goal) return Terminal::ReachedGoal;
    return Terminal::Active;
}

Terminal classify_localize(const GridMap& map, Coord pos) {
    if (map.in_bounds(pos) && map.cell(pos) == CellKind::SurfaceHazard)
        return Terminal::FailedSurfaced;
    return classify_move(map, pos);
}

namespace {

struct RawCell {
    CellKind kind;
    bool waypoint;
    bool start;
    bool goal;
};

RawCell decode(char ch) {
    switch (ch) {
        case '.': return {CellKind::Free, false, false, false};
        case '#': return {CellKind::Obstacle, false, false, false};
        case '~': return {CellKind::SurfaceHazard, false, false, false};
        case 'S': return {CellKind::Free, true, true, false};
        case 'G': return {CellKind::Free, true, false, true};
        case '*': return {CellKind::Free, true, false, false};
        case '+': return {CellKind::SurfaceHazard, true, false, false};
        default:
            fail(ParseErrorKind::UnknownCell,
                 std::string("unknown map character '") + ch + "'");
    }
}

char encode(const GridMap& m, Coord c, const std::unordered_set<std::size_t>& waypoint_cells) {
    if (c == m.start) return 'S';
    if (c == m.goal) return 'G';
    std::size_t idx = static_cast<std::size_t>(c.y) * m.width + c.x;
    bool wp = waypoint_cells.count(idx) > 0;
    switch (m.cell(c)) {
        case CellKind::Free: return wp ? '*' : '.';
        case CellKind::Obstacle: return '#';
        case CellKind::SurfaceHazard: return wp ? '+' : '~';
    }
    return '.';
}

// Orders the unordered waypoint set by walking 4-adjacency from start to
// goal. More than one unvisited neighbor at any step is ambiguous.
std::vector<Coord> walk_path(const GridMap& m, const std::vector<Coord>& marked) {
    std::unordered_set<std::size_t> pending;
    for (Coord c : marked)
        pending.insert(static_cast<std::size_t>(c.y) * m.width + c.x);

    std::vector<Coord> ordered;
    ordered.reserve(marked.size());
    Coord cur = m.start;
    pending.erase(static_cast<std::size_t>(cur.y) * m.width + cur.x);
    ordered.push_back(cur);

    const Coord steps[4] = {{0, -1}, {0, 1}, {-1, 0}, {1, 0}};
    while (!(cur == m.goal)) {
        Coord next{};
        int found = 0;
        for (Coord d : steps) {
            Coord nb{cur.x + d.x, cur.y + d.y};
            if (!m.in_bounds(nb)) continue;
            if (pending.count(static_cast<std::size_t>(nb.y) * m.width + nb.x)) {
                ++found;
                next = nb;
            }
        }
        if (found == 0)
            fail(ParseErrorKind::BrokenPath,
                 "waypoint chain does not reach the goal (stuck at " +
                     std::to_string(cur.x) + "," + std::to_string(cur.y) + ")");
        if (found > 1)
            fail(ParseErrorKind::AmbiguousPath,
                 "waypoint chain branches at " + std::to_string(cur.x) + "," +
                     std::to_string(cur.y));
        pending.erase(static_cast<std::size_t>(next.y) * m.width + next.x);
        ordered.push_back(next);
        cur = next;
    }
    if (!pending.empty())
        fail(ParseErrorKind::BrokenPath, "stray waypoints not connected to the path");
    return ordered;
}

}  // namespace

GridMap parse_map(const std::string& text) {
    std::vector<std::string> grid_lines;
    std::vector<Region> regions;

    std::istringstream in(text);
    std::string line;
    bool in_grid = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!in_grid) {
            if (line.empty()) continue;
            if (line.rfind("region ", 0) == 0) {
                std::istringstream ls(line);
                std::string kw;
                Region r;
                ls >> kw >> r.name >> r.x0 >> r.y0 >> r.x1 >> r.y1;
                if (ls.fail() || r.name.empty())
                    fail(ParseErrorKind::BadRegion, "malformed region line: " + line);
                regions.push_back(std::move(r));
                continue;
            }
            in_grid = true;
        }
        if (in_grid) {
            if (line.empty()) break;  // blank line ends the grid
            grid_lines.push_back(line);
        }
    }

    if (grid_lines.empty())
        fail(ParseErrorKind::MissingGrid, "map text contains no grid");

    GridMap m;
    m.height = static_cast<int>(grid_lines.size());
    m.width = static_cast<int>(grid_lines.front().size());
    m.cells.resize(static_cast<std::size_t>(m.width) * m.height);
    m.regions = std::move(regions);

    bool have_start = false, have_goal = false;
    std::vector<Coord> marked;
    for (int y = 0; y < m.height; ++y) {
        const std::string& row = grid_lines[y];
        if (static_cast<int>(row.size()) != m.width)
            fail(ParseErrorKind::NonRectangular,
                 "row " + std::to_string(y) + " has length " +
                     std::to_string(row.size()) + ", expected " +
                     std::to_string(m.width));
        for (int x = 0; x < m.width; ++x) {
            RawCell rc = decode(row[x]);
            Coord c{x, y};
            m.cell(c) = rc.kind;
            if (rc.start) {
                if (have_start) fail(ParseErrorKind::DuplicateStart, "more than one 'S'");
                have_start = true;
                m.start = c;
            }
            if (rc.goal) {
                if (have_goal) fail(ParseErrorKind::DuplicateGoal, "more than one 'G'");
                have_goal = true;
                m.goal = c;
            }
            if (rc.waypoint) marked.push_back(c);
        }
    }
    if (!have_start) fail(ParseErrorKind::MissingStart, "map has no start cell 'S'");
    if (!have_goal) fail(ParseErrorKind::MissingGoal, "map has no goal cell 'G'");

    m.path = walk_path(m, marked);
    m.validate();
    return m;
}

std::string serialize_map(const GridMap& map) {
    std::ostringstream out;
    for (const auto& r : map.regions)
        out << "region " << r.name << ' ' << r.x0 << ' ' << r.y0 << ' ' << r.x1
            << ' ' << r.y1 << '\n';
    std::unordered_set<std::size_t> waypoint_cells;
    for (Coord c : map.path)
        waypoint_cells.insert(static_cast<std::size_t>(c.y) * map.width + c.x);
    for (int y = 0; y < map.height; ++y) {
        for (int x = 0; x < map.width; ++x)
            out << encode(map, Coord{x, y}, waypoint_cells);
        out << '\n';
    }
    return out.str();
}

namespace {

void fill_rect(GridMap& m, CellKind kind, int x0, int y0, int x1, int y1) {
    for (int y = y0; y <= y1; ++y)
        for (int x = x0; x <= x1; ++x) m.cell(Coord{x, y}) = kind;
}

// Expands an axis-aligned polyline into unit-step waypoints.
std::vector<Coord> expand_polyline(const std::vector<Coord>& corners) {
    std::vector<Coord> path;
    path.push_back(corners.front());
    for (std::size_t i = 1; i < corners.size(); ++i) {
        Coord a = corners[i - 1], b = corners[i];
        int dx = (b.x > a.x) - (b.x < a.x);
        int dy = (b.y > a.y) - (b.y < a.y);
        Coord cur = a;
        while (!(cur == b)) {
            cur = Coord{cur.x + dx, cur.y + dy};
            path.push_back(cur);
        }
    }
    return path;
}

GridMap blank_map(int w, int h) {
    GridMap m;
    m.width = w;
    m.height = h;
    m.cells.assign(static_cast<std::size_t>(w) * h, CellKind::Free);
    return m;
}

// 30x30 training world: the path descends column 2 through two horizontal
// shipping lanes, turns at (2,27), and runs to the goal along row 27 past a
// large obstacle block that punishes unlocalized row drift.
GridMap make_env_training() {
    GridMap m = blank_map(30, 30);
    fill_rect(m, CellKind::SurfaceHazard, 0, 7, 11, 9);    // lane 1
    fill_rect(m, CellKind::SurfaceHazard, 0, 14, 11, 16);  // lane 2
    fill_rect(m, CellKind::Obstacle, 8, 22, 14, 26);       // block by the corner leg
    fill_rect(m, CellKind::Obstacle, 16, 6, 23, 14);       // block right of the lanes
    m.start = {2, 2};
    m.goal = {27, 27};
    m.path = expand_polyline({{2, 2}, {2, 27}, {27, 27}});
    m.regions = {
        {"before-lane-1", 0, 0, 29, 6},
        {"lane-1", 0, 7, 29, 9},
        {"between-lanes", 0, 10, 29, 13},
        {"lane-2", 0, 14, 29, 16},
        {"after-lane-2", 0, 17, 29, 29},
    };
    return m;
}

// 26x16 corridor world: obstacle walls flank the path's row, and shipping
// lanes cover 14 consecutive path cells, then a 2-cell gap, then 4 more.
GridMap make_env_tunnel() {
    GridMap m = blank_map(26, 16);
    fill_rect(m, CellKind::Obstacle, 3, 7, 22, 7);          // north wall
    fill_rect(m, CellKind::Obstacle, 3, 9, 22, 9);          // south wall
    fill_rect(m, CellKind::SurfaceHazard, 3, 8, 16, 8);     // lane A (14 cells)
    fill_rect(m, CellKind::SurfaceHazard, 19, 8, 22, 8);    // lane B (4 cells)
    m.start = {1, 13};
    m.goal = {24, 8};
    m.path = expand_polyline({{1, 13}, {1, 8}, {24, 8}});
    m.regions = {
        {"approach", 0, 0, 2, 15},
        {"lane-a", 3, 7, 16, 9},
        {"gap", 17, 7, 18, 9},
        {"lane-b", 19, 7, 22, 9},
        {"exit", 23, 0, 25, 15},
    };
    return m;
}

// 40x24 coastline world: land masses north of a long shoreline path that
// ends inside a bay. No shipping lanes; risk comes from land near the path.
GridMap make_env_stt() {
    GridMap m = blank_map(40, 24);
    fill_rect(m, CellKind::Obstacle, 0, 0, 39, 7);    // northern landmass
    fill_rect(m, CellKind::Obstacle, 4, 8, 10, 10);   // western headland
    fill_rect(m, CellKind::Obstacle, 16, 8, 25, 11);  // airport peninsula
    fill_rect(m, CellKind::Obstacle, 34, 8, 39, 12);  // eastern point
    m.start = {3, 12};
    m.goal = {31, 9};
    m.path = expand_polyline(
        {{3, 12}, {13, 12}, {13, 13}, {27, 13}, {27, 9}, {31, 9}});
    m.regions = {
        {"marine-center", 0, 11, 8, 15},
        {"coast-west", 9, 11, 14, 15},
        {"airport-south", 15, 12, 27, 15},
        {"lindbergh-bay", 26, 8, 33, 11},
    };
    return m;
}

}  // namespace

GridMap builtin_env(const std::string& name) {
    GridMap m;
    if (name == "ENV-TRAINING") m = make_env_training();
    else if (name == "ENV-TUNNEL") m = make_env_tunnel();
    else if (name == "ENV-STT") m = make_env_stt();
    else
        fail(ParseErrorKind::UnknownEnvironment, "unknown environment: " + name);
    m.validate();
    return m;
}

std::vector<std::string> builtin_env_names() {
    return {"ENV-TRAINING", "ENV-TUNNEL", "ENV-STT"};
}

const char* to_string(Terminal t) {
    switch (t) {
        case Terminal::Active: return "Active";
        case Terminal::ReachedGoal: return "ReachedGoal";
        case Terminal::FailedCollision: return "FailedCollision";
        case Terminal::FailedOffMap: return "FailedOffMap";
        case Terminal::FailedSurfaced: return "FailedSurfaced";
    }
    return "?";
}

const char* to_string(CellKind k) {
    switch (k) {
        case CellKind::Free: return "Free";
        case CellKind::Obstacle: return "Obstacle";
        case CellKind::SurfaceHazard: return "SurfaceHazard";
    }
    return "?";
}

}  // namespace navsim
