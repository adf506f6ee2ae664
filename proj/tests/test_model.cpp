#include <stdexcept>

#include "doctest.h"
#include "fixtures.hpp"
#include "navsim/model.hpp"

using namespace navsim;

namespace {

ModelConfig noise_free() {
    ModelConfig cfg;
    cfg.noise = TransitionNoise::none();
    return cfg;
}

AgentState at(Coord pos, Coord ref, std::size_t wpi) {
    return AgentState{pos, ref, wpi, Terminal::Active};
}

}  // namespace

TEST_CASE("intended_command steps along the dominant axis, ties to x") {
    CHECK(intended_command({2, 2}, {2, 5}) == MotionCommand::Down);
    CHECK(intended_command({2, 2}, {4, 3}) == MotionCommand::Right);
    CHECK(intended_command({2, 2}, {3, 3}) == MotionCommand::Right);
    CHECK(intended_command({2, 2}, {2, 0}) == MotionCommand::Up);
    CHECK(intended_command({2, 2}, {0, 2}) == MotionCommand::Left);
    CHECK(intended_command({5, 5}, {4, 9}) == MotionCommand::Down);
    CHECK_THROWS_AS(intended_command({3, 3}, {3, 3}), std::invalid_argument);
}

TEST_CASE("move landing frequencies match the transition noise") {
    // 9x9 free map, chase target to the right of the agent
    const GridMap m = fx::raw_map(
        std::vector<std::string>(9, "........."), {5, 5}, {6, 6},
        {{5, 5}, {6, 5}, {6, 6}});
    const AgentState s = at({5, 5}, {5, 5}, 0);
    ModelConfig cfg;
    Rng rng = make_rng(20240601);

    const int n = 1'000'000;
    int intended = 0, overshoot = 0, stayed = 0;
    for (int i = 0; i < n; ++i) {
        const Coord p = step(m, s, Action::Move, cfg, rng).next_state.position;
        if (p == Coord{6, 5}) ++intended;
        else if (p == Coord{7, 5}) ++overshoot;
        else if (p == Coord{5, 5}) ++stayed;
        else FAIL("impossible landing");
    }
    CHECK(intended + overshoot + stayed == n);
    CHECK(std::abs(intended / double(n) - 0.94) < 0.005);
    CHECK(std::abs(overshoot / double(n) - 0.03) < 0.005);
    CHECK(std::abs(stayed / double(n) - 0.03) < 0.005);
}

TEST_CASE("localizing inside a hazard lane is fatal and priced as such") {
    const GridMap m = fx::lane5();
    ModelConfig cfg;  // defaults carry r_local = -3, r_fail = -100
    Rng rng = make_rng(1);
    const StepOutcome out = step(m, at({0, 1}, {0, 1}, 1), Action::Localize,
                                 cfg, rng);
    CHECK(out.next_state.terminal == Terminal::FailedSurfaced);
    CHECK(out.reward == doctest::Approx(-103.0));
    CHECK(out.cost == 1);
    CHECK(!out.observation.gps.has_value());
    CHECK(out.next_state.position == Coord{0, 1});
}

TEST_CASE("moving onto the goal pays the goal bonus net of the step cost") {
    const GridMap m = fx::line5();
    ModelConfig cfg = noise_free();
    cfg.rewards = RewardConfig{100.0, -1.0, -5.0, -10.0};
    Rng rng = make_rng(1);
    const StepOutcome out = step(m, at({3, 2}, {3, 2}, 4), Action::Move, cfg,
                                 rng);
    CHECK(out.next_state.terminal == Terminal::ReachedGoal);
    CHECK(out.next_state.position == Coord{4, 2});
    CHECK(out.reward == doctest::Approx(99.0));
    CHECK(out.cost == 0);
}

TEST_CASE("every reward is the sum of exactly the applicable components") {
    const RewardConfig rw{100.0, -1.0, -3.0, -100.0};

    // Move outcomes
    {
        const GridMap m = fx::line5();
        ModelConfig cfg = noise_free();
        cfg.rewards = rw;
        Rng rng = make_rng(7);
        // Active landing
        StepOutcome active = step(m, at({1, 2}, {1, 2}, 2), Action::Move, cfg, rng);
        CHECK(active.next_state.terminal == Terminal::Active);
        CHECK(active.reward == doctest::Approx(rw.r_move));
        CHECK(active.cost == 0);
        // goal landing
        StepOutcome goal = step(m, at({3, 2}, {3, 2}, 4), Action::Move, cfg, rng);
        CHECK(goal.reward == doctest::Approx(rw.r_move + rw.r_goal));
        CHECK(goal.cost == 0);
        // off-map landing via guaranteed overshoot from the last interior cell
        ModelConfig over = cfg;
        over.noise = TransitionNoise{0.0, 1.0, 0.0};
        StepOutcome off = step(m, at({3, 2}, {3, 2}, 4), Action::Move, over, rng);
        CHECK(off.next_state.terminal == Terminal::FailedOffMap);
        CHECK(off.reward == doctest::Approx(rw.r_move + rw.r_fail));
        CHECK(off.cost == 1);
    }
    {
        // collision landing
        const GridMap m = fx::raw_map({"..#.."}, {0, 0}, {4, 0});
        ModelConfig cfg = noise_free();
        cfg.rewards = rw;
        Rng rng = make_rng(7);
        StepOutcome hit = step_command(m, at({1, 0}, {1, 0}, 0),
                                       MotionCommand::Right, cfg, rng);
        CHECK(hit.next_state.terminal == Terminal::FailedCollision);
        CHECK(hit.reward == doctest::Approx(rw.r_move + rw.r_fail));
        CHECK(hit.cost == 1);
    }

    // Localize outcomes
    {
        const GridMap m = fx::lane5();
        ModelConfig cfg = noise_free();
        cfg.rewards = rw;
        Rng rng = make_rng(7);
        StepOutcome ok = step(m, at({0, 2}, {0, 0}, 0), Action::Localize, cfg, rng);
        CHECK(ok.next_state.terminal == Terminal::Active);
        CHECK(ok.reward == doctest::Approx(rw.r_local));
        CHECK(ok.cost == 0);
        StepOutcome lane = step(m, at({0, 1}, {0, 1}, 1), Action::Localize, cfg, rng);
        CHECK(lane.reward == doctest::Approx(rw.r_local + rw.r_fail));
        CHECK(lane.cost == 1);
        // positions that are already inside an obstacle or off the map can
        // only be reached by constructing the state directly, but the price
        // is still the localize penalty plus the failure penalty
        const GridMap wall = fx::raw_map({"S#G"}, {0, 0}, {2, 0});
        StepOutcome crush = step(wall, at({1, 0}, {1, 0}, 0), Action::Localize,
                                 cfg, rng);
        CHECK(crush.next_state.terminal == Terminal::FailedCollision);
        CHECK(crush.reward == doctest::Approx(rw.r_local + rw.r_fail));
        CHECK(crush.cost == 1);
        StepOutcome lost = step(wall, at({9, 9}, {9, 9}, 0), Action::Localize,
                                cfg, rng);
        CHECK(lost.next_state.terminal == Terminal::FailedOffMap);
        CHECK(lost.reward == doctest::Approx(rw.r_local + rw.r_fail));
        CHECK(lost.cost == 1);
    }
}

TEST_CASE("cost is 1 exactly on transitions into failure") {
    const GridMap m = fx::lane5();
    ModelConfig cfg = noise_free();
    Rng rng = make_rng(3);
    for (int y = 0; y < 5; ++y) {
        const AgentState s = at({0, y}, {0, y}, static_cast<std::size_t>(y));
        const StepOutcome out = step(m, s, Action::Localize, cfg, rng);
        CHECK((out.cost == 1) == is_failure(out.next_state.terminal));
    }
}

TEST_CASE("localize holds position and resynchronizes dead reckoning") {
    const GridMap m = fx::line5();
    ModelConfig cfg;
    Rng rng = make_rng(11);
    // drifted: believes it is at (0,2) but truly sits at (2,2)
    const StepOutcome out = step(m, at({2, 2}, {0, 2}, 0), Action::Localize,
                                 cfg, rng);
    CHECK(out.next_state.position == Coord{2, 2});
    CHECK(out.next_state.ref == Coord{2, 2});
    CHECK(out.next_state.waypoint_index == 2);
    CHECK(out.next_state.terminal == Terminal::Active);
    REQUIRE(out.observation.gps.has_value());
    CHECK(*out.observation.gps == Coord{2, 2});
    CHECK(out.reward == doctest::Approx(cfg.rewards.r_local));
}

TEST_CASE("move yields no observation") {
    const GridMap m = fx::line5();
    ModelConfig cfg = noise_free();
    Rng rng = make_rng(2);
    const StepOutcome out = step(m, at({1, 2}, {1, 2}, 1), Action::Move, cfg, rng);
    CHECK(out.observation == Observation::none());
}

TEST_CASE("an exhausted chase holds in place without consuming randomness") {
    const GridMap m = fx::line5();
    ModelConfig cfg;
    Rng rng = make_rng(5);
    Rng before = rng;
    // ref already at the goal, so every waypoint is consumed
    const StepOutcome out = step(m, at({2, 2}, {4, 2}, 4), Action::Move, cfg,
                                 rng);
    CHECK(out.next_state.position == Coord{2, 2});
    CHECK(out.next_state.terminal == Terminal::Active);
    CHECK(out.next_state.waypoint_index == m.path.size());
    CHECK(out.reward == doctest::Approx(cfg.rewards.r_move));
    CHECK((rng == before));  // no draw happened
}

TEST_CASE("overshoot stops at the first blocking cell") {
    ModelConfig cfg = noise_free();
    cfg.noise = TransitionNoise{0.0, 1.0, 0.0};  // always overshoot
    Rng rng = make_rng(9);

    // obstacle directly ahead: the vehicle collides there, not beyond it
    const GridMap near = fx::raw_map({".#..."}, {0, 0}, {4, 0});
    StepOutcome hit = step_command(near, at({0, 0}, {0, 0}, 0),
                                   MotionCommand::Right, cfg, rng);
    CHECK(hit.next_state.position == Coord{1, 0});
    CHECK(hit.next_state.terminal == Terminal::FailedCollision);

    // obstacle two cells ahead: the overshoot lands in it
    const GridMap far = fx::raw_map({"..#.."}, {0, 0}, {4, 0});
    StepOutcome land = step_command(far, at({0, 0}, {0, 0}, 0),
                                    MotionCommand::Right, cfg, rng);
    CHECK(land.next_state.position == Coord{2, 0});
    CHECK(land.next_state.terminal == Terminal::FailedCollision);

    // leaving the map stops at the first off-map cell
    StepOutcome off = step_command(far, at({0, 0}, {0, 0}, 0),
                                   MotionCommand::Left, cfg, rng);
    CHECK(off.next_state.position == Coord{-1, 0});
    CHECK(off.next_state.terminal == Terminal::FailedOffMap);
}

TEST_CASE("stepping a terminal state is a logic error") {
    const GridMap m = fx::line5();
    ModelConfig cfg;
    Rng rng = make_rng(4);
    AgentState dead = at({1, 2}, {1, 2}, 1);
    dead.terminal = Terminal::FailedCollision;
    CHECK_THROWS_AS(step(m, dead, Action::Move, cfg, rng), std::logic_error);
    CHECK_THROWS_AS(step_command(m, dead, MotionCommand::Up, cfg, rng),
                    std::logic_error);
}

TEST_CASE("nearest_waypoint_index anchors at from_index and ties low") {
    const GridMap ring = fx::ring3();
    // equidistant from indices 1 and 3: the earlier one wins
    CHECK(nearest_waypoint_index(ring, {1, 1}, 0) == 1);
    // anchoring past the tie reconsiders only later waypoints
    CHECK(nearest_waypoint_index(ring, {1, 1}, 2) == 3);
    // from_index beyond the path clamps to the last waypoint
    CHECK(nearest_waypoint_index(ring, {0, 0}, 99) == ring.path.size() - 1);

    const GridMap line = fx::line5();
    CHECK(nearest_waypoint_index(line, {2, 1}, 0) == 2);
    CHECK(nearest_waypoint_index(line, {2, 1}, 3) == 3);
}

TEST_CASE("step_command leaves dead reckoning untouched") {
    const GridMap m = fx::line5();
    ModelConfig cfg = noise_free();
    Rng rng = make_rng(8);
    const StepOutcome out = step_command(m, at({1, 2}, {0, 2}, 1),
                                         MotionCommand::Right, cfg, rng);
    CHECK(out.next_state.position == Coord{2, 2});
    CHECK(out.next_state.ref == Coord{0, 2});
    CHECK(out.next_state.waypoint_index == 1);
}
