#include "navsim/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace navsim {

namespace {

using nlohmann::json;

std::string fmt(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

Outcome outcome_from(Terminal t) {
    switch (t) {
        case Terminal::ReachedGoal: return Outcome::ReachedGoal;
        case Terminal::FailedCollision: return Outcome::FailedCollision;
        case Terminal::FailedOffMap: return Outcome::FailedOffMap;
        case Terminal::FailedSurfaced: return Outcome::FailedSurfaced;
        case Terminal::Active: break;
    }
    return Outcome::Timeout;
}

MetricStat stat_of(const std::vector<double>& values) {
    MetricStat s;
    if (values.empty()) return s;
    double sum = 0.0;
    for (const double v : values) sum += v;
    s.mean = sum / static_cast<double>(values.size());
    if (values.size() < 2) return s;
    double sq = 0.0;
    for (const double v : values) sq += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(sq / static_cast<double>(values.size() - 1));
    return s;
}

json stat_json(const MetricStat& s) {
    return json{{"mean", s.mean}, {"std", s.stddev}};
}

MetricStat stat_from_json(const json& j) {
    return {j.at("mean").get<double>(), j.at("std").get<double>()};
}

}  // namespace

const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::ReachedGoal: return "ReachedGoal";
        case Outcome::FailedCollision: return "FailedCollision";
        case Outcome::FailedOffMap: return "FailedOffMap";
        case Outcome::FailedSurfaced: return "FailedSurfaced";
        case Outcome::Timeout: return "Timeout";
    }
    return "?";
}

bool is_failure(Outcome o) {
    return o == Outcome::FailedCollision || o == Outcome::FailedOffMap ||
           o == Outcome::FailedSurfaced;
}

GridMap resolve_env(const std::string& env) {
    for (const std::string& name : builtin_env_names())
        if (name == env) return builtin_env(env);
    std::ifstream in(env);
    if (!in)
        throw ParseError(ParseErrorKind::UnknownEnvironment,
                         "no built-in environment or readable map file: " + env);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_map(buf.str());
}

std::size_t resolve_workers(std::size_t configured) {
    if (configured > 0) return configured;
    if (const char* env = std::getenv("NAVSIM_WORKERS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1)
            return static_cast<std::size_t>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

RunResult run_episode(const RunConfig& cfg, const GridMap& map,
                      std::uint64_t episode_seed) {
    Rng rng = make_rng(episode_seed);
    AgentState truth = initial_state(map);
    ParticleBelief belief = init_belief(map, cfg.belief.n_particles);
    std::vector<Coord> remaining = map.path;

    const auto* cc = std::get_if<CcPomcpStrategy>(&cfg.strategy);
    double lambda = 0.0;
    double c_hat_t = cc != nullptr ? cc->params.c_hat : 0.0;

    RunResult res;
    res.seed = episode_seed;
    const std::size_t max_steps = 10 * map.path.size();

    for (std::size_t step = 0; step < max_steps; ++step) {
        if (cc != nullptr && cc->params.lambda_reset) lambda = 0.0;
        const PlanContext ctx{map, belief, cfg.model, step, c_hat_t};
        const Action action = next_action(cfg.strategy, ctx, lambda, rng);
        res.executed_actions.push_back(action);
        int cost = 0;

        if (action == Action::Move) {
            const Coord mean = mean_position(belief);
            const auto cmd = llp_next_command(map, remaining, mean);
            if (cmd.has_value()) {
                const StepOutcome out =
                    step_command(map, truth, *cmd, cfg.model, rng);
                truth = out.next_state;
                cost = out.cost;
            }
            // Without a command the true vehicle holds until a localize
            // retargets the controller; the belief still propagates.
            propagate(belief, map, cfg.model, rng);
        } else {
            truth.terminal = classify_localize(map, truth.position);
            cost = is_failure(truth.terminal) ? 1 : 0;
            res.localize_events.push_back(
                {step, map.region_at(truth.position), truth.position});
            apply_localize(belief, map);
            if (truth.terminal == Terminal::Active) {
                update_with_gps(belief, map, truth.position, cfg.belief, rng);
                if (!llp_replan(map, remaining, mean_position(belief))) {
                    // Sealed off; counts as a collision for metrics.
                    truth.terminal = Terminal::FailedCollision;
                    cost = 1;
                }
            }
        }

        res.cumulative_collision_trace.push_back(failure_fraction(belief));
        if (cc != nullptr) {
            c_hat_t = admissible_cost_update(c_hat_t, cost,
                                             cc->params.base.gamma);
            res.budget_trace.push_back(c_hat_t);
        }
        if (!truth.active()) {
            res.steps = step + 1;
            res.outcome = outcome_from(truth.terminal);
            return res;
        }
    }

    res.steps = max_steps;
    res.outcome = Outcome::Timeout;
    return res;
}

std::vector<RunResult> run_episodes(const RunConfig& cfg, const GridMap& map) {
    const std::size_t n = cfg.n_runs;
    std::vector<RunResult> results(n);
    const std::size_t workers =
        std::min(resolve_workers(cfg.workers), std::max<std::size_t>(n, 1));

    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            results[i] = run_episode(cfg, map, cfg.seed + i);
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                results[i] = run_episode(cfg, map, cfg.seed + i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return results;
}

BatchSummary summarize(const RunConfig& cfg, const GridMap& map,
                       const std::vector<RunResult>& results) {
    StrategySummary s;
    s.strategy = cfg.strategy_key;
    s.n_runs = results.size();

    std::vector<double> any, coll, off, surf, cum, total;
    std::map<std::string, std::vector<double>> by_region;
    for (const Region& r : map.regions) by_region[r.name];
    by_region["other"];

    std::size_t goals = 0, timeouts = 0;
    for (const RunResult& r : results) {
        goals += r.outcome == Outcome::ReachedGoal ? 1u : 0u;
        timeouts += r.outcome == Outcome::Timeout ? 1u : 0u;
        any.push_back(is_failure(r.outcome) ? 1.0 : 0.0);
        coll.push_back(r.outcome == Outcome::FailedCollision ? 1.0 : 0.0);
        off.push_back(r.outcome == Outcome::FailedOffMap ? 1.0 : 0.0);
        surf.push_back(r.outcome == Outcome::FailedSurfaced ? 1.0 : 0.0);
        cum.push_back(r.cumulative_collision_trace.empty()
                          ? 0.0
                          : r.cumulative_collision_trace.back());
        total.push_back(static_cast<double>(r.localize_events.size()));

        std::map<std::string, double> counts;
        for (const LocalizeEvent& ev : r.localize_events)
            counts[ev.region.empty() ? "other" : ev.region] += 1.0;
        for (auto& [name, values] : by_region) {
            const auto it = counts.find(name);
            values.push_back(it == counts.end() ? 0.0 : it->second);
        }
    }

    if (!results.empty()) {
        s.goal_rate =
            static_cast<double>(goals) / static_cast<double>(results.size());
        s.timeout_rate =
            static_cast<double>(timeouts) / static_cast<double>(results.size());
    }
    s.failure_any = stat_of(any);
    s.failure_collision = stat_of(coll);
    s.failure_offmap = stat_of(off);
    s.failure_surfaced = stat_of(surf);
    s.cumulative_collision = stat_of(cum);
    s.localize_total = stat_of(total);
    for (const auto& [name, values] : by_region)
        s.localize_by_region.emplace_back(name, stat_of(values));

    BatchSummary summary;
    const auto* cc = std::get_if<CcPomcpStrategy>(&cfg.strategy);
    summary.cost_threshold = cc != nullptr ? cc->params.c_hat : 0.10;
    summary.strategies.push_back(std::move(s));
    return summary;
}

BatchSummary run_batch(const RunConfig& cfg, const GridMap& map) {
    return summarize(cfg, map, run_episodes(cfg, map));
}

std::string to_csv(const BatchSummary& summary) {
    std::string out = "strategy,metric,region,mean,std,cost_threshold\n";
    const std::string threshold = fmt(summary.cost_threshold);
    for (const StrategySummary& s : summary.strategies) {
        auto row = [&](const std::string& metric, const std::string& region,
                       const MetricStat& stat) {
            out += s.strategy + ',' + metric + ',' + region + ',' +
                   fmt(stat.mean) + ',' + fmt(stat.stddev) + ',' + threshold +
                   '\n';
        };
        row("failure_rate", "", s.failure_any);
        row("cumulative_collision", "", s.cumulative_collision);
        for (const auto& [region, stat] : s.localize_by_region)
            row("localize_count", region, stat);
    }
    return out;
}

std::string to_json(const BatchSummary& summary) {
    json j;
    j["cost_threshold"] = summary.cost_threshold;
    j["strategies"] = json::object();
    for (const StrategySummary& s : summary.strategies) {
        json js;
        js["n_runs"] = s.n_runs;
        js["goal_rate"] = s.goal_rate;
        js["timeout_rate"] = s.timeout_rate;
        js["failure_rates"] = {{"any", stat_json(s.failure_any)},
                               {"collision", stat_json(s.failure_collision)},
                               {"offmap", stat_json(s.failure_offmap)},
                               {"surfaced", stat_json(s.failure_surfaced)}};
        js["cumulative_collision"] = stat_json(s.cumulative_collision);
        json regions = json::object();
        for (const auto& [region, stat] : s.localize_by_region)
            regions[region] = stat_json(stat);
        js["localize_counts"] = {{"total", stat_json(s.localize_total)},
                                 {"per_region", regions}};
        j["strategies"][s.strategy] = std::move(js);
    }
    return j.dump(2) + "\n";
}

BatchSummary summary_from_json(const std::string& text) {
    try {
        const json j = json::parse(text);
        BatchSummary summary;
        summary.cost_threshold = j.at("cost_threshold").get<double>();
        for (const auto& [name, js] : j.at("strategies").items()) {
            StrategySummary s;
            s.strategy = name;
            s.n_runs = js.at("n_runs").get<std::size_t>();
            s.goal_rate = js.at("goal_rate").get<double>();
            s.timeout_rate = js.at("timeout_rate").get<double>();
            const json& fr = js.at("failure_rates");
            s.failure_any = stat_from_json(fr.at("any"));
            s.failure_collision = stat_from_json(fr.at("collision"));
            s.failure_offmap = stat_from_json(fr.at("offmap"));
            s.failure_surfaced = stat_from_json(fr.at("surfaced"));
            s.cumulative_collision =
                stat_from_json(js.at("cumulative_collision"));
            const json& lc = js.at("localize_counts");
            s.localize_total = stat_from_json(lc.at("total"));
            for (const auto& [region, stat] : lc.at("per_region").items())
                s.localize_by_region.emplace_back(region,
                                                  stat_from_json(stat));
            summary.strategies.push_back(std::move(s));
        }
        return summary;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("report: bad summary JSON: ") + e.what());
    }
}

BatchSummary merge_summaries(const std::vector<BatchSummary>& parts) {
    BatchSummary merged;
    if (parts.empty()) return merged;
    merged.cost_threshold = parts.front().cost_threshold;
    std::map<std::string, StrategySummary> by_name;
    for (const BatchSummary& part : parts)
        for (const StrategySummary& s : part.strategies) by_name[s.strategy] = s;
    for (auto& [name, s] : by_name) merged.strategies.push_back(std::move(s));
    return merged;
}

}  // namespace navsim
