#include "navsim/mcts.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace navsim {

namespace {

constexpr std::size_t kNumActions = 2;
constexpr int kNoChild = -1;

struct Edge {
    std::size_t visits = 0;
    double q_reward = 0.0;
    double q_cost = 0.0;
    int move_child = kNoChild;
    std::unordered_map<Coord, int, CoordHash> gps_children;
};

struct Node {
    std::size_t visits = 0;
    std::array<Edge, kNumActions> edges;
};

struct Return {
    double reward = 0.0;
    double cost = 0.0;
};

struct Search {
    const GridMap& map;
    const SearchParams& params;
    const ModelConfig& cfg;
    double lambda;
    Rng& rng;
    std::deque<Node> nodes;

    int alloc() {
        nodes.emplace_back();
        return static_cast<int>(nodes.size()) - 1;
    }

    std::size_t select(const Node& node) const {
        for (std::size_t a = 0; a < kNumActions; ++a)
            if (node.edges[a].visits == 0) return a;
        const double log_n = std::log(static_cast<double>(node.visits));
        std::size_t best = 0;
        double best_score = 0.0;
        for (std::size_t a = 0; a < kNumActions; ++a) {
            const Edge& e = node.edges[a];
            const double score =
                e.q_reward - lambda * e.q_cost +
                params.kappa *
                    std::sqrt(log_n / static_cast<double>(e.visits));
            if (a == 0 || score > best_score) {
                best = a;
                best_score = score;
            }
        }
        return best;
    }

    Return rollout(AgentState state, std::size_t depth) {
        Return acc;
        double disc = 1.0;
        while (depth < params.tree_depth && state.active()) {
            const Action a = rand01(rng) < params.rollout_move_prob
                                 ? Action::Move
                                 : Action::Localize;
            const StepOutcome out = step(map, state, a, cfg, rng);
            acc.reward += disc * out.reward;
            acc.cost += disc * static_cast<double>(out.cost);
            disc *= params.gamma;
            state = out.next_state;
            ++depth;
        }
        return acc;
    }

    Return simulate(const AgentState& state, int node_id, std::size_t depth) {
        const std::size_t ai = select(nodes[node_id]);
        const Action action = static_cast<Action>(ai);
        const StepOutcome out = step(map, state, action, cfg, rng);

        Return tail;
        if (out.next_state.active() && depth + 1 < params.tree_depth) {
            int* slot;
            if (action == Action::Move) {
                slot = &nodes[node_id].edges[ai].move_child;
            } else {
                slot = &nodes[node_id]
                            .edges[ai]
                            .gps_children.try_emplace(*out.observation.gps,
                                                      kNoChild)
                            .first->second;
            }
            if (*slot == kNoChild) {
                *slot = alloc();
                tail = rollout(out.next_state, depth + 1);
            } else {
                tail = simulate(out.next_state, *slot, depth + 1);
            }
        }

        const Return ret{out.reward + params.gamma * tail.reward,
                         static_cast<double>(out.cost) +
                             params.gamma * tail.cost};
        Node& node = nodes[node_id];
        Edge& edge = node.edges[ai];
        ++node.visits;
        ++edge.visits;
        edge.q_reward += (ret.reward - edge.q_reward) /
                         static_cast<double>(edge.visits);
        edge.q_cost += (ret.cost - edge.q_cost) /
                       static_cast<double>(edge.visits);
        return ret;
    }
};

}  // namespace

MctsReturn mcts_rollout(const GridMap& map, const AgentState& state,
                        const SearchParams& params, const ModelConfig& cfg,
                        Rng& rng) {
    Search search{map, params, cfg, 0.0, rng, {}};
    const Return r = search.rollout(state, 0);
    return {r.reward, r.cost};
}

Action greedy_action(const RootStats& stats, double lambda) {
    bool found = false;
    Action best = Action::Move;
    double best_score = 0.0;
    for (std::size_t a = 0; a < kNumActions; ++a) {
        const EdgeStats& e = stats.edges[a];
        if (e.visits == 0) continue;
        const double score = e.q_reward - lambda * e.q_cost;
        if (!found || score > best_score) {
            found = true;
            best = static_cast<Action>(a);
            best_score = score;
        }
    }
    return best;
}

RootStats mcts_search(const ParticleBelief& belief, const GridMap& map,
                      const SearchParams& params, const ModelConfig& cfg,
                      double lambda, const DualAscent* dual, double* lambda_out,
                      Rng& rng) {
    std::vector<const AgentState*> actives;
    actives.reserve(belief.particles.size());
    for (const AgentState& p : belief.particles)
        if (p.active()) actives.push_back(&p);
    if (actives.empty())
        throw std::logic_error("mcts_search: no active particles");
    if (params.tree_depth == 0)
        throw std::invalid_argument("mcts_search: tree_depth == 0");

    Search search{map, params, cfg, lambda, rng, {}};
    const int root = search.alloc();

    for (std::size_t i = 0; i < params.n_sims; ++i) {
        const AgentState& s = *actives[rand_index(rng, actives.size())];
        search.simulate(s, root, 0);
        if (dual != nullptr) {
            const Node& r = search.nodes[root];
            RootStats snap;
            snap.visits = r.visits;
            for (std::size_t a = 0; a < kNumActions; ++a)
                snap.edges[a] = {r.edges[a].visits, r.edges[a].q_reward,
                                 r.edges[a].q_cost};
            const Action g = greedy_action(snap, search.lambda);
            const double qc = snap.edge(g).q_cost;
            double next = search.lambda + dual->alpha_n * (qc - dual->c_hat);
            if (next < 0.0) next = 0.0;
            if (next > dual->lambda_max) next = dual->lambda_max;
            search.lambda = next;
        }
    }

    if (lambda_out != nullptr) *lambda_out = search.lambda;

    RootStats stats;
    const Node& r = search.nodes[root];
    stats.visits = r.visits;
    for (std::size_t a = 0; a < kNumActions; ++a)
        stats.edges[a] = {r.edges[a].visits, r.edges[a].q_reward,
                          r.edges[a].q_cost};
    return stats;
}

}  // namespace navsim
