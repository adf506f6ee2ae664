#include "navsim/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace navsim {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

// Key/value store that tracks consumption so leftovers become errors.
class Kv {
public:
    explicit Kv(const std::string& text) {
        std::istringstream in(text);
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (const auto hash = line.find('#'); hash != std::string::npos)
                line.erase(hash);
            line = trim(line);
            if (line.empty()) continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw ConfigError("config line " + std::to_string(line_no) +
                                  ": expected key = value");
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            if (key.empty() || value.empty())
                throw ConfigError("config line " + std::to_string(line_no) +
                                  ": empty key or value");
            if (!entries_.emplace(key, value).second)
                throw ConfigError("config: duplicate key " + key);
        }
    }

    std::string text(const std::string& key, const std::string& def) {
        const auto it = entries_.find(key);
        if (it == entries_.end()) return def;
        const std::string v = it->second;
        entries_.erase(it);
        return v;
    }

    double number(const std::string& key, double def) {
        const auto it = entries_.find(key);
        if (it == entries_.end()) return def;
        const std::string v = it->second;
        entries_.erase(it);
        char* end = nullptr;
        const double parsed = std::strtod(v.c_str(), &end);
        if (end == v.c_str() || *end != '\0' || !std::isfinite(parsed))
            throw ConfigError("config: bad number for " + key + ": " + v);
        return parsed;
    }

    std::uint64_t unsigned_int(const std::string& key, std::uint64_t def) {
        const double v = number(key, static_cast<double>(def));
        if (v < 0 || v != std::floor(v) || v > 1.8e19)
            throw ConfigError("config: " + key + " must be a non-negative integer");
        return static_cast<std::uint64_t>(v);
    }

    void finish() const {
        if (entries_.empty()) return;
        std::string keys;
        for (const auto& [k, v] : entries_) keys += " " + k;
        throw ConfigError("config: unknown keys:" + keys);
    }

private:
    std::map<std::string, std::string> entries_;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw ConfigError("config: " + what);
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    Kv kv(text);
    RunConfig cfg;
    cfg.env = kv.text("env", "ENV-TRAINING");
    cfg.strategy_key = kv.text("strategy", "ccpomcp");

    const bool is_cc = cfg.strategy_key == "ccpomcp";
    const bool is_pomcp = cfg.strategy_key == "pomcp";
    std::size_t static_k = 0;
    if (!is_cc && !is_pomcp) {
        const std::string prefix = "static-";
        require(cfg.strategy_key.rfind(prefix, 0) == 0,
                "unknown strategy " + cfg.strategy_key);
        char* end = nullptr;
        const std::string suffix = cfg.strategy_key.substr(prefix.size());
        const unsigned long k = std::strtoul(suffix.c_str(), &end, 10);
        require(end != suffix.c_str() && *end == '\0' && k >= 1,
                "static strategy needs a positive k, got " + cfg.strategy_key);
        static_k = k;
    }

    RewardConfig& rw = cfg.model.rewards;
    rw.r_goal = kv.number("r_goal", 100.0);
    rw.r_move = kv.number("r_move", -1.0);
    rw.r_local = kv.number("r_local", is_cc ? -3.0 : -5.0);
    rw.r_fail = kv.number("r_fail", is_cc ? -100.0 : -10.0);

    TransitionNoise& noise = cfg.model.noise;
    noise.p_intended = kv.number("p_intended", 0.94);
    noise.p_overshoot = kv.number("p_overshoot", 0.03);
    noise.p_undershoot = kv.number("p_undershoot", 0.03);
    for (const double p :
         {noise.p_intended, noise.p_overshoot, noise.p_undershoot})
        require(p >= 0.0 && p <= 1.0, "noise probabilities must lie in [0,1]");
    require(std::abs(noise.p_intended + noise.p_overshoot +
                     noise.p_undershoot - 1.0) <= 1e-9,
            "noise probabilities must sum to 1");

    cfg.belief.n_particles =
        static_cast<std::size_t>(kv.unsigned_int("particles", 1000));
    require(cfg.belief.n_particles >= 1, "particles must be >= 1");
    cfg.belief.reinvig_fraction = kv.number("reinvig_fraction", 0.1);
    require(cfg.belief.reinvig_fraction >= 0.0 &&
                cfg.belief.reinvig_fraction <= 1.0,
            "reinvig_fraction must lie in [0,1]");
    cfg.belief.jitter_radius =
        static_cast<int>(kv.unsigned_int("jitter_radius", 1));

    SearchParams search;
    search.gamma = kv.number("gamma", is_cc ? 0.9 : 0.999);
    require(search.gamma > 0.0 && search.gamma < 1.0,
            "gamma must lie in (0,1)");
    search.kappa = kv.number("kappa", is_cc ? 200.0 : 150.0);
    require(search.kappa >= 0.0, "kappa must be >= 0");
    search.n_sims = static_cast<std::size_t>(kv.unsigned_int("n_sims", 2000));
    require(search.n_sims >= 1, "n_sims must be >= 1");
    search.tree_depth =
        static_cast<std::size_t>(kv.unsigned_int("tree_depth", 8));
    require(search.tree_depth >= 1, "tree_depth must be >= 1");
    search.rollout_move_prob = kv.number("rollout_move_prob", 0.9);
    require(search.rollout_move_prob >= 0.0 && search.rollout_move_prob <= 1.0,
            "rollout_move_prob must lie in [0,1]");

    CcSearchParams cc;
    cc.base = search;
    cc.alpha_n = kv.number("alpha_n", 0.001);
    require(cc.alpha_n >= 0.0, "alpha_n must be >= 0");
    cc.c_hat = kv.number("c_hat", 0.10);
    require(cc.c_hat >= 0.0, "c_hat must be >= 0");
    cc.lambda_max = kv.number("lambda_max", 0.0);
    require(cc.lambda_max >= 0.0, "lambda_max must be >= 0");
    const std::string reset = kv.text("lambda_reset", "false");
    require(reset == "true" || reset == "false",
            "lambda_reset must be true or false");
    cc.lambda_reset = reset == "true";

    if (is_cc)
        cfg.strategy = CcPomcpStrategy{cc};
    else if (is_pomcp)
        cfg.strategy = PomcpStrategy{search};
    else
        cfg.strategy = StaticStrategy{static_k};

    cfg.seed = kv.unsigned_int("seed", 1);
    cfg.n_runs = static_cast<std::size_t>(kv.unsigned_int("runs", 1));
    require(cfg.n_runs >= 1, "runs must be >= 1");
    cfg.workers = static_cast<std::size_t>(kv.unsigned_int("workers", 0));

    kv.finish();
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace navsim
