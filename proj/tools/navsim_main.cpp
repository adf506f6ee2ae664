#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "navsim/harness.hpp"

namespace {

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
    if (!out.flush())
        throw std::runtime_error("failed writing output file: " + out_path);
}

std::string render_summary(const navsim::BatchSummary& summary,
                           const std::string& format) {
    return format == "json" ? navsim::to_json(summary)
                            : navsim::to_csv(summary);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"grid-world AUV navigation: when to localize"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "run a batch of episodes");
    std::string config_path, run_out, run_format = "csv";
    std::uint64_t seed_override = 0;
    std::size_t runs_override = 0;
    run->add_option("--config", config_path, "key = value run configuration")
        ->required();
    auto* seed_opt =
        run->add_option("--seed", seed_override, "override config seed");
    auto* runs_opt =
        run->add_option("--runs", runs_override, "override episode count")
            ->check(CLI::PositiveNumber);
    run->add_option("--out", run_out, "output path (default stdout)");
    run->add_option("--format", run_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* envs = app.add_subcommand("envs", "built-in environments");
    envs->require_subcommand(1);
    envs->add_subcommand("list", "list built-in environment names");
    auto* render = envs->add_subcommand("render", "ASCII render of a map");
    std::string env_name;
    render->add_option("name", env_name, "built-in environment name")
        ->required();

    auto* report = app.add_subcommand("report", "combine saved summaries");
    std::vector<std::string> merge_files;
    std::string report_out, report_format = "csv";
    report->add_option("--merge", merge_files, "JSON summary files")
        ->required()
        ->expected(1, -1);
    report->add_option("--out", report_out, "output path (default stdout)");
    report->add_option("--format", report_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            navsim::RunConfig cfg = navsim::load_config(config_path);
            if (seed_opt->count() > 0) cfg.seed = seed_override;
            if (runs_opt->count() > 0) cfg.n_runs = runs_override;
            const navsim::GridMap map = navsim::resolve_env(cfg.env);
            map.validate();
            const navsim::BatchSummary summary = navsim::run_batch(cfg, map);
            write_output(render_summary(summary, run_format), run_out);
        } else if (envs->parsed()) {
            if (render->parsed()) {
                std::cout << navsim::serialize_map(navsim::builtin_env(env_name));
            } else {
                for (const std::string& name : navsim::builtin_env_names())
                    std::cout << name << "\n";
            }
        } else if (report->parsed()) {
            std::vector<navsim::BatchSummary> parts;
            for (const std::string& file : merge_files) {
                std::ifstream in(file);
                if (!in)
                    throw std::runtime_error("cannot open summary file: " + file);
                std::ostringstream buf;
                buf << in.rdbuf();
                parts.push_back(navsim::summary_from_json(buf.str()));
            }
            write_output(
                render_summary(navsim::merge_summaries(parts), report_format),
                report_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
