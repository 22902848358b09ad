#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "enriched/graph_spec.hpp"

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

unsigned default_jobs() {
    if (const char* env = std::getenv("ENRICHED_JOBS")) {
        int n = std::atoi(env);
        if (n > 0) return static_cast<unsigned>(n);
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"enriched and compactified structures on dual graphs"};
    app.require_subcommand(1);

    std::string file, kind = "es", point, gamma_csv;
    unsigned q = 2, jobs = default_jobs(), seed = 0;
    bool enumerate_points = false;

    auto* analyze = app.add_subcommand("analyze", "summarize a graph document");
    analyze->add_option("file", file, "input JSON ('-' for stdin)")->required();

    auto* count = app.add_subcommand("count", "count structures at a point");
    count->add_option("file", file, "input JSON ('-' for stdin)")->required();
    count->add_option("--kind", kind, "es, ces, or gamma-es");
    count->add_option("--q", q, "field order (prime)")->required();
    count->add_option("--point", point, "named point from the document");
    count->add_option("--gamma", gamma_csv, "comma-separated chart edges (gamma-es)");
    count->add_flag("--enumerate", enumerate_points, "list the structures");
    count->add_option("--jobs", jobs, "worker threads");

    auto* atlas = app.add_subcommand("atlas", "chart-by-point atlas table");
    atlas->add_option("file", file, "input JSON ('-' for stdin)")->required();
    atlas->add_option("--q", q, "field order (prime)")->required();

    auto* selftest = app.add_subcommand("selftest", "run built-in consistency checks");
    selftest->add_option("--seed", seed, "random seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (selftest->parsed()) {
            std::cout << enriched::render_selftest(seed);
            return 0;
        }
        enriched::ParsedSpec spec = enriched::parse_graph_spec(slurp(file));
        if (analyze->parsed()) {
            std::cout << enriched::render_analyze(spec);
        } else if (count->parsed()) {
            std::vector<std::string> gamma;
            std::stringstream ss(gamma_csv);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty()) gamma.push_back(item);
            std::cout << enriched::render_count(spec, kind, q, point, gamma,
                                                enumerate_points, jobs);
        } else if (atlas->parsed()) {
            std::cout << enriched::render_atlas(spec, q);
        }
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return 3;
    }
    return 0;
}
