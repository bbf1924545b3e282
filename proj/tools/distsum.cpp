// Command-line front end: palette, order, color, verify, exact, gen, experiment.
// Exit codes: 0 pass, 1 verification failure, 2 usage or input error.

#include <distsum/distsum.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace distsum;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError(0, "cannot write " + path);
    out << text;
}

int cmd_palette(std::uint64_t delta, std::uint64_t r) {
    const auto p = compute_params(delta, r);
    const auto check = check_L_property(p);
    std::ostringstream intervals;
    for (std::size_t i = 0; i < p.L.size(); ++i)
        intervals << (i ? ";" : "") << '[' << to_string(p.L[i].lo) << ',' << to_string(p.L[i].hi) << ']';
    std::cout << "palette delta=" << delta << " r=" << r << " k=" << to_string(p.k) << " K=" << to_string(p.K)
              << " L_size=" << to_string(p.L_size()) << " L=" << intervals.str()
              << " palette_max=" << to_string(p.palette_max) << " four_sets=" << (check.holds ? "disjoint" : "overlapping");
    if (check.witness) std::cout << " witness=" << to_string(check.witness->first) << ',' << to_string(check.witness->second);
    std::cout << '\n' << '\n';
    auto line = [](const std::string& key, const std::string& value) {
        std::cout << "  " << std::left << std::setw(14) << key << value << '\n';
    };
    line("Delta", std::to_string(delta));
    line("r", std::to_string(r));
    line("k", to_string(p.k));
    line("K", to_string(p.K));
    line("|L|", to_string(p.L_size()));
    for (std::size_t i = 0; i < p.L.size(); ++i)
        line(i == 0 ? "L intervals" : "", "[" + to_string(p.L[i].lo) + ", " + to_string(p.L[i].hi) + "]");
    line("palette_max", to_string(p.palette_max));
    line("4-sets mod K", check.holds ? "disjoint" : "overlapping");
    return check.holds ? kPass : kFail;
}

int cmd_verify(const std::string& input, const std::string& colouring, std::uint32_t r, std::optional<Colour> bound) {
    const Graph g = parse_graph(input);
    const TotalColouring c = to_colouring(g, parse_colouring(colouring));
    const auto rep = verify(g, c, r, bound);
    std::cout << "verify " << (rep.pass() ? "pass" : "fail") << " proper_vertices=" << rep.proper_vertices
              << " proper_edges=" << rep.proper_edges << " proper_incidence=" << rep.proper_incidence
              << " r_distant=" << rep.r_distant_ok << " bound=" << rep.bound_ok << " max_colour=" << rep.max_colour
              << " violations=" << rep.violations.size() << '\n';
    for (const auto& v : rep.violations) std::cout << "violation " << describe(g, v) << '\n';
    return rep.pass() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distant sum distinguishing total colourings"};
    app.require_subcommand(1);

    std::uint64_t delta = 0, seed = 0, r = 2;
    std::string input, output, colouring_path, trace_path, grid_path, colourings_dir, kind;
    std::optional<Colour> bound;
    std::uint32_t limit = 8, max_rounds = default_max_rounds, seeds = 10;
    std::size_t n = 0;
    double prob = 0.1, degree = 3;
    bool literal = false, timing = false;

    auto* palette = app.add_subcommand("palette", "Palette parameters k, K, L for (Delta, r)");
    palette->add_option("--delta", delta, "Maximum degree")->required();
    palette->add_option("--r", r, "Radius")->required();

    auto* order = app.add_subcommand("order", "Sample and certify a vertex ordering");
    order->add_option("--input", input, "Graph file")->required();
    order->add_option("--r", r, "Radius")->required();
    order->add_option("--seed", seed, "Random seed");
    order->add_option("--max-rounds", max_rounds, "Resampling budget");
    order->add_option("--output", output, "Write the certificate here instead of stdout");

    auto* color = app.add_subcommand("color", "Compute an r-distant sum distinguishing total colouring");
    color->alias("colour");
    color->add_option("--input", input, "Graph file")->required();
    color->add_option("--r", r, "Radius")->required();
    color->add_option("--seed", seed, "Random seed");
    color->add_option("--emit-trace", trace_path, "Write the step trace to this file");
    color->add_option("--output", output, "Write the colouring here instead of stdout");
    color->add_option("--max-rounds", max_rounds, "Resampling budget");
    color->add_flag("--literal-r-exclusion", literal, "Exclude base colours against backward r-neighbours");

    auto* ver = app.add_subcommand("verify", "Check a colouring");
    ver->add_option("--input", input, "Graph file")->required();
    ver->add_option("--colouring,--coloring", colouring_path, "Colouring file")->required();
    ver->add_option("--r", r, "Radius")->required();
    ver->add_option("--bound", bound, "Largest permitted colour");

    auto* exact = app.add_subcommand("exact", "Exact index by exhaustive search (tiny graphs)");
    exact->add_option("--input", input, "Graph file")->required();
    exact->add_option("--r", r, "Radius")->required();
    exact->add_option("--limit", limit, "Largest palette size tried")->required();
    exact->add_option("--output", output, "Write the witness colouring here");

    auto* gen = app.add_subcommand("gen", "Generate a graph");
    gen->add_option("--kind", kind, "path|cycle|complete|star|gnp|regular-ish")->required();
    gen->add_option("--n", n, "Vertex count")->required();
    gen->add_option("--p", prob, "Edge probability (gnp)");
    gen->add_option("--degree", degree, "Target degree (regular-ish)");
    gen->add_option("--seed", seed, "Random seed");
    gen->add_option("--output", output, "Graph file to write");

    auto* exp = app.add_subcommand("experiment", "Run a grid of instances and print a CSV table");
    exp->add_option("--grid", grid_path, "Grid file: '<kind> <n> <r> <seed> [param]' per line");
    exp->add_option("--kind", kind, "Inline grid: graph kind");
    exp->add_option("--n", n, "Inline grid: vertex count");
    exp->add_option("--p", prob, "Inline grid: edge probability (gnp)");
    exp->add_option("--degree", degree, "Inline grid: degree (regular-ish)");
    exp->add_option("--r", r, "Inline grid: radius");
    exp->add_option("--seed", seed, "Inline grid: first seed");
    exp->add_option("--seeds", seeds, "Inline grid: number of consecutive seeds");
    exp->add_option("--output", output, "Write the table here instead of stdout");
    exp->add_option("--colourings-dir", colourings_dir, "Write each instance's graph and colouring here");
    exp->add_flag("--timing", timing, "Add a wall-time column");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*palette) return cmd_palette(delta, r);

        if (*order) {
            const Graph g = parse_graph(input);
            const auto cert = resample_until_valid(g, static_cast<std::uint32_t>(r), seed, max_rounds);
            emit(write_certificate(g, cert), output);
            return kPass;
        }

        if (*color) {
            const Graph g = parse_graph(input);
            RunOptions opt;
            opt.max_rounds = max_rounds;
            opt.literal_r_exclusion = literal;
            const auto res = run(g, static_cast<std::uint32_t>(r), seed, opt);
            emit(write_colouring(make_document(g, res.colouring, run_meta(g, res))), output);
            if (!trace_path.empty()) emit(write_trace(g, res.trace), trace_path);
            const auto rep = verify(g, res.colouring, static_cast<std::uint32_t>(r));
            if (!rep.pass()) {
                std::cerr << "colouring failed verification (" << rep.violations.size() << " violations)\n";
                return kFail;
            }
            return kPass;
        }

        if (*ver) return cmd_verify(input, colouring_path, static_cast<std::uint32_t>(r), bound);

        if (*exact) {
            const Graph g = parse_graph(input);
            const auto res = exact_chi(g, static_cast<std::uint32_t>(r), limit);
            if (!res.solved) {
                std::cout << "exact exceeds_limit limit=" << limit << '\n';
                return kFail;
            }
            std::cout << "exact chi=" << res.chi << " r=" << r << '\n';
            if (!output.empty())
                emit(write_colouring(make_document(g, res.witness, {{"chi", std::to_string(res.chi)}, {"r", std::to_string(r)}})),
                     output);
            return kPass;
        }

        if (*gen) {
            const auto k = parse_kind(kind);
            const Graph g = generate(k, n, k == GraphKind::RegularIsh ? degree : prob, seed);
            emit(write_graph(g), output);
            return kPass;
        }

        if (*exp) {
            std::vector<GridEntry> grid;
            if (!grid_path.empty()) {
                grid = parse_grid_text(detail::read_file(grid_path));
            } else if (!kind.empty()) {
                const auto k = parse_kind(kind);
                for (std::uint32_t i = 0; i < seeds; ++i)
                    grid.push_back({k, n, static_cast<std::uint32_t>(r), seed + i,
                                    k == GraphKind::RegularIsh ? degree : prob});
            }
            ExperimentOptions opt;
            opt.timing = timing;
            opt.colourings_dir = colourings_dir;
            const std::string table = experiment(grid, opt);
            emit(table, output);
            return table.find(",fail") != std::string::npos || table.find(",error") != std::string::npos ? kFail
                                                                                                           : kPass;
        }
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
