#include "mbg/baseline.hpp"
#include "mbg/beck.hpp"
#include "mbg/bunches.hpp"
#include "mbg/controller.hpp"
#include "mbg/engine.hpp"
#include "mbg/errors.hpp"
#include "mbg/family_builders.hpp"
#include "mbg/forest_breaker.hpp"
#include "mbg/hgame_breaker.hpp"
#include "mbg/json_io.hpp"
#include "mbg/lehman.hpp"
#include "mbg/params.hpp"
#include "mbg/potential.hpp"
#include "mbg/solver.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace {

using nlohmann::json;
using namespace mbg;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitCap = 3;
constexpr int kExitInvariant = 4;

struct GameSpec {
    std::string game = "connectivity";
    std::string family_file;
    std::string h_file;
    int n = 8;
    int b = 1;
    int k = 2;
    double eps = 0.5;
    double gamma = 0.5;
    double delta = 0.5;
    double c = 1.0;
    std::size_t cap = kDefaultFamilyCap;
    std::string variant = "standard";
    int max_stages = 64;
};

struct BuiltGame {
    Board board;
    GameFamily family;
    SimpleGraph h; // hgame only
};

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

SimpleGraph h_graph(const GameSpec& spec) {
    if (spec.h_file.empty()) return complete_graph(3);
    return graph_from_json(load_json_file(spec.h_file));
}

BuiltGame build_game(const GameSpec& spec) {
    BuiltGame g;
    if (spec.game == "custom") {
        json j = load_json_file(spec.family_file);
        int elements = j.at("elements").get<int>();
        g.board = abstract_board(elements);
        g.family = GameFamily::explicit_family(family_from_json(j, elements));
        return g;
    }
    g.board = complete_graph_board(spec.n);
    if (spec.game == "connectivity") {
        g.family = GameFamily::connectivity(spec.n);
    } else if (spec.game == "hamilton") {
        g.family = GameFamily::explicit_family(hamilton_families(spec.n, spec.eps, spec.cap));
    } else if (spec.game == "coloring") {
        g.family = GameFamily::explicit_family(coloring_family(spec.n, spec.k, spec.cap));
    } else if (spec.game == "hgame") {
        g.h = h_graph(spec);
        g.family = GameFamily::explicit_family(h_copies_family(spec.n, g.h, spec.cap));
    } else if (spec.game == "pancyclicity") {
        g.family = GameFamily::explicit_family(pancyclicity_families(spec.n, spec.c, spec.cap));
    } else {
        throw std::invalid_argument("unknown game: " + spec.game);
    }
    return g;
}

Variant parse_variant(const std::string& s) {
    if (s == "standard") return Variant::Standard;
    if (s == "stop") return Variant::Stop;
    throw std::invalid_argument("unknown variant: " + s);
}

std::unique_ptr<Strategy> make_maker(const std::string& name, const GameSpec& spec,
                                     const BuiltGame& game, std::uint64_t seed) {
    if (name == "random") return std::make_unique<RandomStrategy>(Player::Maker, seed);
    if (name == "potential")
        return std::make_unique<PotentialMaker>(biased_discrepancy_config(spec.delta, spec.b).potential);
    if (name == "controller") {
        if (game.family.kind != GameFamily::Kind::Explicit)
            throw std::invalid_argument("controller maker needs an explicit family");
        return std::make_unique<MultistageDiscrepancyMaker>(game.family.family, spec.gamma, spec.b);
    }
    if (name == "lehman") return std::make_unique<LehmanMaker>();
    if (name == "exact") return std::make_unique<ExactSingleStageStrategy>(Player::Maker);
    throw std::invalid_argument("unknown maker strategy: " + name);
}

std::unique_ptr<Strategy> make_breaker(const std::string& name, const GameSpec& spec,
                                       const BuiltGame& game, std::uint64_t seed) {
    if (name == "random") return std::make_unique<RandomStrategy>(Player::Breaker, seed);
    if (name == "greedy") return std::make_unique<GreedyBreaker>();
    if (name == "beck") return std::make_unique<BeckBreaker>();
    if (name == "forest") return std::make_unique<ForestBreaker>();
    if (name == "hgame")
        return std::make_unique<HGameBreaker>(spec.n, game.h.n >= 3 ? game.h : complete_graph(3),
                                              spec.b, spec.eps);
    if (name == "exact") return std::make_unique<ExactSingleStageStrategy>(Player::Breaker);
    throw std::invalid_argument("unknown breaker strategy: " + name);
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const family_too_large*>(&e) || dynamic_cast<const size_limit_error*>(&e))
        return kExitCap;
    if (dynamic_cast<const invariant_violation*>(&e) || dynamic_cast<const invalid_state*>(&e) ||
        dynamic_cast<const illegal_move*>(&e))
        return kExitInvariant;
    return kExitConfig;
}

struct SimulateOptions {
    GameSpec spec;
    std::string maker = "random";
    std::string breaker = "random";
    std::uint64_t seed = 1;
    int reps = 1;
    int threads = 1;
    std::string out_dir;
};

int run_simulate(const SimulateOptions& opt) {
    BuiltGame game = build_game(opt.spec);
    Variant variant = parse_variant(opt.spec.variant);

    std::vector<json> traces(static_cast<size_t>(opt.reps));
    std::vector<std::string> rows(static_cast<size_t>(opt.reps));
    std::vector<std::string> errors(static_cast<size_t>(opt.reps));
    std::vector<int> error_codes(static_cast<size_t>(opt.reps), kExitOk);

    auto run_one = [&](int r) {
        try {
            std::uint64_t game_seed = derive_seed(opt.seed, static_cast<std::uint64_t>(r));
            auto maker = make_maker(opt.maker, opt.spec, game, derive_seed(game_seed, 0));
            auto breaker = make_breaker(opt.breaker, opt.spec, game, derive_seed(game_seed, 1));
            MatchTrace trace = play_multistage(game.board, game.family, opt.spec.b, *maker,
                                               *breaker, variant, opt.spec.max_stages);
            validate_trace(game.board, game.family, trace);
            json config{{"game", opt.spec.game}, {"n", opt.spec.n},     {"b", opt.spec.b},
                        {"maker", opt.maker},    {"breaker", opt.breaker},
                        {"variant", opt.spec.variant},
                        {"master_seed", opt.seed},
                        {"game_seed", game_seed},
                        {"rep", r}};
            traces[static_cast<size_t>(r)] = trace_to_json(trace, config);
            rows[static_cast<size_t>(r)] =
                summary_csv_row(opt.spec.game, opt.spec.n, opt.spec.b, opt.maker, opt.breaker,
                                opt.spec.variant, game_seed, trace);
        } catch (const std::exception& e) {
            errors[static_cast<size_t>(r)] = e.what();
            error_codes[static_cast<size_t>(r)] = exit_code_for(e);
        }
    };

    if (opt.threads > 1) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(opt.threads)
        for (int r = 0; r < opt.reps; ++r) run_one(r);
#else
        for (int r = 0; r < opt.reps; ++r) run_one(r);
#endif
    } else {
        for (int r = 0; r < opt.reps; ++r) run_one(r);
    }

    for (int r = 0; r < opt.reps; ++r) {
        if (!errors[static_cast<size_t>(r)].empty()) {
            std::cerr << "game " << r << ": " << errors[static_cast<size_t>(r)] << "\n";
            return error_codes[static_cast<size_t>(r)];
        }
    }

    std::optional<std::ofstream> csv;
    if (!opt.out_dir.empty()) {
        std::filesystem::create_directories(opt.out_dir);
        csv.emplace(std::filesystem::path(opt.out_dir) / "summary.csv");
        *csv << summary_csv_header() << "\n";
    }
    std::cout << summary_csv_header() << "\n";
    for (int r = 0; r < opt.reps; ++r) {
        std::cout << rows[static_cast<size_t>(r)] << "\n";
        if (csv) *csv << rows[static_cast<size_t>(r)] << "\n";
        if (!opt.out_dir.empty()) {
            std::filesystem::path p = std::filesystem::path(opt.out_dir) /
                                      ("trace_" + opt.spec.game + "_" + std::to_string(r) + ".json");
            std::ofstream out(p);
            out << traces[static_cast<size_t>(r)].dump(2) << "\n";
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multistage Maker-Breaker game toolkit"};
    app.require_subcommand(1);

    GameSpec spec;
    auto add_game_flags = [&spec](CLI::App* cmd) {
        cmd->add_option("--game", spec.game,
                        "connectivity|hamilton|coloring|hgame|pancyclicity|custom");
        cmd->add_option("--family-file", spec.family_file, "custom family JSON");
        cmd->add_option("--graph-h", spec.h_file, "H graph JSON (hgame)");
        cmd->add_option("--n", spec.n, "vertex count");
        cmd->add_option("--b", spec.b, "Breaker bias");
        cmd->add_option("--k", spec.k, "color count (coloring)");
        cmd->add_option("--eps", spec.eps, "construction epsilon");
        cmd->add_option("--gamma", spec.gamma, "controller gamma");
        cmd->add_option("--delta", spec.delta, "potential maker delta");
        cmd->add_option("--c", spec.c, "pancyclicity constant");
        cmd->add_option("--cap", spec.cap, "family enumeration cap");
        cmd->add_option("--variant", spec.variant, "standard|stop");
        cmd->add_option("--max-stages", spec.max_stages, "stage cap per match");
    };

    SimulateOptions sim;
    CLI::App* simulate = app.add_subcommand("simulate", "play multistage games");
    add_game_flags(simulate);
    simulate->add_option("--maker", sim.maker, "random|potential|controller|lehman|exact");
    simulate->add_option("--breaker", sim.breaker, "random|greedy|beck|forest|hgame|exact");
    simulate->add_option("--seed", sim.seed, "master seed");
    simulate->add_option("--reps", sim.reps, "repetitions");
    simulate->add_option("--threads", sim.threads, "worker threads (1 = serial)");
    simulate->add_option("--out", sim.out_dir, "output directory for traces + summary");

    std::string solve_mode = "tau";
    std::string branching = "exact";
    CLI::App* solve = app.add_subcommand("solve", "exact values on tiny boards");
    add_game_flags(solve);
    solve->add_option("--mode", solve_mode, "stage|tau");
    solve->add_option("--branching", branching, "exact|all (stage mode)");

    std::string fam_out;
    bool counts_only = false;
    CLI::App* families = app.add_subcommand("families", "emit a family as JSON");
    add_game_flags(families);
    families->add_option("--out-file", fam_out, "write JSON here instead of stdout");
    families->add_flag("--counts-only", counts_only, "emit group statistics only");

    std::string density_graph;
    int density_complete = 0;
    CLI::App* density = app.add_subcommand("density", "max density and max 2-density");
    density->add_option("--graph", density_graph, "graph JSON file");
    density->add_option("--complete", density_complete, "use K_n instead of a file");

    std::string verify_check = "hamilton";
    std::string verify_graph;
    double exp_factor = 1.0;
    int cut_size = 2;
    double verify_c = 1.0;
    CLI::App* verify = app.add_subcommand("verify", "sufficient-condition checkers");
    verify->add_option("--check", verify_check, "hamilton|pancyclicity");
    verify->add_option("--graph", verify_graph, "graph JSON file")->required();
    verify->add_option("--exp-factor", exp_factor, "expansion factor (hamilton P1)");
    verify->add_option("--cut-size", cut_size, "set size bound (hamilton)");
    verify->add_option("--c", verify_c, "connectivity constant (pancyclicity)");

    std::string replay_file;
    CLI::App* replay = app.add_subcommand("replay", "re-validate a trace file");
    add_game_flags(replay);
    replay->add_option("--trace", replay_file, "trace JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (simulate->parsed()) {
            sim.spec = spec;
            return run_simulate(sim);
        }
        if (solve->parsed()) {
            BuiltGame game = build_game(spec);
            json out;
            if (solve_mode == "stage") {
                std::vector<ElementId> active(static_cast<size_t>(game.board.elements));
                for (int i = 0; i < game.board.elements; ++i) active[static_cast<size_t>(i)] = i;
                BreakerBranching br = branching == "all" ? BreakerBranching::AllSubsets
                                                         : BreakerBranching::ExactClaim;
                Player w = solve_single_stage(game.board, active, game.family, spec.b, br);
                out["winner"] = w == Player::Maker ? "maker" : "breaker";
            } else if (solve_mode == "tau") {
                TauResult res = solve_tau_exact(game.board, game.family, spec.b,
                                                parse_variant(spec.variant), 24);
                out["tau"] = res.tau;
                out["unbounded"] = res.unbounded;
            } else {
                throw std::invalid_argument("unknown solve mode: " + solve_mode);
            }
            std::cout << out.dump(2) << "\n";
            return kExitOk;
        }
        if (families->parsed()) {
            BuiltGame game = build_game(spec);
            if (game.family.kind != GameFamily::Kind::Explicit)
                throw std::invalid_argument("families: the connectivity family is implicit");
            json out;
            json stats = json::array();
            for (const auto& st : family_stats(game.family.family))
                stats.push_back(json{{"name", st.name}, {"min_size", st.min_size}, {"count", st.count}});
            out["stats"] = stats;
            out["total_sets"] = game.family.family.total_sets();
            if (!counts_only) out["family"] = family_to_json(game.family.family);
            if (!fam_out.empty()) {
                std::ofstream f(fam_out);
                f << out.dump(2) << "\n";
            } else {
                std::cout << out.dump(2) << "\n";
            }
            return kExitOk;
        }
        if (density->parsed()) {
            SimpleGraph g = density_complete > 0 ? complete_graph(density_complete)
                                                 : graph_from_json(load_json_file(density_graph));
            json out{{"m", max_density(g).str()}, {"m2", max_2_density(g).str()}};
            std::cout << out.dump(2) << "\n";
            return kExitOk;
        }
        if (verify->parsed()) {
            SimpleGraph g = graph_from_json(load_json_file(verify_graph));
            ConditionResult res;
            if (verify_check == "hamilton")
                res = check_hamilton_conditions(g, exp_factor, cut_size);
            else if (verify_check == "pancyclicity")
                res = check_pancyclicity_conditions(g, verify_c);
            else
                throw std::invalid_argument("unknown check: " + verify_check);
            json out{{"p1", res.p1}, {"p2", res.p2}, {"pass", res.p1 && res.p2}};
            if (!res.witness.empty()) out["witness"] = res.witness;
            std::cout << out.dump(2) << "\n";
            return kExitOk;
        }
        if (replay->parsed()) {
            BuiltGame game = build_game(spec);
            MatchTrace trace = trace_from_json(load_json_file(replay_file));
            validate_trace(game.board, game.family, trace);
            std::cout << "{\"valid\": true}\n";
            return kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return kExitConfig;
}
