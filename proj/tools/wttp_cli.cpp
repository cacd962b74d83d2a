// Subcommand CLI for the W-TSP / W-TTP tour study: single EA runs, tour
// evaluation, constructive heuristics, similarity scoring, packing
// generation, the full experiment matrix and CSV summaries.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <wttp/experiment.hpp>
#include <wttp/heuristics.hpp>
#include <wttp/objectives.hpp>
#include <wttp/search.hpp>
#include <wttp/similarity.hpp>

using namespace wttp;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
}

DriverKind parse_driver(const std::string& s) {
    if (s == "wtsp" || s == "WTSP") return DriverKind::WTSP;
    if (s == "wttp" || s == "WTTP") return DriverKind::WTTP;
    throw CLI::ValidationError("driver must be wtsp or wttp");
}

MutationKind parse_mutation(const std::string& s) {
    if (s == "inversion") return MutationKind::Inversion;
    if (s == "swap") return MutationKind::Swap;
    if (s == "insertion") return MutationKind::Insertion;
    throw CLI::ValidationError("mutation must be inversion, swap or insertion");
}

PackingPlan load_or_generate_plan(const TtpInstance& inst, const std::string& plan_file,
                                  double p, std::uint64_t seed) {
    if (!plan_file.empty()) return parse_packing(read_file(plan_file), inst.item_count());
    return generate_packing(inst, p, seed);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"node-weighted TSP / traveling thief tour study"};
    app.require_subcommand(1);

    // ---- solve ----
    auto* solve = app.add_subcommand("solve", "run the (1+1)-EA once and print finals");
    std::string s_instance, s_driver = "wtsp", s_mutation = "inversion";
    std::string s_plan_file, s_traj_file, s_tour_out;
    double s_p = 0.5;
    std::uint64_t s_budget = 0, s_seed = 1, s_stride = 1000;
    solve->add_option("instance", s_instance, "TTP instance file")->required();
    solve->add_option("--driver", s_driver, "EA driver objective: wtsp|wttp");
    solve->add_option("--mutation", s_mutation, "inversion|swap|insertion");
    solve->add_option("-p,--prob", s_p, "packing probability");
    solve->add_option("--plan", s_plan_file, "packing plan file (overrides -p/--seed generation)");
    solve->add_option("--budget", s_budget, "evaluation budget (0 = default by size)");
    solve->add_option("--seed", s_seed, "run seed");
    solve->add_option("--log-stride", s_stride, "trajectory sampling stride");
    solve->add_option("--trajectory", s_traj_file, "write trajectory CSV here");
    solve->add_option("--tour-out", s_tour_out, "write the final tour in TSPlib format");

    // ---- evaluate ----
    auto* evaluate = app.add_subcommand("evaluate", "evaluate a tour file under all objectives");
    std::string e_instance, e_tour, e_plan_file;
    double e_p = 0.5;
    std::uint64_t e_seed = 1;
    evaluate->add_option("instance", e_instance, "TTP instance file")->required();
    evaluate->add_option("tour", e_tour, "TSPlib .tour file")->required();
    evaluate->add_option("-p,--prob", e_p, "packing probability");
    evaluate->add_option("--plan", e_plan_file, "packing plan file");
    evaluate->add_option("--seed", e_seed, "packing seed");

    // ---- greedy ----
    auto* greedy = app.add_subcommand("greedy", "emit a WGR or NN tour");
    std::string g_instance, g_kind = "wgr", g_out, g_plan_file;
    double g_p = 0.5;
    std::uint64_t g_seed = 1;
    int g_start = 1;
    greedy->add_option("instance", g_instance, "TTP instance file")->required();
    greedy->add_option("--kind", g_kind, "wgr|nn");
    greedy->add_option("--start", g_start, "start city for nn");
    greedy->add_option("-p,--prob", g_p, "packing probability (wgr)");
    greedy->add_option("--plan", g_plan_file, "packing plan file (wgr)");
    greedy->add_option("--seed", g_seed, "packing seed (wgr)");
    greedy->add_option("-o,--output", g_out, "output tour file (default stdout)");

    // ---- similarity ----
    auto* similarity = app.add_subcommand("similarity", "CE and INV of two tour files");
    std::string y_tour1, y_tour2;
    int y_n = 0;
    similarity->add_option("tour1", y_tour1)->required();
    similarity->add_option("tour2", y_tour2)->required();
    similarity->add_option("-n,--cities", y_n, "city count (default: inferred from tour1)");

    // ---- gen-packing ----
    auto* gen = app.add_subcommand("gen-packing", "generate a Bernoulli packing plan");
    std::string n_instance, n_out;
    double n_p = 0.5;
    std::uint64_t n_seed = 1;
    gen->add_option("instance", n_instance, "TTP instance file")->required();
    gen->add_option("-p,--prob", n_p, "packing probability")->required();
    gen->add_option("--seed", n_seed, "packing seed");
    gen->add_option("-o,--output", n_out, "output file (default stdout)");

    // ---- experiment ----
    auto* experiment = app.add_subcommand("experiment", "run the full study matrix");
    ExperimentConfig cfg;
    std::vector<std::string> x_opt_tours;
    std::string x_mutation = "inversion";
    std::vector<std::string> x_drivers = {"wtsp", "wttp"};
    experiment->add_option("instances", cfg.instance_paths, "TTP instance files")->required();
    experiment->add_option("--opt-tour", x_opt_tours,
                           "instance_path=tour_path mapping, repeatable");
    experiment->add_option("--p-values", cfg.p_values, "packing probabilities");
    experiment->add_option("--replicates", cfg.replicates, "packings per (instance, p)");
    experiment->add_option("--budget", cfg.budget, "evaluation budget (0 = default by size)");
    experiment->add_option("--mutation", x_mutation, "inversion|swap|insertion");
    experiment->add_option("--base-seed", cfg.base_seed, "base seed of the seed stream");
    experiment->add_option("--drivers", x_drivers, "subset of {wtsp, wttp}");
    experiment->add_option("-o,--output-dir", cfg.output_dir, "output directory");
    experiment->add_option("--workers", cfg.worker_count,
                           "worker threads (0 = WTTP_WORKERS env or hardware)");
    experiment->add_option("--log-stride", cfg.log_stride, "trajectory sampling stride");
    experiment->add_flag("--trajectories", cfg.write_trajectories,
                         "write per-run trajectory CSVs");

    // ---- summarize ----
    auto* summarize_cmd = app.add_subcommand("summarize", "summary stats over a records CSV");
    std::string m_records, m_out;
    std::vector<std::string> m_group_by = {"instance", "p"};
    summarize_cmd->add_option("records", m_records, "records.csv path")->required();
    summarize_cmd->add_option("--group-by", m_group_by, "grouping columns");
    summarize_cmd->add_option("-o,--output", m_out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve) {
            TtpInstance inst = parse_ttp_instance(read_file(s_instance));
            PackingPlan plan = load_or_generate_plan(inst, s_plan_file, s_p, s_seed);
            std::uint64_t budget = s_budget > 0 ? s_budget : default_budget(inst.n);
            std::cout << "instance=" << inst.name << " n=" << inst.n
                      << " m=" << inst.item_count() << " driver=" << s_driver
                      << " mutation=" << s_mutation << " budget=" << budget
                      << " seed=" << s_seed << " p=" << s_p << "\n";
            RunResult run = run_one_plus_one_ea(inst, plan, parse_driver(s_driver),
                                                parse_mutation(s_mutation), budget, s_seed,
                                                s_stride);
            std::cout << "final_wtsp=" << format_real(run.final_wtsp)
                      << " final_wttp=" << format_real(run.final_wttp)
                      << " evaluations=" << run.evaluations_used << "\n";
            if (!s_traj_file.empty()) {
                std::ostringstream os;
                os << "evaluation_index,wtsp,wttp\n";
                for (const TrajectoryPoint& pt : run.trajectory)
                    os << pt.evaluation_index << ',' << format_real(pt.wtsp_value) << ','
                       << format_real(pt.wttp_value) << "\n";
                write_file(s_traj_file, os.str());
            }
            if (!s_tour_out.empty())
                write_file(s_tour_out, serialize_tour(run.final_tour, inst.name));
        } else if (*evaluate) {
            TtpInstance inst = parse_ttp_instance(read_file(e_instance));
            PackingPlan plan = load_or_generate_plan(inst, e_plan_file, e_p, e_seed);
            Tour tour = parse_tour_file(read_file(e_tour), inst.n);
            Evaluator eval(inst, plan);
            std::cout << "tsp_length=" << format_real(eval.tsp_length(tour)) << "\n"
                      << "wtsp=" << format_real(eval.wtsp(tour)) << "\n"
                      << "wttp=" << format_real(eval.wttp(tour)) << "\n"
                      << "ttp=" << format_real(eval.ttp(tour)) << "\n";
        } else if (*greedy) {
            TtpInstance inst = parse_ttp_instance(read_file(g_instance));
            Tour tour;
            if (g_kind == "nn") {
                tour = nearest_neighbor_tour(inst, g_start);
            } else if (g_kind == "wgr") {
                PackingPlan plan = load_or_generate_plan(inst, g_plan_file, g_p, g_seed);
                tour = weighted_greedy_tour(inst, plan);
            } else {
                throw CLI::ValidationError("--kind must be wgr or nn");
            }
            std::string text = serialize_tour(tour, inst.name + "." + g_kind);
            if (g_out.empty())
                std::cout << text;
            else
                write_file(g_out, text);
        } else if (*similarity) {
            std::string text1 = read_file(y_tour1);
            if (y_n == 0) {
                // count entries of tour1 up to the -1 terminator
                Tour probe;
                std::istringstream in(text1.substr(text1.find("TOUR_SECTION")));
                std::string tok;
                in >> tok;
                while (in >> tok && tok != "-1" && tok != "EOF") ++y_n;
            }
            Tour t1 = parse_tour_file(text1, y_n);
            Tour t2 = parse_tour_file(read_file(y_tour2), y_n);
            std::cout << "ce=" << format_real(common_edges(t1, t2)) << "\n"
                      << "inv=" << format_real(inversion_similarity(t1, t2)) << "\n"
                      << "inversions=" << count_inversions(t1, t2) << "\n";
        } else if (*gen) {
            TtpInstance inst = parse_ttp_instance(read_file(n_instance));
            PackingPlan plan = generate_packing(inst, n_p, n_seed);
            std::string text = serialize_packing(plan, inst.name);
            if (n_out.empty())
                std::cout << text;
            else
                write_file(n_out, text);
        } else if (*experiment) {
            cfg.mutation = parse_mutation(x_mutation);
            cfg.drivers.clear();
            for (const std::string& d : x_drivers) cfg.drivers.push_back(parse_driver(d));
            for (const std::string& spec : x_opt_tours) {
                auto eq = spec.find('=');
                if (eq == std::string::npos)
                    throw CLI::ValidationError("--opt-tour needs instance_path=tour_path");
                cfg.optimal_tour_paths[spec.substr(0, eq)] = spec.substr(eq + 1);
            }
            // effective configuration, defaults included
            std::cout << "experiment configuration:\n"
                      << "  instances: " << cfg.instance_paths.size() << " file(s)\n"
                      << "  p_values:";
            for (double p : cfg.p_values) std::cout << " " << p;
            std::cout << "\n  replicates: " << cfg.replicates
                      << "\n  budget: " << cfg.budget << (cfg.budget == 0 ? " (default by size)" : "")
                      << "\n  mutation: " << to_string(cfg.mutation)
                      << "\n  base_seed: " << cfg.base_seed << "\n  drivers:";
            for (DriverKind d : cfg.drivers) std::cout << " " << to_string(d);
            std::cout << "\n  output_dir: " << cfg.output_dir << "\n  workers: "
                      << (cfg.worker_count > 0 ? cfg.worker_count : default_worker_count())
                      << "\n  log_stride: " << cfg.log_stride << "\n  trajectories: "
                      << (cfg.write_trajectories ? "yes" : "no") << "\n";
            auto records = run_experiment(cfg);
            std::cout << "wrote " << records.size() << " records to " << cfg.output_dir
                      << "/records.csv\n";
        } else if (*summarize_cmd) {
            std::string table = summarize(m_records, m_group_by);
            if (m_out.empty())
                std::cout << table;
            else
                write_file(m_out, table);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
