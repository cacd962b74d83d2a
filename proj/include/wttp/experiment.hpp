#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "wttp/heuristics.hpp"
#include "wttp/instance.hpp"
#include "wttp/packing.hpp"
#include "wttp/search.hpp"
#include "wttp/similarity.hpp"

namespace wttp {

struct ExperimentConfig {
    std::vector<std::string> instance_paths;
    // keyed by instance path; value is a TSPlib .tour file with the optimal
    // tour of the underlying TSP instance
    std::map<std::string, std::string> optimal_tour_paths;
    std::vector<double> p_values = {0.01, 0.05, 0.1, 0.2, 0.3, 0.4, 0.6, 0.8, 1.0};
    int replicates = 31;
    std::uint64_t budget = 0;  // 0 = default by instance size
    MutationKind mutation = MutationKind::Inversion;
    std::uint64_t base_seed = 1;
    std::vector<DriverKind> drivers = {DriverKind::WTSP, DriverKind::WTTP};
    std::string output_dir = ".";
    int worker_count = 0;  // 0 = WTTP_WORKERS env or hardware_concurrency
    std::uint64_t log_stride = 1000;
    bool write_trajectories = false;
};

struct ExperimentRecord {
    std::string instance;
    int n = 0;
    int ipn = 0;
    std::string weight_class;
    double p = 0;
    int replicate = 0;
    DriverKind driver = DriverKind::WTSP;
    double final_wtsp = 0;
    double final_wttp = 0;
    std::optional<double> ce_tsp;
    double ce_wgr = 0;
    std::optional<double> inv_tsp;
    double inv_wgr = 0;
    std::uint64_t evaluations = 0;
    std::uint64_t seed = 0;  // packing-plan seed, shared by the driver pair
    std::int64_t wallclock_ms = 0;
};

inline std::uint64_t default_budget(int n) { return n <= 300 ? 1000000ULL : 5000000ULL; }

inline int default_worker_count() {
    if (const char* env = std::getenv("WTTP_WORKERS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw >= 1 ? static_cast<int>(hw) : 1;
}

// weight class and IPN from the competition filename convention, e.g.
// a280_n279_bounded-strongly-corr_01.ttp; IPN falls back to round(m/(n-1))
inline std::string weight_class_from_filename(const std::string& path) {
    std::string stem = std::filesystem::path(path).stem().string();
    if (stem.find("bounded-strongly-corr") != std::string::npos) return "bsc";
    if (stem.find("uncorr-similar-weights") != std::string::npos) return "usw";
    if (stem.find("uncorr") != std::string::npos) return "u";
    return "unknown";
}

inline int items_per_node(const TtpInstance& inst) {
    if (inst.n <= 1 || inst.items.empty()) return 0;
    return static_cast<int>(std::llround(static_cast<double>(inst.items.size()) / (inst.n - 1)));
}

inline std::string csv_field(double v) { return format_real(v); }

inline std::string csv_field(const std::optional<double>& v) {
    return v ? format_real(*v) : std::string();
}

inline const char* records_csv_header() {
    return "instance,n,ipn,weight_class,p,replicate,driver,final_wtsp,final_wttp,"
           "ce_tsp,ce_wgr,inv_tsp,inv_wgr,evaluations,seed";
}

inline std::string record_csv_row(const ExperimentRecord& r) {
    std::ostringstream os;
    os << r.instance << ',' << r.n << ',' << r.ipn << ',' << r.weight_class << ','
       << format_real(r.p) << ',' << r.replicate << ',' << to_string(r.driver) << ','
       << csv_field(r.final_wtsp) << ',' << csv_field(r.final_wttp) << ','
       << csv_field(r.ce_tsp) << ',' << csv_field(r.ce_wgr) << ','
       << csv_field(r.inv_tsp) << ',' << csv_field(r.inv_wgr) << ','
       << r.evaluations << ',' << r.seed;
    return os.str();
}

// Objective-value ratio of a same-plan driver pair. target=WTSP:
// wtsp(final of WTSP driver) / wtsp(final of WTTP driver); below 1.0 means
// the target's own driver won. Empty on zero denominator (W-TSP at p=0).
inline std::optional<double> compute_ratio(const ExperimentRecord& a,
                                           const ExperimentRecord& b, DriverKind target) {
    if (a.driver == b.driver) throw std::invalid_argument("records have the same driver");
    if (a.instance != b.instance || a.p != b.p || a.replicate != b.replicate ||
        a.seed != b.seed)
        throw std::invalid_argument("records are not a same-plan pair");
    const ExperimentRecord& own = a.driver == target ? a : b;
    const ExperimentRecord& cross = a.driver == target ? b : a;
    double num = target == DriverKind::WTSP ? own.final_wtsp : own.final_wttp;
    double den = target == DriverKind::WTSP ? cross.final_wtsp : cross.final_wttp;
    if (den == 0.0) return std::nullopt;
    return num / den;
}

namespace detail {

struct LoadedInstance {
    TtpInstance inst;
    std::string path;
    std::string weight_class;
    int ipn = 0;
    std::optional<Tour> optimal_tour;
};

struct Cell {
    std::size_t inst_idx;
    std::size_t p_idx;
    int replicate;  // 1-based
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace detail

// Full run matrix: for every (instance, p, replicate) one packing plan is
// generated, then the EA runs once per driver on that same plan. Records are
// written to records.csv in deterministic order regardless of worker count;
// per-run wallclock goes to timings.csv so records.csv stays reproducible.
inline std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config) {
    namespace fs = std::filesystem;
    if (config.replicates < 1) throw std::invalid_argument("replicates must be >= 1");
    for (double p : config.p_values)
        if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p values must lie in [0,1]");

    std::vector<detail::LoadedInstance> loaded;
    for (const std::string& path : config.instance_paths) {
        detail::LoadedInstance li;
        li.path = path;
        try {
            li.inst = parse_ttp_instance(detail::read_file(path));
        } catch (const std::exception& e) {
            std::cerr << "warning: skipping unparseable instance " << path << ": "
                      << e.what() << "\n";
            continue;
        }
        li.weight_class = weight_class_from_filename(path);
        li.ipn = items_per_node(li.inst);
        auto it = config.optimal_tour_paths.find(path);
        if (it != config.optimal_tour_paths.end())
            li.optimal_tour = parse_tour_file(detail::read_file(it->second), li.inst.n);
        loaded.push_back(std::move(li));
    }

    std::vector<detail::Cell> cells;
    for (std::size_t ii = 0; ii < loaded.size(); ++ii)
        for (std::size_t pi = 0; pi < config.p_values.size(); ++pi)
            for (int r = 1; r <= config.replicates; ++r)
                cells.push_back({ii, pi, r});

    const std::size_t drivers_per_cell = config.drivers.size();
    std::vector<ExperimentRecord> records(cells.size() * drivers_per_cell);
    std::vector<std::vector<std::vector<TrajectoryPoint>>> trajectories;
    if (config.write_trajectories)
        trajectories.assign(cells.size(),
                            std::vector<std::vector<TrajectoryPoint>>(drivers_per_cell));

    auto run_cell = [&](std::size_t ci) {
        const detail::Cell& cell = cells[ci];
        const detail::LoadedInstance& li = loaded[cell.inst_idx];
        const double p = config.p_values[cell.p_idx];
        const std::uint64_t plan_seed =
            derive_seed(config.base_seed, li.inst.name, cell.p_idx,
                        static_cast<std::uint64_t>(cell.replicate));
        PackingPlan plan = generate_packing(li.inst, p, plan_seed);
        Tour wgr = weighted_greedy_tour(li.inst, plan);
        const std::uint64_t budget =
            config.budget > 0 ? config.budget : default_budget(li.inst.n);

        for (std::size_t di = 0; di < drivers_per_cell; ++di) {
            const DriverKind driver = config.drivers[di];
            const std::uint64_t run_seed = derive_seed(plan_seed, to_string(driver));
            auto t0 = std::chrono::steady_clock::now();
            RunResult run = run_one_plus_one_ea(li.inst, plan, driver, config.mutation,
                                                budget, run_seed, config.log_stride);
            auto t1 = std::chrono::steady_clock::now();

            ExperimentRecord& rec = records[ci * drivers_per_cell + di];
            rec.instance = li.inst.name;
            rec.n = li.inst.n;
            rec.ipn = li.ipn;
            rec.weight_class = li.weight_class;
            rec.p = p;
            rec.replicate = cell.replicate;
            rec.driver = driver;
            rec.final_wtsp = run.final_wtsp;
            rec.final_wttp = run.final_wttp;
            rec.ce_wgr = common_edges(run.final_tour, wgr);
            rec.inv_wgr = inversion_similarity(run.final_tour, wgr);
            if (li.optimal_tour) {
                rec.ce_tsp = common_edges(run.final_tour, *li.optimal_tour);
                rec.inv_tsp = inversion_similarity(run.final_tour, *li.optimal_tour);
            }
            rec.evaluations = run.evaluations_used;
            rec.seed = plan_seed;
            rec.wallclock_ms =
                std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
            if (config.write_trajectories)
                trajectories[ci][di] = std::move(run.trajectory);
        }
    };

    int workers = config.worker_count > 0 ? config.worker_count : default_worker_count();
    workers = std::min<int>(workers, static_cast<int>(cells.size() ? cells.size() : 1));
    if (workers <= 1) {
        for (std::size_t ci = 0; ci < cells.size(); ++ci) run_cell(ci);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&]() {
                for (;;) {
                    std::size_t ci = next.fetch_add(1);
                    if (ci >= cells.size()) return;
                    run_cell(ci);
                }
            });
        for (auto& t : pool) t.join();
    }

    fs::create_directories(config.output_dir);
    const fs::path out = fs::path(config.output_dir);
    {
        std::ofstream rf(out / "records.csv", std::ios::binary);
        if (!rf) throw std::runtime_error("cannot write " + (out / "records.csv").string());
        rf << records_csv_header() << "\n";
        for (const ExperimentRecord& r : records) rf << record_csv_row(r) << "\n";
    }
    {
        std::ofstream tf(out / "timings.csv", std::ios::binary);
        tf << "instance,p,replicate,driver,wallclock_ms\n";
        for (const ExperimentRecord& r : records)
            tf << r.instance << ',' << format_real(r.p) << ',' << r.replicate << ','
               << to_string(r.driver) << ',' << r.wallclock_ms << "\n";
    }
    if (config.write_trajectories) {
        for (std::size_t ci = 0; ci < cells.size(); ++ci) {
            for (std::size_t di = 0; di < drivers_per_cell; ++di) {
                const ExperimentRecord& r = records[ci * drivers_per_cell + di];
                std::ostringstream name;
                name << "trajectory_" << r.instance << "_p" << r.p << "_r" << r.replicate
                     << "_" << to_string(r.driver) << ".csv";
                std::ofstream tf(out / name.str(), std::ios::binary);
                tf << "evaluation_index,wtsp,wttp\n";
                for (const TrajectoryPoint& pt : trajectories[ci][di])
                    tf << pt.evaluation_index << ',' << format_real(pt.wtsp_value) << ','
                       << format_real(pt.wttp_value) << "\n";
            }
        }
    }
    return records;
}

// ---- summary statistics over a records CSV ----

struct SummaryStats {
    std::size_t count = 0;
    double min = 0, q1 = 0, median = 0, q3 = 0, max = 0, mean = 0;
};

// median = midpoint of the two middle values for even counts; quartiles are
// medians of the lower/upper halves (middle element excluded for odd counts)
inline SummaryStats summarize_values(std::vector<double> v) {
    SummaryStats s;
    s.count = v.size();
    if (v.empty()) return s;
    std::sort(v.begin(), v.end());
    auto median_of = [&](std::size_t lo, std::size_t hi) {  // [lo, hi)
        std::size_t len = hi - lo;
        std::size_t mid = lo + len / 2;
        return len % 2 == 1 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
    };
    s.min = v.front();
    s.max = v.back();
    s.median = median_of(0, v.size());
    const std::size_t half = v.size() / 2;
    if (v.size() >= 2) {
        s.q1 = median_of(0, half);
        s.q3 = median_of(v.size() - half, v.size());
    } else {
        s.q1 = s.q3 = s.median;
    }
    double sum = 0;
    for (double x : v) sum += x;
    s.mean = sum / static_cast<double>(v.size());
    return s;
}

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace detail

// Group a records CSV by the given columns and emit per-group summary stats
// of both driver-pair ratios and the four similarity columns. Ratios are
// attributed to the group of their own-driver row.
inline std::string summarize(const std::string& records_csv_path,
                             const std::vector<std::string>& group_by) {
    std::string text = detail::read_file(records_csv_path);
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty records CSV");
    std::vector<std::string> header = detail::split_csv_line(detail::trim(line));
    std::map<std::string, std::size_t> col;
    for (std::size_t i = 0; i < header.size(); ++i) col[header[i]] = i;
    for (const char* required : {"instance", "p", "replicate", "driver", "final_wtsp",
                                 "final_wttp", "ce_wgr", "inv_wgr"})
        if (!col.count(required))
            throw std::runtime_error(std::string("records CSV missing column ") + required);
    for (const std::string& g : group_by)
        if (!col.count(g)) throw std::runtime_error("unknown group-by column " + g);

    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        line = detail::trim(line);
        if (line.empty()) continue;
        auto fields = detail::split_csv_line(line);
        if (fields.size() != header.size())
            throw std::runtime_error("records CSV row has wrong field count");
        rows.push_back(std::move(fields));
    }

    // pair rows by (instance, p, replicate) to compute ratios
    std::map<std::string, std::vector<std::size_t>> pairs;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::string key = rows[i][col["instance"]] + "|" + rows[i][col["p"]] + "|" +
                          rows[i][col["replicate"]];
        pairs[key].push_back(i);
    }
    // per-row ratio (own objective / cross-driver's value of the same objective)
    std::vector<std::optional<double>> row_ratio(rows.size());
    for (const auto& [key, idxs] : pairs) {
        (void)key;
        if (idxs.size() != 2) continue;
        for (int k = 0; k < 2; ++k) {
            std::size_t own = idxs[k], cross = idxs[1 - k];
            const bool wtsp_driver = rows[own][col["driver"]] == "WTSP";
            const std::size_t vcol = wtsp_driver ? col["final_wtsp"] : col["final_wttp"];
            double num = std::stod(rows[own][vcol]);
            double den = std::stod(rows[cross][vcol]);
            if (den != 0.0) row_ratio[own] = num / den;
        }
    }

    struct Group {
        std::vector<double> ratio_wtsp, ratio_wttp, ce_tsp, ce_wgr, inv_tsp, inv_wgr;
    };
    std::map<std::vector<std::string>, Group> groups;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::vector<std::string> key;
        key.reserve(group_by.size());
        for (const std::string& g : group_by) key.push_back(rows[i][col[g]]);
        Group& grp = groups[key];
        const bool wtsp_driver = rows[i][col["driver"]] == "WTSP";
        if (row_ratio[i]) (wtsp_driver ? grp.ratio_wtsp : grp.ratio_wttp).push_back(*row_ratio[i]);
        auto push_opt = [&](const char* c, std::vector<double>& dst) {
            if (!col.count(c)) return;
            const std::string& f = rows[i][col[c]];
            if (!f.empty()) dst.push_back(std::stod(f));
        };
        push_opt("ce_tsp", grp.ce_tsp);
        push_opt("ce_wgr", grp.ce_wgr);
        push_opt("inv_tsp", grp.inv_tsp);
        push_opt("inv_wgr", grp.inv_wgr);
    }

    std::ostringstream os;
    for (const std::string& g : group_by) os << g << ',';
    const char* metrics[] = {"ratio_wtsp", "ratio_wttp", "ce_tsp", "ce_wgr",
                             "inv_tsp", "inv_wgr"};
    for (std::size_t mi = 0; mi < 6; ++mi) {
        for (const char* stat : {"count", "min", "q1", "median", "q3", "max", "mean"}) {
            os << metrics[mi] << '_' << stat;
            if (mi + 1 < 6 || std::string(stat) != "mean") os << ',';
        }
    }
    os << "\n";
    for (const auto& [key, grp] : groups) {
        for (const std::string& k : key) os << k << ',';
        const std::vector<double>* vs[] = {&grp.ratio_wtsp, &grp.ratio_wttp, &grp.ce_tsp,
                                           &grp.ce_wgr, &grp.inv_tsp, &grp.inv_wgr};
        for (std::size_t mi = 0; mi < 6; ++mi) {
            SummaryStats s = summarize_values(*vs[mi]);
            os << s.count << ',';
            if (s.count == 0) {
                os << ",,,,,";
            } else {
                os << format_real(s.min) << ',' << format_real(s.q1) << ','
                   << format_real(s.median) << ',' << format_real(s.q3) << ','
                   << format_real(s.max) << ',' << format_real(s.mean);
            }
            if (mi + 1 < 6) os << ',';
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace wttp
