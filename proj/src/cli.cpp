#include "eigprog/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "eigprog/errors.hpp"
#include "eigprog/svg.hpp"

namespace eigprog::cli {

namespace fs = std::filesystem;
using nlohmann::json;

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

Ordering parse_ordering(const std::string& s) {
    if (s == "blockwise") return Ordering::BlockWise;
    if (s == "ordered") return Ordering::GloballyOrdered;
    throw ConfigError("unknown ordering '" + s + "' (use blockwise or ordered)");
}

const char* ordering_name(Ordering o) {
    return o == Ordering::BlockWise ? "blockwise" : "ordered";
}

SolverConfig merge_solver(SolverConfig base, const SolverOverrides& over) {
    if (over.alpha) base.alpha = *over.alpha;
    if (over.tol) base.tolerance = *over.tol;
    if (over.max_iter) base.max_iterations = *over.max_iter;
    if (over.restart_cap) base.restart_cap = *over.restart_cap;
    return base;
}

int thread_cap_from_env() {
    const char* env = std::getenv("EIGPROG_THREADS");
    if (!env || !*env) return 0;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1)
        throw ConfigError("EIGPROG_THREADS must be a positive integer");
    return static_cast<int>(v);
}

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open instance file '" + path + "'");
    json j;
    in >> j;
    return j;
}

std::vector<double> as_vector(const json& j, const char* what) {
    if (!j.is_array()) throw ConfigError(std::string(what) + " must be an array");
    std::vector<double> out;
    out.reserve(j.size());
    for (const json& v : j) {
        if (!v.is_number()) throw ConfigError(std::string(what) + " must be numeric");
        out.push_back(v.get<double>());
    }
    return out;
}

Mat as_matrix(const json& j, const char* what) {
    if (!j.is_array() || j.empty())
        throw ConfigError(std::string(what) + " must be a nonempty array of rows");
    Mat m;
    m.rows = static_cast<int>(j.size());
    std::vector<double> first = as_vector(j[0], what);
    m.cols = static_cast<int>(first.size());
    if (m.cols == 0) throw ConfigError(std::string(what) + " has empty rows");
    m.a.reserve(static_cast<std::size_t>(m.rows) * static_cast<std::size_t>(m.cols));
    m.a.insert(m.a.end(), first.begin(), first.end());
    for (std::size_t r = 1; r < j.size(); ++r) {
        std::vector<double> row = as_vector(j[r], what);
        if (static_cast<int>(row.size()) != m.cols)
            throw ConfigError(std::string(what) + " has rows of unequal length");
        m.a.insert(m.a.end(), row.begin(), row.end());
    }
    return m;
}

SolverOverrides solver_from_json(const json& j) {
    SolverOverrides o;
    if (!j.contains("solver")) return o;
    const json& s = j.at("solver");
    if (s.contains("alpha")) o.alpha = s.at("alpha").get<double>();
    if (s.contains("tol")) o.tol = s.at("tol").get<double>();
    if (s.contains("max_iter")) o.max_iter = s.at("max_iter").get<int>();
    if (s.contains("restart_cap")) o.restart_cap = s.at("restart_cap").get<int>();
    return o;
}

AlgebraPtr algebra_from_json(const json& j) {
    if (!j.contains("blocks")) throw ConfigError("algebra needs a 'blocks' array");
    const Ordering ordering = parse_ordering(j.value("ordering", "blockwise"));
    std::vector<BlockKind> blocks;
    for (const json& b : j.at("blocks")) {
        const std::string kind = b.value("kind", "");
        if (kind == "soc")
            blocks.push_back(BlockKind::soc(b.at("n").get<int>()));
        else if (kind == "sym")
            blocks.push_back(BlockKind::sym(b.at("n").get<int>()));
        else if (kind == "rect")
            blocks.push_back(BlockKind::rect(b.at("m").get<int>(), b.at("n").get<int>()));
        else
            throw ConfigError("unknown block kind '" + kind + "'");
    }
    return make_algebra(std::move(blocks), ordering);
}

std::unique_ptr<SpectralConstraint> constraint_from_json(const json& j,
                                                         const AlgebraPtr& algebra) {
    if (!j.contains("constraint")) throw ConfigError("problem needs a 'constraint'");
    const json& c = j.at("constraint");
    const std::string type = c.value("type", "");
    if (type == "singleton")
        return std::make_unique<SingletonSpectrum>(algebra,
                                                   as_vector(c.at("spectrum"), "spectrum"));
    if (type == "vanishing_tail") {
        const int blocks = c.value("blocks", algebra->block_count());
        auto vt = std::make_unique<VanishingTail>(blocks, c.at("tight").get<int>());
        vt->validate(*algebra);
        return vt;
    }
    if (type == "none") {
        // Unconstrained spectra: projection is the identity on lambda(E).
        return std::make_unique<CustomSpectrum>(
            algebra->rank(), [](std::span<const double> v) {
                return std::vector<double>(v.begin(), v.end());
            });
    }
    throw ConfigError("unknown constraint type '" + type +
                      "' (use singleton, vanishing_tail, or none)");
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write '" + path.string() + "'");
    out << content;
}

int report_exit(int converged_count) {
    return converged_count > 0 ? kExitOk : kExitNoProgress;
}

}  // namespace

int cmd_iep(const IepCommand& cmd) {
    try {
        if (cmd.rho.empty()) throw ConfigError("iep needs at least one rho value");
        const Ordering ordering = parse_ordering(cmd.ordering);
        const int threads = thread_cap_from_env();
        fs::create_directories(cmd.out_dir);

        std::ostringstream csv;
        csv << "l,m,n,d,ordering,iter_mean,iter_max,iter_min,iter_std,"
               "restart_mean,restart_max,restart_min,restart_std,status\n";
        bool any_exhausted = false;
        for (double rho : cmd.rho) {
            IepCellParams params;
            params.sym_blocks = cmd.l;
            params.soc_blocks = cmd.m;
            params.n = cmd.n;
            params.rho = rho;
            params.ordering = ordering;
            params.seeds = cmd.seeds;
            params.master_seed = cmd.seed;
            params.solver = merge_solver(SolverConfig{}, cmd.solver);
            const IepCellResult cell = run_iep_campaign(params, threads);
            any_exhausted = any_exhausted || cell.budget_exceeded;
            csv << cell.sym_blocks << ',' << cell.soc_blocks << ',' << cell.n << ','
                << cell.d << ',' << ordering_name(cell.ordering) << ','
                << format_number(cell.iterations.mean) << ','
                << format_number(cell.iterations.max) << ','
                << format_number(cell.iterations.min) << ','
                << format_number(cell.iterations.stddev) << ','
                << format_number(cell.restarts.mean) << ','
                << format_number(cell.restarts.max) << ','
                << format_number(cell.restarts.min) << ','
                << format_number(cell.restarts.stddev) << ','
                << (cell.budget_exceeded ? "restart_budget_exceeded" : "ok") << '\n';
        }
        write_file(fs::path(cmd.out_dir) / "iep_results.csv", csv.str());
        return any_exhausted ? kExitRestartBudget : kExitOk;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
}

int cmd_ellipsoids(const EllipsoidsCommand& cmd) {
    try {
        const json j = load_json(cmd.instance_path);
        if (!j.contains("ellipsoids"))
            throw ConfigError("instance needs an 'ellipsoids' section");

        EllipsoidInstance inst;
        for (const json& e : j.at("ellipsoids")) {
            inst.Q.push_back(as_matrix(e.at("Q"), "Q"));
            inst.p.push_back(as_vector(e.at("p"), "p"));
        }
        inst.tight = j.value("tight", 0);
        const int n = inst.Q.empty() ? 0 : inst.Q[0].rows;

        std::vector<std::vector<double>> starts;
        if (j.contains("starts"))
            for (const json& s : j.at("starts")) {
                std::vector<double> x = as_vector(s, "start");
                if (static_cast<int>(x.size()) != n)
                    throw ConfigError("starts must have the variable dimension");
                starts.push_back(std::move(x));
            }
        if (j.contains("random_starts")) {
            const json& r = j.at("random_starts");
            const int count = r.at("count").get<int>();
            if (count < 0) throw ConfigError("random_starts.count must be nonnegative");
            std::vector<std::pair<double, double>> box(
                static_cast<std::size_t>(n), {-2.0, 2.0});
            if (r.contains("box")) {
                const Mat b = as_matrix(r.at("box"), "box");
                if (b.rows != n || b.cols != 2)
                    throw ConfigError("box must be an n x 2 array of bounds");
                for (int i = 0; i < n; ++i)
                    box[static_cast<std::size_t>(i)] = {b.at(i, 0), b.at(i, 1)};
            }
            Rng rng(derive_stream(cmd.seed, 0xe11ULL));
            for (int i = 0; i < count; ++i) {
                std::vector<double> x(static_cast<std::size_t>(n));
                for (int k = 0; k < n; ++k)
                    x[static_cast<std::size_t>(k)] =
                        rng.uniform(box[static_cast<std::size_t>(k)].first,
                                    box[static_cast<std::size_t>(k)].second);
                starts.push_back(std::move(x));
            }
        }
        if (starts.empty()) throw ConfigError("instance lists no starts");

        SolverConfig solver = merge_solver(SolverConfig{}, solver_from_json(j));
        solver = merge_solver(solver, cmd.solver);
        solver.record_iterates = true;

        const VqcProblem problem = build_ellipsoid_feasibility(inst);
        fs::create_directories(cmd.out_dir);

        int converged = 0;
        std::vector<std::vector<std::vector<double>>> trajectories;
        for (std::size_t s = 0; s < starts.size(); ++s) {
            const Element y0 = problem.lift.apply(starts[s]);
            const SolveReport rep =
                solve_feasibility(problem.affine, problem.constraint, y0, solver);
            if (rep.reason == Termination::Converged) ++converged;

            std::vector<std::vector<double>> traj;
            traj.reserve(rep.iterates.size());
            std::ostringstream csv;
            csv << "k";
            for (int c = 1; c <= n; ++c) csv << ",x" << c;
            csv << ",residual\n";
            for (std::size_t k = 0; k < rep.iterates.size(); ++k) {
                std::vector<double> x = recover_x(inst, rep.iterates[k]);
                csv << k;
                for (double v : x) csv << ',' << format_number(v);
                csv << ',' << format_number(rep.residuals[k]) << '\n';
                traj.push_back(std::move(x));
            }
            write_file(fs::path(cmd.out_dir) / ("trajectory_" + std::to_string(s) + ".csv"),
                       csv.str());
            trajectories.push_back(std::move(traj));

            std::cout << "start " << s << ": " << to_string(rep.reason) << " after "
                      << rep.iterations << " iterations, residual "
                      << format_number(rep.residuals.back()) << '\n';
        }

        if (cmd.svg) {
            if (n == 2)
                write_file(fs::path(cmd.out_dir) / "ellipsoids.svg",
                           render_ellipsoid_svg(inst, trajectories));
            else
                std::cerr << "note: --svg needs a two-dimensional instance, skipped\n";
        }
        return report_exit(converged);
    } catch (const json::exception& e) {
        std::cerr << "error: malformed instance: " << e.what() << '\n';
        return kExitConfig;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
}

int cmd_solve(const SolveCommand& cmd) {
    try {
        const json j = load_json(cmd.problem_path);
        if (!j.contains("algebra")) throw ConfigError("problem needs an 'algebra'");
        const AlgebraPtr algebra = algebra_from_json(j.at("algebra"));

        if (!j.contains("affine")) throw ConfigError("problem needs an 'affine' section");
        const json& aff = j.at("affine");
        std::vector<double> base = as_vector(aff.at("base"), "base");
        if (static_cast<int>(base.size()) != algebra->ambient_dim())
            throw ConfigError("affine base has the wrong dimension");
        std::vector<Element> span;
        if (aff.contains("span"))
            for (const json& s : aff.at("span")) {
                std::vector<double> v = as_vector(s, "span element");
                if (static_cast<int>(v.size()) != algebra->ambient_dim())
                    throw ConfigError("span element has the wrong dimension");
                span.emplace_back(algebra, std::move(v));
            }
        const AffineSet affine(Element(algebra, std::move(base)), std::move(span));

        const std::unique_ptr<SpectralConstraint> constraint =
            constraint_from_json(j, algebra);

        if (!j.contains("starts") || j.at("starts").empty())
            throw ConfigError("problem lists no starts");
        std::vector<Element> starts;
        for (const json& s : j.at("starts")) {
            std::vector<double> v = as_vector(s, "start");
            if (static_cast<int>(v.size()) != algebra->ambient_dim())
                throw ConfigError("start has the wrong dimension");
            starts.emplace_back(algebra, std::move(v));
        }

        SolverConfig solver = merge_solver(SolverConfig{}, solver_from_json(j));
        solver = merge_solver(solver, cmd.solver);

        fs::create_directories(cmd.out_dir);
        json runs = json::array();
        int converged = 0;
        for (std::size_t s = 0; s < starts.size(); ++s) {
            const SolveReport rep =
                solve_feasibility(affine, *constraint, starts[s], solver);
            if (rep.reason == Termination::Converged) ++converged;
            json run;
            run["start"] = s;
            run["reason"] = to_string(rep.reason);
            run["iterations"] = rep.iterations;
            run["final_residual"] = rep.residuals.back();
            run["residuals"] = rep.residuals;
            run["final_spectrum"] = eigen_map(rep.final_point);
            run["final_point"] = std::vector<double>(rep.final_point.data().begin(),
                                                     rep.final_point.data().end());
            runs.push_back(std::move(run));
            std::cout << "start " << s << ": " << to_string(rep.reason) << " after "
                      << rep.iterations << " iterations\n";
        }
        json report;
        report["runs"] = std::move(runs);
        write_file(fs::path(cmd.out_dir) / "solve_report.json", report.dump(2) + "\n");
        return report_exit(converged);
    } catch (const json::exception& e) {
        std::cerr << "error: malformed problem: " << e.what() << '\n';
        return kExitConfig;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
}

}  // namespace eigprog::cli
