#include "ilz/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ilz/arakelov.hpp"
#include "ilz/characters.hpp"
#include "ilz/epstein.hpp"
#include "ilz/errors.hpp"
#include "ilz/gamma_mellin.hpp"
#include "ilz/hecke.hpp"
#include "ilz/lattice.hpp"
#include "ilz/packing.hpp"

namespace ilz {

namespace {

using nlohmann::ordered_json;

std::string fmt12(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

/// One tabular result: formatted cells for table/csv, typed payload for json.
struct Report {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    ordered_json payload;
};

void render_table(const Report& r, std::ostream& os) {
    std::vector<std::size_t> w(r.columns.size());
    for (std::size_t j = 0; j < r.columns.size(); ++j) w[j] = r.columns[j].size();
    for (const auto& row : r.rows)
        for (std::size_t j = 0; j < row.size(); ++j) w[j] = std::max(w[j], row[j].size());
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t j = 0; j < cells.size(); ++j) {
            os << cells[j];
            if (j + 1 < cells.size()) os << std::string(w[j] - cells[j].size() + 2, ' ');
        }
        os << '\n';
    };
    line(r.columns);
    std::size_t total = 0;
    for (std::size_t j = 0; j < w.size(); ++j) total += w[j] + (j + 1 < w.size() ? 2 : 0);
    os << std::string(total, '-') << '\n';
    for (const auto& row : r.rows) line(row);
}

void render_csv(const Report& r, std::ostream& os) {
    for (std::size_t j = 0; j < r.columns.size(); ++j)
        os << r.columns[j] << (j + 1 < r.columns.size() ? "," : "");
    os << '\n';
    for (const auto& row : r.rows) {
        for (std::size_t j = 0; j < row.size(); ++j)
            os << row[j] << (j + 1 < row.size() ? "," : "");
        os << '\n';
    }
}

Complex parse_complex(const std::string& text) {
    std::istringstream in(text);
    double re = 0.0, im = 0.0;
    char comma = 0;
    if (!(in >> re)) throw CLI::ValidationError("--s", "expected RE or RE,IM");
    if (in >> comma) {
        if (comma != ',' || !(in >> im))
            throw CLI::ValidationError("--s", "expected RE or RE,IM");
    }
    return {re, im};
}

LatticeGram read_gram(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("FileError", "cannot open gram file " + path);
    long d = 0;
    if (!(in >> d) || d <= 0)
        throw DimensionMismatch("gram file must start with a positive dimension");
    Eigen::MatrixXd G(d, d);
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j)
            if (!(in >> G(i, j)))
                throw DimensionMismatch("gram file ended before " + std::to_string(d) + "x" +
                                        std::to_string(d) + " entries");
    return LatticeGram(G);
}

ordered_json json_skeleton(const std::string& command) {
    ordered_json j;
    j["schema"] = 1;
    j["command"] = command;
    return j;
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"Average point counts of random ideal lattices: zeta backends, "
                 "Monte Carlo checks, and packing certificates"};
    app.require_subcommand(1);

    std::string format = "table";
    std::string out_path;
    long threads = 0;
    unsigned long long seed = 1;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "Write output to a file instead of stdout");
    app.add_option("--threads", threads,
                   "Worker threads (0: take ILZ_THREADS if set, else 1)");
    app.add_option("--seed", seed, "Default RNG seed for sampling commands")
        ->capture_default_str();

    std::optional<Report> report;

    // field-info n
    {
        auto* sub = app.add_subcommand("field-info", "Invariants of Q(zeta_n)");
        auto n = std::make_shared<long>(0);
        sub->add_option("n", *n, "Cyclotomic index")->required();
        sub->callback([&report, n] {
            auto K = create_field(*n);
            Report r;
            r.columns = {"n", "degree", "r2", "abs_disc", "torsion_order", "allowlisted"};
            r.rows = {{std::to_string(K.n()), std::to_string(K.degree()),
                       std::to_string(K.r2()), K.abs_disc().get_str(),
                       std::to_string(K.torsion_order()),
                       field_allowlisted(K.n()) ? "yes" : "no"}};
            auto j = json_skeleton("field-info");
            j["result"] = {{"n", K.n()},
                           {"degree", K.degree()},
                           {"r2", K.r2()},
                           {"abs_disc", K.abs_disc().get_str()},
                           {"torsion_order", K.torsion_order()},
                           {"allowlisted", field_allowlisted(K.n())}};
            r.payload = std::move(j);
            report = std::move(r);
        });
    }

    // zeta n --s RE[,IM]
    {
        auto* sub = app.add_subcommand("zeta", "Dedekind zeta of Q(zeta_n)");
        auto n = std::make_shared<long>(0);
        auto s_text = std::make_shared<std::string>("2");
        sub->add_option("n", *n, "Cyclotomic index")->required();
        sub->add_option("--s", *s_text, "Evaluation point RE or RE,IM")->capture_default_str();
        sub->callback([&report, n, s_text] {
            Complex s = parse_complex(*s_text);
            auto K = create_field(*n);
            Complex z = dedekind_zeta(K, s);
            Report r;
            r.columns = {"n", "re_s", "im_s", "re", "im", "abs"};
            r.rows = {{std::to_string(*n), fmt12(s.real()), fmt12(s.imag()), fmt12(z.real()),
                       fmt12(z.imag()), fmt12(std::abs(z))}};
            auto j = json_skeleton("zeta");
            j["params"] = {{"n", *n}, {"re_s", s.real()}, {"im_s", s.imag()}};
            j["result"] = {{"re", z.real()}, {"im", z.imag()}, {"abs", std::abs(z)}};
            r.payload = std::move(j);
            report = std::move(r);
        });
    }

    // epstein --gram FILE --s RE[,IM]
    {
        auto* sub = app.add_subcommand("epstein", "Analytically continued Epstein zeta");
        auto path = std::make_shared<std::string>();
        auto s_text = std::make_shared<std::string>();
        sub->add_option("--gram", *path, "Gram matrix file: first line d, then d rows")
            ->required();
        sub->add_option("--s", *s_text, "Evaluation point RE or RE,IM")->required();
        sub->callback([&report, path, s_text] {
            Complex s = parse_complex(*s_text);
            LatticeGram L = read_gram(*path);
            Complex z = epstein_continued(L, s);
            Report r;
            r.columns = {"d", "covolume", "re_s", "im_s", "re", "im"};
            r.rows = {{std::to_string(L.dim()), fmt12(L.covolume()), fmt12(s.real()),
                       fmt12(s.imag()), fmt12(z.real()), fmt12(z.imag())}};
            auto j = json_skeleton("epstein");
            j["params"] = {{"d", L.dim()},
                           {"covolume", L.covolume()},
                           {"re_s", s.real()},
                           {"im_s", s.imag()}};
            j["result"] = {{"re", z.real()}, {"im", z.imag()}};
            r.payload = std::move(j);
            report = std::move(r);
        });
    }

    // hecke-check n --s S --samples N --seed X
    {
        auto* sub = app.add_subcommand(
            "hecke-check", "Monte Carlo average of Epstein zeta against the closed form");
        auto n = std::make_shared<long>(0);
        auto s = std::make_shared<double>(2.0);
        auto samples = std::make_shared<long>(2000);
        auto local_seed = std::make_shared<long long>(-1);
        sub->add_option("n", *n, "Cyclotomic index")->required();
        sub->add_option("--s", *s, "Real evaluation point, s > 1")->capture_default_str();
        sub->add_option("--samples", *samples, "Monte Carlo samples")->capture_default_str();
        sub->add_option("--seed", *local_seed, "RNG seed (defaults to global --seed)");
        sub->callback([&report, &seed, n, s, samples, local_seed] {
            auto used_seed =
                *local_seed < 0 ? seed : static_cast<unsigned long long>(*local_seed);
            auto K = create_field(*n);
            auto mc = hecke_lhs_mc(K, *s, *samples, used_seed);
            double rhs = hecke_rhs(K, *s);
            double diff = mc.mean - rhs;
            double z = mc.stderr_ > 0.0 ? diff / mc.stderr_ : (diff == 0.0 ? 0.0 : HUGE_VAL);
            Report r;
            r.columns = {"n", "s", "samples", "seed", "lhs_mean", "lhs_stderr", "rhs", "z_score"};
            r.rows = {{std::to_string(*n), fmt12(*s), std::to_string(*samples),
                       std::to_string(used_seed), fmt12(mc.mean), fmt12(mc.stderr_), fmt12(rhs),
                       fmt12(z)}};
            auto j = json_skeleton("hecke-check");
            j["params"] = {{"n", *n}, {"s", *s}, {"samples", *samples}, {"seed", used_seed}};
            j["result"] = {{"lhs_mean", mc.mean},
                           {"lhs_stderr", mc.stderr_},
                           {"rhs", rhs},
                           {"z_score", z}};
            r.payload = std::move(j);
            report = std::move(r);
        });
    }

    // mean-count n --volume V --samples N --seed X
    {
        auto* sub = app.add_subcommand("mean-count",
                                       "Monte Carlo mean lattice-point count in a ball");
        auto n = std::make_shared<long>(0);
        auto volume = std::make_shared<double>(1.0);
        auto samples = std::make_shared<long>(1000);
        auto local_seed = std::make_shared<long long>(-1);
        sub->add_option("n", *n, "Cyclotomic index")->required();
        sub->add_option("--volume", *volume, "Ball volume")->capture_default_str();
        sub->add_option("--samples", *samples, "Monte Carlo samples")->capture_default_str();
        sub->add_option("--seed", *local_seed, "RNG seed (defaults to global --seed)");
        sub->callback([&report, &seed, n, volume, samples, local_seed] {
            auto used_seed =
                *local_seed < 0 ? seed : static_cast<unsigned long long>(*local_seed);
            auto K = create_field(*n);
            auto mc = mean_count_mc(K, *volume, *samples, used_seed);
            Report r;
            r.columns = {"n", "volume", "samples", "seed", "mean", "stderr"};
            r.rows = {{std::to_string(*n), fmt12(*volume), std::to_string(mc.samples),
                       std::to_string(used_seed), fmt12(mc.mean), fmt12(mc.stderr_)}};
            auto j = json_skeleton("mean-count");
            j["params"] = {{"n", *n},
                           {"volume", *volume},
                           {"samples", mc.samples},
                           {"seed", used_seed}};
            j["result"] = {{"mean", mc.mean}, {"stderr", mc.stderr_}};
            r.payload = std::move(j);
            report = std::move(r);
        });
    }

    // error-term n --volume V --sigma S --tmax T
    {
        auto* sub = app.add_subcommand("error-term",
                                       "Contour quadrature of the mean-count error term");
        auto n = std::make_shared<long>(0);
        auto volume = std::make_shared<double>(-1.0);
        auto sigma = std::make_shared<double>(0.5);
        auto tmax = std::make_shared<double>(60.0);
        sub->add_option("n", *n, "Cyclotomic index")->required();
        sub->add_option("--volume", *volume, "Ball volume (default: n)");
        sub->add_option("--sigma", *sigma, "Contour abscissa in [1/2, 1)")->capture_default_str();
        sub->add_option("--tmax", *tmax, "Contour truncation height")->capture_default_str();
        sub->callback([&report, n, volume, sigma, tmax] {
            auto K = create_field(*n);
            double V = *volume < 0.0 ? static_cast<double>(*n) : *volume;
            auto res = error_term(K, V, *sigma, *tmax);
            Report r;
            r.columns = {"n",          "volume",         "sigma",      "tmax",
                         "epsilon",    "quad_error_est", "tail_bound", "n_nodes",
                         "im_residual"};
            r.rows = {{std::to_string(*n), fmt12(V), fmt12(res.sigma), fmt12(res.T),
                       fmt12(res.epsilon), fmt12(res.quad_error_est), fmt12(res.tail_bound),
                       std::to_string(res.n_nodes), fmt12(res.im_residual)}};
            auto j = json_skeleton("error-term");
            j["params"] = {{"n", *n}, {"volume", V}, {"sigma", res.sigma}, {"tmax", res.T}};
            j["result"] = {{"epsilon", res.epsilon},
                           {"quad_error_est", res.quad_error_est},
                           {"tail_bound", res.tail_bound},
                           {"n_nodes", res.n_nodes},
                           {"im_residual", res.im_residual}};
            r.payload = std::move(j);
            report = std::move(r);
        });
    }

    // packing-certify n --margin M
    {
        auto* sub = app.add_subcommand("packing-certify",
                                       "Certified ball-volume lower bound from the mod-n gap");
        auto n = std::make_shared<long>(0);
        auto margin = std::make_shared<double>(-1.0);
        sub->add_option("n", *n, "Cyclotomic index")->required();
        sub->add_option("--margin", *margin, "Safety margin (default: 0.01 n)");
        sub->callback([&report, n, margin] {
            auto K = create_field(*n);
            auto cert = certified_volume_bound(K, *margin);
            double res = dedekind_residue(K);
            double floor = stark_floor(K);
            Report r;
            r.columns = {"n",          "v_star", "epsilon",     "quad_error_est",
                         "tail_bound", "margin", "sigma",       "tmax",
                         "residue",    "stark_floor", "certificate"};
            r.rows = {{std::to_string(*n), fmt12(cert.v_star), fmt12(cert.epsilon),
                       fmt12(cert.quad_error_est), fmt12(cert.tail_bound), fmt12(cert.margin),
                       fmt12(cert.sigma), fmt12(cert.T), fmt12(res), fmt12(floor),
                       "numerical"}};
            auto j = json_skeleton("packing-certify");
            j["params"] = {{"n", *n}, {"margin", cert.margin}};
            j["result"] = {{"v_star", cert.v_star},
                           {"epsilon", cert.epsilon},
                           {"quad_error_est", cert.quad_error_est},
                           {"tail_bound", cert.tail_bound},
                           {"sigma", cert.sigma},
                           {"tmax", cert.T},
                           {"residue", res},
                           {"stark_floor", floor},
                           {"certificate", "numerical"}};
            r.payload = std::move(j);
            report = std::move(r);
        });
    }

    // primorial-table --kmax K
    {
        auto* sub = app.add_subcommand("primorial-table",
                                       "Primorial dimensions maximizing n / phi(n)");
        auto kmax = std::make_shared<long>(15);
        sub->add_option("--kmax", *kmax, "Number of rows")->capture_default_str();
        sub->callback([&report, kmax] {
            auto rows = primorial_table(*kmax);
            Report r;
            r.columns = {"k", "n", "phi", "ratio", "phi_loglog"};
            auto j = json_skeleton("primorial-table");
            j["params"] = {{"kmax", *kmax}};
            j["rows"] = ordered_json::array();
            for (const auto& row : rows) {
                r.rows.push_back({std::to_string(row.k), std::to_string(row.n),
                                  std::to_string(row.phi), fmt12(row.ratio),
                                  fmt12(row.phi_loglog)});
                j["rows"].push_back({{"k", row.k},
                                     {"n", row.n},
                                     {"phi", row.phi},
                                     {"ratio", row.ratio},
                                     {"phi_loglog", row.phi_loglog}});
            }
            r.payload = std::move(j);
            report = std::move(r);
        });
    }

    // gamma-bound --rmax R --tmax T
    {
        auto* sub = app.add_subcommand("gamma-bound",
                                       "Fit the critical-line gamma-ratio constant C");
        auto rmax = std::make_shared<long>(64);
        auto tmax = std::make_shared<double>(100.0);
        sub->add_option("--rmax", *rmax, "Largest ratio order")->capture_default_str();
        sub->add_option("--tmax", *tmax, "Largest grid height")->capture_default_str();
        sub->callback([&report, rmax, tmax] {
            auto cfg = fit_gamma_ratio_bound(*rmax, *tmax, 0.1);
            Report r;
            r.columns = {"rmax", "tmax", "t_step", "C", "fitted_over"};
            r.rows = {{std::to_string(*rmax), fmt12(*tmax), fmt12(0.1), fmt12(cfg.C),
                       cfg.fitted_over}};
            auto j = json_skeleton("gamma-bound");
            j["params"] = {{"rmax", *rmax}, {"tmax", *tmax}, {"t_step", 0.1}};
            j["result"] = {{"C", cfg.C}, {"fitted_over", cfg.fitted_over}};
            r.payload = std::move(j);
            report = std::move(r);
        });
    }

    // subconvexity-profile n --tmax T
    {
        auto* sub = app.add_subcommand(
            "subconvexity-profile",
            "Critical-line |zeta_K| against convexity-shaped curves (descriptive)");
        auto n = std::make_shared<long>(0);
        auto tmax = std::make_shared<double>(30.0);
        auto points = std::make_shared<long>(61);
        sub->add_option("n", *n, "Cyclotomic index")->required();
        sub->add_option("--tmax", *tmax, "Largest height, at most 200")->capture_default_str();
        sub->add_option("--points", *points, "Grid points from 0 to tmax")
            ->capture_default_str();
        sub->callback([&report, n, tmax, points] {
            if (*points < 1) throw DimensionMismatch("profile needs at least one grid point");
            auto K = create_field(*n);
            std::vector<double> grid;
            for (long i = 0; i < *points; ++i)
                grid.push_back(*points == 1 ? 0.0
                                            : *tmax * static_cast<double>(i) /
                                                  static_cast<double>(*points - 1));
            auto rows = subconvexity_profile(K, grid);
            Report r;
            r.columns = {"t", "zeta_abs", "convexity_curve", "py_curve"};
            auto j = json_skeleton("subconvexity-profile");
            j["params"] = {{"n", *n}, {"tmax", *tmax}, {"points", *points}};
            j["rows"] = ordered_json::array();
            for (const auto& row : rows) {
                r.rows.push_back({fmt12(row.t), fmt12(row.zeta_abs),
                                  fmt12(row.convexity_curve), fmt12(row.py_curve)});
                j["rows"].push_back({{"t", row.t},
                                     {"zeta_abs", row.zeta_abs},
                                     {"convexity_curve", row.convexity_curve},
                                     {"py_curve", row.py_curve}});
            }
            r.payload = std::move(j);
            report = std::move(r);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << e.name() << ": " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    if (threads == 0) {
        if (const char* env = std::getenv("ILZ_THREADS")) threads = std::atol(env);
        if (threads <= 0) threads = 1;
    }
    (void)threads;  // primitives run sequentially; output never depends on this

    if (!report) return 2;
    std::ostringstream buf;
    if (format == "json")
        buf << report->payload.dump(2) << '\n';
    else if (format == "csv")
        render_csv(*report, buf);
    else
        render_table(*report, buf);

    if (out_path.empty()) {
        std::cout << buf.str();
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << '\n';
            return 1;
        }
        out << buf.str();
    }
    return 0;
}

}  // namespace ilz
