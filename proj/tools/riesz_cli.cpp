// riesz: command-line driver for certification runs, operator-norm ratio
// validation, stationary-point analysis and extremal searches.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <riesz/certifier.hpp>
#include <riesz/claims.hpp>
#include <riesz/extremal.hpp>
#include <riesz/torus.hpp>
#include <riesz/version.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<double> parse_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
}

struct CertifyArgs {
    std::string claim;
    double p = 0.0;
    double s = 0.0;
    bool conjugate = false;
    bool list = false;
    int max_depth = 40;
    long max_boxes = 10'000'000;
    int workers = 1;
    std::string expect;
    bool stable = false;
    std::string out;
};

int run_certify(const CertifyArgs& a) {
    if (a.list) {
        std::cout << riesz::claim_catalog_json() << "\n";
        return kExitOk;
    }
    riesz::CertifierConfig cfg;
    cfg.max_depth = a.max_depth;
    cfg.max_boxes = a.max_boxes;

    std::vector<riesz::ExponentPair> grid;
    if (a.p > 0.0) {
        if (a.conjugate)
            grid.push_back(riesz::ExponentPair::conjugate_of(a.p));
        else if (a.s > 0.0)
            grid.push_back(riesz::ExponentPair::with_s(a.p, a.s));
        else {
            std::cerr << "certify: --p requires --s or --conjugate\n";
            return kExitUsage;
        }
    } else {
        grid = riesz::default_grid();
    }

    std::vector<riesz::Claim> selected;
    if (a.claim.empty()) {
        selected = riesz::claim_catalog();
    } else {
        for (const riesz::Claim* c : riesz::claims_by_prefix(a.claim)) selected.push_back(*c);
        if (selected.empty()) {
            std::cerr << "certify: unknown claim id " << a.claim << "\n";
            return kExitUsage;
        }
    }

    std::vector<riesz::Certificate> certs;
    if (a.p > 0.0) {
        // explicit pair: run the selected claims at exactly this pair
        for (const auto& c : selected) {
            bool needs_pair = riesz::fn_info(c.fn).uses_pair;
            certs.push_back(riesz::certify(
                c, needs_pair ? std::optional<riesz::ExponentPair>(grid[0]) : std::nullopt, cfg));
        }
    } else {
        certs = riesz::verify_all(selected, grid, cfg, a.workers);
    }

    for (const auto& c : certs) {
        std::cout << c.claim_id;
        if (c.pair) std::cout << " (p=" << c.pair->p << ", s=" << c.pair->s << ")";
        std::cout << ": " << riesz::to_string(c.verdict) << "  [boxes " << c.boxes_processed
                  << ", depth " << c.max_depth_reached;
        if (c.min_enclosure)
            std::cout << ", extremum in [" << c.min_enclosure->lo << ", " << c.min_enclosure->hi
                      << "]";
        if (c.counterexample) {
            std::cout << ", witness (";
            for (std::size_t i = 0; i < c.counterexample->point.size(); ++i)
                std::cout << (i ? ", " : "") << c.counterexample->point[i];
            std::cout << ") value " << c.counterexample->value;
        }
        std::cout << "]\n";
    }
    if (!a.out.empty()) write_file(a.out, riesz::certificates_json(certs, a.stable));

    if (!a.expect.empty()) {
        for (const auto& c : certs) {
            if (std::string(riesz::to_string(c.verdict)) != a.expect) {
                std::cerr << "expected " << a.expect << ", got " << riesz::to_string(c.verdict)
                          << " for " << c.claim_id << "\n";
                return c.verdict == riesz::Verdict::refuted ? kExitRefuted : kExitInconclusive;
            }
        }
        return kExitOk;
    }
    return riesz::batch_exit_status(certs);
}

int run_scan(const std::string& p_list, int trials, int degree, std::uint64_t seed,
             std::size_t grid, const std::string& out) {
    std::ostringstream csv;
    csv << riesz::norm_report_csv_header() << "\n";
    bool violation = false;
    csv.precision(17);
    for (double p : parse_list(p_list)) {
        riesz::ExponentPair pair = riesz::ExponentPair::conjugate_of(p);
        double c_fwd = p <= 2.0 ? riesz::sharp_constant_forward(pair) : 0.0;
        double c_rev = p >= 2.0 ? riesz::sharp_constant_reverse(pair) : 0.0;
        for (int k = 0; k < trials; ++k) {
            std::uint64_t s = seed + static_cast<std::uint64_t>(k);
            riesz::TorusFunction f = riesz::random_polynomial(degree, s);
            riesz::NormReport r = riesz::norm_report(f, pair, grid);
            csv << riesz::norm_report_csv_row(s, degree, r, pair) << "\n";
            if (p <= 2.0 && r.ratio_forward > c_fwd + 1e-9) violation = true;
            if (p >= 2.0 && r.ratio_reverse > c_rev + 1e-9) violation = true;
        }
    }
    if (!out.empty())
        write_file(out, csv.str());
    else
        std::cout << csv.str();
    if (violation) {
        std::cerr << "scan: a sampled ratio exceeded the theorem constant\n";
        return kExitRefuted;
    }
    return kExitOk;
}

int run_ratio(const std::string& coeffs, double p, double s, bool conjugate, std::size_t grid) {
    riesz::TorusFunction f = riesz::coefficients_from_json(read_file(coeffs));
    riesz::ExponentPair pair = conjugate ? riesz::ExponentPair::conjugate_of(p)
                                         : riesz::ExponentPair::with_s(p, s);
    riesz::NormReport r = riesz::norm_report(f, pair, grid);
    std::cout.precision(17);
    std::cout << "p = " << r.p << "\ns = " << r.s << "\nlp_norm = " << r.lp_norm_f
              << "\nmixed_norm = " << r.mixed_norm << "\nratio_forward = " << r.ratio_forward
              << "\nratio_reverse = " << r.ratio_reverse << "\ngrid = " << r.grid_size << "\n";
    if (pair.p <= 2.0)
        std::cout << "C_forward = " << riesz::sharp_constant_forward(pair) << "\n";
    if (pair.p >= 2.0)
        std::cout << "C_reverse = " << riesz::sharp_constant_reverse(pair) << "\n";
    return kExitOk;
}

int run_extremize(double p, const std::string& direction, int degree, long budget,
                  std::uint64_t seed, int restarts, const std::string& out) {
    riesz::ExponentPair pair = riesz::ExponentPair::conjugate_of(p);
    riesz::Direction dir;
    if (direction == "fwd" || direction == "forward")
        dir = riesz::Direction::forward;
    else if (direction == "rev" || direction == "reverse")
        dir = riesz::Direction::reverse;
    else {
        std::cerr << "extremize: --direction must be fwd or rev\n";
        return kExitUsage;
    }
    riesz::SearchConfig cfg;
    cfg.restarts = restarts;
    riesz::SearchState st = riesz::maximize_ratio(pair, degree, dir, budget, seed, cfg);
    double c = dir == riesz::Direction::forward ? riesz::sharp_constant_forward(pair)
                                                : riesz::sharp_constant_reverse(pair);
    std::cout.precision(17);
    std::cout << "p = " << pair.p << ", s = " << pair.s << "\nbest_ratio = " << st.best_ratio
              << "\nconstant = " << c << "\nfraction = " << st.best_ratio / c
              << "\nevaluations = " << st.iterations << "\n";
    if (st.best_ratio > c + 1e-9) {
        std::cerr << "extremize: ratio exceeds the theorem constant (bug)\n";
        return kExitRefuted;
    }
    if (!out.empty()) write_file(out, riesz::coefficients_json(st.best));
    return kExitOk;
}

int run_stationary(double p, double s, bool conjugate, double tol) {
    riesz::ExponentPair pair = conjugate ? riesz::ExponentPair::conjugate_of(p)
                                         : riesz::ExponentPair::with_s(p, s);
    auto roots = riesz::find_roots(riesz::FnId::stationary_residual,
                                   riesz::Interval(1e-4, 1.0 - 1e-9), pair, tol);
    std::cout.precision(17);
    std::cout << "stationary points of F' for p = " << pair.p << ", s = " << pair.s << ":\n";
    if (roots.empty()) std::cout << "  (no sign change found on (0,1))\n";
    for (const auto& root : roots) {
        std::vector<riesz::Interval> xs{riesz::Interval(root.mid())};
        riesz::Interval f_val = riesz::eval_fn<riesz::Interval>(riesz::FnId::big_F, xs, &pair);
        std::cout << "  r in [" << root.lo << ", " << root.hi << "] (width " << root.width()
                  << ")\n    F(r) in [" << f_val.lo << ", " << f_val.hi << "]\n";
    }
    return kExitOk;
}

int run_report(const std::string& dir) {
    namespace fs = std::filesystem;
    std::vector<nlohmann::json> certs;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& path : files) {
        nlohmann::json j = nlohmann::json::parse(read_file(path.string()));
        if (j.is_array())
            for (auto& e : j) certs.push_back(e);
        else
            certs.push_back(j);
    }
    int exit = kExitOk;
    std::printf("%-10s %-8s %-8s %-14s %s\n", "claim", "p", "s", "verdict", "citation");
    for (const auto& c : certs) {
        std::string id = c.value("claim_id", "?");
        std::string citation;
        try {
            citation = riesz::claim_by_id(id).citation;
        } catch (const std::exception&) {
            citation = "(not in catalog)";
        }
        std::string verdict = c.value("verdict", "?");
        std::string p = c.contains("p") && !c["p"].is_null() ? std::to_string(c["p"].get<double>())
                                                             : "-";
        std::string s = c.contains("s") && !c["s"].is_null() ? std::to_string(c["s"].get<double>())
                                                             : "-";
        if (p.size() > 7) p.resize(7);
        if (s.size() > 7) s.resize(7);
        std::printf("%-10s %-8s %-8s %-14s %s\n", id.c_str(), p.c_str(), s.c_str(),
                    verdict.c_str(), citation.c_str());
        if (verdict == "refuted") exit = std::max(exit, kExitRefuted);
        if (verdict == "inconclusive") exit = std::max(exit, kExitInconclusive);
        if (c.contains("exceptions"))
            for (const auto& e : c["exceptions"])
                std::printf("           note: %s\n", e.get<std::string>().c_str());
    }
    return exit;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rigorous certification of sharp Riesz-projection inequalities"};
    app.set_version_flag("--version", riesz::kToolVersion);
    app.require_subcommand(1);

    CertifyArgs cert_args;
    auto* certify = app.add_subcommand("certify", "certify catalog claims by branch & bound");
    certify->add_option("--claim", cert_args.claim, "claim id (prefix match, e.g. C12)");
    certify->add_option("--p", cert_args.p, "Lebesgue exponent p");
    certify->add_option("--s", cert_args.s, "mixing exponent s");
    certify->add_flag("--conjugate", cert_args.conjugate, "use s = p/(p-1)");
    certify->add_flag("--list", cert_args.list, "print the claim catalog as JSON and exit");
    certify->add_option("--max-depth", cert_args.max_depth, "bisection depth budget");
    certify->add_option("--max-boxes", cert_args.max_boxes, "box count budget");
    certify->add_option("--workers", cert_args.workers, "parallel claim instances");
    certify->add_option("--expect", cert_args.expect, "expected verdict (proved|refuted|inconclusive)")
        ->check(CLI::IsMember({"proved", "refuted", "inconclusive"}));
    certify->add_flag("--stable-output", cert_args.stable,
                      "omit elapsed_ms and tool_version from JSON");
    certify->add_option("--out", cert_args.out, "certificate JSON output path");

    std::string scan_p_list, scan_out;
    int scan_trials = 100, scan_degree = 16;
    std::uint64_t scan_seed = 1;
    std::size_t scan_grid = 0;
    auto* scan = app.add_subcommand("scan", "validate the norm inequalities on random polynomials");
    scan->add_option("--p-list", scan_p_list, "comma-separated p values")->required();
    scan->add_option("--trials", scan_trials, "samples per p");
    scan->add_option("--degree", scan_degree, "polynomial degree N");
    scan->add_option("--seed", scan_seed, "base RNG seed");
    scan->add_option("--grid", scan_grid, "quadrature grid size (power of two)");
    scan->add_option("--out", scan_out, "CSV output path");

    std::string ratio_coeffs;
    double ratio_p = 0.0, ratio_s = 0.0;
    bool ratio_conj = false;
    std::size_t ratio_grid = 0;
    auto* ratio = app.add_subcommand("ratio", "norm report for a stored coefficient file");
    ratio->add_option("--coeffs", ratio_coeffs, "coefficient JSON file")->required();
    ratio->add_option("--p", ratio_p, "Lebesgue exponent p")->required();
    ratio->add_option("--s", ratio_s, "mixing exponent s");
    ratio->add_flag("--conjugate", ratio_conj, "use s = p/(p-1)");
    ratio->add_option("--grid", ratio_grid, "quadrature grid size (power of two)");

    double ext_p = 0.0;
    std::string ext_dir = "fwd", ext_out;
    int ext_degree = 16, ext_restarts = 8;
    long ext_budget = 20000;
    std::uint64_t ext_seed = 7;
    auto* ext = app.add_subcommand("extremize", "search for near-extremal polynomials");
    ext->add_option("--p", ext_p, "Lebesgue exponent p (conjugate s implied)")->required();
    ext->add_option("--direction", ext_dir, "fwd or rev");
    ext->add_option("--degree", ext_degree, "polynomial degree N");
    ext->add_option("--budget", ext_budget, "objective evaluation budget");
    ext->add_option("--seed", ext_seed, "RNG seed");
    ext->add_option("--restarts", ext_restarts, "independent restarts");
    ext->add_option("--out", ext_out, "save the best coefficients as JSON");

    double st_p = 0.0, st_s = 0.0, st_tol = 1e-10;
    bool st_conj = false;
    auto* stat = app.add_subcommand("stationary", "bracket the stationary equation roots");
    stat->add_option("--p", st_p, "Lebesgue exponent p")->required();
    stat->add_option("--s", st_s, "mixing exponent s");
    stat->add_flag("--conjugate", st_conj, "use s = p/(p-1)");
    stat->add_option("--tol", st_tol, "bracket width tolerance");

    std::string report_dir;
    auto* report = app.add_subcommand("report", "summarize stored certificate JSON files");
    report->add_option("--in", report_dir, "directory of certificate JSON files")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (certify->parsed()) return run_certify(cert_args);
        if (scan->parsed())
            return run_scan(scan_p_list, scan_trials, scan_degree, scan_seed, scan_grid, scan_out);
        if (ratio->parsed()) {
            if (!ratio_conj && ratio_s <= 0.0) {
                std::cerr << "ratio: --p requires --s or --conjugate\n";
                return kExitUsage;
            }
            return run_ratio(ratio_coeffs, ratio_p, ratio_s, ratio_conj, ratio_grid);
        }
        if (ext->parsed())
            return run_extremize(ext_p, ext_dir, ext_degree, ext_budget, ext_seed, ext_restarts,
                                 ext_out);
        if (stat->parsed()) {
            if (!st_conj && st_s <= 0.0) {
                std::cerr << "stationary: --p requires --s or --conjugate\n";
                return kExitUsage;
            }
            return run_stationary(st_p, st_s, st_conj, st_tol);
        }
        if (report->parsed()) return run_report(report_dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRefuted;
    }
    return kExitUsage;
}
