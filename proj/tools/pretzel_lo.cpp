// Command-line front end: lemma suites, theta computation, path sweeps,
// slope certification, and coverage summaries, as CSV or JSON.

#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pretzel/certify.hpp"
#include "pretzel/lemma_suite.hpp"

using json = nlohmann::json;
using namespace pretzel;

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct OutStream {
    std::ofstream file;
    std::ostream& os;
    explicit OutStream(const std::string& path)
        : file(), os(path.empty() ? std::cout : (file.open(path), file)) {
        if (!path.empty() && !file)
            throw std::runtime_error("cannot open output file: " + path);
    }
};

bool parse_slope(const std::string& text, long& m, long& l) {
    std::istringstream in(text);
    if (!(in >> m)) return false;
    l = 1;
    if (in.peek() == '/') {
        in.get();
        if (!(in >> l)) return false;
    }
    std::string rest;
    return !(in >> rest);
}

int cmd_lemmas(int n, int samples, const std::string& format, const std::string& out_path) {
    const auto rows = run_lemma_suite(n, samples);
    OutStream out(out_path);
    bool all_pass = true;
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
            arr.push_back({{"name", r.name},
                           {"detail", r.detail},
                           {"residual", r.residual},
                           {"pass", r.pass}});
            all_pass = all_pass && r.pass;
        }
        out.os << arr.dump(2) << "\n";
    } else if (format == "csv") {
        out.os << "name,detail,residual,pass\n";
        for (const auto& r : rows) {
            out.os << "\"" << r.name << "\",\"" << r.detail << "\"," << fmt17(r.residual)
                   << "," << (r.pass ? "true" : "false") << "\n";
            all_pass = all_pass && r.pass;
        }
    } else {
        for (const auto& r : rows) {
            char line[160];
            std::snprintf(line, sizeof(line), "%-34s %s  max residual %.6e\n", r.name.c_str(),
                          r.pass ? "PASS" : "FAIL", r.residual);
            out.os << line;
            all_pass = all_pass && r.pass;
        }
        out.os << (all_pass ? "all rows pass\n" : "FAILURES present\n");
    }
    return all_pass ? 0 : 1;
}

int cmd_theta(int n, double tol, const std::string& format, const std::string& out_path) {
    const ThetaRoot root = find_theta_n(n, tol);
    const KnotParams kp = knot_params(n);
    OutStream out(out_path);
    if (format == "json") {
        json obj = {{"n", n},
                    {"theta_n", root.theta_n},
                    {"alpha_n", kp.alpha},
                    {"beta_n", kp.beta},
                    {"gamma_n", kp.gamma},
                    {"bracket_width", root.hi - root.lo},
                    {"residual_f", root.residual_f},
                    {"residual_alexander", root.residual_delta}};
        out.os << obj.dump(2) << "\n";
    } else {
        auto line = [&](const char* name, double v) {
            out.os << name << " = " << fmt17(v) << "\n";
        };
        out.os << "n = " << n << "\n";
        line("theta_n", root.theta_n);
        line("alpha_n", kp.alpha);
        line("beta_n", kp.beta);
        line("gamma_n", kp.gamma);
        line("bracket_width", root.hi - root.lo);
        line("residual_f", root.residual_f);
        line("residual_alexander", root.residual_delta);
    }
    return 0;
}

int cmd_sweep(int n, Branch branch, int samples, const std::string& format,
              const std::string& out_path) {
    const auto points = sweep(n, branch, samples);
    OutStream out(out_path);
    if (format == "json") {
        json arr = json::array();
        for (const auto& p : points) {
            json obj = {{"theta", p.theta},
                        {"y", p.coords.y},
                        {"x", p.coords.x},
                        {"z", p.coords.z},
                        {"s", p.coords.s},
                        {"r", p.coords.r},
                        {"C", p.C},
                        {"D", p.D},
                        {"d2c2", p.d2c2},
                        {"G", p.G},
                        {"phi", p.phi},
                        {"varphi", p.varphi},
                        {"slope", p.slope},
                        {"abs_L_minus_1_formula_vs_matrix", p.l_route_gap}};
            if (p.excluded) obj["excluded"] = true;
            arr.push_back(std::move(obj));
        }
        out.os << arr.dump(2) << "\n";
    } else {
        out.os << "theta,y,x,z,s,r,C,D,d2c2,G,phi,varphi,slope,"
                  "abs_L_minus_1_formula_vs_matrix\n";
        for (const auto& p : points) {
            out.os << fmt17(p.theta) << ',' << fmt17(p.coords.y) << ',' << fmt17(p.coords.x)
                   << ',' << fmt17(p.coords.z) << ',' << fmt17(p.coords.s) << ','
                   << fmt17(p.coords.r) << ',' << fmt17(p.C) << ',' << fmt17(p.D) << ','
                   << fmt17(p.d2c2) << ',' << fmt17(p.G) << ',' << fmt17(p.phi) << ','
                   << fmt17(p.varphi) << ',' << fmt17(p.slope) << ','
                   << fmt17(p.l_route_gap) << "\n";
        }
    }
    return 0;
}

json certificate_json(const SlopeCertificate& cert) {
    return {{"n", cert.n},
            {"m", cert.m},
            {"l", cert.l},
            {"branch", branch_name(cert.branch)},
            {"theta_star", cert.theta_star},
            {"h_residual", cert.h_residual},
            {"matrix_residual", cert.matrix_residual},
            {"tolerance", cert.tolerance},
            {"paper_bound", knot_params(cert.n).certified_bound}};
}

int cmd_certify(int n, long m, long l, double tol, bool force, const std::string& out_path) {
    const SlopeCertificate cert = certify_slope(n, m, l, tol, force);
    OutStream out(out_path);
    out.os << certificate_json(cert).dump(2) << "\n";
    return 0;
}

int cmd_coverage(const std::vector<int>& ns, int samples, const std::string& format,
                 const std::string& out_path) {
    std::vector<CoverageReport> reports(ns.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= ns.size()) return;
            reports[i] = coverage_report(ns[static_cast<std::size_t>(i)], samples);
        }
    };
    const unsigned workers =
        std::min<unsigned>(worker_count(), static_cast<unsigned>(ns.size()));
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    OutStream out(out_path);
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : reports)
            arr.push_back({{"n", r.n},
                           {"certified_bound", r.certified_bound},
                           {"lspace_bound", r.lspace_bound},
                           {"plus_slope_min", r.plus_slope_min},
                           {"plus_slope_max", r.plus_slope_max},
                           {"minus_slope_min", r.minus_slope_min},
                           {"minus_slope_max", r.minus_slope_max}});
        out.os << arr.dump(2) << "\n";
    } else {
        out.os << "n,certified_bound,lspace_bound,plus_slope_min,plus_slope_max,"
                  "minus_slope_min,minus_slope_max\n";
        for (const auto& r : reports)
            out.os << r.n << ',' << r.certified_bound << ',' << r.lspace_bound << ','
                   << fmt17(r.plus_slope_min) << ',' << fmt17(r.plus_slope_max) << ','
                   << fmt17(r.minus_slope_min) << ',' << fmt17(r.minus_slope_max) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"representation paths and surgery slope certificates for the "
                 "(-2,3,2n+1) pretzel knot family"};
    app.require_subcommand(1);

    int n = 0;
    std::vector<int> ns;
    std::string slope_text;
    std::string branch_text = "plus";
    int samples = 1000;
    double tol = 1e-12;
    std::string format;
    std::string out_path;
    bool force = false;

    auto add_common = [&](CLI::App* sub, bool needs_n = true) {
        if (needs_n)
            sub->add_option("--n", n, "knot parameter (n >= 3)")->required();
        sub->add_option("--samples", samples, "grid sample count")->check(CLI::Range(2, 100000000));
        sub->add_option("--tol", tol, "numeric tolerance")
            ->check(CLI::Range(1e-14, 1e-6));
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", out_path, "output path (default stdout)");
    };

    CLI::App* lemmas = app.add_subcommand("lemmas", "run the numeric verification suite");
    add_common(lemmas);

    CLI::App* theta = app.add_subcommand("theta", "compute theta_n and its bracket");
    add_common(theta);

    CLI::App* sw = app.add_subcommand("sweep", "sample the representation path");
    add_common(sw);
    sw->add_option("--branch", branch_text, "sign branch of z")
        ->check(CLI::IsMember({"plus", "minus"}));

    CLI::App* cert = app.add_subcommand("certify", "certify one surgery slope");
    add_common(cert);
    cert->add_option("--slope", slope_text, "slope m or m/l")->required();
    cert->add_flag("--force", force, "attempt the excluded n = 4 case anyway");

    CLI::App* cov = app.add_subcommand("coverage", "slope ranges reached per n");
    add_common(cov, false);
    cov->add_option("--n", ns, "knot parameter(s), repeatable")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (lemmas->parsed() || theta->parsed() || sw->parsed() || cert->parsed()) {
            if (n < 3) {
                std::cerr << "error: --n must be >= 3\n";
                return 2;
            }
        }
        if (cov->parsed())
            for (int k : ns)
                if (k < 3) {
                    std::cerr << "error: --n must be >= 3\n";
                    return 2;
                }

        if (lemmas->parsed()) return cmd_lemmas(n, samples, format, out_path);
        if (theta->parsed()) return cmd_theta(n, tol, format, out_path);
        if (sw->parsed()) {
            const Branch b = branch_text == "minus" ? Branch::minus : Branch::plus;
            return cmd_sweep(n, b, samples, format.empty() ? "csv" : format, out_path);
        }
        if (cert->parsed()) {
            long m = 0, l = 1;
            if (!parse_slope(slope_text, m, l) || l == 0) {
                std::cerr << "error: --slope must be m or m/l with l nonzero\n";
                return 2;
            }
            return cmd_certify(n, m, l, tol, force, out_path);
        }
        return cmd_coverage(ns, samples, format.empty() ? "csv" : format, out_path);
    } catch (const OutOfRangeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ZeroSlopeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const ExcludedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
