#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "geolift/arcs_bounds.hpp"
#include "geolift/error.hpp"
#include "geolift/families.hpp"
#include "geolift/report.hpp"

using namespace geolift;

namespace {

int run_family(const std::string& name, long k, long n, const std::string& alpha) {
    if (name == "mod") {
        std::cout << mod_family(k).str() << "\n";
    } else if (name == "mod1") {
        std::cout << mod1_family(parse_word(alpha, Alphabet::xy()), k).str() << "\n";
    } else if (name == "pib") {
        std::cout << print_word(pib_family(static_cast<int>(n)), Alphabet::abt()) << "\n";
    } else if (name == "lin") {
        std::cout << print_sequence(lin_family(n), Alphabet::sigma12()) << "\n";
    } else {
        std::cerr << "unknown family: " << name << "\n";
        return 1;
    }
    return 0;
}

std::pair<long, long> parse_range(const std::string& range) {
    const auto dots = range.find("..");
    if (dots == std::string::npos) {
        const long v = std::stol(range);
        return {v, v};
    }
    return {std::stol(range.substr(0, dots)), std::stol(range.substr(dots + 2))};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"geodesic word codings, arc censuses and volume bounds"};
    app.require_subcommand(1);

    auto* fam = app.add_subcommand("family", "print one family member");
    std::string fam_name;
    long fam_k = 1, fam_n = 4;
    std::string fam_alpha = "x y";
    fam->add_option("name", fam_name, "family: mod | mod1 | pib | lin")->required();
    fam->add_option("--k", fam_k, "parameter k (mod, mod1)");
    fam->add_option("--n", fam_n, "parameter n (pib, lin)");
    fam->add_option("--alpha", fam_alpha, "suffix word for mod1");

    auto* rep = app.add_subcommand("report", "batch report over a family");
    std::string rep_family, rep_range = "1..5", rep_format = "csv", rep_out, rep_config;
    int rep_cutoff = -2;
    int rep_threads = 0;
    bool rep_log_axes = false;
    rep->add_option("--family", rep_family, "theorem2 | mod | mod1 | pib | lin")->required();
    rep->add_option("--range", rep_range, "parameter range lo..hi");
    rep->add_option("--format", rep_format, "csv | json | svg");
    rep->add_option("--config", rep_config, "config file (fallback: $GEOLIFT_CONFIG)");
    rep->add_option("--cutoff", rep_cutoff, "intersection cutoff override");
    rep->add_option("--threads", rep_threads, "row workers (output is order-stable)");
    rep->add_option("--out", rep_out, "output path (default: stdout)");
    rep->add_flag("--log-axes", rep_log_axes, "log-scaled svg axes");

    CLI11_PARSE(app, argc, argv);

    try {
        if (fam->parsed()) {
            const long p = fam_name == "pib" || fam_name == "lin" ? fam_n : fam_k;
            return run_family(fam_name, p, p, fam_alpha);
        }
        Config cfg = rep_config.empty() ? Config::from_env_or_default()
                                        : Config::from_file(rep_config);
        if (rep_cutoff != -2) cfg.cutoff = rep_cutoff;
        if (rep_threads > 0) cfg.threads = rep_threads;
        const auto [lo, hi] = parse_range(rep_range);
        const ReportTable table = run_report(rep_family, lo, hi, cfg);
        std::string payload;
        if (rep_format == "csv")
            payload = emit_csv(table);
        else if (rep_format == "json")
            payload = emit_json(table);
        else if (rep_format == "svg")
            payload = emit_svg(table, rep_log_axes);
        else {
            std::cerr << "unknown format: " << rep_format << "\n";
            return 1;
        }
        if (rep_out.empty()) {
            std::cout << payload;
        } else {
            std::ofstream out(rep_out, std::ios::binary);
            if (!out) {
                std::cerr << "cannot open output file: " << rep_out << "\n";
                return 1;
            }
            out << payload;
        }
        return table.has_errors() ? 2 : 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
