#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geolift/families.hpp"

namespace geolift {

// Run-time knobs; every unnamed constant of the bounds lives here.
struct Config {
    int cutoff = -1;               // intersection cutoff; -1 = adaptive
    double bps_C = 1.0;            // constant of the n ln n upper-bound shape
    double ell_max = 0.0;          // 0 = use the generator stand-in length
    std::string liftcode_base = "ln";  // "ln" or "log2"
    long selfint_word_limit = 12;  // measure self-intersection up to this many letters
    int threads = 1;
    std::string theorem2_gamma0 = "t a t' a";
    std::string theorem2_eta = "a";
    std::string mod1_alpha = "x y";

    double effective_ell_max() const;
    LiftCodeBase liftcode() const;

    // key = value lines, # comments. Unknown keys are an error.
    static Config from_file(const std::string& path);
    static Config from_env_or_default();
    void apply_line(const std::string& line);
};

struct BoundsRow {
    std::string family;
    long param = 0;
    std::string word;
    long word_length = 0;
    std::optional<long> n_gamma;
    std::string trace;  // exact integer trace (modular families)
    std::optional<double> geodesic_length;
    std::string self_intersection;  // number, "skipped", or "unstable"
    std::optional<long> distinct_classes;
    std::optional<long> cover_degree;
    std::optional<double> lower_bound;
    std::optional<double> upper_bound_shape;
    std::string error;  // nonempty marks an error row
};

struct ReportTable {
    std::string family;
    long param_lo = 0;
    long param_hi = 0;
    Config config;
    std::string version;
    std::vector<BoundsRow> rows;

    bool has_errors() const;
};

// Families accepted by run_report.
bool is_known_family(const std::string& name);

// One row per parameter, deterministic across runs and thread counts.
// Per-row failures become error cells; range violations throw.
ReportTable run_report(const std::string& family, long lo, long hi, const Config& cfg);

std::string emit_csv(const ReportTable& t);
std::string emit_json(const ReportTable& t);
std::string emit_svg(const ReportTable& t, bool log_axes = false);

// RFC-style CSV reader; returns cell matrix including the header row.
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

// Fixed float formatting used in all emitters: 9 significant digits.
std::string format_double(double v);

extern const char* const GEOLIFT_VERSION;

}  // namespace geolift
