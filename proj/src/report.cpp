#include "geolift/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <set>
#include <sstream>

#include <json.hpp>

#include "geolift/arcs_bounds.hpp"
#include "geolift/error.hpp"
#include "geolift/fuchsian.hpp"
#include "geolift/intersections.hpp"
#include "geolift/modular.hpp"

namespace geolift {

const char* const GEOLIFT_VERSION = "0.1.0";

double Config::effective_ell_max() const {
    if (ell_max > 0) return ell_max;
    // Stand-in: the longest generator geodesic of the fixed representation.
    const double la = translation_length(rho_gen_a());
    const double lt = translation_length(rho_gen_t());
    return std::max(la, lt);
}

LiftCodeBase Config::liftcode() const {
    if (liftcode_base == "ln") return LiftCodeBase::NaturalLog;
    if (liftcode_base == "log2") return LiftCodeBase::Log2;
    throw Error("liftcode_base must be 'ln' or 'log2'");
}

void Config::apply_line(const std::string& line) {
    std::string s = line;
    if (auto hash = s.find('#'); hash != std::string::npos) s = s.substr(0, hash);
    auto trim = [](std::string v) {
        const auto b = v.find_first_not_of(" \t\r\n");
        if (b == std::string::npos) return std::string();
        const auto e = v.find_last_not_of(" \t\r\n");
        return v.substr(b, e - b + 1);
    };
    s = trim(s);
    if (s.empty()) return;
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ParseError("config line is not key = value: " + s);
    const std::string key = trim(s.substr(0, eq));
    const std::string val = trim(s.substr(eq + 1));
    if (key == "cutoff")
        cutoff = std::stoi(val);
    else if (key == "bps_c")
        bps_C = std::stod(val);
    else if (key == "ell_max")
        ell_max = std::stod(val);
    else if (key == "liftcode_base")
        liftcode_base = val;
    else if (key == "selfint_word_limit")
        selfint_word_limit = std::stol(val);
    else if (key == "threads")
        threads = std::stoi(val);
    else if (key == "theorem2_gamma0")
        theorem2_gamma0 = val;
    else if (key == "theorem2_eta")
        theorem2_eta = val;
    else if (key == "mod1_alpha")
        mod1_alpha = val;
    else
        throw ParseError("unknown config key: " + key);
}

Config Config::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open config file: " + path);
    Config cfg;
    std::string line;
    while (std::getline(in, line)) cfg.apply_line(line);
    return cfg;
}

Config Config::from_env_or_default() {
    if (const char* p = std::getenv("GEOLIFT_CONFIG")) return from_file(p);
    return Config{};
}

bool ReportTable::has_errors() const {
    return std::any_of(rows.begin(), rows.end(),
                       [](const BoundsRow& r) { return !r.error.empty(); });
}

bool is_known_family(const std::string& name) {
    return name == "theorem2" || name == "mod" || name == "mod1" || name == "pib" ||
           name == "lin";
}

// ---------------------------------------------------------------------------
// Row computation
// ---------------------------------------------------------------------------

namespace {

std::string measure_self_int(const CyclicWord& w, const Config& cfg) {
    if (static_cast<long>(w.size()) > cfg.selfint_word_limit) return "skipped";
    try {
        const IntersectionResult r = self_intersection(w, Rep::for_word(w), cfg.cutoff);
        return std::to_string(r.count);
    } catch (const UnstableError&) {
        return "unstable";
    }
}

// Distinct raw beta-slot words of an HNN sequence; used where strict arc
// normalization does not apply (mixed stable-letter signs).
long raw_slot_census(const ReducedSequence& s) {
    std::set<Word> keys;
    for (const auto& t : s.hnn_terms()) keys.insert(t.g);
    return static_cast<long>(keys.size());
}

BoundsRow compute_row(const std::string& family, long p, const Config& cfg) {
    BoundsRow row;
    row.family = family;
    row.param = p;
    if (family == "mod") {
        const XYWord w = mod_family(p);
        row.word = w.str();
        row.word_length = static_cast<long>(w.size());
        row.n_gamma = n_gamma(w);
        const ExactMatrix m = xy_to_matrix(w);
        row.trace = m.trace().str();
        row.geodesic_length = translation_length(m);
        const Word torus = rewrite_to_torus(w);
        const ReducedSequence seq = hnn_normalize(cyclic_reduce(torus));
        const ArcClassCensus c = census(seq, PantAssignment::single());
        row.distinct_classes = c.total_distinct();
        row.cover_degree = MODULAR_TORUS_INDEX;
        row.lower_bound = cover_adjust(theorem1_bound(c), MODULAR_TORUS_INDEX);
        row.upper_bound_shape = bps_upper_shape(*row.n_gamma, cfg.bps_C);
        row.self_intersection = "skipped";
    } else if (family == "mod1") {
        const Word alpha = parse_word(cfg.mod1_alpha, Alphabet::xy());
        const XYWord w = mod1_family(alpha, p);
        row.word = w.str();
        row.word_length = static_cast<long>(w.size());
        row.n_gamma = n_gamma(w);
        const ExactMatrix m = xy_to_matrix(w);
        row.trace = m.trace().str();
        row.geodesic_length = translation_length(m);
        row.upper_bound_shape = bps_upper_shape(*row.n_gamma, cfg.bps_C);
        row.self_intersection = "skipped";
        // classes live outside the index-6 subgroup in general: no census
    } else if (family == "theorem2") {
        const CyclicWord gamma0 = cyclic_reduce(parse_word(cfg.theorem2_gamma0, Alphabet::abt()));
        const CyclicWord eta = cyclic_reduce(parse_word(cfg.theorem2_eta, Alphabet::abt()));
        const CyclicWord w = theorem2_family(gamma0, eta, p);
        row.word = print_cyclic(w, Alphabet::abt());
        row.word_length = static_cast<long>(w.size());
        row.geodesic_length = translation_length(rho_eval(w.to_word()));
        row.self_intersection = measure_self_int(w, cfg);
        const Word sub = substitute_b(w.to_word());
        try {
            const ReducedSequence seq = hnn_normalize(cyclic_reduce(sub));
            row.distinct_classes = raw_slot_census(seq);
            row.cover_degree = 1;
            row.lower_bound = 0.5 * v3() * static_cast<double>(*row.distinct_classes);
        } catch (const NotInHnnFormError&) {
            // carried by the pants: no beta-arcs to count
        }
    } else if (family == "pib") {
        const Word w = pib_family(static_cast<int>(p));
        row.word = print_word(w, Alphabet::abt());
        row.word_length = static_cast<long>(w.size());
        row.geodesic_length = translation_length(rho_eval(w));
        const ReducedSequence seq = hnn_normalize(cyclic_reduce(w));
        const ArcClassCensus c = census(seq, PantAssignment::single());
        row.distinct_classes = c.total_distinct();
        row.cover_degree = 1;
        row.lower_bound = theorem1_bound(c);
        row.self_intersection = "skipped";
    } else if (family == "lin") {
        const ReducedSequence seq = lin_family(p);
        row.word = print_sequence(seq, Alphabet::sigma12());
        row.word_length = static_cast<long>(seq.product().size());
        const LinBound lb = lin_bound(p, cfg.effective_ell_max());
        row.geodesic_length = lb.length_cap;  // word-length estimate, not a measurement
        const ArcClassCensus c = census(seq, PantAssignment::two_pants());
        row.distinct_classes = c.total_distinct();
        row.cover_degree = 1;
        row.lower_bound = lb.lower;
        row.self_intersection = "skipped";
    } else {
        throw Error("unknown family: " + family);
    }
    return row;
}

struct RangeGuard {
    long max_param;
};

RangeGuard guard_for(const std::string& family) {
    if (family == "pib") return RangeGuard{7};
    return RangeGuard{50};
}

long min_param_for(const std::string& family) {
    if (family == "pib") return 4;
    if (family == "mod" || family == "mod1") return 1;
    if (family == "lin") return 2;
    return 0;  // theorem2
}

}  // namespace

ReportTable run_report(const std::string& family, long lo, long hi, const Config& cfg) {
    if (!is_known_family(family)) throw Error("unknown family: " + family);
    if (lo > hi) throw Error("empty parameter range");
    const RangeGuard guard = guard_for(family);
    if (hi > guard.max_param)
        throw RangeTooLargeError("family " + family + " is guarded at parameter <= " +
                                 std::to_string(guard.max_param));

    ReportTable table;
    table.family = family;
    table.param_lo = lo;
    table.param_hi = hi;
    table.config = cfg;
    table.version = GEOLIFT_VERSION;

    const long count = hi - lo + 1;
    std::vector<BoundsRow> rows(static_cast<size_t>(count));
    auto work = [&](long p) {
        BoundsRow row;
        row.family = family;
        row.param = p;
        if (p < min_param_for(family)) {
            row.error = "parameter below the family's precondition (min " +
                        std::to_string(min_param_for(family)) + ")";
            return row;
        }
        try {
            row = compute_row(family, p, cfg);
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        return row;
    };

    const int threads = std::max(1, cfg.threads);
    if (threads == 1) {
        for (long p = lo; p <= hi; ++p) rows[static_cast<size_t>(p - lo)] = work(p);
    } else {
        // Rows computed independently; joined in parameter order regardless of
        // scheduling, so output never depends on the thread count.
        std::vector<std::future<BoundsRow>> futs;
        futs.reserve(static_cast<size_t>(count));
        for (long p = lo; p <= hi; ++p)
            futs.push_back(std::async(std::launch::async, work, p));
        for (long i = 0; i < count; ++i) rows[static_cast<size_t>(i)] = futs[static_cast<size_t>(i)].get();
    }
    table.rows = std::move(rows);
    return table;
}

// ---------------------------------------------------------------------------
// Emission
// ---------------------------------------------------------------------------

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

namespace {

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += '"';
    return out;
}

const std::vector<std::string> kColumns = {
    "family",        "param",           "word",           "word_length",      "n_gamma",
    "trace",         "geodesic_length", "self_intersection", "distinct_classes", "cover_degree",
    "lower_bound",   "upper_bound_shape", "error"};

std::vector<std::string> row_cells(const BoundsRow& r) {
    auto opt_long = [](const std::optional<long>& v) {
        return v ? std::to_string(*v) : std::string();
    };
    auto opt_dbl = [](const std::optional<double>& v) {
        return v ? format_double(*v) : std::string();
    };
    return {r.family,
            std::to_string(r.param),
            r.word,
            std::to_string(r.word_length),
            opt_long(r.n_gamma),
            r.trace,
            opt_dbl(r.geodesic_length),
            r.self_intersection,
            opt_long(r.distinct_classes),
            opt_long(r.cover_degree),
            opt_dbl(r.lower_bound),
            opt_dbl(r.upper_bound_shape),
            r.error};
}

}  // namespace

std::string emit_csv(const ReportTable& t) {
    std::ostringstream out;
    for (size_t i = 0; i < kColumns.size(); ++i) {
        if (i) out << ',';
        out << kColumns[i];
    }
    out << '\n';
    for (const BoundsRow& r : t.rows) {
        const auto cells = row_cells(r);
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i) out << ',';
            out << csv_quote(cells[i]);
        }
        out << '\n';
    }
    return out.str();
}

std::string emit_json(const ReportTable& t) {
    nlohmann::ordered_json j;
    j["family"] = t.family;
    j["param_lo"] = t.param_lo;
    j["param_hi"] = t.param_hi;
    j["version"] = t.version;
    nlohmann::ordered_json constants;
    constants["bps_c"] = format_double(t.config.bps_C);
    constants["ell_max"] = format_double(t.config.effective_ell_max());
    constants["cutoff"] = t.config.cutoff;
    constants["liftcode_base"] = t.config.liftcode_base;
    j["constants"] = constants;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const BoundsRow& r : t.rows) {
        nlohmann::ordered_json jr;
        const auto cells = row_cells(r);
        for (size_t i = 0; i < kColumns.size(); ++i) jr[kColumns[i]] = cells[i];
        rows.push_back(jr);
    }
    j["rows"] = rows;
    return j.dump(2) + "\n";
}

std::string emit_svg(const ReportTable& t, bool log_axes) {
    if (t.rows.empty()) throw EmptyTableError();
    struct Pt {
        double x, y;
    };
    std::vector<Pt> lower, upper;
    for (const BoundsRow& r : t.rows) {
        if (!r.error.empty() || !r.geodesic_length) continue;
        const double x = *r.geodesic_length;
        if (r.lower_bound) lower.push_back({x, *r.lower_bound});
        if (r.upper_bound_shape) upper.push_back({x, *r.upper_bound_shape});
    }
    if (lower.empty() && upper.empty()) throw EmptyTableError("no plottable rows");

    auto txf = [&](double v) { return log_axes ? std::log10(std::max(v, 1e-12)) : v; };
    double xmin = HUGE_VAL, xmax = -HUGE_VAL, ymin = HUGE_VAL, ymax = -HUGE_VAL;
    for (const auto& s : {lower, upper})
        for (const Pt& p : s) {
            xmin = std::min(xmin, txf(p.x));
            xmax = std::max(xmax, txf(p.x));
            ymin = std::min(ymin, txf(p.y));
            ymax = std::max(ymax, txf(p.y));
        }
    if (xmax <= xmin) xmax = xmin + 1;
    if (ymax <= ymin) ymax = ymin + 1;
    const double W = 640, H = 420, ML = 60, MB = 40, MT = 20, MR = 20;
    auto px = [&](double x) { return ML + (txf(x) - xmin) / (xmax - xmin) * (W - ML - MR); };
    auto py = [&](double y) { return H - MB - (txf(y) - ymin) / (ymax - ymin) * (H - MB - MT); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << W << "\" height=\"" << H
        << "\" fill=\"white\"/>\n";
    out << "<line x1=\"" << ML << "\" y1=\"" << (H - MB) << "\" x2=\"" << (W - MR) << "\" y2=\""
        << (H - MB) << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ML << "\" y1=\"" << MT << "\" x2=\"" << ML << "\" y2=\"" << (H - MB)
        << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << (W / 2) << "\" y=\"" << (H - 8)
        << "\" font-size=\"12\" text-anchor=\"middle\">geodesic_length"
        << (log_axes ? " (log10)" : "") << "</text>\n";
    out << "<text x=\"14\" y=\"" << (H / 2)
        << "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 14 " << (H / 2)
        << ")\">bound" << (log_axes ? " (log10)" : "") << "</text>\n";

    auto emit_series = [&](const std::vector<Pt>& pts, const char* color, const char* name,
                           double legend_y) {
        if (pts.empty()) return;
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" points=\"";
        for (const Pt& p : pts) out << format_double(px(p.x)) << ',' << format_double(py(p.y)) << ' ';
        out << "\"/>\n";
        for (const Pt& p : pts)
            out << "<circle cx=\"" << format_double(px(p.x)) << "\" cy=\""
                << format_double(py(p.y)) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
        out << "<text x=\"" << (W - MR - 150) << "\" y=\"" << legend_y
            << "\" font-size=\"12\" fill=\"" << color << "\">" << name << "</text>\n";
    };
    emit_series(lower, "#1f6fb2", "lower_bound", MT + 14);
    emit_series(upper, "#b23a1f", "upper_bound_shape", MT + 30);
    out << "</svg>\n";
    return out.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> cur;
    std::string cell;
    bool quoted = false;
    size_t i = 0;
    const size_t n = text.size();
    while (i < n) {
        const char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < n && text[i + 1] == '"') {
                    cell += '"';
                    i += 2;
                    continue;
                }
                quoted = false;
                ++i;
                continue;
            }
            cell += c;
            ++i;
            continue;
        }
        if (c == '"') {
            quoted = true;
            ++i;
            continue;
        }
        if (c == ',') {
            cur.push_back(std::move(cell));
            cell.clear();
            ++i;
            continue;
        }
        if (c == '\n') {
            cur.push_back(std::move(cell));
            cell.clear();
            rows.push_back(std::move(cur));
            cur.clear();
            ++i;
            continue;
        }
        cell += c;
        ++i;
    }
    if (!cell.empty() || !cur.empty()) {
        cur.push_back(std::move(cell));
        rows.push_back(std::move(cur));
    }
    return rows;
}

}  // namespace geolift
