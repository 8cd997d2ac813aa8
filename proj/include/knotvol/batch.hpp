#pragma once

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "knotvol/bounds.hpp"
#include "knotvol/chains.hpp"
#include "knotvol/faces.hpp"
#include "knotvol/pd.hpp"

namespace knotvol {

enum class OutputFormat { csv, json };

struct BatchConfig {
    std::string input_path;
    std::optional<std::string> reference_path;
    std::vector<BoundName> bounds = all_bounds();
    OutputFormat format = OutputFormat::csv;
    bool assert_twist_reduced = false;
    bool full_precision = false;

    static std::vector<BoundName> all_bounds() {
        return {BoundName::tetrahedral, BoundName::octahedral, BoundName::naive_octahedral,
                BoundName::at,          BoundName::dt,         BoundName::bcb,
                BoundName::jones_bcb,   BoundName::fcb_raw,    BoundName::fcb,
                BoundName::fcb_drilled};
    }
};

/// Everything computed for one input diagram.
struct DiagramAnalysis {
    std::string name;
    int crossing_count = 0;
    int component_count = 0;
    DiagramFacts facts;
    std::map<int, int> census;  ///< face-size histogram b_i
    std::optional<TwistStats> twist;
    std::string twist_error;
    std::vector<BoundReport> reports;
    std::optional<BoundReport> best;
    std::optional<double> reference;
};

/// Evaluate every requested bound on one diagram, gating each on its
/// diagrammatic hypotheses.  Hyperbolicity of the input is the caller's
/// assertion throughout.
inline DiagramAnalysis analyze_diagram(std::string name, const LinkDiagram& d,
                                       const std::vector<BoundName>& which,
                                       bool assert_twist_reduced) {
    DiagramAnalysis a;
    a.name = std::move(name);
    a.crossing_count = d.crossing_count();
    a.component_count = d.component_count();

    const FaceDecomposition faces = compute_faces(d);
    a.census = faces.b;

    std::optional<ChainCensus> census;
    try {
        census = bigon_chain_stats(d, faces);
        a.twist = census->stats;
    } catch (const chain_error& e) {
        a.twist_error = e.what();
    }
    a.facts = gather_facts(d, faces, census ? &*census : nullptr, assert_twist_reduced);

    const int c = a.crossing_count;
    auto needs_chains = [&](BoundName n) -> std::optional<BoundReport> {
        if (!census) {
            return BoundReport::na(n, "bigon chain census failed: " + a.twist_error);
        }
        if (!a.facts.alternating) return BoundReport::na(n, "diagram is not alternating");
        if (!a.facts.reduced) return BoundReport::na(n, "diagram is not reduced");
        return std::nullopt;
    };

    for (BoundName bn : which) {
        BoundReport rep = BoundReport::na(bn, "not evaluated");
        switch (bn) {
            case BoundName::tetrahedral: {
                const std::string cite = "tetrahedral decomposition bound for hyperbolic knots";
                if (a.component_count != 1) {
                    rep = BoundReport::na(bn, "applies to knots only; this diagram has " +
                                                  std::to_string(a.component_count) + " components",
                                          cite);
                } else if (c < 4) {
                    rep = BoundReport::na(bn, "needs at least 4 crossings", cite);
                } else if (c == 4 && a.facts.alternating && a.facts.reduced) {
                    rep = BoundReport::na(
                        bn, "a reduced alternating 4-crossing knot diagram is the figure-eight knot, "
                            "which the bound excludes",
                        cite);
                } else {
                    rep = BoundReport::ok(bn, tetrahedral_bound(c), cite);
                }
                break;
            }
            case BoundName::octahedral: {
                const std::string cite = "octahedral bound, (c-5) v_oct + 4 v_tet";
                rep = c >= 5 ? BoundReport::ok(bn, octahedral_bound(c), cite)
                             : BoundReport::na(bn, "needs at least 5 crossings", cite);
                break;
            }
            case BoundName::naive_octahedral: {
                rep = BoundReport::ok(bn, naive_octahedral_bound(c), "one octahedron per crossing");
                break;
            }
            case BoundName::at: {
                auto gate = needs_chains(bn);
                rep = gate ? *gate
                           : BoundReport::ok(bn, at_bound(a.twist->twist_number),
                                             "augmented twist-region bound, 10 v_tet (t-1)");
                break;
            }
            case BoundName::dt: {
                auto gate = needs_chains(bn);
                rep = gate ? *gate
                           : BoundReport::ok(bn, dt_bound(*a.twist),
                                             "per-chain tetrahedral refinement of the twist bound");
                break;
            }
            case BoundName::bcb: {
                if (!census) {
                    rep = BoundReport::na(bn, "bigon chain census failed: " + a.twist_error,
                                          "bigon-chain bipyramid bound");
                } else {
                    rep = bcb_bound(census->stats, a.facts);
                }
                break;
            }
            case BoundName::jones_bcb: {
                rep = BoundReport::na(bn, "requires user-supplied colored Jones coefficients",
                                      "Jones-coefficient form of the bigon-chain bound");
                break;
            }
            case BoundName::fcb_raw: {
                rep = BoundReport::ok(bn, fcb_raw(faces), "raw face-centered bipyramid sum");
                break;
            }
            case BoundName::fcb: {
                rep = fcb_bound(faces, a.facts);
                break;
            }
            case BoundName::fcb_drilled: {
                if (!census) {
                    rep = BoundReport::na(bn, "bigon chain census failed: " + a.twist_error,
                                          "face-centered bipyramid bound with chain drilling");
                } else {
                    rep = fcb_drill_refine(faces, *census, a.facts);
                }
                break;
            }
        }
        a.reports.push_back(std::move(rep));
    }

    for (const BoundReport& r : a.reports) {
        if (!r.applicable || !r.value) continue;
        if (!a.best || *r.value < *a.best->value - 1e-12 ||
            (std::fabs(*r.value - *a.best->value) <= 1e-12 &&
             static_cast<int>(r.name) < static_cast<int>(a.best->name))) {
            a.best = r;
        }
    }
    return a;
}

namespace detail {

inline std::string format_number(double v, bool full_precision) {
    char buf[40];
    std::snprintf(buf, sizeof buf, full_precision ? "%.17g" : "%.6g", v);
    return buf;
}

inline double rounded(double v, bool full_precision) {
    if (full_precision) return v;
    return std::strtod(format_number(v, false).c_str(), nullptr);
}

inline std::string census_summary(const std::map<int, int>& b) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [size, count] : b) {
        if (!first) os << ' ';
        first = false;
        os << 'b' << size << '=' << count;
    }
    return os.str();
}

inline void trim(std::string& s) {
    const auto is_ws = [](unsigned char ch) { return std::isspace(ch) != 0; };
    while (!s.empty() && is_ws(static_cast<unsigned char>(s.back()))) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && is_ws(static_cast<unsigned char>(s[i]))) ++i;
    s.erase(0, i);
}

}  // namespace detail

struct BatchResult {
    std::vector<DiagramAnalysis> rows;
    int exit_code = 0;  ///< 0 clean, 1 some lines failed, 2 file/usage error
};

/// Load `name,volume` reference records.
inline std::optional<std::map<std::string, double>> load_reference(const std::string& path,
                                                                   std::ostream& err) {
    std::ifstream in(path);
    if (!in) {
        err << "error: cannot open reference file '" << path << "'\n";
        return std::nullopt;
    }
    std::map<std::string, double> ref;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        detail::trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            err << "error: reference line " << lineno << ": expected 'name,volume'\n";
            return std::nullopt;
        }
        std::string name = line.substr(0, comma);
        std::string vol = line.substr(comma + 1);
        detail::trim(name);
        detail::trim(vol);
        char* end = nullptr;
        const double v = std::strtod(vol.c_str(), &end);
        if (name.empty() || end == vol.c_str() || *end != '\0' || !(v > 0)) {
            err << "error: reference line " << lineno << ": bad record '" << line << "'\n";
            return std::nullopt;
        }
        ref[name] = v;
    }
    return ref;
}

/// Run a batch: one `name: X(...),...` diagram per input line.  Per-line
/// failures go to `err` with their line number and processing continues.
inline BatchResult run_batch(const BatchConfig& config, std::ostream& out, std::ostream& err) {
    BatchResult result;
    if (config.bounds.empty()) {
        err << "error: no bounds selected\n";
        result.exit_code = 2;
        return result;
    }
    std::ifstream in(config.input_path);
    if (!in) {
        err << "error: cannot open input file '" << config.input_path << "'\n";
        result.exit_code = 2;
        return result;
    }
    std::map<std::string, double> reference;
    if (config.reference_path) {
        auto loaded = load_reference(*config.reference_path, err);
        if (!loaded) {
            result.exit_code = 2;
            return result;
        }
        reference = std::move(*loaded);
    }

    std::string line;
    int lineno = 0;
    bool any_failed = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::string work = line;
        detail::trim(work);
        if (work.empty() || work[0] == '#') continue;
        const auto colon = work.find(':');
        if (colon == std::string::npos) {
            err << "line " << lineno << ": expected 'name: X(...),...'\n";
            any_failed = true;
            continue;
        }
        std::string name = work.substr(0, colon);
        detail::trim(name);
        if (name.empty()) {
            err << "line " << lineno << ": empty diagram name\n";
            any_failed = true;
            continue;
        }
        try {
            const LinkDiagram d = parse_pd(work.substr(colon + 1));
            DiagramAnalysis a =
                analyze_diagram(name, d, config.bounds, config.assert_twist_reduced);
            if (auto it = reference.find(name); it != reference.end()) {
                a.reference = it->second;
                if (a.best && *a.best->value < it->second * (1.0 - 1e-9)) {
                    err << "warning: " << name << ": best bound "
                        << detail::format_number(*a.best->value, false)
                        << " is below the reference volume "
                        << detail::format_number(it->second, false)
                        << " (non-hyperbolic input or bad reference?)\n";
                }
            }
            result.rows.push_back(std::move(a));
        } catch (const std::exception& e) {
            err << "line " << lineno << ": " << e.what() << '\n';
            any_failed = true;
        }
    }

    if (config.format == OutputFormat::csv) {
        out << "name,c,components,t,t1,t2,t3,t4,g5,faces";
        for (BoundName bn : config.bounds) out << ',' << to_string(bn);
        out << ",best_bound,best_value,reference,ratio\n";
        for (const DiagramAnalysis& a : result.rows) {
            out << a.name << ',' << a.crossing_count << ',' << a.component_count;
            if (a.twist) {
                out << ',' << a.twist->twist_number;
                for (int i = 1; i <= 4; ++i) out << ',' << a.twist->t_of(i);
                out << ',' << a.twist->g(5);
            } else {
                out << ",n/a,n/a,n/a,n/a,n/a,n/a";
            }
            out << ',' << detail::census_summary(a.census);
            for (const BoundReport& r : a.reports) {
                if (r.applicable && r.value) {
                    out << ',' << detail::format_number(*r.value, config.full_precision);
                } else {
                    out << ",n/a";
                }
            }
            if (a.best) {
                out << ',' << to_string(a.best->name) << ','
                    << detail::format_number(*a.best->value, config.full_precision);
            } else {
                out << ",n/a,n/a";
            }
            if (a.reference) {
                out << ',' << detail::format_number(*a.reference, config.full_precision);
                if (a.best) {
                    out << ','
                        << detail::format_number(*a.best->value / *a.reference,
                                                 config.full_precision);
                } else {
                    out << ",n/a";
                }
            } else {
                out << ",,";
            }
            out << '\n';
        }
    } else {
        nlohmann::json rows = nlohmann::json::array();
        for (const DiagramAnalysis& a : result.rows) {
            nlohmann::json row;
            row["name"] = a.name;
            row["crossings"] = a.crossing_count;
            row["components"] = a.component_count;
            if (a.twist) {
                nlohmann::json tw;
                tw["t"] = a.twist->twist_number;
                for (int i = 1; i <= 4; ++i) tw["t" + std::to_string(i)] = a.twist->t_of(i);
                tw["g5"] = a.twist->g(5);
                row["twist"] = tw;
            } else {
                row["twist"] = nullptr;
                row["twist_error"] = a.twist_error;
            }
            nlohmann::json faces;
            for (const auto& [size, count] : a.census) faces["b" + std::to_string(size)] = count;
            row["faces"] = faces;
            nlohmann::json bounds;
            for (const BoundReport& r : a.reports) {
                nlohmann::json b;
                b["applicable"] = r.applicable;
                if (r.applicable && r.value) {
                    b["value"] = detail::rounded(*r.value, config.full_precision);
                } else {
                    b["value"] = nullptr;
                }
                if (!r.reason.empty()) b["reason"] = r.reason;
                if (!r.citation.empty()) b["citation"] = r.citation;
                bounds[to_string(r.name)] = b;
            }
            row["bounds"] = bounds;
            if (a.best) {
                row["best"] = {{"name", to_string(a.best->name)},
                               {"value", detail::rounded(*a.best->value, config.full_precision)}};
            } else {
                row["best"] = nullptr;
            }
            if (a.reference) {
                row["reference"] = detail::rounded(*a.reference, config.full_precision);
                if (a.best) {
                    row["ratio"] = detail::rounded(*a.best->value / *a.reference,
                                                   config.full_precision);
                }
            }
            rows.push_back(std::move(row));
        }
        out << rows.dump(2) << '\n';
    }

    result.exit_code = any_failed ? 1 : 0;
    return result;
}

}  // namespace knotvol
