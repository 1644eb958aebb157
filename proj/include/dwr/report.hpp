#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dwr/blocks.hpp"
#include "dwr/bounds.hpp"
#include "dwr/builtins.hpp"
#include "dwr/complex_matrix.hpp"
#include "dwr/oracles.hpp"
#include "dwr/quantities.hpp"
#include "dwr/random_inputs.hpp"

namespace dwr {

enum class ReportFormat { table, csv, jsonl };

inline ReportFormat report_format_from_name(const std::string& name) {
    if (name == "table") return ReportFormat::table;
    if (name == "csv") return ReportFormat::csv;
    if (name == "jsonl") return ReportFormat::jsonl;
    throw ParseError("unknown format: " + name + " (want table|csv|jsonl)");
}

/// All numeric output goes through one formatter: 9 significant digits.
inline std::string g9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

/// One analyzed matrix as the report layer sees it.
struct ReportRow {
    std::string matrix_label;
    std::map<std::string, std::pair<double, double>> entries;  ///< id -> (value, value^2)
    double dw_estimate = 0.0;
    double certification_gap = 0.0;  ///< tightest upper - dw_estimate
};

struct AnalyzeResult {
    std::string label;
    std::size_t dimension = 0;
    NRProfile profile;
    std::vector<BoundResult> catalog;
    ReportRow row;
    bool invariant_violation = false;
};

inline AnalyzeResult analyze_matrix(const std::string& label, const ComplexMatrix& t,
                                    const SolverOptions& opts = {}) {
    if (!t.square()) throw DimensionMismatchError("analysis needs a square matrix");
    AnalyzeResult res;
    res.label = label;
    res.dimension = t.rows();
    res.profile = profile(t, opts);
    res.catalog = full_catalog(t, opts, res.profile.dw_estimate);

    res.row.matrix_label = label;
    res.row.dw_estimate = res.profile.dw_estimate;
    double tightest_upper = std::numeric_limits<double>::infinity();
    for (const auto& b : res.catalog) {
        res.row.entries[b.id] = {b.value, b.value * b.value};
        if (b.kind == BoundKind::upper) tightest_upper = std::min(tightest_upper, b.value);
        if (b.kind == BoundKind::lower && b.value > res.profile.dw_estimate + 1e-6)
            res.invariant_violation = true;
        if (b.kind == BoundKind::upper && b.value < res.profile.dw_estimate - 1e-6)
            res.invariant_violation = true;
    }
    res.row.certification_gap = tightest_upper - res.profile.dw_estimate;

    const double w = res.profile.num_radius;
    const double nrm = res.profile.op_norm;
    if (std::max(w, nrm * nrm) > res.profile.dw_estimate + 1e-6) res.invariant_violation = true;
    if (res.profile.dw_estimate > std::sqrt(w * w + std::pow(nrm, 4.0)) + 1e-9)
        res.invariant_violation = true;
    return res;
}

namespace detail {

inline void pad(std::string& s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
}

inline std::string padded(std::string s, std::size_t width) {
    pad(s, width);
    return s;
}

} // namespace detail

inline void render_analyze(const AnalyzeResult& r, ReportFormat format, std::ostream& os) {
    const auto& p = r.profile;
    if (format == ReportFormat::table) {
        os << "matrix: " << r.label << " (" << r.dimension << "x" << r.dimension << ")\n";
        os << "profile:\n";
        auto prow = [&](const char* name, double v, double wv) {
            os << "  " << detail::padded(name, 14) << detail::padded(g9(v), 16)
               << "witness " << g9(wv) << "\n";
        };
        prow("op_norm", p.op_norm, p.norm_witness.value);
        prow("min_modulus", p.min_modulus, p.min_witness.value);
        prow("num_radius", p.num_radius, p.num_radius_witness.value);
        prow("crawford", p.crawford, p.crawford_witness.value);
        prow("dw_estimate", p.dw_estimate, p.dw_witness.value);
        os << "  solver: theta_grid=" << p.meta.theta_grid << " dw_grid=" << p.meta.dw_theta_grid
           << "x" << p.meta.dw_phi_grid << " restarts=" << p.meta.restarts
           << " seed=" << p.meta.seed << " ascent_iterations=" << p.meta.ascent_iterations
           << "\n";
        os << "catalog:\n";
        os << "  " << detail::padded("kind", 7) << detail::padded("id", 14)
           << detail::padded("value", 17) << detail::padded("value^2", 17) << "citation\n";
        for (const auto& b : r.catalog)
            os << "  " << detail::padded(to_string(b.kind), 7) << detail::padded(b.id, 14)
               << detail::padded(g9(b.value), 17) << detail::padded(g9(b.value * b.value), 17)
               << b.citation << "\n";
        os << "certification_gap: " << g9(r.row.certification_gap) << "\n";
        return;
    }
    if (format == ReportFormat::csv) {
        os << "section,name,kind,value,value_sq,citation\n";
        os << "profile,op_norm,," << g9(p.op_norm) << ",,\n";
        os << "profile,min_modulus,," << g9(p.min_modulus) << ",,\n";
        os << "profile,num_radius,," << g9(p.num_radius) << ",,\n";
        os << "profile,crawford,," << g9(p.crawford) << ",,\n";
        os << "profile,dw_estimate,," << g9(p.dw_estimate) << ",,\n";
        for (const auto& b : r.catalog)
            os << "catalog," << b.id << "," << to_string(b.kind) << "," << g9(b.value) << ","
               << g9(b.value * b.value) << "," << b.citation << "\n";
        os << "summary,certification_gap,," << g9(r.row.certification_gap) << ",,\n";
        return;
    }
    // jsonl
    nlohmann::ordered_json prof{{"type", "profile"},
                                {"label", r.label},
                                {"op_norm", p.op_norm},
                                {"min_modulus", p.min_modulus},
                                {"num_radius", p.num_radius},
                                {"crawford", p.crawford},
                                {"dw_estimate", p.dw_estimate},
                                {"seed", p.meta.seed}};
    os << prof.dump() << "\n";
    for (const auto& b : r.catalog) {
        nlohmann::ordered_json jb{{"type", "bound"},
                                  {"id", b.id},
                                  {"kind", to_string(b.kind)},
                                  {"value", b.value},
                                  {"value_sq", b.value * b.value},
                                  {"citation", b.citation}};
        if (!b.detail.empty()) jb["detail"] = b.detail;
        os << jb.dump() << "\n";
    }
    nlohmann::ordered_json summary{{"type", "summary"},
                                   {"certification_gap", r.row.certification_gap},
                                   {"invariant_violation", r.invariant_violation}};
    os << summary.dump() << "\n";
}

// ---------------------------------------------------------------------------
// comparability table
// ---------------------------------------------------------------------------

struct PaperTableCell {
    double computed_sq = 0.0;
    double rounded_sq = 0.0;
    double expected_sq = 0.0;
    bool match = false;
};

struct PaperTableReport {
    std::vector<std::string> row_names;
    std::vector<std::array<PaperTableCell, 4>> cells;
    int mismatches = 0;
};

namespace detail {

inline int printed_decimals(const std::string& s) {
    const auto dot = s.find('.');
    return dot == std::string::npos ? 0 : static_cast<int>(s.size() - dot - 1);
}

inline double round_to_decimals(double v, int d) {
    const double scale = std::pow(10.0, d);
    return std::round(v * scale) / scale;
}

} // namespace detail

/// The four reference matrices and five upper bounds of the comparability
/// table, with printed-precision matching at absolute tolerance 5e-3.
inline PaperTableReport paper_table(const SolverOptions& opts = {}) {
    const std::array<const char*, 4> names = {"t1", "t2", "t3", "t4"};
    const std::vector<std::string> rows = {"Th. 2.8", "Cor. 2.13 (ii)", "Th. 2.16 (i)",
                                           "Th. 2.16 (ii)", "Th. 2.19"};
    const std::array<std::array<const char*, 4>, 5> expected = {{
        {"21.357", "17.944", "5.4753", "9.056"},
        {"18.5", "18", "5.5495", "9.272"},
        {"20", "20", "6", "9.472"},
        {"19", "18", "5.6", "9.162"},
        {"18.25", "17", "5.4568", "9.104"},
    }};

    PaperTableReport report;
    report.row_names = rows;
    report.cells.resize(rows.size());
    for (std::size_t col = 0; col < names.size(); ++col) {
        const ComplexMatrix& t = builtin_matrix(names[col]);
        std::array<double, 5> values_sq{};
        values_sq[0] = [&] {
            auto b = bounds_thm28(t, opts)[1];
            return b.value * b.value;
        }();
        values_sq[1] = [&] {
            auto b = upper_cor213(t, 2.0, opts)[1];
            return b.value * b.value;
        }();
        {
            auto b16 = upper_thm216(t, opts);
            values_sq[2] = b16[0].value * b16[0].value;
            values_sq[3] = b16[1].value * b16[1].value;
        }
        values_sq[4] = [&] {
            auto b = upper_thm219(t, opts);
            return b.value * b.value;
        }();
        for (std::size_t row = 0; row < rows.size(); ++row) {
            PaperTableCell cell;
            cell.computed_sq = values_sq[row];
            const std::string exp = expected[row][col];
            cell.expected_sq = std::stod(exp);
            cell.rounded_sq =
                detail::round_to_decimals(cell.computed_sq, detail::printed_decimals(exp));
            cell.match = std::abs(cell.rounded_sq - cell.expected_sq) <= 5e-3;
            if (!cell.match) ++report.mismatches;
            report.cells[row][col] = cell;
        }
    }
    return report;
}

inline void render_paper_table(const PaperTableReport& r, ReportFormat format, std::ostream& os) {
    const std::array<const char*, 4> cols = {"dw^2(T1)", "dw^2(T2)", "dw^2(T3)", "dw^2(T4)"};
    if (format == ReportFormat::csv) {
        os << "bound,matrix,computed_sq,expected_sq,match\n";
        for (std::size_t i = 0; i < r.row_names.size(); ++i)
            for (std::size_t j = 0; j < 4; ++j)
                os << r.row_names[i] << ",t" << (j + 1) << "," << g9(r.cells[i][j].computed_sq)
                   << "," << g9(r.cells[i][j].expected_sq) << ","
                   << (r.cells[i][j].match ? "yes" : "no") << "\n";
        return;
    }
    if (format == ReportFormat::jsonl) {
        for (std::size_t i = 0; i < r.row_names.size(); ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                nlohmann::ordered_json cell{{"type", "cell"},
                                            {"bound", r.row_names[i]},
                                            {"matrix", std::string("t") + std::to_string(j + 1)},
                                            {"computed_sq", r.cells[i][j].computed_sq},
                                            {"expected_sq", r.cells[i][j].expected_sq},
                                            {"match", r.cells[i][j].match}};
                os << cell.dump() << "\n";
            }
        nlohmann::ordered_json summary{{"type", "summary"}, {"mismatches", r.mismatches}};
        os << summary.dump() << "\n";
        return;
    }
    os << detail::padded("upper bound", 16);
    for (const auto* c : cols) os << detail::padded(c, 14);
    os << "\n";
    for (std::size_t i = 0; i < r.row_names.size(); ++i) {
        os << detail::padded(r.row_names[i], 16);
        for (std::size_t j = 0; j < 4; ++j) os << detail::padded(g9(r.cells[i][j].computed_sq), 14);
        os << "\n";
    }
    if (r.mismatches == 0) {
        os << "all 20 cells match the reference values (tol 5e-3 at printed precision)\n";
    } else {
        for (std::size_t i = 0; i < r.row_names.size(); ++i)
            for (std::size_t j = 0; j < 4; ++j)
                if (!r.cells[i][j].match)
                    os << "MISMATCH " << r.row_names[i] << " @ t" << (j + 1) << ": computed "
                       << g9(r.cells[i][j].computed_sq) << " vs expected "
                       << g9(r.cells[i][j].expected_sq) << "\n";
    }
}

// ---------------------------------------------------------------------------
// block reports
// ---------------------------------------------------------------------------

struct BlockCheck {
    std::string name;
    std::string kind;  // "exact" | "lower" | "upper" | "scalar"
    double value = 0.0;
    double residual = 0.0;  // exact: |value - dw_est|; bounds: signed slack vs dw_est
    std::string note;
};

struct BlockReport {
    std::string layout;
    AnalyzeResult analysis;
    std::vector<BlockCheck> checks;
};

inline BlockReport block_report(const BlockSpec& spec, const SolverOptions& opts = {}) {
    BlockReport rep;
    rep.layout = to_string(spec.layout);
    const ComplexMatrix assembled = assemble(spec);
    rep.analysis = analyze_matrix(std::string("block:") + rep.layout, assembled, opts);
    const double dw = rep.analysis.profile.dw_estimate;

    auto add = [&](std::string name, std::string kind, double value, double residual,
                   std::string note = "") {
        rep.checks.push_back({std::move(name), std::move(kind), value, residual, std::move(note)});
    };

    switch (spec.layout) {
        case BlockLayout::diag: {
            const double v = dw_diag_exact(spec.a, spec.b, opts);
            add("dw_diag_exact", "exact", v, std::abs(v - dw));
            break;
        }
        case BlockLayout::antidiag: {
            const double lo = dw_antidiag_lower(spec.a, spec.b, opts);
            add("dw_antidiag_lower", "lower", lo, dw - lo);
            const double pw = dw_antidiag_upper_piecewise(spec.a, spec.b);
            add("dw_antidiag_upper_piecewise", "upper", pw, pw - dw);
            const double ab = dw_antidiag_upper_abs(spec.a, spec.b, opts);
            add("dw_antidiag_upper_abs", "upper", ab, ab - dw);
            if (op_norm(spec.a) > 0.0 && op_norm(spec.b) > 0.0) {
                const auto [nv, tag] = dw_antidiag_upper_norm(spec.a, spec.b);
                add("dw_antidiag_upper_norm", "upper", nv, nv - dw, tag);
            }
            break;
        }
        case BlockLayout::upper_left: {
            const double v = dw_I_B_exact(spec.b);
            add("dw_I_B_exact", "exact", v, std::abs(v - dw));
            const double nb = op_norm(spec.b);
            if (nb > 1e-12) {
                const CubicTheta ct = cubic_theta(nb);
                add("theta0", "scalar", ct.theta0, 0.0);
                add("p", "scalar", ct.p, 0.0);
                add("q", "scalar", ct.q, 0.0);
                add("r", "scalar", ct.r, 0.0);
                add("s", "scalar", ct.s, 0.0);
                add("alpha", "scalar", ct.alpha, 0.0);
            }
            break;
        }
        case BlockLayout::nilpotent: {
            const double v = dw_nilpotent_exact(spec.b);
            add("dw_nilpotent_exact", "exact", v, std::abs(v - dw));
            break;
        }
        case BlockLayout::triangular: {
            const double v35 = dw_triangular_upper_35(spec.a, spec.b, spec.c);
            add("dw_triangular_upper_35", "upper", v35, v35 - dw);
            const double v34 = dw_triangular_upper_34(spec.a, spec.b, spec.c, opts);
            add("dw_triangular_upper_34", "upper", v34, v34 - dw);
            break;
        }
    }
    return rep;
}

inline void render_block_report(const BlockReport& r, ReportFormat format, std::ostream& os) {
    if (format == ReportFormat::jsonl) {
        render_analyze(r.analysis, format, os);
        for (const auto& c : r.checks) {
            nlohmann::ordered_json jc{{"type", "block_check"},
                                      {"name", c.name},
                                      {"kind", c.kind},
                                      {"value", c.value},
                                      {"residual", c.residual}};
            if (!c.note.empty()) jc["note"] = c.note;
            os << jc.dump() << "\n";
        }
        return;
    }
    if (format == ReportFormat::csv) {
        render_analyze(r.analysis, format, os);
        for (const auto& c : r.checks)
            os << "block_check," << c.name << "," << c.kind << "," << g9(c.value) << ","
               << g9(c.residual) << "," << c.note << "\n";
        return;
    }
    os << "layout: " << r.layout << "\n";
    render_analyze(r.analysis, format, os);
    os << "block formulas (residuals taken against dw_estimate):\n";
    for (const auto& c : r.checks) {
        os << "  " << detail::padded(c.name, 30) << detail::padded(c.kind, 8)
           << detail::padded(g9(c.value), 17);
        if (c.kind != "scalar") os << "residual " << g9(c.residual);
        if (!c.note.empty()) os << "  [" << c.note << "]";
        os << "\n";
    }
}

// ---------------------------------------------------------------------------
// fuzz: the property suites at CLI reach
// ---------------------------------------------------------------------------

struct FuzzSummary {
    int count = 0;
    int dim = 0;
    std::uint64_t seed = 0;
    int violations = 0;
    // minimum leftover slack across the corpus; negative means a violation
    double sandwich_lower_slack = std::numeric_limits<double>::infinity();
    double sandwich_upper_slack = std::numeric_limits<double>::infinity();
    double scaling_error = 0.0;
    double power_excess = 0.0;
    double unitary_error = 0.0;
    double normaloid_error = 0.0;
    double oracle_error = 0.0;  // only populated for dim == 2
};

inline FuzzSummary run_fuzz(int count, int dim, std::uint64_t seed,
                            const SolverOptions& base = {}) {
    if (count < 1) throw ParseError("count must be >= 1");
    if (dim < 2 || dim > 16) throw ParseError("dim must be in [2, 16]");
    SolverOptions opts = base;
    opts.seed = seed;
    FuzzSummary s;
    s.count = count;
    s.dim = dim;
    s.seed = seed;

    for (int it = 0; it < count; ++it) {
        detail::Rng rng(detail::mix_seed(seed, static_cast<std::uint64_t>(it)));
        const ComplexMatrix t = random_matrix(static_cast<std::size_t>(dim), rng);
        const double w = detail::num_radius_value(t, opts);
        const double nrm = op_norm(t);
        const double dw = dw_radius(t, opts).first;

        const double lo_slack = dw + 1e-6 - std::max(w, nrm * nrm);
        const double up_slack = std::sqrt(w * w + std::pow(nrm, 4.0)) + 2e-6 - dw;
        s.sandwich_lower_slack = std::min(s.sandwich_lower_slack, lo_slack);
        s.sandwich_upper_slack = std::min(s.sandwich_upper_slack, up_slack);
        if (lo_slack < 0.0 || up_slack < 0.0) ++s.violations;

        // scaling by a random complex factor
        const Complex alpha = rng.gaussian_complex();
        const double w_scaled = detail::num_radius_value(alpha * t, opts);
        const double scale_err = std::abs(w_scaled - std::abs(alpha) * w);
        s.scaling_error = std::max(s.scaling_error, scale_err);
        if (scale_err > 1e-9 * std::max(1.0, std::abs(alpha) * w)) ++s.violations;

        // power inequality w(T^k) <= w(T)^k
        const ComplexMatrix t2 = t * t;
        const double excess2 = detail::num_radius_value(t2, opts) - w * w;
        const double excess3 = detail::num_radius_value(t2 * t, opts) - w * w * w;
        const double excess = std::max(excess2, excess3);
        s.power_excess = std::max(s.power_excess, excess);
        if (excess > 1e-8 * std::max(1.0, w * w * w)) ++s.violations;

        // unitary invariance of all four quantities
        const ComplexMatrix u = random_unitary(static_cast<std::size_t>(dim), rng);
        const ComplexMatrix conj_t = adjoint(u) * t * u;
        double uerr = std::abs(op_norm(conj_t) - nrm);
        uerr = std::max(uerr, std::abs(detail::num_radius_value(conj_t, opts) - w));
        uerr = std::max(uerr,
                        std::abs(detail::crawford_value(conj_t, opts) -
                                 detail::crawford_value(t, opts)));
        uerr = std::max(uerr, std::abs(dw_radius(conj_t, opts).first - dw));
        s.unitary_error = std::max(s.unitary_error, uerr);
        if (uerr > 1e-7 * std::max(1.0, dw)) ++s.violations;

        // normaloid equality on a normal matrix
        const ComplexMatrix nm = random_normal_matrix(static_cast<std::size_t>(dim), rng);
        const double wn = detail::num_radius_value(nm, opts);
        const double on = op_norm(nm);
        const double nerr =
            std::abs(dw_radius(nm, opts).first - std::sqrt(wn * wn + std::pow(on, 4.0)));
        s.normaloid_error = std::max(s.normaloid_error, nerr);
        if (nerr > 1e-5 * std::max(1.0, on * on)) ++s.violations;

        if (dim == 2) {
            const double oerr = std::abs(dw - dw_brute_force_2x2(t));
            s.oracle_error = std::max(s.oracle_error, oerr);
            if (oerr > 1e-5 * std::max(1.0, dw)) ++s.violations;
        }
    }
    return s;
}

inline void render_fuzz(const FuzzSummary& s, std::ostream& os) {
    os << "fuzz: count=" << s.count << " dim=" << s.dim << " seed=" << s.seed << "\n";
    os << "  violations: " << s.violations << "\n";
    os << "  sandwich slack (lower/upper, min): " << g9(s.sandwich_lower_slack) << " / "
       << g9(s.sandwich_upper_slack) << "\n";
    os << "  worst scaling error:   " << g9(s.scaling_error) << "\n";
    os << "  worst power excess:    " << g9(s.power_excess) << "\n";
    os << "  worst unitary error:   " << g9(s.unitary_error) << "\n";
    os << "  worst normaloid error: " << g9(s.normaloid_error) << "\n";
    if (s.dim == 2) os << "  worst oracle error:    " << g9(s.oracle_error) << "\n";
}

} // namespace dwr
