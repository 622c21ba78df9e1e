#include "lbs_cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <lbs/determinant.hpp>
#include <lbs/errors.hpp>
#include <lbs/parallel.hpp>

#include "lbs_cli/json_writer.hpp"

namespace lbs::cli {

double Range::at(int i) const {
    if (i == steps - 1) {
        return hi;
    }
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

Range parse_range(const std::string& text) {
    Range r;
    std::istringstream is(text);
    char c1 = 0, c2 = 0;
    if (!(is >> r.lo >> c1 >> r.hi >> c2 >> r.steps) || c1 != ':' || c2 != ':' || !is.eof()) {
        throw UsageError("range must look like lo:hi:n, got '" + text + "'");
    }
    if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || !(r.lo < r.hi)) {
        throw UsageError("range needs finite lo < hi, got '" + text + "'");
    }
    if (r.steps < 2) {
        throw UsageError("range needs at least 2 steps, got '" + text + "'");
    }
    return r;
}

Plane parse_plane(const std::string& text) {
    if (text == "lambda-mu") return Plane::lambda_mu;
    if (text == "gamma-lambda") return Plane::gamma_lambda;
    if (text == "gamma-mu") return Plane::gamma_mu;
    throw UsageError("plane must be lambda-mu, gamma-lambda or gamma-mu");
}

const char* to_string(Plane p) noexcept {
    switch (p) {
        case Plane::lambda_mu: return "lambda-mu";
        case Plane::gamma_lambda: return "gamma-lambda";
        case Plane::gamma_mu: return "gamma-mu";
    }
    return "?";
}

void ScanSpec::validate() const {
    for (const Range* r : {&range1, &range2}) {
        if (r->steps < 2 || !(r->lo < r->hi)) {
            throw UsageError("scan ranges need lo < hi and at least 2 steps");
        }
    }
    if (!std::isfinite(fixed_value)) {
        throw UsageError("fixed coupling must be finite");
    }
}

Couplings ScanSpec::point(double x, double y) const {
    switch (plane) {
        case Plane::lambda_mu: return Couplings(fixed_value, x, y);
        case Plane::gamma_lambda: return Couplings(x, y, fixed_value);
        case Plane::gamma_mu: return Couplings(x, fixed_value, y);
    }
    throw UsageError("unknown plane");
}

SolveMethod parse_method(const std::string& text) {
    if (text == "det" || text == "determinant") return SolveMethod::det;
    if (text == "oracle") return SolveMethod::oracle;
    if (text == "both") return SolveMethod::both;
    throw UsageError("method must be det, oracle or both");
}

namespace {

void write_couplings(JsonWriter& j, const Couplings& c) {
    j.key("couplings").begin_object();
    j.field("gamma", c.gamma()).field("lambda", c.lambda()).field("mu", c.mu());
    j.end_object();
}

void write_optional(JsonWriter& j, std::string_view name, const std::optional<int>& v) {
    j.key(name);
    if (v) {
        j.value(*v);
    } else {
        j.null();
    }
}

void write_report(JsonWriter& j, const SpectrumReport& r) {
    j.begin_object();
    j.field("method", to_string(r.method));
    j.field("k", r.k.value());
    j.field("n_minus", r.n_minus()).field("n_plus", r.n_plus());
    j.field("below", r.below).field("above", r.above);
    j.field("residuals", r.residuals);
    j.field("warnings", r.warnings);
    j.end_object();
}

std::vector<double> differences(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> d;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        d.push_back(std::abs(a[i] - b[i]));
    }
    return d;
}

}  // namespace

int cmd_classify(const Couplings& c, const Settings& s, std::ostream& out) {
    const ThresholdCoefficients t = threshold_coefficients(c);
    const ComponentLabel label = predicted_counts(c, s.boundary);
    JsonWriter j(out);
    j.begin_object();
    write_couplings(j, c);
    j.field("C_minus", t.c_minus).field("C_plus", t.c_plus);
    j.field("D_minus", t.d_minus).field("D_plus", t.d_plus);
    j.field("region_minus", to_string(classify_region(Side::below, c.lambda(), c.mu(), s.boundary)));
    j.field("region_plus", to_string(classify_region(Side::above, c.lambda(), c.mu(), s.boundary)));
    write_optional(j, "alpha", label.alpha);
    write_optional(j, "beta", label.beta);
    j.field("on_boundary", !label.alpha || !label.beta);
    j.end_object();
    j.finish();
    return exit_ok;
}

int cmd_solve(const Couplings& c, const Quasimomentum& k, SolveMethod method, const Settings& s,
              std::ostream& out) {
    std::vector<SpectrumReport> reports;
    if (method != SolveMethod::oracle) {
        reports.push_back(find_eigenvalues(c, k, s.solver));
    }
    if (method != SolveMethod::det) {
        reports.push_back(oracle_spectrum(c, k, s.oracle));
    }
    const SpectralWindow w = spectral_window(k);

    JsonWriter j(out);
    j.begin_object();
    write_couplings(j, c);
    j.field("k", k.value());
    j.key("window").begin_object().field("e_min", w.e_min).field("e_max", w.e_max).end_object();
    j.key("reports").begin_array();
    for (const auto& r : reports) {
        write_report(j, r);
    }
    j.end_array();

    int code = exit_ok;
    if (method == SolveMethod::both) {
        const SpectrumReport& d = reports[0];
        const SpectrumReport& o = reports[1];
        const bool agree = d.n_minus() == o.n_minus() && d.n_plus() == o.n_plus();
        j.key("discrepancy").begin_object();
        j.field("counts_agree", agree);
        j.field("below", differences(d.below, o.below));
        j.field("above", differences(d.above, o.above));
        j.end_object();
        if (!agree) {
            code = exit_disagreement;
        }
    }
    j.end_object();
    j.finish();
    return code;
}

void write_scan(const ScanSpec& spec, const Settings& s, std::ostream& out) {
    spec.validate();
    const std::size_t n1 = static_cast<std::size_t>(spec.range1.steps);
    const std::size_t n2 = static_cast<std::size_t>(spec.range2.steps);
    std::vector<std::string> rows(n1 * n2);

    parallel_for(rows.size(), [&](std::size_t idx) {
        const int i = static_cast<int>(idx / n2);
        const int jdx = static_cast<int>(idx % n2);
        const double x = spec.range1.at(i);
        const double y = spec.range2.at(jdx);
        const Couplings c = spec.point(x, y);
        const ComponentLabel label = predicted_counts(c, s.boundary);
        std::string row = format_double(x) + "," + format_double(y) + ",";
        row += label.alpha ? std::to_string(*label.alpha) : "";
        row += ",";
        row += label.beta ? std::to_string(*label.beta) : "";
        row += (label.alpha && label.beta) ? ",0" : ",1";
        if (spec.mode == ScanMode::solve) {
            const SpectrumReport r = find_eigenvalues(c, spec.k, s.solver);
            row += "," + std::to_string(r.n_minus()) + "," + std::to_string(r.n_plus());
            for (const auto* side : {&r.below, &r.above}) {
                for (std::size_t m = 0; m < 3; ++m) {
                    row += ",";
                    if (m < side->size()) {
                        row += format_double((*side)[m]);
                    }
                }
            }
        }
        rows[idx] = std::move(row);
    });

    const char* names[3][2] = {{"lambda", "mu"}, {"gamma", "lambda"}, {"gamma", "mu"}};
    const auto& nm = names[static_cast<int>(spec.plane)];
    out << nm[0] << ',' << nm[1] << ",alpha,beta,on_boundary";
    if (spec.mode == ScanMode::solve) {
        out << ",n_minus,n_plus,below_1,below_2,below_3,above_1,above_2,above_3";
    }
    out << '\n';
    for (const auto& row : rows) {
        out << row << '\n';
    }
}

int cmd_scan(const ScanSpec& spec, const Settings& s, const std::string& out_path,
             std::ostream& log) {
    if (out_path.empty() || out_path == "-") {
        write_scan(spec, s, std::cout);
        return exit_ok;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open '" + out_path + "' for writing");
    }
    write_scan(spec, s, file);
    file.close();
    if (!file) {
        throw std::runtime_error("failed writing '" + out_path + "'");
    }
    log << "wrote " << spec.range1.steps * spec.range2.steps << " rows to " << out_path << '\n';
    return exit_ok;
}

int cmd_sweep(const Couplings& c, const std::vector<Quasimomentum>& ks, const Settings& s,
              std::ostream& out) {
    JsonWriter j(out);
    j.begin_object();
    write_couplings(j, c);
    int code = exit_ok;
    std::vector<SpectrumReport> reports;
    try {
        reports = k_sweep(c, ks, s.solver);
        j.field("monotone", true);
    } catch (const MonotonicityError& e) {
        j.field("monotone", false).field("error", e.what());
        code = exit_verification_failed;
    }
    j.key("reports").begin_array();
    for (const auto& r : reports) {
        write_report(j, r);
    }
    j.end_array();
    j.end_object();
    j.finish();
    return code;
}

}  // namespace lbs::cli
