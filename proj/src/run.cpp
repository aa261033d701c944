#include "chv/run.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>

#include "chv/cubic.hpp"
#include "chv/diff.hpp"
#include "chv/eigen.hpp"
#include "chv/errors.hpp"
#include "chv/spectra.hpp"

namespace chv {

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_u64(std::uint64_t v) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%llu",
                  static_cast<unsigned long long>(v));
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 8);
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

std::string json_vec(const Vec5& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < 5; ++i) {
        if (i) out += ", ";
        out += fmt_double(v[i]);
    }
    return out + "]";
}

std::vector<std::string> effective_selection(const RunConfig& cfg) {
    if (cfg.checks.empty() ||
        (cfg.checks.size() == 1 && cfg.checks[0] == "all")) {
        std::vector<std::string> names;
        for (const CheckDef& def : check_registry())
            if (def.in_all) names.push_back(def.name);
        return names;
    }
    return cfg.checks;
}

std::string delta_problem(const CheckDef& def, double delta) {
    switch (def.delta_req) {
        case DeltaReq::kHalfOnly:
            if (delta != 0.5)
                return std::string("check '") + def.name +
                       "' is specific to --delta 0.5";
            break;
        case DeltaReq::kHalfToOne:
            if (delta < 0.5 || delta >= 1.0)
                return std::string("check '") + def.name +
                       "' requires --delta in [0.5, 1)";
            break;
        case DeltaReq::kAny:
            break;
    }
    return "";
}

}  // namespace

std::string validate(const RunConfig& cfg) {
    if (!(cfg.delta >= 0.0 && cfg.delta < 1.0))
        return "--delta must lie in [0, 1)";
    if (!(cfg.c > 0.0)) return "--c must be positive";
    if (cfg.samples < 1) return "--samples must be at least 1";
    if (!(cfg.r_min > 0.0 && cfg.r_min < 0.5))
        return "--r-min must lie in (0, 0.5)";
    if (!(cfg.grid_step > 0.0 && cfg.grid_step <= 1e-3))
        return "--grid-step must lie in (0, 1e-3]";
    if (cfg.threads < 0) return "--threads must be non-negative";
    if (cfg.format != "json" && cfg.format != "csv")
        return "--format must be json or csv";
    return "";
}

std::uint64_t config_digest(const RunConfig& cfg) {
    std::string canon = "delta=" + fmt_double(cfg.delta) +
                        ";c=" + fmt_double(cfg.c) +
                        ";samples=" + fmt_u64(cfg.samples) +
                        ";seed=" + fmt_u64(cfg.seed) +
                        ";r_min=" + fmt_double(cfg.r_min) +
                        ";grid_step=" + fmt_double(cfg.grid_step) +
                        ";checks=";
    const std::vector<std::string> sel =
        cfg.checks.empty() ? std::vector<std::string>{"all"} : cfg.checks;
    for (std::size_t i = 0; i < sel.size(); ++i) {
        if (i) canon += ',';
        canon += sel[i];
    }

    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char ch : canon) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string usage_problems(const RunConfig& cfg) {
    const std::string range = validate(cfg);
    if (!range.empty()) return range;
    for (const std::string& name : effective_selection(cfg)) {
        const CheckDef* def = find_check(name);
        if (!def) return "unknown check '" + name + "'";
        const std::string dp = delta_problem(*def, cfg.delta);
        if (!dp.empty()) return dp;
    }
    return "";
}

std::vector<CheckReport> run(const RunConfig& cfg) {
    std::vector<CheckReport> reports;
    for (const std::string& name : effective_selection(cfg)) {
        const CheckDef* def = find_check(name);
        if (!def) throw Error("unknown check '" + name + "'");
        reports.push_back(def->fn(cfg));
    }
    return reports;
}

std::string emit_report_json(const std::vector<CheckReport>& reports,
                             const RunConfig& cfg) {
    char digest[20];
    std::snprintf(digest, sizeof digest, "%016llx",
                  static_cast<unsigned long long>(config_digest(cfg)));

    std::string out = "[\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const CheckReport& r = reports[i];
        out += "  {\n";
        out += "    \"name\": \"" + json_escape(r.name) + "\",\n";
        out += std::string("    \"pass\": ") + (r.pass ? "true" : "false") +
               ",\n";
        out += "    \"samples\": " + fmt_u64(r.samples) + ",\n";
        out += "    \"worst\": " + fmt_double(r.worst) + ",\n";
        out += "    \"bound\": " + fmt_double(r.bound) + ",\n";
        out += "    \"tolerance\": " + fmt_double(r.tolerance) + ",\n";
        out += "    \"witness\": ";
        switch (r.witness.kind) {
            case Witness::kNone: out += "null"; break;
            case Witness::kPoint:
                out += "{\"a\": " + json_vec(r.witness.a) + "}";
                break;
            case Witness::kPair:
                out += "{\"a\": " + json_vec(r.witness.a) +
                       ", \"b\": " + json_vec(r.witness.b) + "}";
                break;
        }
        out += ",\n";
        out += "    \"notes\": \"" + json_escape(r.notes) + "\",\n";
        out += "    \"seed\": " + fmt_u64(cfg.seed) + ",\n";
        out += std::string("    \"config_digest\": \"") + digest + "\"\n";
        out += i + 1 < reports.size() ? "  },\n" : "  }\n";
    }
    out += "]\n";
    return out;
}

std::string emit_report_csv(const std::vector<CheckReport>& reports) {
    std::string out = "name,pass,samples,worst,bound\n";
    for (const CheckReport& r : reports) {
        out += r.name;
        out += r.pass ? ",true," : ",false,";
        out += fmt_u64(r.samples) + "," + fmt_double(r.worst) + "," +
               fmt_double(r.bound) + "\n";
    }
    return out;
}

namespace {

struct DumpRow {
    double p = 0.0, q = 0.0, s = 0.0, t = 0.0, stat = 0.0;
};

void write_row(std::ostream& os, std::uint64_t index, const DumpRow& row) {
    os << fmt_u64(index) << ',' << fmt_double(row.p) << ','
       << fmt_double(row.q) << ',' << fmt_double(row.s) << ','
       << fmt_double(row.t) << ',' << fmt_double(row.stat) << '\n';
}

double spectrum_dev(const Vec5& x, const RunConfig& cfg, bool variant) {
    std::array<double, 5> analytic;
    const double p = recover_p(x);
    if (variant)
        analytic = mu_spectrum_variant(p, cfg.delta);
    else
        analytic = mu_spectrum_half(p);
    std::sort(analytic.begin(), analytic.end(), std::greater<double>());
    const auto measured =
        variant ? jacobi_spectrum(hess_w(x, cfg.delta, cfg.r_min))
                : jacobi_spectrum(w_autodiff(x, cfg.delta, cfg.r_min).hess);
    double dev = 0.0;
    for (std::size_t i = 0; i < 5; ++i)
        dev = std::max(dev, std::abs(analytic[i] - measured[i]));
    return dev;
}

}  // namespace

void dump_samples(const RunConfig& cfg, std::ostream& os) {
    if (cfg.checks.size() != 1)
        throw Error("dump needs exactly one check name");
    const std::string name = cfg.checks[0];
    const CheckDef* def = find_check(name);
    if (!def || !def->dumpable)
        throw Error("check '" + name + "' does not support per-sample dumps");

    os << "index,p,q,s,t,statistic\n";
    const double nan = std::nan("");

    if (name == "ordering-table" || name == "derivative-bound" ||
        name == "oddness") {
        const std::uint64_t count =
            static_cast<std::uint64_t>(std::floor(2.0 / cfg.grid_step)) + 1;
        for (std::uint64_t k = 0; k < count; ++k) {
            const double p = k + 1 == count
                                 ? 1.0
                                 : -1.0 + static_cast<double>(k) *
                                              cfg.grid_step;
            std::array<double, 5> vals{};
            if (name == "ordering-table") {
                vals = ordered_spectrum_half(p);
            } else if (name == "derivative-bound") {
                vals = mu_derivatives_half(p);
            } else {
                const auto pos = ordered_spectrum_half(p);
                const auto neg = ordered_spectrum_half(-p);
                for (std::size_t i = 0; i < 5; ++i)
                    vals[i] = std::abs(neg[i] + pos[4 - i]);
            }
            for (std::size_t i = 0; i < 5; ++i)
                write_row(os, k * 5 + i,
                          {p, static_cast<double>(i), 1.0, 1.0, vals[i]});
        }
        return;
    }

    for (std::uint64_t k = 0; k < cfg.samples; ++k) {
        DumpRow row;
        if (name == "spectrum-match" || name == "spectrum-variant") {
            const Vec5 x = nth_sphere_sample(cfg.seed, k);
            row = {recover_p(x), 0.0, 1.0, 1.0,
                   spectrum_dev(x, cfg, name == "spectrum-variant")};
        } else if (name == "trace-identity") {
            const Vec5 x = nth_annulus_sample(cfg.seed, k, cfg.r_min);
            const double lhs = trace(hess_w(x, cfg.delta, cfg.r_min));
            const double rhs = (1.0 + cfg.delta) * (cfg.delta - 8.0) *
                               w_value(x, cfg.delta, cfg.r_min) / norm_sq(x);
            row = {recover_p(x), 0.0, norm(x), 0.0,
                   std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs))};
        } else if (name == "eiconal") {
            const Vec5 x = nth_annulus_sample(cfg.seed, k, cfg.r_min);
            row = {recover_p(x), 0.0, norm(x), 0.0, eiconal_ratio(x)};
        } else if (name == "weyl") {
            row = {0.0, 0.0, 0.0, 0.0, weyl_stat(cfg.seed, k)};
        } else {
            const PairSample sm = nth_pair_sample(cfg.seed, k, cfg.r_min);
            row.p = recover_p(sm.a);
            row.q = recover_p(sm.b);
            row.s = norm(sm.a);
            row.t = norm(sm.b);
            if (name == "gradient-lipschitz") {
                const PairStat st = grad_lipschitz_stat(sm, cfg.r_min);
                row.stat = st.degenerate ? nan : st.value;
            } else if (name == "hessian-separation") {
                const PairStat st = hessian_separation_stat(sm, cfg.r_min);
                row.stat = st.degenerate ? nan : st.value;
            } else if (name == "scaled-hessian-lipschitz") {
                const PairStat st = scaled_hessian_stat(sm, cfg.r_min);
                row.stat = st.degenerate ? nan : st.value;
            } else if (name == "hessian-diff-ratio") {
                const RatioStat st =
                    hessian_diff_ratio_stat(sm, cfg.delta, cfg.r_min);
                row.stat = st.degenerate ? nan
                           : st.hyperbolic ? st.ratio
                                           : -1.0;
            } else if (name == "hyperbolicity") {
                const RatioStat st =
                    hyperbolicity_stat(sm, cfg.delta, cfg.c, cfg.r_min);
                row.stat = st.degenerate ? nan
                           : st.hyperbolic ? st.ratio
                                           : -1.0;
            } else if (name == "decomposition") {
                const DecompStat st =
                    decomposition_stat(sm, cfg.delta, cfg.c, cfg.r_min);
                row.stat = st.identity_rel_err;
            } else {
                throw Error("check '" + name + "' has no dump rule");
            }
        }
        write_row(os, k, row);
    }
}

void write_output(const RunConfig& cfg, const std::string& text) {
    if (cfg.output.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream f(cfg.output, std::ios::binary);
    if (!f) throw IoError("cannot open '" + cfg.output + "' for writing");
    f << text;
    f.flush();
    if (!f) throw IoError("failed while writing '" + cfg.output + "'");
}

}  // namespace chv
