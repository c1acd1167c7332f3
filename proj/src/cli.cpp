#include "leachate/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "leachate/analytical.hpp"
#include "leachate/config.hpp"
#include "leachate/csv.hpp"
#include "leachate/engine.hpp"
#include "leachate/error.hpp"
#include "leachate/svg.hpp"
#include "leachate/verify.hpp"

namespace leachate {

namespace {

struct CommonOptions {
    std::string config_path;
    std::string preset;
    std::string dt;
    std::string t_end;
    std::string D;
    std::string v;
    std::optional<double> R;
    std::string scheme;
    std::string sides;
    std::string bottom;
    std::string stability;
};

void add_common(CLI::App* cmd, CommonOptions& o, bool with_dt = true) {
    cmd->add_option("--config", o.config_path, "Config file");
    cmd->add_option("--preset", o.preset, "Built-in scenario (landfill-cl, landfill-k)");
    if (with_dt) cmd->add_option("--dt", o.dt, "Timestep with unit, e.g. 0.01day");
    cmd->add_option("--t-end", o.t_end, "Final time with unit, e.g. 100day");
    cmd->add_option("--D", o.D, "Diffusion coefficient with unit, e.g. 0.02m2/a");
    cmd->add_option("--v", o.v, "Darcy velocity with unit, e.g. 0.01cm/day");
    cmd->add_option("--R", o.R, "Retardation factor (>= 1)");
    cmd->add_option("--scheme", o.scheme, "Advection stencil: paper_forward | upwind");
    cmd->add_option("--sides", o.sides, "Side condition: reflect | neumann_zero_flux");
    cmd->add_option("--bottom", o.bottom, "Bottom condition: zero_gradient | frozen");
    cmd->add_option("--stability", o.stability, "Stability policy: error | warn | silent");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Profile and study commands default to the forward stencil unless the
// user or config chose a scheme.
ParsedConfig load_base(const CommonOptions& o, bool forward_default) {
    ParsedConfig parsed;
    if (!o.config_path.empty()) {
        if (!o.preset.empty()) throw ConfigError("give either --config or --preset, not both");
        parsed = parse_config_document(read_file(o.config_path));
    } else if (!o.preset.empty()) {
        try {
            parsed.config = load_scenario(o.preset);
        } catch (const LookupError& e) {
            throw ConfigError(e.what());
        }
        parsed.preset = o.preset;
    } else {
        throw ConfigError("need --config FILE or --preset NAME");
    }

    SimulationConfig& c = parsed.config;
    try {
        if (!o.dt.empty()) c.dt = parse_time_day(o.dt);
        if (!o.t_end.empty()) {
            c.t_end = parse_time_day(o.t_end);
            std::erase_if(c.snapshot_times, [&](double t) { return t > c.t_end; });
        }
        if (!o.D.empty()) c.params.D = parse_diffusion_cm2day(o.D);
        if (!o.v.empty()) c.params.v = parse_velocity_cmday(o.v);
        if (o.R) c.params.species.retardation_inputs = ExplicitRetardation{*o.R};
        if (!o.scheme.empty()) {
            c.scheme = parse_scheme(o.scheme);
            parsed.scheme_explicit = true;
        }
        if (!o.sides.empty()) c.bc.sides = parse_side_boundary(o.sides);
        if (!o.bottom.empty()) c.bc.bottom = parse_bottom_boundary(o.bottom);
        if (!o.stability.empty()) c.stability_policy = parse_stability_policy(o.stability);
        if (forward_default && !parsed.scheme_explicit) c.scheme = Scheme::paper_forward;
        c.validate();
    } catch (const LookupError& e) {
        throw ConfigError(e.what());
    } catch (const ParameterError& e) {
        throw ConfigError(std::string("invalid configuration: ") + e.what());
    }
    return parsed;
}

std::vector<double> number_list(const std::string& text, const char* what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ConfigError(std::string(what) + ": bad number '" + item + "'");
        }
    }
    if (out.empty()) throw ConfigError(std::string(what) + ": empty list");
    return out;
}

std::string printf_str(const char* format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

void print_diagnostics(std::ostream& out, const StabilityDiagnostics& d) {
    out << printf_str("r_x=%.6g r_z=%.6g r_x+r_z=%.6g courant_x=%.6g courant_z=%.6g peclet_x=%.6g peclet_z=%.6g "
                      "stable=%s\n",
                      d.r_x, d.r_z, d.r_x + d.r_z, d.courant_x, d.courant_z, d.peclet_x, d.peclet_z,
                      d.stable ? "true" : "false");
}

void warn_if_unstable(std::ostream& err, const SimulationConfig& c) {
    const auto d = stability_diagnostics(c);
    if (!d.stable && c.stability_policy == StabilityPolicy::warn) {
        err << printf_str("warning: dt=%g day violates explicit stability limits (r_x+r_z=%.4g, courant_z=%.4g)\n",
                          c.dt, d.r_x + d.r_z, d.courant_z);
    }
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << text;
    out.flush();
    if (!out) throw IoError("write to '" + path + "' failed");
}

int profile_column(const GridSpec& g, const std::optional<double>& x) {
    if (!x) return middle_column(g);
    const int i = static_cast<int>(std::lround(*x / g.dx));
    return std::clamp(i, 0, g.nx - 1);
}

std::string day_label(const char* prefix, double t) { return printf_str("%s%g day", prefix, t); }

int cmd_run(const CommonOptions& o, const std::string& csv_flag, const std::string& svg_flag, std::ostream& out,
            std::ostream& err) {
    const ParsedConfig parsed = load_base(o, true);
    const SimulationConfig& c = parsed.config;
    warn_if_unstable(err, c);
    const SimulationResult result = run(c);

    out << printf_str("scheme=%s sides=%s bottom=%s dt=%g day t_end=%g day steps=%ld\n",
                      std::string(to_string(c.scheme)).c_str(), std::string(to_string(c.bc.sides)).c_str(),
                      std::string(to_string(c.bc.bottom)).c_str(), c.dt, c.t_end, result.steps_taken);
    print_diagnostics(out, result.diagnostics);
    out << "negative_events=" << result.negative_events.count;
    if (result.negative_events.first) {
        const auto& f = *result.negative_events.first;
        out << printf_str(" first=(t=%g, i=%d, j=%d)", f.t, f.i, f.j);
    }
    out << '\n';

    const std::string csv = !csv_flag.empty() ? csv_flag : parsed.output.csv_path;
    const std::string svg = !svg_flag.empty() ? svg_flag : parsed.output.svg_path;
    if (!csv.empty()) {
        const std::size_t rows = write_profiles_csv(result, csv);
        out << "wrote " << rows << " rows to " << csv << '\n';
    }
    if (!svg.empty()) {
        const int col = profile_column(c.grid, parsed.output.profile_x);
        std::vector<ProfileSeries> series;
        std::vector<double> z(c.grid.nz);
        for (int j = 0; j < c.grid.nz; ++j) z[j] = j * c.grid.dz;
        for (const auto& snap : result.snapshots) {
            series.push_back({day_label("t = ", snap.t), z, z_profile(snap, col)});
        }
        SvgOptions opts;
        opts.title = c.params.species.name + " profile at x = " + printf_str("%g", col * c.grid.dx) + " cm (" +
                     std::string(to_string(c.bc.sides)) + ")";
        write_text(svg, render_profile_svg(series, opts));
        out << "wrote " << svg << '\n';
    }
    return kExitOk;
}

int cmd_compare(const CommonOptions& o, const std::string& dz_text, std::ostream& out, std::ostream& err) {
    const ParsedConfig parsed = load_base(o, false);
    const SimulationConfig& base = parsed.config;
    const double dz = parse_length_cm(dz_text);
    const double dt = o.dt.empty() ? 0.005 : base.dt;
    SimulationConfig cfg = oracle_config(base, dz, dt);
    if (!o.scheme.empty()) cfg.scheme = base.scheme;
    warn_if_unstable(err, cfg);
    const SimulationResult result = run(cfg);
    const auto profile = z_profile(result.snapshots.back(), middle_column(cfg.grid));
    const auto exact = oracle_z_profile(cfg.grid, cfg.params, cfg.t_end);
    const ErrorReport rep = error_norms(profile, exact, cfg.params.C0);

    out << printf_str("compare: scheme=%s nz=%d dz=%g cm depth=%g cm dt=%g day t=%g day\n",
                      std::string(to_string(cfg.scheme)).c_str(), cfg.grid.nz, cfg.grid.dz, cfg.grid.extent_z(),
                      cfg.dt, cfg.t_end);
    print_diagnostics(out, result.diagnostics);
    out << printf_str("l2=%.6g mg/L linf=%.6g mg/L rel_linf=%.6g nodes=%zu axis=%s\n", rep.l2, rep.linf,
                      rep.rel_linf, rep.node_count, rep.compared_axis.c_str());
    return kExitOk;
}

std::string order_text(const std::optional<double>& o) { return o ? printf_str("%.3f", *o) : std::string("sat"); }

void print_refinement(std::ostream& out, const RefinementStudy& s, const char* control_name) {
    out << printf_str("%10s %7s %10s %12s %12s %10s %12s %8s\n", control_name, "stable", "r_x+r_z", "l2", "linf",
                      "rel_linf", "successive", "order");
    for (std::size_t k = 0; k < s.runs.size(); ++k) {
        const auto& r = s.runs[k];
        const auto& rep = s.reports[k];
        const std::string succ = k < s.successive_rel_linf.size() ? printf_str("%.4g", s.successive_rel_linf[k]) : "-";
        const std::string ord = k > 0 && k - 1 < s.observed_orders.size() ? order_text(s.observed_orders[k - 1]) : "-";
        out << printf_str("%10g %7s %10.4g %12.6g %12.6g %10.4g %12s %8s\n", r.control,
                          r.diagnostics.stable ? "yes" : "no", r.diagnostics.r_x + r.diagnostics.r_z, rep.l2,
                          rep.linf, rep.rel_linf, succ.c_str(), ord.c_str());
    }
}

void write_study_svg(const std::string& path, const RefinementStudy& s, const char* label_prefix,
                     const std::string& title) {
    std::vector<ProfileSeries> series;
    for (const auto& r : s.runs) {
        series.push_back({printf_str("%s%g", label_prefix, r.control), r.z, r.profile});
    }
    const auto& finest = s.runs.back();
    series.push_back({"exact", finest.z, finest.exact});
    SvgOptions opts;
    opts.title = title;
    write_text(path, render_profile_svg(series, opts));
}

int cmd_study_dt(const CommonOptions& o, const std::string& dts, double tol, const std::string& svg,
                 std::ostream& out, std::ostream& err) {
    const ParsedConfig parsed = load_base(o, true);
    const auto dt_list = number_list(dts, "--dts");
    for (const double dt : dt_list) {
        SimulationConfig c = parsed.config;
        c.dt = dt;
        warn_if_unstable(err, c);
    }
    const RefinementStudy s = timestep_study(parsed.config, dt_list, tol);
    out << printf_str("timestep study: scheme=%s t_end=%g day tol=%g\n",
                      std::string(to_string(parsed.config.scheme)).c_str(), parsed.config.t_end, tol);
    print_refinement(out, s, "dt_day");
    out << "independent_at="
        << (s.independent_at ? printf_str("%g day", *s.independent_at) : std::string("none")) << '\n';
    if (!svg.empty()) {
        write_study_svg(svg, s, "dt = ", "FD vs exact at different time steps");
        out << "wrote " << svg << '\n';
    }
    return kExitOk;
}

int cmd_study_mesh(const CommonOptions& o, const std::string& hs, bool scale_dt, const std::string& svg,
                   std::ostream& out, std::ostream&) {
    const ParsedConfig parsed = load_base(o, true);
    const auto h_list = number_list(hs, "--hs");
    const RefinementStudy s = mesh_study(parsed.config, h_list, MeshStudyOptions{scale_dt});
    out << printf_str("mesh study: scheme=%s dt=%g day%s t_end=%g day\n",
                      std::string(to_string(parsed.config.scheme)).c_str(), parsed.config.dt,
                      scale_dt ? " (scaled with h^2)" : "", parsed.config.t_end);
    print_refinement(out, s, "h_cm");
    if (!svg.empty()) {
        write_study_svg(svg, s, "h = ", "FD vs exact at different mesh sizes");
        out << "wrote " << svg << '\n';
    }
    return kExitOk;
}

int cmd_study_d(const CommonOptions& o, const std::string& ds, const std::string& svg, std::ostream& out,
                std::ostream&) {
    const ParsedConfig parsed = load_base(o, true);
    const auto d_list = number_list(ds, "--ds");
    const SensitivityStudy s = sensitivity_study(parsed.config, d_list);
    out << printf_str("diffusion sensitivity: scheme=%s t_end=%g day\n",
                      std::string(to_string(parsed.config.scheme)).c_str(), parsed.config.t_end);
    std::vector<ProfileSeries> series;
    for (const auto& p : s.profiles) {
        out << printf_str("D=%g m2/a monotone=%s surface=%.6g bottom=%.6g\n", p.D_m2_per_annum,
                          p.monotone_non_increasing ? "yes" : "no", p.profile.front(), p.profile.back());
        series.push_back({printf_str("D = %g m2/a", p.D_m2_per_annum), p.z, p.profile});
    }
    if (s.max_deviation) {
        out << printf_str("max_deviation=%.6g mg/L (%.4g of C0)\n", *s.max_deviation,
                          *s.max_deviation / parsed.config.params.C0);
    } else {
        out << "max_deviation=none\n";
    }
    out << "trend_preserved=" << (s.trend_preserved ? "yes" : "no") << '\n';
    if (!svg.empty()) {
        SvgOptions opts;
        opts.title = "Effect of diffusion coefficient";
        write_text(svg, render_profile_svg(series, opts));
        out << "wrote " << svg << '\n';
    }
    return kExitOk;
}

int cmd_scenario(const std::string& name, std::ostream& out) {
    if (name.empty()) {
        for (const auto& n : scenario_names()) out << n << '\n';
        return kExitOk;
    }
    try {
        out << "preset = " << name << "\n\n" << render_config(load_scenario(name));
    } catch (const LookupError& e) {
        throw ConfigError(e.what());
    }
    return kExitOk;
}

int cmd_check(const CommonOptions& o, std::ostream& out) {
    const ParsedConfig parsed = load_base(o, false);
    const auto d = stability_diagnostics(parsed.config);
    out << printf_str("dt=%g day D=%.6g cm2/day v=%g cm/day dx=%g cm dz=%g cm\n", parsed.config.dt,
                      parsed.config.params.D, parsed.config.params.v, parsed.config.grid.dx, parsed.config.grid.dz);
    print_diagnostics(out, d);
    return kExitOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Leachate ion transport through saturated soil: explicit finite-difference solver, analytical "
                 "verification and refinement studies"};
    app.name("leachate");
    app.require_subcommand(1);
    app.footer("Exit codes: 0 success, 2 config error, 3 stability refusal, 4 numerical blow-up, 5 I/O failure");

    CommonOptions common;
    std::string csv_out, svg_out, dz = "0.25cm", dts = "100,1,0.1,0.01", hs = "2,1,0.5", ds = "0.018,0.02";
    std::string scenario_name;
    double tol = 0.02;
    bool scale_dt = false;

    auto* run_cmd = app.add_subcommand("run", "Run a simulation and write CSV/SVG profiles");
    add_common(run_cmd, common);
    run_cmd->add_option("--out", csv_out, "Profile CSV path");
    run_cmd->add_option("--svg", svg_out, "Profile SVG path");

    auto* compare_cmd = app.add_subcommand("compare", "FD on a deep 1-D column vs the analytical profile");
    add_common(compare_cmd, common);
    compare_cmd->add_option("--dz", dz, "Vertical spacing with unit")->capture_default_str();

    auto* dt_cmd = app.add_subcommand("study-dt", "Timestep refinement and grid independency");
    add_common(dt_cmd, common, false);
    dt_cmd->add_option("--dts", dts, "Timesteps in days, strictly decreasing")->capture_default_str();
    dt_cmd->add_option("--tol", tol, "Successive-profile tolerance relative to C0")->capture_default_str();
    dt_cmd->add_option("--svg", svg_out, "SVG path");

    auto* mesh_cmd = app.add_subcommand("study-mesh", "Mesh-size sweep at fixed physical extent");
    add_common(mesh_cmd, common);
    mesh_cmd->add_option("--hs", hs, "Spacings in cm, strictly decreasing")->capture_default_str();
    mesh_cmd->add_flag("--scale-dt", scale_dt, "Scale dt with h^2");
    mesh_cmd->add_option("--svg", svg_out, "SVG path");

    auto* d_cmd = app.add_subcommand("study-d", "Diffusion-coefficient sensitivity");
    add_common(d_cmd, common);
    d_cmd->add_option("--ds", ds, "Diffusion coefficients in m2/a")->capture_default_str();
    d_cmd->add_option("--svg", svg_out, "SVG path");

    auto* scenario_cmd = app.add_subcommand("scenario", "List presets, or dump one as a config document");
    scenario_cmd->add_option("name", scenario_name, "Preset to dump");

    auto* check_cmd = app.add_subcommand("check", "Print stability diagnostics without running");
    add_common(check_cmd, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    }

    try {
        if (run_cmd->parsed()) return cmd_run(common, csv_out, svg_out, out, err);
        if (compare_cmd->parsed()) return cmd_compare(common, dz, out, err);
        if (dt_cmd->parsed()) return cmd_study_dt(common, dts, tol, svg_out, out, err);
        if (mesh_cmd->parsed()) return cmd_study_mesh(common, hs, scale_dt, svg_out, out, err);
        if (d_cmd->parsed()) return cmd_study_d(common, ds, svg_out, out, err);
        if (scenario_cmd->parsed()) return cmd_scenario(scenario_name, out);
        if (check_cmd->parsed()) return cmd_check(common, out);
    } catch (const StabilityError& e) {
        err << "error: " << e.what() << '\n';
        return kExitStability;
    } catch (const BlowUpError& e) {
        err << "error: " << e.what() << '\n';
        return kExitBlowUp;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    return kExitConfig;
}

}  // namespace leachate
