#include "leachate/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "leachate/error.hpp"

namespace leachate {

namespace {

struct UnitFactor {
    std::string_view unit;
    double factor;
};

constexpr UnitFactor kLength[] = {{"cm", 1.0}, {"mm", 0.1}, {"m", 100.0}};
constexpr UnitFactor kTime[] = {{"day", 1.0}, {"days", 1.0}, {"d", 1.0},          {"h", 1.0 / 24.0},
                                {"hour", 1.0 / 24.0}, {"s", 1.0 / 86400.0}, {"a", 365.0}, {"year", 365.0}};
constexpr UnitFactor kDiffusion[] = {{"cm2/day", 1.0},       {"cm2/d", 1.0},        {"cm2/s", 86400.0},
                                     {"m2/a", 1.0e4 / 365.0}, {"m2/year", 1.0e4 / 365.0}, {"m2/day", 1.0e4},
                                     {"m2/d", 1.0e4},         {"m2/s", 1.0e4 * 86400.0}};
constexpr UnitFactor kVelocity[] = {{"cm/day", 1.0},   {"cm/d", 1.0},       {"cm/s", 86400.0}, {"m/day", 100.0},
                                    {"m/d", 100.0},    {"m/a", 100.0 / 365.0}, {"m/year", 100.0 / 365.0},
                                    {"m/s", 8.64e6}};
constexpr UnitFactor kConcentration[] = {{"mg/L", 1.0}, {"g/m3", 1.0}, {"ug/L", 1e-3}, {"mg/m3", 1e-3}, {"g/L", 1e3}};
// Density in g/cm3 and distribution coefficient in cm3/g, so rho*kd is dimensionless.
constexpr UnitFactor kDensity[] = {{"g/cm3", 1.0}, {"kg/L", 1.0}, {"kg/m3", 1e-3}};
constexpr UnitFactor kDistribution[] = {{"cm3/g", 1.0}, {"mL/g", 1.0}, {"L/kg", 1.0}, {"m3/kg", 1e3}};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

// Leading number and the trimmed remainder.
std::pair<double, std::string_view> split_number(std::string_view text, const std::string& where) {
    text = trim(text);
    double value = 0.0;
    const char* begin = text.data();
    const char* end = text.data() + text.size();
    if (!text.empty() && text.front() == '+') ++begin;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || !std::isfinite(value)) throw ConfigError(where + ": expected a number, got '" + std::string(text) + "'");
    return {value, trim(std::string_view(ptr, static_cast<std::size_t>(end - ptr)))};
}

template <std::size_t N>
double with_unit(std::string_view text, const UnitFactor (&units)[N], const std::string& where) {
    const auto [value, unit] = split_number(text, where);
    if (unit.empty()) {
        throw ConfigError(where + ": missing unit suffix (e.g. '" + std::string(units[0].unit) + "')");
    }
    for (const auto& u : units) {
        if (u.unit == unit) return value * u.factor;
    }
    std::string valid;
    for (const auto& u : units) {
        if (!valid.empty()) valid += ", ";
        valid += u.unit;
    }
    throw ConfigError(where + ": unknown unit '" + std::string(unit) + "' (valid: " + valid + ")");
}

double bare_number(std::string_view text, const std::string& where) {
    const auto [value, rest] = split_number(text, where);
    if (!rest.empty()) throw ConfigError(where + ": dimensionless value must not carry a unit");
    return value;
}

int bare_count(std::string_view text, const std::string& where) {
    const double v = bare_number(text, where);
    if (v != std::floor(v) || v < 0 || v > 1e8) throw ConfigError(where + ": expected a non-negative integer");
    return static_cast<int>(v);
}

double time_factor(std::string_view unit, const std::string& where) {
    for (const auto& u : kTime) {
        if (u.unit == unit) return u.factor;
    }
    throw ConfigError(where + ": unknown time unit '" + std::string(unit) + "'");
}

// "1, 50, 100 day" or "1 day, 12 h"; a bare entry takes the unit of the next
// entry that has one.
std::vector<double> time_list(std::string_view text, const std::string& where) {
    std::vector<std::pair<double, std::string_view>> parts;
    while (true) {
        const auto comma = text.find(',');
        parts.push_back(split_number(text.substr(0, comma), where));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    std::vector<double> out(parts.size());
    std::string_view unit;
    for (std::size_t k = parts.size(); k-- > 0;) {
        if (!parts[k].second.empty()) unit = parts[k].second;
        if (unit.empty()) throw ConfigError(where + ": missing unit suffix (e.g. 'day')");
        out[k] = parts[k].first * time_factor(unit, where);
    }
    return out;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

using Section = std::map<std::string, std::string, std::less<>>;

const std::map<std::string, std::set<std::string, std::less<>>, std::less<>>& allowed_keys() {
    static const std::map<std::string, std::set<std::string, std::less<>>, std::less<>> keys = {
        {"grid", {"nx", "nz", "dx", "dz"}},
        {"transport", {"D", "v", "theta", "C0", "background"}},
        {"species", {"name", "charge", "R", "rho", "kd"}},
        {"boundary", {"top", "sides", "bottom"}},
        {"time", {"dt", "t_end", "snapshots", "scheme", "stability"}},
        {"output", {"csv", "svg", "profile_x"}},
    };
    return keys;
}

}  // namespace

double parse_length_cm(std::string_view text) { return with_unit(text, kLength, "length"); }
double parse_time_day(std::string_view text) { return with_unit(text, kTime, "time"); }
double parse_diffusion_cm2day(std::string_view text) { return with_unit(text, kDiffusion, "D"); }
double parse_velocity_cmday(std::string_view text) { return with_unit(text, kVelocity, "v"); }
double parse_concentration_mgl(std::string_view text) { return with_unit(text, kConcentration, "concentration"); }

ParsedConfig parse_config_document(std::string_view text) {
    std::map<std::string, Section, std::less<>> sections;
    std::optional<std::string> preset;
    std::string current;
    int line_no = 0;

    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find_first_of("#;"); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const std::string at = "line " + std::to_string(line_no);
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError(at + ": malformed section header");
            current = std::string(trim(line.substr(1, line.size() - 2)));
            if (!allowed_keys().contains(current)) throw ConfigError(at + ": unknown section [" + current + "]");
            if (sections.contains(current)) throw ConfigError(at + ": duplicate section [" + current + "]");
            sections[current];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ConfigError(at + ": expected 'key = value'");
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (current.empty()) {
            if (key != "preset") throw ConfigError(at + ": unknown top-level key '" + key + "' (only 'preset')");
            if (preset) throw ConfigError(at + ": duplicate key 'preset'");
            preset = value;
            continue;
        }
        if (!allowed_keys().at(current).contains(key)) {
            throw ConfigError("[" + current + "] " + key + ": unknown key");
        }
        auto& sec = sections[current];
        if (sec.contains(key)) throw ConfigError("[" + current + "] " + key + ": duplicate key");
        sec[key] = value;
    }

    ParsedConfig out;
    out.preset = preset;
    SimulationConfig& cfg = out.config;
    if (preset) {
        try {
            cfg = load_scenario(*preset);
        } catch (const LookupError& e) {
            throw ConfigError(std::string("preset: ") + e.what());
        }
    }

    auto get = [&](std::string_view sec, std::string_view key) -> const std::string* {
        const auto s = sections.find(sec);
        if (s == sections.end()) return nullptr;
        const auto k = s->second.find(key);
        return k == s->second.end() ? nullptr : &k->second;
    };
    auto where = [](std::string_view sec, std::string_view key) {
        return "[" + std::string(sec) + "] " + std::string(key);
    };
    auto missing = [&](std::string_view sec, std::string_view key) {
        return ConfigError(where(sec, key) + ": missing required key");
    };
    auto assign = [&](std::string_view sec, std::string_view key, auto&& convert, auto& target, bool is_required) {
        const std::string* v = get(sec, key);
        if (!v) {
            if (is_required && !preset) throw missing(sec, key);
            return;
        }
        target = convert(*v, where(sec, key));
    };

    auto length = [](const std::string& t, const std::string& w) { return with_unit(t, kLength, w); };
    auto timev = [](const std::string& t, const std::string& w) { return with_unit(t, kTime, w); };
    auto conc = [](const std::string& t, const std::string& w) { return with_unit(t, kConcentration, w); };
    auto count = [](const std::string& t, const std::string& w) { return bare_count(t, w); };
    auto number = [](const std::string& t, const std::string& w) { return bare_number(t, w); };

    assign("grid", "nx", count, cfg.grid.nx, true);
    assign("grid", "nz", count, cfg.grid.nz, true);
    assign("grid", "dx", length, cfg.grid.dx, true);
    assign("grid", "dz", length, cfg.grid.dz, true);

    assign("transport", "D", [](const std::string& t, const std::string& w) { return with_unit(t, kDiffusion, w); },
           cfg.params.D, true);
    assign("transport", "v", [](const std::string& t, const std::string& w) { return with_unit(t, kVelocity, w); },
           cfg.params.v, true);
    assign("transport", "theta", number, cfg.params.theta, true);
    assign("transport", "C0", conc, cfg.params.C0, true);
    if (!preset) cfg.params.background = 0.0;
    assign("transport", "background", conc, cfg.params.background, false);

    if (const auto* v = get("species", "name")) cfg.params.species.name = *v;
    else if (!preset) cfg.params.species.name = "species";
    if (const auto* v = get("species", "charge")) cfg.params.species.charge_label = *v;
    const std::string* r = get("species", "R");
    const std::string* rho = get("species", "rho");
    const std::string* kd = get("species", "kd");
    if (r && (rho || kd)) throw ConfigError("[species] R: give either R or (rho, kd), not both");
    if (static_cast<bool>(rho) != static_cast<bool>(kd)) {
        throw ConfigError(std::string("[species] ") + (rho ? "kd" : "rho") + ": rho and kd must be given together");
    }
    if (r) cfg.params.species.retardation_inputs = ExplicitRetardation{bare_number(*r, "[species] R")};
    if (rho) {
        cfg.params.species.retardation_inputs =
            LinearSorption{with_unit(*rho, kDensity, "[species] rho"), with_unit(*kd, kDistribution, "[species] kd")};
    }

    if (const auto* v = get("boundary", "top")) {
        if (*v != "dirichlet") throw ConfigError("[boundary] top: only 'dirichlet' is supported");
    }
    try {
        if (const auto* v = get("boundary", "sides")) cfg.bc.sides = parse_side_boundary(*v);
        if (const auto* v = get("boundary", "bottom")) cfg.bc.bottom = parse_bottom_boundary(*v);
    } catch (const LookupError& e) {
        throw ConfigError(std::string("[boundary] ") + e.what());
    }

    assign("time", "dt", timev, cfg.dt, true);
    assign("time", "t_end", timev, cfg.t_end, true);
    if (const auto* v = get("time", "snapshots")) {
        cfg.snapshot_times = trim(*v).empty() ? std::vector<double>{} : time_list(*v, "[time] snapshots");
    } else if (preset && get("time", "t_end")) {
        // Preset snapshots beyond an overridden t_end would be invalid.
        std::erase_if(cfg.snapshot_times, [&](double t) { return t > cfg.t_end; });
    }
    try {
        if (const auto* v = get("time", "scheme")) {
            cfg.scheme = parse_scheme(*v);
            out.scheme_explicit = true;
        }
        if (const auto* v = get("time", "stability")) cfg.stability_policy = parse_stability_policy(*v);
    } catch (const LookupError& e) {
        throw ConfigError(std::string("[time] ") + e.what());
    }

    if (const auto* v = get("output", "csv")) out.output.csv_path = *v;
    if (const auto* v = get("output", "svg")) out.output.svg_path = *v;
    if (const auto* v = get("output", "profile_x")) out.output.profile_x = length(*v, "[output] profile_x");

    try {
        cfg.validate();
    } catch (const ParameterError& e) {
        throw ConfigError(std::string("invalid configuration: ") + e.what());
    }
    return out;
}

std::string render_config(const SimulationConfig& c, const OutputSettings& output) {
    std::string s;
    auto line = [&](std::string_view key, const std::string& value) {
        s += std::string(key) + " = " + value + "\n";
    };
    s += "[grid]\n";
    line("nx", std::to_string(c.grid.nx));
    line("nz", std::to_string(c.grid.nz));
    line("dx", fmt(c.grid.dx) + " cm");
    line("dz", fmt(c.grid.dz) + " cm");
    s += "\n[transport]\n";
    line("D", fmt(c.params.D) + " cm2/day");
    line("v", fmt(c.params.v) + " cm/day");
    line("theta", fmt(c.params.theta));
    line("C0", fmt(c.params.C0) + " mg/L");
    line("background", fmt(c.params.background) + " mg/L");
    s += "\n[species]\n";
    line("name", c.params.species.name);
    if (!c.params.species.charge_label.empty()) line("charge", c.params.species.charge_label);
    if (const auto* r = std::get_if<ExplicitRetardation>(&c.params.species.retardation_inputs)) {
        line("R", fmt(r->R));
    } else {
        const auto& sorb = std::get<LinearSorption>(c.params.species.retardation_inputs);
        line("rho", fmt(sorb.rho) + " g/cm3");
        line("kd", fmt(sorb.kd) + " cm3/g");
    }
    s += "\n[boundary]\n";
    line("top", std::string(to_string(c.bc.top)));
    line("sides", std::string(to_string(c.bc.sides)));
    line("bottom", std::string(to_string(c.bc.bottom)));
    s += "\n[time]\n";
    line("dt", fmt(c.dt) + " day");
    line("t_end", fmt(c.t_end) + " day");
    if (!c.snapshot_times.empty()) {
        std::string list;
        for (const double t : c.snapshot_times) {
            if (!list.empty()) list += ", ";
            list += fmt(t);
        }
        line("snapshots", list + " day");
    }
    line("scheme", std::string(to_string(c.scheme)));
    line("stability", std::string(to_string(c.stability_policy)));
    if (!output.csv_path.empty() || !output.svg_path.empty() || output.profile_x) {
        s += "\n[output]\n";
        if (!output.csv_path.empty()) line("csv", output.csv_path);
        if (!output.svg_path.empty()) line("svg", output.svg_path);
        if (output.profile_x) line("profile_x", fmt(*output.profile_x) + " cm");
    }
    return s;
}

}  // namespace leachate
