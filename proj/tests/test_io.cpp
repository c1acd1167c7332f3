#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "leachate/config.hpp"
#include "leachate/csv.hpp"
#include "leachate/engine.hpp"
#include "leachate/error.hpp"
#include "leachate/svg.hpp"

using namespace leachate;

namespace {

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string error_of(std::string_view text) {
    try {
        parse_config(text);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return {};
}

constexpr const char* kFull = R"(
# full document, no preset
[grid]
nx = 5
nz = 7
dx = 1 cm
dz = 10 mm

[transport]
D = 0.02 m2/a
v = 0.01 cm/day
theta = 0.3
C0 = 675 mg/L

[species]
name = K
charge = cation
rho = 1.5 g/cm3
kd = 0.6 cm3/g

[time]
dt = 0.01 day
t_end = 2 day
snapshots = 1, 2 day
)";

}  // namespace

TEST_CASE("config: full document") {
    const auto c = parse_config(kFull);
    CHECK(c.grid == GridSpec{5, 7, 1.0, 1.0});
    CHECK(c.params.D == doctest::Approx(200.0 / 365.0).epsilon(1e-15));
    CHECK(c.params.v == 0.01);
    CHECK(c.params.background == 0.0);
    CHECK(c.params.retardation() == doctest::Approx(4.0));
    CHECK(c.snapshot_times == std::vector<double>{1.0, 2.0});
    CHECK(c.bc == BoundaryConditionSet{});
}

TEST_CASE("config: preset with overrides") {
    const auto p = parse_config_document("preset = landfill-k\n[time]\ndt = 0.005 day\nt_end = 60 day\nscheme = paper_forward\n");
    REQUIRE(p.preset.has_value());
    CHECK(*p.preset == "landfill-k");
    CHECK(p.scheme_explicit);
    auto expected = load_scenario("landfill-k");
    expected.dt = 0.005;
    expected.t_end = 60.0;
    expected.snapshot_times = {1.0, 50.0};
    expected.scheme = Scheme::paper_forward;
    CHECK(p.config == expected);
    CHECK(parse_config("preset = landfill-cl\n") == load_scenario("landfill-cl"));
}

TEST_CASE("config: errors name the field") {
    std::string text = kFull;
    text.erase(text.find("v = 0.01 cm/day"), 16);
    CHECK(error_of(text).find("[transport] v") != std::string::npos);

    CHECK(error_of(std::string(kFull) + "\n[bogus]\n").find("[bogus]") != std::string::npos);
    CHECK(error_of(std::string(kFull) + "\n[output]\nwidth = 3\n").find("[output] width") != std::string::npos);
    CHECK_THROWS_AS(parse_config("preset = nowhere\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("preset = landfill-cl\n[time]\ndt = 0.01\n"), ConfigError);  // no unit
    CHECK_THROWS_AS(parse_config("preset = landfill-cl\n[time]\ndt = 0.01 furlong\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("preset = landfill-cl\n[transport]\ntheta = 0.3 cm\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("preset = landfill-cl\n[transport]\ntheta = 1.5\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("preset = landfill-cl\n[species]\nR = 2\nrho = 1 g/cm3\nkd = 1 cm3/g\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("preset = landfill-cl\n[species]\nrho = 1 g/cm3\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("preset = landfill-cl\n[boundary]\ntop = reflect\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("preset = landfill-cl\n[time]\ndt = 1 day\ndt = 2 day\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("preset = landfill-cl\n[time]\nsnapshots = 500 day\n"), ConfigError);
}

TEST_CASE("config: unit conversion") {
    CHECK(parse_diffusion_cm2day("0.02 m2/a") == doctest::Approx(0.547945205479452).epsilon(1e-14));
    CHECK(parse_time_day("12 h") == 0.5);
    CHECK(parse_length_cm("0.5 m") == 50.0);
    CHECK(parse_velocity_cmday("1 m/day") == 100.0);
    CHECK(parse_concentration_mgl("0.675 g/L") == doctest::Approx(675.0));
    CHECK_THROWS_AS(parse_length_cm("3"), ConfigError);
}

TEST_CASE("config: render then parse is the identity") {
    for (const auto& name : scenario_names()) {
        const auto c = load_scenario(name);
        const auto text = render_config(c);
        CHECK(parse_config(text) == c);
        CHECK(render_config(parse_config(text)) == text);
    }
    auto c = parse_config(kFull);
    c.bc = {TopBoundary::dirichlet, BottomBoundary::frozen, SideBoundary::reflect};
    c.snapshot_times.clear();
    const OutputSettings out{"a.csv", "b.svg", 2.0};
    const auto doc = parse_config_document(render_config(c, out));
    CHECK(doc.config == c);
    CHECK(doc.output == out);

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int n = 0; n < 100; ++n) {
        auto r = load_scenario("landfill-cl");
        r.params.D = 0.1 + u(rng);
        r.params.v = u(rng) / 3.0;
        r.params.theta = 0.05 + 0.9 * u(rng);
        r.params.C0 = 1000.0 * u(rng);
        r.grid.dx = 0.1 + u(rng);
        r.dt = 1e-3 + 1e-2 * u(rng);
        r.params.species.retardation_inputs = LinearSorption{1.0 + u(rng), u(rng)};
        CHECK(parse_config(render_config(r)) == r);
    }
}

TEST_CASE("csv: landfill rows and round trip") {
    const auto res = run(load_scenario("landfill-cl"));
    std::ostringstream a, b;
    CHECK(write_profiles_csv(res, a) == 297);
    write_profiles_csv(res, b);
    CHECK(a.str() == b.str());

    std::istringstream in(a.str());
    const auto rows = read_profiles_csv(in);
    REQUIRE(rows.size() == 297);
    CHECK(rows.front().t_day == 1.0);
    CHECK(rows.back().t_day == 100.0);
    std::size_t k = 0;
    for (const auto& snap : res.snapshots) {
        for (int i = 0; i < snap.grid.nx; ++i) {
            for (int j = 0; j < snap.grid.nz; ++j, ++k) {
                CHECK(rows[k].x_cm == doctest::Approx(i * snap.grid.dx));
                CHECK(rows[k].z_cm == doctest::Approx(j * snap.grid.dz));
                // 9 significant digits: relative round-trip error up to 5e-9.
                CHECK(std::abs(rows[k].conc_mg_per_L - snap(i, j)) <= 5e-9 * std::max(1.0, std::abs(snap(i, j))));
            }
        }
    }

    SimulationResult none;
    std::ostringstream h;
    CHECK(write_profiles_csv(none, h) == 0);
    CHECK(h.str() == std::string(kProfileCsvHeader) + "\n");

    CHECK_THROWS_AS(write_profiles_csv(res, std::string("/nonexistent-dir/x.csv")), IoError);
    std::istringstream bad("t,x\n");
    CHECK_THROWS_AS(read_profiles_csv(bad), ConfigError);
}

TEST_CASE("svg: deterministic, golden") {
    const std::vector<ProfileSeries> series{
        {"t = 1 day", {0, 1, 2, 3, 4}, {675, 300, 80, 10, 0}},
        {"t = 50 day <R&D>", {0, 1, 2, 3, 4}, {675, 620, 540, 450, 380}},
    };
    const SvgOptions opts{"profiles", 640, 480};
    const auto svg = render_profile_svg(series, opts);
    CHECK(svg == render_profile_svg(series, opts));
    CHECK(svg.find("&lt;R&amp;D&gt;") != std::string::npos);
    CHECK(svg.rfind("</svg>") != std::string::npos);

    const std::filesystem::path golden = std::filesystem::path(LEACHATE_GOLDEN_DIR) / "profiles.svg";
    if (std::getenv("LEACHATE_UPDATE_GOLDEN")) {
        std::ofstream(golden, std::ios::binary) << svg;
    }
    REQUIRE(std::filesystem::exists(golden));
    CHECK(svg == read_file(golden));

    CHECK_THROWS_AS(render_profile_svg({}, opts), ParameterError);
    const std::vector<ProfileSeries> short_series{{"one", {0}, {1}}};
    CHECK_THROWS_AS(render_profile_svg(short_series, opts), ParameterError);
    const std::vector<ProfileSeries> ragged{{"ragged", {0, 1}, {1}}};
    CHECK_THROWS_AS(render_profile_svg(ragged, opts), ParameterError);
}
