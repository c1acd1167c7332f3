#include "leachate/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "leachate/error.hpp"

namespace leachate {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (const char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

// Round the axis maximum up to 1, 2 or 5 times a power of ten.
double nice_ceiling(double v) {
    if (!(v > 0.0)) return 1.0;
    const double mag = std::pow(10.0, std::floor(std::log10(v)));
    for (const double m : {1.0, 2.0, 5.0, 10.0}) {
        if (m * mag >= v * (1.0 - 1e-12)) return m * mag;
    }
    return 10.0 * mag;
}

}  // namespace

std::string render_profile_svg(std::span<const ProfileSeries> series, const SvgOptions& options) {
    if (series.empty()) throw ParameterError("render_profile_svg: no series");
    double c_max = 0.0;
    double z_max = 0.0;
    for (const auto& s : series) {
        if (s.z.size() != s.c.size()) throw ParameterError("series '" + s.label + "': z and c differ in length");
        if (s.z.size() < 2) throw ParameterError("series '" + s.label + "': needs at least two points");
        for (std::size_t k = 0; k < s.z.size(); ++k) {
            if (!std::isfinite(s.z[k]) || !std::isfinite(s.c[k])) {
                throw ParameterError("series '" + s.label + "': non-finite point");
            }
            c_max = std::max(c_max, std::abs(s.c[k]));
            z_max = std::max(z_max, s.z[k]);
        }
    }
    c_max = nice_ceiling(c_max);
    z_max = nice_ceiling(z_max);

    const double left = 70.0, right = 170.0, top = 40.0, bottom = 50.0;
    const double w = options.width, h = options.height;
    const double pw = w - left - right;
    const double ph = h - top - bottom;
    auto px = [&](double c) { return left + pw * c / c_max; };
    auto py = [&](double z) { return top + ph * z / z_max; };

    std::string o;
    o += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(options.width) + "\" height=\"" +
         std::to_string(options.height) + "\" viewBox=\"0 0 " + std::to_string(options.width) + " " +
         std::to_string(options.height) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    o += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(options.width) + "\" height=\"" +
         std::to_string(options.height) + "\" fill=\"white\"/>\n";
    if (!options.title.empty()) {
        o += "<text x=\"" + num(left + pw / 2) + "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">" +
             escape(options.title) + "</text>\n";
    }
    o += "<rect x=\"" + num(left) + "\" y=\"" + num(top) + "\" width=\"" + num(pw) + "\" height=\"" + num(ph) +
         "\" fill=\"none\" stroke=\"black\"/>\n";

    constexpr int kTicks = 5;
    for (int t = 0; t <= kTicks; ++t) {
        const double c = c_max * t / kTicks;
        const double z = z_max * t / kTicks;
        o += "<line x1=\"" + num(px(c)) + "\" y1=\"" + num(top + ph) + "\" x2=\"" + num(px(c)) + "\" y2=\"" +
             num(top + ph + 5) + "\" stroke=\"black\"/>\n";
        o += "<text x=\"" + num(px(c)) + "\" y=\"" + num(top + ph + 18) + "\" text-anchor=\"middle\">" +
             tick_label(c) + "</text>\n";
        o += "<line x1=\"" + num(left - 5) + "\" y1=\"" + num(py(z)) + "\" x2=\"" + num(left) + "\" y2=\"" +
             num(py(z)) + "\" stroke=\"black\"/>\n";
        o += "<text x=\"" + num(left - 8) + "\" y=\"" + num(py(z) + 4) + "\" text-anchor=\"end\">" + tick_label(z) +
             "</text>\n";
    }
    o += "<text x=\"" + num(left + pw / 2) + "\" y=\"" + num(h - 10) +
         "\" text-anchor=\"middle\">Concentration (mg/L)</text>\n";
    o += "<text x=\"18\" y=\"" + num(top + ph / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
         num(top + ph / 2) + ")\">Depth z (cm)</text>\n";

    for (std::size_t k = 0; k < series.size(); ++k) {
        const auto& s = series[k];
        const char* color = kPalette[k % std::size(kPalette)];
        std::string points;
        for (std::size_t p = 0; p < s.z.size(); ++p) {
            if (!points.empty()) points += ' ';
            points += num(px(s.c[p])) + "," + num(py(s.z[p]));
        }
        o += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"1.5\" points=\"" + points +
             "\"/>\n";
        const double ly = top + 10 + 18.0 * static_cast<double>(k);
        o += "<line x1=\"" + num(w - right + 10) + "\" y1=\"" + num(ly) + "\" x2=\"" + num(w - right + 30) +
             "\" y2=\"" + num(ly) + "\" stroke=\"" + color + "\" stroke-width=\"1.5\"/>\n";
        o += "<text x=\"" + num(w - right + 36) + "\" y=\"" + num(ly + 4) + "\">" + escape(s.label) + "</text>\n";
    }
    o += "</svg>\n";
    return o;
}

}  // namespace leachate
