#include "pacman/svg_plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <sstream>
#include <string_view>
#include <vector>

#include "pacman/domain.hpp"
#include "pacman/errors.hpp"

namespace pacman {
namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 150.0;  // legend gutter
constexpr double kTop = 30.0;
constexpr double kBottom = 50.0;

constexpr std::array<std::string_view, 6> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};

double parse_number(const std::string& s, std::string_view what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw PlotError("cannot parse " + std::string(what) + " value '" + s + "'");
    }
}

std::size_t require_column(const CsvTable& t, std::string_view name) {
    const std::size_t c = t.column(name);
    if (c == CsvTable::npos) throw PlotError("missing column '" + std::string(name) + "'");
    return c;
}

struct Axis {
    double lo, hi;     // data range (already log10 for log axes)
    double pix_lo, pix_hi;
    double map(double v) const { return pix_lo + (v - lo) / (hi - lo) * (pix_hi - pix_lo); }
};

Axis padded(double lo, double hi, double pix_lo, double pix_hi) {
    if (hi - lo < 1e-12) {
        lo -= 0.5;
        hi += 0.5;
    }
    const double pad = 0.06 * (hi - lo);
    return {lo - pad, hi + pad, pix_lo, pix_hi};
}

void open_document(std::ostringstream& o, std::string_view title) {
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    o << "<text x=\"" << kWidth / 2 << "\" y=\"18\" text-anchor=\"middle\" font-size=\"14\">" << title << "</text>\n";
}

void draw_frame(std::ostringstream& o, std::string_view xlabel, std::string_view ylabel) {
    const double x0 = kLeft, x1 = kWidth - kRight, y0 = kHeight - kBottom, y1 = kTop;
    o << "<g class=\"axes\" stroke=\"black\" fill=\"none\">\n";
    o << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1 << "\" y2=\"" << y0 << "\"/>\n";
    o << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 << "\" y2=\"" << y1 << "\"/>\n";
    o << "</g>\n";
    o << "<text x=\"" << (x0 + x1) / 2 << "\" y=\"" << kHeight - 12 << "\" text-anchor=\"middle\">" << xlabel
      << "</text>\n";
    o << "<text x=\"16\" y=\"" << (y0 + y1) / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << (y0 + y1) / 2 << ")\">" << ylabel << "</text>\n";
}

void draw_log_ticks(std::ostringstream& o, const Axis& ax, bool horizontal) {
    const double fixed = horizontal ? kHeight - kBottom : kLeft;
    for (int e = static_cast<int>(std::ceil(ax.lo)); e <= static_cast<int>(std::floor(ax.hi)); ++e) {
        const double p = ax.map(e);
        if (horizontal) {
            o << "<line x1=\"" << p << "\" y1=\"" << fixed << "\" x2=\"" << p << "\" y2=\"" << fixed + 5
              << "\" stroke=\"black\"/>";
            o << "<text x=\"" << p << "\" y=\"" << fixed + 18 << "\" text-anchor=\"middle\">1e" << e << "</text>\n";
        } else {
            o << "<line x1=\"" << fixed - 5 << "\" y1=\"" << p << "\" x2=\"" << fixed << "\" y2=\"" << p
              << "\" stroke=\"black\"/>";
            o << "<text x=\"" << fixed - 8 << "\" y=\"" << p + 4 << "\" text-anchor=\"end\">1e" << e << "</text>\n";
        }
    }
}

std::string render_rate(const CsvTable& t) {
    const std::size_t ca = require_column(t, "alpha");
    const std::size_t cn = require_column(t, "n");
    const std::size_t ce = require_column(t, "sup_error");

    struct Point {
        double lx, ly, value;
        int n;
    };
    std::map<std::string, std::vector<Point>> series;  // keyed by alpha text
    std::map<std::string, double> alpha_value;
    for (const auto& row : t.rows) {
        const double alpha = parse_number(row[ca], "alpha");
        const double n = parse_number(row[cn], "n");
        const double e = parse_number(row[ce], "sup_error");
        if (!(n >= 2.0) || !(e > 0.0)) throw PlotError("rate plot needs n >= 2 and positive errors");
        const double l = std::log(n);
        series[row[ca]].push_back({std::log10(l * l / n), std::log10(e), e, static_cast<int>(n)});
        alpha_value[row[ca]] = alpha;
    }
    if (series.empty()) throw PlotError("rate plot has no data");

    double xlo = 1e300, xhi = -1e300, ylo = 1e300, yhi = -1e300;
    for (const auto& [_, pts] : series) {
        for (const auto& p : pts) {
            xlo = std::min(xlo, p.lx);
            xhi = std::max(xhi, p.lx);
            ylo = std::min(ylo, p.ly);
            yhi = std::max(yhi, p.ly);
        }
    }
    const Axis ax = padded(xlo, xhi, kLeft, kWidth - kRight);
    const Axis ay = padded(ylo, yhi, kHeight - kBottom, kTop);

    std::ostringstream o;
    o.precision(17);
    open_document(o, "sup error vs ln^2 n / n");
    draw_frame(o, "ln^2 n / n", "sup |G - (2/pi) g|");
    draw_log_ticks(o, ax, true);
    draw_log_ticks(o, ay, false);

    std::size_t idx = 0;
    for (const auto& [key, pts] : series) {
        const std::string_view color = kPalette[idx % kPalette.size()];
        const double slope = c_alpha(alpha_value[key]);
        double mx = 0.0, my = 0.0;
        for (const auto& p : pts) {
            mx += p.lx;
            my += p.ly;
        }
        mx /= static_cast<double>(pts.size());
        my /= static_cast<double>(pts.size());
        const double xa = ax.lo, xb = ax.hi;
        o << "<line class=\"reference\" data-alpha=\"" << key << "\" data-slope=\"" << slope << "\" x1=\""
          << ax.map(xa) << "\" y1=\"" << ay.map(my + slope * (xa - mx)) << "\" x2=\"" << ax.map(xb) << "\" y2=\""
          << ay.map(my + slope * (xb - mx)) << "\" stroke=\"" << color
          << "\" stroke-dasharray=\"6 4\" clip-path=\"url(#plot-area)\"/>\n";
        o << "<g class=\"series\" data-alpha=\"" << key << "\" fill=\"" << color << "\">\n";
        for (const auto& p : pts) {
            o << "<circle cx=\"" << ax.map(p.lx) << "\" cy=\"" << ay.map(p.ly) << "\" r=\"4\" data-n=\"" << p.n
              << "\" data-value=\"" << p.value << "\"/>\n";
        }
        o << "</g>\n";
        const double ly = kTop + 20.0 * static_cast<double>(idx);
        o << "<g class=\"legend-entry\"><circle cx=\"" << kWidth - kRight + 20 << "\" cy=\"" << ly
          << "\" r=\"4\" fill=\"" << color << "\"/><text x=\"" << kWidth - kRight + 30 << "\" y=\"" << ly + 4
          << "\">" << key << "</text></g>\n";
        ++idx;
    }
    o << "<defs><clipPath id=\"plot-area\"><rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\""
      << kWidth - kLeft - kRight << "\" height=\"" << kHeight - kTop - kBottom << "\"/></clipPath></defs>\n";
    o << "</svg>\n";
    return o.str();
}

std::string render_arcs(const CsvTable& t) {
    const std::size_t ck = require_column(t, "k");
    std::size_t cp = t.column("p");
    if (cp == CsvTable::npos) cp = require_column(t, "measure");

    std::vector<std::pair<int, double>> bars;
    for (const auto& row : t.rows) {
        const double p = parse_number(row[cp], "probability");
        if (!(p >= 0.0)) throw PlotError("arc probabilities must be nonnegative");
        bars.emplace_back(static_cast<int>(parse_number(row[ck], "k")), p);
    }
    if (bars.empty()) throw PlotError("arc plot has no data");

    double top = 0.0;
    for (const auto& b : bars) top = std::max(top, b.second);
    if (top <= 0.0) top = 1.0;
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    const double slot = plot_w / static_cast<double>(bars.size());

    std::ostringstream o;
    o.precision(17);
    open_document(o, "exit probability by boundary arc");
    draw_frame(o, "arc k", "probability");
    o << "<g class=\"bars\" fill=\"#1f77b4\">\n";
    for (std::size_t i = 0; i < bars.size(); ++i) {
        const double h = bars[i].second / top * plot_h;
        const double x = kLeft + slot * static_cast<double>(i) + 0.1 * slot;
        o << "<rect class=\"bar\" data-k=\"" << bars[i].first << "\" data-value=\"" << bars[i].second << "\" x=\""
          << x << "\" y=\"" << kHeight - kBottom - h << "\" width=\"" << 0.8 * slot << "\" height=\"" << h
          << "\"/>\n";
        o << "<text x=\"" << x + 0.4 * slot << "\" y=\"" << kHeight - kBottom + 16 << "\" text-anchor=\"middle\">"
          << bars[i].first << "</text>\n";
    }
    o << "</g>\n";
    o << "<text x=\"" << kLeft - 8 << "\" y=\"" << kTop + 4 << "\" text-anchor=\"end\">" << top << "</text>\n";
    o << "</svg>\n";
    return o.str();
}

}  // namespace

std::string render_plot(const CsvTable& rows, PlotKind kind) {
    if (rows.rows.empty()) throw PlotError("cannot plot an empty table");
    return kind == PlotKind::RateLogLog ? render_rate(rows) : render_arcs(rows);
}

}  // namespace pacman
