#pragma once

#include <string>

#include "pacman/csv.hpp"

namespace pacman {

enum class PlotKind {
    RateLogLog,    // columns alpha, n, sup_error
    ArcHistogram,  // columns k and p (walk) or measure (Brownian)
};

// Self-contained SVG document. Rate plots draw one scatter series per alpha
// plus a reference line of slope c_alpha; arc plots draw one bar per arc.
// Each data mark carries its value in a data-value attribute.
std::string render_plot(const CsvTable& rows, PlotKind kind);

}  // namespace pacman
