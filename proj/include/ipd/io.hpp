#pragma once

#include "ipd/pipedream.hpp"
#include "ipd/polynomial.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace ipd {

// ----------------------------------------------------------------------
// JSON formats.
//
// Diagram: {"n": 4, "kind": "pd", "cells": [[2,1],[3,1]]} with cells in
// row-major order; kind is one of "pd", "id", "fd".
// Polynomial: {"terms": [{"coeff": "2", "expo_x": [...], "expo_y": [...]}]}
// in the graded term order, coefficients as exact rational strings.
// ----------------------------------------------------------------------

inline nlohmann::json diagram_to_json(const Diagram& d, const std::string& kind = "pd") {
    nlohmann::json cells = nlohmann::json::array();
    for (const Cell& c : d.cells()) cells.push_back({c.row, c.col});
    return {{"n", d.window()}, {"kind", kind}, {"cells", cells}};
}

inline Diagram diagram_from_json(const nlohmann::json& j) {
    std::vector<Cell> cells;
    for (const auto& c : j.at("cells")) cells.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
    return Diagram(std::move(cells), j.value("n", 0));
}

inline nlohmann::json polynomial_to_json(const Polynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : p.terms())
        terms.push_back({{"coeff", to_string(c)}, {"expo_x", m.x}, {"expo_y", m.y}});
    return {{"terms", terms}};
}

// ----------------------------------------------------------------------
// Rendering. The grid is the staircase: row i shows the n+1-i tiles with
// i+j <= n+1; the boundary antidiagonal is always a bump. '+' marks a
// crossing tile and '.' a bump tile, and the legend lists the pipe
// endpoints left -> top.
// ----------------------------------------------------------------------

inline std::string render_ascii(const Diagram& d) {
    int n = std::max(d.window(), 1);
    Permutation w = resolve(d).perm;
    n = std::max(n, w.window());
    std::ostringstream os;
    int width = int(std::to_string(n).size());
    os << std::string(std::size_t(width) + 1, ' ');
    for (int j = 1; j <= n; ++j) {
        std::string t = std::to_string(j);
        os << " " << std::string(std::size_t(width) - t.size(), ' ') << t;
    }
    os << "\n";
    for (int i = 1; i <= n; ++i) {
        std::string t = std::to_string(i);
        os << std::string(std::size_t(width) - t.size(), ' ') << t << " ";
        for (int j = 1; j + i <= n + 1; ++j)
            os << " " << std::string(std::size_t(width) - 1, ' ')
               << (d.contains(i, j) ? '+' : '.');
        os << "\n";
    }
    os << "pipes:";
    for (int i = 1; i <= n; ++i) os << " " << i << "->" << w(i);
    os << "\n";
    return os.str();
}

inline std::string render_svg(const Diagram& d) {
    int n = std::max(d.window(), 1);
    Permutation w = resolve(d).perm;
    n = std::max(n, w.window());
    const int S = 40, M = 24;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (n * S + 2 * M) << "\" height=\""
       << (n * S + 2 * M) << "\" viewBox=\"0 0 " << (n * S + 2 * M) << " " << (n * S + 2 * M)
       << "\">\n";
    os << "<g fill=\"none\" stroke=\"black\" stroke-width=\"2\">\n";
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j + i <= n + 1; ++j) {
            int x = M + (j - 1) * S, y = M + (i - 1) * S;
            int xm = x + S / 2, ym = y + S / 2;
            bool boundary = i + j == n + 1;
            if (d.contains(i, j)) {
                os << "<line x1=\"" << x << "\" y1=\"" << ym << "\" x2=\"" << (x + S)
                   << "\" y2=\"" << ym << "\"/>\n";
                os << "<line x1=\"" << xm << "\" y1=\"" << y << "\" x2=\"" << xm << "\" y2=\""
                   << (y + S) << "\"/>\n";
            } else {
                os << "<path d=\"M " << x << " " << ym << " Q " << xm << " " << ym << " " << xm
                   << " " << y << "\"/>\n";
                if (!boundary)
                    os << "<path d=\"M " << xm << " " << (y + S) << " Q " << xm << " " << ym
                       << " " << (x + S) << " " << ym << "\"/>\n";
            }
        }
    }
    os << "</g>\n<g font-family=\"monospace\" font-size=\"14\">\n";
    for (int j = 1; j <= n; ++j)
        os << "<text x=\"" << (M + (j - 1) * S + S / 2 - 4) << "\" y=\"" << (M - 8) << "\">" << j
           << "</text>\n";
    for (int i = 1; i <= n; ++i)
        os << "<text x=\"" << (M - 16) << "\" y=\"" << (M + (i - 1) * S + S / 2 + 5) << "\">" << i
           << "</text>\n";
    os << "</g>\n<!-- pipes:";
    for (int i = 1; i <= n; ++i) os << " " << i << "->" << w(i);
    os << " -->\n</svg>\n";
    return os.str();
}

}  // namespace ipd
