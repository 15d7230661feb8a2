#pragma once

#include "ipd/partition.hpp"

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace ipd {

// Grid cell in matrix coordinates, 1-based.
struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;  // row-major order
};

// A finite set of cells with an ambient window size n (cells lie in
// [n] x [n]). Cells are kept sorted row-major, so serialization and set
// comparisons are canonical. Equality ignores the window: a diagram is
// its cell set, the window is bookkeeping for rendering and validation.
class Diagram {
public:
    Diagram() = default;

    Diagram(std::vector<Cell> cells, int window) : cells_(std::move(cells)), window_(window) {
        std::sort(cells_.begin(), cells_.end());
        cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
        for (const Cell& c : cells_) {
            if (c.row < 1 || c.col < 1) throw std::invalid_argument("diagram cells must be positive");
            window_ = std::max({window_, c.row, c.col});
        }
    }

    const std::vector<Cell>& cells() const { return cells_; }
    int window() const { return window_; }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }

    bool contains(Cell c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }
    bool contains(int row, int col) const { return contains(Cell{row, col}); }

    bool subset_of(const Diagram& other) const {
        return std::includes(other.cells_.begin(), other.cells_.end(), cells_.begin(), cells_.end());
    }

    Diagram with_cell(Cell c) const {
        auto cs = cells_;
        cs.push_back(c);
        return Diagram(std::move(cs), std::max({window_, c.row, c.col}));
    }

    Diagram without_cell(Cell c) const {
        auto cs = cells_;
        cs.erase(std::remove(cs.begin(), cs.end(), c), cs.end());
        return Diagram(std::move(cs), window_);
    }

    Diagram transpose() const {
        std::vector<Cell> cs;
        cs.reserve(cells_.size());
        for (const Cell& c : cells_) cs.push_back({c.col, c.row});
        return Diagram(std::move(cs), window_);
    }

    Diagram with_window(int n) const { return Diagram(cells_, n); }

    // Number of cells in row i.
    int row_count(int i) const {
        int k = 0;
        for (const Cell& c : cells_)
            if (c.row == i) ++k;
        return k;
    }

    bool operator==(const Diagram& other) const { return cells_ == other.cells_; }
    auto operator<=>(const Diagram& other) const { return cells_ <=> other.cells_; }

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < cells_.size(); ++i) {
            if (i) s += ",";
            s += "(" + std::to_string(cells_[i].row) + "," + std::to_string(cells_[i].col) + ")";
        }
        return s + "}";
    }

private:
    std::vector<Cell> cells_;  // sorted row-major
    int window_ = 0;
};

// Ferrers diagram of a partition, cells {(i,j) : j <= lambda_i}.
inline Diagram ferrers_diagram(const Partition& lambda, int window = 0) {
    std::vector<Cell> cs;
    for (std::size_t i = 0; i < lambda.rows(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j) cs.push_back({int(i) + 1, j});
    return Diagram(std::move(cs), window);
}

// Shifted Ferrers diagram SD_lambda = {(i, i+j-1)}.
inline Diagram shifted_ferrers_diagram(const StrictPartition& lambda, int window = 0) {
    std::vector<Cell> cs;
    for (std::size_t i = 0; i < lambda.rows(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j) cs.push_back({int(i) + 1, int(i) + j});
    return Diagram(std::move(cs), window);
}

// Largest lower set of <=_NW contained in D, as a partition.
// lambda_1 = run of filled cells at the start of row 1, and each
// subsequent row is capped by the previous one.
inline Partition dominant_shape(const Diagram& d) {
    std::vector<int> parts;
    int cap = d.window();
    for (int i = 1; i <= d.window(); ++i) {
        int run = 0;
        while (run < cap && d.contains(i, run + 1)) ++run;
        if (run == 0) break;
        parts.push_back(run);
        cap = run;
    }
    return Partition(std::move(parts));
}

inline Diagram dominant_component(const Diagram& d) {
    return ferrers_diagram(dominant_shape(d), d.window());
}

// Cells whose addition to lambda leaves a Ferrers diagram.
inline std::vector<Cell> addable_corners(const Partition& lambda) {
    std::vector<Cell> out;
    for (std::size_t i = 0; i <= lambda.rows(); ++i) {
        int above = i == 0 ? INT32_MAX : lambda.part(i - 1);
        if (lambda.part(i) < above) out.push_back({int(i) + 1, lambda.part(i) + 1});
    }
    return out;
}

// Outer corners of the dominant component of D.
inline std::vector<Cell> outer_corners(const Diagram& d) {
    return addable_corners(dominant_shape(d));
}

}  // namespace ipd
