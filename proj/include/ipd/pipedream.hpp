#pragma once

#include "ipd/diagram.hpp"
#include "ipd/symgroup.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ipd {

// ----------------------------------------------------------------------
// Wiring diagrams.
//
// A diagram D in [n] x [n] is read as a grid of tiles: a crossing tile on
// the cells of D, a bump tile elsewhere. Pipes enter on the left edge
// (rows 1..N, labelled by row) and leave through the top edge. Tile port
// maps, with pipes travelling rightward/upward:
//   bump:     left -> top,   bottom -> right
//   crossing: left -> right, bottom -> top
// The grid is extended to N = 2n so that every pipe terminates on the
// top edge; cells outside D are bumps.
// ----------------------------------------------------------------------

struct Wiring {
    Permutation perm;  // pipe with left endpoint i has top endpoint perm(i)
    bool reduced = true;
    // Pipes meeting each cell of [n] x [n]: .first entered from the left,
    // .second from the bottom. At a crossing these are the crossing pair, at
    // a bump the avoiding pair.
    std::map<Cell, std::pair<int, int>> pipes;
};

inline Wiring trace_wiring(const Diagram& d) {
    int n = std::max(d.window(), 1);
    int N = 2 * n;
    std::vector<std::vector<int>> left_pipe(std::size_t(N) + 1, std::vector<int>(std::size_t(N) + 2, 0));
    std::vector<std::vector<int>> bottom_pipe(std::size_t(N) + 1, std::vector<int>(std::size_t(N) + 2, 0));
    std::vector<int> top(std::size_t(N) + 1, 0);

    for (int p = 1; p <= N; ++p) {
        int i = p, j = 1;
        bool from_left = true;
        while (true) {
            if (from_left)
                left_pipe[std::size_t(i)][std::size_t(j)] = p;
            else
                bottom_pipe[std::size_t(i)][std::size_t(j)] = p;
            bool crossing = d.contains(i, j);
            bool exits_top = crossing ? !from_left : from_left;
            if (exits_top) {
                if (i == 1) {
                    top[std::size_t(j)] = p;
                    break;
                }
                --i;
                from_left = false;  // enters the cell above from its bottom
            } else {
                ++j;
                from_left = true;  // enters the cell to the right from its left
                if (j > N) throw std::logic_error("wiring trace left the extended grid");
            }
        }
    }

    Wiring w;
    std::vector<int> images(static_cast<std::size_t>(N));
    std::vector<int> where(std::size_t(N) + 1, 0);
    for (int j = 1; j <= N; ++j) where[std::size_t(top[std::size_t(j)])] = j;
    for (int p = 1; p <= N; ++p) images[std::size_t(p) - 1] = where[std::size_t(p)];
    w.perm = Permutation(std::move(images));

    std::set<std::pair<int, int>> crossed;
    for (const Cell& c : d.cells()) {
        int a = left_pipe[std::size_t(c.row)][std::size_t(c.col)];
        int b = bottom_pipe[std::size_t(c.row)][std::size_t(c.col)];
        if (!crossed.insert({std::min(a, b), std::max(a, b)}).second) w.reduced = false;
    }
    for (int i = 1; i <= d.window(); ++i)
        for (int j = 1; j <= d.window(); ++j)
            w.pipes[{i, j}] = {left_pipe[std::size_t(i)][std::size_t(j)],
                               bottom_pipe[std::size_t(i)][std::size_t(j)]};
    return w;
}

struct Resolution {
    Permutation perm;
    bool reduced;
    bool operator==(const Resolution&) const = default;
};

// Endpoint permutation of the wiring diagram of D, plus whether any two
// pipes cross twice.
inline Resolution resolve(const Diagram& d) {
    Wiring w = trace_wiring(d);
    return {w.perm, w.reduced};
}

// D is a reduced pipe dream for w.
inline bool is_pipe_dream_for(const Diagram& d, const Permutation& w) {
    Resolution r = resolve(d);
    return r.reduced && r.perm == w;
}

inline bool is_symmetric(const Diagram& d) { return d == d.transpose(); }

// Symmetric up to the forced below-diagonal crossings: (i,j) in D with
// i < j forces (j,i) in D, and any lone (j,i) must cross exactly the two
// pipes that avoid each other at (i,j).
inline bool is_almost_symmetric(const Diagram& d) {
    Wiring w = trace_wiring(d);
    for (const Cell& c : d.cells()) {
        if (c.row < c.col && !d.contains(c.col, c.row)) return false;
        if (c.row > c.col && !d.contains(c.col, c.row)) {
            auto [a1, b1] = w.pipes.at(c);
            auto [a2, b2] = w.pipes.at({c.col, c.row});
            if (std::minmax(a1, b1) != std::minmax(a2, b2)) return false;
        }
    }
    return true;
}

// ----------------------------------------------------------------------
// Reading orders and reading words.
// ----------------------------------------------------------------------

inline int adiag(Cell c) { return c.row + c.col - 1; }

// A linear extension of <=_NE on [n] x [n], where (i,j) <=_NE (i',j')
// iff i <= i' and j >= j'.
class ReadingOrder {
public:
    explicit ReadingOrder(std::vector<std::vector<int>> ranks) : ranks_(std::move(ranks)) {
        int n = int(ranks_.size());
        std::vector<bool> seen(std::size_t(n) * std::size_t(n) + 1, false);
        for (const auto& row : ranks_) {
            if (int(row.size()) != n) throw std::invalid_argument("ranking must be square");
            for (int r : row) {
                if (r < 1 || r > n * n || seen[std::size_t(r)])
                    throw std::invalid_argument("ranking must be a bijection onto [n^2]");
                seen[std::size_t(r)] = true;
            }
        }
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int i2 = i; i2 <= n; ++i2)
                    for (int j2 = 1; j2 <= j; ++j2)
                        if (rank(i, j) > rank(i2, j2))
                            throw std::invalid_argument("ranking is not a linear extension of <=_NE");
    }

    int n() const { return int(ranks_.size()); }
    int rank(int i, int j) const { return ranks_[std::size_t(i) - 1][std::size_t(j) - 1]; }

    // Row-by-row, right to left: (i,j) -> n*i - j + 1.
    static ReadingOrder standard(int n) {
        std::vector<std::vector<int>> r(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) r[std::size_t(i) - 1][std::size_t(j) - 1] = n * i - j + 1;
        return ReadingOrder(std::move(r));
    }

    // Diagonals j - i = p listed for p = n-1, n-2, ..., -(n-1); within a
    // diagonal bottom-to-top when p > 0 and top-to-bottom when p <= 0.
    static ReadingOrder unimodal(int n) {
        std::vector<std::vector<int>> r(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
        int next = 1;
        for (int p = n - 1; p >= -(n - 1); --p) {
            std::vector<Cell> diag;
            for (int i = 1; i <= n; ++i) {
                int j = i + p;
                if (j >= 1 && j <= n) diag.push_back({i, j});
            }
            if (p > 0) std::reverse(diag.begin(), diag.end());
            for (Cell c : diag) r[std::size_t(c.row) - 1][std::size_t(c.col) - 1] = next++;
        }
        return ReadingOrder(std::move(r));
    }

private:
    std::vector<std::vector<int>> ranks_;
};

// Letters adiag(c) of the cells of D in omega-order.
inline Word reading_word(const Diagram& d, const ReadingOrder& omega) {
    if (d.window() > omega.n()) throw std::invalid_argument("reading order window too small for diagram");
    std::vector<std::pair<int, Cell>> ranked;
    ranked.reserve(d.size());
    for (const Cell& c : d.cells()) ranked.emplace_back(omega.rank(c.row, c.col), c);
    std::sort(ranked.begin(), ranked.end());
    Word w;
    w.reserve(ranked.size());
    for (auto& [r, c] : ranked) w.push_back(adiag(c));
    return w;
}

inline Word standard_reading_word(const Diagram& d) {
    // row-major with columns reversed; no need to build the full ranking
    std::vector<Cell> cs = d.cells();
    std::sort(cs.begin(), cs.end(), [](Cell a, Cell b) {
        return a.row != b.row ? a.row < b.row : a.col > b.col;
    });
    Word w;
    w.reserve(cs.size());
    for (Cell c : cs) w.push_back(adiag(c));
    return w;
}

inline Word udiag_reading_word(const Diagram& d) {
    if (d.empty()) return {};
    return reading_word(d, ReadingOrder::unimodal(d.window()));
}

// Cells of D in unimodal-diagonal order (used by the symmetry-completion
// construction for involution pipe dreams).
inline std::vector<Cell> udiag_cells(const Diagram& d) {
    std::vector<std::pair<int, Cell>> ranked;
    if (d.empty()) return {};
    ReadingOrder omega = ReadingOrder::unimodal(d.window());
    for (const Cell& c : d.cells()) ranked.emplace_back(omega.rank(c.row, c.col), c);
    std::sort(ranked.begin(), ranked.end());
    std::vector<Cell> out;
    out.reserve(ranked.size());
    for (auto& [r, c] : ranked) out.push_back(c);
    return out;
}

// ----------------------------------------------------------------------
// Coxeter commutation classes.
// ----------------------------------------------------------------------

// Lexicographically least word reachable by swapping adjacent letters
// whose difference is at least two. Two words are commutation-equivalent
// iff their canonical forms agree.
inline Word commutation_canonical_form(Word w) {
    Word out;
    out.reserve(w.size());
    while (!w.empty()) {
        std::size_t best = w.size();
        for (std::size_t i = 0; i < w.size(); ++i) {
            bool movable = true;
            for (std::size_t j = 0; j < i && movable; ++j)
                if (std::abs(w[j] - w[i]) < 2) movable = false;
            if (movable && (best == w.size() || w[i] < w[best])) best = i;
        }
        out.push_back(w[best]);
        w.erase(w.begin() + long(best));
    }
    return out;
}

inline bool coxeter_commutation_equiv(const Word& a, const Word& b) {
    return commutation_canonical_form(a) == commutation_canonical_form(b);
}

// ----------------------------------------------------------------------
// Ladder moves and generation of PD(w).
// ----------------------------------------------------------------------

namespace detail {

// Walks upward from (j,k) in D, requiring (j,k+1) empty, across rows
// full in columns {k, k+1}. Reports the terminal row i (the first row
// that is not full in both columns) and the occupancy pattern there.
struct LadderWalk {
    int i = 0;             // terminal row, 0 if the walk ran off the top
    bool left_full = false;   // (i,k) in D
    bool right_full = false;  // (i,k+1) in D
};

inline LadderWalk ladder_walk(const Diagram& d, int j, int k) {
    LadderWalk w;
    for (int r = j - 1; r >= 1; --r) {
        bool lf = d.contains(r, k), rf = d.contains(r, k + 1);
        if (lf && rf) continue;
        w.i = r;
        w.left_full = lf;
        w.right_full = rf;
        return w;
    }
    return w;
}

// No cells of D strictly northeast of (row, col) on the same antidiagonal.
inline bool ray_empty(const Diagram& d, int row, int col) {
    for (int t = 1; row - t >= 1; ++t)
        if (d.contains(row - t, col + t)) return false;
    return true;
}
}  // namespace detail

// All E with D <._PD E: remove (j,k), add (i,k+1), with rows strictly
// between full in columns {k,k+1} and (i,k),(i,k+1),(j,k+1) empty.
inline std::set<Diagram> ladder_moves(const Diagram& d) {
    std::set<Diagram> out;
    for (const Cell& c : d.cells()) {
        int j = c.row, k = c.col;
        if (d.contains(j, k + 1)) continue;
        auto w = detail::ladder_walk(d, j, k);
        if (w.i == 0 || w.left_full || w.right_full) continue;
        out.insert(d.without_cell({j, k}).with_cell({w.i, k + 1}));
    }
    return out;
}

// BFS closure of the ladder moves from the bottom pipe dream.
inline std::set<Diagram> pd_set(const Permutation& w) {
    std::set<Diagram> seen;
    std::vector<Diagram> work{bottom_pipe_dream(w)};
    seen.insert(work.front());
    while (!work.empty()) {
        Diagram d = std::move(work.back());
        work.pop_back();
        for (const Diagram& e : ladder_moves(d))
            if (seen.insert(e).second) work.push_back(e);
    }
    return seen;
}

// Independent generation of PD(w) from reduced words and compatible
// sequences: weakly increasing rows i_1 <= ... <= i_p with i_t <= a_t and
// i_t < i_{t+1} whenever a_t <= a_{t+1}; cells (i_t, a_t - i_t + 1).
inline std::set<Diagram> pd_oracle(const Permutation& w) {
    std::set<Diagram> out;
    int window = w.window();
    for (const Word& a : reduced_words(w)) {
        std::vector<int> rows(a.size());
        std::vector<Cell> cells(a.size());
        auto rec = [&](auto&& self, std::size_t t) -> void {
            if (t == a.size()) {
                Diagram d(cells, window);
                if (!is_pipe_dream_for(d, w))
                    throw std::logic_error("compatible sequence produced a non-dream");
                out.insert(std::move(d));
                return;
            }
            int lo = t == 0 ? 1 : rows[t - 1] + (a[t - 1] <= a[t] ? 1 : 0);
            for (int i = lo; i <= a[t]; ++i) {
                rows[t] = i;
                cells[t] = {i, a[t] - i + 1};
                self(self, t + 1);
            }
        };
        rec(rec, 0);
    }
    return out;
}

}  // namespace ipd
