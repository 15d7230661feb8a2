#pragma once

#include "ipd/invwords.hpp"
#include "ipd/pipedream.hpp"

#include <set>
#include <vector>

namespace ipd {

// Lower triangle {(j,i) : i <= j} and its strict version {(j,i) : i < j}.
// Involution pipe dreams live in the former, fpf ones in the latter.
inline bool in_lower_triangle(const Diagram& d) {
    for (const Cell& c : d.cells())
        if (c.col > c.row) return false;
    return true;
}

inline bool in_strict_lower_triangle(const Diagram& d) {
    for (const Cell& c : d.cells())
        if (c.col >= c.row) return false;
    return true;
}

// Number of diagonal cells (i,i) of D.
inline int diagonal_cell_count(const Diagram& d) {
    int k = 0;
    for (const Cell& c : d.cells())
        if (c.row == c.col) ++k;
    return k;
}

// ----------------------------------------------------------------------
// Bottom dreams.
// ----------------------------------------------------------------------

// Left-justified involution code; equals the bottom pipe dream of the
// minimal atom.
inline Diagram bottom_inv_dream(const Involution& y) {
    std::vector<int> c = inv_code(y);
    std::vector<Cell> cs;
    for (int i = 1; i <= int(c.size()); ++i)
        for (int j = 1; j <= c[std::size_t(i) - 1]; ++j) cs.push_back({i, j});
    return Diagram(std::move(cs), y.window());
}

inline Diagram bottom_fpf_dream(const FpfInvolution& z) {
    std::vector<int> c = fpf_inv_code(z);
    std::vector<Cell> cs;
    for (int i = 1; i <= int(c.size()); ++i)
        for (int j = 1; j <= c[std::size_t(i) - 1]; ++j) cs.push_back({i, j});
    return Diagram(std::move(cs), z.window());
}

// ----------------------------------------------------------------------
// Involution and fpf ladder moves.
//
// Both are variants of the ordinary ladder move on the column pair
// {k, k+1}: the walk up from (j,k) ends at a row i with (i,k) filled and
// (i,k+1) empty, and the moved cell lands beside or left of (i,k). The
// extra antidiagonal-ray conditions keep the move compatible with the
// atom orders.
// ----------------------------------------------------------------------

// D <._ID E: remove (j,k), add (i,k+1); requires (i,k) in D,
// (i,k+1),(i,k+2),(j,k+1) empty, rows between full in {k,k+1}, and empty
// antidiagonal rays northeast of (i,k-1),(i,k),(i,k+1),(i,k+2).
inline std::set<Diagram> inv_ladder_moves(const Diagram& d) {
    std::set<Diagram> out;
    for (const Cell& c : d.cells()) {
        int j = c.row, k = c.col;
        if (d.contains(j, k + 1)) continue;
        auto w = detail::ladder_walk(d, j, k);
        if (w.i == 0 || !w.left_full || w.right_full) continue;
        int i = w.i;
        if (d.contains(i, k + 2)) continue;
        bool rays = true;
        for (int col = k - 1; col <= k + 2 && rays; ++col) rays = detail::ray_empty(d, i, col);
        if (!rays) continue;
        out.insert(d.without_cell({j, k}).with_cell({i, k + 1}));
    }
    return out;
}

// D <._FD E: remove (j,k), add (i,k-1); requires k >= 2, (i,k) in D,
// (i,k-1),(i,k+1),(i,k+2),(j,k+1) empty, rows between full in {k,k+1},
// and empty rays northeast of (i,k-2),...,(i,k+2).
inline std::set<Diagram> fpf_ladder_moves(const Diagram& d) {
    std::set<Diagram> out;
    for (const Cell& c : d.cells()) {
        int j = c.row, k = c.col;
        if (k < 2 || d.contains(j, k + 1)) continue;
        auto w = detail::ladder_walk(d, j, k);
        if (w.i == 0 || !w.left_full || w.right_full) continue;
        int i = w.i;
        if (d.contains(i, k - 1) || d.contains(i, k + 2)) continue;
        bool rays = true;
        for (int col = k - 2; col <= k + 2 && rays; ++col) rays = detail::ray_empty(d, i, col);
        if (!rays) continue;
        out.insert(d.without_cell({j, k}).with_cell({i, k - 1}));
    }
    return out;
}

// ----------------------------------------------------------------------
// Generation by ladder-move closure. Successors leaving the triangle are
// pruned immediately: the triangle is a lower set of the respective
// order, so no chain between in-triangle dreams passes outside it.
// ----------------------------------------------------------------------

inline std::set<Diagram> inv_dream_set(const Involution& y) {
    Diagram start = bottom_inv_dream(y);
    std::set<Diagram> seen{start};
    std::vector<Diagram> work{start};
    while (!work.empty()) {
        Diagram d = std::move(work.back());
        work.pop_back();
        auto visit = [&](const std::set<Diagram>& moves) {
            for (const Diagram& e : moves)
                if (in_lower_triangle(e) && seen.insert(e).second) work.push_back(e);
        };
        visit(ladder_moves(d));
        visit(inv_ladder_moves(d));
    }
    return seen;
}

inline std::set<Diagram> fpf_dream_set(const FpfInvolution& z) {
    Diagram start = bottom_fpf_dream(z);
    std::set<Diagram> seen{start};
    std::vector<Diagram> work{start};
    while (!work.empty()) {
        Diagram d = std::move(work.back());
        work.pop_back();
        auto visit = [&](const std::set<Diagram>& moves) {
            for (const Diagram& e : moves)
                if (in_strict_lower_triangle(e) && seen.insert(e).second) work.push_back(e);
        };
        visit(ladder_moves(d));
        visit(fpf_ladder_moves(d));
    }
    return seen;
}

// Independent generation straight from the definitions: the union of the
// atoms' pipe-dream sets, restricted to the triangle.
inline std::set<Diagram> id_oracle(const Involution& y) {
    std::set<Diagram> out;
    for (const Permutation& w : atoms(y))
        for (const Diagram& d : pd_set(w))
            if (in_lower_triangle(d)) out.insert(d);
    return out;
}

inline std::set<Diagram> fd_oracle(const FpfInvolution& z) {
    std::set<Diagram> out;
    for (const Permutation& w : fpf_atoms(z))
        for (const Diagram& d : pd_set(w))
            if (in_strict_lower_triangle(d)) out.insert(d);
    return out;
}

// ----------------------------------------------------------------------
// Membership, two independent routes.
// ----------------------------------------------------------------------

// Reading-word route: D sits in the triangle and its standard reading
// word is an involution word for y.
inline bool is_inv_dream_for(const Diagram& d, const Involution& y) {
    return in_lower_triangle(d) && is_involution_word(standard_reading_word(d), y);
}

inline bool is_fpf_dream_for(const Diagram& d, const FpfInvolution& z) {
    return in_strict_lower_triangle(d) && is_fpf_involution_word(standard_reading_word(d), z);
}

// Almost-symmetric completion of D, built along the unimodal-diagonal
// order: each letter that conjugates (rather than commutes) contributes
// the transposed cell.
inline Diagram almost_symmetric_completion(const Diagram& d) {
    Permutation t;
    Diagram e = d;
    for (Cell c : udiag_cells(d)) {
        Permutation sa = simple_transposition(adiag(c));
        Permutation ts = compose(t, sa), st = compose(sa, t);
        if (ts == st) {
            t = ts;
        } else {
            t = compose(st, sa);
            e = e.with_cell({c.col, c.row});
        }
    }
    return e;
}

// Definition route: D extends to an almost-symmetric reduced pipe dream
// for y meeting the triangle in exactly D.
inline bool is_inv_dream_for_by_completion(const Diagram& d, const Involution& y) {
    if (!in_lower_triangle(d)) return false;
    Diagram e = almost_symmetric_completion(d);
    std::vector<Cell> back;
    for (const Cell& c : e.cells())
        if (c.col <= c.row) back.push_back(c);
    if (!(Diagram(back, e.window()) == d)) return false;
    return is_pipe_dream_for(e, y.perm()) && is_almost_symmetric(e);
}

// Definition route, fpf: the symmetric completion D u D^T u diagonal
// half is a symmetric reduced pipe dream for z.
inline bool is_fpf_dream_for_by_completion(const Diagram& d, const FpfInvolution& z) {
    if (!in_strict_lower_triangle(d)) return false;
    std::vector<Cell> cs = d.cells();
    for (const Cell& c : d.cells()) cs.push_back({c.col, c.row});
    for (int i = 1; i <= z.window() / 2; ++i) cs.push_back({i, i});
    Diagram e(cs, z.window());
    return is_pipe_dream_for(e, z.perm());
}

// ----------------------------------------------------------------------
// Shifted dominant components and outer corners.
// ----------------------------------------------------------------------

// dom(y) cut to the lower triangle; its transpose is a shifted Ferrers
// diagram.
inline Diagram shifted_dominant(const Involution& y) {
    Diagram dom = dominant_component(rothe_diagram(y.perm()));
    std::vector<Cell> cs;
    for (const Cell& c : dom.cells())
        if (c.col <= c.row) cs.push_back(c);
    return Diagram(std::move(cs), dom.window());
}

inline Diagram strict_shifted_dominant(const FpfInvolution& z) {
    Diagram dom = dominant_component(rothe_diagram(z.perm()));
    std::vector<Cell> cs;
    for (const Cell& c : dom.cells())
        if (c.col < c.row) cs.push_back(c);
    return Diagram(std::move(cs), dom.window());
}

namespace detail {

// Addable cells of the shifted Ferrers diagram of a strict partition:
// (r, r + mu_r) whenever the row above leaves room.
inline std::vector<Cell> shifted_addable_corners(const std::vector<int>& mu) {
    std::vector<Cell> out;
    for (std::size_t r = 0; r <= mu.size(); ++r) {
        int here = r < mu.size() ? mu[r] : 0;
        if (r > 0 && mu[r - 1] < here + 2) continue;
        out.push_back({int(r) + 1, int(r) + 1 + here});
    }
    return out;
}

}  // namespace detail

// Outer corners (j,i), i <= j: cells whose addition keeps the transpose
// of shdom(y) a shifted Ferrers diagram. Always satisfies y(j) = i when
// (j,i) extends an involution's diagram.
inline std::vector<Cell> inv_outer_corners(const Involution& y) {
    Diagram sh = shifted_dominant(y);
    std::vector<int> mu;
    for (int r = 1;; ++r) {
        int cnt = 0;
        for (const Cell& c : sh.cells())
            if (c.col == r) ++cnt;  // column r of shdom = row r of the transpose
        if (cnt == 0) break;
        mu.push_back(cnt);
    }
    std::vector<Cell> out;
    for (Cell c : detail::shifted_addable_corners(mu)) out.push_back({c.col, c.row});
    std::sort(out.begin(), out.end());
    return out;
}

// Outer corners (j,i), i < j: addition must keep the up-shifted
// transpose of shdom^{!=}(z) a shifted Ferrers diagram.
inline std::vector<Cell> fpf_outer_corners(const FpfInvolution& z) {
    Diagram sh = strict_shifted_dominant(z);
    std::vector<int> nu;
    for (int r = 1;; ++r) {
        int cnt = 0;
        for (const Cell& c : sh.cells())
            if (c.col == r) ++cnt;
        if (cnt == 0) break;
        nu.push_back(cnt);
    }
    std::vector<Cell> out;
    for (Cell c : detail::shifted_addable_corners(nu)) out.push_back({c.col + 1, c.row});
    std::sort(out.begin(), out.end());
    return out;
}

// fpf-dominant: the strict shifted dominant component is itself an fpf
// pipe dream, in which case it is the only one.
inline bool is_fpf_dominant(const FpfInvolution& z) {
    return fpf_dream_set(z).contains(strict_shifted_dominant(z));
}

// ----------------------------------------------------------------------
// Transition bijections at outer corners.
// ----------------------------------------------------------------------

struct TransitionCheck {
    bool ok = false;
    std::vector<Diagram> left_only;   // corner-extended dreams missing on the right
    std::vector<Diagram> right_only;  // target dreams not reached
    explicit operator bool() const { return ok; }
};

// Checks that D -> D u {(j,i)} maps ID(y) bijectively onto the disjoint
// union of ID(z) for z in Psi(y,j).
inline TransitionCheck inv_transition_bijection(const Involution& y, Cell corner) {
    int j = corner.row, i = corner.col;
    std::set<Diagram> lhs;
    for (const Diagram& d : inv_dream_set(y)) lhs.insert(d.with_cell({j, i}));
    std::set<Diagram> rhs;
    std::size_t total = 0;
    for (const Involution& z : psi(y, j)) {
        std::set<Diagram> part = inv_dream_set(z);
        total += part.size();
        rhs.insert(part.begin(), part.end());
    }
    TransitionCheck res;
    res.ok = lhs == rhs && rhs.size() == total;
    for (const Diagram& d : lhs)
        if (!rhs.contains(d)) res.left_only.push_back(d);
    for (const Diagram& d : rhs)
        if (!lhs.contains(d)) res.right_only.push_back(d);
    return res;
}

inline TransitionCheck fpf_transition_bijection(const FpfInvolution& y, Cell corner) {
    int j = corner.row, i = corner.col;
    std::set<Diagram> lhs;
    for (const Diagram& d : fpf_dream_set(y)) lhs.insert(d.with_cell({j, i}));
    std::set<Diagram> rhs;
    std::size_t total = 0;
    for (const FpfInvolution& z : psi_fpf(y, j)) {
        std::set<Diagram> part = fpf_dream_set(z);
        total += part.size();
        rhs.insert(part.begin(), part.end());
    }
    TransitionCheck res;
    res.ok = lhs == rhs && rhs.size() == total;
    for (const Diagram& d : lhs)
        if (!rhs.contains(d)) res.left_only.push_back(d);
    for (const Diagram& d : rhs)
        if (!lhs.contains(d)) res.right_only.push_back(d);
    return res;
}

}  // namespace ipd
