#pragma once

#include "ipd/invdream.hpp"
#include "ipd/polynomial.hpp"

#include <vector>

namespace ipd {

// x_(i,j) = x_i if i = j, else x_i + x_j.
inline Polynomial halved_binomial(int i, int j) {
    if (i == j) return Polynomial::var_x(i);
    return Polynomial::var_x(i) + Polynomial::var_x(j);
}

// Schubert polynomial as the pipe-dream monomial sum.
inline Polynomial schubert(const Permutation& w) {
    Polynomial out;
    for (const Diagram& d : pd_set(w)) {
        Polynomial term = 1;
        for (const Cell& c : d.cells()) term *= Polynomial::var_x(c.row);
        out += term;
    }
    return out;
}

// Independent route: start from x1^{n-1} x2^{n-2} ... for the longest
// element of S_n and walk down by divided differences along a reduced
// word of w^{-1} w0 (lexicographically smallest by default). Any n at
// least the window of w gives the same polynomial.
inline Polynomial schubert_dd(const Word& word, int n) {
    Polynomial f = 1;
    for (int i = 1; i < n; ++i)
        for (int t = 0; t < n - i; ++t) f *= Polynomial::var_x(i);
    for (auto it = word.rbegin(); it != word.rend(); ++it) f = divided_difference(f, *it);
    return f;
}

inline Polynomial schubert_dd(const Permutation& w) {
    int n = std::max(w.window(), 1);
    return schubert_dd(lex_min_reduced_word(compose(w.inverse(), longest_element(n))), n);
}

// Double Schubert polynomial: sum over dreams of products (x_i - y_j).
inline Polynomial double_schubert(const Permutation& w) {
    Polynomial out;
    for (const Diagram& d : pd_set(w)) {
        Polynomial term = 1;
        for (const Cell& c : d.cells()) term *= Polynomial::var_x(c.row) - Polynomial::var_y(c.col);
        out += term;
    }
    return out;
}

// Involution Schubert polynomial via the atom sum.
inline Polynomial inv_schubert(const Involution& y) {
    Polynomial out;
    for (const Permutation& w : atoms(y)) out += schubert(w);
    return out;
}

// Involution Schubert polynomial via involution pipe dreams: sum of
// products 2^{-delta_ij} (x_i + x_j). Intermediate coefficients are
// half-integral; the final result must be integral.
inline Polynomial inv_schubert_pd(const Involution& y) {
    Polynomial out;
    for (const Diagram& d : inv_dream_set(y)) {
        Polynomial term = 1;
        for (const Cell& c : d.cells()) {
            Polynomial factor = Polynomial::var_x(c.row) + Polynomial::var_x(c.col);
            term *= c.row == c.col ? Rational(1, 2) * factor : factor;
        }
        out += term;
    }
    if (!out.is_integral())
        throw std::logic_error("involution pipe dream sum has non-integral coefficients for " +
                               y.to_string());
    return out;
}

inline Polynomial fpf_schubert(const FpfInvolution& z) {
    Polynomial out;
    for (const Permutation& w : fpf_atoms(z)) out += schubert(w);
    return out;
}

inline Polynomial fpf_schubert_pd(const FpfInvolution& z) {
    Polynomial out;
    for (const Diagram& d : fpf_dream_set(z)) {
        Polynomial term = 1;
        for (const Cell& c : d.cells()) term *= Polynomial::var_x(c.row) + Polynomial::var_x(c.col);
        out += term;
    }
    return out;
}

// ----------------------------------------------------------------------
// Transition identities at outer corners.
// ----------------------------------------------------------------------

struct PolyCheck {
    bool ok = false;
    Polynomial difference;  // lhs - rhs when the identity fails
    explicit operator bool() const { return ok; }
};

// 2^{-delta_ij} (x_i + x_j) * S^_y = sum of S^_u over u in Psi(y, j), at
// an outer corner (j, i) of y.
inline PolyCheck verify_inv_transition(const Involution& y, Cell corner) {
    int j = corner.row, i = corner.col;
    Polynomial lhs = halved_binomial(std::min(i, j), std::max(i, j)) * inv_schubert(y);
    Polynomial rhs;
    for (const Involution& u : psi(y, j)) rhs += inv_schubert(u);
    PolyCheck res;
    res.difference = lhs - rhs;
    res.ok = res.difference.is_zero();
    return res;
}

// (x_i + x_j) S^fpf_z = sum over Psi^fpf(z, j).
inline PolyCheck verify_fpf_transition(const FpfInvolution& z, Cell corner) {
    int j = corner.row, i = corner.col;
    Polynomial lhs = (Polynomial::var_x(i) + Polynomial::var_x(j)) * fpf_schubert(z);
    Polynomial rhs;
    for (const FpfInvolution& u : psi_fpf(z, j)) rhs += fpf_schubert(u);
    PolyCheck res;
    res.difference = lhs - rhs;
    res.ok = res.difference.is_zero();
    return res;
}

// ----------------------------------------------------------------------
// Closed products for the dominant (reversal) cases.
// ----------------------------------------------------------------------

// S^_{n...321} = prod_{1 <= i <= j <= n-i} x_(i,j), and for even n
// S^fpf_{n...321} = prod_{1 <= i < j <= n-i} (x_i + x_j).
inline bool dominant_product_check(int n) {
    Permutation w0 = longest_element(n);
    Polynomial expected = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n - i; ++j) expected *= halved_binomial(i, j);
    if (!(inv_schubert(Involution(w0)) == expected)) return false;
    if (n % 2 == 0) {
        Polynomial fpf_expected = 1;
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n - i; ++j)
                fpf_expected *= Polynomial::var_x(i) + Polynomial::var_x(j);
        if (!(fpf_schubert(FpfInvolution(w0)) == fpf_expected)) return false;
    }
    return true;
}

// ----------------------------------------------------------------------
// Specializations and enumeration identities.
// ----------------------------------------------------------------------

inline Rational principal_specialization(const Polynomial& p, const Rational& value) {
    return p.eval_all_x(value);
}

// ||ID(y)|| = sum over dreams of 2^{kappa(y) - #diagonal cells}.
inline Rational weighted_count(const Involution& y) {
    Rational sum = 0;
    for (const Diagram& d : inv_dream_set(y)) sum += pow2(kappa(y) - diagonal_cell_count(d));
    return sum;
}

// |PD(w)| = S_w(1,...,1) = (1/p!) sum over reduced words of the letter
// products.
inline bool macdonald_check(const Permutation& w) {
    Rational count = long(pd_set(w).size());
    if (!(principal_specialization(schubert(w), 1) == count)) return false;
    Integer sum = 0;
    for (const Word& a : reduced_words(w)) {
        Integer prod = 1;
        for (int letter : a) prod *= letter;
        sum += prod;
    }
    return Rational(sum, factorial(static_cast<unsigned long>(length(w)))) == count;
}

// ||ID(y)|| = 2^kappa S^_y(1/2,...) = (1/(2^p p!)) sum over involution
// words of 2^kappa times the letter products.
inline bool inv_macdonald_check(const Involution& y) {
    Rational expected = weighted_count(y);
    Rational spec = pow2(kappa(y)) * principal_specialization(inv_schubert(y), Rational(1, 2));
    if (!(spec == expected)) return false;
    long p = iell(y);
    Integer sum = 0;
    for (const Word& a : involution_words(y)) {
        Integer prod = 1;
        for (int letter : a) prod *= letter;
        sum += prod;
    }
    Rational words = pow2(kappa(y)) * Rational(sum, factorial(static_cast<unsigned long>(p))) /
                     pow2(p);
    return words == expected;
}

// |FD(z)| = S^fpf_z(1/2,...) = (1/(2^p p!)) sum over fpf words of the
// letter products.
inline bool fpf_macdonald_check(const FpfInvolution& z) {
    Rational count = long(fpf_dream_set(z).size());
    if (!(principal_specialization(fpf_schubert(z), Rational(1, 2)) == count)) return false;
    long p = fpf_ell(z);
    Integer sum = 0;
    for (const Word& a : fpf_involution_words(z)) {
        Integer prod = 1;
        for (int letter : a) prod *= letter;
        sum += prod;
    }
    return Rational(sum, factorial(static_cast<unsigned long>(p))) / pow2(p) == count;
}

// ----------------------------------------------------------------------
// Reverse plane partitions: fillings of a (shifted) Ferrers shape with
// entries in {0,...,k}, weakly decreasing along rows and down columns.
// ----------------------------------------------------------------------

namespace detail {

// Exhaustive fill in row-major order; each entry is bounded by its upper
// and left neighbours inside the shape.
inline long long rpp_count_bruteforce(const Diagram& shape, int k) {
    const std::vector<Cell>& cells = shape.cells();
    std::map<Cell, int> value;
    auto rec = [&](auto&& self, std::size_t t) -> long long {
        if (t == cells.size()) return 1;
        Cell c = cells[t];
        int bound = k;
        if (auto it = value.find({c.row - 1, c.col}); it != value.end())
            bound = std::min(bound, it->second);
        if (auto it = value.find({c.row, c.col - 1}); it != value.end())
            bound = std::min(bound, it->second);
        long long total = 0;
        for (int v = 0; v <= bound; ++v) {
            value[c] = v;
            total += self(self, t + 1);
        }
        value.erase(c);
        return total;
    };
    return rec(rec, 0);
}

// Column-by-column transfer: the state is the filling of the previous
// column, restricted to the rows shared with the current one.
inline long long rpp_count_transfer(const Diagram& shape, int k) {
    int maxcol = 0;
    for (const Cell& c : shape.cells()) maxcol = std::max(maxcol, c.col);
    std::map<std::vector<int>, long long> states{{{}, 1}};
    int prev_lo = 0, prev_hi = -1;
    for (int j = 1; j <= maxcol; ++j) {
        int lo = 0, hi = -1;
        for (const Cell& c : shape.cells())
            if (c.col == j) {
                lo = lo == 0 ? c.row : std::min(lo, c.row);
                hi = std::max(hi, c.row);
            }
        if (hi < 0) break;
        std::map<std::vector<int>, long long> next;
        for (const auto& [prev, ways] : states) {
            std::vector<int> cur(std::size_t(hi - lo + 1), 0);
            auto rec = [&](auto&& self, int row) -> void {
                if (row > hi) {
                    next[cur] += ways;
                    return;
                }
                int bound = k;
                if (row > lo) bound = std::min(bound, cur[std::size_t(row - lo) - 1]);
                if (row >= prev_lo && row <= prev_hi)
                    bound = std::min(bound, prev[std::size_t(row - prev_lo)]);
                for (int v = 0; v <= bound; ++v) {
                    cur[std::size_t(row - lo)] = v;
                    self(self, row + 1);
                }
            };
            rec(rec, lo);
        }
        states = std::move(next);
        prev_lo = lo;
        prev_hi = hi;
    }
    long long total = 0;
    for (const auto& [s, ways] : states) total += ways;
    return total;
}

inline long long rpp_count_shape(const Diagram& shape, int k) {
    if (k < 0) throw std::invalid_argument("rpp bound must be nonnegative");
    return shape.size() <= 12 ? rpp_count_bruteforce(shape, k) : rpp_count_transfer(shape, k);
}

}  // namespace detail

inline long long rpp_count(const Partition& lambda, int k) {
    return detail::rpp_count_shape(ferrers_diagram(lambda), k);
}

inline long long rpp_count(const StrictPartition& lambda, int k) {
    return detail::rpp_count_shape(shifted_ferrers_diagram(lambda), k);
}

// ----------------------------------------------------------------------
// Block constructions and the enumeration identities built from them.
// ----------------------------------------------------------------------

// 1^k x w: fixes 1..k and shifts w up by k.
inline Permutation block_shift(int k, const Permutation& w) {
    std::vector<int> v;
    for (int i = 1; i <= k; ++i) v.push_back(i);
    for (int i = 1; i <= w.window(); ++i) v.push_back(w(i) + k);
    return Permutation(std::move(v));
}

// 1^fpf_{2k} x z.
inline FpfInvolution fpf_block_shift(int k, const FpfInvolution& z) {
    std::vector<int> v;
    for (int i = 1; i <= 2 * k; i += 2) {
        v.push_back(i + 1);
        v.push_back(i);
    }
    for (int i = 1; i <= z.window(); ++i) v.push_back(z(i) + 2 * k);
    return FpfInvolution(Permutation(std::move(v)));
}

// g_n = (1,n+1)(2,n+2)...(n,2n).
inline Involution grassmannian_involution(int n) {
    std::vector<int> v;
    for (int i = 1; i <= n; ++i) v.push_back(n + i);
    for (int i = 1; i <= n; ++i) v.push_back(i);
    return Involution(Permutation(std::move(v)));
}

// |ID(1^k x g_n)| = #RPP of staircase shape (n,...,2,1) bounded by
// floor(k/2).
inline bool rpp_proposition_check(int n, int k) {
    Involution y(block_shift(k, grassmannian_involution(n).perm()));
    std::vector<int> parts;
    for (int i = n; i >= 1; --i) parts.push_back(i);
    return static_cast<long long>(inv_dream_set(y).size()) == rpp_count(Partition(parts), k / 2);
}

// Conjectural product formula for the weighted dream count of
// 1^k x n...321. The right-hand side counts reverse plane partitions of
// a shifted staircase, which matches ||ID||, not the plain cardinality:
// already at n = 2, k = 1 the set ID(132) = {{(2,1)}} has one element of
// weight 2 while the product evaluates to 2.
inline bool conjecture_pp_check(int n, int k) {
    Involution y(block_shift(k, longest_element(n)));
    Rational rhs = 1;
    int p = n / 2, q = (n + 1) / 2;
    for (int i = 1; i <= p; ++i)
        for (int j = 1; j <= q; ++j) rhs *= Rational(i + j + k - 1, i + j - 1);
    return weighted_count(y) == rhs;
}

// Conjectural product formula for |FD(1^fpf_{2k} x 2n...321)|.
inline bool conjecture_pp2_check(int n, int k) {
    FpfInvolution z = fpf_block_shift(k, FpfInvolution(longest_element(2 * n)));
    Rational rhs = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) rhs *= Rational(i + j + 2 * k - 1, i + j - 1);
    return Rational(long(fpf_dream_set(z).size())) == rhs;
}

}  // namespace ipd
