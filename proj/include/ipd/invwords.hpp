#pragma once

#include "ipd/symgroup.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ipd {

// Self-inverse permutation. Same canonical trimmed form as Permutation.
class Involution {
public:
    Involution() = default;

    explicit Involution(Permutation p) : perm_(std::move(p)) {
        if (!(perm_ == perm_.inverse())) throw std::invalid_argument("not an involution");
    }

    const Permutation& perm() const { return perm_; }
    int window() const { return perm_.window(); }
    int operator()(int i) const { return perm_(i); }
    bool is_identity() const { return perm_.is_identity(); }
    bool operator==(const Involution&) const = default;
    auto operator<=>(const Involution&) const = default;
    std::string to_string() const { return perm_.to_string(); }

private:
    Permutation perm_;
};

// Fixed-point-free involution of [n] for an even window n. Unlike plain
// permutations these do not embed stably by adding fixed points; the
// stable tower appends 2-cycles instead (z -> z s_{n+1}).
class FpfInvolution {
public:
    explicit FpfInvolution(Permutation p) : perm_(std::move(p)) {
        if (!(perm_ == perm_.inverse())) throw std::invalid_argument("not an involution");
        if (perm_.window() % 2 != 0) throw std::invalid_argument("fpf involution needs an even window");
        for (int i = 1; i <= perm_.window(); ++i)
            if (perm_(i) == i) throw std::invalid_argument("involution has a fixed point");
        if (perm_.window() < 2) throw std::invalid_argument("fpf involution window must be positive");
    }

    // 1^fpf_n = (1,2)(3,4)...(n-1,n)
    static FpfInvolution base(int n) {
        if (n < 2 || n % 2 != 0) throw std::invalid_argument("base fpf involution needs even n >= 2");
        std::vector<int> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; i += 2) {
            v[std::size_t(i)] = i + 2;
            v[std::size_t(i) + 1] = i + 1;
        }
        return FpfInvolution(Permutation(std::move(v)));
    }

    const Permutation& perm() const { return perm_; }
    int window() const { return perm_.window(); }
    int operator()(int i) const { return perm_(i); }
    bool operator==(const FpfInvolution&) const = default;
    auto operator<=>(const FpfInvolution&) const = default;
    std::string to_string() const { return perm_.to_string(); }

    // z s_{n+1}: the same point of the stable tower, two points later.
    FpfInvolution extended() const {
        int n = window();
        std::vector<int> v = perm_.one_line(n + 2);
        std::swap(v[std::size_t(n)], v[std::size_t(n) + 1]);
        return FpfInvolution(Permutation(std::move(v)));
    }

    // Strips trailing (m+1, m+2) cycles down to the minimal even window.
    FpfInvolution trimmed() const {
        FpfInvolution z = *this;
        while (z.window() > 2 && z(z.window()) == z.window() - 1 && z(z.window() - 1) == z.window()) {
            std::vector<int> v = z.perm().one_line(z.window());
            v.resize(std::size_t(z.window()) - 2);
            z = FpfInvolution(Permutation(std::move(v)));
        }
        return z;
    }

private:
    Permutation perm_;
};

// Number of 2-cycles: #{i : y(i) < i}.
inline int kappa(const Involution& y) {
    int k = 0;
    for (int i = 1; i <= y.window(); ++i)
        if (y(i) < i) ++k;
    return k;
}

inline int kappa(const FpfInvolution& z) { return z.window() / 2; }

// Involution code: c_i = #{j > i : y(i) > y(j) and i >= y(j)}.
inline std::vector<int> inv_code(const Involution& y) {
    int n = y.window();
    std::vector<int> c(std::size_t(std::max(n, 0)), 0);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (y(i) > y(j) && i >= y(j)) ++c[std::size_t(i) - 1];
    return c;
}

// Fpf involution code: c_i = #{j > i : z(i) > z(j) and i > z(j)}.
inline std::vector<int> fpf_inv_code(const FpfInvolution& z) {
    int n = z.window();
    std::vector<int> c(std::size_t(n), 0);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (z(i) > z(j) && i > z(j)) ++c[std::size_t(i) - 1];
    return c;
}

// Common length of the atoms; equals the sum of the involution code.
inline long iell(const Involution& y) {
    long s = 0;
    for (int c : inv_code(y)) s += c;
    return s;
}

inline long fpf_ell(const FpfInvolution& z) {
    long s = 0;
    for (int c : fpf_inv_code(z)) s += c;
    return s;
}

// Minimal atom: the inverse of the one-line word formed by listing each
// cycle as (value, point) for points a <= y(a) in increasing order and
// dropping repeats.
inline Permutation alpha_min(const Involution& y) {
    std::vector<int> word;
    for (int a = 1; a <= y.window(); ++a) {
        if (a > y(a)) continue;
        if (y(a) != a) word.push_back(y(a));
        word.push_back(a);
    }
    return Permutation(word).inverse();
}

// Minimal fpf-atom: (a_1 b_1 a_2 b_2 ...)^{-1} over the cycles
// a_i < b_i = z(a_i) sorted by a_i.
inline Permutation alpha_min_fpf(const FpfInvolution& z) {
    std::vector<int> word;
    for (int a = 1; a <= z.window(); ++a) {
        if (a > z(a)) continue;
        word.push_back(a);
        word.push_back(z(a));
    }
    return Permutation(word).inverse();
}

namespace detail {

// Upward covers of w in the atom order: rewrite three consecutive
// entries of the inverse one-line from (c,a,b) to (b,c,a) where a<b<c.
inline std::vector<Permutation> atom_covers(const Permutation& w, int n) {
    std::vector<int> v = w.inverse().one_line(n);
    std::vector<Permutation> out;
    for (std::size_t p = 0; p + 2 < v.size(); ++p) {
        int c = v[p], a = v[p + 1], b = v[p + 2];
        if (a < b && b < c) {
            std::vector<int> u = v;
            u[p] = b;
            u[p + 1] = c;
            u[p + 2] = a;
            out.push_back(Permutation(std::move(u)).inverse());
        }
    }
    return out;
}

// Fpf analogue: rewrite four consecutive inverse one-line entries from
// (a,d,b,c) to (b,c,a,d) where a<b<c<d.
inline std::vector<Permutation> fpf_atom_covers(const Permutation& w, int n) {
    std::vector<int> v = w.inverse().one_line(n);
    std::vector<Permutation> out;
    for (std::size_t p = 0; p + 3 < v.size(); ++p) {
        int a = v[p], d = v[p + 1], b = v[p + 2], c = v[p + 3];
        if (a < b && b < c && c < d) {
            std::vector<int> u = v;
            u[p] = b;
            u[p + 1] = c;
            u[p + 2] = a;
            u[p + 3] = d;
            out.push_back(Permutation(std::move(u)).inverse());
        }
    }
    return out;
}

}  // namespace detail

// A(y): closure of the atom order covers from alpha_min(y). Every
// element is validated against the defining property w^{-1} o w = y.
inline std::set<Permutation> atoms(const Involution& y) {
    int n = y.window();
    std::set<Permutation> seen{alpha_min(y)};
    std::vector<Permutation> work(seen.begin(), seen.end());
    while (!work.empty()) {
        Permutation w = std::move(work.back());
        work.pop_back();
        for (Permutation& u : detail::atom_covers(w, n))
            if (seen.insert(u).second) work.push_back(u);
    }
    for (const Permutation& w : seen) {
        if (length(w) != iell(y) || !(demazure(w.inverse(), w) == y.perm()))
            throw std::logic_error("atom closure produced a non-atom for " + y.to_string());
    }
    return seen;
}

// A^fpf(z), generated the same way from alpha_min_fpf(z) and validated
// against w^{-1} 1^fpf_n w = z.
inline std::set<Permutation> fpf_atoms(const FpfInvolution& z) {
    int n = z.window();
    std::set<Permutation> seen{alpha_min_fpf(z)};
    std::vector<Permutation> work(seen.begin(), seen.end());
    while (!work.empty()) {
        Permutation w = std::move(work.back());
        work.pop_back();
        for (Permutation& u : detail::fpf_atom_covers(w, n))
            if (seen.insert(u).second) work.push_back(u);
    }
    Permutation b = FpfInvolution::base(n).perm();
    for (const Permutation& w : seen) {
        if (length(w) != fpf_ell(z) || !(compose(compose(w.inverse(), b), w) == z.perm()))
            throw std::logic_error("fpf atom closure produced a non-atom for " + z.to_string());
    }
    return seen;
}

// R^(y): union of the reduced words of the atoms.
inline std::vector<Word> involution_words(const Involution& y) {
    std::vector<Word> out;
    for (const Permutation& w : atoms(y))
        for (Word& a : reduced_words(w)) out.push_back(std::move(a));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Word> fpf_involution_words(const FpfInvolution& z) {
    std::vector<Word> out;
    for (const Permutation& w : fpf_atoms(z))
        for (Word& a : reduced_words(w)) out.push_back(std::move(a));
    std::sort(out.begin(), out.end());
    return out;
}

// One step of the Demazure conjugation t -> s_a o t o s_a.
inline Permutation demazure_conjugate(const Permutation& t, int a) {
    Permutation sa = simple_transposition(a);
    if (has_descent(t, a)) return t;  // s_a o t o s_a = t when l(t s_a) < l(t)
    Permutation ts = compose(t, sa), st = compose(sa, t);
    return ts == st ? ts : compose(st, sa);
}

// Folds a word through the Demazure conjugation from the identity; a is
// an involution word for the result iff |a| is minimal, i.e. equals iell.
inline Involution demazure_conjugation_fold(const Word& word) {
    Permutation t;
    for (int a : word) t = demazure_conjugate(t, a);
    return Involution(t);
}

inline bool is_involution_word(const Word& word, const Involution& y) {
    return long(word.size()) == iell(y) && demazure_conjugation_fold(word) == y;
}

// Plain conjugation fold from 1^fpf_n; for words of minimal length this
// matches the Demazure-conjugation description.
inline Permutation fpf_conjugation_fold(const Word& word, int n) {
    Permutation t = FpfInvolution::base(n).perm();
    for (int a : word) {
        Permutation sa = simple_transposition(a);
        t = compose(compose(sa, t), sa);
    }
    return t;
}

inline bool is_fpf_involution_word(const Word& word, const FpfInvolution& z) {
    return long(word.size()) == fpf_ell(z) &&
           fpf_conjugation_fold(word, z.window()) == z.perm();
}

// tau_{ij}: if some w t_{ij} with w an atom of y and l(w t_{ij}) = l(w)+1
// is an atom of an involution z, returns z; the target does not depend
// on which atom produced it, and the search covers every atom and
// insists on agreement rather than assuming independence. Otherwise
// returns y unchanged.
inline Involution tau(int i, int j, const Involution& y) {
    if (!(1 <= i && i < j)) throw std::invalid_argument("tau needs 1 <= i < j");
    std::optional<Involution> result;
    for (const Permutation& w : atoms(y)) {
        Permutation wt = compose(w, transposition(i, j));
        if (length(wt) != length(w) + 1) continue;
        Involution z(demazure(wt.inverse(), wt));
        if (length(wt) != iell(z)) continue;  // wt is not an atom of z
        if (result && !(*result == z))
            throw std::logic_error("tau: inconsistent targets across atoms");
        result = z;
    }
    return result.value_or(y);
}

// Psi(y,j) = {tau_{js}(y) : s > j, iell goes up by one}, with y viewed
// inside the one-larger symmetric group.
inline std::set<Involution> psi(const Involution& y, int j) {
    if (j < 1) throw std::invalid_argument("psi needs j >= 1");
    int n = std::max(y.window(), j);
    std::set<Involution> out;
    for (int s = j + 1; s <= n + 1; ++s) {
        Involution z = tau(j, s, y);
        if (!(z == y) && iell(z) == iell(y) + 1) out.insert(z);
    }
    return out;
}

// Psi^fpf(y,j): conjugates the extension y s_{n+1} by t_{js} for
// j < s <= n+2 and keeps the fixed-point-free involutions whose length
// goes up by exactly two. Results are trimmed to their minimal window.
inline std::set<FpfInvolution> psi_fpf(const FpfInvolution& y, int j) {
    if (j < 1 || j > y.window()) throw std::invalid_argument("psi_fpf needs 1 <= j <= n");
    FpfInvolution ext = y.extended();
    int n2 = ext.window();
    std::set<FpfInvolution> out;
    for (int s = j + 1; s <= n2; ++s) {
        Permutation t = transposition(j, s);
        Permutation cand = compose(compose(t, ext.perm()), t);
        if (length(cand) == length(ext.perm()) + 2)
            out.insert(FpfInvolution(cand).trimmed());
    }
    return out;
}

// y <= z in Bruhat order, tested by greedily stripping one involution
// word of z against y. Agrees with bruhat_leq on the underlying
// permutations.
inline bool inv_bruhat_leq(const Involution& y, const Involution& z) {
    if (iell(y) > iell(z)) return false;
    Word a = any_reduced_word(alpha_min(z));  // an involution word for z
    Permutation t = y.perm();
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        if (!has_descent(t, *it)) continue;
        Permutation sa = simple_transposition(*it);
        Permutation ts = compose(t, sa), st = compose(sa, t);
        t = ts == st ? ts : compose(compose(sa, t), sa);
    }
    return t.is_identity();
}

inline std::vector<Involution> all_involutions(int n) {
    std::vector<Involution> out;
    for (const Permutation& w : all_permutations(n))
        if (w == w.inverse()) out.push_back(Involution(w));
    return out;
}

inline std::vector<FpfInvolution> all_fpf_involutions(int n) {
    if (n % 2 != 0) throw std::invalid_argument("fpf involutions need an even window");
    std::vector<FpfInvolution> out;
    for (const Permutation& w : all_permutations(n)) {
        if (!(w == w.inverse()) || w.window() != n) continue;
        bool fpf = true;
        for (int i = 1; i <= n && fpf; ++i)
            if (w(i) == i) fpf = false;
        if (fpf) out.push_back(FpfInvolution(w));
    }
    return out;
}

inline Involution parse_involution(const std::string& text) {
    return Involution(parse_permutation(text));
}

inline FpfInvolution parse_fpf_involution(const std::string& text) {
    return FpfInvolution(parse_permutation(text));
}

}  // namespace ipd
