#pragma once

#include "ipd/diagram.hpp"
#include "ipd/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ipd {

// A word in the simple generators s_1, s_2, ...; letters are 1-based.
using Word = std::vector<int>;

// Permutation of Z_{>0} fixing all but finitely many points, in one-line
// notation. Trailing fixed points are trimmed, so the embeddings
// S_n < S_{n+1} are equalities of objects: 213 and 2134 construct the
// same value. The identity is the empty sequence.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        validate();
        trim();
    }

    // w(i), defined for every positive i.
    int operator()(int i) const {
        return i >= 1 && i <= int(images_.size()) ? images_[i - 1] : i;
    }

    // Size of the smallest [n] containing all non-fixed points.
    int window() const { return int(images_.size()); }
    bool is_identity() const { return images_.empty(); }

    const std::vector<int>& one_line() const { return images_; }

    // One-line notation padded to n entries.
    std::vector<int> one_line(int n) const {
        std::vector<int> v(static_cast<std::size_t>(std::max(n, window())));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = (*this)(int(i) + 1);
        return v;
    }

    Permutation inverse() const {
        std::vector<int> inv(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i) inv[std::size_t(images_[i]) - 1] = int(i) + 1;
        return Permutation(std::move(inv));
    }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

    std::string to_string() const {
        if (is_identity()) return "1";
        std::string s;
        bool digits = window() <= 9;
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (!digits && i) s += ",";
            s += std::to_string(images_[i]);
        }
        return s;
    }

private:
    void validate() const {
        std::vector<bool> seen(images_.size(), false);
        for (int v : images_) {
            if (v < 1 || v > int(images_.size()) || seen[std::size_t(v) - 1])
                throw std::invalid_argument("not a permutation in one-line notation");
            seen[std::size_t(v) - 1] = true;
        }
    }
    void trim() {
        while (!images_.empty() && images_.back() == int(images_.size())) images_.pop_back();
    }

    std::vector<int> images_;
};

inline Permutation identity_permutation() { return {}; }

// s_i = (i, i+1)
inline Permutation simple_transposition(int i) {
    if (i < 1) throw std::invalid_argument("generator index must be >= 1");
    std::vector<int> v(static_cast<std::size_t>(i) + 1);
    std::iota(v.begin(), v.end(), 1);
    std::swap(v[std::size_t(i) - 1], v[std::size_t(i)]);
    return Permutation(std::move(v));
}

// t_ij = (i, j)
inline Permutation transposition(int i, int j) {
    if (i == j || i < 1 || j < 1) throw std::invalid_argument("transposition needs distinct positive points");
    int n = std::max(i, j);
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::swap(v[std::size_t(i) - 1], v[std::size_t(j) - 1]);
    return Permutation(std::move(v));
}

// w0 = n...321
inline Permutation longest_element(int n) {
    std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i) v[std::size_t(i)] = n - i;
    return Permutation(std::move(v));
}

// (u o v)(i) = u(v(i))
inline Permutation compose(const Permutation& u, const Permutation& v) {
    int n = std::max(u.window(), v.window());
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) w[std::size_t(i) - 1] = u(v(i));
    return Permutation(std::move(w));
}

inline Permutation operator*(const Permutation& u, const Permutation& v) { return compose(u, v); }

// Number of inversions; equals the length of any reduced word.
inline long length(const Permutation& w) {
    long inv = 0;
    int n = w.window();
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (w(i) > w(j)) ++inv;
    return inv;
}

// Right descent: l(w s_i) < l(w).
inline bool has_descent(const Permutation& w, int i) { return w(i) > w(i + 1); }

inline std::vector<int> descents(const Permutation& w) {
    std::vector<int> d;
    for (int i = 1; i <= w.window(); ++i)
        if (has_descent(w, i)) d.push_back(i);
    return d;
}

// w * s_i (swap of positions i, i+1)
inline Permutation right_mul_simple(const Permutation& w, int i) {
    std::vector<int> v = w.one_line(i + 1);
    std::swap(v[std::size_t(i) - 1], v[std::size_t(i)]);
    return Permutation(std::move(v));
}

// x o s_a in the 0-Hecke / Demazure monoid: x s_a if the length goes up,
// x otherwise.
inline Permutation demazure_mul(const Permutation& x, int a) {
    return has_descent(x, a) ? x : right_mul_simple(x, a);
}

// Left-to-right Demazure fold of a word.
inline Permutation demazure_product(const Word& word) {
    Permutation x;
    for (int a : word) x = demazure_mul(x, a);
    return x;
}

// Ordinary group product s_{a_1} s_{a_2} ... s_{a_l}.
inline Permutation word_product(const Word& word) {
    Permutation x;
    for (int a : word) x = compose(x, simple_transposition(a));
    return x;
}

// Some reduced word of w, by peeling the smallest right descent.
inline Word any_reduced_word(Permutation w) {
    Word rev;
    while (!w.is_identity()) {
        int i = 1;
        while (!has_descent(w, i)) ++i;
        rev.push_back(i);
        w = right_mul_simple(w, i);
    }
    return Word(rev.rbegin(), rev.rend());
}

// Lexicographically smallest reduced word, built greedily from the left:
// the first letter is the smallest left descent.
inline Word lex_min_reduced_word(Permutation w) {
    Word out;
    while (!w.is_identity()) {
        int i = 1;
        while (w.inverse()(i) < w.inverse()(i + 1)) ++i;  // l(s_i w) < l(w)
        out.push_back(i);
        w = compose(simple_transposition(i), w);
    }
    return out;
}

// u o v extended to arbitrary arguments by folding a reduced word of v.
inline Permutation demazure(const Permutation& u, const Permutation& v) {
    Permutation x = u;
    for (int a : any_reduced_word(v)) x = demazure_mul(x, a);
    return x;
}

namespace detail {
inline const std::vector<Word>& reduced_words_memo(const Permutation& w,
                                                   std::map<Permutation, std::vector<Word>>& cache) {
    auto it = cache.find(w);
    if (it != cache.end()) return it->second;
    std::vector<Word> out;
    if (w.is_identity()) {
        out.push_back({});
    } else {
        for (int i : descents(w)) {
            for (const Word& a : reduced_words_memo(right_mul_simple(w, i), cache)) {
                Word b = a;
                b.push_back(i);
                out.push_back(std::move(b));
            }
        }
        std::sort(out.begin(), out.end());
    }
    return cache.emplace(w, std::move(out)).first->second;
}
}  // namespace detail

// All reduced words of w, sorted lexicographically.
inline std::vector<Word> reduced_words(const Permutation& w) {
    std::map<Permutation, std::vector<Word>> cache;
    return detail::reduced_words_memo(w, cache);
}

// v <= w in Bruhat order, by the greedy subword test on one fixed
// reduced word of w: scan the word from the right and strip every letter
// that is a descent of the remaining target.
inline bool bruhat_leq(const Permutation& v, const Permutation& w) {
    if (length(v) > length(w)) return false;
    Word a = any_reduced_word(w);
    Permutation t = v;
    for (auto it = a.rbegin(); it != a.rend(); ++it)
        if (has_descent(t, *it)) t = right_mul_simple(t, *it);
    return t.is_identity();
}

// Rothe diagram D(w) = {(i,j) : w(i) > j and w^{-1}(j) > i}.
inline Diagram rothe_diagram(const Permutation& w) {
    int n = w.window();
    Permutation wi = w.inverse();
    std::vector<Cell> cs;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (w(i) > j && wi(j) > i) cs.push_back({i, j});
    return Diagram(std::move(cs), n);
}

// Lehmer code c_i(w) = #{j : (i,j) in D(w)}.
inline std::vector<int> code(const Permutation& w) {
    int n = w.window();
    std::vector<int> c(std::size_t(std::max(n, 0)), 0);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (w(i) > w(j)) ++c[std::size_t(i) - 1];
    return c;
}

// Unique permutation with the given code: w(i) is the (c_i+1)-th
// smallest unused value.
inline Permutation lehmer_decode(const std::vector<int>& c) {
    int n = int(c.size());
    std::vector<int> unused(static_cast<std::size_t>(n));
    std::iota(unused.begin(), unused.end(), 1);
    std::vector<int> w;
    w.reserve(std::size_t(n));
    for (int i = 0; i < n; ++i) {
        if (c[std::size_t(i)] < 0 || c[std::size_t(i)] >= int(unused.size()))
            throw std::invalid_argument("invalid Lehmer code entry");
        auto it = unused.begin() + c[std::size_t(i)];
        w.push_back(*it);
        unused.erase(it);
    }
    return Permutation(std::move(w));
}

// D_bot(w) = {(i,j) : j <= c_i(w)}, the left-justification of D(w).
inline Diagram bottom_pipe_dream(const Permutation& w) {
    std::vector<int> c = code(w);
    std::vector<Cell> cs;
    for (int i = 1; i <= int(c.size()); ++i)
        for (int j = 1; j <= c[std::size_t(i) - 1]; ++j) cs.push_back({i, j});
    return Diagram(std::move(cs), w.window());
}

// w is dominant iff D(w) is a Ferrers diagram.
inline bool is_dominant(const Permutation& w) {
    return long(dominant_shape(rothe_diagram(w)).size()) == length(w);
}

// The unique dominant w in S_n with dom(w) = D_lambda; requires
// lambda inside the staircase (n-1,...,2,1).
inline Permutation dominant_from_partition(const Partition& lambda, int n) {
    if (!staircase(n).contains(lambda))
        throw std::invalid_argument("partition does not fit in the staircase (n-1,...,1)");
    std::vector<int> c(std::size_t(n), 0);
    for (std::size_t i = 0; i < lambda.rows(); ++i) c[i] = lambda.part(i);
    return lehmer_decode(c);
}

// All permutations of [n] (canonical trimmed representatives).
inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
    std::sort(out.begin(), out.end());
    return out;
}

// --- text formats ------------------------------------------------------

// Accepts one-line digits ("35142"), comma-separated one-line
// ("3,5,1,4,2"), or cycle form ("(2,4)(3,5)": unlisted points fixed).
inline Permutation parse_permutation(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty permutation text");
    if (text == "1" || text == "id" || text == "()") return {};
    if (text.front() == '(') {
        // cycle form
        std::vector<std::pair<int, int>> maps;
        std::size_t pos = 0;
        int maxpt = 0;
        while (pos < text.size()) {
            if (text[pos] != '(') throw std::invalid_argument("bad cycle form: " + text);
            std::size_t close = text.find(')', pos);
            if (close == std::string::npos) throw std::invalid_argument("unclosed cycle: " + text);
            std::vector<int> cyc;
            std::size_t p = pos + 1;
            while (p < close) {
                std::size_t q = p;
                while (q < close && text[q] != ',') ++q;
                cyc.push_back(std::stoi(text.substr(p, q - p)));
                p = q + 1;
            }
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                if (cyc[i] < 1) throw std::invalid_argument("cycle entries must be positive");
                maps.emplace_back(cyc[i], cyc[(i + 1) % cyc.size()]);
                maxpt = std::max(maxpt, cyc[i]);
            }
            pos = close + 1;
        }
        std::vector<int> v(static_cast<std::size_t>(maxpt));
        std::iota(v.begin(), v.end(), 1);
        std::vector<bool> moved(static_cast<std::size_t>(maxpt), false);
        for (auto [a, b] : maps) {
            if (moved[std::size_t(a) - 1]) throw std::invalid_argument("repeated point in cycles");
            moved[std::size_t(a) - 1] = true;
            v[std::size_t(a) - 1] = b;
        }
        return Permutation(std::move(v));
    }
    std::vector<int> v;
    if (text.find(',') != std::string::npos) {
        std::size_t p = 0;
        while (p <= text.size()) {
            std::size_t q = text.find(',', p);
            if (q == std::string::npos) q = text.size();
            v.push_back(std::stoi(text.substr(p, q - p)));
            p = q + 1;
            if (q == text.size()) break;
        }
    } else {
        for (char ch : text) {
            if (ch < '1' || ch > '9') throw std::invalid_argument("bad one-line notation: " + text);
            v.push_back(ch - '0');
        }
    }
    return Permutation(std::move(v));
}

}  // namespace ipd
