#pragma once

#include "ipd/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ipd {

// Monomial in two blocks of variables x_1, x_2, ... and y_1, y_2, ...
// Exponent vectors never carry trailing zeros.
struct Monomial {
    std::vector<int> x;
    std::vector<int> y;

    long degree() const {
        long d = 0;
        for (int e : x) d += e;
        for (int e : y) d += e;
        return d;
    }
    int x_exp(int i) const { return i >= 1 && i <= int(x.size()) ? x[std::size_t(i) - 1] : 0; }
    int y_exp(int i) const { return i >= 1 && i <= int(y.size()) ? y[std::size_t(i) - 1] : 0; }
    bool is_constant() const { return x.empty() && y.empty(); }
    bool operator==(const Monomial&) const = default;

    static void trim(std::vector<int>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    }
    Monomial trimmed() && {
        trim(x);
        trim(y);
        return std::move(*this);
    }
};

// Graded term order, leading term first: higher total degree wins; among
// equal degrees the monomial whose trailing exponent difference is
// negative wins (reverse lexicographic tie-break on the concatenated
// x-then-y exponent vector).
struct TermOrder {
    static int cmp(const Monomial& a, const Monomial& b) {
        long da = a.degree(), db = b.degree();
        if (da != db) return da > db ? -1 : 1;
        int nx = int(std::max(a.x.size(), b.x.size()));
        int ny = int(std::max(a.y.size(), b.y.size()));
        for (int i = ny; i >= 1; --i) {
            int d = a.y_exp(i) - b.y_exp(i);
            if (d != 0) return d < 0 ? -1 : 1;
        }
        for (int i = nx; i >= 1; --i) {
            int d = a.x_exp(i) - b.x_exp(i);
            if (d != 0) return d < 0 ? -1 : 1;
        }
        return 0;
    }
    bool operator()(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
};

// Sparse multivariate polynomial with exact rational coefficients.
// Immutable in spirit: arithmetic returns fresh values. No zero
// coefficient is ever stored.
class Polynomial {
public:
    Polynomial() = default;

    /*implicit*/ Polynomial(int c) { add_term({}, Rational(c)); }
    /*implicit*/ Polynomial(const Rational& c) { add_term({}, c); }

    static Polynomial var_x(int i) {
        if (i < 1) throw std::invalid_argument("variable index must be positive");
        Polynomial p;
        std::vector<int> e(std::size_t(i), 0);
        e.back() = 1;
        p.add_term({e, {}}, 1);
        return p;
    }
    static Polynomial var_y(int i) {
        if (i < 1) throw std::invalid_argument("variable index must be positive");
        Polynomial p;
        std::vector<int> e(std::size_t(i), 0);
        e.back() = 1;
        p.add_term({{}, e}, 1);
        return p;
    }

    const std::map<Monomial, Rational, TermOrder>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    long degree() const {  // total degree; -1 for the zero polynomial
        return terms_.empty() ? -1 : terms_.begin()->first.degree();
    }

    bool is_integral() const {
        for (const auto& [m, c] : terms_)
            if (!ipd::is_integral(c)) return false;
        return true;
    }

    bool has_y() const {
        for (const auto& [m, c] : terms_)
            if (!m.y.empty()) return true;
        return false;
    }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(Monomial m, const Rational& c) {
        if (c == 0) return;
        m = std::move(m).trimmed();
        auto [it, fresh] = terms_.emplace(std::move(m), c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m;
                m.x.resize(std::max(ma.x.size(), mb.x.size()), 0);
                m.y.resize(std::max(ma.y.size(), mb.y.size()), 0);
                for (std::size_t i = 0; i < ma.x.size(); ++i) m.x[i] += ma.x[i];
                for (std::size_t i = 0; i < mb.x.size(); ++i) m.x[i] += mb.x[i];
                for (std::size_t i = 0; i < ma.y.size(); ++i) m.y[i] += ma.y[i];
                for (std::size_t i = 0; i < mb.y.size(); ++i) m.y[i] += mb.y[i];
                out.add_term(std::move(m), ca * cb);
            }
        return out;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator*(const Rational& c, const Polynomial& p) {
        Polynomial out;
        for (const auto& [m, pc] : p.terms_) out.add_term(m, c * pc);
        return out;
    }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

    // Substitute y_j = 0 for every j.
    Polynomial with_y_zero() const {
        Polynomial out;
        for (const auto& [m, c] : terms_)
            if (m.y.empty()) out.add_term(m, c);
        return out;
    }

    // Substitute x_i = value for all i; defined for y-free polynomials.
    Rational eval_all_x(const Rational& value) const {
        Rational sum = 0;
        for (const auto& [m, c] : terms_) {
            if (!m.y.empty()) throw std::invalid_argument("eval_all_x needs a y-free polynomial");
            sum += c * rational_pow(value, static_cast<unsigned long>(m.degree()));
        }
        return sum;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            bool first = s.empty();
            Rational a = c;
            if (!first) {
                s += a < 0 ? " - " : " + ";
                if (a < 0) a = -a;
            } else if (a < 0) {
                s += "-";
                a = -a;
            }
            std::string mono;
            for (int i = 1; i <= int(m.x.size()); ++i) {
                int e = m.x[std::size_t(i) - 1];
                if (e == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += "x" + std::to_string(i);
                if (e > 1) mono += "^" + std::to_string(e);
            }
            for (int i = 1; i <= int(m.y.size()); ++i) {
                int e = m.y[std::size_t(i) - 1];
                if (e == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += "y" + std::to_string(i);
                if (e > 1) mono += "^" + std::to_string(e);
            }
            if (mono.empty()) {
                s += ipd::to_string(a);
            } else {
                if (!(a == 1)) s += ipd::to_string(a) + "*";
                s += mono;
            }
        }
        return s;
    }

private:
    std::map<Monomial, Rational, TermOrder> terms_;
};

// (f - s_i f) / (x_i - x_{i+1}), where s_i swaps x_i and x_{i+1}. The
// division is exact: each monomial contributes a geometric telescope.
inline Polynomial divided_difference(const Polynomial& f, int i) {
    Polynomial out;
    for (const auto& [m, c] : f.terms()) {
        int a = m.x_exp(i), b = m.x_exp(i + 1);
        if (a == b) continue;
        int lo = std::min(a, b), hi = std::max(a, b);
        Rational coeff = a > b ? c : -c;
        for (int t = 0; t < hi - lo; ++t) {
            Monomial mm = m;
            if (int(mm.x.size()) < i + 1) mm.x.resize(std::size_t(i) + 1, 0);
            mm.x[std::size_t(i) - 1] = lo + (hi - lo - 1 - t);
            mm.x[std::size_t(i)] = lo + t;
            out.add_term(std::move(mm).trimmed(), coeff);
        }
    }
    return out;
}

}  // namespace ipd
