#pragma once

#include "ipd/io.hpp"
#include "ipd/verify.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace ipd::cli {

// Exit codes: 0 success, 1 verification failure, 2 usage error.

namespace detail {

struct Options {
    std::string verb;
    std::vector<std::string> positional;
    bool json = false;
    bool fpf = false;
    bool inv = false;
    bool dbl = false;
    int n = 4;
    std::string format = "ascii";
    std::optional<std::string> out_path;
};

inline Options parse_args(const std::vector<std::string>& args) {
    Options o;
    std::size_t i = 0;
    if (i < args.size()) o.verb = args[i++];
    while (i < args.size()) {
        const std::string& a = args[i++];
        auto need_value = [&](const char* flag) -> const std::string& {
            if (i >= args.size()) throw std::invalid_argument(std::string(flag) + " needs a value");
            return args[i++];
        };
        if (a == "--json")
            o.json = true;
        else if (a == "--fpf")
            o.fpf = true;
        else if (a == "--inv")
            o.inv = true;
        else if (a == "--double")
            o.dbl = true;
        else if (a == "--n")
            o.n = std::stoi(need_value("--n"));
        else if (a == "--format")
            o.format = need_value("--format");
        else if (a == "--out")
            o.out_path = need_value("--out");
        else if (!a.empty() && a[0] == '-')
            throw std::invalid_argument("unknown flag: " + a);
        else
            o.positional.push_back(a);
    }
    if (o.format != "ascii" && o.format != "svg")
        throw std::invalid_argument("--format must be ascii or svg");
    return o;
}

inline const std::string& subject(const Options& o) {
    if (o.positional.size() != 1)
        throw std::invalid_argument("verb '" + o.verb + "' needs exactly one argument");
    return o.positional.front();
}

inline void emit_dreams(const std::set<Diagram>& dreams, const std::string& kind, int window,
                        const Options& o, std::ostream& out) {
    if (o.json) {
        nlohmann::json j = {{"kind", kind}, {"count", dreams.size()}};
        j["dreams"] = nlohmann::json::array();
        for (const Diagram& d : dreams)
            j["dreams"].push_back(diagram_to_json(d.with_window(window), kind));
        out << j.dump() << "\n";
    } else {
        for (const Diagram& d : dreams) out << d.to_string() << "\n";
    }
}

inline void emit_polynomial(const Polynomial& p, const Options& o, std::ostream& out) {
    if (o.json)
        out << polynomial_to_json(p).dump() << "\n";
    else
        out << p.to_string() << "\n";
}

inline void emit_words(const std::vector<Word>& words, const Options& o, std::ostream& out) {
    if (o.json) {
        nlohmann::json j = nlohmann::json::array();
        for (const Word& w : words) j.push_back(w);
        out << j.dump() << "\n";
    } else {
        for (const Word& w : words) {
            for (std::size_t i = 0; i < w.size(); ++i) out << (i ? " " : "") << w[i];
            out << "\n";
        }
    }
}

inline int run_verify(const Options& o, std::ostream& out) {
    std::vector<std::string> names;
    if (subject(o) == "all")
        names = suite_names();
    else
        names.push_back(subject(o));
    bool ok = true;
    nlohmann::json report = nlohmann::json::array();
    for (const std::string& name : names) {
        SuiteResult r = run_suite(name, o.n);
        if (r.blocking && !r.passed()) ok = false;
        if (o.json) {
            report.push_back({{"suite", r.name},
                              {"items", r.items},
                              {"passed", r.passed()},
                              {"blocking", r.blocking},
                              {"failures", r.failures}});
        } else {
            std::ostringstream line;
            line << r.name << ": "
                 << (r.passed() ? "PASS" : (r.blocking ? "FAIL" : "DEVIATES")) << " (" << r.items
                 << " items";
            if (!r.passed()) line << ", " << r.failures.size() << " failures";
            line << ")";
            out << line.str() << "\n";
            for (const std::string& f : r.failures) out << "  " << f << "\n";
        }
    }
    if (o.json) out << report.dump() << "\n";
    return ok ? 0 : 1;
}

inline int run_count(const Options& o, std::ostream& out) {
    nlohmann::json j;
    if (o.inv) {
        Involution y = parse_involution(subject(o));
        long dreams = long(inv_dream_set(y).size());
        Rational weighted = weighted_count(y);
        Rational spec = pow2(kappa(y)) * principal_specialization(inv_schubert(y), Rational(1, 2));
        j = {{"dreams", dreams}, {"weighted", to_string(weighted)}, {"specialized", to_string(spec)}};
        if (!o.json)
            out << "involution pipe dreams: " << dreams << "\nweighted count: "
                << to_string(weighted) << "\n2^kappa * S^(1/2,...): " << to_string(spec) << "\n";
        if (!(weighted == spec)) return 1;
    } else if (o.fpf) {
        FpfInvolution z = parse_fpf_involution(subject(o));
        long dreams = long(fpf_dream_set(z).size());
        Rational spec = principal_specialization(fpf_schubert(z), Rational(1, 2));
        j = {{"dreams", dreams}, {"specialized", to_string(spec)}};
        if (!o.json)
            out << "fpf involution pipe dreams: " << dreams << "\nS^fpf(1/2,...): "
                << to_string(spec) << "\n";
        if (!(Rational(dreams) == spec)) return 1;
    } else {
        Permutation w = parse_permutation(subject(o));
        long dreams = long(pd_set(w).size());
        Rational spec = principal_specialization(schubert(w), 1);
        j = {{"dreams", dreams}, {"specialized", to_string(spec)}};
        if (!o.json)
            out << "pipe dreams: " << dreams << "\nS(1,...,1): " << to_string(spec) << "\n";
        if (!(Rational(dreams) == spec)) return 1;
    }
    if (o.json) out << j.dump() << "\n";
    return 0;
}

inline int dispatch(const Options& o, std::ostream& out) {
    if (o.verb == "pd") {
        Permutation w = parse_permutation(subject(o));
        emit_dreams(pd_set(w), "pd", w.window(), o, out);
    } else if (o.verb == "ipd") {
        Involution y = parse_involution(subject(o));
        emit_dreams(inv_dream_set(y), "id", y.window(), o, out);
    } else if (o.verb == "fpd") {
        FpfInvolution z = parse_fpf_involution(subject(o));
        emit_dreams(fpf_dream_set(z), "fd", z.window(), o, out);
    } else if (o.verb == "schubert") {
        Permutation w = parse_permutation(subject(o));
        emit_polynomial(o.dbl ? double_schubert(w) : schubert(w), o, out);
    } else if (o.verb == "inv-schubert") {
        emit_polynomial(inv_schubert(parse_involution(subject(o))), o, out);
    } else if (o.verb == "fpf-schubert") {
        emit_polynomial(fpf_schubert(parse_fpf_involution(subject(o))), o, out);
    } else if (o.verb == "atoms") {
        std::set<Permutation> result = o.fpf ? fpf_atoms(parse_fpf_involution(subject(o)))
                                             : atoms(parse_involution(subject(o)));
        if (o.json) {
            nlohmann::json j = nlohmann::json::array();
            for (const Permutation& w : result) j.push_back(w.to_string());
            out << j.dump() << "\n";
        } else {
            for (const Permutation& w : result) out << w.to_string() << "\n";
        }
    } else if (o.verb == "words") {
        std::vector<Word> words;
        if (o.inv)
            words = involution_words(parse_involution(subject(o)));
        else if (o.fpf)
            words = fpf_involution_words(parse_fpf_involution(subject(o)));
        else
            words = reduced_words(parse_permutation(subject(o)));
        emit_words(words, o, out);
    } else if (o.verb == "render") {
        Diagram d = diagram_from_json(nlohmann::json::parse(subject(o)));
        out << (o.format == "svg" ? render_svg(d) : render_ascii(d));
    } else if (o.verb == "count") {
        return run_count(o, out);
    } else if (o.verb == "verify") {
        return run_verify(o, out);
    } else {
        throw std::invalid_argument("unknown verb: " + o.verb);
    }
    return 0;
}

}  // namespace detail

inline const char* usage_text() {
    return "usage: ipd <verb> [subject] [flags]\n"
           "verbs:\n"
           "  pd <w>             reduced pipe dreams of a permutation\n"
           "  ipd <y>            involution pipe dreams of an involution\n"
           "  fpd <z>            fpf-involution pipe dreams\n"
           "  schubert <w>       Schubert polynomial (--double for the double version)\n"
           "  inv-schubert <y>   involution Schubert polynomial\n"
           "  fpf-schubert <z>   fpf-involution Schubert polynomial\n"
           "  atoms <y|z>        atoms (--fpf for the fpf flavor)\n"
           "  words <w|y|z>      reduced words (--inv / --fpf for involution words)\n"
           "  count <w|y|z>      dream counts vs specializations (--inv / --fpf)\n"
           "  render <json>      draw a diagram ({\"n\":4,\"cells\":[[2,1]]})\n"
           "  verify <suite|all> run cross-check suites\n"
           "flags: --json --n <int> --format ascii|svg --out <path> --inv --fpf --double\n";
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    detail::Options o;
    try {
        o = detail::parse_args(args);
        if (o.verb.empty() || o.verb == "help" || o.verb == "--help") {
            out << usage_text();
            return o.verb.empty() ? 2 : 0;
        }
        std::ostringstream buffer;
        int code = detail::dispatch(o, buffer);
        if (o.out_path) {
            std::ofstream f(*o.out_path);
            if (!f) throw std::runtime_error("cannot open output file: " + *o.out_path);
            f << buffer.str();
        } else {
            out << buffer.str();
        }
        return code;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n" << usage_text();
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace ipd::cli
