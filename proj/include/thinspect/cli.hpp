#pragma once

#include <fstream>
#include <iostream>
#include <map>

#include "thinspect/audit.hpp"
#include "thinspect/certificates.hpp"
#include "thinspect/sweeps.hpp"

namespace thinspect::cli {

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_cap = 2;
constexpr int exit_usage = 64;

namespace detail {

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct args_map {
    std::map<std::string, std::string> values;
    std::set<std::string> switches;

    bool has(const std::string& k) const { return values.count(k) || switches.count(k); }
    std::string get(const std::string& k) const {
        auto it = values.find(k);
        if (it == values.end()) throw usage_error("missing required flag " + k);
        return it->second;
    }
    std::string get_or(const std::string& k, const std::string& dflt) const {
        auto it = values.find(k);
        return it == values.end() ? dflt : it->second;
    }
};

inline args_map parse_flags(const std::vector<std::string>& args, size_t from,
                            const std::set<std::string>& value_flags,
                            const std::set<std::string>& switch_flags) {
    args_map out;
    for (size_t i = from; i < args.size(); i++) {
        const std::string& a = args[i];
        if (switch_flags.count(a)) {
            out.switches.insert(a);
        } else if (value_flags.count(a)) {
            if (i + 1 >= args.size()) throw usage_error("flag " + a + " needs a value");
            out.values[a] = args[++i];
        } else {
            throw usage_error("unknown flag " + a);
        }
    }
    return out;
}

inline int parse_int(const std::string& s, const std::string& what) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw usage_error("invalid " + what + ": " + s);
    }
}

inline std::vector<int> parse_int_list(const std::string& s, const std::string& what) {
    std::vector<int> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, ','))
        out.push_back(parse_int(cur, what));
    return out;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw tree_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw tree_error("cannot write " + path);
    out << content;
}

inline Tree load_tree(const args_map& a) { return parse_tree(read_file(a.get("--input"))); }

inline std::vector<vertex> load_ordering(const std::string& path) {
    std::istringstream in(read_file(path));
    std::vector<vertex> out;
    int v;
    while (in >> v) out.push_back(v);
    return out;
}

inline void print_usage(std::ostream& err) {
    err << "usage: thinspect <command> [flags]\n"
           "  recognize   --input FILE [--certificate OUT]\n"
           "  verify      --input FILE --certificate FILE [--strong]\n"
           "  exact       --input FILE [--max-n N]\n"
           "  min-classes --input FILE --ordering FILE [--strong]\n"
           "  gen         --family NAME [--params i,j,k] [--n N] [--seed S] --output FILE\n"
           "  detect      --input FILE\n"
           "  enumerate   --n N --check agreement\n"
           "  audit       --family NAME | --ta\n";
}

inline int cmd_recognize(const args_map& a, std::ostream& out) {
    Tree t = load_tree(a);
    Classification c = classify(t);
    switch (c.v) {
        case verdict::pthin1: out << "pthin=1\n"; break;
        case verdict::pthin2: out << "pthin=2\n"; break;
        case verdict::at_least_3: out << "pthin>=3\n"; break;
    }
    if (a.has("--certificate"))
        write_file(a.get("--certificate"), classification_to_json(c).dump(2) + "\n");
    return exit_ok;
}

inline int cmd_verify(const args_map& a, std::ostream& out) {
    Tree t = load_tree(a);
    json j = json::parse(read_file(a.get("--certificate")));
    bool strong = a.has("--strong");
    if (j.contains("verdict") && j.at("verdict") == "ge3") {
        Witness w = witness_from_json(j.at("certificate"));
        if (witness_mapping_valid(t, w.spec, w.mapping)) {
            out << "witness ok: " << family_name(w.spec.fam) << "\n";
            return exit_ok;
        }
        out << "witness invalid\n";
        return exit_negative;
    }
    json cj = j.contains("verdict") ? j.at("certificate") : j;
    Representation rep = representation_from_json(cj);
    if (!rep.dimensions_match(t)) {
        out << "invalid certificate: dimensions do not match tree\n";
        return exit_negative;
    }
    std::vector<int> sizes(static_cast<size_t>(std::max(rep.k, 1)), 0);
    for (int c : rep.classes) {
        if (c < 0 || c >= rep.k) {
            out << "invalid certificate: class id out of range\n";
            return exit_negative;
        }
        sizes[static_cast<size_t>(c)]++;
    }
    for (int c = 0; c < rep.k; c++)
        if (sizes[static_cast<size_t>(c)] == 0) {
            out << "invalid certificate: empty class " << c << "\n";
            return exit_negative;
        }
    auto viol = check_representation(t, rep, strong);
    if (!viol) {
        out << "ok\n";
        return exit_ok;
    }
    out << "violation r=" << viol->r << " s=" << viol->s << " t=" << viol->t << " clause="
        << (viol->clause == violation_clause::forward ? "forward" : "backward") << "\n";
    return exit_negative;
}

inline int cmd_exact(const args_map& a, std::ostream& out) {
    Tree t = load_tree(a);
    OracleCaps caps = OracleCaps::from_env();
    if (a.has("--max-n")) caps = OracleCaps::uniform(parse_int(a.get("--max-n"), "--max-n"));
    auto [k, rep] = pthin_exact(t, caps);
    out << "pthin=" << k << "\n";
    return exit_ok;
}

inline int cmd_min_classes(const args_map& a, std::ostream& out) {
    Tree t = load_tree(a);
    auto ordering = load_ordering(a.get("--ordering"));
    Representation rep = min_classes_for_ordering(t, ordering, a.has("--strong"));
    out << "k=" << rep.k << "\n";
    out << "classes=";
    for (size_t i = 0; i < rep.classes.size(); i++)
        out << (i ? " " : "") << rep.classes[i];
    out << "\n";
    return exit_ok;
}

inline int cmd_gen(const args_map& a, std::ostream&) {
    std::string name = a.get("--family");
    std::string lower = name;
    for (auto& ch : lower) ch = static_cast<char>(std::tolower(ch));
    uint64_t seed = static_cast<uint64_t>(
        a.has("--seed") ? parse_int(a.get("--seed"), "--seed") : 0);
    Tree t;
    try {
        if (lower == "random") {
            t = random_tree(parse_int(a.get("--n"), "--n"), seed);
        } else if (lower == "caterpillar" && !a.has("--params")) {
            t = random_caterpillar(parse_int(a.get("--n"), "--n"), seed);
        } else if (lower == "longhair" && !a.has("--params")) {
            t = random_long_haired_caterpillar(parse_int(a.get("--n"), "--n"), seed);
        } else {
            auto spec = family_from_name(lower);
            if (!spec) throw usage_error("unknown family " + name);
            if (a.has("--params")) spec->params = parse_int_list(a.get("--params"), "--params");
            if ((spec->fam == family::path || spec->fam == family::star) && a.has("--n"))
                spec->params = {parse_int(a.get("--n"), "--n")};
            t = build_family(*spec);
        }
    } catch (const tree_error& e) {
        throw usage_error(e.what());
    }
    write_file(a.get("--output"), serialize_tree(t));
    return exit_ok;
}

inline int cmd_detect(const args_map& a, std::ostream& out) {
    Tree t = load_tree(a);
    auto m = detect(t);
    if (!m) {
        out << "none\n";
        return exit_ok;
    }
    out << "family=" << family_name(m->spec.fam);
    out << " params=";
    for (size_t i = 0; i < m->spec.params.size(); i++)
        out << (i ? "," : "") << m->spec.params[i];
    out << " vertices=";
    for (size_t i = 0; i < m->mapping.size(); i++)
        out << (i ? " " : "") << m->mapping[i];
    out << "\n";
    return exit_ok;
}

inline int cmd_enumerate(const args_map& a, std::ostream& out) {
    if (a.get("--check") != "agreement") throw usage_error("unknown check " + a.get("--check"));
    int n = parse_int(a.get("--n"), "--n");
    SweepResult res = agreement_sweep(n, OracleCaps::from_env());
    out << "trees=" << res.trees << " mismatches=" << res.mismatches << "\n";
    if (res.mismatches) out << res.first_mismatch << "\n";
    return res.mismatches == 0 ? exit_ok : exit_negative;
}

inline int cmd_audit(const args_map& a, std::ostream& out) {
    AuditReport report;
    if (a.has("--ta")) {
        report = ta_battery();
    } else {
        auto spec = family_from_name(a.get("--family"));
        if (!spec) throw usage_error("unknown family " + a.get("--family"));
        for (const auto& [f, p] : minimal_family_parameters())
            if (f == spec->fam) spec->params = p;
        if (a.has("--params")) spec->params = parse_int_list(a.get("--params"), "--params");
        report = minimality_audit(*spec);
    }
    for (const auto& c : report.checks)
        out << (c.passed ? "ok   " : "FAIL ") << c.name
            << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
    out << (report.passed() ? "PASS" : "FAIL") << "\n";
    return report.passed() ? exit_ok : exit_negative;
}

}  // namespace detail

/// Entry point shared by the binary and the tests.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using namespace detail;
    if (args.empty()) {
        print_usage(err);
        return exit_usage;
    }
    const std::string& cmd = args[0];
    try {
        if (cmd == "recognize")
            return cmd_recognize(parse_flags(args, 1, {"--input", "--certificate"}, {}), out);
        if (cmd == "verify")
            return cmd_verify(parse_flags(args, 1, {"--input", "--certificate"}, {"--strong"}), out);
        if (cmd == "exact")
            return cmd_exact(parse_flags(args, 1, {"--input", "--max-n"}, {}), out);
        if (cmd == "min-classes")
            return cmd_min_classes(parse_flags(args, 1, {"--input", "--ordering"}, {"--strong"}),
                                   out);
        if (cmd == "gen")
            return cmd_gen(parse_flags(args, 1,
                                       {"--family", "--params", "--n", "--seed", "--output"}, {}),
                           out);
        if (cmd == "detect") return cmd_detect(parse_flags(args, 1, {"--input"}, {}), out);
        if (cmd == "enumerate")
            return cmd_enumerate(parse_flags(args, 1, {"--n", "--check"}, {}), out);
        if (cmd == "audit")
            return cmd_audit(parse_flags(args, 1, {"--family", "--params"}, {"--ta"}), out);
        print_usage(err);
        return exit_usage;
    } catch (const usage_error& e) {
        err << "error: " << e.what() << "\n";
        print_usage(err);
        return exit_usage;
    } catch (const cap_exceeded& e) {
        err << "error: " << e.what() << "\n";
        return exit_cap;
    } catch (const json::exception& e) {
        err << "error: bad certificate: " << e.what() << "\n";
        return exit_negative;
    } catch (const tree_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_negative;
    }
}

}  // namespace thinspect::cli
