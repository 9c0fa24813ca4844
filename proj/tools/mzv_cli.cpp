// Command-line front end: evaluate renormalized MZVs, print the table of
// depth-2 values, dump the intermediate Laurent data, and run the
// identity-check suites.
//
// Exit codes: 0 success, 1 check-suite failure, 2 domain error,
// 3 internal invariant violation.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mzv/mzv_numeric.hpp"
#include "mzv/renorm.hpp"

namespace {

using nlohmann::json;
using namespace mzv;

std::vector<long long> parse_int_list(const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) {
            throw DomainError("empty entry in integer list '" + text + "'");
        }
        std::size_t used = 0;
        long long v = std::stoll(item, &used);
        if (used != item.size()) {
            throw DomainError("cannot parse integer '" + item + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw DomainError("expected a non-empty integer list");
    }
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(Rational::parse(item));
    }
    if (out.empty()) {
        throw DomainError("expected a non-empty direction list");
    }
    return out;
}

std::string comp_str(const Composition& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.parts.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(c.parts[i]);
    }
    return s + ")";
}

void emit(const json& j, const std::string& format) {
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
    }
}

// ---------------------------------------------------------------- eval

struct EvalOpts {
    std::vector<long long> positional;
    std::string s_flag;
    std::string numeric; // "T=<float>"
    double tol = 1e-8;
    std::string format = "text";
};

std::vector<long long> gather_exponents(const std::vector<long long>& positional,
                                        const std::string& s_flag) {
    if (!s_flag.empty()) {
        return parse_int_list(s_flag);
    }
    if (positional.empty()) {
        throw DomainError("no exponents given; pass them positionally (after --) or via --s");
    }
    return positional;
}

int run_eval(const EvalOpts& opt) {
    const Composition s{gather_exponents(opt.positional, opt.s_flag)};

    bool want_numeric = false;
    double t_value = 0.0;
    if (!opt.numeric.empty()) {
        if (opt.numeric.rfind("T=", 0) != 0) {
            throw DomainError("--numeric expects T=<value>");
        }
        t_value = std::stod(opt.numeric.substr(2));
        want_numeric = true;
    }

    json j;
    j["command"] = "eval";
    j["input"] = {{"s", s.parts}};
    if (want_numeric) {
        j["input"]["numeric"] = opt.numeric;
        j["input"]["tol"] = opt.tol;
    }
    j["checks"] = json::array();

    std::ostringstream text;
    if (s.all_nonpositive()) {
        const Rational v = gzeta_nonpos(s);
        if (want_numeric) {
            const double x = v.to_double();
            j["result"] = {{"kind", "numeric"}, {"value", x}};
            text << std::setprecision(15) << x;
        } else {
            j["result"] = {{"kind", "rational"}, {"value", v.str()}};
            text << v.str();
        }
    } else if (s.all_positive()) {
        const SymbolicValue v = gzeta_positive(s);
        if (want_numeric) {
            const double x = numeric_value(v, t_value, std::max(opt.tol, 1e-10));
            j["result"] = {{"kind", "numeric"}, {"value", x}};
            text << std::setprecision(15) << x;
        } else {
            j["result"] = {{"kind", "symbolic"}, {"value", v.str()}};
            text << v.str();
        }
    } else {
        throw UnsupportedSignature(
            "renormalized MZVs are defined for all non-positive or all positive "
            "argument vectors; mixed signs are outside the domain");
    }

    if (opt.format == "json") {
        emit(j, opt.format);
    } else {
        std::cout << text.str() << "\n";
    }
    return 0;
}

// --------------------------------------------------------------- table

int run_table(long long max_s1, long long max_s2, const std::string& format) {
    if (max_s1 < 1 || max_s2 < 1 || max_s1 > 8 || max_s2 > 8) {
        throw DomainError("table size must satisfy 1 <= max_s1, max_s2 <= 8");
    }
    std::vector<std::vector<std::string>> entries;
    for (long long i = 1; i <= max_s1; ++i) {
        std::vector<std::string> row;
        for (long long jcol = 1; jcol <= max_s2; ++jcol) {
            row.push_back(gzeta_nonpos(Composition{{-i, -jcol}}).str());
        }
        entries.push_back(std::move(row));
    }

    if (format == "json") {
        json j;
        j["command"] = "table";
        j["input"] = {{"max_s1", max_s1}, {"max_s2", max_s2}};
        j["result"] = {{"rows", max_s1}, {"entries", entries}};
        j["checks"] = json::array();
        emit(j, format);
        return 0;
    }

    std::vector<std::size_t> width(static_cast<std::size_t>(max_s2), 0);
    for (const auto& row : entries) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            width[c] = std::max(width[c], row[c].size());
        }
    }
    for (const auto& row : entries) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::cout << (c > 0 ? "  " : "") << std::setw(static_cast<int>(width[c]))
                      << row[c];
        }
        std::cout << "\n";
    }
    return 0;
}

// -------------------------------------------------------------- expand

int run_expand(const std::string& s_flag, const std::string& r_flag, int order,
               const std::string& format) {
    if (s_flag.empty()) {
        throw DomainError("expand requires --s");
    }
    const Composition s{parse_int_list(s_flag)};
    if (!s.all_nonpositive()) {
        throw UnsupportedSignature("expand handles non-positive exponents only");
    }
    if (order < 0 || order > 64) {
        throw DomainError("window too small or too large: --order must be in [0, 64]");
    }

    const bool auto_dirs = r_flag.empty() || r_flag == "auto";
    const Word w = auto_dirs ? dress_nonpositive(s)
                             : dress_concrete(s, parse_rational_list(r_flag));
    const Window win{-(pole_bound(w) + window_margin()), order};

    const LaurentSeries z = z_nonpos(w, win);
    const LaurentSeries pm = phi_minus(w, win);
    const LaurentSeries pp = phi_plus(w, win);

    json j;
    j["command"] = "expand";
    j["input"] = {{"s", s.parts}, {"r", auto_dirs ? "auto" : r_flag}, {"order", order}};
    j["result"] = {{"window", {{"lo", win.lo}, {"hi", win.hi}}},
                   {"z", z.str()},
                   {"phi_minus", pm.str()},
                   {"phi_plus", pp.str()}};
    j["checks"] = json::array();

    std::ostringstream text;
    text << "word    : " << w.str() << "\n";
    text << "window  : [" << win.lo << ", " << win.hi << "]\n";
    text << "Z       : " << z.str() << "\n";
    text << "phi-    : " << pm.str() << "\n";
    text << "phi+    : " << pp.str() << "\n";
    if (auto_dirs) {
        const Rational gz = eval_at_delta_zero(pp.coeff(0));
        j["result"]["gz"] = gz.str();
        text << "gz at d->0: " << gz.str() << "\n";
    }

    if (format == "json") {
        emit(j, format);
    } else {
        std::cout << text.str();
    }
    return 0;
}

// --------------------------------------------------------------- check

struct CheckReport {
    json checks = json::array();
    int instances = 0;
    int failures = 0;
    std::ostringstream text;

    void record(const std::string& name, bool pass) {
        ++instances;
        if (!pass) ++failures;
        checks.push_back({{"name", name}, {"pass", pass}});
        text << (pass ? "ok   " : "FAIL ") << name << "\n";
    }
};

void enum_nonpos_comps(int max_depth, long long max_weight, long long min_part,
                       std::vector<long long>& cur, std::vector<Composition>& out) {
    if (!cur.empty()) {
        out.push_back(Composition{cur});
    }
    if (static_cast<int>(cur.size()) == max_depth) {
        return;
    }
    long long used = 0;
    for (long long p : cur) used += -p;
    for (long long v = 0; v >= min_part && used - v <= max_weight; --v) {
        cur.push_back(v);
        enum_nonpos_comps(max_depth, max_weight, min_part, cur, out);
        cur.pop_back();
    }
}

void check_stuffle(CheckReport& rep, int max_depth, long long max_weight) {
    std::vector<Composition> comps;
    std::vector<long long> cur;
    enum_nonpos_comps(max_depth - 1, max_weight, -max_weight, cur, comps);
    for (const auto& a : comps) {
        for (const auto& b : comps) {
            if (b < a) continue; // unordered pairs once
            if (static_cast<int>(a.depth() + b.depth()) > max_depth) continue;
            if (a.weight() + b.weight() > max_weight) continue;
            Rational rhs(0);
            for (const auto& [w, c] : stuffle_exponents(a, b)) {
                rhs += c * gzeta_nonpos(w);
            }
            const bool pass = gzeta_nonpos(a) * gzeta_nonpos(b) == rhs;
            rep.record("stuffle " + comp_str(a) + " x " + comp_str(b), pass);
        }
    }
}

void check_table(CheckReport& rep) {
    struct Anchor {
        long long s1, s2;
        const char* value;
    };
    static const Anchor anchors[] = {
        {-1, -1, "1/288"},    {-1, -2, "-1/240"},     {-2, -1, "-1/240"},
        {-1, -3, "83/64512"}, {-3, -1, "-71/35840"},  {-1, -4, "1/504"},
        {-2, -2, "0"},        {-4, -4, "0"},          {-6, -6, "0"},
        {-3, -3, "1/28800"},  {-5, -5, "1/127008"},   {-7, -7, "1/115200"},
        {-6, -5, "-691/65520"},
    };
    for (const auto& a : anchors) {
        const Rational got = gzeta_nonpos(Composition{{a.s1, a.s2}});
        const bool pass = got == Rational::parse(a.value);
        rep.record("table gz(" + std::to_string(a.s1) + "," + std::to_string(a.s2) +
                       ") = " + a.value,
                   pass);
    }
}

Word random_nonpos_word(std::mt19937& rng, int max_depth, long long max_weight) {
    std::uniform_int_distribution<int> depth_pick(1, max_depth);
    const int depth = depth_pick(rng);
    std::vector<Letter> ls;
    long long left = max_weight;
    for (int i = 0; i < depth; ++i) {
        std::uniform_int_distribution<long long> part(0, std::min<long long>(3, left));
        const long long s = -part(rng);
        left -= -s;
        std::uniform_int_distribution<int> cpick(0, 3);
        std::uniform_int_distribution<int> mpick(0, 2);
        int c = cpick(rng);
        int m = mpick(rng);
        if (c == 0 && m == 0) c = 1;
        ls.push_back(Letter{s, Direction(Rational(c), Rational(m))});
    }
    return Word(std::move(ls));
}

void check_oracle(CheckReport& rep, int max_depth) {
    std::mt19937 rng(20240517);
    const int n = 50;
    for (int i = 0; i < n; ++i) {
        const Word w = random_nonpos_word(rng, std::min(max_depth, 4), 8);
        const Window win{-(pole_bound(w) + window_margin()), 2};
        const bool pass = phi_plus(w, win) == phi_plus_closed(w, win);
        rep.record("phi+ closed form " + w.str(), pass);
    }
    for (int i = 0; i < n; ++i) {
        const Word a = random_nonpos_word(rng, 3, 6);
        const Word b = random_nonpos_word(rng, 3, 6);
        const bool pass = quasi_shuffle(a, b) == stuffle_oracle(a, b);
        rep.record("stuffle oracle " + a.str() + " x " + b.str(), pass);
    }
}

void check_positive(CheckReport& rep, int max_depth) {
    {
        const bool pass = gzeta_positive(Composition{{1}}) == SymbolicValue::t_power(1);
        rep.record("gz(1) = T", pass);
    }
    {
        SymbolicValue expect = SymbolicValue::t_power(2).scaled(Rational(1, 2));
        expect += SymbolicValue::symbol(Composition{{2}}).scaled(Rational(-1, 2));
        const bool pass = gzeta_positive(Composition{{1, 1}}) == expect;
        rep.record("gz(1,1) = 1/2*T^2 - 1/2*z(2)", pass);
    }
    {
        SymbolicValue lhs = gzeta_positive(Composition{{1, 2}});
        lhs += SymbolicValue::symbol(Composition{{2, 1}});
        lhs += SymbolicValue::symbol(Composition{{3}});
        const SymbolicValue rhs = symbolic_mul(SymbolicValue::symbol(Composition{{2}}),
                                               SymbolicValue::t_power(1));
        rep.record("gz(1,2) + z(2,1) + z(3) = z(2)*T", lhs == rhs);
    }
    std::mt19937 rng(987654321);
    std::uniform_int_distribution<int> depth_pick(1, std::max(1, max_depth / 2));
    std::uniform_int_distribution<long long> part_pick(1, 4);
    for (int i = 0; i < 25; ++i) {
        std::vector<long long> pa(static_cast<std::size_t>(depth_pick(rng)));
        std::vector<long long> pb(static_cast<std::size_t>(depth_pick(rng)));
        for (auto& p : pa) p = part_pick(rng);
        for (auto& p : pb) p = part_pick(rng);
        const Composition a{pa}, b{pb};
        SymbolicValue rhs;
        for (const auto& [w, c] : stuffle_exponents(a, b)) {
            rhs += gzeta_positive(w).scaled(c);
        }
        const bool pass = symbolic_mul(gzeta_positive(a), gzeta_positive(b)) == rhs;
        rep.record("positive stuffle " + comp_str(a) + " x " + comp_str(b), pass);
    }
}

int run_check(const std::string& suite, int max_depth, long long max_weight,
              const std::string& format) {
    CheckReport rep;
    if (suite == "stuffle") {
        check_stuffle(rep, max_depth > 0 ? max_depth : 3, max_weight > 0 ? max_weight : 8);
    } else if (suite == "table") {
        check_table(rep);
    } else if (suite == "oracle") {
        check_oracle(rep, max_depth > 0 ? max_depth : 3);
    } else if (suite == "positive") {
        check_positive(rep, max_depth > 0 ? max_depth : 4);
    } else {
        throw DomainError("unknown check suite '" + suite +
                          "' (expected stuffle, table, oracle, or positive)");
    }

    if (format == "json") {
        json j;
        j["command"] = "check";
        j["input"] = {{"suite", suite}};
        j["result"] = {{"instances", rep.instances}, {"failures", rep.failures}};
        j["checks"] = rep.checks;
        emit(j, format);
    } else {
        std::cout << rep.text.str();
        std::cout << "checked " << rep.instances << " instances, " << rep.failures
                  << " failures\n";
    }
    return rep.failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact renormalized multiple zeta values"};
    app.require_subcommand(1);

    // Accepted for interface stability; every command is deterministic for
    // any worker count, so the value is not consulted.
    int jobs = 1;

    EvalOpts eval_opts;
    auto* eval = app.add_subcommand("eval", "Evaluate gz(s) exactly or numerically");
    eval->add_option("exponents", eval_opts.positional,
                     "Exponent list (put negatives after --)");
    eval->add_option("--s", eval_opts.s_flag, "Comma-separated exponents, e.g. --s=-1,-2");
    eval->add_option("--numeric", eval_opts.numeric, "T=<value>: substitute and evaluate");
    eval->add_option("--tol", eval_opts.tol, "Numeric tolerance (default 1e-8)");
    eval->add_option("--format", eval_opts.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    eval->add_option("--jobs", jobs, "Reserved worker count");

    long long max_s1 = 8, max_s2 = 7;
    std::string table_format = "text";
    auto* table = app.add_subcommand("table", "Print the gz(-s1,-s2) grid");
    table->add_option("max_s1", max_s1, "Rows (default 8)");
    table->add_option("max_s2", max_s2, "Columns (default 7)");
    table->add_option("--format", table_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    table->add_option("--jobs", jobs, "Reserved worker count");

    std::string expand_s, expand_r = "auto", expand_format = "text";
    int expand_order = 2;
    auto* expand = app.add_subcommand("expand", "Dump Z, phi-, phi+ Laurent data");
    expand->add_option("--s", expand_s, "Comma-separated non-positive exponents")
        ->required();
    expand->add_option("--r", expand_r, "Comma-separated rational directions, or auto");
    expand->add_option("--order", expand_order, "Highest e power to display (default 2)");
    expand->add_option("--format", expand_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string check_suite, check_format = "text";
    int check_depth = 0;
    long long check_weight = 0;
    auto* check = app.add_subcommand("check", "Run an identity-check suite");
    check->add_option("suite", check_suite, "stuffle | table | oracle | positive")
        ->required();
    check->add_option("--max-depth", check_depth, "Combined depth bound");
    check->add_option("--max-weight", check_weight, "Combined weight bound");
    check->add_option("--format", check_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    check->add_option("--jobs", jobs, "Reserved worker count");

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval->parsed()) {
            return run_eval(eval_opts);
        }
        if (table->parsed()) {
            return run_table(max_s1, max_s2, table_format);
        }
        if (expand->parsed()) {
            return run_expand(expand_s, expand_r, expand_order, expand_format);
        }
        if (check->parsed()) {
            return run_check(check_suite, check_depth, check_weight, check_format);
        }
    } catch (const PoleAtZero& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const EmptyWindow& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const OutOfWindow& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
