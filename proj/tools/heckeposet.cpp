// Command line front end: builds the poset families, prints expansions of
// their generating functions, emits Hasse diagrams, and drives the
// verification suites.  All output is deterministic given the same inputs.

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "heckeposet/composition.hpp"
#include "heckeposet/diagram.hpp"
#include "heckeposet/hecke.hpp"
#include "heckeposet/io.hpp"
#include "heckeposet/permutation.hpp"
#include "heckeposet/poset.hpp"
#include "heckeposet/ppart.hpp"
#include "heckeposet/qsym.hpp"
#include "heckeposet/tableaux.hpp"
#include "heckeposet/verify.hpp"

namespace {

using namespace heckeposet;

constexpr int kEnumerationCap = 9;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + out_path);
    f << text;
}

// Families whose module comes from a single poset.
Poset family_poset(const std::string& family, const Composition& alpha) {
    if (family == "dimm") return poset_dual_immaculate(alpha);
    if (family == "ext") return poset_extended(alpha);
    if (family == "rdimm") return twisted_poset(TwistedFamily::RDIF, alpha);
    if (family == "rext") return twisted_poset(TwistedFamily::RESF, alpha);
    throw std::invalid_argument("family " + family + " does not name a single poset");
}

// Fundamental-basis expansion of the named family member.  The four
// quasisymmetric Schur variants sum one poset module per tableau class.
QsymElement family_function(const std::string& family, const Composition& alpha) {
    auto class_sum = [](const Composition& shape, auto make) {
        QsymElement out;
        for (const auto& e : srct_classes(shape)) out += kp_fundamental(make(e));
        return out;
    };
    if (family == "qs")
        return class_sum(alpha, [](const SrctClass& e) { return poset_quasischur(e); });
    if (family == "yqs")
        return class_sum(alpha.reverse(),
                         [](const SrctClass& e) { return twisted_poset(TwistedFamily::YQS, e); });
    if (family == "yrqs")
        return class_sum(alpha,
                         [](const SrctClass& e) { return twisted_poset(TwistedFamily::YRQS, e); });
    if (family == "rqs")
        return class_sum(alpha.reverse(),
                         [](const SrctClass& e) { return twisted_poset(TwistedFamily::RQS, e); });
    return kp_fundamental(family_poset(family, alpha));
}

// Default table: integer coefficients against Psi_beta / z_beta.  A named
// basis prints the plain expansion with rational coefficients instead.
ExpansionTable make_table(const std::string& family, const std::string& basis,
                          const QsymElement& kp_f) {
    ExpansionTable t;
    t.family = family;
    t.basis = basis.empty() ? "Psi/z" : basis;
    if (basis.empty()) {
        QsymElement psi = expand_in_psi(fundamental_to_monomial(kp_f));
        for (const auto& [beta, c] : psi.terms()) {
            Rational d = c * z_stat(beta);
            if (denominator(d) != 1)
                throw std::logic_error("rescaled coefficient is not integral at " +
                                       beta.to_string());
            t.rows.push_back({beta.to_string(), numerator(d).str()});
        }
        return t;
    }
    QsymElement x;
    std::string prefix;
    if (basis == "F") {
        x = kp_f;
        prefix = "F_";
    } else if (basis == "M") {
        x = fundamental_to_monomial(kp_f);
        prefix = "M_";
    } else if (basis == "Psi") {
        x = expand_in_psi(fundamental_to_monomial(kp_f));
        prefix = "Psi_";
    } else {
        throw std::invalid_argument("unknown basis: " + basis);
    }
    for (const auto& [idx, c] : x.terms()) t.rows.push_back({prefix + idx.to_string(), to_string(c)});
    return t;
}

struct Config {
    std::string family;
    std::string alpha;
    std::string rho;
    std::string covers_file;
    std::string basis;
    std::string format = "tsv";
    std::string out;
    std::string suite = "all";
    std::string side = "right";
    std::string bottom, top;
    std::string tableau;
    int n = 4;
};

Composition parse_alpha(const Config& c) {
    Composition alpha = composition_from_string(c.alpha);
    if (alpha.size() > kEnumerationCap)
        throw std::invalid_argument("composition too large; sizes are capped at 9");
    return alpha;
}

Poset resolve_poset(const Config& c) {
    if (!c.covers_file.empty()) return poset_from_json(read_text_file(c.covers_file));
    if (!c.family.empty() && !c.alpha.empty()) return family_poset(c.family, parse_alpha(c));
    throw std::invalid_argument("need --covers-file, or --family together with --alpha");
}

int run_expand(const Config& c) {
    QsymElement kp_f;
    if (c.family == "poset") {
        if (c.covers_file.empty())
            throw std::invalid_argument("--family poset needs --covers-file");
        Poset p = poset_from_json(read_text_file(c.covers_file));
        if (p.n() > kEnumerationCap)
            throw std::invalid_argument("poset too large; sizes are capped at 9");
        kp_f = kp_fundamental(p);
    } else {
        if (c.alpha.empty()) throw std::invalid_argument("--alpha is required");
        kp_f = family_function(c.family, parse_alpha(c));
    }
    ExpansionTable t = make_table(c.family, c.basis, kp_f);
    emit(c.format == "json" ? expansion_to_json(t) + "\n" : expansion_to_tsv(t), c.out);
    return 0;
}

int run_hasse(const Config& c) {
    emit(poset_to_dot(resolve_poset(c)), c.out);
    return 0;
}

int run_poset(const Config& c) {
    Poset p = resolve_poset(c);
    if (c.format == "json") {
        emit(poset_to_json(p) + "\n", c.out);
        return 0;
    }
    std::ostringstream os;
    os << "n: " << p.n() << "\n";
    os << "covers:";
    for (const auto& [u, v] : p.covers()) os << " " << u << "<" << v;
    os << "\n";
    os << "regular: " << (p.is_regular() ? "true" : "false") << "\n";
    std::vector<Permutation> ext = p.linear_extensions();
    os << "extensions: " << ext.size() << "\n";
    os << "sigma_R:";
    for (const auto& g : ext) os << " " << g.to_string();
    os << "\n";
    os << "sigma_L:";
    for (const auto& g : p.sigma_L()) os << " " << g.to_string();
    os << "\n";
    if (p.n() <= kEnumerationCap)
        os << "characteristic: " << characteristic_of_poset_module(p).to_string("F") << "\n";
    emit(os.str(), c.out);
    return 0;
}

int run_interval(const Config& c) {
    Side side = c.side == "left" ? Side::Left : Side::Right;
    Permutation bottom = permutation_from_string(c.bottom);
    Permutation top = permutation_from_string(c.top);
    WeakInterval iv = interval(side, bottom, top);
    std::ostringstream os;
    os << "side: " << c.side << "\n";
    os << "bottom: " << bottom.to_string() << "\n";
    os << "top: " << top.to_string() << "\n";
    os << "size: " << iv.elements.size() << "\n";
    os << "elements:";
    for (const auto& g : iv.elements) os << " " << g.to_string();
    os << "\n";
    if (side == Side::Right) {
        Poset p = poset_from_interval(bottom, top);
        os << "covers:";
        for (const auto& [u, v] : p.covers()) os << " " << u << "<" << v;
        os << "\n";
    } else {
        auto [fb, ft] = functor_F(bottom, top);
        os << "dual right interval: [" << fb.to_string() << ", " << ft.to_string() << "]\n";
    }
    emit(os.str(), c.out);
    return 0;
}

int run_sink_tableau(const Config& c) {
    CompositionTableau t = tableau_from_string(TabKind::SRCT, c.tableau);
    CompositionTableau s = sink_from(t);
    std::ostringstream os;
    os << "tableau: " << t.to_string() << "\n";
    os << "shape: " << t.shape().to_string() << "\n";
    os << "sink: " << s.to_string() << "\n";
    os << "read: " << read_tau(s).to_string() << "\n";
    os << "descents:";
    for (int d : s.descents()) os << " " << d;
    os << "\n";
    emit(os.str(), c.out);
    return 0;
}

int run_build_d(const Config& c) {
    Composition alpha = parse_alpha(c);
    Permutation rho = permutation_from_string(c.rho);
    DiagramTrace tr = build_d_trace(alpha, rho);
    std::ostringstream os;
    os << "alpha: " << alpha.to_string() << "\n";
    os << "rho: " << rho.to_string() << "\n";
    auto groups = [&os](const char* tag, const std::vector<std::vector<int>>& gs) {
        os << tag << ":";
        for (const auto& g : gs) {
            os << " {";
            for (size_t i = 0; i < g.size(); ++i) os << (i ? "," : "") << g[i];
            os << "}";
        }
        os << "\n";
    };
    groups("R", tr.row_groups);
    groups("C", tr.column_groups);
    os << "cells:";
    for (const auto& [col, row] : tr.diagram.cells()) os << " (" << col << "," << row << ")";
    os << "\n";
    emit(os.str(), c.out);
    return 0;
}

int run_verify(const Config& c) {
    std::vector<SuiteResult> results = run_suites(c.suite, c.n);
    bool ok = true;
    for (const auto& r : results) {
        ok = ok && r.passed;
        std::cerr << r.name << ": " << (r.passed ? "pass" : "FAIL") << " (" << r.checks
                  << " checks, " << r.seconds << " s)\n";
    }
    emit(report_to_json(results) + "\n", c.out);
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    Config c;
    CLI::App app{"0-Hecke poset modules and quasisymmetric expansions"};
    app.require_subcommand(1);

    const std::vector<std::string> families = {"dimm", "ext",  "rdimm", "rext", "qs",
                                               "yqs",  "yrqs", "rqs",   "poset"};

    CLI::App* expand = app.add_subcommand(
        "expand", "Expansion table of a family member or of a poset generating function");
    expand->add_option("--family", c.family, "One of dimm|ext|rdimm|rext|qs|yqs|yrqs|rqs|poset")
        ->required()
        ->check(CLI::IsMember(families));
    expand->add_option("--alpha", c.alpha, "Composition, e.g. 2,1,2");
    expand->add_option("--covers-file", c.covers_file, "Poset JSON file (family poset)");
    expand->add_option("--basis", c.basis, "Print the F, M or Psi expansion instead of the integer table")
        ->check(CLI::IsMember({"F", "M", "Psi"}));
    expand->add_option("--format", c.format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
    expand->add_option("--out", c.out, "Write to a file instead of stdout");

    CLI::App* hasse = app.add_subcommand("hasse", "Hasse diagram in DOT form");
    hasse->add_option("--family", c.family, "dimm|ext|rdimm|rext")
        ->check(CLI::IsMember({"dimm", "ext", "rdimm", "rext"}));
    hasse->add_option("--alpha", c.alpha, "Composition for the family poset");
    hasse->add_option("--covers-file", c.covers_file, "Poset JSON file");
    hasse->add_option("--out", c.out, "Write to a file instead of stdout");

    CLI::App* poset = app.add_subcommand("poset", "Build a poset and report its invariants");
    poset->add_option("--family", c.family, "dimm|ext|rdimm|rext")
        ->check(CLI::IsMember({"dimm", "ext", "rdimm", "rext"}));
    poset->add_option("--alpha", c.alpha, "Composition for the family poset");
    poset->add_option("--covers-file", c.covers_file, "Poset JSON file");
    poset->add_option("--format", c.format, "tsv (plain report) or json (exchange format)")
        ->check(CLI::IsMember({"tsv", "json"}));
    poset->add_option("--out", c.out, "Write to a file instead of stdout");

    CLI::App* ival = app.add_subcommand("interval", "Elements of a weak order interval");
    ival->add_option("bottom", c.bottom, "One-line word of the lower endpoint")->required();
    ival->add_option("top", c.top, "One-line word of the upper endpoint")->required();
    ival->add_option("--side", c.side, "left or right (default right)")
        ->check(CLI::IsMember({"left", "right"}));
    ival->add_option("--out", c.out, "Write to a file instead of stdout");

    CLI::App* sink = app.add_subcommand("sink-tableau",
                                        "Sink of the tableau class of a standard reverse "
                                        "composition tableau");
    sink->add_option("tableau", c.tableau, "Rows '/'-separated, entries comma-separated")
        ->required();
    sink->add_option("--out", c.out, "Write to a file instead of stdout");

    CLI::App* build = app.add_subcommand("build-d",
                                         "Intersection diagram of a composition and a "
                                         "permutation, with the row and column groups");
    build->add_option("--alpha", c.alpha, "Composition, e.g. 1,1,2,2,1,1,1")->required();
    build->add_option("--rho", c.rho, "One-line word lying above w0_of(alpha) in left order")
        ->required();
    build->add_option("--out", c.out, "Write to a file instead of stdout");

    CLI::App* verify = app.add_subcommand("verify", "Run the verification suites");
    verify->add_option("--suite", c.suite, "relations|interval|hopf|twists|liu-weselcouch|borderstrips|all");
    verify->add_option("--n", c.n, "Exhaustive bound (1..9, default 4)")
        ->check(CLI::Range(1, 9));
    verify->add_option("--out", c.out, "Write the JSON report to a file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (expand->parsed()) return run_expand(c);
        if (hasse->parsed()) return run_hasse(c);
        if (poset->parsed()) return run_poset(c);
        if (ival->parsed()) return run_interval(c);
        if (sink->parsed()) return run_sink_tableau(c);
        if (build->parsed()) return run_build_d(c);
        if (verify->parsed()) return run_verify(c);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
