// Command-line front end: verify suites, compute products/coproducts/
// conversions/expansions, and export posets, structure constants, and
// dimension tables. Exit codes: 0 success, 1 verification failure, 2 usage
// or guard errors.

#include "sphopf/characters.hpp"
#include "sphopf/classfun.hpp"
#include "sphopf/engine.hpp"
#include "sphopf/fock.hpp"
#include "sphopf/io.hpp"
#include "sphopf/superclass.hpp"
#include "sphopf/symfun.hpp"
#include "sphopf/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <unistd.h>

namespace {

using namespace sphopf;

std::string self_path() {
    char buffer[4096];
    ssize_t got = readlink("/proc/self/exe", buffer, sizeof buffer - 1);
    if (got <= 0) return "";
    buffer[got] = '\0';
    return buffer;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << content;
}

std::shared_ptr<SpeciesHopfMonoid> make_monoid(const std::string& selector, int group_order,
                                               int guard) {
    SizeGuard sg;
    if (guard > 0) sg = SizeGuard{guard, guard};
    return std::make_shared<SpeciesHopfMonoid>(parse_species(selector, group_order), sg);
}

IntegerPartition parse_integer_partition(const std::string& text) {
    // accepts "(2,1)", "2,1", "()"
    std::string body = text;
    if (!body.empty() && body.front() == '(') body = body.substr(1);
    if (!body.empty() && body.back() == ')') body.pop_back();
    std::vector<int> parts;
    std::string token;
    std::istringstream in(body);
    while (std::getline(in, token, ','))
        if (!token.empty()) parts.push_back(std::stoi(token));
    return IntegerPartition(parts);
}

// class-function literal: [coeff*]ind(parts) or z(parts)*ind(parts)
std::pair<int, ClassFunction> parse_class_term(const std::string& text) {
    std::string rest = text;
    Rational coeff = 1;
    auto star = rest.find("*ind(");
    if (star != std::string::npos) {
        std::string head = rest.substr(0, star);
        if (head.rfind("z(", 0) == 0)
            coeff = Rational(
                partition_stats(parse_integer_partition(head.substr(1))).centralizer_order);
        else
            coeff = Rational::parse(head);
        rest = rest.substr(star + 1);
    }
    if (rest.rfind("ind(", 0) != 0)
        throw std::invalid_argument("cannot parse class-function term: " + text);
    IntegerPartition lambda = parse_integer_partition(rest.substr(3));
    return {lambda.weight(), coeff * ClassFunction::indicator(lambda.weight(), lambda)};
}

int run_compute(const std::shared_ptr<SpeciesHopfMonoid>& monoid, bool coinvariant, int k,
                const std::vector<std::string>& expr, const std::string& out_path,
                bool pretty_polynomials) {
    if (expr.empty()) throw std::invalid_argument("compute: empty expression");
    const std::string& op = expr.front();
    auto flavor = coinvariant ? GradedHopfAlgebra::Flavor::Coinvariant
                              : GradedHopfAlgebra::Flavor::Full;
    GradedHopfAlgebra alg(monoid, flavor);

    auto need = [&](std::size_t count) {
        if (expr.size() != count)
            throw std::invalid_argument("compute " + op + ": wrong number of arguments");
    };

    if (op == "prod") {
        need(4);
        Basis b = parse_basis(expr[1]);
        GradedElement x = GradedElement::of(parse_labeled(*monoid, expr[2]), b);
        GradedElement y = GradedElement::of(parse_labeled(*monoid, expr[3]), b);
        if (coinvariant) {
            x = alg.project(x);
            y = alg.project(y);
        }
        write_output(out_path, graded_element_to_json(*monoid, alg.product(x, y)) + "\n");
        return 0;
    }
    if (op == "coprod") {
        need(3);
        Basis b = parse_basis(expr[1]);
        GradedElement x = GradedElement::of(parse_labeled(*monoid, expr[2]), b);
        if (coinvariant) x = alg.project(x);
        write_output(out_path, graded_tensor_to_json(*monoid, alg.coproduct(x)) + "\n");
        return 0;
    }
    if (op == "convert") {
        need(4);
        Basis from = parse_basis(expr[1]);
        Basis to = parse_basis(expr[2]);
        Element x = Element::of(parse_labeled(*monoid, expr[3]), from);
        write_output(out_path, element_to_json(*monoid, monoid->convert(x, to)) + "\n");
        return 0;
    }
    if (op == "psi") {
        need(2);
        Element x = Element::of(parse_labeled(*monoid, expr[1]), Basis::Natural);
        auto pi = std::make_shared<SpeciesHopfMonoid>(trivial_labels(), monoid->guard());
        Character zeta = unit_character(monoid);
        write_output(out_path, element_to_json(*pi, terminal_psi(zeta, *pi, x)) + "\n");
        return 0;
    }
    if (op == "frobenius") {
        if (expr.size() < 2) throw std::invalid_argument("frobenius: needs at least one term");
        int degree = -1;
        ClassFunction f(0);
        for (std::size_t i = 1; i < expr.size(); ++i) {
            auto [n, term] = parse_class_term(expr[i]);
            if (degree < 0) {
                degree = n;
                f = term;
            } else if (n != degree) {
                throw std::invalid_argument("frobenius: mixed degrees");
            } else {
                f += term;
            }
        }
        write_output(out_path, sym_element_to_json(frobenius(f)) + "\n");
        return 0;
    }
    if (op == "rho-tilde") {
        need(2);
        // literal like p(2) or m(2,1)
        auto paren = expr[1].find('(');
        if (paren == std::string::npos)
            throw std::invalid_argument("rho-tilde: expected basis(parts)");
        Basis b = parse_basis(expr[1].substr(0, paren));
        SymElement s{b, {}};
        s.add_term(parse_integer_partition(expr[1].substr(paren)), 1);
        auto pi = std::make_shared<SpeciesHopfMonoid>(trivial_labels(), monoid->guard());
        GradedHopfAlgebra pi_full(pi, GradedHopfAlgebra::Flavor::Full);
        GradedElement image = pi_full.convert(lift_rho_tilde(s), b);
        write_output(out_path, graded_element_to_json(*pi, image) + "\n");
        return 0;
    }
    if (op == "expand") {
        need(4);
        Basis b = parse_basis(expr[2]);
        if (expr[1] == "ncsym") {
            LabeledSetPartition x = parse_labeled(*monoid, expr[3]);
            WordPolynomial w = expand_ncsym(b, x.shape(), k);
            write_output(out_path,
                         (pretty_polynomials ? pretty(w) : word_polynomial_to_json(w)) + "\n");
            return 0;
        }
        if (expr[1] == "sym") {
            MonomialPolynomial m = expand_sym(b, parse_integer_partition(expr[3]), k);
            write_output(out_path,
                         (pretty_polynomials ? pretty(m) : monomial_polynomial_to_json(m)) +
                             "\n");
            return 0;
        }
        throw std::invalid_argument("expand: expected 'ncsym' or 'sym'");
    }
    if (op == "rho") {
        need(4);
        if (expr[1] != "ncsym") throw std::invalid_argument("rho: expected 'ncsym'");
        Basis b = parse_basis(expr[2]);
        LabeledSetPartition x = parse_labeled(*monoid, expr[3]);
        MonomialPolynomial m = rho(expand_ncsym(b, x.shape(), k));
        write_output(out_path,
                     (pretty_polynomials ? pretty(m) : monomial_polynomial_to_json(m)) + "\n");
        return 0;
    }
    throw std::invalid_argument("unknown compute operation: " + op);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in free commutative Hopf monoids on labeled set partitions"};
    app.require_subcommand(1);

    std::string species = "trivial";
    int group_order = 2;
    int guard = 0;
    app.add_option("--species", species,
                   "label species: trivial|cyclic|map[:N]|orbit[:N]|signed-orbit[:N]|sum:a+b");
    app.add_option("--group-order", group_order, "group order used when a selector omits :N");
    app.add_option("--guard", guard, "override the component size guard");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a named verification suite");
    verify_cmd->fallthrough();
    std::string suite;
    int verify_n = 3;
    int verify_k = 5;
    verify_cmd->add_option("suite", suite, "suite name")->required();
    verify_cmd->add_option("--n", verify_n, "component / degree bound");
    verify_cmd->add_option("--k", verify_k, "truncation alphabet size");

    // compute
    auto* compute_cmd = app.add_subcommand("compute", "evaluate one expression");
    compute_cmd->fallthrough();
    std::vector<std::string> expr;
    bool coinvariant = false;
    int alphabet = 5;
    std::string compute_out = "-";
    compute_cmd->add_option("expr", expr, "prefix expression and index literals")->required();
    compute_cmd->add_flag("--coinvariant", coinvariant, "work in the coinvariant algebra");
    compute_cmd->add_option("--k", alphabet, "truncation alphabet size for expansions");
    compute_cmd->add_option("--out", compute_out, "output file, '-' for stdout");
    std::string compute_format = "json";
    compute_cmd->add_option("--format", compute_format,
                            "json, or pretty for polynomial expansions");

    // export
    auto* export_cmd = app.add_subcommand("export", "write poset/structure/dimension files");
    export_cmd->fallthrough();
    std::string kind;
    std::string out_path = "-";
    std::string basis_name = "p";
    std::string model_name = "USL";
    int export_n = 3;
    int left_degree = 1;
    int right_degree = 1;
    int q = 2;
    bool export_coinv = false;
    export_cmd->add_option("--kind", kind, "poset-dot | structure-csv | dimensions")->required();
    export_cmd->add_option("--out", out_path, "output file, '-' for stdout");
    export_cmd->add_option("--n", export_n, "component size / degree bound");
    export_cmd->add_option("--basis", basis_name, "basis for structure tables");
    export_cmd->add_option("--left", left_degree, "left degree of the structure table");
    export_cmd->add_option("--right", right_degree, "right degree of the structure table");
    export_cmd->add_option("--model", model_name, "USL | UO | USp");
    export_cmd->add_option("--q", q, "field size");
    export_cmd->add_flag("--coinvariant", export_coinv, "use the coinvariant algebra");
    std::string export_format;
    export_cmd->add_option("--format", export_format,
                           "json|csv|dot; must agree with the kind when given");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify_cmd->parsed()) {
            Report report =
                verify::run_suite(suite, species, verify_n, verify_k, self_path());
            std::cout << report_to_text(report);
            return report.ok() ? 0 : 1;
        }
        if (compute_cmd->parsed()) {
            if (compute_format != "json" && compute_format != "pretty")
                throw std::invalid_argument("unknown format: " + compute_format);
            return run_compute(make_monoid(species, group_order, guard), coinvariant,
                               alphabet, expr, compute_out, compute_format == "pretty");
        }
        if (export_cmd->parsed()) {
            const std::string natural_format =
                kind == "poset-dot" ? "dot" : kind == "structure-csv" ? "csv"
                : kind == "dimensions"                                ? "csv"
                                                                      : "";
            if (!export_format.empty() && export_format != natural_format)
                throw std::invalid_argument("format '" + export_format +
                                            "' does not match kind '" + kind + "'");
            if (kind == "poset-dot") {
                auto monoid = make_monoid(species, group_order, guard);
                auto cp = monoid->component_poset(GroundSet::interval(export_n));
                write_output(out_path, poset_to_dot(*monoid, *cp));
                return 0;
            }
            if (kind == "structure-csv") {
                auto monoid = make_monoid(species, group_order, guard);
                GradedHopfAlgebra alg(monoid, export_coinv
                                                  ? GradedHopfAlgebra::Flavor::Coinvariant
                                                  : GradedHopfAlgebra::Flavor::Full);
                StructureTable table =
                    alg.product_table(parse_basis(basis_name), left_degree, right_degree);
                write_output(out_path, structure_table_to_csv(*monoid, table));
                return 0;
            }
            if (kind == "dimensions") {
                std::vector<DimensionRow> rows;
                ScModel model = parse_sc_model(model_name);
                for (int n = 0; n <= export_n; ++n)
                    rows.push_back({to_string(model), n, q, sc_dimension(model, n, q)});
                write_output(out_path, dimensions_to_csv(rows));
                return 0;
            }
            throw std::invalid_argument("unknown export kind: " + kind);
        }
    } catch (const std::exception& e) {
        // structured error on stdout, human-readable copy on stderr
        std::cout << "{\n  \"error\": " << std::quoted(e.what()) << "\n}\n";
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
