// Command line front end: diagram inspection, Groebner and toric runs,
// complex and Rees certificates, the exhaustive 3x3x3 verification, the
// worked-example reproductions and the random scan.
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ferrers3d/enumerate.hpp"
#include "ferrers3d/error.hpp"
#include "ferrers3d/json_io.hpp"
#include "ferrers3d/rees.hpp"
#include "ferrers3d/runner.hpp"
#include "ferrers3d/simplicial.hpp"

using namespace ferrers3d;

namespace {

// 0 pass, 1 mathematical failure, 2 input error, 3 resource cap.
int exit_code(const error& e) {
    switch (e.code()) {
    case errc::resource_limit:
        return 3;
    default:
        return 2;
    }
}

struct Common {
    std::string input = "-";
    std::string order = "lex";
    int degree_cap = 12;
    bool json = false;
    bool timings = false;
};

MonomialOrder order_of(const Common& c) {
    if (c.order == "lex")
        return MonomialOrder::lex();
    if (c.order == "grevlex")
        return MonomialOrder::grevlex();
    fail(errc::invalid_input, "unknown order " + c.order);
}

BuchbergerOptions options_of(const Common& c) {
    BuchbergerOptions opt;
    opt.limits.degree_cap = c.degree_cap;
    return opt;
}

void add_common(CLI::App* cmd, Common& c, bool with_input = true) {
    if (with_input)
        cmd->add_option("input", c.input, "diagram JSON file, - for stdin");
    cmd->add_option("--order", c.order, "monomial order on the T variables")
        ->check(CLI::IsMember({"lex", "grevlex"}));
    cmd->add_option("--degree-cap", c.degree_cap, "largest admissible intermediate degree");
    auto* j = cmd->add_flag("--json", c.json, "JSON output");
    cmd->add_flag("--text", "aligned text output (the default)")->excludes(j);
    cmd->add_flag("--timings", c.timings, "include wall-clock timings in the report");
}

void emit(const RunReport& r, const Common& c) {
    if (c.json)
        std::cout << to_json(r, c.timings).dump(2) << "\n";
    else
        std::cout << to_text(r, c.timings);
}

ordered_json basis_json(const GroebnerBasis& gb) {
    ordered_json elems = ordered_json::array();
    for (const Binomial& b : gb.elements)
        elems.push_back(to_string(b));
    return ordered_json{{"order", gb.order.describe()},
                        {"elements", std::move(elems)},
                        {"quadratic", is_quadratic(gb)},
                        {"squarefree", gb.elements.empty() ? true : is_squarefree(gb)}};
}

void emit_basis(const GroebnerBasis& gb, const Common& c) {
    if (c.json) {
        std::cout << basis_json(gb).dump(2) << "\n";
        return;
    }
    std::cout << "order: " << gb.order.describe() << "\n";
    for (const Binomial& b : gb.elements)
        std::cout << to_string(b) << "\n";
    std::cout << gb.elements.size() << " elements, quadratic "
              << (is_quadratic(gb) ? "yes" : "no") << "\n";
}

int default_workers() {
    if (const char* env = std::getenv("FERRERS3D_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0)
            return w;
    }
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"blowup-algebra invariants of three-dimensional Ferrers diagrams"};
    app.require_subcommand(1);

    Common c;
    int workers = default_workers();
    std::uint64_t seed = 0;
    std::size_t samples = 20;
    std::vector<int> box{3, 3, 3};
    std::string example_id;
    bool cert_all = false, cert_koszul = false, cert_normal = false, cert_prime = false,
         cert_fiber = false, cert_codim = false;

    CLI::App* check = app.add_subcommand("check", "diagram validity and basic properties");
    add_common(check, c);
    CLI::App* closure = app.add_subcommand("closure", "projection closure of the diagram");
    add_common(closure, c);
    CLI::App* i2 = app.add_subcommand("i2", "switch binomials (generalized 2-minors)");
    add_common(i2, c);
    CLI::App* toric = app.add_subcommand("toric", "reduced basis of the special fiber ideal");
    add_common(toric, c);
    CLI::App* gb = app.add_subcommand("gb", "reduced basis generated from the switches");
    add_common(gb, c);
    CLI::App* complex_cmd =
        app.add_subcommand("complex", "Stanley-Reisner complex of the initial ideal");
    add_common(complex_cmd, c);
    CLI::App* vd = app.add_subcommand("vd", "vertex decomposability certificate");
    add_common(vd, c);
    CLI::App* rees = app.add_subcommand("rees", "Rees presentation via the exchange basis");
    add_common(rees, c);

    CLI::App* certify = app.add_subcommand("certify", "ring-theoretic certificates");
    add_common(certify, c);
    certify->add_flag("--all", cert_all, "every applicable certificate");
    certify->add_flag("--koszul", cert_koszul, "quadratic lex basis");
    certify->add_flag("--normal", cert_normal, "squarefree lex initial ideal");
    certify->add_flag("--prime-instance", cert_prime, "switch ideal equals the kernel");
    certify->add_flag("--fiber-dim", cert_fiber, "Krull dimension of the toric ring");
    certify->add_flag("--codim", cert_codim, "codimension formula");

    CLI::App* verify = app.add_subcommand("verify-all3", "no cubic over the 3x3x3 family");
    add_common(verify, c, false);
    verify->add_option("--workers", workers, "worker threads");

    CLI::App* repro = app.add_subcommand("reproduce", "rerun a worked example");
    add_common(repro, c, false);
    repro->add_option("id", example_id, "minexam | closure | five-gen")->required();

    CLI::App* scan_cmd = app.add_subcommand("scan", "random-diagram survey table");
    add_common(scan_cmd, c, false);
    scan_cmd->add_option("--box", box, "sampling box extents")->expected(3);
    scan_cmd->add_option("--samples", samples, "number of diagrams");
    scan_cmd->add_option("--seed", seed, "random seed");
    scan_cmd->add_option("--workers", workers, "worker threads (accepted, scan is sequential)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        BuchbergerOptions opt = options_of(c);
        if (*check) {
            Diagram d = read_diagram(c.input);
            Extents e = extents(d);
            bool ferrers = is_ferrers(d);
            bool projection = ferrers && has_projection_property(d);
            if (c.json) {
                std::cout << ordered_json{{"points", d.size()},
                                          {"extents", {e.a, e.b, e.c}},
                                          {"ferrers", ferrers},
                                          {"projection", projection}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "points: " << d.size() << "\n"
                          << "extents: " << e.a << "x" << e.b << "x" << e.c << "\n"
                          << "downward closed: " << (ferrers ? "yes" : "no") << "\n"
                          << "projection property: " << (projection ? "yes" : "no") << "\n";
            }
            return ferrers ? 0 : 1;
        }
        if (*closure) {
            Diagram d = read_diagram(c.input);
            std::cout << to_json(projection_closure(d)).dump(2) << "\n";
            return 0;
        }
        if (*i2) {
            Diagram d = read_diagram(c.input);
            TwoMinors m = two_minors(d);
            if (c.json) {
                ordered_json elems = ordered_json::array();
                for (const Binomial& b : m.elements)
                    elems.push_back(to_string(b));
                std::cout << ordered_json{{"diagram", to_json(d)}, {"elements", elems}}.dump(2)
                          << "\n";
            } else {
                for (const Binomial& b : m.elements)
                    std::cout << to_string(b) << "\n";
                std::cout << m.elements.size() << " switches\n";
            }
            return 0;
        }
        if (*toric) {
            Diagram d = read_diagram(c.input);
            emit_basis(toric_ideal(d, order_of(c), ToricPipeline::elimination, opt), c);
            return 0;
        }
        if (*gb) {
            Diagram d = read_diagram(c.input);
            emit_basis(buchberger(two_minors(d).elements, order_of(c), opt), c);
            return 0;
        }
        if (*complex_cmd || *vd) {
            Diagram d = read_diagram(c.input);
            GroebnerBasis basis = toric_ideal(d, order_of(c), ToricPipeline::elimination, opt);
            if (basis.elements.empty())
                fail(errc::precondition, "the kernel is zero: the complex is a full simplex "
                                         "over the T variables");
            SimplicialComplex delta = stanley_reisner(radical(initial_ideal(basis)));
            if (*complex_cmd) {
                if (c.json) {
                    ordered_json facets = ordered_json::array();
                    for (const VertexSet& f : delta.facets()) {
                        ordered_json one = ordered_json::array();
                        for (int v : f.members())
                            one.push_back(delta.labels()[static_cast<std::size_t>(v)]);
                        facets.push_back(std::move(one));
                    }
                    std::cout << ordered_json{{"dim", delta.dim()},
                                              {"pure", delta.pure()},
                                              {"facets", std::move(facets)}}
                                     .dump(2)
                              << "\n";
                } else {
                    std::cout << to_text(delta) << "dim " << delta.dim() << ", pure "
                              << (delta.pure() ? "yes" : "no") << "\n";
                }
                return 0;
            }
            VDCertificate cert = is_vertex_decomposable(delta);
            if (c.json) {
                ordered_json shed = ordered_json::array();
                for (const std::string& v : cert.shedding_sequence)
                    shed.push_back(v);
                std::cout << ordered_json{{"decomposable", cert.decomposable},
                                          {"shedding", std::move(shed)},
                                          {"witness", cert.failure_witness}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "decomposable: " << (cert.decomposable ? "yes" : "no") << "\n";
                for (const std::string& v : cert.shedding_sequence)
                    std::cout << "shed " << v << "\n";
                if (!cert.decomposable)
                    std::cout << "witness: " << cert.failure_witness << "\n";
            }
            return cert.decomposable ? 0 : 1;
        }
        if (*rees) {
            Diagram d = read_diagram(c.input);
            ReesPresentation pres = rees_via_exchange(d, order_of(c), opt);
            if (c.json)
                std::cout << to_json(pres).dump(2) << "\n";
            else {
                for (const Binomial& b : pres.basis.elements)
                    std::cout << to_string(b) << "\n";
                std::cout << pres.toric_part.size() << " toric + " << pres.linear_part.size()
                          << " linear elements\n";
            }
            return 0;
        }
        if (*certify) {
            Diagram d = read_diagram(c.input);
            std::vector<CertKind> kinds;
            if (cert_koszul)
                kinds.push_back(CertKind::koszul);
            if (cert_normal)
                kinds.push_back(CertKind::normal);
            if (cert_prime)
                kinds.push_back(CertKind::prime_instance);
            if (cert_fiber)
                kinds.push_back(CertKind::fiber_dim);
            if (cert_codim)
                kinds.push_back(CertKind::codim);
            if (cert_all || kinds.empty())
                kinds = applicable_kinds(d);
            RunReport rep = run_certificates(d, kinds, opt);
            emit(rep, c);
            return pass(rep) ? 0 : 1;
        }
        if (*verify) {
            RunReport rep = verify_all3(workers, opt);
            emit(rep, c);
            return pass(rep) ? 0 : 1;
        }
        if (*repro) {
            RunReport rep = reproduce(example_id, opt);
            emit(rep, c);
            return pass(rep) ? 0 : 1;
        }
        if (*scan_cmd) {
            RunReport rep = scan(Extents{box[0], box[1], box[2]}, samples, seed, opt);
            emit(rep, c);
            return pass(rep) ? 0 : 1;
        }
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
