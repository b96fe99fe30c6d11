#include "ferrers3d/runner.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <thread>

#include "ferrers3d/enumerate.hpp"
#include "ferrers3d/error.hpp"
#include "ferrers3d/rees.hpp"
#include "ferrers3d/simplicial.hpp"

namespace ferrers3d {

bool pass(const RunReport& r) {
    if (!r.counterexamples.empty())
        return false;
    for (const auto& [name, ok] : r.verdicts)
        if (!ok)
            return false;
    return true;
}

namespace {

std::string diagram_fingerprint(const Diagram& d) {
    std::uint64_t h = 1469598103934665603ull;
    for (const Point& p : d.points())
        for (int c : {p.i, p.j, p.k}) {
            h ^= static_cast<std::uint64_t>(c);
            h *= 1099511628211ull;
        }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

// Push a verdict and mirror failures into the counterexample list so that
// the "empty iff pass" invariant holds by construction.
void record(RunReport& rep, const std::string& name, bool ok, const std::string& witness = "") {
    rep.verdicts.emplace_back(name, ok);
    if (!ok)
        rep.counterexamples.push_back(witness.empty() ? name : name + ": " + witness);
}

class Stopwatch {
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();

  public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start_)
            .count();
    }
};

} // namespace

ordered_json to_json(const RunReport& r, bool with_timings) {
    ordered_json verdicts = ordered_json::array();
    for (const auto& [name, ok] : r.verdicts)
        verdicts.push_back({{"name", name}, {"pass", ok}});
    ordered_json table = ordered_json::array();
    for (const ScanRow& row : r.table)
        table.push_back({{"index", row.index},
                         {"points", row.points},
                         {"extents", {row.ext.a, row.ext.b, row.ext.c}},
                         {"max_degree", row.max_degree},
                         {"squarefree", row.squarefree},
                         {"cm", row.cm}});
    ordered_json timings = ordered_json::array();
    if (with_timings)
        for (const auto& [name, ms] : r.timings)
            timings.push_back({{"name", name}, {"ms", ms}});
    return ordered_json{{"command", r.command},
                        {"input", r.fingerprint},
                        {"pass", pass(r)},
                        {"verdicts", std::move(verdicts)},
                        {"counterexamples", r.counterexamples},
                        {"table", std::move(table)},
                        {"timings", std::move(timings)}};
}

std::string to_text(const RunReport& r, bool with_timings) {
    std::ostringstream out;
    out << "command: " << r.command << "\n";
    if (!r.fingerprint.empty())
        out << "input: " << r.fingerprint << "\n";
    for (const auto& [name, ok] : r.verdicts)
        out << (ok ? "[pass] " : "[FAIL] ") << name << "\n";
    for (const std::string& c : r.counterexamples)
        out << "counterexample: " << c << "\n";
    if (!r.table.empty()) {
        out << "index  points  extents  max_degree  squarefree  cm\n";
        for (const ScanRow& row : r.table) {
            std::ostringstream ext;
            ext << row.ext.a << "x" << row.ext.b << "x" << row.ext.c;
            out << row.index << "  " << row.points << "  " << ext.str() << "  " << row.max_degree
                << "  " << (row.squarefree ? "yes" : "no") << "  " << row.cm << "\n";
        }
    }
    if (with_timings)
        for (const auto& [name, ms] : r.timings)
            out << "time: " << name << " " << ms << " ms\n";
    out << (pass(r) ? "PASS" : "FAIL") << "\n";
    return out.str();
}

Diagram example_diagram(const std::string& id) {
    if (id == "minexam")
        return from_generators({Point{1, 2, 3}, Point{1, 3, 2}, Point{2, 1, 3}, Point{2, 3, 1},
                                Point{3, 1, 2}, Point{3, 2, 1}});
    if (id == "closure")
        return projection_closure(example_diagram("minexam"));
    if (id == "five-gen")
        return from_generators({Point{1, 3, 2}, Point{2, 1, 3}, Point{2, 3, 1}, Point{3, 1, 2},
                                Point{3, 2, 1}});
    if (id == "two-point")
        return Diagram({Point{1, 1, 1}, Point{1, 1, 2}});
    fail(errc::invalid_input, "unknown example id " + id +
                                  " (expected minexam, closure, five-gen or two-point)");
}

RunReport verify_all3(int workers, const BuchbergerOptions& opt) {
    Stopwatch watch;
    RunReport rep;
    rep.command = "verify-all3";

    std::vector<Diagram> family;
    for (Diagram& d : all_ferrers_in_box(3, 3, 3))
        if (has_projection_property(d))
            family.push_back(std::move(d));

    record(rep, "enumeration count equals frozen constant",
           family.size() == projection_count_3x3x3,
           std::to_string(family.size()) + " != " + std::to_string(projection_count_3x3x3));

    workers = std::clamp(workers, 1, 64);
    std::vector<std::vector<std::string>> found(static_cast<std::size_t>(workers));
    std::vector<std::string> errors(static_cast<std::size_t>(workers));
    auto work = [&](int w) {
        try {
            MonomialOrder lex = MonomialOrder::lex();
            for (std::size_t n = static_cast<std::size_t>(w); n < family.size();
                 n += static_cast<std::size_t>(workers)) {
                GroebnerBasis gb =
                    toric_ideal(family[n], lex, ToricPipeline::elimination, opt);
                for (const Binomial& b : gb.elements)
                    if (degree(b) >= 3)
                        found[static_cast<std::size_t>(w)].push_back(
                            "diagram #" + std::to_string(n) + " " + to_string(family[n]) +
                            " has basis element " + to_string(b));
            }
        } catch (const error& e) {
            errors[static_cast<std::size_t>(w)] = e.what();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(work, w);
        for (std::thread& t : pool)
            t.join();
    }
    for (const std::string& e : errors)
        if (!e.empty())
            fail(errc::resource_limit, e);

    std::vector<std::string> violations;
    for (const auto& shard : found)
        violations.insert(violations.end(), shard.begin(), shard.end());
    std::sort(violations.begin(), violations.end());
    record(rep, "no degree-3 element in any reduced lex basis", violations.empty(),
           violations.empty() ? "" : violations.front());
    rep.counterexamples.insert(rep.counterexamples.end(), violations.begin(), violations.end());

    rep.timings.emplace_back("total", watch.ms());
    return rep;
}

namespace {

void reproduce_minexam(RunReport& rep, const BuchbergerOptions& opt) {
    Diagram d = example_diagram("minexam");
    rep.fingerprint = diagram_fingerprint(d);
    record(rep, "16 points", d.size() == 16, std::to_string(d.size()));

    MonomialOrder lex = MonomialOrder::lex();
    GroebnerBasis gb = toric_ideal(d, lex, ToricPipeline::elimination, opt);
    UniversePtr tu = t_universe(d);
    auto tv = [&](int i, int j, int k) {
        return Monomial::var(tu, tu->id_of(Var{Var::Kind::T, 0, Point{i, j, k}}));
    };
    Monomial plus = mul(mul(tv(1, 2, 3), tv(2, 3, 1)), tv(3, 1, 2));
    Monomial minus = mul(mul(tv(1, 3, 2), tv(2, 1, 3)), tv(3, 2, 1));
    Binomial cubic = *normalize(plus, minus, lex);

    bool in_basis = std::find(gb.elements.begin(), gb.elements.end(), cubic) != gb.elements.end();
    record(rep, "cubic element in the reduced lex basis", in_basis, to_string(cubic));
    record(rep, "cubic is a minimal generator",
           in_basis && is_minimal_generator(cubic, gb, opt));
    record(rep, "koszul certificate fails", !is_quadratic(gb));
    GroebnerBasis i2 = buchberger(two_minors(d).elements, lex, opt);
    record(rep, "switch ideal differs from the kernel", !ideal_equal(i2, gb));
}

void reproduce_closure(RunReport& rep, const BuchbergerOptions& opt) {
    Diagram d = example_diagram("closure");
    rep.fingerprint = diagram_fingerprint(d);
    record(rep, "18 points", d.size() == 18, std::to_string(d.size()));
    record(rep, "projection property", has_projection_property(d));

    for (const Certificate& cert :
         certificates(d, {CertKind::koszul, CertKind::normal, CertKind::prime_instance,
                          CertKind::fiber_dim},
                      opt))
        record(rep, to_string(cert.kind) + " certificate", cert.verdict, cert.witness);

    MonomialOrder lex = MonomialOrder::lex();
    GroebnerBasis gb = toric_ideal(d, lex, ToricPipeline::elimination, opt);
    SimplicialComplex delta = stanley_reisner(initial_ideal(gb));
    record(rep, "complex dimension 6", delta.dim() == 6, std::to_string(delta.dim()));
    record(rep, "complex pure", delta.pure());
    VDCertificate vd = is_vertex_decomposable(delta);
    record(rep, "vertex decomposable", vd.decomposable, vd.failure_witness);

    ReesPresentation rees = rees_via_exchange(d, lex, opt);
    bool quadratic = true;
    for (const Binomial& b : rees.basis.elements)
        if (degree(b) > 2)
            quadratic = false;
    record(rep, "exchange basis quadratic", quadratic);
    GroebnerBasis oracle{rees.basis.order, rees_oracle(d, lex, opt), true};
    record(rep, "exchange equals elimination oracle", ideal_equal(rees.basis, oracle));
}

void reproduce_five_gen(RunReport& rep, const BuchbergerOptions& opt) {
    Diagram d = example_diagram("five-gen");
    rep.fingerprint = diagram_fingerprint(d);
    record(rep, "projection property fails", !has_projection_property(d));

    GroebnerBasis lex_gb =
        toric_ideal(d, MonomialOrder::lex(), ToricPipeline::elimination, opt);
    record(rep, "lex basis quadratic", is_quadratic(lex_gb));

    GroebnerBasis grevlex_gb =
        toric_ideal(d, MonomialOrder::grevlex(), ToricPipeline::elimination, opt);
    // With T[1,1,1] as the greatest variable the non-squarefree monomial of
    // such an element sits on the trail side, so test both sides.
    bool witness = false;
    std::string shape;
    for (const Binomial& b : grevlex_gb.elements)
        if (degree(b) == 3 && (!b.lead.squarefree() || !b.trail.squarefree())) {
            witness = true;
            shape = to_string(b);
            break;
        }
    record(rep, "grevlex basis has a degree-3 non-squarefree element", witness,
           witness ? shape : "none found");
}

} // namespace

RunReport reproduce(const std::string& example_id, const BuchbergerOptions& opt) {
    Stopwatch watch;
    RunReport rep;
    rep.command = "reproduce " + example_id;
    if (example_id == "minexam")
        reproduce_minexam(rep, opt);
    else if (example_id == "closure")
        reproduce_closure(rep, opt);
    else if (example_id == "five-gen")
        reproduce_five_gen(rep, opt);
    else
        fail(errc::invalid_input, "unknown example id " + example_id +
                                      " (expected minexam, closure or five-gen)");
    rep.timings.emplace_back("total", watch.ms());
    return rep;
}

RunReport scan(const Extents& bounds, std::size_t samples, std::uint64_t seed,
               const BuchbergerOptions& opt) {
    Stopwatch watch;
    RunReport rep;
    rep.command = "scan";
    rep.fingerprint = std::to_string(bounds.a) + "x" + std::to_string(bounds.b) + "x" +
                      std::to_string(bounds.c) + " seed " + std::to_string(seed);

    RandomSource rng(seed);
    MonomialOrder lex = MonomialOrder::lex();
    for (std::size_t n = 0; n < samples; ++n) {
        Diagram d = random_ferrers(bounds.a, bounds.b, bounds.c, rng);
        ScanRow row;
        row.index = n;
        row.points = d.size();
        row.ext = extents(d);
        GroebnerBasis gb = toric_ideal(d, lex, ToricPipeline::elimination, opt);
        row.max_degree = max_minimal_generator_degree(gb, opt);
        row.squarefree = is_squarefree(gb);
        if (row.squarefree && !gb.elements.empty()) {
            try {
                CMReport cm = reisner_cm(stanley_reisner(initial_ideal(gb)));
                row.cm = cm.cm ? "true" : "false";
            } catch (const error& e) {
                if (e.code() != errc::resource_limit)
                    throw;
                row.cm = "capped";
            }
        } else if (gb.elements.empty()) {
            row.cm = "true"; // the full simplex
        }
        rep.table.push_back(std::move(row));
    }
    rep.timings.emplace_back("total", watch.ms());
    return rep;
}

RunReport run_certificates(const Diagram& d, const std::vector<CertKind>& kinds,
                           const BuchbergerOptions& opt) {
    Stopwatch watch;
    RunReport rep;
    rep.command = "certify";
    rep.fingerprint = diagram_fingerprint(d);
    for (const Certificate& cert : certificates(d, kinds, opt)) {
        record(rep, to_string(cert.kind), cert.verdict, cert.witness);
        rep.timings.emplace_back(to_string(cert.kind), cert.elapsed_ms);
    }
    rep.timings.emplace_back("total", watch.ms());
    return rep;
}

} // namespace ferrers3d
