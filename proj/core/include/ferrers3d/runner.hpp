#ifndef FERRERS3D_RUNNER_HPP
#define FERRERS3D_RUNNER_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ferrers3d/diagram.hpp"
#include "ferrers3d/groebner.hpp"
#include "ferrers3d/json_io.hpp"
#include "ferrers3d/toric.hpp"

namespace ferrers3d {

// One sampled diagram of the scan command.
struct ScanRow {
    std::size_t index = 0;
    std::size_t points = 0;
    Extents ext;
    int max_degree = 0;      // largest minimal-generator degree of the kernel
    bool squarefree = false; // lex initial ideal squarefree (normality verdict)
    std::string cm = "n/a";  // Reisner verdict of the initial complex
};

// Outcome of one front-end command.  The counterexample list is empty exactly
// when every verdict holds.  Reports are byte-stable for fixed inputs and
// seeds; wall-clock timings are rendered only on request.
struct RunReport {
    std::string command;
    std::string fingerprint;
    std::vector<std::pair<std::string, bool>> verdicts;
    std::vector<std::string> counterexamples;
    std::vector<ScanRow> table;
    std::vector<std::pair<std::string, double>> timings;
};

bool pass(const RunReport& r);
ordered_json to_json(const RunReport& r, bool with_timings = false);
std::string to_text(const RunReport& r, bool with_timings = false);

// Built-in worked examples addressable from the command line and the tests:
// minexam (16 points, cubic minimal generator), closure (its 18-point
// projection closure), five-gen (quadratic under lex but not under grevlex),
// two-point ({(1,1,1),(1,1,2)}).
Diagram example_diagram(const std::string& id);

// Number of projection-property diagrams in the 3x3x3 box, frozen from the
// independent subset enumeration exercised in the tests.
inline constexpr std::size_t projection_count_3x3x3 = 579;

// Checks that no projection-property diagram in the 3x3x3 box has a degree-3
// element in its reduced lex kernel basis, and that the enumeration count
// matches the frozen constant.  Work is sharded over the given number of
// threads; the merged report does not depend on the worker count.
RunReport verify_all3(int workers = 1, const BuchbergerOptions& opt = {});

// Replays one worked example and checks its pinned facts.
RunReport reproduce(const std::string& example_id, const BuchbergerOptions& opt = {});

// Samples random downward closed diagrams and tabulates kernel degrees,
// squarefreeness and Cohen-Macaulayness; asserts nothing.
RunReport scan(const Extents& bounds, std::size_t samples, std::uint64_t seed,
               const BuchbergerOptions& opt = {});

RunReport run_certificates(const Diagram& d, const std::vector<CertKind>& kinds,
                           const BuchbergerOptions& opt = {});

} // namespace ferrers3d

#endif
