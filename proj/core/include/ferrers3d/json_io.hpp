#ifndef FERRERS3D_JSON_IO_HPP
#define FERRERS3D_JSON_IO_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "ferrers3d/diagram.hpp"
#include "ferrers3d/rees.hpp"
#include "ferrers3d/toric.hpp"

namespace ferrers3d {

// All writers emit ordered_json so key order, and with it the whole byte
// stream, is stable across runs.
using ordered_json = nlohmann::ordered_json;

// A diagram document carries exactly one of the keys "points" (the literal
// point set) or "generators" (closed downward into a box closure), each an
// array of [i, j, k] triples of positive integers.
Diagram diagram_from_json(const ordered_json& doc);

// Reads and parses a diagram document; "-" reads standard input.
Diagram read_diagram(const std::string& path);

ordered_json to_json(const Diagram& d);

ordered_json to_json(const Certificate& cert, const Diagram& d, bool with_timings = false);

ordered_json to_json(const ReesPresentation& rees);

} // namespace ferrers3d

#endif
