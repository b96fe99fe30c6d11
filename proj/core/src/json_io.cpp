#include "ferrers3d/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "ferrers3d/error.hpp"

namespace ferrers3d {

namespace {

std::vector<Point> parse_points(const ordered_json& arr, const std::string& key) {
    if (!arr.is_array() || arr.empty())
        fail(errc::parse, "\"" + key + "\" must be a nonempty array of [i,j,k] triples");
    std::vector<Point> pts;
    for (const auto& entry : arr) {
        if (!entry.is_array() || entry.size() != 3)
            fail(errc::parse, "diagram point must be a [i,j,k] triple");
        for (const auto& coord : entry)
            if (!coord.is_number_integer() || coord.get<long long>() < 1)
                fail(errc::parse, "diagram coordinates must be positive integers");
        pts.push_back(Point{entry[0].get<int>(), entry[1].get<int>(), entry[2].get<int>()});
    }
    return pts;
}

} // namespace

Diagram diagram_from_json(const ordered_json& doc) {
    if (!doc.is_object())
        fail(errc::parse, "diagram document must be a JSON object");
    bool has_points = doc.contains("points");
    bool has_gens = doc.contains("generators");
    if (has_points == has_gens)
        fail(errc::parse, "diagram document needs exactly one of \"points\" or \"generators\"");
    if (has_points)
        return Diagram(parse_points(doc["points"], "points"));
    return from_generators(parse_points(doc["generators"], "generators"));
}

Diagram read_diagram(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in)
            fail(errc::invalid_input, "cannot open " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(errc::parse, std::string("invalid JSON: ") + e.what());
    }
    return diagram_from_json(doc);
}

ordered_json to_json(const Diagram& d) {
    ordered_json pts = ordered_json::array();
    for (const Point& p : d.points())
        pts.push_back({p.i, p.j, p.k});
    return ordered_json{{"points", std::move(pts)}};
}

ordered_json to_json(const Certificate& cert, const Diagram& d, bool with_timings) {
    return ordered_json{{"diagram", to_json(d)},
                        {"kind", to_string(cert.kind)},
                        {"verdict", cert.verdict},
                        {"witness", cert.witness},
                        {"timings", with_timings ? cert.elapsed_ms : 0.0}};
}

ordered_json to_json(const ReesPresentation& rees) {
    auto render = [](const std::vector<Binomial>& v) {
        ordered_json arr = ordered_json::array();
        for (const Binomial& b : v)
            arr.push_back(to_string(b));
        return arr;
    };
    bool quadratic = true;
    for (const Binomial& b : rees.basis.elements)
        if (degree(b) > 2)
            quadratic = false;
    return ordered_json{{"diagram", to_json(rees.diagram)},
                        {"toric_part", render(rees.toric_part)},
                        {"linear_part", render(rees.linear_part)},
                        {"order", rees.basis.order.describe()},
                        {"quadratic", quadratic}};
}

} // namespace ferrers3d
