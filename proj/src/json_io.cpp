#include "arith/json_io.hpp"

#include <algorithm>
#include <fstream>

#include "arith/errors.hpp"

namespace arith {

namespace {

Int int_from_json(const Json& j, const char* what) {
    if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::invalid_argument&) {
        }
    }
    throw InvalidInput(std::string("expected an integer for ") + what);
}

Rat rat_from_json(const Json& j, const char* what) {
    if (j.is_number_integer()) return Rat(Int(std::to_string(j.get<long long>())));
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    throw InvalidInput(std::string("expected a rational for ") + what);
}

Json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(v.get_str());
}

}  // namespace

Json to_json(const Multigraph& g) {
    Json j;
    j["vertices"] = g.vertices();
    Json edges = Json::array();
    for (const auto& e : g.edge_list()) edges.push_back(Json::array({e.u, e.v, e.multiplicity}));
    j["edges"] = std::move(edges);
    return j;
}

Multigraph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw InvalidInput("graph JSON needs 'vertices' and 'edges'");
    std::vector<VertexId> vertices;
    for (const auto& v : j.at("vertices")) {
        if (!v.is_string()) throw InvalidInput("vertex labels must be strings");
        vertices.push_back(v.get<std::string>());
    }
    std::vector<EdgeSpec> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() < 2 || e.size() > 3)
            throw InvalidInput("edges must be [u, v] or [u, v, multiplicity]");
        EdgeSpec spec;
        spec.u = e.at(0).get<std::string>();
        spec.v = e.at(1).get<std::string>();
        spec.multiplicity = e.size() == 3 ? e.at(2).get<int>() : 1;
        edges.push_back(std::move(spec));
    }
    return Multigraph::build(vertices, edges);
}

Json to_json(const Multigraph& g, const RationalStructure& s) {
    Json j;
    Json d = Json::array();
    for (Eigen::Index i = 0; i < s.d.size(); ++i) d.push_back(s.d(i).str());
    Json r = Json::array();
    for (Eigen::Index i = 0; i < s.r.size(); ++i) r.push_back(int_to_json(s.r(i)));
    j["d"] = std::move(d);
    j["r"] = std::move(r);
    if (!s.relaxed.empty()) j["relaxed"] = s.relaxed;
    return j;
}

Json to_json(const Multigraph& g, const ArithmeticalStructure& s) {
    return to_json(g, as_rational(s));
}

RationalStructure structure_from_json(const Multigraph& g, const Json& j) {
    if (!j.is_object() || !j.contains("d") || !j.contains("r"))
        throw InvalidInput("structure JSON needs 'd' and 'r'");
    const Json& dj = j.at("d");
    const Json& rj = j.at("r");
    if (!dj.is_array() || !rj.is_array() || dj.size() != rj.size() ||
        static_cast<int>(dj.size()) != g.size())
        throw InvalidInput("structure vectors must match the graph's vertex count");
    RationalStructure s;
    s.d.resize(g.size());
    s.r.resize(g.size());
    for (int i = 0; i < g.size(); ++i) {
        s.d(i) = rat_from_json(dj.at(static_cast<size_t>(i)), "d");
        s.r(i) = int_from_json(rj.at(static_cast<size_t>(i)), "r");
    }
    if (j.contains("relaxed")) {
        for (const auto& v : j.at("relaxed")) {
            VertexId label = v.get<std::string>();
            g.index_of(label);
            s.relaxed.push_back(std::move(label));
        }
        std::sort(s.relaxed.begin(), s.relaxed.end());
    }
    return s;
}

Json to_json(const BlockDecomposition& b) {
    Json j;
    j["blocks"] = b.blocks;
    j["cut_vertices"] = b.cut_vertices;
    return j;
}

Json to_json(const Multigraph& g, const VerifyReport& r) {
    Json j;
    j["valid"] = r.valid();
    Json failed = Json::array();
    for (auto c : r.failed) failed.push_back(condition_name(c));
    j["failed_conditions"] = std::move(failed);
    j["details"] = r.details;
    return j;
}

Json to_json(const GroupInvariants& inv) {
    Json j;
    Json factors = Json::array();
    for (const Int& f : inv.factors) factors.push_back(int_to_json(f));
    j["invariant_factors"] = std::move(factors);
    j["order"] = group_order(inv).get_str();
    return j;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

}  // namespace arith
