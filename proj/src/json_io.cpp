#include "treelab/json_io.hpp"

#include <cstdio>

namespace treelab {

json tree_to_json(const Tree& t) {
    json j;
    j["n"] = t.n;
    j["edges"] = json::array();
    for (auto& [a, b] : t.edges) j["edges"].push_back(json::array({a, b}));
    return j;
}

Tree tree_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("tree_from_json: need {\"n\", \"edges\"}");
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("tree_from_json: edge must be a pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Tree(n, std::move(edges));
}

json poly_to_json(const IntPoly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
    return arr;
}

json coeffs_to_json(const CoeffVector& c) {
    json arr = json::array();
    for (const auto& v : c.c) arr.push_back(v.get_str());
    return arr;
}

std::string code_to_hex(const std::string& code) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(2 * code.size());
    for (unsigned char ch : code) {
        out += digits[ch >> 4];
        out += digits[ch & 0xf];
    }
    return out;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12f", v);
    return buf;
}

}  // namespace treelab
