#ifndef TREELAB_JSON_IO_HPP
#define TREELAB_JSON_IO_HPP

#include <json.hpp>

#include "treelab/laplacian.hpp"
#include "treelab/poly.hpp"
#include "treelab/tree.hpp"

namespace treelab {

using json = nlohmann::ordered_json;

// Tree JSON: {"n": <int>, "edges": [[a,b],...]}
json tree_to_json(const Tree& t);
Tree tree_from_json(const json& j);

// IntPoly / CoeffVector as JSON arrays of decimal strings, low degree first.
json poly_to_json(const IntPoly& p);
json coeffs_to_json(const CoeffVector& c);

// Canonical code as hex string.
std::string code_to_hex(const std::string& code);

// Fixed 12-decimal formatting used everywhere floats cross the boundary.
std::string format_double(double v);

}  // namespace treelab

#endif
