#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "pcprod/coloring.hpp"
#include "pcprod/constructive.hpp"
#include "pcprod/graph.hpp"
#include "pcprod/products.hpp"
#include "pcprod/solver.hpp"

namespace pcprod::io {

using nlohmann::json;

// {"n": 4, "edges": [[0,1], ...]}; edge order defines edge indices.
json to_json(const Graph &g);
Graph graph_from_json(const json &j);

// Whitespace-separated "u v" lines; '#' starts a comment; n = max index + 1.
Graph parse_edge_list(std::string_view text);

// Graph JSON plus "product": {"kind", "n_g", "n_h", "factors": [G, H]}. A
// factor that is itself a product carries its own "product" member.
json to_json(const ProductGraph &p);
// Product metadata if the document has any (graph must match the factors).
std::optional<ProductGraph> product_from_json(const json &j);

// {"k": 3, "colors": [...]}
json to_json(const EdgeColoring &c);
EdgeColoring coloring_from_json(const json &j);

// Coloring JSON plus {"value", "method", "quantity"}; infinite value is the
// string "inf".
json to_json(const PcCertificate &cert);
// Coloring JSON plus {"scheme", "case", "claimed_palette"}.
json to_json(const ConstructionResult &r);
json to_json(const ConnectivityReport &r);
json to_json(const OddCycleDecomposition &d);

std::string to_dot(const Graph &g, const EdgeColoring *coloring = nullptr);

// Reads JSON or edge-list text, by content. Throws kIo / kParse naming the file.
json read_json_file(const std::filesystem::path &path);
Graph read_graph_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, std::string_view text);

} // namespace pcprod::io
