#pragma once

#include <string>

#include "pcprod/coloring.hpp"
#include "pcprod/products.hpp"
#include "pcprod/solver.hpp"

namespace pcprod {

// An explicit product coloring and the palette size its construction
// guarantees. The guarantee is only trusted after is_proper_connected agrees.
struct ConstructionResult {
  EdgeColoring coloring;
  int claimed_palette = 0;
  std::string scheme;
  std::string case_tag;
};

// G box H from a proper-path coloring of H: H-fibers copy c_h, every G-fiber
// edge gets the fresh color k+1. Pass the factor with the smaller pc as H.
ConstructionResult color_cartesian(const ProductGraph &p, const EdgeColoring &c_h,
                                   const SearchOptions &check = {});

// The same coloring on the Cartesian spanning subgraph of G strong H; the
// diagonal edges all get color 1.
ConstructionResult color_strong(const ProductGraph &p, const EdgeColoring &c_h,
                                const SearchOptions &check = {});

// Case dispatch on the palette sizes of c_g and c_h, which stand in for
// pc(G) and pc(H); pass optimal colorings.
//   both 1             -> "iv"    1 color
//   pc(G) = 1          -> "ii"    2 colors
//   pc(H) = 1          -> "iii"   2 colors
//   pc(G) > pc(H)      -> "i-gt"  pc(H) colors
//   pc(G) < pc(H)      -> "i-lt"  pc(G)+1 colors
//   pc(G) = pc(H)      -> "i-eq"  pc(G) colors
ConstructionResult color_lexicographic(const ProductGraph &p, const EdgeColoring &c_g,
                                       const EdgeColoring &c_h, const SearchOptions &check = {});

// G x H with G nonbipartite: each edge gets the pair (color of its G-edge under
// the decomposition coloring, color of its H-edge under c_h), flattened to
// 1..k_H * (o(G) + b(G)).
ConstructionResult color_direct(const ProductGraph &p, const EdgeColoring &c_h,
                                const DecompositionColoring &g_parts,
                                const SearchOptions &check = {});

// G x K2: each B-component's two lifts (the double-cover split) reuse its
// optimal coloring; edges over O^G take their odd-even colors. o(G) + b(G)
// colors.
ConstructionResult color_direct_k2(const ProductGraph &p, const DecompositionColoring &g_parts);

} // namespace pcprod
