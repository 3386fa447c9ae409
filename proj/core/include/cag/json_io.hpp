#pragma once

#include <string>
#include <string_view>

#include "cag/box_rep.hpp"
#include "cag/model.hpp"
#include "cag/oracle.hpp"

namespace cag::json {

// Documents are exchanged as strings so the public headers stay free of the
// JSON library. Rationals travel as reduced "p/q" strings.

/// {"vertices":[...], "arcs":[{"l":"p/q","r":"p/q"},...]}
ArcFamily parse_family(std::string_view text);
std::string dump_family(const ArcFamily& f);

/// {"vertices":[...], "edges":[["a","b"],...]}
Graph parse_graph(std::string_view text);
std::string dump_graph(const Graph& g);

/// {"dims":k, "vertices":[...], "intervals":[[["lo","hi"],...],...]}
BoxRep parse_box_rep(std::string_view text);
std::string dump_box_rep(const BoxRep& rep);

/// {"ok":bool, "missing_edges":[["a","b"],...], "extra_edges":[...]}
std::string dump_verify_report(const VerifyReport& report, const Graph& g);

}  // namespace cag::json
