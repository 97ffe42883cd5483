#pragma once

#include "latinlab/core.hpp"

#include <iosfwd>
#include <string>

#include "json.hpp"

namespace latinlab {

using Json = nlohmann::json;

// Text format: first line "n", then n lines of n whitespace-separated
// symbols in 1..n.
LatinSquare read_square_text(std::istream& in);
void write_square_text(std::ostream& out, const LatinSquare& L);
LatinSquare load_square(const std::string& path);  // .txt or .json by content

// JSON forms (all 1-based):
//   square       {"n": n, "grid": [[...], ...]}
//   position set {"cells": [[r, c], ...]}
//   rectangle    {"n": n, "k": k, "rows": [[...], ...]}  rows[c][u] = head of
//                the (c+1)-coloured arc at vertex u+1
Json square_to_json(const LatinSquare& L);
LatinSquare square_from_json(const Json& j);

Json positions_to_json(const PositionSet& S);
PositionSet positions_from_json(const Json& j, int n);

Json digraph_to_json(const ColouredDigraph& G);
ColouredDigraph digraph_from_json(const Json& j);

// Accepts a square (text or JSON) or a rectangle JSON and returns the digraph.
ColouredDigraph load_digraph(const std::string& path);

void write_json_file(const std::string& path, const Json& j);
Json read_json_file(const std::string& path);

}  // namespace latinlab
