#include "latinlab/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace latinlab {

LatinSquare read_square_text(std::istream& in) {
  int n = 0;
  if (!(in >> n) || n <= 0) throw std::invalid_argument("expected order n on the first line");
  Grid grid(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      int s;
      if (!(in >> s))
        throw std::invalid_argument("expected " + std::to_string(n * n) + " symbols");
      grid(r, c) = s - 1;
    }
  return make_latin_square(std::move(grid));
}

void write_square_text(std::ostream& out, const LatinSquare& L) {
  out << L.n << "\n";
  for (int r = 0; r < L.n; ++r) {
    for (int c = 0; c < L.n; ++c) out << (c ? " " : "") << L.at(r, c) + 1;
    out << "\n";
  }
}

Json square_to_json(const LatinSquare& L) {
  Json rows = Json::array();
  for (int r = 0; r < L.n; ++r) {
    Json row = Json::array();
    for (int c = 0; c < L.n; ++c) row.push_back(L.at(r, c) + 1);
    rows.push_back(std::move(row));
  }
  return Json{{"n", L.n}, {"grid", std::move(rows)}};
}

LatinSquare square_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  if (n <= 0) throw std::invalid_argument("order must be positive");
  Grid grid(n, n);
  const auto& rows = j.at("grid");
  if (static_cast<int>(rows.size()) != n) throw std::invalid_argument("grid row count mismatch");
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(rows[r].size()) != n)
      throw std::invalid_argument("grid column count mismatch");
    for (int c = 0; c < n; ++c) grid(r, c) = rows[r][c].get<int>() - 1;
  }
  return make_latin_square(std::move(grid));
}

Json positions_to_json(const PositionSet& S) {
  Json cells = Json::array();
  for (auto [r, c] : S.cells) cells.push_back(Json::array({r + 1, c + 1}));
  return Json{{"cells", std::move(cells)}};
}

PositionSet positions_from_json(const Json& j, int n) {
  PositionSet S;
  S.n = n;
  for (const auto& cell : j.at("cells"))
    S.cells.emplace_back(cell.at(0).get<int>() - 1, cell.at(1).get<int>() - 1);
  return S;
}

Json digraph_to_json(const ColouredDigraph& G) {
  Json colours = Json::array();
  Json rows = Json::array();
  for (int c : G.colours) {
    colours.push_back(c + 1);
    Json row = Json::array();
    for (int u = 0; u < G.n; ++u) row.push_back(G.head_of(c, u) + 1);
    rows.push_back(std::move(row));
  }
  return Json{{"n", G.n}, {"k", G.colours.size()}, {"colours", std::move(colours)},
              {"rows", std::move(rows)}};
}

ColouredDigraph digraph_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  const auto& rows = j.at("rows");
  std::vector<int> colours;
  if (j.contains("colours")) {
    for (const auto& c : j.at("colours")) colours.push_back(c.get<int>() - 1);
  } else {
    for (std::size_t i = 0; i < rows.size(); ++i) colours.push_back(static_cast<int>(i));
  }
  std::vector<std::vector<int>> heads;
  for (const auto& row : rows) {
    std::vector<int> perm;
    for (const auto& v : row) perm.push_back(v.get<int>() - 1);
    heads.push_back(std::move(perm));
  }
  return make_coloured_digraph(n, colours, heads);
}

LatinSquare load_square(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  char first = 0;
  in >> std::ws;
  first = static_cast<char>(in.peek());
  if (first == '{') {
    Json j;
    in >> j;
    return square_from_json(j);
  }
  return read_square_text(in);
}

ColouredDigraph load_digraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  in >> std::ws;
  if (in.peek() == '{') {
    Json j;
    in >> j;
    if (j.contains("rows")) return digraph_from_json(j);
    return latin_to_digraph(square_from_json(j));
  }
  return latin_to_digraph(read_square_text(in));
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << j.dump(2) << "\n";
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

}  // namespace latinlab
