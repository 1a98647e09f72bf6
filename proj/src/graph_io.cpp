#include "tutte/graph_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "tutte/error.hpp"

namespace tutte {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

MultiGraph parse_graph(std::string_view text) {
  std::optional<std::size_t> vertex_count;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    const auto raw = text.substr(start, end == std::string_view::npos ? text.npos : end - start);
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    std::istringstream in{std::string(line)};
    if (!vertex_count) {
      std::string keyword;
      long long n = -1;
      std::string extra;
      if (!(in >> keyword >> n) || keyword != "vertices" || n < 0 || (in >> extra)) {
        throw ParseError("expected header 'vertices N'", line_no);
      }
      vertex_count = static_cast<std::size_t>(n);
      continue;
    }
    long long a = -1;
    long long b = -1;
    std::string extra;
    if (!(in >> a >> b) || (in >> extra) || a < 0 || b < 0) {
      throw ParseError("expected edge line 'u v'", line_no);
    }
    if (static_cast<std::size_t>(a) >= *vertex_count ||
        static_cast<std::size_t>(b) >= *vertex_count) {
      throw ParseError("edge endpoint out of range", line_no);
    }
    edges.push_back({static_cast<VertexId>(a), static_cast<VertexId>(b)});
  }
  if (!vertex_count) throw ParseError("missing 'vertices N' header", line_no);
  return MultiGraph(*vertex_count, std::move(edges));
}

MultiGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string format_graph(const MultiGraph& g) {
  std::ostringstream os;
  os << "vertices " << g.vertex_count() << '\n';
  for (const auto& e : g.edges()) os << e.a << ' ' << e.b << '\n';
  return os.str();
}

}  // namespace tutte
