#include "tutte/cli.hpp"

#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tutte/benzenoid.hpp"
#include "tutte/error.hpp"
#include "tutte/fanlike.hpp"
#include "tutte/graph_io.hpp"
#include "tutte/tutte.hpp"
#include "tutte/verify.hpp"

namespace tutte {

namespace {

/// Raised for requests that are well formed but cannot be carried out.
class Infeasible : public Error {
 public:
  using Error::Error;
};

enum class NamedFamily { linear, pyrene, triphenylene, fan, wheel };

NamedFamily parse_named_family(const std::string& name) {
  if (name == "fan") return NamedFamily::fan;
  if (name == "wheel") return NamedFamily::wheel;
  switch (parse_chain(name)) {
    case Chain::linear: return NamedFamily::linear;
    case Chain::pyrene: return NamedFamily::pyrene;
    case Chain::triphenylene: return NamedFamily::triphenylene;
  }
  throw Error("unknown family '" + name + "'");
}

std::optional<Chain> as_chain(NamedFamily f) {
  switch (f) {
    case NamedFamily::linear: return Chain::linear;
    case NamedFamily::pyrene: return Chain::pyrene;
    case NamedFamily::triphenylene: return Chain::triphenylene;
    default: return std::nullopt;
  }
}

const MarkedGraph& k2_base() {
  static const MarkedGraph g(MultiGraph(2, {{0, 1}}), 0, 1);
  return g;
}

Family fan_shape(NamedFamily f) { return f == NamedFamily::fan ? Family::F : Family::W; }

MultiGraph build_named(NamedFamily f, unsigned n) {
  if (auto chain = as_chain(f)) return build_chain(*chain, n);
  return build_family(k2_base(), fan_shape(f), n);
}

BivarPoly closed_named(NamedFamily f, unsigned n) {
  if (auto chain = as_chain(f)) return closed_chain(*chain, n);
  return closed_family(k2_base(), fan_shape(f), n);
}

std::size_t subset_limit() {
  const char* value = std::getenv(kSubsetLimitEnv);
  if (value == nullptr || *value == '\0') return kDefaultSubsetEdgeLimit;
  char* end = nullptr;
  const unsigned long limit = std::strtoul(value, &end, 10);
  if (*end != '\0') throw Error(std::string(kSubsetLimitEnv) + " must be an integer");
  return limit;
}

BivarPoly run_subset(const MultiGraph& g) {
  const std::size_t limit = subset_limit();
  if (g.edge_count() > limit) {
    throw Infeasible("subset expansion limited to " + std::to_string(limit) + " edges, graph has " +
                     std::to_string(g.edge_count()) + " (set " + kSubsetLimitEnv + ")");
  }
  return tutte_subset(g, limit);
}

MarkedGraph marked_base(const std::string& file, const std::vector<unsigned>& marks) {
  if (marks.size() != 2 && marks.size() != 3) throw Error("--marks takes v,u or v,u,w");
  std::optional<VertexId> w;
  if (marks.size() == 3) w = marks[2];
  return MarkedGraph(read_graph_file(file), marks[0], marks[1], w);
}

struct ComputeArgs {
  std::string family;
  std::string graph;
  std::string base;
  std::vector<unsigned> marks;
  std::string shape;
  unsigned n = 0;
  std::string method = "auto";
  std::string output = "text";
};

int compute(const ComputeArgs& a, std::ostream& out) {
  const int sources = !a.family.empty() + !a.graph.empty() + !a.base.empty();
  if (sources != 1) throw Error("give exactly one of --family, --graph, --base");

  BivarPoly result;
  if (!a.graph.empty()) {
    const MultiGraph g = read_graph_file(a.graph);
    if (a.method == "closed") throw Infeasible("no closed form for an arbitrary graph");
    result = a.method == "subset" ? run_subset(g) : tutte_delcon(g, {.parallel = true});
  } else if (!a.family.empty()) {
    const NamedFamily f = parse_named_family(a.family);
    if (a.method == "auto" || a.method == "closed") {
      result = closed_named(f, a.n);
    } else {
      const MultiGraph g = build_named(f, a.n);
      result = a.method == "subset" ? run_subset(g) : tutte_delcon(g, {.parallel = true});
    }
  } else {
    if (a.shape.empty()) throw Error("--base needs --shape");
    const MarkedGraph g = marked_base(a.base, a.marks);
    const Family shape = parse_family(a.shape);
    if (a.method == "auto" || a.method == "closed") {
      result = closed_family(g, shape, a.n);
    } else {
      const MultiGraph built = build_family(g, shape, a.n);
      result = a.method == "subset" ? run_subset(built) : tutte_delcon(built, {.parallel = true});
    }
  }

  if (a.output == "json") {
    out << result.to_json().dump() << '\n';
  } else {
    out << result.to_text() << '\n';
  }
  return kExitOk;
}

int tau(const std::string& family, unsigned n, const std::string& method, std::ostream& out) {
  const NamedFamily f = parse_named_family(family);
  BigInt value;
  if (method == "recurrence") {
    auto chain = as_chain(f);
    if (!chain) throw Infeasible("the recurrence is only available for benzenoid chains");
    value = tau_chain(*chain, n);
  } else if (method == "eval") {
    value = closed_named(f, n).eval(1, 1);
  } else {
    if (n == 0) throw BadN("n must be >= 1");
    // Each unit adds at most 16 vertices, so this bound is checked before
    // building anything.
    if (static_cast<std::size_t>(n) * 16 + 2 > kKirchhoffVertexLimit) {
      throw Infeasible("chain too large to build for the Kirchhoff count (limit " +
                       std::to_string(kKirchhoffVertexLimit) + " vertices)");
    }
    value = count_spanning_trees_kirchhoff(build_named(f, n));
  }
  out << value.get_str() << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Tutte polynomials of multigraphs and benzenoid chains", "tutte"};
  app.require_subcommand(1);

  ComputeArgs ca;
  auto* compute_cmd = app.add_subcommand("compute", "Print a Tutte polynomial");
  compute_cmd->add_option("--family", ca.family, "linear, pyrene, triphenylene, fan or wheel");
  compute_cmd->add_option("--graph", ca.graph, "Graph file");
  compute_cmd->add_option("--base", ca.base, "Base graph file of a fan-like family");
  compute_cmd->add_option("--marks", ca.marks, "Marked vertices v,u[,w]")->delimiter(',');
  compute_cmd->add_option("--shape", ca.shape, "F, F+, F++, W, G, +G or +G+");
  compute_cmd->add_option("--n", ca.n, "Family member");
  compute_cmd->add_option("--method", ca.method)
      ->check(CLI::IsMember({"auto", "closed", "delcon", "subset"}));
  compute_cmd->add_option("--output", ca.output)->check(CLI::IsMember({"text", "json"}));

  std::string tau_family;
  unsigned tau_n = 0;
  std::string tau_method = "recurrence";
  auto* tau_cmd = app.add_subcommand("tau", "Print a spanning tree count");
  tau_cmd->add_option("--family", tau_family)->required();
  tau_cmd->add_option("--n", tau_n)->required();
  tau_cmd->add_option("--method", tau_method)
      ->check(CLI::IsMember({"recurrence", "eval", "kirchhoff"}));

  std::string scope = "all";
  auto* verify_cmd = app.add_subcommand("verify", "Run the built-in checks");
  verify_cmd->add_option("scope", scope)
      ->check(CLI::IsMember({"all", "oracles", "appendix", "duality", "corollaries"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (*compute_cmd) return compute(ca, out);
    if (*tau_cmd) return tau(tau_family, tau_n, tau_method, out);
    const VerifyReport report = run_verify(parse_verify_scope(scope));
    report.print(out);
    return report.passed() ? kExitOk : kExitVerificationFailed;
  } catch (const Infeasible& e) {
    err << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const TooManyEdges& e) {
    err << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace tutte
