#include "tutte/verify.hpp"

#include <ostream>
#include <string>

#include "tutte/benzenoid.hpp"
#include "tutte/corpus.hpp"
#include "tutte/error.hpp"
#include "tutte/fanlike.hpp"
#include "tutte/fixtures.hpp"
#include "tutte/graph_io.hpp"
#include "tutte/tutte.hpp"

namespace tutte {

namespace {

const BivarPoly kX = BivarPoly::x();
const BivarPoly kY = BivarPoly::y();

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// sum_j C(m-j, j) (x+y+1)^(m-2j) (-xy)^j
BivarPoly fan_sum(int m) {
  if (m < 0) return 0;
  const BivarPoly trace = kX + kY + 1;
  const BivarPoly det = -(kX * kY);
  BivarPoly total;
  for (int j = 0; 2 * j <= m; ++j) {
    total = total + BivarPoly(binomial(m - j, j)) * trace.pow(m - 2 * j) * det.pow(j);
  }
  return total;
}

std::string one_line(const MultiGraph& g) {
  std::string s = format_graph(g);
  for (char& c : s) {
    if (c == '\n') c = ';';
  }
  return s;
}

class Collector {
 public:
  explicit Collector(VerifyReport& report) : report_(report) {}

  // Runs fn, which returns an empty string on success or a description of
  // the first counterexample. Exceptions count as failures.
  template <class Fn>
  void check(std::string name, Fn&& fn) {
    CheckResult r{std::move(name), false, {}};
    try {
      r.detail = fn();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    report_.checks.push_back(std::move(r));
  }

 private:
  VerifyReport& report_;
};

void oracle_checks(Collector& c) {
  const auto corpus = generate_corpus();
  c.check("corpus has >= 50 graphs", [&]() -> std::string {
    return corpus.size() >= 50 ? "" : "only " + std::to_string(corpus.size()) + " graphs";
  });
  c.check("subset expansion = deletion-contraction on corpus", [&]() -> std::string {
    for (const auto& item : corpus) {
      if (tutte_subset(item.graph) != tutte_delcon(item.graph)) {
        return item.name + " [" + one_line(item.graph) + "]";
      }
    }
    return "";
  });
  c.check("T(G;1,1) = Kirchhoff count on corpus", [&]() -> std::string {
    for (const auto& item : corpus) {
      if (tutte_delcon(item.graph).eval(1, 1) != count_spanning_trees_kirchhoff(item.graph)) {
        return item.name;
      }
    }
    return "";
  });
  c.check("T(G;2,2) = 2^|E| on corpus", [&]() -> std::string {
    for (const auto& item : corpus) {
      BigInt expected;
      mpz_ui_pow_ui(expected.get_mpz_t(), 2, item.graph.edge_count());
      if (tutte_delcon(item.graph).eval(2, 2) != expected) return item.name;
    }
    return "";
  });
  c.check("block multiplicativity on corpus", [&]() -> std::string {
    for (const auto& item : corpus) {
      BivarPoly product = 1;
      for (const auto& b : blocks(item.graph)) product = product * tutte_subset(b);
      if (product != tutte_subset(item.graph)) return item.name;
    }
    return "";
  });
  c.check("two-vertex splitting on corpus", [&]() -> std::string {
    for (const auto& item : corpus) {
      if (!item.cut) continue;
      const TwoCut& t = *item.cut;
      const SplitParts parts = split_parts(t.h1, t.v1, t.u1, t.h2, t.v2, t.u2);
      const BivarPoly split =
          t.with_edge ? split_two_cut_with_edge(parts) : split_two_cut(parts);
      if (split != tutte_delcon(item.graph)) return item.name;
    }
    return "";
  });
  c.check("branch order invariance on corpus", [&]() -> std::string {
    for (const auto& item : corpus) {
      if (tutte_delcon(item.graph, {.branch = BranchRule::max_multiplicity}) !=
          tutte_delcon(item.graph)) {
        return item.name;
      }
    }
    return "";
  });
}

void appendix_checks(Collector& c) {
  const FixtureSet& fixtures = appendix_fixtures();
  for (const auto& f : fixtures.polynomials) {
    c.check("closed form " + std::string(chain_name(f.chain)) + " n=" + std::to_string(f.n) +
                " = " + f.source,
            [&]() -> std::string {
              return closed_chain(f.chain, f.n) == f.poly ? "" : "polynomials differ";
            });
  }
  for (const auto& row : fixtures.spanning_trees) {
    for (unsigned n = 1; n <= row.values.size(); ++n) {
      const BigInt& expected = row.values[n - 1];
      c.check("spanning trees " + std::string(chain_name(row.chain)) + " n=" + std::to_string(n) +
                  " = " + expected.get_str() + " (" + row.source + ")",
              [&, n]() -> std::string {
                const BigInt recurrence = tau_chain(row.chain, n);
                const BigInt evaluated = closed_chain(row.chain, n).eval(1, 1);
                const BigInt kirchhoff = count_spanning_trees_kirchhoff(build_chain(row.chain, n));
                if (recurrence != expected) return "recurrence gives " + recurrence.get_str();
                if (evaluated != expected) return "evaluation gives " + evaluated.get_str();
                if (kirchhoff != expected) return "Kirchhoff gives " + kirchhoff.get_str();
                return "";
              });
    }
  }
}

void duality_checks(Collector& c) {
  for (Chain chain : {Chain::linear, Chain::pyrene, Chain::triphenylene}) {
    const MarkedGraph base = build_dual_base(chain);
    for (unsigned n = 1; n <= 2; ++n) {
      c.check("duality " + std::string(chain_name(chain)) + " n=" + std::to_string(n),
              [&, n]() -> std::string {
                const MultiGraph dual = build_family(base, dual_family(chain), n);
                return verify_duality(build_chain(chain, n), dual) ? "" : "T(G; x, y) != T(D; y, x)";
              });
    }
  }
}

void corollary_checks(Collector& c) {
  const MarkedGraph k2(MultiGraph(2, {{0, 1}}), 0, 1);
  c.check("fan corollary n <= 6", [&]() -> std::string {
    for (unsigned n = 1; n <= 6; ++n) {
      if (closed_family(k2, Family::F, n) != fan_corollary(n)) return "n=" + std::to_string(n);
    }
    return "";
  });
  c.check("wheel corollary 3 <= n <= 6", [&]() -> std::string {
    for (unsigned n = 3; n <= 6; ++n) {
      if (closed_family(k2, Family::W, n) != wheel_corollary(n)) return "n=" + std::to_string(n);
    }
    return "";
  });
  c.check("T(W3) = T(K4)", [&]() -> std::string {
    const MultiGraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    return closed_family(k2, Family::W, 3) == tutte_subset(k4) ? "" : "differ";
  });

  struct Base {
    std::string name;
    MarkedGraph g;
  };
  const std::vector<Base> bases = {
      {"K2", k2},
      {"C2", MarkedGraph(MultiGraph(2, {{0, 1}, {0, 1}}), 0, 1)},
      {"P3 (v end, u mid, w end)", MarkedGraph(MultiGraph(3, {{0, 1}, {1, 2}}), 0, 1, 2)},
      {"P3 (v mid, u end, w end)", MarkedGraph(MultiGraph(3, {{0, 1}, {1, 2}}), 1, 0, 2)},
      {"P3 (v end, u end, w mid)", MarkedGraph(MultiGraph(3, {{0, 1}, {1, 2}}), 0, 2, 1)},
      {"triangle", MarkedGraph(MultiGraph(3, {{0, 1}, {1, 2}, {0, 2}}), 0, 1, 2)},
  };
  for (const auto& base : bases) {
    for (Family family : {Family::F, Family::F_plus, Family::F_plusplus, Family::W, Family::G,
                          Family::pG, Family::pGp}) {
      if (needs_w(family) && !base.g.w()) continue;
      c.check("closed = direct for " + std::string(family_name(family)) + " over " + base.name,
              [&]() -> std::string {
                const unsigned first = family == Family::W ? 2 : 1;
                for (unsigned n = first; n <= 4; ++n) {
                  const BivarPoly direct = tutte_delcon(build_family(base.g, family, n));
                  for (Evaluation how : {Evaluation::lambda_power, Evaluation::binomial_sum}) {
                    if (closed_family(base.g, family, n, how) != direct) {
                      return "n=" + std::to_string(n);
                    }
                  }
                }
                return "";
              });
    }
  }

  c.check("S_n = binomial sum form for n <= 8", [&]() -> std::string {
    const std::vector<RecurrenceKernel> kernels = {
        {kX + kY + 1, kX * kY},
        {kX * kX + kY, -(kX * kY) + 2},
        chain_closed_form(Chain::linear).kernel,
    };
    for (std::size_t i = 0; i < kernels.size(); ++i) {
      for (unsigned n = 0; n <= 8; ++n) {
        if (s_sequence(kernels[i], n + 1) != s_sum_form(kernels[i], n)) {
          return "kernel " + std::to_string(i) + " n=" + std::to_string(n);
        }
      }
    }
    return "";
  });
}

}  // namespace

VerifyScope parse_verify_scope(std::string_view name) {
  if (name == "all") return VerifyScope::all;
  if (name == "oracles") return VerifyScope::oracles;
  if (name == "appendix") return VerifyScope::appendix;
  if (name == "duality") return VerifyScope::duality;
  if (name == "corollaries") return VerifyScope::corollaries;
  throw Error("unknown verify scope '" + std::string(name) + "'");
}

bool VerifyReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

void VerifyReport::print(std::ostream& os) const {
  for (const auto& c : checks) {
    if (c.passed) {
      os << "PASS " << c.name << '\n';
    } else {
      os << "FAIL " << c.name << ": " << c.detail << '\n';
    }
  }
}

VerifyReport run_verify(VerifyScope scope) {
  VerifyReport report;
  Collector c(report);
  const bool all = scope == VerifyScope::all;
  if (all || scope == VerifyScope::oracles) oracle_checks(c);
  if (all || scope == VerifyScope::appendix) appendix_checks(c);
  if (all || scope == VerifyScope::duality) duality_checks(c);
  if (all || scope == VerifyScope::corollaries) corollary_checks(c);
  return report;
}

BivarPoly fan_corollary(unsigned n) {
  if (n == 0) throw BadN("fan needs n >= 1");
  const int m = static_cast<int>(n);
  return kY * (1 - kX) * fan_sum(m - 2) + kX * fan_sum(m - 1);
}

BivarPoly wheel_corollary(unsigned n) {
  if (n < 3) throw BadN("wheel corollary needs n >= 3");
  BivarPoly total = kX * kX + kX + kX * kY + kY + kY * kY;
  for (int i = 2; i <= static_cast<int>(n) - 1; ++i) {
    total = total + kX * kY * (1 - kX - kY) * fan_sum(i - 2) +
            (kX * kX + kX + kY + kY * kY) * fan_sum(i - 1);
  }
  return total;
}

}  // namespace tutte
