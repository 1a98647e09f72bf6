#include "tutte/fanlike.hpp"

#include <string>

#include "tutte/error.hpp"
#include "tutte/tutte.hpp"

namespace tutte {

MarkedGraph::MarkedGraph(MultiGraph base, VertexId v, VertexId u, std::optional<VertexId> w)
    : base_(std::move(base)), v_(v), u_(u), w_(w) {
  const auto n = base_.vertex_count();
  if (v_ >= n || u_ >= n || (w_ && *w_ >= n)) throw MissingMark("mark is not a vertex of the base");
  if (v_ == u_) throw MissingMark("marks v and u must be distinct");
  if (w_ && (*w_ == v_ || *w_ == u_)) throw MissingMark("mark w must differ from v and u");
  if (!base_.is_connected()) throw Disconnected("fan-like base graph must be connected");
}

VertexId MarkedGraph::require_w() const {
  if (!w_) throw MissingMark("this construction needs the mark w");
  return *w_;
}

std::string_view family_name(Family family) {
  switch (family) {
    case Family::F: return "F";
    case Family::F_plus: return "F+";
    case Family::F_plusplus: return "F++";
    case Family::W: return "W";
    case Family::G: return "G";
    case Family::pG: return "+G";
    case Family::pGp: return "+G+";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "F") return Family::F;
  if (name == "F+" || name == "F_plus") return Family::F_plus;
  if (name == "F++" || name == "F_plusplus") return Family::F_plusplus;
  if (name == "W") return Family::W;
  if (name == "G") return Family::G;
  if (name == "+G" || name == "pG") return Family::pG;
  if (name == "+G+" || name == "pGp") return Family::pGp;
  throw Error("unknown fan-like shape '" + std::string(name) + "'");
}

bool needs_w(Family family) {
  return family == Family::G || family == Family::pG || family == Family::pGp;
}

MultiGraph build_family(const MarkedGraph& g, Family family, unsigned n) {
  const unsigned min_n = family == Family::W ? 2 : 1;
  if (n < min_n) {
    throw BadN(std::string(family_name(family)) + " needs n >= " + std::to_string(min_n));
  }
  const VertexId w = needs_w(family) ? g.require_w() : 0;
  const MultiGraph& base = g.base();
  const auto per_copy = static_cast<VertexId>(base.vertex_count() - 1);
  auto at = [&](unsigned copy, VertexId x) -> VertexId {
    if (x == g.v()) return 0;
    return 1 + copy * per_copy + (x < g.v() ? x : x - 1);
  };

  std::vector<Edge> edges;
  edges.reserve(n * base.edge_count() + n + 2);
  for (unsigned i = 0; i < n; ++i) {
    for (const auto& e : base.edges()) edges.push_back({at(i, e.a), at(i, e.b)});
  }
  const bool second_kind = needs_w(family);
  for (unsigned i = 0; i + 1 < n; ++i) {
    edges.push_back({at(i, second_kind ? w : g.u()), at(i + 1, g.u())});
  }
  switch (family) {
    case Family::W:
      edges.push_back({at(0, g.u()), at(n - 1, g.u())});
      break;
    case Family::F_plus:
    case Family::pG:
      edges.push_back({0, at(0, g.u())});
      break;
    case Family::F_plusplus:
      edges.push_back({0, at(0, g.u())});
      edges.push_back({0, at(n - 1, g.u())});
      break;
    case Family::pGp:
      edges.push_back({0, at(0, g.u())});
      edges.push_back({0, at(n - 1, w)});
      break;
    case Family::F:
    case Family::G:
      break;
  }
  return MultiGraph(1 + std::size_t{n} * per_copy, std::move(edges));
}

BasePolys base_polys(const MarkedGraph& g) {
  TutteCache cache;
  const MultiGraph& base = g.base();
  auto t = [&](const MultiGraph& h) { return tutte_delcon(h, cache); };
  auto merged = [](const MultiGraph& h, std::initializer_list<VertexId> s) {
    return h.identify_vertices(std::vector<VertexId>(s));
  };
  BasePolys out;
  out.whole = t(base);
  out.merged_vu = t(merged(base, {g.v(), g.u()}));
  out.plus_plus = t(base.add_edge(g.v(), g.u()).add_edge(g.v(), g.u()));
  if (g.w()) {
    const VertexId w = *g.w();
    const MultiGraph plus_w = base.add_edge(g.v(), w);
    out.merged_vw = t(merged(base, {g.v(), w}));
    out.merged_vuw = t(merged(base, {g.v(), g.u(), w}));
    out.plus_w = t(plus_w);
    out.plus_w_merged_vu = t(merged(plus_w, {g.v(), g.u()}));
    out.plus_u = t(base.add_edge(g.v(), g.u()));
    out.plus_u_plus_w = t(plus_w.add_edge(g.v(), g.u()));
  }
  return out;
}

namespace {

const BivarPoly& X() {
  static const BivarPoly x = BivarPoly::x();
  return x;
}

const BivarPoly& Y() {
  static const BivarPoly y = BivarPoly::y();
  return y;
}

BivarPoly over_denominator(const BivarPoly& numerator) {
  return div_exact(numerator, split_denominator());
}

// x((y-1)T - M)/(xy-x-y) and ((x-1)M - T)/(xy-x-y): the two coefficients
// produced by splitting off one copy along its {v, u} cut.
BivarPoly cut_coeff_whole(const BivarPoly& t, const BivarPoly& m) {
  return over_denominator(X() * ((Y() - 1) * t - m));
}

BivarPoly cut_coeff_merged(const BivarPoly& t, const BivarPoly& m) {
  return over_denominator((X() - 1) * m - t);
}

const BivarPoly& need(const std::optional<BivarPoly>& p) {
  if (!p) throw MissingMark("this construction needs the mark w");
  return *p;
}

}  // namespace

TransferCoeffs coeffs_F(const BasePolys& base) {
  const BivarPoly& t = base.whole;
  const BivarPoly& m = base.merged_vu;
  return {cut_coeff_whole(t, m), cut_coeff_merged(t, m),
          over_denominator((X() * Y() - Y() - 1) * m - t), std::nullopt};
}

TransferCoeffs coeffs_G(const BasePolys& base) {
  const BivarPoly& t = base.whole;
  const BivarPoly& m_vu = base.merged_vu;
  const BivarPoly& m_vw = need(base.merged_vw);
  const BivarPoly& m_vuw = need(base.merged_vuw);
  const BivarPoly link = X() * Y() - X() - 1;
  return {over_denominator(link * t - m_vw), over_denominator((X() - 1) * m_vw - t),
          over_denominator(link * m_vu - m_vuw), over_denominator((X() - 1) * m_vuw - m_vu)};
}

TransferCoeffs coeffs_pGp(const BasePolys& base) {
  const BivarPoly& t = base.whole;
  const BivarPoly& m = base.merged_vu;
  const BivarPoly& tp = need(base.plus_w);
  const BivarPoly& mp = need(base.plus_w_merged_vu);
  return {cut_coeff_whole(t, m), cut_coeff_merged(t, m), cut_coeff_whole(tp, mp),
          cut_coeff_merged(tp, mp)};
}

TransferCoeffs coeffs_F(const MarkedGraph& g) { return coeffs_F(base_polys(g)); }

TransferCoeffs coeffs_G(const MarkedGraph& g) {
  g.require_w();
  return coeffs_G(base_polys(g));
}

TransferCoeffs coeffs_pGp(const MarkedGraph& g) {
  g.require_w();
  return coeffs_pGp(base_polys(g));
}

RecurrenceKernel kernel_first_kind(const TransferCoeffs& c) {
  return {c.a + c.c, c.a * (c.c - c.b)};
}

RecurrenceKernel kernel_second_kind(const TransferCoeffs& c) {
  const BivarPoly& d = need(c.d);
  return {c.a + d, c.a * d - c.b * c.c};
}

std::vector<BivarPoly> s_sequence_table(const RecurrenceKernel& k, unsigned n) {
  std::vector<BivarPoly> s{BivarPoly(0)};
  if (n >= 1) s.emplace_back(1);
  for (unsigned i = 2; i <= n; ++i) s.push_back(k.trace * s[i - 1] - k.det * s[i - 2]);
  return s;
}

BivarPoly s_sequence(const RecurrenceKernel& k, unsigned n) {
  return s_sequence_table(k, n).back();
}

BivarPoly s_sum_form(const RecurrenceKernel& k, unsigned n) {
  BivarPoly sum;
  BivarPoly det_power(1);
  for (unsigned j = 0; 2 * j <= n; ++j) {
    BigInt binom;
    mpz_bin_uiui(binom.get_mpz_t(), n - j, j);
    if (j % 2 == 1) binom = -binom;
    sum = sum + BivarPoly(binom) * k.trace.pow(n - 2 * j) * det_power;
    det_power = det_power * k.det;
  }
  return sum;
}

namespace {

// a_m = S_{m+1} in either evaluation strategy; a_{-1} = S_0 = 0.
class SequenceSource {
 public:
  SequenceSource(const RecurrenceKernel& k, unsigned max_m, Evaluation how)
      : kernel_(k), how_(how) {
    if (how_ == Evaluation::lambda_power) table_ = s_sequence_table(k, max_m + 1);
  }

  BivarPoly a(int m) const {
    if (m < 0) return {};
    if (how_ == Evaluation::lambda_power) return table_.at(static_cast<std::size_t>(m) + 1);
    return s_sum_form(kernel_, static_cast<unsigned>(m));
  }

 private:
  const RecurrenceKernel& kernel_;
  Evaluation how_;
  std::vector<BivarPoly> table_;
};

}  // namespace

BivarPoly FamilyClosedForm::evaluate(unsigned n, Evaluation how) const {
  if (n < 1) throw BadN("closed forms are defined for n >= 1");
  const SequenceSource seq(kernel, n - 1, how);
  return head * seq.a(static_cast<int>(n) - 1) + tail * seq.a(static_cast<int>(n) - 2);
}

FamilyClosedForm family_closed_form(const MarkedGraph& g, Family family) {
  if (needs_w(family)) g.require_w();
  const BasePolys base = base_polys(g);
  const BivarPoly& t = base.whole;
  const BivarPoly& m = base.merged_vu;
  switch (family) {
    case Family::F: {
      const auto c = coeffs_F(base);
      return {t, (c.b - c.c) * t + c.b * m, kernel_first_kind(c)};
    }
    case Family::F_plus: {
      const auto c = coeffs_F(base);
      const BivarPoly plus = t + m;
      return {plus, c.b * base.plus_plus - c.c * plus, kernel_first_kind(c)};
    }
    case Family::F_plusplus: {
      const auto c = coeffs_F(base);
      return {base.plus_plus, -(Y() * c.a * m), kernel_first_kind(c)};
    }
    case Family::G: {
      const auto c = coeffs_G(base);
      return {t, c.b * m - *c.d * t, kernel_second_kind(c)};
    }
    case Family::pG: {
      const auto c = coeffs_pGp(base);
      const BivarPoly& plus_u = need(base.plus_u);
      const BivarPoly& both = need(base.plus_u_plus_w);
      return {plus_u, c.b * both - *c.d * plus_u, kernel_second_kind(c)};
    }
    case Family::pGp: {
      const auto c = coeffs_pGp(base);
      const BivarPoly& plus_u = need(base.plus_u);
      const BivarPoly& both = need(base.plus_u_plus_w);
      return {both, c.c * plus_u - c.a * both, kernel_second_kind(c)};
    }
    case Family::W:
      break;
  }
  throw Error("the wheel-like family has no two-term closed form; use closed_family");
}

namespace {

BivarPoly closed_wheel(const MarkedGraph& g, unsigned n, Evaluation how) {
  if (n < 2) throw BadN("W needs n >= 2");
  const BivarPoly w2 = tutte_delcon(build_family(g, Family::W, 2));
  if (n == 2) return w2;
  const BasePolys base = base_polys(g);
  const auto c = coeffs_F(base);
  const BivarPoly& t = base.whole;
  const BivarPoly& m = base.merged_vu;
  const BivarPoly a_over_x = div_exact(c.a, X());
  const RecurrenceKernel k = kernel_first_kind(c);
  const SequenceSource seq(k, n, how);

  const BivarPoly p = c.a * (c.b - c.c) * t + (1 - Y()) * c.a * c.b * m;
  const BivarPoly q = (c.a + c.b) * t + (Y() + 1) * c.b * m;
  std::vector<BivarPoly> a_over_x_powers{BivarPoly(1)};
  for (unsigned i = 1; i <= n - 2; ++i) a_over_x_powers.push_back(a_over_x_powers.back() * a_over_x);

  BivarPoly total = a_over_x_powers[n - 2] * w2;
  for (unsigned i = 2; i <= n - 1; ++i) {
    const BivarPoly bracket =
        p * seq.a(static_cast<int>(i) - 2) + q * seq.a(static_cast<int>(i) - 1);
    total = total + a_over_x_powers[n - 1 - i] * bracket;
  }
  return total;
}

}  // namespace

BivarPoly closed_family(const MarkedGraph& g, Family family, unsigned n, Evaluation how) {
  if (family == Family::W) return closed_wheel(g, n, how);
  return family_closed_form(g, family).evaluate(n, how);
}

}  // namespace tutte
