#include "tutte/benzenoid.hpp"

#include <array>
#include <string>

#include "tutte/error.hpp"

namespace tutte {

std::string_view chain_name(Chain chain) {
  switch (chain) {
    case Chain::linear: return "linear";
    case Chain::pyrene: return "pyrene";
    case Chain::triphenylene: return "triphenylene";
  }
  return "?";
}

Chain parse_chain(std::string_view name) {
  if (name == "linear" || name == "L") return Chain::linear;
  if (name == "pyrene" || name == "R") return Chain::pyrene;
  if (name == "triphenylene" || name == "T") return Chain::triphenylene;
  throw Error("unknown chain family '" + std::string(name) + "'");
}

namespace {

// Unit layouts. Pyrene: central pair A, B with C and D on both of them.
// Triphenylene: centre A with B, C, D on alternate sides. Units repeat
// along a fixed offset; the link is B_k -- A_{k+1} for pyrene and
// B_k -- C_{k+1} for triphenylene.
constexpr std::array<HexCell, 4> kPyreneUnit{{{0, 0}, {1, 0}, {1, -1}, {0, 1}}};
constexpr HexCell kPyreneOffset{2, 0};
constexpr std::array<HexCell, 4> kTriphenyleneUnit{{{0, 0}, {1, 0}, {-1, 1}, {0, -1}}};
constexpr HexCell kTriphenyleneOffset{3, -1};

}  // namespace

std::vector<HexCell> chain_cells(Chain chain, unsigned n) {
  if (n == 0) throw BadN("chains need n >= 1");
  std::vector<HexCell> cells;
  auto repeat = [&](const std::array<HexCell, 4>& unit, HexCell offset) {
    for (int k = 0; k < static_cast<int>(n); ++k) {
      for (const auto& c : unit) cells.push_back({c.q + k * offset.q, c.r + k * offset.r});
    }
  };
  switch (chain) {
    case Chain::linear:
      for (int k = 0; k < static_cast<int>(n); ++k) cells.push_back({k, 0});
      break;
    case Chain::pyrene:
      repeat(kPyreneUnit, kPyreneOffset);
      break;
    case Chain::triphenylene:
      repeat(kTriphenyleneUnit, kTriphenyleneOffset);
      break;
  }
  return cells;
}

MultiGraph build_chain(Chain chain, unsigned n) {
  return HexSystem(chain_cells(chain, n)).graph();
}

MarkedGraph build_dual_base(Chain chain) {
  auto parallel = [](std::vector<Edge>& edges, VertexId a, VertexId b, int count) {
    for (int i = 0; i < count; ++i) edges.push_back({a, b});
  };
  std::vector<Edge> edges;
  switch (chain) {
    case Chain::linear:
      // Outer face v = 0, hexagon u = 1: four outer sides per inner hexagon.
      parallel(edges, 0, 1, 4);
      return MarkedGraph(MultiGraph(2, std::move(edges)), 0, 1);
    case Chain::pyrene:
      // 0 outer face, 1 = A (u), 2 = B (w), 3 = C, 4 = D.
      parallel(edges, 0, 1, 2);
      parallel(edges, 0, 2, 2);
      parallel(edges, 0, 3, 4);
      parallel(edges, 0, 4, 4);
      edges.insert(edges.end(), {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}});
      return MarkedGraph(MultiGraph(5, std::move(edges)), 0, 1, 2);
    case Chain::triphenylene:
      // 0 outer face, 1 = centre A, 2 = B (w), 3 = C (u), 4 = D.
      parallel(edges, 0, 1, 3);
      parallel(edges, 0, 2, 4);
      parallel(edges, 0, 3, 4);
      parallel(edges, 0, 4, 5);
      edges.insert(edges.end(), {{1, 2}, {1, 3}, {1, 4}});
      return MarkedGraph(MultiGraph(5, std::move(edges)), 0, 3, 2);
  }
  throw Error("unknown chain family");
}

Family dual_family(Chain chain) {
  return chain == Chain::linear ? Family::F_plusplus : Family::pGp;
}

const IJKConstants& ijk_constants(Chain chain) {
  static const IJKConstants pyrene = [] {
    const BivarPoly x = BivarPoly::x();
    IJKConstants c;
    c.i = BivarPoly::parse(
        "x^{13}+4x^{12}+10x^{11}+20x^{10}+2x^9y+33x^9+8x^8y+46x^8+18x^7y+56x^7+x^6y^2+31x^6y+"
        "60x^6+6x^5y^2+42x^5y+56x^5+11x^4y^2+49x^4y+44x^4+2x^3y^3+17x^3y^2+44x^3y+29x^3+"
        "2x^2y^3+17x^2y^2+34x^2y+15x^2+4xy^3+17xy^2+19xy+4x+y^4+5y^3+8y^2+4y");
    c.j = x.pow(2) *
          BivarPoly::parse(
              "x^{12}+3x^{11}+6x^{10}+10x^9+x^8y+14x^8+4x^7y+16x^7+7x^6y+16x^6+10x^5y+14x^5+"
              "2x^4y^2+11x^4y+10x^4+2x^3y^2+10x^3y+6x^3+3x^2y^2+7x^2y+3x^2+3xy^2+4xy+x+y^3+"
              "2y^2+y");
    c.k = x.pow(5) * BivarPoly::parse("x^5+x^4+x^3+x^2+x+y").pow(2);
    return c;
  }();
  static const IJKConstants triphenylene = [] {
    const BivarPoly x = BivarPoly::x();
    IJKConstants c;
    c.i = BivarPoly::parse(
        "y^4+y^3x^4+3y^3x^3+4y^3x^2+4y^3x+3y^3+3y^2x^7+9y^2x^6+15y^2x^5+20y^2x^4+21y^2x^3+"
        "15y^2x^2+9y^2x+3y^2+2yx^{11}+8yx^{10}+18yx^9+32yx^8+46yx^7+53yx^6+52yx^5+43yx^4+"
        "28yx^3+15yx^2+6yx+y+x^{15}+4x^{14}+10x^{13}+20x^{12}+33x^{11}+46x^{10}+56x^9+60x^8+"
        "56x^7+46x^6+33x^5+20x^4+10x^3+4x^2+x");
    c.j = x.pow(4) *
          BivarPoly::parse(
              "y^3+y^2x^4+3y^2x^3+3y^2x^2+3y^2x+2y^2+yx^8+4yx^7+7yx^6+10yx^5+12yx^4+10yx^3+"
              "7yx^2+4yx+y+x^{12}+3x^{11}+6x^{10}+10x^9+14x^8+16x^7+16x^6+14x^5+10x^4+6x^3+"
              "3x^2+x");
    c.k = x.pow(8) * (BivarPoly::parse("y+x") + BivarPoly::parse("x^4+x^3+x^2+x+y").pow(2) +
                      BivarPoly::parse("x^2+x^3+x^4+x^5+x^6+x^7+x^8+x^9"));
    return c;
  }();
  switch (chain) {
    case Chain::pyrene: return pyrene;
    case Chain::triphenylene: return triphenylene;
    case Chain::linear: break;
  }
  throw Error("the linear chain has no I, J, K constants");
}

TransferCoeffs chain_coeffs(Chain chain) {
  const IJKConstants& c = ijk_constants(chain);
  const BivarPoly x = BivarPoly::x();
  const BivarPoly y = BivarPoly::y();
  const BivarPoly& den = split_denominator();
  const BivarPoly i_plus_j = c.i + c.j;
  const BivarPoly j_plus_k = c.j + c.k;
  return {div_exact(y * ((x - 1) * c.i - c.j), den), div_exact((y - 1) * c.j - c.i, den),
          div_exact(y * ((x - 1) * i_plus_j - j_plus_k), den),
          div_exact((y - 1) * j_plus_k - i_plus_j, den)};
}

namespace {

FamilyClosedForm make_closed_form(Chain chain) {
  const BivarPoly x = BivarPoly::x();
  const BivarPoly y = BivarPoly::y();
  if (chain == Chain::linear) {
    BivarPoly hex_sum;  // 1 + x + ... + x^4
    for (std::uint32_t i = 0; i <= 4; ++i) hex_sum = hex_sum + BivarPoly::monomial(1, i, 0);
    return {x * hex_sum + y, -(x.pow(5) * y), {hex_sum + y, x.pow(4) * y}};
  }
  const IJKConstants& c = ijk_constants(chain);
  const TransferCoeffs t = chain_coeffs(chain);
  const BivarPoly head = c.i + 2 * c.j + c.k;
  return {head, t.c * (c.i + c.j) - t.a * head, kernel_second_kind(t)};
}

}  // namespace

const FamilyClosedForm& chain_closed_form(Chain chain) {
  static const FamilyClosedForm linear = make_closed_form(Chain::linear);
  static const FamilyClosedForm pyrene = make_closed_form(Chain::pyrene);
  static const FamilyClosedForm triphenylene = make_closed_form(Chain::triphenylene);
  switch (chain) {
    case Chain::linear: return linear;
    case Chain::pyrene: return pyrene;
    case Chain::triphenylene: return triphenylene;
  }
  throw Error("unknown chain family");
}

BivarPoly closed_chain(Chain chain, unsigned n, Evaluation how) {
  if (n == 0) throw BadN("chains need n >= 1");
  return chain_closed_form(chain).evaluate(n, how);
}

std::pair<BigInt, BigInt> tau_kernel(Chain chain) {
  const auto& k = chain_closed_form(chain).kernel;
  return {k.trace.eval(1, 1), k.det.eval(1, 1)};
}

BigInt tau_chain(Chain chain, unsigned n) {
  if (n == 0) throw BadN("chains need n >= 1");
  const auto [trace, det] = tau_kernel(chain);
  BigInt previous = closed_chain(chain, 1).eval(1, 1);
  if (n == 1) return previous;
  BigInt current = closed_chain(chain, 2).eval(1, 1);
  for (unsigned i = 3; i <= n; ++i) {
    BigInt next = trace * current - det * previous;
    previous = std::move(current);
    current = std::move(next);
  }
  return current;
}

}  // namespace tutte
