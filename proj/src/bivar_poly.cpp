#include "tutte/bivar_poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <ostream>
#include <sstream>
#include <utility>

#include "tutte/error.hpp"

namespace tutte {

namespace {

using Term = BivarPoly::Term;

// Canonical order: x-degree descending, then y-degree descending.
bool canonical_before(std::uint32_t a1, std::uint32_t b1, std::uint32_t a2,
                      std::uint32_t b2) {
  return a1 != a2 ? a1 > a2 : b1 > b2;
}

struct MonomialOrder {
  bool operator()(const std::pair<std::uint32_t, std::uint32_t>& l,
                  const std::pair<std::uint32_t, std::uint32_t>& r) const {
    return canonical_before(l.first, l.second, r.first, r.second);
  }
};

using TermMap =
    std::map<std::pair<std::uint32_t, std::uint32_t>, BigInt, MonomialOrder>;

std::vector<Term> from_map(TermMap&& m) {
  std::vector<Term> out;
  out.reserve(m.size());
  for (auto& [mono, c] : m) {
    if (c != 0) out.push_back({mono.first, mono.second, std::move(c)});
  }
  return out;
}

template <bool Subtract>
std::vector<Term> merge(const std::vector<Term>& p, const std::vector<Term>& q) {
  std::vector<Term> out;
  out.reserve(p.size() + q.size());
  auto i = p.begin();
  auto j = q.begin();
  while (i != p.end() || j != q.end()) {
    if (j == q.end() ||
        (i != p.end() && canonical_before(i->x_deg, i->y_deg, j->x_deg, j->y_deg))) {
      out.push_back(*i++);
    } else if (i == p.end() ||
               canonical_before(j->x_deg, j->y_deg, i->x_deg, i->y_deg)) {
      out.push_back(*j++);
      if constexpr (Subtract) out.back().coeff = -out.back().coeff;
    } else {
      BigInt c = Subtract ? BigInt(i->coeff - j->coeff) : BigInt(i->coeff + j->coeff);
      if (c != 0) out.push_back({i->x_deg, i->y_deg, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

// Largest dense accumulation grid used by multiplication before falling
// back to an ordered map.
constexpr std::size_t kDenseGridLimit = std::size_t{1} << 22;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  BivarPoly run() {
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    TermMap acc;
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      auto [c, a, b] = term();
      if (sign < 0) c = -c;
      acc[{a, b}] += c;
      first = false;
      skip_ws();
      if (at_end()) break;
    }
    return BivarPoly::from_terms(from_map(std::move(acc)));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected digits", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint32_t exponent() {
    skip_ws();
    const bool braced = peek() == '{';
    if (braced) {
      ++pos_;
      skip_ws();
    }
    const std::size_t start = pos_;
    const std::string d = digits();
    if (d.size() > 9) throw ParseError("exponent too large", start);
    if (braced) {
      skip_ws();
      if (peek() != '}') throw ParseError("expected '}'", pos_);
      ++pos_;
    }
    return static_cast<std::uint32_t>(std::stoul(d));
  }

  std::tuple<BigInt, std::uint32_t, std::uint32_t> term() {
    BigInt coeff = 1;
    bool has_coeff = false;
    bool has_var = false;
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = BigInt(digits());
      has_coeff = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (peek() != 'x' && peek() != 'y') throw ParseError("expected variable", pos_);
      }
    }
    while (peek() == 'x' || peek() == 'y') {
      const bool is_x = peek() == 'x';
      ++pos_;
      std::uint32_t e = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        e = exponent();
      }
      (is_x ? a : b) += e;
      has_var = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (peek() != 'x' && peek() != 'y') throw ParseError("expected variable", pos_);
      }
    }
    if (!has_coeff && !has_var) throw ParseError("expected term", pos_);
    return {coeff, a, b};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BivarPoly::BivarPoly(long constant) : BivarPoly(BigInt(constant)) {}

BivarPoly::BivarPoly(const BigInt& constant) {
  if (constant != 0) terms_.push_back({0, 0, constant});
}

BivarPoly BivarPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& l, const Term& r) {
    return canonical_before(l.x_deg, l.y_deg, r.x_deg, r.y_deg);
  });
  BivarPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().x_deg == t.x_deg &&
        p.terms_.back().y_deg == t.y_deg) {
      p.terms_.back().coeff += t.coeff;
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(p.terms_, [](const Term& t) { return t.coeff == 0; });
  return p;
}

BivarPoly BivarPoly::monomial(const BigInt& coeff, std::uint32_t x_deg,
                              std::uint32_t y_deg) {
  BivarPoly p;
  if (coeff != 0) p.terms_.push_back({x_deg, y_deg, coeff});
  return p;
}

BivarPoly BivarPoly::x() { return monomial(1, 1, 0); }
BivarPoly BivarPoly::y() { return monomial(1, 0, 1); }

BigInt BivarPoly::coeff(std::uint32_t x_deg, std::uint32_t y_deg) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), std::pair{x_deg, y_deg},
                             [](const Term& t, const std::pair<std::uint32_t, std::uint32_t>& m) {
                               return canonical_before(t.x_deg, t.y_deg, m.first, m.second);
                             });
  if (it != terms_.end() && it->x_deg == x_deg && it->y_deg == y_deg) return it->coeff;
  return 0;
}

std::uint32_t BivarPoly::max_x_degree() const noexcept {
  return terms_.empty() ? 0 : terms_.front().x_deg;
}

std::uint32_t BivarPoly::max_y_degree() const noexcept {
  std::uint32_t m = 0;
  for (const auto& t : terms_) m = std::max(m, t.y_deg);
  return m;
}

BivarPoly BivarPoly::pow(unsigned exponent) const {
  BivarPoly result(1);
  BivarPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

BivarPoly BivarPoly::swap_xy() const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& term : terms_) t.push_back({term.y_deg, term.x_deg, term.coeff});
  return from_terms(std::move(t));
}

BigInt BivarPoly::eval(const BigInt& x0, const BigInt& y0) const {
  // Horner in x over the canonical order, inner y-polynomials evaluated
  // directly.
  BigInt result = 0;
  std::size_t i = 0;
  std::uint32_t current = terms_.empty() ? 0 : terms_.front().x_deg;
  while (i < terms_.size()) {
    const std::uint32_t a = terms_[i].x_deg;
    BigInt step;
    mpz_pow_ui(step.get_mpz_t(), x0.get_mpz_t(), current - a);
    result *= step;
    current = a;
    BigInt inner = 0;
    for (; i < terms_.size() && terms_[i].x_deg == a; ++i) {
      BigInt yp;
      mpz_pow_ui(yp.get_mpz_t(), y0.get_mpz_t(), terms_[i].y_deg);
      inner += terms_[i].coeff * yp;
    }
    result += inner;
  }
  BigInt tail;
  mpz_pow_ui(tail.get_mpz_t(), x0.get_mpz_t(), current);
  return result * tail;
}

std::string BivarPoly::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const BigInt mag = abs(t.coeff);
    const bool has_var = t.x_deg > 0 || t.y_deg > 0;
    bool need_star = false;
    if (mag != 1 || !has_var) {
      os << mag.get_str();
      need_star = true;
    }
    auto var = [&](char name, std::uint32_t e) {
      if (e == 0) return;
      if (need_star) os << '*';
      os << name;
      if (e != 1) os << '^' << e;
      need_star = true;
    };
    var('x', t.x_deg);
    var('y', t.y_deg);
  }
  return os.str();
}

BivarPoly BivarPoly::parse(std::string_view text) { return Parser(text).run(); }

nlohmann::json BivarPoly::to_json() const {
  auto j = nlohmann::json::array();
  for (const auto& t : terms_) j.push_back({t.x_deg, t.y_deg, t.coeff.get_str()});
  return j;
}

BivarPoly BivarPoly::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("polynomial JSON must be an array", 0);
  std::vector<Term> terms;
  std::size_t index = 0;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 3 || !item[0].is_number_unsigned() ||
        !item[1].is_number_unsigned() || !item[2].is_string()) {
      throw ParseError("malformed term triple", index);
    }
    BigInt c;
    if (c.set_str(item[2].get<std::string>(), 10) != 0) {
      throw ParseError("malformed coefficient", index);
    }
    terms.push_back({item[0].get<std::uint32_t>(), item[1].get<std::uint32_t>(), c});
    ++index;
  }
  return from_terms(std::move(terms));
}

BivarPoly operator+(const BivarPoly& p, const BivarPoly& q) {
  BivarPoly r;
  r.terms_ = merge<false>(p.terms_, q.terms_);
  return r;
}

BivarPoly operator-(const BivarPoly& p, const BivarPoly& q) {
  BivarPoly r;
  r.terms_ = merge<true>(p.terms_, q.terms_);
  return r;
}

BivarPoly operator-(const BivarPoly& p) {
  BivarPoly r = p;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

BivarPoly operator*(const BivarPoly& p, const BivarPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const std::size_t width_x = std::size_t{p.max_x_degree()} + q.max_x_degree() + 1;
  const std::size_t width_y = std::size_t{p.max_y_degree()} + q.max_y_degree() + 1;
  BivarPoly r;
  if (width_x * width_y <= kDenseGridLimit) {
    std::vector<BigInt> grid(width_x * width_y);
    for (const auto& s : p.terms_) {
      for (const auto& t : q.terms_) {
        BigInt& cell = grid[(s.x_deg + t.x_deg) * width_y + (s.y_deg + t.y_deg)];
        mpz_addmul(cell.get_mpz_t(), s.coeff.get_mpz_t(), t.coeff.get_mpz_t());
      }
    }
    for (std::size_t a = width_x; a-- > 0;) {
      for (std::size_t b = width_y; b-- > 0;) {
        BigInt& cell = grid[a * width_y + b];
        if (cell != 0) {
          r.terms_.push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
                              std::move(cell)});
        }
      }
    }
    return r;
  }
  TermMap acc;
  for (const auto& s : p.terms_) {
    for (const auto& t : q.terms_) {
      acc[{s.x_deg + t.x_deg, s.y_deg + t.y_deg}] += s.coeff * t.coeff;
    }
  }
  r.terms_ = from_map(std::move(acc));
  return r;
}

BivarPoly div_exact(const BivarPoly& p, const BivarPoly& d) {
  if (d.is_zero()) throw NotDivisible("division by the zero polynomial");
  if (p.is_zero()) return {};
  const Term& lead = d.terms().front();
  // An exact quotient has x- and y-degree bounded by the degree differences.
  const std::uint32_t d_ymax = d.max_y_degree();
  const std::uint32_t p_ymax = p.max_y_degree();
  if (p.max_x_degree() < lead.x_deg || p_ymax < d_ymax) {
    throw NotDivisible("divisor degree exceeds dividend degree");
  }
  const std::uint32_t q_ymax = p_ymax - d_ymax;

  TermMap rem;
  for (const auto& t : p.terms()) rem.emplace(std::pair{t.x_deg, t.y_deg}, t.coeff);
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto it = rem.begin();
    const auto [a, b] = it->first;
    if (a < lead.x_deg || b < lead.y_deg) {
      throw NotDivisible("leading monomial x^" + std::to_string(a) + "*y^" +
                         std::to_string(b) + " is not divisible");
    }
    if (!mpz_divisible_p(it->second.get_mpz_t(), lead.coeff.get_mpz_t())) {
      throw NotDivisible("leading coefficient is not divisible");
    }
    const BigInt c = it->second / lead.coeff;
    const std::uint32_t qa = a - lead.x_deg;
    const std::uint32_t qb = b - lead.y_deg;
    if (qb > q_ymax) throw NotDivisible("quotient y-degree exceeds bound");
    quotient.push_back({qa, qb, c});
    for (const auto& t : d.terms()) {
      auto key = std::pair{t.x_deg + qa, t.y_deg + qb};
      auto slot = rem.find(key);
      if (slot == rem.end()) {
        rem.emplace(key, -(c * t.coeff));
      } else {
        slot->second -= c * t.coeff;
        if (slot->second == 0) rem.erase(slot);
      }
    }
  }
  // Quotient terms were produced in strictly decreasing lex order.
  BivarPoly q = BivarPoly::from_terms(std::move(quotient));
  return q;
}

const BivarPoly& split_denominator() {
  static const BivarPoly d = BivarPoly::monomial(1, 1, 1) - BivarPoly::x() - BivarPoly::y();
  return d;
}

std::ostream& operator<<(std::ostream& os, const BivarPoly& p) { return os << p.to_text(); }

}  // namespace tutte
