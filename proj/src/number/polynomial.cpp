#include "qll/number/polynomial.hpp"

#include <charconv>

namespace qll {

std::string Indeterminate::name() const {
  switch (kind) {
    case Kind::epsilon:
      return "eps";
    case Kind::lambda:
      return "lambda_" + std::to_string(index);
    case Kind::coeff:
      return "c_" + std::to_string(index);
  }
  return "?";
}

namespace {

std::uint64_t parse_index(const std::string& text, std::size_t from) {
  std::uint64_t v = 0;
  const char* first = text.data() + from;
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) throw std::invalid_argument("bad indeterminate '" + text + "'");
  return v;
}

}  // namespace

Indeterminate Indeterminate::parse(const std::string& text) {
  if (text == "eps" || text == "epsilon") return epsilon();
  if (text.rfind("lambda_", 0) == 0) return lambda(parse_index(text, 7));
  if (text.rfind("c_", 0) == 0) return coeff(parse_index(text, 2));
  throw std::invalid_argument("bad indeterminate '" + text + "'");
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  auto push = [&out](const Indeterminate& x, unsigned e) {
    if (x.kind == Indeterminate::Kind::epsilon) e %= 2;
    if (e) out.emplace_back(x, e);
  };
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      push(i->first, i->second);
      ++i;
    } else if (i == a.end() || j->first < i->first) {
      push(j->first, j->second);
      ++j;
    } else {
      push(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

std::string monomial_to_string(const Monomial& m) {
  if (m.empty()) return "1";
  std::string out;
  for (const auto& [x, e] : m) {
    if (!out.empty()) out += "*";
    out += x.name();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string to_string(const SymbolicValue& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : v.terms()) {
    if (!out.empty()) out += " + ";
    const bool compound = c.terms().size() > 1;
    std::string cs = c.to_string();
    if (m.empty()) {
      out += compound ? "(" + cs + ")" : cs;
    } else {
      if (cs != "1") out += (compound ? "(" + cs + ")" : cs) + "*";
      out += monomial_to_string(m);
    }
  }
  return out;
}

AlgebraicReal substitute(const SymbolicValue& expr, const std::map<Indeterminate, AlgebraicReal>& bindings) {
  auto it = bindings.find(Indeterminate::epsilon());
  if (it != bindings.end()) {
    const auto& e = it->second;
    if (!(e == AlgebraicReal(1) || e == AlgebraicReal(-1))) throw std::invalid_argument("eps must be bound to +1 or -1");
  }
  return expr.substitute(bindings);
}

}  // namespace qll
