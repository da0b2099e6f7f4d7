#include "isodouble/homogeneous_table.hpp"

#include <array>
#include <cctype>
#include <cstdio>
#include <map>
#include <sstream>

namespace isodouble {
namespace {

using Params = std::map<char, int>;

// Text columns use {expr} for parameter-dependent integers, expr being
// [coef]var[+-const] or a bare variable.
struct Entry {
  int g;
  const char* mult;
  const char* pair;
  const char* k0;
  const char* kp;
  const char* km;
  const char* range;
  std::optional<Params> (*match)(int a, int b);
};

int eval(const std::string& e, const Params& p) {
  std::size_t i = 0;
  int coef = 1;
  if (std::isdigit(static_cast<unsigned char>(e[i]))) {
    coef = 0;
    while (i < e.size() && std::isdigit(static_cast<unsigned char>(e[i])))
      coef = coef * 10 + (e[i++] - '0');
  }
  const int v = p.at(e[i++]);
  int c = 0;
  if (i < e.size()) {
    const int sign = e[i++] == '-' ? -1 : 1;
    c = sign * std::stoi(e.substr(i));
  }
  return coef * v + c;
}

std::string render(const char* tmpl, const Params* p) {
  std::string out;
  for (const char* s = tmpl; *s; ++s) {
    if (*s != '{') {
      out += *s;
      continue;
    }
    std::string expr;
    for (++s; *s && *s != '}'; ++s) expr += *s;
    out += p ? std::to_string(eval(expr, *p)) : expr;
  }
  return out;
}

std::optional<Params> fixed(int a, int b, int wa, int wb) {
  if (a == wa && b == wb) return Params{};
  return std::nullopt;
}

const std::array<Entry, 14> kTable{{
    {1, "({n-1}, {n-1})", "(S¹×SO({n+1}), SO({n}))", "SO({n-1})", "SO({n})", "SO({n})", "n ≥ 2",
     [](int a, int b) -> std::optional<Params> {
       if (a == b && a >= 1) return Params{{'n', a + 1}};
       return std::nullopt;
     }},
    {2, "({p}, {q})", "(SO({p+2})×SO({q+2}), SO({p+1})×SO({q+1}))", "SO({p})×SO({q})",
     "SO({p+1})×SO({q})", "SO({p})×SO({q+1})", "p, q ≥ 1",
     [](int a, int b) -> std::optional<Params> {
       if (a >= 1 && b >= 1) return Params{{'p', a}, {'q', b}};
       return std::nullopt;
     }},
    {3, "(1, 1)", "(SU(3), SO(3))", "Z₂+Z₂", "S(O(2)×O(1))", "S(O(1)×O(2))", "",
     [](int a, int b) { return fixed(a, b, 1, 1); }},
    {3, "(2, 2)", "(SU(3)×SU(3), SU(3))", "T²", "S(U(2)×U(1))", "S(U(1)×U(2))", "",
     [](int a, int b) { return fixed(a, b, 2, 2); }},
    {3, "(4, 4)", "(SU(6), Sp(3))", "Sp(1)³", "Sp(2)×Sp(1)", "Sp(2)×Sp(1)", "",
     [](int a, int b) { return fixed(a, b, 4, 4); }},
    {3, "(8, 8)", "(E₆, F₄)", "Spin(8)", "Spin(9)", "Spin(9)", "",
     [](int a, int b) { return fixed(a, b, 8, 8); }},
    {4, "(2, 2)", "(SO(5)×SO(5), SO(5))", "T²", "SO(2)×SO(3)", "U(2)", "",
     [](int a, int b) { return fixed(a, b, 2, 2); }},
    {4, "(4, 5)", "(SO(10), U(5))", "SU(2)²×U(1)", "Sp(2)×U(1)", "SU(2)×U(3)", "",
     [](int a, int b) { return fixed(a, b, 4, 5); }},
    {4, "(6, 9)", "(E₆, T·Spin(10))", "U(1)·Spin(6)", "U(1)·Spin(7)", "S¹·SU(5)", "",
     [](int a, int b) { return fixed(a, b, 6, 9); }},
    {4, "(1, {m-2})", "(SO({m+2}), SO({m})×SO(2))", "SO({m-2})×Z₂", "SO({m-2})×SO(2)", "O({m-1})",
     "m ≥ 3",
     [](int a, int b) -> std::optional<Params> {
       if (a == 1 && b >= 1) return Params{{'m', b + 2}};
       return std::nullopt;
     }},
    {4, "(2, {2m-3})", "(SU({m+2}), S(U({m})×U(2)))", "S(U({m-2})×T²)", "S(U({m-2})×U(2))",
     "S(U({m-1})×T²)", "m ≥ 3",
     [](int a, int b) -> std::optional<Params> {
       if (a == 2 && b >= 3 && b % 2 == 1) return Params{{'m', (b + 3) / 2}};
       return std::nullopt;
     }},
    {4, "(4, {4m-5})", "(Sp({m+2}), Sp({m})×Sp(2))", "Sp({m-2})×Sp(1)²", "Sp({m-2})×Sp(2)",
     "Sp({m-1})×Sp(1)²", "m ≥ 2",
     [](int a, int b) -> std::optional<Params> {
       if (a == 4 && b >= 3 && (b + 5) % 4 == 0) return Params{{'m', (b + 5) / 4}};
       return std::nullopt;
     }},
    {6, "(1, 1)", "(G₂, SO(4))", "Z₂+Z₂", "O(2)", "O(2)", "",
     [](int a, int b) { return fixed(a, b, 1, 1); }},
    {6, "(2, 2)", "(G₂×G₂, G₂)", "T²", "U(2)", "U(2)", "",
     [](int a, int b) { return fixed(a, b, 2, 2); }},
}};

HomogeneousRow make_row(const Entry& e, const Params* p) {
  HomogeneousRow r;
  r.g = e.g;
  r.multiplicities = render(e.mult, p);
  r.symmetric_pair = render(e.pair, p);
  r.K0 = render(e.k0, p);
  r.K_plus = render(e.kp, p);
  r.K_minus = render(e.km, p);
  r.parameter_range = e.range;
  return r;
}

const std::vector<HomogeneousRow>& symbolic_rows() {
  static const std::vector<HomogeneousRow> rows = [] {
    std::vector<HomogeneousRow> out;
    for (const auto& e : kTable) out.push_back(make_row(e, nullptr));
    return out;
  }();
  return rows;
}

// Multiplicities of the k-th admissible instance (k = 0, 1, ...).
std::pair<int, int> instance(std::size_t index, int k) {
  switch (index) {
    case 0: return {1 + k, 1 + k};
    case 1: return {1 + k % 3, 1 + k / 3};
    case 9: return {1, 1 + k};
    case 10: return {2, 3 + 2 * k};
    case 11: return {4, 3 + 4 * k};
    default: {
      // Fixed row: read the literal multiplicities.
      int a = 0, b = 0;
      std::sscanf(kTable[index].mult, "(%d, %d)", &a, &b);
      return {a, b};
    }
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::span<const HomogeneousRow> homogeneous_table() { return symbolic_rows(); }

std::vector<HomogeneousRow> homogeneous_rows(std::optional<int> g) {
  std::vector<HomogeneousRow> out;
  for (const auto& r : symbolic_rows())
    if (!g || r.g == *g) out.push_back(r);
  return out;
}

std::optional<HomogeneousRow> homogeneous_lookup(int g, int m_plus, int m_minus) {
  for (const auto& e : kTable) {
    if (e.g != g) continue;
    if (auto p = e.match(m_plus, m_minus)) {
      HomogeneousRow r = make_row(e, &*p);
      r.m_plus = m_plus;
      r.m_minus = m_minus;
      return r;
    }
  }
  return std::nullopt;
}

std::vector<HomogeneousRow> homogeneous_instances(std::size_t index, int count) {
  std::vector<HomogeneousRow> out;
  if (index >= kTable.size()) return out;
  const bool fixed_row = symbolic_rows()[index].parameter_range.empty();
  for (int k = 0; k < (fixed_row ? 1 : count); ++k) {
    const auto [a, b] = instance(index, k);
    const auto& e = kTable[index];
    auto p = e.match(a, b);
    HomogeneousRow r = make_row(e, &*p);
    r.m_plus = a;
    r.m_minus = b;
    out.push_back(r);
  }
  return out;
}

std::vector<HomogeneousRow> homogeneous_instances() {
  std::vector<HomogeneousRow> out;
  for (std::size_t i = 0; i < kTable.size(); ++i) out.push_back(homogeneous_instances(i, 1).front());
  return out;
}

std::string homogeneous_csv(const std::vector<HomogeneousRow>& rows) {
  std::ostringstream os;
  os << "g,(m+,m-),(U,K),K0,K+,K-\n";
  for (const auto& r : rows)
    os << r.g << ',' << csv_field(r.multiplicities) << ',' << csv_field(r.symmetric_pair) << ','
       << csv_field(r.K0) << ',' << csv_field(r.K_plus) << ',' << csv_field(r.K_minus) << '\n';
  return os.str();
}

}  // namespace isodouble
