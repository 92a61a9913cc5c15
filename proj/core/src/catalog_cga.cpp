#include <map>
#include <sstream>

#include "catalog_internal.hpp"

namespace jetlie::catalog::detail {

namespace {

std::string pw(int k) { return "t^(" + std::to_string(k) + ")"; }

struct Gen {
  char kind;  // X, Y, R
  int level = 0;
  int j = 0, k = 0;  // 1-based components
  std::string name;
};

using Combo = std::map<std::string, int>;

std::string combo_text(const Combo& c) {
  std::string out;
  for (const auto& [g, v] : c) {
    if (v == 0) continue;
    if (out.empty())
      out += v < 0 ? "-" : "";
    else
      out += v < 0 ? " - " : " + ";
    int a = v < 0 ? -v : v;
    if (a != 1) out += std::to_string(a) + "*";
    out += g;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string level_name(char head, int n) {
  std::string s(1, head);
  return s + (n < 0 ? "m" + std::to_string(-n) : std::to_string(n));
}

std::string cga_text(const CgaText& spec, bool declare_space) {
  const auto& r = spec.space_coordinates;
  const auto& g = spec.phases;
  const std::size_t n_dim = r.size();
  std::ostringstream out;
  if (declare_space) {
    out << "space " << spec.space_name << " { independent t";
    for (const auto& c : r) out << ", " << c;
    for (const auto& c : g) out << ", " << c;
    out << ";";
    if (!spec.dependent.empty()) out << " dependent " << spec.dependent << ";";
    out << " order " << (spec.dependent.empty() ? 1 : 2) << " }\n";
  }
  std::vector<Gen> gens;
  auto name_of_y = [](int j, int n) {
    std::string s = "Y" + std::to_string(j);
    return s + (n < 0 ? "m" + std::to_string(-n) : std::to_string(n));
  };
  for (int n = spec.lowest; n <= spec.highest; ++n) gens.push_back({'X', n, 0, 0, level_name('X', n)});
  for (std::size_t j = 1; j <= n_dim; ++j)
    for (int n = spec.lowest; n <= spec.highest; ++n)
      gens.push_back({'Y', n, static_cast<int>(j), 0, name_of_y(static_cast<int>(j), n)});
  for (std::size_t j = 1; j <= n_dim; ++j)
    for (std::size_t k = j + 1; k <= n_dim; ++k)
      gens.push_back({'R', 0, static_cast<int>(j), static_cast<int>(k), "R" + std::to_string(j) + std::to_string(k)});

  for (const auto& G : gens) {
    out << "field " << G.name << " on " << spec.space_name << " = ";
    const int n = G.level;
    if (G.kind == 'X') {
      out << "-" << pw(n + 1) << "*@t";
      for (const auto& c : r) out << " - " << (n + 1) << "*" << pw(n) << "*" << c << "*@" << c;
      if (!g.empty()) {
        out << " + scalar(-lam*" << (n + 1) << "*" << pw(n) << " - " << n * (n + 1) << "*" << pw(n - 1) << "*(";
        for (std::size_t j = 0; j < n_dim; ++j) out << (j ? " + " : "") << g[j] << "*" << r[j];
        out << "))";
      }
    } else if (G.kind == 'Y') {
      out << "-" << pw(n + 1) << "*@" << r[G.j - 1];
      if (!g.empty()) out << " + scalar(-" << (n + 1) << "*" << pw(n) << "*" << g[G.j - 1] << ")";
    } else {
      const auto &rj = r[G.j - 1], &rk = r[G.k - 1];
      out << "-(" << rj << "*@" << rk << " - " << rk << "*@" << rj << ")";
      if (!g.empty()) {
        const auto &gj = g[G.j - 1], &gk = g[G.k - 1];
        out << " - (" << gj << "*@" << gk << " - " << gk << "*@" << gj << ")";
      }
    }
    out << ";\n";
  }

  auto in_range = [&](int k) { return k >= spec.lowest && k <= spec.highest; };
  auto find_y = [&](int j, int n) { return name_of_y(j, n); };
  auto rot = [&](int a, int b, Combo& acc, int sign) {
    if (a == b) return;
    if (a < b)
      acc["R" + std::to_string(a) + std::to_string(b)] += sign;
    else
      acc["R" + std::to_string(b) + std::to_string(a)] -= sign;
  };
  out << "table " << spec.space_name << "_table {\n";
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t l = i + 1; l < gens.size(); ++l) {
      const Gen& A = gens[i];
      const Gen& B = gens[l];
      Combo c;
      bool unchecked = false;
      if (A.kind == 'X' && (B.kind == 'X' || B.kind == 'Y')) {
        int n = A.level, m = B.level;
        if (n != m) {
          if (in_range(n + m))
            c[B.kind == 'X' ? level_name('X', n + m) : find_y(B.j, n + m)] = n - m;
          else
            unchecked = true;
        }
      } else if (A.kind == 'Y' && B.kind == 'R') {
        // [Y^l, R^jk] = -(delta_jl Y^k - delta_kl Y^j)
        if (B.j == A.j) c[find_y(B.k, A.level)] -= 1;
        if (B.k == A.j) c[find_y(B.j, A.level)] += 1;
      } else if (A.kind == 'R' && B.kind == 'R') {
        int j = A.j, k = A.k, p = B.j, m = B.k;
        if (j == p) rot(k, m, c, 1);
        if (j == m) rot(k, p, c, -1);
        if (k == p) rot(j, m, c, -1);
        if (k == m) rot(j, p, c, 1);
      }
      if (unchecked)
        out << "  [" << A.name << ", " << B.name << "] = unchecked;\n";
      else if (combo_text(c) != "0")
        out << "  [" << A.name << ", " << B.name << "] = " << combo_text(c) << ";\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace jetlie::catalog::detail
