#pragma once

// Cartan matrices of the finite series and type-string parsing.
//
// Convention: cartan(i, j) = <alpha_j, alphacheck_i>. Column j is then the
// fundamental-weight coordinate vector of the simple root alpha_j, and row i
// the fundamental-coweight coordinate vector of the simple coroot
// alphacheck_i. Everything downstream assumes exactly this pairing layout.

#include "weylkit/matrix.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace wk {

enum class Series : char {
  A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G',
};

struct SimpleType {
  Series series;
  int rank;
  bool operator==(const SimpleType&) const = default;
};

inline bool valid_rank(Series s, int n) {
  switch (s) {
    case Series::A: return n >= 1;
    case Series::B: return n >= 2;  // B1 is A1; require the honest rank
    case Series::C: return n >= 2;
    case Series::D: return n >= 3;  // D3 is A3 with the fork labeling
    case Series::E: return n >= 6 && n <= 8;
    case Series::F: return n == 4;
    case Series::G: return n == 2;
  }
  return false;
}

// Short simple roots: B_n has alpha_n short, C_n has alpha_1..alpha_{n-1}
// short, F4 has alpha_3, alpha_4 short, G2 has alpha_1 short. The double
// (triple) edge entry -2 (-3) sits in the SHORT root's row: for adjacent
// short alpha_i and long alpha_j, <alpha_j, alphacheck_i> = -r.
inline MatI cartan_matrix(SimpleType t) {
  if (!valid_rank(t.series, t.rank))
    throw std::invalid_argument("invalid rank for series");
  const int n = t.rank;
  MatI a(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = 2;
  auto at = [&](int i, int j) -> Int& { return a(i - 1, j - 1); };  // 1-based
  auto edge = [&](int i, int j) { at(i, j) = -1; at(j, i) = -1; };
  auto chain = [&](int upto) {
    for (int i = 1; i < upto; ++i) edge(i, i + 1);
  };
  switch (t.series) {
    case Series::A:
      chain(n);
      break;
    case Series::B:
      chain(n);
      at(n, n - 1) = -2;  // alpha_n short
      break;
    case Series::C:
      chain(n);
      at(n - 1, n) = -2;  // alpha_n long
      break;
    case Series::D:
      chain(n - 1);
      edge(n - 2, n);
      break;
    case Series::E:
      edge(1, 3);
      for (int i = 3; i < n; ++i) edge(i, i + 1);
      edge(2, 4);
      break;
    case Series::F:
      chain(4);
      at(3, 2) = -2;  // alpha_3 short, alpha_2 long
      break;
    case Series::G:
      edge(1, 2);
      at(1, 2) = -3;  // alpha_1 short
      break;
  }
  return a;
}

// |W| by the classical product formulas.
inline BigInt weyl_order(SimpleType t) {
  auto factorial = [](int k) {
    BigInt f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  const int n = t.rank;
  switch (t.series) {
    case Series::A: return factorial(n + 1);
    case Series::B:
    case Series::C: return factorial(n) << n;
    case Series::D: return factorial(n) << (n - 1);
    case Series::E:
      if (n == 6) return 51840;
      if (n == 7) return 2903040;
      return BigInt(696729600);
    case Series::F: return 1152;
    case Series::G: return 12;
  }
  throw std::logic_error("unreachable");
}

struct FactorSpec {
  bool torus = false;
  SimpleType type{Series::A, 1};  // ignored for torus factors
  int torus_rank = 0;
  int rank() const { return torus ? torus_rank : type.rank; }
  bool operator==(const FactorSpec&) const = default;
};

// "A2", "B3xA1", "A1xT2xG2". Factor order is preserved everywhere.
inline std::vector<FactorSpec> parse_type_string(const std::string& s) {
  std::vector<FactorSpec> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[pos])));
    ++pos;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("missing rank in type string: " + s);
    int rank = std::stoi(s.substr(start, pos - start));
    FactorSpec f;
    if (c == 'T') {
      if (rank < 1) throw std::invalid_argument("torus rank must be positive");
      f.torus = true;
      f.torus_rank = rank;
    } else if (c >= 'A' && c <= 'G') {
      f.type = SimpleType{static_cast<Series>(c), rank};
      if (!valid_rank(f.type.series, rank))
        throw std::invalid_argument("invalid type " + std::string(1, c) + std::to_string(rank));
    } else {
      throw std::invalid_argument("unknown series letter in type string: " + s);
    }
    out.push_back(f);
    if (pos < s.size()) {
      if (s[pos] != 'x' && s[pos] != 'X')
        throw std::invalid_argument("expected 'x' between factors: " + s);
      ++pos;
      if (pos == s.size()) throw std::invalid_argument("trailing 'x' in type string: " + s);
    }
  }
  if (out.empty()) throw std::invalid_argument("empty type string");
  return out;
}

inline std::string factor_name(const FactorSpec& f) {
  if (f.torus) return "T" + std::to_string(f.torus_rank);
  return std::string(1, static_cast<char>(f.type.series)) + std::to_string(f.type.rank);
}

inline std::string type_string(const std::vector<FactorSpec>& fs) {
  std::string out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) out += 'x';
    out += factor_name(fs[i]);
  }
  return out;
}

}  // namespace wk
