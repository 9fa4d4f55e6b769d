#pragma once

// Levels as per-factor offsets from the critical point.
//
// A level on a product datum assigns each non-torus factor a scalar nu with
// kappa = kappa_critical + nu * kappa_basic on that factor, and each torus
// factor a scalar multiplying the factor's Gram. Offsets are ExactScalar,
// so generic non-rational levels (c * xi^e) flow through every computation
// symbolically instead of via floating point.
//
// Text forms, one per factor, comma-separated:
//   "-h"        critical
//   "-h+p/q"    rational offset p/q from critical (also "-h-p/q")
//   "p/q", "n"  absolute level: offset = value + dual Coxeter number
//   "irr"       the generic irrational offset xi
// Torus factors take "p/q" or "irr" directly as the scalar (no "-h" forms).

#include "weylkit/root_datum.hpp"
#include "weylkit/scalar.hpp"

#include <cctype>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace wk {

using VecX = std::vector<ExactScalar>;

inline VecX to_exact(const VecQ& v) { return {v.begin(), v.end()}; }
inline VecX to_exact(const VecI& v) {
  VecX out;
  out.reserve(v.size());
  for (Int x : v) out.emplace_back(Rat(x));
  return out;
}

enum class LevelSign { positive, critical, negative };

struct Level {
  std::vector<ExactScalar> offset;  // one per factor, factor order
};

struct RationalOffset {
  Int p = 0, q = 1;  // offset p/q, q > 0, gcd(|p|, q) = 1
};

inline RationalOffset rational_offset(const Level& level, std::size_t f) {
  const ExactScalar& o = level.offset.at(f);
  if (!o.is_rational())
    throw std::domain_error("level offset is not rational on factor " + std::to_string(f));
  RationalOffset out;
  out.p = to_int_checked(num(o.rational_part()));
  out.q = to_int_checked(den(o.rational_part()));
  return out;
}

// Sign classification drives which dominance chamber the rest of the
// library works in. Non-rational offsets never hit a wall, and every
// algorithm here treats them with the negative-level conventions.
inline LevelSign classify_offset(const ExactScalar& o) {
  if (o.is_zero()) return LevelSign::critical;
  if (o.is_rational() && o.rational_part() > 0) return LevelSign::positive;
  return LevelSign::negative;
}

inline bool is_critical(const Level& level, std::size_t f) {
  return classify_offset(level.offset.at(f)) == LevelSign::critical;
}

inline void validate_level(const RootDatum& rd, const Level& level) {
  if (level.offset.size() != rd.num_factors())
    throw std::invalid_argument("level needs one offset per factor");
  for (std::size_t f = 0; f < rd.num_factors(); ++f)
    if (rd.factor(f).torus && level.offset[f].is_zero())
      throw std::invalid_argument("torus level must be nondegenerate");
}

// -- parsing -----------------------------------------------------------------

inline ExactScalar parse_offset_token(const RootDatum& rd, std::size_t f, const std::string& tok) {
  auto parse_rational = [](const std::string& s) -> Rat {
    // strict [-]digits[/digits] shape; the big-integer parser is too lax
    auto digits = [&s](std::size_t from, std::size_t to) {
      if (from >= to) return false;
      for (std::size_t i = from; i < to; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
      return true;
    };
    std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    std::size_t slash = s.find('/', start);
    bool ok;
    if (slash == std::string::npos) {
      ok = digits(start, s.size());
    } else {
      ok = digits(start, slash) && digits(slash + 1, s.size()) &&
           s.find_first_not_of('0', slash + 1) != std::string::npos;
    }
    if (!ok) throw std::invalid_argument("bad level token: " + s);
    return Rat(s);
  };
  // "irr" is the generic offset from the critical point
  if (tok == "irr") return ExactScalar::xi_power(Rat(1), 1);
  if (tok == "-irr") return ExactScalar::xi_power(Rat(-1), 1);
  if (rd.factor(f).torus) {
    if (tok.rfind("-h", 0) == 0)
      throw std::invalid_argument("torus factors have no critical level shift");
    return ExactScalar(parse_rational(tok));
  }
  if (tok == "-h") return ExactScalar(Rat(0));
  if (tok.rfind("-h+", 0) == 0) return ExactScalar(parse_rational(tok.substr(3)));
  if (tok.rfind("-h-", 0) == 0) return ExactScalar(-parse_rational(tok.substr(3)));
  // absolute rational level: shift by the dual Coxeter number
  return ExactScalar(parse_rational(tok) + rd.dual_coxeter_number(f));
}

inline Level parse_level(const RootDatum& rd, const std::string& text) {
  std::vector<std::string> toks;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    toks.push_back(comma == std::string::npos ? text.substr(pos)
                                              : text.substr(pos, comma - pos));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  for (const auto& t : toks)
    if (t.empty()) throw std::invalid_argument("empty level token");
  if (toks.size() != 1 && toks.size() != rd.num_factors())
    throw std::invalid_argument("level needs one token per factor of " + rd.type_string());
  Level out;
  for (std::size_t f = 0; f < rd.num_factors(); ++f)
    out.offset.push_back(parse_offset_token(rd, f, toks.size() == 1 ? toks[0] : toks[f]));
  validate_level(rd, out);
  return out;
}

inline std::string offset_string(const RootDatum& rd, const Level& level, std::size_t f) {
  const ExactScalar& o = level.offset.at(f);
  if (o == ExactScalar::xi_power(Rat(1), 1)) return "irr";
  if (o == ExactScalar::xi_power(Rat(-1), 1)) return "-irr";
  if (rd.factor(f).torus) return o.str();
  if (o.is_zero()) return "-h";
  if (o.is_rational() && o.rational_part() < 0) return "-h-" + (-o).str();
  return "-h+" + o.str();
}

inline std::string level_string(const RootDatum& rd, const Level& level) {
  std::string out;
  for (std::size_t f = 0; f < rd.num_factors(); ++f) {
    if (f) out += ',';
    out += offset_string(rd, level, f);
  }
  return out;
}

// -- duality -----------------------------------------------------------------

// Offset map underlying the level correspondence: nu maps to 1/(r * nu)
// factor-wise, where r is the lacing number. Torus scalars invert (their
// Gram inverts with the dual datum, so the form maps to its inverse form).
// Critical offsets have no dual.
inline Level dual_level(const RootDatum& rd, const Level& level) {
  validate_level(rd, level);
  Level out;
  for (std::size_t f = 0; f < rd.num_factors(); ++f) {
    const ExactScalar& o = level.offset[f];
    if (rd.factor(f).torus) {
      out.offset.push_back(o.inverse());
      continue;
    }
    if (o.is_zero()) throw std::domain_error("critical level has no dual");
    out.offset.push_back((o * ExactScalar(Rat(rd.lacing(f)))).inverse());
  }
  return out;
}

// -- forms attached to a level ------------------------------------------------

// Gram of kappa - kappa_critical on coweights (rational offsets only).
inline MatQ shifted_gram(const RootDatum& rd, const Level& level) {
  validate_level(rd, level);
  MatQ out(rd.rank(), rd.rank());
  const MatQ& basic = rd.basic_gram();
  for (std::size_t f = 0; f < rd.num_factors(); ++f) {
    const ExactScalar& o = level.offset[f];
    if (!o.is_rational())
      throw std::domain_error("gram of a non-rational level is not a rational matrix");
    int base = rd.factor_offset(f);
    for (int i = 0; i < rd.factor(f).rank(); ++i)
      for (int j = 0; j < rd.factor(f).rank(); ++j)
        out(base + i, base + j) = o.rational_part() * basic(base + i, base + j);
  }
  return out;
}

// Gram of the absolute form kappa = kappa_c + offset * kappa_b.
inline MatQ level_gram(const RootDatum& rd, const Level& level) {
  MatQ out = shifted_gram(rd, level);
  const MatQ& basic = rd.basic_gram();
  for (std::size_t f = 0; f < rd.num_factors(); ++f) {
    if (rd.factor(f).torus) continue;
    int base = rd.factor_offset(f);
    for (int i = 0; i < rd.factor(f).rank(); ++i)
      for (int j = 0; j < rd.factor(f).rank(); ++j)
        out(base + i, base + j) -= Rat(rd.dual_coxeter_number(f)) * basic(base + i, base + j);
  }
  return out;
}

// (kappa - kappa_c)(cowt) as a weight, fundamental-weight coordinates,
// ExactScalar entries so irrational offsets stay symbolic.
inline VecX shifted_pairing_weight(const RootDatum& rd, const Level& level, const VecQ& cowt) {
  validate_level(rd, level);
  VecQ mapped = rd.basic_pairing_map(cowt);
  VecX out(rd.rank(), ExactScalar(Rat(0)));
  for (int c = 0; c < rd.rank(); ++c)
    out[c] = level.offset[rd.factor_of_coord(c)] * ExactScalar(mapped[c]);
  return out;
}
inline VecX shifted_pairing_weight(const RootDatum& rd, const Level& level, const VecI& cowt) {
  return shifted_pairing_weight(rd, level, to_rational(cowt));
}

// (kappa - kappa_c)(betacheck, betacheck) / 2 = offset * d_beta.
inline ExactScalar shifted_half_norm(const RootDatum& rd, const Level& level, int root_idx) {
  const Root& r = rd.root(root_idx);
  return level.offset.at(r.factor) * ExactScalar(Rat(r.d));
}

// -- integral translations -----------------------------------------------------

// The lattice of translations by which the level-integral affine reflections
// generate: diagonal in the simple coroots, coefficient q / gcd(q, d_k) per
// node for offset p/q. Non-rational offsets admit only the zero translation
// in their factor; coefficient 0 encodes that.
struct TranslationLattice {
  VecI coeff;  // per semisimple node
  std::optional<BigInt> index;  // [full coroot lattice : this], if finite
};

inline TranslationLattice integral_translation_lattice(const RootDatum& rd, const Level& level) {
  validate_level(rd, level);
  TranslationLattice out;
  out.coeff.assign(rd.ss_rank(), 0);
  BigInt index = 1;
  bool finite = true;
  for (int k = 0; k < rd.ss_rank(); ++k) {
    std::size_t f = rd.ss_factor(k);
    const ExactScalar& o = level.offset[f];
    if (!o.is_rational()) {
      out.coeff[k] = 0;
      finite = false;
      continue;
    }
    Int q = to_int_checked(den(o.rational_part()));
    Int c = q / std::gcd(q, rd.simple_d(k));
    out.coeff[k] = c;
    index *= c;
  }
  if (finite) out.index = index;
  return out;
}

// Membership: expand over the simple coroots and test divisibility.
inline bool lattice_contains(const RootDatum& rd, const TranslationLattice& lat,
                             const VecI& cowt) {
  // torus coordinates must vanish: translations live in the coroot lattice
  for (int c = 0; c < rd.rank(); ++c)
    if (rd.coord_ss(c) < 0 && cowt[c] != 0) return false;
  // solve cartan^T y = restriction of cowt
  VecQ rhs(rd.ss_rank());
  for (int k = 0; k < rd.ss_rank(); ++k) rhs[k] = cowt[rd.ss_coord(k)];
  VecQ y = rd.cartan_inverse().transposed() * rhs;
  for (int k = 0; k < rd.ss_rank(); ++k) {
    if (!is_integer(y[k])) return false;
    Int yk = to_int_checked(y[k]);
    if (lat.coeff[k] == 0) {
      if (yk != 0) return false;
    } else if (yk % lat.coeff[k] != 0) {
      return false;
    }
  }
  return true;
}

// Coroot-lattice coordinates of a coweight, when defined.
inline std::optional<VecI> coroot_coordinates(const RootDatum& rd, const VecI& cowt) {
  for (int c = 0; c < rd.rank(); ++c)
    if (rd.coord_ss(c) < 0 && cowt[c] != 0) return std::nullopt;
  VecQ rhs(rd.ss_rank());
  for (int k = 0; k < rd.ss_rank(); ++k) rhs[k] = cowt[rd.ss_coord(k)];
  VecQ y = rd.cartan_inverse().transposed() * rhs;
  if (!is_integral(y)) return std::nullopt;
  return to_integral(y);
}

}  // namespace wk
