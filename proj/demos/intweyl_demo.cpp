// Walks the reflection subgroup attached to a level: prints the extra
// affine generator, the first few elements by subgroup length, and a dot
// orbit folded back to its antidominant representative.

#include "weylkit/integral_weyl.hpp"

#include <iostream>
#include <string>

using namespace wk;

namespace {

std::string weight_str(const VecQ& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_string(v[i]);
  }
  return out + ")";
}

void show(const std::string& type, const std::string& level_text) {
  RootDatum rd = RootDatum::parse(type);
  AffineWeyl aw(rd);
  Level level = parse_level(rd, level_text);
  IntegralWeyl iw(aw, level);

  std::cout << "== " << type << " at level " << level_string(rd, level) << "\n";
  std::cout << "generators:";
  for (int g = 0; g < iw.num_generators(); ++g) {
    std::cout << "  [" << g << "] " << aw.str(iw.generator(g));
    if (iw.is_affine_node(g))
      std::cout << (iw.node_kind(g) == AffineNodeKind::long_root ? " (long node)"
                                                                 : " (short node)");
  }
  std::cout << "\n";

  std::cout << "ball of radius 3:\n";
  for (const auto& x : iw.ball(3)) {
    std::cout << "  len " << iw.length(x) << "  " << aw.str(x) << "  word [";
    bool first = true;
    for (int g : iw.word(x)) {
      if (!first) std::cout << " ";
      first = false;
      std::cout << g;
    }
    std::cout << "]\n";
  }

  if (classify_offset(level.offset[0]) == LevelSign::negative &&
      level.offset[0].is_rational()) {
    VecQ lam(rd.rank(), Rat(0));
    std::cout << "dot orbit of " << weight_str(lam) << ":\n";
    for (const auto& x : iw.ball(2))
      std::cout << "  " << aw.str(x) << " . lam = "
                << weight_str(dot_act(aw, level, x, lam))
                << (is_antidominant(iw, dot_act(aw, level, x, lam)) ? "  <- antidominant"
                                                                    : "")
                << "\n";
  }
  std::cout << "\n";
}

}  // namespace

int main() {
  show("A1", "-h-1/3");
  show("B2", "-h-1/2");
  show("G2", "-h-1/3");
  show("A2", "irr");
  return 0;
}
