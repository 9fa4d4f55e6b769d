// Walks a few root data through level parsing, duality, and the integral
// translation lattice, printing everything it derives. Build target:
// level_demo.

#include "weylkit/level.hpp"

#include <iostream>

using namespace wk;

namespace {

void show(const std::string& type, const std::string& level_text) {
  RootDatum rd = RootDatum::parse(type);
  Level lv = parse_level(rd, level_text);
  std::cout << type << " at " << level_string(rd, lv) << "\n";
  std::cout << "  factors " << rd.num_factors() << ", rank " << rd.rank()
            << ", positive roots " << rd.num_positive() << "\n";
  for (std::size_t f = 0; f < rd.num_factors(); ++f) {
    if (rd.factor(f).torus) continue;
    std::cout << "  factor " << f << ": h = " << rd.coxeter_number(f)
              << ", h-dual = " << rd.dual_coxeter_number(f)
              << ", lacing = " << rd.lacing(f)
              << ", sign = "
              << (classify_offset(lv.offset[f]) == LevelSign::positive   ? "positive"
                  : classify_offset(lv.offset[f]) == LevelSign::critical ? "critical"
                                                                         : "negative")
              << "\n";
  }

  bool critical = false;
  for (std::size_t f = 0; f < rd.num_factors(); ++f)
    critical = critical || (!rd.factor(f).torus && is_critical(lv, f));
  if (critical) {
    std::cout << "  dual level: none (critical)\n";
  } else {
    RootDatum dual_rd = rd.langlands_dual();
    Level dual = dual_level(rd, lv);
    std::cout << "  dual datum " << dual_rd.type_string() << " at "
              << level_string(dual_rd, dual) << "\n";
  }

  TranslationLattice lat = integral_translation_lattice(rd, lv);
  std::cout << "  translation lattice coefficients:";
  for (Int c : lat.coeff) std::cout << ' ' << c;
  if (lat.index)
    std::cout << "  (index " << *lat.index << ")";
  else
    std::cout << "  (infinite index)";
  std::cout << "\n\n";
}

}  // namespace

int main() {
  show("A1", "-h-1/3");
  show("G2", "-h+2/5");
  show("B2", "-h-1/2");
  show("C3", "-h+1/6");
  show("A1xT1", "-h-1/3,5");
  show("A2", "-h");
  show("G2", "irr");
  return 0;
}
