// Transports reflection subgroups across Langlands duality: prints the dual
// datum and level, where each generator lands, and a few elements carried
// over with their lengths intact.

#include "weylkit/duality.hpp"

#include <iostream>
#include <string>

using namespace wk;

namespace {

void show(const std::string& type, const std::string& level_text) {
  RootDatum rd = RootDatum::parse(type);
  AffineWeyl aw(rd);
  Level level = parse_level(rd, level_text);
  LevelDuality dual(aw, level);
  const AffineWeyl& dw = dual.dual_weyl();

  std::cout << "== " << type << " at level " << level_string(rd, level)
            << "  ->  " << dual.dual_datum().type_string() << " at level "
            << level_string(dual.dual_datum(), dual.dual_level()) << "\n";

  std::cout << "generators:\n";
  for (int g = 0; g < dual.source().num_generators(); ++g)
    std::cout << "  [" << g << "] " << aw.str(dual.source().generator(g))
              << "  ->  [" << dual.generator_image(g) << "] "
              << dw.str(dual.map(dual.source().generator(g))) << "\n";

  std::cout << "ball of radius 2:\n";
  for (const auto& x : dual.source().ball(2))
    std::cout << "  " << aw.str(x) << "  ->  " << dw.str(dual.map(x))
              << "  (len " << dual.source().length(x) << " both sides)\n";

  CoxeterIsoReport report = verify_coxeter_iso(aw, level, 3);
  std::cout << "coxeter isomorphism on the radius-3 ball: "
            << (report.ok ? "verified" : "FAILED") << "\n\n";
}

}  // namespace

int main() {
  show("A1", "-h-1/3");
  show("B2", "-h-1/2");
  show("G2", "-h+2/5");
  show("A2", "irr");
  return 0;
}
