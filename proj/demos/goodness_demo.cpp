// Surveys which negative rational levels are good, then walks one full
// certificate: every alcove face either yields an antidominant weight with
// that exact dot stabilizer or is ruled out by a congruence.

#include "weylkit/goodness.hpp"

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

std::string gen_set(const std::vector<int>& gens) {
  std::string out = "{";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(gens[i]);
  }
  return out + "}";
}

void survey(const std::string& type) {
  RootDatum rd = RootDatum::parse(type);
  std::cout << type << "  (obstruction primes divide " << bad_prime_product(rd, 0)
            << "):  good q in 1..12:";
  for (Int q = 1; q <= 12; ++q) {
    Level level = parse_level(rd, "-h-1/" + std::to_string(q));
    if (is_good(rd, level)) std::cout << " " << q;
  }
  std::cout << "\n";
}

void certificate(const std::string& type, const std::string& level_text) {
  RootDatum rd = RootDatum::parse(type);
  Level level = parse_level(rd, level_text);
  GoodnessReport report = good_level_certificate(rd, level);
  std::cout << "== " << type << " at level " << level_string(rd, level) << ": "
            << (report.good ? "good" : "not good") << "\n";
  for (const auto& face : report.faces) {
    std::cout << "  stabilizer " << gen_set(face.parabolic);
    if (face.status == FaceStatus::witnessed)
      std::cout << "  weight " << weight_str(face.weight) << " after shift by "
                << face.shift << "\n";
    else
      std::cout << "  impossible: " << face.note << "\n";
  }
}

}  // namespace

int main() {
  for (const char* type : {"A1", "A2", "B2", "G2", "C3", "D4", "F4", "E8"})
    survey(type);
  std::cout << "\n";

  certificate("B2", "-h-1/2");
  certificate("B2", "-h-1/3");
  std::cout << "\n";

  // ask for one stabilizer directly
  RootDatum g2 = RootDatum::parse("G2");
  AffineWeyl aw(g2);
  Level level = parse_level(g2, "-h-1/5");
  IntegralWeyl iw(aw, level);
  StabilizerWitness w = antidominant_weight_with_stabilizer(iw, {0, 2});
  std::cout << "G2 at " << level_string(g2, level) << ", stabilizer {0,2}: weight "
            << weight_str(w.weight) << " at shifted level "
            << level_string(g2, w.shifted) << "\n";
  return 0;
}
