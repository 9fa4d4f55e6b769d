// Command line surface over the library: every module reachable as a
// subcommand, with human-readable tables by default and --json for the
// machine form. Exit codes: 0 success (and MATCH verdicts), 1 a checked
// claim failed, 2 usage error, 3 the computation could not conclude
// (domain obstruction, or the ball exceeds --cap).

#include "weylkit/json_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

using namespace wk;

namespace {

std::string int_set(const std::vector<int>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + "}";
}

std::string int_tuple(const VecI& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

void print_matrix(const MatI& m, const std::string& indent) {
  for (int i = 0; i < m.rows(); ++i) {
    std::cout << indent;
    for (int j = 0; j < m.cols(); ++j) std::cout << (j ? " " : "") << m(i, j);
    std::cout << "\n";
  }
}

void emit(const OJson& doc) { std::cout << doc.dump(2) << "\n"; }

// Shared --cap guard: the ball is the unit of work for the heavy
// subcommands, and an over-cap ball means no verdict, not a verdict.
bool over_cap(const AffineWeyl& aw, Int bound, Int cap) {
  std::size_t n = aw.ball(bound).size();
  if (n <= static_cast<std::size_t>(cap)) return false;
  std::cerr << "inconclusive: ball of radius " << bound << " has " << n
            << " elements, over the cap " << cap << "\n";
  return true;
}

int cmd_rootdata(const std::string& type, bool json) {
  RootDatum rd = RootDatum::parse(type);
  if (json) {
    emit(rootdata_json(rd));
    return 0;
  }
  std::cout << "type " << rd.type_string() << "  rank " << rd.rank()
            << "  positive roots " << rd.num_positive() << "\n";
  for (std::size_t f = 0; f < rd.num_factors(); ++f) {
    std::cout << "factor " << f << ": " << type_string({rd.factor(f)});
    if (!rd.factor(f).torus)
      std::cout << "  h_dual " << rd.dual_coxeter_number(f) << "  lacing "
                << rd.lacing(f) << "  bad primes " << bad_prime_product(rd, f)
                << "  marks " << int_tuple(rd.marks(f)) << "  comarks "
                << int_tuple(rd.comarks(f));
    std::cout << "\n";
  }
  std::cout << "cartan:\n";
  print_matrix(rd.cartan(), "  ");
  std::cout << "rho " << int_tuple(rd.rho()) << "\n";
  return 0;
}

int cmd_dual_level(const std::string& type, const std::string& level_text,
                   bool json) {
  RootDatum rd = RootDatum::parse(type);
  AffineWeyl aw(rd);
  Level level = parse_level(rd, level_text);
  LevelDuality dual(aw, level);
  if (json) {
    emit(dual_level_json(aw, level, dual));
    return 0;
  }
  std::cout << rd.type_string() << " at " << level_string(rd, level) << "  ->  "
            << dual.dual_datum().type_string() << " at "
            << level_string(dual.dual_datum(), dual.dual_level()) << "\n";
  std::cout << "generators:";
  for (int g = 0; g < dual.source().num_generators(); ++g)
    std::cout << (g ? ", " : " ") << g << " -> " << dual.generator_image(g);
  std::cout << "\n";
  return 0;
}

int cmd_good(const std::string& type, const std::string& level_text, bool json) {
  RootDatum rd = RootDatum::parse(type);
  Level level = parse_level(rd, level_text);
  GoodnessReport report = good_level_certificate(rd, level);
  if (json) {
    emit(goodness_json(rd, level, report));
  } else {
    std::cout << rd.type_string() << " at " << level_string(rd, level) << ": "
              << (report.good ? "good" : "not good")
              << (report.decided ? "" : " (undecided)") << "\n";
    for (const FaceReport& face : report.faces) {
      std::cout << "  factor " << face.factor << " face "
                << int_set(face.parabolic) << ": ";
      if (face.status == FaceStatus::witnessed)
        std::cout << "witnessed, scale " << face.scale << ", shift "
                  << face.shift << "\n";
      else if (face.status == FaceStatus::impossible)
        std::cout << "impossible: " << face.note << "\n";
      else
        std::cout << "inconclusive\n";
    }
  }
  return report.decided ? 0 : 3;
}

int cmd_intweyl(const std::string& type, const std::string& level_text,
                bool json) {
  RootDatum rd = RootDatum::parse(type);
  AffineWeyl aw(rd);
  Level level = parse_level(rd, level_text);
  IntegralWeyl iw(aw, level);
  if (json) {
    emit(intweyl_json(aw, level, iw));
    return 0;
  }
  std::cout << rd.type_string() << " at " << level_string(rd, level) << ": "
            << iw.num_generators() << " generators\n";
  for (int g = 0; g < iw.num_generators(); ++g)
    std::cout << "  [" << g << "] " << aw.str(iw.generator(g))
              << (iw.is_affine_node(g) ? "  (affine node)" : "") << "\n";
  int n = iw.num_generators();
  MatI cox(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cox(i, j) = detail::generator_pair_order(iw, i, j);
  std::cout << "coxeter matrix (0 = infinite):\n";
  print_matrix(cox, "  ");
  return 0;
}

int cmd_blocks(const std::string& type, const std::string& level_text, Int bound,
               Int cap, bool json) {
  RootDatum rd = RootDatum::parse(type);
  AffineWeyl aw(rd);
  Level level = parse_level(rd, level_text);
  if (over_cap(aw, bound, cap)) return 3;
  IntegralWeyl iw(aw, level);
  std::vector<BlockDescriptor> blocks = enumerate_blocks(iw, bound);
  if (json) {
    emit(blocks_json(aw, level, bound, blocks));
    return 0;
  }
  std::cout << rd.type_string() << " at " << level_string(rd, level)
            << ", ball of radius " << bound << ": " << blocks.size()
            << " windows\n";
  for (const BlockDescriptor& b : blocks)
    std::cout << "  label " << int_tuple(b.weight) << "  min "
              << aw.str(b.minimal_element) << "  stab " << int_set(b.stabilizer)
              << "  size " << b.coset_window.size() << "\n";
  return 0;
}

int cmd_match(const std::string& type, const std::string& level_text, Int bound,
              Int cap, bool json) {
  RootDatum rd = RootDatum::parse(type);
  AffineWeyl aw(rd);
  Level level = parse_level(rd, level_text);
  if (over_cap(aw, bound, cap)) return 3;
  BlockMatchReport report = match_blocks(aw, level, bound);
  if (json) {
    emit(match_json(aw, level, bound, report));
  } else {
    std::cout << rd.type_string() << " at " << level_string(rd, level)
              << ", ball of radius " << bound << ": " << report.entries.size()
              << " windows\n";
    for (const BlockMatchEntry& e : report.entries)
      std::cout << "  label " << int_tuple(e.weight) << "  stab "
                << int_set(e.window_stabilizer) << " -> dual "
                << int_set(e.dual_stabilizer)
                << (e.antidominant ? "" : "  NOT ANTIDOMINANT")
                << (e.match ? "  MATCH" : "  MISMATCH") << "\n";
    std::cout << (report.all_match ? "MATCH" : "MISMATCH") << "\n";
  }
  return report.all_match ? 0 : 1;
}

int cmd_verify_duality(const std::string& type, const std::string& level_text,
                       Int bound, Int cap, bool json) {
  RootDatum rd = RootDatum::parse(type);
  AffineWeyl aw(rd);
  Level level = parse_level(rd, level_text);
  if (over_cap(aw, bound, cap)) return 3;
  LevelDuality dual(aw, level);
  CoxeterIsoReport report = verify_coxeter_iso(aw, level, bound);
  if (json) {
    emit(coxeter_iso_json(aw, level, dual, report));
  } else {
    std::cout << rd.type_string() << " at " << level_string(rd, level)
              << "  ->  " << dual.dual_datum().type_string() << " at "
              << level_string(dual.dual_datum(), dual.dual_level()) << "\n";
    std::cout << "generators " << (report.generators_match ? "ok" : "FAIL")
              << ", coxeter matrix " << (report.coxeter_equal ? "ok" : "FAIL")
              << ", lattice basis " << (report.lattice_basis_match ? "ok" : "FAIL")
              << ", ball " << report.ball_radius << " bijection "
              << (report.ball_bijection ? "ok" : "FAIL") << ", lengths "
              << (report.lengths_match ? "ok" : "FAIL") << "\n";
    std::cout << (report.ok ? "MATCH" : "MISMATCH") << "\n";
  }
  return report.ok ? 0 : 1;
}

int cmd_parahoric(const std::string& type, const std::vector<int>& levi,
                  Int bound, Int cap, bool json) {
  RootDatum rd = RootDatum::parse(type);
  AffineWeyl aw(rd);
  if (over_cap(aw, bound, cap)) return 3;
  ParahoricReport report = parahoric_subset_check(aw, levi, bound);
  if (json) {
    emit(parahoric_json(aw, levi, bound, report));
  } else {
    std::cout << rd.type_string() << " levi " << int_set(levi) << " bound "
              << bound << ": " << report.via_descents.size()
              << " double coset minima, three characterizations "
              << (report.equal ? "coincide" : "DIFFER") << ", "
              << report.tied_cosets.size() << " tied cosets\n";
  }
  return report.equal ? 0 : 1;
}

// Tokens like "-h-1/3" following a value flag would otherwise be sniffed as
// option clusters; gluing them onto the flag keeps the grammar unambiguous.
std::vector<std::string> glue_value_flags(int argc, char** argv) {
  const std::vector<std::string> taking = {"--type",  "--level", "--levi",
                                           "--bound", "--cap",   "--config",
                                           "--rank"};
  std::vector<std::string> out;
  for (int i = 1; i < argc; ++i) {
    std::string tok = argv[i];
    bool takes = false;
    for (const std::string& f : taking) takes = takes || tok == f;
    if (takes && i + 1 < argc) {
      out.push_back(tok + "=" + argv[++i]);
    } else {
      out.push_back(std::move(tok));
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics of affine Weyl groups at a level"};
  app.set_help_flag("--help", "print usage");
  app.set_config("--config", "", "key=value file with default bounds");
  app.require_subcommand(1);

  std::string type, level_text;
  std::vector<int> levi;
  Int bound = 8, cap = 1000000;
  bool json = false;

  auto add_common = [&](CLI::App* sub, bool with_level) {
    sub->add_option("--type", type, "root datum type, e.g. A2 or B2xT1")
        ->required();
    if (with_level)
      sub->add_option("--level", level_text,
                      "level per factor: -h+p/q, -h-p/q, irr, or a plain "
                      "rational for torus factors")
          ->required();
    sub->add_flag("--json", json, "machine output");
  };
  auto add_bounds = [&](CLI::App* sub) {
    sub->add_option("--bound", bound, "ball radius")->capture_default_str();
    sub->add_option("--cap", cap, "largest ball worth enumerating")
        ->capture_default_str();
  };

  CLI::App* c_root = app.add_subcommand("rootdata", "describe a root datum");
  std::string letter;
  Int rank = -1;
  c_root->add_option("type", letter, "type letter (A-G) or full type string")
      ->required();
  c_root->add_option("rank", rank, "rank, when the first argument is a letter");
  c_root->add_flag("--json", json, "machine output");

  CLI::App* c_dual = app.add_subcommand("dual-level", "dual datum and level");
  add_common(c_dual, true);

  CLI::App* c_good = app.add_subcommand("good", "goodness certificate");
  add_common(c_good, true);

  CLI::App* c_int = app.add_subcommand("intweyl", "integral Weyl generators");
  add_common(c_int, true);

  CLI::App* c_blocks = app.add_subcommand("blocks", "window decomposition");
  add_common(c_blocks, true);
  add_bounds(c_blocks);

  CLI::App* c_match = app.add_subcommand("match", "stabilizer match across duality");
  add_common(c_match, true);
  add_bounds(c_match);

  CLI::App* c_verify =
      app.add_subcommand("verify-duality", "two-sided Coxeter isomorphism check");
  add_common(c_verify, true);
  add_bounds(c_verify);

  CLI::App* c_para = app.add_subcommand("parahoric", "double coset characterizations");
  c_para->add_option("--type", type, "root datum type")->required();
  c_para->add_option("--levi", levi, "finite generator indices")->delimiter(',');
  c_para->add_flag("--json", json, "machine output");
  add_bounds(c_para);

  std::vector<std::string> args = glue_value_flags(argc, argv);
  std::reverse(args.begin(), args.end());  // the vector overload wants it reversed
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "usage error: " << e.what() << "\n";
    std::cerr << "run with --help for the grammar\n";
    return 2;
  }

  try {
    if (app.got_subcommand(c_root)) {
      std::string full = letter;
      if (c_root->count("rank")) full += std::to_string(rank);
      return cmd_rootdata(full, json);
    }
    if (app.got_subcommand(c_dual)) return cmd_dual_level(type, level_text, json);
    if (app.got_subcommand(c_good)) return cmd_good(type, level_text, json);
    if (app.got_subcommand(c_int)) return cmd_intweyl(type, level_text, json);
    if (app.got_subcommand(c_blocks))
      return cmd_blocks(type, level_text, bound, cap, json);
    if (app.got_subcommand(c_match))
      return cmd_match(type, level_text, bound, cap, json);
    if (app.got_subcommand(c_verify))
      return cmd_verify_duality(type, level_text, bound, cap, json);
    if (app.got_subcommand(c_para))
      return cmd_parahoric(type, levi, bound, cap, json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "no verdict: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
