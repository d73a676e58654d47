#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "skein/characters.hpp"
#include "skein/error.hpp"
#include "skein/hecke.hpp"
#include "skein/parallel.hpp"
#include "skein/schur.hpp"
#include "skein/serialize.hpp"
#include "skein/special.hpp"
#include "skein/torus.hpp"
#include "skein/verify.hpp"

using namespace skein;
using nlohmann::json;

namespace {

struct Options {
  unsigned threads = 0;
  bool json = false;

  int m = 1;
  int n = 0;
  int components = 1;
  std::string colors = "(1)";
  std::string color = "(1)";
  int size = 1;
  std::string kind = "H";
  std::string basis = "monomial";
  int strands = 2;
  std::string word;
  int max_strands = 8;
  int max_length = 64;
  std::string theorem = "all";
  std::string grid_file;
  bool timing = false;
  std::string out;
};

TorusLinkSpec torus_spec(const Options& o) {
  return TorusLinkSpec::torus(o.m, o.n, o.components, parse_partition_vector(o.colors));
}

int cmd_torus(const Options& o) {
  const auto inv = colored_homfly_torus(torus_spec(o));
  if (o.json) {
    std::cout << json{{"spec", inv.spec.to_string()}, {"value", to_json(inv.value)}}.dump() << '\n';
  } else {
    std::cout << inv.value.to_string() << '\n';
  }
  return 0;
}

int cmd_unknot(const Options& o) {
  const RationalQT v = unknot_value(Partition::parse(o.color));
  if (o.json) {
    std::cout << json{{"color", o.color}, {"value", to_json(v)}}.dump() << '\n';
  } else {
    std::cout << v.to_string() << '\n';
  }
  return 0;
}

std::string csv_field(const std::string& s) {
  return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
}

int cmd_characters(const Options& o) {
  const auto table = character_table(o.size);
  std::cout << "lambda\\mu";
  for (const auto& mu : table->partitions()) std::cout << ',' << csv_field(mu.to_string());
  std::cout << '\n';
  for (std::size_t i = 0; i < table->dim(); ++i) {
    std::cout << csv_field(table->partitions()[i].to_string());
    for (std::size_t j = 0; j < table->dim(); ++j) std::cout << ',' << table->at(i, j);
    std::cout << '\n';
  }
  return 0;
}

int cmd_plethysm(const Options& o) {
  const SchurExpansion e = plethysm_coefficients(o.m, parse_partition_vector(o.colors));
  if (o.json) {
    json j = json::object();
    for (auto it = e.coeffs.rbegin(); it != e.coeffs.rend(); ++it) j[it->first.to_string()] = it->second.get_str();
    std::cout << json{{"degree", e.degree}, {"coeffs", j}}.dump() << '\n';
  } else {
    std::cout << e.to_string();
  }
  return 0;
}

int cmd_special(const Options& o, bool link_colors) {
  const TorusLinkSpec spec = link_colors ? torus_spec(o) : TorusLinkSpec::knot(o.m, o.n, Partition::parse(o.color));
  SpecialPolynomial p;
  if (o.kind == "H") {
    p = special_H(spec);
  } else if (o.kind == "delta") {
    p = special_delta(spec);
  } else {
    throw Error(ErrorKind::Parse, "--kind must be H or delta");
  }
  std::string text = p.value.to_string();
  if (o.basis == "delta") {
    auto l = p.value.as_laurent();
    auto b = l ? format_delta_basis(*l) : std::nullopt;
    if (!b) throw Error(ErrorKind::Parse, "value is not a q-palindromic Laurent polynomial; no Delta_d form");
    text = *b;
  }
  if (o.json) {
    std::cout << json{{"kind", o.kind}, {"source", p.source}, {"text", text}, {"value", to_json(p.value)}}.dump()
              << '\n';
  } else {
    std::cout << text << '\n';
  }
  return 0;
}

int cmd_braid(const Options& o) {
  const BraidWord w = BraidWord::parse(o.strands, o.word);
  const HeckeLimits limits{o.max_strands, o.max_length};
  const RationalQT bracket = framed_homfly_of_closure(w, limits);
  const RationalQT p = normalized_homfly_of_closure(w, limits);
  if (o.json) {
    std::cout << json{{"word", w.to_string()},
                      {"strands", w.strands()},
                      {"writhe", w.writhe()},
                      {"components", w.components()},
                      {"linking_number", w.linking_number()},
                      {"bracket", to_json(bracket)},
                      {"P", to_json(p)}}
                     .dump()
              << '\n';
  } else {
    std::cout << "bracket: " << bracket.to_string() << '\n';
    std::cout << "writhe: " << w.writhe() << '\n';
    std::cout << "components: " << w.components() << '\n';
    std::cout << "linking_number: " << w.linking_number() << '\n';
    std::cout << "P: " << p.to_string() << '\n';
  }
  return 0;
}

int cmd_verify(const Options& o) {
  VerifyGrid grid;
  if (!o.grid_file.empty()) {
    std::ifstream in(o.grid_file);
    if (!in) throw Error(ErrorKind::Parse, "cannot open grid file " + o.grid_file);
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw Error(ErrorKind::Parse, std::string("grid file is not JSON: ") + e.what());
    }
    grid = VerifyGrid::from_json(j);
  }
  std::vector<std::string> ids;
  if (o.theorem == "all") {
    ids = theorem_ids();
  } else {
    ids.push_back(o.theorem);
  }
  bool ok = true;
  json all = json::array();
  for (const auto& id : ids) {
    const VerificationReport r = run_verification(id, grid);
    ok = ok && r.passed();
    if (o.json) {
      all.push_back(r.to_json(o.timing));
    } else {
      std::cout << r.to_text(o.timing);
    }
  }
  if (o.json) std::cout << (ids.size() == 1 ? all[0] : all).dump(2) << '\n';
  return ok ? 0 : 1;
}

int cmd_export(const Options& o) {
  const auto inv = colored_homfly_torus(torus_spec(o));
  const json doc{{"spec", inv.spec.to_string()}, {"value", to_json(inv.value)}};
  const std::string text = doc.dump(2) + "\n";
  if (!(rational_function_from_json(json::parse(text).at("value")) == inv.value)) {
    throw Error(ErrorKind::Parse, "JSON round trip changed the value");
  }
  if (o.out.empty() || o.out == "-") {
    std::cout << text;
  } else {
    std::ofstream f(o.out);
    if (!f) throw Error(ErrorKind::Parse, "cannot write " + o.out);
    f << text;
  }
  return 0;
}

void add_torus_options(CLI::App* sub, Options& o) {
  sub->add_option("--m", o.m, "strands per component bundle")->required();
  sub->add_option("--n", o.n, "twist")->required();
  sub->add_option("--components", o.components, "number of components L")->capture_default_str();
  sub->add_option("--colors", o.colors, "colors, e.g. \"(2);(1,1)\"")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colored HOMFLY polynomials of torus links"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--threads", o.threads, "worker threads (default: hardware parallelism)");
  app.add_flag("--json", o.json, "JSON output");

  auto* torus = app.add_subcommand("torus", "colored HOMFLY of T_{mL}^{nL}");
  add_torus_options(torus, o);
  torus->add_flag("--json", o.json, "JSON output");

  auto* unknot = app.add_subcommand("unknot", "colored unknot s*_lambda");
  unknot->add_option("--color", o.color, "partition, e.g. \"(2,1)\"")->required();
  unknot->add_flag("--json", o.json, "JSON output");

  auto* chars = app.add_subcommand("characters", "character table as CSV");
  chars->add_option("--n", o.size, "degree")->required();

  auto* pleth = app.add_subcommand("plethysm", "Schur expansion of prod s_A(x^m)");
  pleth->add_option("--m", o.m, "plethysm degree")->required();
  pleth->add_option("--colors", o.colors, "colors, e.g. \"(2);(1,1)\"")->required();
  pleth->add_flag("--json", o.json, "JSON output");

  auto* special = app.add_subcommand("special", "special polynomials H and Delta");
  special->add_option("--kind", o.kind, "H or delta")->check(CLI::IsMember({"H", "delta"}))->required();
  special->add_option("--m", o.m, "torus parameter m")->required();
  special->add_option("--n", o.n, "torus parameter n")->required();
  auto* color_opt = special->add_option("--color", o.color, "knot color")->capture_default_str();
  special->add_option("--components", o.components, "number of components L");
  auto* colors_opt = special->add_option("--colors", o.colors, "link colors, e.g. \"(1);(1)\"");
  color_opt->excludes(colors_opt);
  special->add_option("--basis", o.basis, "monomial or delta")->check(CLI::IsMember({"monomial", "delta"}));
  special->add_flag("--json", o.json, "JSON output");

  auto* braid = app.add_subcommand("homfly-braid", "HOMFLY of a braid closure via the Hecke algebra");
  braid->add_option("--strands", o.strands, "number of strands")->required();
  braid->add_option("--word", o.word, "\"s1 s2 s1^-1\" or \"1 2 -1\"")->required();
  braid->add_option("--max-strands", o.max_strands, "strand cap")->capture_default_str();
  braid->add_option("--max-length", o.max_length, "word length cap")->capture_default_str();
  braid->add_flag("--json", o.json, "JSON output");

  auto* verify = app.add_subcommand("verify", "run a theorem check over its grid");
  std::vector<std::string> choices = theorem_ids();
  choices.push_back("all");
  verify->add_option("--theorem", o.theorem, "theorem id or all")->check(CLI::IsMember(choices))->capture_default_str();
  verify->add_option("--grid", o.grid_file, "JSON grid override");
  verify->add_flag("--timing", o.timing, "include elapsed time");
  verify->add_flag("--json", o.json, "JSON report");

  auto* exp = app.add_subcommand("export", "write a torus invariant as JSON");
  add_torus_options(exp, o);
  exp->add_option("--out", o.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (o.threads > 0) set_default_threads(o.threads);

  try {
    if (*torus) return cmd_torus(o);
    if (*unknot) return cmd_unknot(o);
    if (*chars) return cmd_characters(o);
    if (*pleth) return cmd_plethysm(o);
    if (*special) return cmd_special(o, colors_opt->count() > 0);
    if (*braid) return cmd_braid(o);
    if (*verify) return cmd_verify(o);
    if (*exp) return cmd_export(o);
  } catch (const Error& e) {
    const bool usage = e.kind() == ErrorKind::Parse;
    if (o.json) {
      std::cerr << json{{"error", std::string(error_name(e.kind()))}, {"message", e.what()}}.dump() << '\n';
    } else {
      std::cerr << "error: " << e.what() << '\n';
    }
    return usage ? 2 : 1;
  }
  return 2;
}
