// Command-line front end: validate category files, run the subdivision and
// comparison checks at the requested level, close seeds, enumerate polygons,
// drive the counterexample search, and test the extension property.
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or input error.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "segal/catfile.hpp"
#include "segal/fixtures.hpp"
#include "segal/polygon.hpp"
#include "segal/report.hpp"
#include "segal/scat.hpp"
#include "segal/search.hpp"
#include "segal/segal_maps.hpp"

namespace {

using namespace segal;

struct Loaded {
  ParsedCategory parsed;
  std::string digest;
};

Loaded load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  Loaded out;
  try {
    out.parsed = parse_category(buf.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
  out.digest = fnv1a_hex(buf.str());
  return out;
}

int finish(const Report& rep, const std::string& out_path) {
  std::fputs(rep.human().c_str(), stdout);
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw InputError(out_path + ": cannot open for writing");
    out << rep.json();
  }
  return rep.pass() ? 0 : 1;
}

void report_validation(Report& rep, const std::string& check, const ValidationReport& v) {
  if (v.violations.empty()) {
    rep.row(check + " (" + v.mode + ")", true);
  } else {
    for (const std::string& msg : v.violations) rep.row(check, false, msg);
  }
  for (const std::string& c : v.caveats) rep.caveats.push_back(check + ": " + c);
}

std::string diagonal_string(const Subdivision& s) {
  std::ostringstream out;
  auto ds = diagonals_of(s);
  if (ds.empty()) return "trivial";
  for (size_t i = 0; i < ds.size(); ++i)
    out << (i ? " " : "") << ds[i].first << "-" << ds[i].second;
  return out.str();
}

int cmd_validate(const std::string& file, bool bounded, const std::string& out_path) {
  Loaded in = load(file);
  Report rep;
  rep.command = "validate";
  rep.input_digest = in.digest;
  rep.param("file", file);
  rep.param("bounded", bounded ? "true" : "false");
  report_validation(rep, "category axioms", validate_category(*in.parsed.cof.base));
  if (in.parsed.fibration_mode) {
    FibStructure fib;
    fib.base = in.parsed.cof.base;
    fib.zero = in.parsed.cof.zero;
    fib.fibrations = in.parsed.cof.cofibrations;
    report_validation(rep, "fibration axioms", validate_fib(fib, bounded));
  } else {
    report_validation(rep, "cofibration axioms", validate_cof(in.parsed.cof, bounded));
  }
  if (in.parsed.has_weq)
    report_validation(rep, "weak equivalence axioms", validate_wald(in.parsed.wald, bounded));
  return finish(rep, out_path);
}

void verdict_rows(Report& rep, const std::string& mode,
                  const std::vector<VerdictEntry>& entries) {
  for (const VerdictEntry& e : entries) {
    std::string name = mode + " n=" + std::to_string(e.n) +
                       (mode == "upper" || mode == "lower" ? " i=" : " j=") +
                       std::to_string(e.idx);
    rep.row(name, !e.defined || e.ok, e.defined ? "" : "outside truncation");
  }
}

int cmd_check(const std::string& file, int max_level, const std::string& mode,
              const std::string& variant, const std::string& out_path) {
  Loaded in = load(file);
  Report rep;
  rep.command = "check";
  rep.input_digest = in.digest;
  rep.param("file", file);
  rep.param("max-level", std::to_string(max_level));
  rep.param("mode", mode);
  rep.param("variant", variant);

  if (variant != "iso-set") {
    if (mode != "left")
      throw CLI::ValidationError("--variant " + variant + " supports --mode left only");
    const WaldStructure* w = in.parsed.has_weq ? &in.parsed.wald : nullptr;
    for (const CatSegalVerdict& v :
         check_categorical_2segal(in.parsed.cof, max_level, variant, w)) {
      std::string name =
          variant + " n=" + std::to_string(v.n) + " j=" + std::to_string(v.j);
      std::string witness;
      if (v.defined && !v.ok()) {
        if (!v.isofib)
          witness = "restriction leg not an isofibration";
        else
          witness = std::string("comparison not an equivalence:") +
                    (v.equiv.ess_surj ? "" : " ess-surj") + (v.equiv.full ? "" : " full") +
                    (v.equiv.faithful ? "" : " faithful");
      }
      rep.row(name, v.ok(), witness);
    }
    return finish(rep, out_path);
  }

  IsoSDot iso = iso_s_dot(in.parsed.cof, max_level);
  {
    std::ostringstream ls;
    for (size_t n = 0; n < iso.x.level_sizes.size(); ++n)
      ls << (n ? " " : "") << iso.x.level_sizes[n];
    rep.param("level-sizes", ls.str());
  }
  if (mode == "left" || mode == "reduced") verdict_rows(rep, "left", check_left(iso.x));
  if (mode == "right" || mode == "reduced") verdict_rows(rep, "right", check_right(iso.x));
  if (mode == "upper") verdict_rows(rep, "upper", check_upper(iso.x));
  if (mode == "lower") verdict_rows(rep, "lower", check_lower(iso.x));
  if (mode == "all-subdivisions") {
    for (int n = 2; n <= max_level; ++n) {
      for (const Subdivision& s : enumerate_subdivisions(n)) {
        SegalMapResult r = two_segal_map(iso.x, s);
        std::string witness;
        if (!r.bijective())
          witness = "domain " + std::to_string(r.domain_size) + ", limit " +
                    std::to_string(r.limit_size) + (r.injective ? "" : ", collision") +
                    (r.surjective ? "" : ", unreachable tuple");
        rep.row("P_" + std::to_string(n) + " " + diagonal_string(s), r.bijective(),
                witness);
      }
    }
  }
  if (rep.rows.empty()) throw CLI::ValidationError("unknown --mode " + mode);
  return finish(rep, out_path);
}

int cmd_closure(const std::string& file, const std::vector<std::string>& seed_names,
                const std::string& out_path) {
  Loaded in = load(file);
  const FinCategory& cat = *in.parsed.cof.base;
  Seed seed;
  seed.objects.push_back(in.parsed.cof.zero);
  for (const std::string& name : seed_names) {
    Obj found = kNone;
    for (Obj x = 0; x < cat.n_objects(); ++x)
      if (cat.object_name(x) == name) found = x;
    if (found == kNone) throw InputError("seed object '" + name + "' not in input");
    if (found != in.parsed.cof.zero) seed.objects.push_back(found);
  }
  for (Obj x : seed.objects)
    for (Obj y : seed.objects)
      for (Mor m : cat.hom(x, y)) seed.morphisms.push_back(m);
  GeneratedSubcategory g = generate_subcategory(in.parsed.cof, seed);

  Report rep;
  rep.command = "closure";
  rep.input_digest = in.digest;
  rep.param("file", file);
  {
    std::ostringstream names;
    for (size_t i = 0; i < seed_names.size(); ++i)
      names << (i ? " " : "") << seed_names[i];
    rep.param("seed-objects", names.str());
  }
  rep.row("closure generated", true,
          std::to_string(g.sub.base->n_objects()) + " objects, " +
              std::to_string(g.sub.base->n_morphisms()) + " morphisms");
  int rc = finish(rep, out_path);
  std::fputs(emit_category(g.sub).c_str(), stdout);
  return rc;
}

int cmd_polygons(int n, bool triangulations_only, const std::string& out_path) {
  if (n < 2) throw CLI::ValidationError("--n must be at least 2");
  Report rep;
  rep.command = "polygons";
  rep.param("n", std::to_string(n));
  rep.param("triangulations-only", triangulations_only ? "true" : "false");
  std::vector<Subdivision> subs =
      triangulations_only ? enumerate_triangulations(n) : enumerate_subdivisions(n);
  int triangulations = 0;
  for (const Subdivision& s : subs) {
    bool tri = is_triangulation(s);
    triangulations += tri;
    const char* cls = nullptr;
    switch (classify_subdivision(s)) {
      case SubdivisionClass::left: cls = "left"; break;
      case SubdivisionClass::right: cls = "right"; break;
      case SubdivisionClass::both: cls = "both"; break;
      case SubdivisionClass::neither: cls = "neither"; break;
    }
    rep.row(diagonal_string(s), true,
            std::string(tri ? "triangulation" : "subdivision") + ", " + cls);
  }
  rep.row("count", true,
          std::to_string(subs.size()) + " listed, " + std::to_string(triangulations) +
              " triangulations");
  return finish(rep, out_path);
}

int cmd_search(const std::string& config_path, std::uint64_t seed_flag, bool seed_set,
               const std::string& out_path) {
  std::ifstream in(config_path, std::ios::binary);
  if (!in) throw InputError(config_path + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  SearchConfig cfg;
  try {
    nlohmann::json j = nlohmann::json::parse(buf.str());
    cfg.seed = j.value("seed", std::uint64_t{0});
    for (const auto& f : j.value("fixtures", nlohmann::json::array()))
      cfg.fixtures.push_back(f.get<std::string>());
    cfg.random_trials = j.value("random_trials", 0);
    cfg.ambient = j.value("ambient", cfg.ambient);
    cfg.max_objects = j.value("max_objects", cfg.max_objects);
    cfg.max_level = j.value("max_level", cfg.max_level);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(config_path + ": " + e.what());
  }
  if (seed_set) cfg.seed = seed_flag;
  if (cfg.fixtures.empty() && cfg.random_trials == 0)
    throw CLI::ValidationError("search config names no fixtures and no random trials");

  SearchReport sr = counterexample_search(cfg);
  Report rep;
  rep.command = "search";
  rep.input_digest = fnv1a_hex(buf.str());
  rep.param("config", config_path);
  rep.param("seed", std::to_string(cfg.seed));
  rep.param("ambient", cfg.ambient);
  rep.param("max-level", std::to_string(cfg.max_level));
  for (const SearchTrial& t : sr.trials) {
    std::ostringstream name;
    name << t.source;
    if (t.source == "random") name << " seed=" << t.trial_seed;
    std::ostringstream detail;
    if (t.counterexample) {
      detail << t.detail;
    } else {
      detail << t.n_objects << " objects, " << t.triangulations_checked
             << " triangulations checked";
    }
    rep.row(name.str(), !t.counterexample, detail.str());
  }
  rep.row("counterexamples", sr.counterexamples == 0, std::to_string(sr.counterexamples));
  return finish(rep, out_path);
}

int cmd_sufficiency(const std::string& file, bool strict, const std::string& out_path) {
  Loaded in = load(file);
  Report rep;
  rep.command = "sufficiency";
  rep.input_digest = in.digest;
  rep.param("file", file);
  rep.param("bounded", strict ? "false" : "true");
  ExtensionReport er = check_extension_property(in.parsed.cof, !strict);
  rep.row("extension property (" + er.mode + ")", er.pass,
          er.pass ? std::to_string(er.configurations) + " configurations, " +
                        std::to_string(er.witnesses.size()) + " witnesses"
                  : er.failure);
  return finish(rep, out_path);
}

int cmd_fixture(const std::string& name, bool weq) {
  CofStructure s = fixture_by_name(name);
  if (weq) {
    WaldStructure w = with_iso_weq(s);
    std::fputs(emit_category(s, &w).c_str(), stdout);
  } else {
    std::fputs(emit_category(s).c_str(), stdout);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-Segal comparison checks for finite categories with cofibrations"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  app.add_option("--out", out_path, "write the machine-readable report here");
  std::uint64_t seed = 0;
  CLI::Option* seed_opt = app.add_option("--seed", seed, "64-bit seed, default 0");

  std::string file, mode = "left", variant = "iso-set", config_path, fixture_name;
  int max_level = 4, poly_n = 3;
  bool bounded = false, strict = false, tri_only = false, weq = false;
  std::vector<std::string> seed_objects;

  CLI::App* validate = app.add_subcommand("validate", "check the category file axioms");
  validate->add_option("file", file)->required();
  validate->add_flag("--bounded", bounded, "demote missing pushouts to caveats");

  CLI::App* check = app.add_subcommand("check", "run the subdivision comparison maps");
  check->add_option("file", file)->required();
  check->add_option("--max-level", max_level, "top simplicial level, default 4");
  check->add_option("--mode", mode)
      ->check(CLI::IsMember({"left", "right", "all-subdivisions", "upper", "lower",
                             "reduced"}));
  check->add_option("--variant", variant)
      ->check(CLI::IsMember({"iso-set", "groupoid", "category", "w-category"}));

  CLI::App* closure = app.add_subcommand("closure", "emit the generated subcategory");
  closure->add_option("file", file)->required();
  closure->add_option("--seed-objects", seed_objects, "object ids to close over");

  CLI::App* polygons = app.add_subcommand("polygons", "list polygonal subdivisions");
  polygons->add_option("--n", poly_n)->required();
  polygons->add_flag("--triangulations-only", tri_only);

  CLI::App* search = app.add_subcommand("search", "hunt for non-bijective maps");
  search->add_option("--config", config_path)->required();

  CLI::App* sufficiency = app.add_subcommand("sufficiency", "extension property check");
  sufficiency->add_option("file", file)->required();
  sufficiency->add_flag("--strict", strict, "require every pushout to exist");

  CLI::App* fixture = app.add_subcommand("fixture", "print a built-in category file");
  fixture->add_option("name", fixture_name, "Z, PS2, PS3, or PS2xPS2")->required();
  fixture->add_flag("--weq", weq, "include the isomorphisms as WEQ");

  try {
    app.parse(argc, argv);
    if (validate->parsed()) return cmd_validate(file, bounded, out_path);
    if (check->parsed()) return cmd_check(file, max_level, mode, variant, out_path);
    if (closure->parsed()) return cmd_closure(file, seed_objects, out_path);
    if (polygons->parsed()) return cmd_polygons(poly_n, tri_only, out_path);
    if (search->parsed())
      return cmd_search(config_path, seed, seed_opt->count() > 0, out_path);
    if (sufficiency->parsed()) return cmd_sufficiency(file, strict, out_path);
    if (fixture->parsed()) return cmd_fixture(fixture_name, weq);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const segal::InputError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 2;
  }
  return 2;
}
