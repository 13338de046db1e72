#include "segal/catfile.hpp"

#include <array>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace segal {
namespace {

struct Decl {
  // raw declarations collected before the category is built
  std::vector<std::string> objects;
  struct MorDecl {
    std::string id, src, tgt;
  };
  std::vector<MorDecl> morphisms;
  std::vector<std::array<std::string, 3>> compose;  // g f gf
  std::string zero;
  std::vector<std::string> cof;
  std::vector<std::string> weq;
  bool fibration_mode = false;
  bool has_weq = false;
};

[[noreturn]] void fail(int line, const std::string& msg) {
  throw InputError("line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line.substr(0, line.find('#')));
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

Decl parse_text(const std::string& text) {
  Decl d;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool header_seen = false;
  std::string section;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> tok = tokens(line);
    if (tok.empty()) continue;
    if (!header_seen) {
      if (tok.size() != 2 || tok[0] != "segal-lab-category" || tok[1] != "v1")
        fail(lineno, "expected header 'segal-lab-category v1'");
      header_seen = true;
      continue;
    }
    if (tok.size() == 1 &&
        (tok[0] == "OBJECTS" || tok[0] == "MORPHISMS" || tok[0] == "COMPOSE" ||
         tok[0] == "ZERO" || tok[0] == "COFIBRATIONS" || tok[0] == "FIBRATIONS" ||
         tok[0] == "WEQ")) {
      section = tok[0];
      if (section == "FIBRATIONS") d.fibration_mode = true;
      if (section == "WEQ") d.has_weq = true;
      continue;
    }
    if (section.empty()) fail(lineno, "entry before any section header");
    if (section == "OBJECTS") {
      if (tok.size() > 2) fail(lineno, "object entry is 'id [rank]'");
      if (tok.size() == 2 && tok[1].find_first_not_of("0123456789") != std::string::npos)
        fail(lineno, "size rank must be a nonnegative integer");
      d.objects.push_back(tok[0]);
    } else if (section == "MORPHISMS") {
      if (tok.size() != 3) fail(lineno, "morphism entry is 'id src tgt'");
      d.morphisms.push_back({tok[0], tok[1], tok[2]});
    } else if (section == "COMPOSE") {
      if (tok.size() != 3) fail(lineno, "compose entry is 'g f gf'");
      d.compose.push_back({tok[0], tok[1], tok[2]});
    } else if (section == "ZERO") {
      if (tok.size() != 1 || !d.zero.empty()) fail(lineno, "ZERO takes a single id");
      d.zero = tok[0];
    } else {
      auto& dst = section == "WEQ" ? d.weq : d.cof;
      dst.insert(dst.end(), tok.begin(), tok.end());
    }
  }
  if (!header_seen) throw InputError("empty input, expected 'segal-lab-category v1'");
  if (d.zero.empty()) throw InputError("missing ZERO section");
  return d;
}

Decl parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("json parse error: ") + e.what());
  }
  try {
    Decl d;
    if (j.value("format", "") != "segal-lab-category v1")
      throw InputError("json field 'format' must be 'segal-lab-category v1'");
    for (const auto& o : j.at("objects")) d.objects.push_back(o.get<std::string>());
    for (const auto& m : j.at("morphisms"))
      d.morphisms.push_back({m.at("id").get<std::string>(), m.at("src").get<std::string>(),
                             m.at("tgt").get<std::string>()});
    for (const auto& c : j.value("compose", nlohmann::json::array()))
      d.compose.push_back({c.at(0).get<std::string>(), c.at(1).get<std::string>(),
                           c.at(2).get<std::string>()});
    d.zero = j.at("zero").get<std::string>();
    const char* cof_key = j.contains("fibrations") ? "fibrations" : "cofibrations";
    d.fibration_mode = j.contains("fibrations");
    for (const auto& f : j.value(cof_key, nlohmann::json::array()))
      d.cof.push_back(f.get<std::string>());
    if (j.contains("weq")) {
      d.has_weq = true;
      for (const auto& f : j.at("weq")) d.weq.push_back(f.get<std::string>());
    }
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("json schema error: ") + e.what());
  }
}

ParsedCategory build(const Decl& d) {
  std::map<std::string, Obj> objs;
  std::map<std::string, Mor> mors;
  FinCategoryBuilder b;
  for (const std::string& id : d.objects) {
    if (!objs.emplace(id, b.n_objects()).second)
      throw InputError("duplicate object id '" + id + "'");
    b.add_object(id);
  }
  auto obj = [&](const std::string& id) {
    auto it = objs.find(id);
    if (it == objs.end()) throw InputError("unknown object id '" + id + "'");
    return it->second;
  };
  for (const auto& m : d.morphisms) {
    if (objs.count(m.id) || !mors.emplace(m.id, static_cast<Mor>(mors.size())).second)
      throw InputError("duplicate id '" + m.id + "'");
    b.add_morphism(obj(m.src), obj(m.tgt), m.id);
  }
  auto mor = [&](const std::string& id) {
    auto it = mors.find(id);
    if (it == mors.end()) throw InputError("unknown morphism id '" + id + "'");
    return it->second;
  };
  std::map<std::pair<Mor, Mor>, Mor> table;
  std::vector<Obj> msrc, mtgt;
  for (const auto& m : d.morphisms) {
    msrc.push_back(obj(m.src));
    mtgt.push_back(obj(m.tgt));
  }
  for (const auto& c : d.compose) {
    Mor g = mor(c[0]), f = mor(c[1]), gf = mor(c[2]);
    b.set_compose(g, f, gf);
    table[{g, f}] = gf;
  }

  // recover identities: the endomorphism neutral in every table entry that
  // involves it, with e . e = e actually present
  int n_mors = static_cast<int>(d.morphisms.size());
  for (Obj x = 0; x < b.n_objects(); ++x) {
    for (Mor e = 0; e < n_mors; ++e) {
      if (msrc[e] != x || mtgt[e] != x) continue;
      auto ee = table.find({e, e});
      if (ee == table.end() || ee->second != e) continue;
      bool neutral = true;
      for (Mor m = 0; m < n_mors && neutral; ++m) {
        if (mtgt[m] == x) {
          auto it = table.find({e, m});
          if (it != table.end() && it->second != m) neutral = false;
        }
        if (msrc[m] == x) {
          auto it = table.find({m, e});
          if (it != table.end() && it->second != m) neutral = false;
        }
      }
      if (neutral) {
        b.set_identity(x, e);
        break;
      }
    }
  }

  ParsedCategory out;
  out.cof.base = std::make_shared<FinCategory>(std::move(b).build());
  out.cof.zero = obj(d.zero);
  for (const std::string& id : d.cof) out.cof.cofibrations.insert(mor(id));
  out.fibration_mode = d.fibration_mode;
  out.has_weq = d.has_weq;
  if (d.has_weq) {
    out.wald.cof = out.cof;
    for (const std::string& id : d.weq) out.wald.weq.insert(mor(id));
  }
  return out;
}

}  // namespace

ParsedCategory parse_category(const std::string& text) {
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return build(parse_json(text));
  return build(parse_text(text));
}

ParsedCategory load_category(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_category(buf.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string emit_category(const CofStructure& s, const WaldStructure* w,
                          bool fibration_mode) {
  const FinCategory& cat = *s.base;
  std::set<std::string> used;
  auto pick = [&](std::string name, const char* prefix, int k) {
    if (name.empty() || name.find_first_of(" \t#") != std::string::npos ||
        !used.insert(name).second) {
      do name = prefix + std::to_string(k++);
      while (!used.insert(name).second);
    }
    return name;
  };
  std::vector<std::string> oname(cat.n_objects()), mname(cat.n_morphisms());
  for (Obj x = 0; x < cat.n_objects(); ++x) oname[x] = pick(cat.object_name(x), "o", x);
  for (Mor m = 0; m < cat.n_morphisms(); ++m)
    mname[m] = pick(cat.morphism_name(m), "m", m);

  std::ostringstream out;
  out << "segal-lab-category v1\n";
  out << "OBJECTS\n";
  for (Obj x = 0; x < cat.n_objects(); ++x) out << "  " << oname[x] << "\n";
  out << "MORPHISMS\n";
  for (Mor m = 0; m < cat.n_morphisms(); ++m)
    out << "  " << mname[m] << " " << oname[cat.src(m)] << " " << oname[cat.tgt(m)]
        << "\n";
  out << "COMPOSE\n";
  for (Mor g = 0; g < cat.n_morphisms(); ++g)
    for (Mor f = 0; f < cat.n_morphisms(); ++f)
      if (cat.composable(g, f) && cat.compose(g, f) != kNone)
        out << "  " << mname[g] << " " << mname[f] << " " << mname[cat.compose(g, f)]
            << "\n";
  out << "ZERO\n  " << oname[s.zero] << "\n";
  out << (fibration_mode ? "FIBRATIONS\n" : "COFIBRATIONS\n");
  for (Mor m : s.cofibrations) out << "  " << mname[m] << "\n";
  if (w) {
    out << "WEQ\n";
    for (Mor m : w->weq) out << "  " << mname[m] << "\n";
  }
  return out.str();
}

}  // namespace segal
