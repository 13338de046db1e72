#include "segal/search.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "segal/fixtures.hpp"
#include "segal/sconstr.hpp"

namespace segal {

CofStructure fixture_by_name(const std::string& name) {
  if (name == "Z") return fixture_Z();
  if (name == "PS2") return fixture_PS(2);
  if (name == "PS3") return fixture_PS(3);
  if (name == "PS2xPS2") return fixture_product(fixture_PS(2), fixture_PS(2));
  throw InputError("unknown fixture: " + name);
}

CofStructure random_closure(const CofStructure& ambient, std::uint64_t trial_seed,
                            int max_objects, std::vector<Obj>* seed_objects) {
  const FinCategory& c = *ambient.base;
  std::mt19937_64 rng(trial_seed);
  int want = 1 + static_cast<int>(rng() % 3);
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<Obj> picks{ambient.zero};
    for (int t = 0; t < want; ++t)
      picks.push_back(static_cast<Obj>(rng() % c.n_objects()));
    std::sort(picks.begin(), picks.end());
    picks.erase(std::unique(picks.begin(), picks.end()), picks.end());

    Seed seed;
    seed.objects = picks;
    for (Mor m = 0; m < c.n_morphisms(); ++m)
      if (std::binary_search(picks.begin(), picks.end(), c.src(m)) &&
          std::binary_search(picks.begin(), picks.end(), c.tgt(m)))
        seed.morphisms.push_back(m);
    auto gen = generate_subcategory(ambient, seed);
    if (gen.sub.base->n_objects() <= max_objects) {
      if (seed_objects) *seed_objects = picks;
      return gen.sub;
    }
    want = std::max(1, want - 1);
  }
  // Smallest possible closure: the zero object alone.
  Seed seed;
  seed.objects = {ambient.zero};
  for (Mor m = 0; m < c.n_morphisms(); ++m)
    if (c.src(m) == ambient.zero && c.tgt(m) == ambient.zero)
      seed.morphisms.push_back(m);
  auto gen = generate_subcategory(ambient, seed);
  if (seed_objects) *seed_objects = {ambient.zero};
  return gen.sub;
}

namespace {

std::string print_tuple(const Subdivision& p, const LimitTuple& t) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < p.members.size(); ++i) {
    if (i) os << ", ";
    os << "{";
    for (size_t v = 0; v < p.members[i].size(); ++v)
      os << (v ? "," : "") << p.members[i][v];
    os << "}=" << t[i];
  }
  os << ")";
  return os.str();
}

void run_trial(const CofStructure& s, int max_level, SearchTrial& trial) {
  auto sd = iso_s_dot(s, max_level);
  trial.level_sizes = sd.x.level_sizes;
  for (int n = 2; n <= max_level; ++n)
    for (const auto& t : enumerate_triangulations(n)) {
      if (classify_subdivision(t) != SubdivisionClass::neither) continue;
      ++trial.triangulations_checked;
      auto res = two_segal_map(sd.x, t);
      if (res.bijective()) continue;
      trial.counterexample = true;
      std::ostringstream os;
      os << "P_" << n << " triangulation";
      for (const auto& d : diagonals_of(t))
        os << " {" << d.first << "," << d.second << "}";
      if (res.unreachable) {
        // re-verify the certificate: the tuple really is in the limit and
        // really has no preimage
        auto lim = limit_over_subdivision(sd.x, t);
        bool in_lim =
            std::find(lim.begin(), lim.end(), *res.unreachable) != lim.end();
        os << ": unreachable limit tuple " << print_tuple(t, *res.unreachable)
           << (in_lim ? " (verified)" : " (CERTIFICATE INVALID)");
      }
      if (res.collision)
        os << ": elements " << res.collision->first << " and "
           << res.collision->second << " of level " << n << " collide";
      trial.detail = os.str();
      return;
    }
}

}  // namespace

SearchReport counterexample_search(const SearchConfig& cfg) {
  SearchReport rep;
  rep.config = cfg;
  for (const auto& name : cfg.fixtures) {
    SearchTrial trial;
    trial.source = "fixture:" + name;
    auto s = fixture_by_name(name);
    trial.n_objects = s.base->n_objects();
    trial.n_morphisms = s.base->n_morphisms();
    run_trial(s, cfg.max_level, trial);
    if (trial.counterexample) ++rep.counterexamples;
    rep.trials.push_back(std::move(trial));
  }
  if (cfg.random_trials > 0) {
    auto ambient = fixture_by_name(cfg.ambient);
    std::mt19937_64 master(cfg.seed);
    for (int t = 0; t < cfg.random_trials; ++t) {
      SearchTrial trial;
      trial.source = "random";
      trial.trial_seed = master();
      auto s = random_closure(ambient, trial.trial_seed, cfg.max_objects,
                              &trial.seed_objects);
      trial.n_objects = s.base->n_objects();
      trial.n_morphisms = s.base->n_morphisms();
      run_trial(s, cfg.max_level, trial);
      if (trial.counterexample) ++rep.counterexamples;
      rep.trials.push_back(std::move(trial));
    }
  }
  return rep;
}

}  // namespace segal
