// Times the subdivision-limit enumeration serially and with the OpenMP
// kernel on the same inputs, checking that both agree tuple for tuple.

#include <chrono>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "segal/search.hpp"
#include "segal/sconstr.hpp"
#include "segal/segal_maps.hpp"

using namespace segal;
using clock_type = std::chrono::steady_clock;

static double time_limits(const TruncatedSimplicialSet& x,
                          const std::vector<Subdivision>& subs, bool parallel,
                          std::size_t* tuples) {
  auto start = clock_type::now();
  std::size_t total = 0;
  for (const Subdivision& s : subs) total += limit_over_subdivision(x, s, parallel).size();
  *tuples = total;
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

int main(int argc, char** argv) {
  CLI::App app{"serial vs parallel subdivision-limit enumeration"};
  std::string fixture = "PS2xPS2";
  int max_level = 5, repeat = 3;
  app.add_option("--fixture", fixture, "Z, PS2, PS3, or PS2xPS2");
  app.add_option("--max-level", max_level, "top simplicial level, default 5");
  app.add_option("--repeat", repeat, "timing repetitions, default 3");
  CLI11_PARSE(app, argc, argv);

  CofStructure s = fixture_by_name(fixture);
  IsoSDot iso = iso_s_dot(s, max_level);
  std::printf("fixture %s, levels", fixture.c_str());
  for (int v : iso.x.level_sizes) std::printf(" %d", v);
  std::printf("\n");

  for (int n = 2; n <= max_level; ++n) {
    std::vector<Subdivision> subs = enumerate_subdivisions(n);
    std::size_t serial_tuples = 0, parallel_tuples = 0;
    double serial = 1e300, parallel = 1e300;
    for (int r = 0; r < repeat; ++r) {
      serial = std::min(serial, time_limits(iso.x, subs, false, &serial_tuples));
      parallel = std::min(parallel, time_limits(iso.x, subs, true, &parallel_tuples));
    }
    if (serial_tuples != parallel_tuples) {
      std::printf("P_%d MISMATCH: serial %zu tuples, parallel %zu\n", n, serial_tuples,
                  parallel_tuples);
      return 1;
    }
    std::printf("P_%d  %2zu subdivisions  %9zu tuples  serial %8.3f ms  parallel %8.3f ms  x%.2f\n",
                n, subs.size(), serial_tuples, serial * 1e3, parallel * 1e3,
                parallel > 0 ? serial / parallel : 0.0);
  }
  return 0;
}
