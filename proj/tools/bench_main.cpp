// Halley vs Fritsch timing and step counts, plus serial vs OpenMP sweep time.
//
//   lambertw-bench [--branch B] [--grid G] [--calls N] [--repetitions R]

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "lambertw/bench.hpp"

using namespace lambertw;

int main(int argc, char** argv) {
  CLI::App app{"Lambert W benchmark"};
  std::string branch_text = "0";
  std::string grid_text;
  long calls = 30'000;
  int reps = 5;
  app.add_option("--branch", branch_text, "0 or -1");
  app.add_option("--grid", grid_text, "linear[lo,hi,n] or log[lo,hi,n]");
  app.add_option("--calls", calls, "calls per grid point (>= 10000)");
  app.add_option("--repetitions", reps, "timed repetitions (>= 5)");
  CLI11_PARSE(app, argc, argv);

  try {
    const Branch branch = branch_from_int(std::stoi(branch_text));
    if (grid_text.empty())
      grid_text = branch == Branch::principal ? "log[0.3,100000,100]" : "log[-0.3,-1e-6,100]";
    const GridSpec grid = parse_grid(grid_text);

    const auto report =
        bench::run_benchmark(branch, grid, {Scheme::fritsch, Scheme::halley}, {calls, reps});
    bench::write_report(std::cout, report);

    const auto* f = report.find(Scheme::fritsch);
    const auto* h = report.find(Scheme::halley);
    if (f && h && h->timing.net_per_call.count() > 0)
      std::cerr << "fritsch/halley net time ratio "
                << f->timing.net_per_call.count() / h->timing.net_per_call.count() << '\n';

    const auto sweep = bench::time_sweep(branch, Stage::one_fritsch, grid);
    std::cerr << "accuracy sweep: serial " << sweep.serial.count() * 1e-6 << " ms, parallel "
              << sweep.parallel.count() * 1e-6 << " ms on " << sweep.threads << " thread(s)"
              << (sweep.identical ? "" : " (RESULTS DIFFER)") << '\n';
  } catch (const std::exception& e) {
    std::cerr << "lambertw-bench: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
