#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include <CLI11.hpp>

#include "qlat/candidates.hpp"
#include "qlat/lattice.hpp"
#include "qlat/parallel.hpp"
#include "qlat/vector.hpp"

using namespace qlat;

namespace {

double ms_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

Vector random_vec(std::mt19937_64& rng, int max_index, long height) {
  std::uniform_int_distribution<int> supp(1, 3);
  std::uniform_int_distribution<int> idx(0, max_index);
  std::uniform_int_distribution<long> num(-height, height);
  std::uniform_int_distribution<long> den(1, height);
  Vector v;
  for (int i = 0, k = supp(rng); i < k; ++i)
    v.set(static_cast<std::uint64_t>(idx(rng)),
          Gaussian(Rational(num(rng), den(rng)), Rational(num(rng), den(rng))));
  if (v.is_zero()) v = Vector::basis(0);
  return v;
}

struct Row {
  const char* name;
  double serial_ms;
  double parallel_ms;
  bool agree;
};

void print_table(const std::vector<Row>& rows, unsigned threads) {
  std::printf("%-28s %12s %12s %9s %7s\n", "kernel", "serial (ms)",
              "parallel(ms)", "speedup", "equal");
  for (const Row& r : rows)
    std::printf("%-28s %12.1f %12.1f %8.2fx %7s\n", r.name, r.serial_ms,
                r.parallel_ms,
                r.parallel_ms > 0 ? r.serial_ms / r.parallel_ms : 0.0,
                r.agree ? "yes" : "NO");
  std::printf("(%u worker thread%s; OpenMP %s)\n", threads,
              threads == 1 ? "" : "s", parallel_enabled() ? "on" : "off");
}

} // namespace

int main(int argc, char** argv) {
  std::size_t slots = 4000;
  std::size_t vectors = 200;
  unsigned threads = 0;

  CLI::App app{"timing of the batch scan kernels against their serial twins"};
  app.add_option("--slots", slots, "enumeration slots to scan (default 4000)");
  app.add_option("--vectors", vectors,
                 "vectors for the refutation kernel (default 200)");
  app.add_option("--threads", threads, "worker threads (0 = auto)");
  CLI11_PARSE(app, argc, argv);

  const unsigned t = effective_threads(threads);
  std::mt19937_64 rng(20260822);
  Subspace L = Subspace::finite({Vector::basis(1), Vector::basis(4)});

  /* warm the process-wide candidate memo and the cached basis so both routes
     time the validation work itself, not one-off lazy construction */
  candidate_block(0, slots);
  L.basis();

  std::vector<Row> rows;

  auto t0 = std::chrono::steady_clock::now();
  auto slots_serial = scan_slots_serial(L, 0, slots);
  double scan_serial = ms_since(t0);
  t0 = std::chrono::steady_clock::now();
  auto slots_par = scan_slots(L, 0, slots, threads);
  double scan_par = ms_since(t0);
  bool scan_ok = slots_serial.size() == slots_par.size();
  std::vector<Certificate> certs;
  for (std::size_t i = 0; scan_ok && i < slots_serial.size(); ++i) {
    if (slots_serial[i].has_value() != slots_par[i].has_value()) scan_ok = false;
    if (slots_serial[i]) {
      if (slots_par[i] && (slots_serial[i]->c != slots_par[i]->c ||
                           slots_serial[i]->r != slots_par[i]->r))
        scan_ok = false;
      certs.push_back(*slots_serial[i]);
    }
  }
  rows.push_back({"slot scan", scan_serial, scan_par, scan_ok});

  t0 = std::chrono::steady_clock::now();
  auto valid_serial = batch_certificate_valid_serial(L, certs);
  double valid_serial_ms = ms_since(t0);
  t0 = std::chrono::steady_clock::now();
  auto valid_par = batch_certificate_valid(L, certs, threads);
  double valid_par_ms = ms_since(t0);
  rows.push_back({"certificate validation", valid_serial_ms, valid_par_ms,
                  valid_serial == valid_par});

  std::vector<Vector> xs;
  for (std::size_t i = 0; i < vectors; ++i) xs.push_back(random_vec(rng, 6, 5));
  t0 = std::chrono::steady_clock::now();
  auto refute_serial = batch_refute_serial(certs, xs);
  double refute_serial_ms = ms_since(t0);
  t0 = std::chrono::steady_clock::now();
  auto refute_par = batch_refute(certs, xs, threads);
  double refute_par_ms = ms_since(t0);
  rows.push_back({"membership refutation", refute_serial_ms, refute_par_ms,
                  refute_serial == refute_par});

  std::printf("subspace span{e1, e4}; %zu slots -> %zu certificates; %zu probe "
              "vectors\n\n",
              slots, certs.size(), xs.size());
  print_table(rows, t);

  for (const Row& r : rows)
    if (!r.agree) return 1;
  return 0;
}
