#include "qlat/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef QLAT_HAVE_OPENMP
#include <omp.h>
#endif

#include "qlat/candidates.hpp"
#include "qlat/error.hpp"
#include "qlat/hilbert.hpp"

namespace qlat {

namespace {

/* Shared lazy state (the candidate memo, the subspace's cached basis) must be
   materialized before a parallel region; preconditions that would throw must
   be checked before it too, since exceptions may not escape a region. */

void require_finite(const Subspace& L, const char* who) {
  if (!L.is_finite())
    throw DomainError(std::string(who) + " needs a finite presentation");
  L.basis();  // fill the cache once; workers then only read it
}

void require_certificate_shape(const Certificate& cert) {
  if (cert.c.norm_sq() != Rational(1))
    throw DomainError("certificate direction is not exactly unit");
  if (cert.r.sign() < 0 || !(cert.r < Rational(1)))
    throw DomainError("certificate radius outside [0, 1)");
}

} // namespace

bool parallel_enabled() {
#ifdef QLAT_HAVE_OPENMP
  return true;
#else
  return false;
#endif
}

unsigned effective_threads(unsigned requested) {
#ifdef QLAT_HAVE_OPENMP
  if (requested) return requested;
  if (const char* env = std::getenv("QLATTICE_THREADS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v >= 1 && v <= 4096)
      return static_cast<unsigned>(v);
  }
  int m = omp_get_max_threads();
  return m > 0 ? static_cast<unsigned>(m) : 1u;
#else
  (void)requested;
  return 1;
#endif
}

std::vector<std::optional<Certificate>> scan_slots_serial(const Subspace& L,
                                                          std::size_t begin,
                                                          std::size_t end) {
  require_finite(L, "scan_slots");
  std::vector<Candidate> cands = candidate_block(begin, end);
  std::vector<std::optional<Certificate>> out(cands.size());
  for (std::size_t k = 0; k < cands.size(); ++k)
    if (certificate_valid(L, cands[k].unit, cands[k].r))
      out[k] = Certificate{cands[k].unit, cands[k].r};
  return out;
}

std::vector<std::optional<Certificate>> scan_slots(const Subspace& L,
                                                   std::size_t begin,
                                                   std::size_t end,
                                                   unsigned threads) {
#ifdef QLAT_HAVE_OPENMP
  require_finite(L, "scan_slots");
  std::vector<Candidate> cands = candidate_block(begin, end);
  std::vector<std::optional<Certificate>> out(cands.size());
  const long n = static_cast<long>(cands.size());
#pragma omp parallel for schedule(dynamic, 16) \
    num_threads(effective_threads(threads))
  for (long k = 0; k < n; ++k) {
    const Candidate& cand = cands[static_cast<std::size_t>(k)];
    if (certificate_valid(L, cand.unit, cand.r))
      out[static_cast<std::size_t>(k)] = Certificate{cand.unit, cand.r};
  }
  return out;
#else
  (void)threads;
  return scan_slots_serial(L, begin, end);
#endif
}

std::vector<char> batch_certificate_valid_serial(
    const Subspace& L, const std::vector<Certificate>& certs) {
  require_finite(L, "batch_certificate_valid");
  std::vector<char> out(certs.size());
  for (std::size_t k = 0; k < certs.size(); ++k)
    out[k] = certificate_valid(L, certs[k].c, certs[k].r) ? 1 : 0;
  return out;
}

std::vector<char> batch_certificate_valid(const Subspace& L,
                                          const std::vector<Certificate>& certs,
                                          unsigned threads) {
#ifdef QLAT_HAVE_OPENMP
  require_finite(L, "batch_certificate_valid");
  for (const Certificate& cert : certs) require_certificate_shape(cert);
  std::vector<char> out(certs.size());
  const long n = static_cast<long>(certs.size());
#pragma omp parallel for schedule(dynamic, 16) \
    num_threads(effective_threads(threads))
  for (long k = 0; k < n; ++k) {
    const Certificate& cert = certs[static_cast<std::size_t>(k)];
    out[static_cast<std::size_t>(k)] =
        certificate_valid(L, cert.c, cert.r) ? 1 : 0;
  }
  return out;
#else
  (void)threads;
  return batch_certificate_valid_serial(L, certs);
#endif
}

std::vector<std::optional<std::size_t>> batch_refute_serial(
    const std::vector<Certificate>& certs, const std::vector<Vector>& xs) {
  for (const Vector& x : xs)
    if (x.is_zero())
      throw DomainError("membership refutation for the zero vector");
  std::vector<std::optional<std::size_t>> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < certs.size(); ++j)
      if (unit_distance_less(xs[i], certs[j].c, certs[j].r)) {
        out[i] = j;
        break;
      }
  return out;
}

std::vector<std::optional<std::size_t>> batch_refute(
    const std::vector<Certificate>& certs, const std::vector<Vector>& xs,
    unsigned threads) {
#ifdef QLAT_HAVE_OPENMP
  for (const Vector& x : xs)
    if (x.is_zero())
      throw DomainError("membership refutation for the zero vector");
  std::vector<std::optional<std::size_t>> out(xs.size());
  const long n = static_cast<long>(xs.size());
#pragma omp parallel for schedule(dynamic, 4) \
    num_threads(effective_threads(threads))
  for (long i = 0; i < n; ++i) {
    const Vector& x = xs[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < certs.size(); ++j)
      if (unit_distance_less(x, certs[j].c, certs[j].r)) {
        out[static_cast<std::size_t>(i)] = j;
        break;
      }
  }
  return out;
#else
  (void)threads;
  return batch_refute_serial(certs, xs);
#endif
}

} // namespace qlat
