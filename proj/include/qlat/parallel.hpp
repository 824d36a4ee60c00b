#ifndef QLAT_PARALLEL_HPP
#define QLAT_PARALLEL_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "qlat/lattice.hpp"
#include "qlat/subspace.hpp"
#include "qlat/vector.hpp"

namespace qlat {

/* Batch kernels over independent exact computations.  Every kernel comes in
   a serial and a parallel form that produce identical results; the parallel
   form shares work across OpenMP threads and falls back to the serial one in
   builds without OpenMP.  The lazy certificate stream itself stays
   sequential — these kernels serve bulk scans and bulk checks where the
   whole index range is wanted anyway. */

/* True when built with OpenMP support. */
bool parallel_enabled();

/* Resolve a requested worker count: a positive request is taken as is;
   0 means the QLATTICE_THREADS environment variable when set to a positive
   integer, otherwise the OpenMP default.  Always 1 without OpenMP. */
unsigned effective_threads(unsigned requested);

/* Certificates among the enumeration slots [begin, end) against a finitely
   presented subspace, slot-aligned: entry k covers slot begin + k and is
   empty when that slot's candidate is not certified.  Matches
   SubspaceCode::encode slot for slot. */
std::vector<std::optional<Certificate>> scan_slots_serial(
    const Subspace& L, std::size_t begin, std::size_t end);
std::vector<std::optional<Certificate>> scan_slots(
    const Subspace& L, std::size_t begin, std::size_t end, unsigned threads = 0);

/* certificate_valid for every listed certificate against one subspace
   (1 = valid).  char, not bool: each worker writes its own element. */
std::vector<char> batch_certificate_valid_serial(
    const Subspace& L, const std::vector<Certificate>& certs);
std::vector<char> batch_certificate_valid(
    const Subspace& L, const std::vector<Certificate>& certs,
    unsigned threads = 0);

/* For each vector, the index of the first certificate in the list that
   refutes its membership (unit_distance_less after normalizing direction),
   if any.  Mirrors not_member over a list-backed code: a hit at index j is
   exactly a Confirmed verdict whose sufficient fuel is j + 1.  DomainError
   on a zero vector. */
std::vector<std::optional<std::size_t>> batch_refute_serial(
    const std::vector<Certificate>& certs, const std::vector<Vector>& xs);
std::vector<std::optional<std::size_t>> batch_refute(
    const std::vector<Certificate>& certs, const std::vector<Vector>& xs,
    unsigned threads = 0);

} // namespace qlat

#endif
