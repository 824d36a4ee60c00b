#ifndef QLAT_JSON_IO_HPP
#define QLAT_JSON_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "qlat/lattice.hpp"
#include "qlat/op.hpp"
#include "qlat/plfunction.hpp"
#include "qlat/states.hpp"
#include "qlat/subspace.hpp"
#include "qlat/vector.hpp"

namespace qlat::io {

using nlohmann::json;

/* All readers throw ParseError on malformed input (bad JSON, missing or
   mistyped fields, numeric strings that do not parse) and DomainError when
   well-formed data violates a semantic precondition (a non-unit state
   vector, weights off one, an out-of-range diagonal entry). */

/* Vector: {"entries": [[index, "re", "im"], ...]} with rational strings. */
json vector_to_json(const Vector& v);
Vector vector_from_json(const json& j);

/* Subspace: {"generators": [vector, ...]} for a finite presentation; an
   optional {"tail_bound": {"scale": "p/q", "ratio": "p/q"}} declares the
   countable reading whose level-n truncation is within scale * ratio^n of
   the full subspace (the declaration is the file author's promise). */
json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const json& j);

/* State: {"terms": [["weight", vector], ...],
           "tail": {"type": "finite"} | {"type": "geometric", "ratio": "p/q"}} */
json state_to_json(const State& s);
State state_from_json(const json& j);

/* Piecewise-linear function: {"breakpoints": [["t", "v"], ...]} with
   strictly increasing rational abscissae. */
json pl_to_json(const PLFunction& f);
PLFunction pl_from_json(const json& j);

/* Operator:
     {"kind": "diagonal", "entries": ["p/q", ...]}
     {"kind": "banded", "band": k, "entries": [[i, j, "a+bi"], ...]}
     {"kind": "finite", "rows": [["a+bi", ...], ...]}
   Banded entries must be listed hermitianly ((j,i) conjugate present for
   every (i,j)); the finite kind checks hermitian symmetry itself. */
BoundedOperator operator_from_json(const json& j);

/* When the operator file is diagonal, its entry list (for closed-form
   cross-checks); empty otherwise. */
std::vector<Rational> diagonal_entries_from_json(const json& j);

/* Certificates travel as JSON lines: one {"c": vector, "r": "p/q"} per
   line.  The reader skips blank lines. */
std::string certificate_to_line(const Certificate& cert);
std::vector<Certificate> certificates_from_lines(std::istream& in);

/* Whole-file helpers: read/parse with ParseError carrying the path. */
json load_json_file(const std::string& path);

} // namespace qlat::io

#endif
