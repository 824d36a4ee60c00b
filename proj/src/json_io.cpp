#include "qlat/json_io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <memory>
#include <utility>

#include "qlat/error.hpp"

namespace qlat::io {

namespace {

Rational rat(const json& j, const char* what) {
  if (!j.is_string())
    throw ParseError(std::string(what) + ": expected a rational string");
  return Rational::parse(j.get<std::string>());
}

Gaussian gauss(const json& j, const char* what) {
  if (!j.is_string())
    throw ParseError(std::string(what) + ": expected a complex string");
  return Gaussian::parse(j.get<std::string>());
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw ParseError(std::string("missing field '") + name + "'");
  return j.at(name);
}

} // namespace

json vector_to_json(const Vector& v) {
  json entries = json::array();
  for (const auto& [i, z] : v.entries())
    entries.push_back(json::array({i, z.re().str(), z.im().str()}));
  return json{{"entries", std::move(entries)}};
}

Vector vector_from_json(const json& j) {
  const json& entries = field(j, "entries");
  if (!entries.is_array()) throw ParseError("'entries' must be an array");
  std::vector<std::pair<std::uint64_t, Gaussian>> fields;
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 3)
      throw ParseError("vector entry must be [index, re, im]");
    if (!e[0].is_number_unsigned()) throw ParseError("vector index must be unsigned");
    fields.emplace_back(e[0].get<std::uint64_t>(),
                        Gaussian(rat(e[1], "vector entry"), rat(e[2], "vector entry")));
  }
  return Vector::from_entries(fields);
}

json subspace_to_json(const Subspace& s) {
  if (!s.is_finite())
    throw DomainError("only finitely presented subspaces serialize");
  json gens = json::array();
  for (const auto& g : s.generators()) gens.push_back(vector_to_json(g));
  return json{{"generators", std::move(gens)}};
}

Subspace subspace_from_json(const json& j) {
  const json& gens = field(j, "generators");
  if (!gens.is_array()) throw ParseError("'generators' must be an array");
  std::vector<Vector> list;
  for (const auto& g : gens) list.push_back(vector_from_json(g));

  if (j.contains("tail_bound")) {
    const json& tb = j.at("tail_bound");
    Rational scale = rat(field(tb, "scale"), "tail_bound scale");
    Rational ratio = rat(field(tb, "ratio"), "tail_bound ratio");
    if (scale.sign() < 0 || ratio.sign() <= 0 || !(ratio < Rational(1)))
      throw ParseError("tail_bound needs scale >= 0 and ratio in (0, 1)");
    auto shared = std::make_shared<std::vector<Vector>>(std::move(list));
    return Subspace::countable(
        [shared](std::size_t i) {
          return i < shared->size() ? (*shared)[i] : Vector{};
        },
        [scale, ratio](std::size_t n) {
          return scale * Rational::pow(ratio, static_cast<unsigned long>(n));
        });
  }
  return Subspace::finite(std::move(list));
}

json state_to_json(const State& s) {
  json terms = json::array();
  for (std::size_t k = 0; k < s.listed_size(); ++k) {
    State::Term t = s.term(k);
    terms.push_back(json::array({t.weight.str(), vector_to_json(t.vec)}));
  }
  json tail;
  if (auto r = s.geometric_ratio())
    tail = json{{"type", "geometric"}, {"ratio", r->str()}};
  else
    tail = json{{"type", "finite"}};
  return json{{"terms", std::move(terms)}, {"tail", std::move(tail)}};
}

State state_from_json(const json& j) {
  const json& terms = field(j, "terms");
  if (!terms.is_array() || terms.empty())
    throw ParseError("'terms' must be a nonempty array");
  std::vector<State::Term> list;
  for (const auto& t : terms) {
    if (!t.is_array() || t.size() != 2)
      throw ParseError("state term must be [weight, vector]");
    list.push_back(State::Term{rat(t[0], "state weight"), vector_from_json(t[1])});
  }
  const json& tail = field(j, "tail");
  const std::string type = field(tail, "type").get<std::string>();
  if (type == "finite") return State::finite(std::move(list));
  if (type == "geometric")
    return State::geometric(std::move(list), rat(field(tail, "ratio"), "tail ratio"));
  throw ParseError("tail type must be 'finite' or 'geometric'");
}

json pl_to_json(const PLFunction& f) {
  json pts = json::array();
  for (const auto& [t, v] : f.breakpoints())
    pts.push_back(json::array({t.str(), v.str()}));
  return json{{"breakpoints", std::move(pts)}};
}

PLFunction pl_from_json(const json& j) {
  const json& pts = field(j, "breakpoints");
  if (!pts.is_array() || pts.empty())
    throw ParseError("'breakpoints' must be a nonempty array");
  std::vector<std::pair<Rational, Rational>> list;
  for (const auto& p : pts) {
    if (!p.is_array() || p.size() != 2)
      throw ParseError("breakpoint must be [t, v]");
    list.emplace_back(rat(p[0], "breakpoint abscissa"), rat(p[1], "breakpoint value"));
  }
  return PLFunction::from_breakpoints(std::move(list));
}

BoundedOperator operator_from_json(const json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "diagonal") {
    const json& entries = field(j, "entries");
    if (!entries.is_array()) throw ParseError("'entries' must be an array");
    std::vector<Rational> eigs;
    for (const auto& e : entries) eigs.push_back(rat(e, "diagonal entry"));
    return BoundedOperator::diagonal(std::move(eigs));
  }
  if (kind == "banded") {
    const json& bd = field(j, "band");
    if (!bd.is_number_unsigned()) throw ParseError("'band' must be unsigned");
    const std::uint64_t band = bd.get<std::uint64_t>();
    const json& entries = field(j, "entries");
    if (!entries.is_array()) throw ParseError("'entries' must be an array");
    auto table = std::make_shared<std::map<std::pair<std::uint64_t, std::uint64_t>, Gaussian>>();
    for (const auto& e : entries) {
      if (!e.is_array() || e.size() != 3)
        throw ParseError("band entry must be [i, j, value]");
      if (!e[0].is_number_unsigned() || !e[1].is_number_unsigned())
        throw ParseError("band entry indices must be unsigned");
      const std::uint64_t i = e[0].get<std::uint64_t>();
      const std::uint64_t jj = e[1].get<std::uint64_t>();
      const std::uint64_t d = i < jj ? jj - i : i - jj;
      if (d > band) throw ParseError("band entry outside the declared band");
      if (!table->emplace(std::make_pair(i, jj), gauss(e[2], "band entry")).second)
        throw ParseError("band entry listed twice");
    }
    // the listed set must be hermitian so the operator is self-adjoint
    for (const auto& [key, v] : *table) {
      auto mirror = table->find({key.second, key.first});
      if (mirror == table->end() || mirror->second != v.conj())
        throw ParseError("band entries must include conjugate mirrors");
    }
    return BoundedOperator::banded(
        band,
        [table](std::uint64_t i, std::uint64_t jj) {
          auto it = table->find({i, jj});
          return it == table->end() ? Gaussian() : it->second;
        },
        true);
  }
  if (kind == "finite") {
    const json& rows = field(j, "rows");
    if (!rows.is_array() || rows.empty()) throw ParseError("'rows' must be nonempty");
    const std::size_t n = rows.size();
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      const json& row = rows[r];
      if (!row.is_array() || row.size() != n)
        throw ParseError("operator rows must be square");
      for (std::size_t c = 0; c < n; ++c) m.at(r, c) = gauss(row[c], "matrix entry");
    }
    BoundedOperator op = BoundedOperator::finite(std::move(m));
    if (!op.self_adjoint())
      throw ParseError("finite operator block must be hermitian");
    return op;
  }
  throw ParseError("operator kind must be diagonal, banded, or finite");
}

std::vector<Rational> diagonal_entries_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || j.at("kind") != "diagonal") return {};
  std::vector<Rational> eigs;
  for (const auto& e : field(j, "entries")) eigs.push_back(rat(e, "diagonal entry"));
  return eigs;
}

std::string certificate_to_line(const Certificate& cert) {
  json j{{"c", vector_to_json(cert.c)}, {"r", cert.r.str()}};
  return j.dump();
}

std::vector<Certificate> certificates_from_lines(std::istream& in) {
  std::vector<Certificate> out;
  std::string line;
  while (std::getline(in, line)) {
    bool blank = true;
    for (char ch : line)
      if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
    if (blank) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("bad certificate line: ") + e.what());
    }
    out.push_back(Certificate{vector_from_json(field(j, "c")), rat(field(j, "r"), "radius")});
  }
  return out;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

} // namespace qlat::io
