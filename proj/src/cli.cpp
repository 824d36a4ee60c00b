#include "qlat/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qlat/closed_set.hpp"
#include "qlat/config.hpp"
#include "qlat/error.hpp"
#include "qlat/hilbert.hpp"
#include "qlat/json_io.hpp"
#include "qlat/lattice.hpp"
#include "qlat/states.hpp"
#include "qlat/topology.hpp"
#include "qlat/valuation.hpp"

namespace qlat::cli {

namespace {

using nlohmann::json;

json load(const std::string& path) { return io::load_json_file(path); }

Vector load_vector(const std::string& path) {
  return io::vector_from_json(load(path));
}

Subspace load_subspace(const std::string& path) {
  return io::subspace_from_json(load(path));
}

void emit(const json& j, std::ostream& out) { out << j.dump() << "\n"; }

/* Per-invocation option values, bound to CLI11 before parsing. */
struct Args {
  std::string output;  // overrides the configured format when nonempty
  std::string vec_path, subspace_path, state_path, op_path, certs_path;
  std::string set_text, q_text, shift;
  std::vector<std::string> probe_paths;
  std::uint64_t max_certs = 0;
  std::uint64_t slot_cap = 20000;
  std::uint64_t fuel = 0;        // 0 = take the configured default
  std::uint64_t prefix = 0;
  bool prefix_given = false;
  bool upper = false;
  std::uint64_t max_n = 10;
};

int do_dist(const Args& a, const Config& cfg, std::ostream& out) {
  Vector x = load_vector(a.vec_path);
  Subspace L = load_subspace(a.subspace_path);
  if (!L.is_finite())
    throw DomainError("exact distance needs a finitely presented subspace");
  Rational d2 = distance_sq(x, L.basis());
  if (cfg.output_format == "json")
    emit(json{{"distance_sq", d2.str()}}, out);
  else
    out << d2.str() << "\n";
  return 0;
}

int do_encode(const Args& a, const Config&, std::ostream& out) {
  Subspace L = load_subspace(a.subspace_path);
  SubspaceCode code = SubspaceCode::encode(L);
  for (const Certificate& cert : code.collect(a.max_certs, a.slot_cap))
    out << io::certificate_to_line(cert) << "\n";
  return 0;
}

int do_notmember(const Args& a, const Config& cfg, std::ostream& out) {
  Vector x = load_vector(a.vec_path);
  SubspaceCode code = [&] {
    if (!a.certs_path.empty()) {
      std::ifstream in(a.certs_path);
      if (!in) throw ParseError("cannot open file: " + a.certs_path);
      return SubspaceCode::from_list(io::certificates_from_lines(in));
    }
    return SubspaceCode::encode(load_subspace(a.subspace_path));
  }();
  const std::uint64_t fuel = a.fuel ? a.fuel : cfg.default_fuel;
  Semidecision sd = not_member(code, x);
  const bool confirmed = sd.probe(fuel) == Verdict::Confirmed;
  if (cfg.output_format == "json") {
    json j{{"fuel", fuel}, {"verdict", confirmed ? "confirmed" : "unknown"}};
    if (confirmed) j["confirmed_at"] = *sd.confirmed_at();
    emit(j, out);
  } else if (confirmed) {
    out << "not a member: confirmed at fuel " << *sd.confirmed_at() << "\n";
  } else {
    out << "unknown at fuel " << fuel << "\n";
  }
  return 0;
}

int do_state(const Args& a, const Config& cfg, std::ostream& out) {
  State S = io::state_from_json(load(a.state_path));
  Subspace L = load_subspace(a.subspace_path);
  if (!L.is_finite())
    throw DomainError("state evaluation needs a finitely presented subspace");
  std::size_t n = a.prefix_given
                      ? static_cast<std::size_t>(a.prefix)
                      : (S.finite_size() ? *S.finite_size()
                                         : S.listed_size() + cfg.default_fuel);
  RationalInterval v = mixed_eval(S, L, n);
  if (cfg.output_format == "json")
    emit(json{{"lower", v.lo().str()}, {"upper", v.hi().str()}, {"terms", n}}, out);
  else
    out << v.str() << "\n";
  return 0;
}

int do_specval(const Args& a, const Config& cfg, std::ostream& out,
               std::ostream& err) {
  BoundedOperator A = io::operator_from_json(load(a.op_path));
  Vector x = load_vector(a.vec_path);
  ClosedRationalSet C = ClosedRationalSet::parse(a.set_text);
  ValuationOptions opts;
  opts.orbit_cap = cfg.orbit_cap;
  opts.max_poly_degree = cfg.max_poly_degree;
  const std::uint64_t fuel = a.fuel ? a.fuel : cfg.default_fuel;

  if (a.upper) {
    Rational bound = valuation_upper(A, x, C, opts).refine(fuel);
    if (cfg.output_format == "json")
      emit(json{{"steps", fuel}, {"upper_bound", bound.str()}}, out);
    else
      out << bound.str() << "\n";
    return 0;
  }

  if (a.q_text.empty()) {
    err << "specval: --q is required unless --upper is given\n";
    return 1;
  }
  Rational q = Rational::parse(a.q_text);
  Semidecision sd = valuation_less(A, x, C, q, opts);
  const bool confirmed = sd.probe(fuel) == Verdict::Confirmed;
  if (cfg.output_format == "json") {
    json j{{"fuel", fuel}, {"q", q.str()},
           {"verdict", confirmed ? "confirmed" : "unknown"}};
    if (confirmed) j["confirmed_at"] = *sd.confirmed_at();
    emit(j, out);
  } else if (confirmed) {
    out << "value < " << q.str() << ": confirmed at fuel "
        << *sd.confirmed_at() << "\n";
  } else {
    out << "unknown at fuel " << fuel << "\n";
  }
  return 0;
}

int do_sotcheck(const Args& a, const Config& cfg, std::ostream& out) {
  std::vector<Vector> probes;
  for (const std::string& p : a.probe_paths) probes.push_back(load_vector(p));
  ShiftSotReport rep = a.shift == "up" ? sot_shift_up_powers(probes)
                                       : sot_shift_down_powers(probes);
  std::optional<std::uint64_t> n0;
  if (rep.converges) {
    n0 = 0;
    for (const auto& pr : rep.per_probe)
      if (pr.vanish_at && *pr.vanish_at > *n0) n0 = *pr.vanish_at;
  }
  if (cfg.output_format == "json") {
    json per = json::array();
    for (const auto& pr : rep.per_probe) {
      json e{{"final_norm_sq", pr.final_norm_sq.str()}};
      if (pr.vanish_at)
        e["vanish_at"] = *pr.vanish_at;
      else
        e["vanish_at"] = nullptr;
      per.push_back(std::move(e));
    }
    json j{{"per_probe", std::move(per)},
           {"verdict", rep.converges ? "converges" : "does not converge"}};
    if (n0)
      j["n0"] = *n0;
    else
      j["n0"] = nullptr;
    emit(j, out);
  } else {
    for (std::size_t i = 0; i < rep.per_probe.size(); ++i) {
      const auto& pr = rep.per_probe[i];
      if (pr.vanish_at)
        out << "probe " << i << ": zero from power " << *pr.vanish_at
            << " onward\n";
      else
        out << "probe " << i << ": norm^2 stays " << pr.final_norm_sq.str()
            << " at every power\n";
    }
    if (n0)
      out << "all probes zero from power " << *n0 << " onward\n";
    else
      out << "does not converge: every power preserves the norm exactly\n";
  }
  return 0;
}

int do_demo(const std::string& which, const Args& a, const Config& cfg,
            std::ostream& out) {
  if (which == "schroeder") {
    ValueJumpReport rep = demo_value_jump(a.max_n);
    if (cfg.output_format == "json") {
      json vals = json::array();
      for (const Rational& v : rep.values) vals.push_back(v.str());
      emit(json{{"values", std::move(vals)},
                {"limit", rep.limit_value.str()},
                {"discontinuous", rep.discontinuous}},
           out);
    } else {
      for (std::size_t i = 0; i < rep.values.size(); ++i)
        out << "n=" << (i + 1) << ": " << rep.values[i].str() << "\n";
    }
    return 0;
  }
  if (which == "join") {
    JoinDistributivityReport rep =
        demo_join_distributivity(static_cast<std::size_t>(a.max_n));
    if (cfg.output_format == "json") {
      emit(json{{"stages", rep.stages},
                {"dim_meet_of_join", rep.dim_meet_of_join},
                {"dim_join_of_meets", rep.dim_join_of_meets},
                {"distributive", rep.distributive}},
           out);
    } else {
      out << "stages: " << rep.stages << "\n"
          << "dim(P meet join Q_n): " << rep.dim_meet_of_join << "\n"
          << "dim(join of (P meet Q_n)): " << rep.dim_join_of_meets << "\n"
          << "distributive: " << (rep.distributive ? "yes" : "no") << "\n";
    }
    return 0;
  }
  // biorth
  BiorthReport rep = demo_biorth_collapse(a.max_n);
  if (cfg.output_format == "json") {
    emit(json{{"max_n", rep.max_n},
              {"all_closures_equal_line", rep.all_closures_equal_line},
              {"tail_escapes", rep.tail_escapes}},
         out);
  } else {
    out << "stages: " << rep.max_n << "\n"
        << "double complement stays the full line: "
        << (rep.all_closures_equal_line ? "yes" : "no") << "\n"
        << "every multiple escapes the sets eventually: "
        << (rep.tail_escapes ? "yes" : "no") << "\n";
  }
  return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream&, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact-arithmetic toolkit for subspace certificates, states, "
               "and spectral values"};
  app.require_subcommand(1);
  Args a;

  app.add_option("--output", a.output, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* dist = app.add_subcommand(
      "dist", "exact squared distance from a vector to a subspace");
  dist->add_option("--vec", a.vec_path, "vector file")->required();
  dist->add_option("--subspace", a.subspace_path, "subspace file")->required();

  CLI::App* encode = app.add_subcommand(
      "encode", "emit certificates of a subspace as JSON lines");
  encode->add_option("--subspace", a.subspace_path, "subspace file")->required();
  encode->add_option("--max-certs", a.max_certs, "number of certificates")
      ->required();
  encode->add_option("--slot-cap", a.slot_cap,
                     "enumeration slots to scan (default 20000)");

  CLI::App* notmember = app.add_subcommand(
      "notmember", "semidecide that a vector lies outside a coded subspace");
  notmember->add_option("--vec", a.vec_path, "vector file")->required();
  notmember->add_option("--subspace", a.subspace_path,
                        "subspace file (encoded on the fly)");
  notmember->add_option("--certs", a.certs_path,
                        "certificate file (JSON lines) standing in for the code");
  notmember->add_option("--fuel", a.fuel, "probe fuel (default from config)");

  CLI::App* state = app.add_subcommand(
      "state", "enclose the value a state assigns to a subspace");
  state->add_option("--state", a.state_path, "state file")->required();
  state->add_option("--subspace", a.subspace_path, "subspace file")->required();
  state->add_option("--prefix", a.prefix, "terms to expand explicitly");

  CLI::App* specval = app.add_subcommand(
      "specval", "spectral value of a vector state on a closed set");
  specval->add_option("--op", a.op_path, "operator file")->required();
  specval->add_option("--vec", a.vec_path, "vector file")->required();
  specval
      ->add_option("--set", a.set_text,
                   "closed set, e.g. \"[-1,-1/2]u[1/2,1]\" or \"empty\"")
      ->required();
  specval->add_option("--q", a.q_text, "rational threshold for value < q");
  specval->add_option("--fuel", a.fuel,
                      "probe fuel / refinement steps (default from config)");
  specval->add_flag("--upper", a.upper,
                    "print the upper bound after --fuel refinement steps");

  CLI::App* sotcheck = app.add_subcommand(
      "sotcheck", "strong-operator convergence of shift powers on probes");
  sotcheck->add_option("--shift", a.shift, "which shift: up or down")
      ->required()
      ->check(CLI::IsMember({"up", "down"}));
  sotcheck->add_option("--probe", a.probe_paths, "probe vector file (repeatable)")
      ->required();

  CLI::App* demo = app.add_subcommand(
      "demo", "built-in discontinuity and collapse demonstrations");
  demo->require_subcommand(1);
  CLI::App* demo_schroeder = demo->add_subcommand(
      "schroeder", "constant value 1/2 along a decreasing chain with limit 0");
  CLI::App* demo_join = demo->add_subcommand(
      "join", "meets fail to distribute over a countable join");
  CLI::App* demo_biorth = demo->add_subcommand(
      "biorth", "double complements ignore a decreasing set limit");
  for (CLI::App* d : {demo_schroeder, demo_join, demo_biorth})
    d->add_option("--max-n", a.max_n, "stages to run (default 10)");

  // let --output reach the top-level option from any subcommand position
  for (CLI::App* s : {dist, encode, notmember, state, specval, sotcheck, demo,
                      demo_schroeder, demo_join, demo_biorth})
    s->fallthrough();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(std::move(rev));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return 1;
  }
  a.prefix_given = state->count("--prefix") > 0;

  try {
    Config cfg = load_config();
    if (!a.output.empty()) cfg.output_format = a.output;

    if (dist->parsed()) return do_dist(a, cfg, out);
    if (encode->parsed()) return do_encode(a, cfg, out);
    if (notmember->parsed()) {
      if (a.subspace_path.empty() && a.certs_path.empty()) {
        err << "notmember: give --subspace or --certs\n";
        return 1;
      }
      return do_notmember(a, cfg, out);
    }
    if (state->parsed()) return do_state(a, cfg, out);
    if (specval->parsed()) return do_specval(a, cfg, out, err);
    if (sotcheck->parsed()) return do_sotcheck(a, cfg, out);
    if (demo->parsed()) {
      const std::string which = demo_schroeder->parsed() ? "schroeder"
                                : demo_join->parsed()    ? "join"
                                                         : "biorth";
      return do_demo(which, a, cfg, out);
    }
    err << app.help();
    return 1;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const json::exception& e) {
    err << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 2;
  }
}

int run_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cin, std::cout, std::cerr);
}

} // namespace qlat::cli
