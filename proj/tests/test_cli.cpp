#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "oracles.hpp"
#include "qlat/cli.hpp"
#include "qlat/config.hpp"
#include "qlat/error.hpp"
#include "qlat/json_io.hpp"
#include "qlat/lattice.hpp"
#include "qlat/plfunction.hpp"
#include "qlat/states.hpp"

using namespace qlat;
using nlohmann::json;

static Rational Q(long n, long d = 1) { return Rational(n, d); }

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path dir;
  TempDir() {
    static int counter = 0;
    dir = fs::temp_directory_path() /
          ("qlat_cli_" + std::to_string(::getpid()) + "_" + std::to_string(++counter));
    fs::create_directories(dir);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(dir, ec);
  }
  std::string write(const std::string& name, const std::string& content) {
    fs::path p = dir / name;
    std::ofstream f(p);
    f << content;
    return p.string();
  }
};

struct CliResult {
  int code;
  std::string out, err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::istringstream in;
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

} // namespace

TEST_CASE("vectors survive the JSON round trip exactly") {
  std::mt19937_64 rng(20260822);
  for (int t = 0; t < 50; ++t) {
    Vector v = testing::random_vector(rng, 5, 12, 9);
    CHECK(io::vector_from_json(io::vector_to_json(v)) == v);
  }
  /* the zero vector serializes as an empty entry list */
  CHECK(io::vector_from_json(io::vector_to_json(Vector{})).is_zero());
}

TEST_CASE("finite subspaces survive the JSON round trip generator by generator") {
  std::mt19937_64 rng(611);
  for (int t = 0; t < 25; ++t) {
    std::vector<Vector> gens;
    std::uniform_int_distribution<int> count(0, 4);
    int k = count(rng);
    for (int i = 0; i < k; ++i) gens.push_back(testing::random_vector(rng, 4, 8, 6));
    Subspace L = Subspace::finite(gens);
    Subspace back = io::subspace_from_json(io::subspace_to_json(L));
    REQUIRE(back.is_finite());
    REQUIRE(back.generators().size() == gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
      CHECK(back.generators()[i] == gens[i]);
  }
}

TEST_CASE("a declared tail bound turns the file into a countable presentation") {
  json j = json::parse(R"({
    "generators": [{"entries": [[0, "1", "0"]]}, {"entries": [[1, "1", "0"]]}],
    "tail_bound": {"scale": "1/2", "ratio": "1/3"}
  })");
  Subspace L = io::subspace_from_json(j);
  CHECK_FALSE(L.is_finite());
  CHECK(L.has_tail_bound());
  CHECK(L.tail_bound(0) == Q(1, 2));
  CHECK(L.tail_bound(2) == Q(1, 18));
  CHECK(L.generator(0) == io::vector_from_json(j["generators"][0]));
  CHECK(L.generator(1) == io::vector_from_json(j["generators"][1]));
  /* countable presentations do not serialize back */
  CHECK_THROWS_AS(io::subspace_to_json(L), DomainError);
}

TEST_CASE("states survive the JSON round trip") {
  Vector e0 = Vector::basis(0), e1 = Vector::basis(1);

  State fin = State::finite({{Q(1, 3), e0}, {Q(2, 3), e1}});
  State fin_back = io::state_from_json(io::state_to_json(fin));
  REQUIRE(fin_back.finite_size());
  CHECK(*fin_back.finite_size() == 2);
  CHECK(fin_back.term(0).weight == Q(1, 3));
  CHECK(fin_back.term(0).vec == e0);
  CHECK(fin_back.term(1).weight == Q(2, 3));
  CHECK_FALSE(fin_back.geometric_ratio());

  State geo = State::geometric({{Q(1, 2), e0}}, Q(1, 2));
  State geo_back = io::state_from_json(io::state_to_json(geo));
  CHECK_FALSE(geo_back.finite_size());
  REQUIRE(geo_back.geometric_ratio());
  CHECK(*geo_back.geometric_ratio() == Q(1, 2));
  CHECK(geo_back.listed_size() == 1);
  for (std::size_t k = 0; k < 5; ++k) {
    CHECK(geo_back.term(k).weight == geo.term(k).weight);
    CHECK(geo_back.term(k).vec == geo.term(k).vec);
  }
  CHECK(geo_back.tail_weight(3) == geo.tail_weight(3));
}

TEST_CASE("operators round trip through their JSON forms") {
  SUBCASE("diagonal") {
    json j = json::parse(R"({"kind": "diagonal", "entries": ["1/2", "-1/3", "0", "1"]})");
    BoundedOperator A = io::operator_from_json(j);
    CHECK(A.kind() == BoundedOperator::Kind::Diagonal);
    CHECK(A.self_adjoint());
    CHECK(A.entry(0, 0) == Gaussian(Q(1, 2)));
    CHECK(A.entry(1, 1) == Gaussian(Q(-1, 3)));
    CHECK(A.entry(3, 3) == Gaussian(Q(1)));
    CHECK(A.entry(4, 4).is_zero());
    CHECK(A.entry(0, 1).is_zero());
    auto eigs = io::diagonal_entries_from_json(j);
    REQUIRE(eigs.size() == 4);
    CHECK(eigs[1] == Q(-1, 3));
  }
  SUBCASE("banded") {
    json j = json::parse(R"({"kind": "banded", "band": 1, "entries": [
      [0, 1, "1/4+1/4i"], [1, 0, "1/4-1/4i"], [1, 1, "1/2"]]})");
    BoundedOperator A = io::operator_from_json(j);
    CHECK(A.kind() == BoundedOperator::Kind::Banded);
    CHECK(A.self_adjoint());
    CHECK(A.entry(0, 1) == Gaussian(Q(1, 4), Q(1, 4)));
    CHECK(A.entry(1, 0) == Gaussian(Q(1, 4), Q(-1, 4)));
    CHECK(A.entry(1, 1) == Gaussian(Q(1, 2)));
    CHECK(A.entry(0, 0).is_zero());
    CHECK(io::diagonal_entries_from_json(j).empty());
  }
  SUBCASE("finite") {
    json j = json::parse(R"({"kind": "finite", "rows": [["0", "1/2"], ["1/2", "0"]]})");
    BoundedOperator A = io::operator_from_json(j);
    CHECK(A.kind() == BoundedOperator::Kind::Finite);
    CHECK(A.self_adjoint());
    CHECK(A.entry(0, 1) == Gaussian(Q(1, 2)));
    CHECK(A.entry(5, 5).is_zero());
  }
}

TEST_CASE("piecewise-linear functions round trip through JSON") {
  PLFunction f = PLFunction::from_breakpoints(
      {{Q(-1), Q(0)}, {Q(0), Q(2)}, {Q(1, 2), Q(1, 3)}});
  PLFunction back = io::pl_from_json(io::pl_to_json(f));
  REQUIRE(back.breakpoints().size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(back.breakpoints()[i].first == f.breakpoints()[i].first);
    CHECK(back.breakpoints()[i].second == f.breakpoints()[i].second);
  }
}

TEST_CASE("certificate lines round trip") {
  std::mt19937_64 rng(99);
  Subspace L = Subspace::finite({Vector::basis(1)});
  SubspaceCode code = SubspaceCode::encode(L);
  std::vector<Certificate> certs = code.collect(5, 20000);
  REQUIRE(certs.size() == 5);
  std::ostringstream buf;
  for (const auto& c : certs) buf << io::certificate_to_line(c) << "\n";
  buf << "\n";  // blank lines are skipped
  std::istringstream in(buf.str());
  std::vector<Certificate> back = io::certificates_from_lines(in);
  REQUIRE(back.size() == certs.size());
  for (std::size_t i = 0; i < certs.size(); ++i) {
    CHECK(back[i].c == certs[i].c);
    CHECK(back[i].r == certs[i].r);
  }
}

TEST_CASE("malformed JSON shapes are parse errors, semantic violations domain errors") {
  CHECK_THROWS_AS(io::vector_from_json(json::parse(R"({"wrong": []})")), ParseError);
  CHECK_THROWS_AS(io::vector_from_json(json::parse(R"({"entries": [[0, "1"]]})")),
                  ParseError);
  CHECK_THROWS_AS(io::vector_from_json(json::parse(R"({"entries": [[0, "x", "0"]]})")),
                  ParseError);
  CHECK_THROWS_AS(io::state_from_json(json::parse(
                      R"({"terms": [["1", {"entries": [[0,"1","0"]]}]],
                          "tail": {"type": "weird"}})")),
                  ParseError);
  /* band entry outside the declared band */
  CHECK_THROWS_AS(io::operator_from_json(json::parse(
                      R"({"kind": "banded", "band": 1,
                          "entries": [[0, 2, "1/4"], [2, 0, "1/4"]]})")),
                  ParseError);
  /* banded without the conjugate mirror */
  CHECK_THROWS_AS(io::operator_from_json(json::parse(
                      R"({"kind": "banded", "band": 1, "entries": [[0, 1, "1/4"]]})")),
                  ParseError);
  /* non-hermitian finite block */
  CHECK_THROWS_AS(io::operator_from_json(json::parse(
                      R"({"kind": "finite", "rows": [["0", "1/2"], ["1/3", "0"]]})")),
                  ParseError);
  /* well-formed file, out-of-range entry: a domain problem, not a parse one */
  CHECK_THROWS_AS(io::operator_from_json(json::parse(
                      R"({"kind": "diagonal", "entries": ["3/2"]})")),
                  DomainError);
}

TEST_CASE("config files fill in every documented knob") {
  TempDir td;
  CHECK(load_config_from("").default_fuel == 12);

  std::string path = td.write("cfg.json", R"({
    "default_fuel": 7,
    "default_precision": "1/4096",
    "output_format": "json",
    "threads": 3,
    "orbit_cap": 9,
    "max_poly_degree": 123
  })");
  Config cfg = load_config_from(path);
  CHECK(cfg.default_fuel == 7);
  CHECK(cfg.default_precision == Q(1, 4096));
  CHECK(cfg.output_format == "json");
  CHECK(cfg.threads == 3);
  CHECK(cfg.orbit_cap == 9);
  CHECK(cfg.max_poly_degree == 123);

  CHECK_THROWS_AS(load_config_from(td.write("bad1.json", R"({"default_fuel": 0})")),
                  ParseError);
  CHECK_THROWS_AS(
      load_config_from(td.write("bad2.json", R"({"default_precision": "0"})")),
      ParseError);
  CHECK_THROWS_AS(
      load_config_from(td.write("bad3.json", R"({"output_format": "xml"})")),
      ParseError);
  CHECK_THROWS_AS(load_config_from(td.write("bad4.json", "[1,2]")), ParseError);
  CHECK_THROWS_AS(load_config_from(td.dir.string() + "/absent.json"), ParseError);
}

TEST_CASE("dist prints the exact squared distance") {
  TempDir td;
  std::string vec = td.write("e0.json", R"({"entries": [[0, "1", "0"]]})");
  std::string sub = td.write("span_e1.json",
                             R"({"generators": [{"entries": [[1, "1", "0"]]}]})");

  CliResult r = run_cli({"dist", "--vec", vec, "--subspace", sub});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");

  CliResult rj = run_cli({"dist", "--vec", vec, "--subspace", sub, "--output", "json"});
  CHECK(rj.code == 0);
  CHECK(rj.out == "{\"distance_sq\":\"1\"}\n");
}

TEST_CASE("encode emits exactly the requested number of valid certificate lines") {
  TempDir td;
  std::string sub = td.write("span_e1.json",
                             R"({"generators": [{"entries": [[1, "1", "0"]]}]})");
  CliResult r = run_cli({"encode", "--subspace", sub, "--max-certs", "3"});
  CHECK(r.code == 0);
  auto lines = split_lines(r.out);
  REQUIRE(lines.size() == 3);

  Subspace L = Subspace::finite({Vector::basis(1)});
  std::istringstream in(r.out);
  for (const Certificate& cert : io::certificates_from_lines(in))
    CHECK(certificate_valid(L, cert.c, cert.r));

  /* byte-determinism: an identical invocation reproduces identical bytes */
  CliResult again = run_cli({"encode", "--subspace", sub, "--max-certs", "3"});
  CHECK(again.out == r.out);
}

TEST_CASE("notmember semidecides through the encoded certificate stream") {
  TempDir td;
  std::string e0 = td.write("e0.json", R"({"entries": [[0, "1", "0"]]})");
  std::string e1 = td.write("e1.json", R"({"entries": [[1, "1", "0"]]})");
  std::string sub = td.write("span_e1.json",
                             R"({"generators": [{"entries": [[1, "1", "0"]]}]})");

  CliResult hit = run_cli({"notmember", "--vec", e0, "--subspace", sub,
                           "--fuel", "3000", "--output", "json"});
  CHECK(hit.code == 0);
  json jh = json::parse(hit.out);
  CHECK(jh["verdict"] == "confirmed");
  CHECK(jh["confirmed_at"].get<std::uint64_t>() < 3000);

  /* a member stays unknown at any fuel, and that is still a clean exit */
  CliResult member = run_cli({"notmember", "--vec", e1, "--subspace", sub,
                              "--fuel", "200"});
  CHECK(member.code == 0);
  CHECK(member.out == "unknown at fuel 200\n");

  /* the same decision can run from a certificate file instead */
  CliResult enc = run_cli({"encode", "--subspace", sub, "--max-certs", "40",
                           "--slot-cap", "3000"});
  std::string certs = td.write("certs.jsonl", enc.out);
  CliResult from_file = run_cli({"notmember", "--vec", e0, "--certs", certs,
                                 "--fuel", "40"});
  CHECK(from_file.code == 0);
  CHECK(from_file.out.find("confirmed") != std::string::npos);

  CliResult neither = run_cli({"notmember", "--vec", e0});
  CHECK(neither.code == 1);
}

TEST_CASE("state encloses the mixed value") {
  TempDir td;
  std::string st = td.write("st.json", R"({
    "terms": [["1/2", {"entries": [[0, "1", "0"]]}],
              ["1/2", {"entries": [[1, "1", "0"]]}]],
    "tail": {"type": "finite"}})");
  std::string sub = td.write("span_e1.json",
                             R"({"generators": [{"entries": [[1, "1", "0"]]}]})");
  CliResult r = run_cli({"state", "--state", st, "--subspace", sub});
  CHECK(r.code == 0);
  CHECK(r.out == "[1/2, 1/2]\n");

  CliResult rj = run_cli({"state", "--state", st, "--subspace", sub,
                          "--output", "json"});
  json j = json::parse(rj.out);
  CHECK(j["lower"] == "1/2");
  CHECK(j["upper"] == "1/2");
  CHECK(j["terms"] == 2);
}

TEST_CASE("specval probes and bounds the spectral value") {
  TempDir td;
  std::string op = td.write("op.json",
                            R"({"kind": "diagonal", "entries": ["1/2", "-1/2", "0"]})");
  std::string x = td.write("x.json",
                           R"({"entries": [[0, "3/5", "0"], [1, "4/5", "0"]]})");

  /* mass on [1/4, 3/4] is |3/5|^2 = 9/25 < 1/2 */
  CliResult less = run_cli({"specval", "--op", op, "--vec", x, "--set",
                            "[1/4,3/4]", "--q", "1/2", "--fuel", "8",
                            "--output", "json"});
  CHECK(less.code == 0);
  CHECK(json::parse(less.out)["verdict"] == "confirmed");

  /* and 9/25 itself is never strictly below */
  CliResult tight = run_cli({"specval", "--op", op, "--vec", x, "--set",
                             "[1/4,3/4]", "--q", "9/25", "--fuel", "10"});
  CHECK(tight.code == 0);
  CHECK(tight.out.find("unknown") != std::string::npos);

  CliResult upper = run_cli({"specval", "--op", op, "--vec", x, "--set",
                             "[1/4,3/4]", "--upper", "--fuel", "10",
                             "--output", "json"});
  CHECK(upper.code == 0);
  Rational bound = Rational::parse(
      json::parse(upper.out)["upper_bound"].get<std::string>());
  CHECK(bound >= Q(9, 25));
  CHECK(bound - Q(9, 25) <= Q(1, 256));

  CliResult no_q = run_cli({"specval", "--op", op, "--vec", x, "--set", "empty"});
  CHECK(no_q.code == 1);

  CliResult bad_set = run_cli({"specval", "--op", op, "--vec", x, "--set",
                               "[1/4", "--q", "1/2"});
  CHECK(bad_set.code == 3);
}

TEST_CASE("sotcheck reports shift behaviour per probe") {
  TempDir td;
  std::string p = td.write("p.json", R"({"entries": [[2, "1", "0"], [5, "1", "0"]]})");
  std::string e0 = td.write("e0.json", R"({"entries": [[0, "1", "0"]]})");

  CliResult up = run_cli({"sotcheck", "--shift", "up", "--probe", p,
                          "--probe", e0, "--output", "json"});
  CHECK(up.code == 0);
  json ju = json::parse(up.out);
  CHECK(ju["verdict"] == "converges");
  CHECK(ju["n0"] == 6);
  REQUIRE(ju["per_probe"].size() == 2);
  CHECK(ju["per_probe"][0]["vanish_at"] == 6);
  CHECK(ju["per_probe"][1]["vanish_at"] == 1);

  CliResult down = run_cli({"sotcheck", "--shift", "down", "--probe", e0,
                            "--output", "json"});
  CHECK(down.code == 0);
  json jd = json::parse(down.out);
  CHECK(jd["verdict"] == "does not converge");
  CHECK(jd["n0"].is_null());
  CHECK(jd["per_probe"][0]["final_norm_sq"] == "1");
}

TEST_CASE("demo subcommands print their reports") {
  CliResult s = run_cli({"demo", "schroeder", "--max-n", "5"});
  CHECK(s.code == 0);
  auto lines = split_lines(s.out);
  REQUIRE(lines.size() == 5);
  for (std::size_t i = 0; i < 5; ++i)
    CHECK(lines[i] == "n=" + std::to_string(i + 1) + ": 1/2");

  CliResult sj = run_cli({"demo", "schroeder", "--max-n", "3", "--output", "json"});
  json j = json::parse(sj.out);
  CHECK(j["limit"] == "0");
  CHECK(j["discontinuous"] == true);
  CHECK(j["values"] == json::array({"1/2", "1/2", "1/2"}));

  CliResult join = run_cli({"demo", "join", "--max-n", "50", "--output", "json"});
  json jj = json::parse(join.out);
  CHECK(jj["dim_meet_of_join"] == 1);
  CHECK(jj["dim_join_of_meets"] == 0);
  CHECK(jj["distributive"] == false);

  CliResult bi = run_cli({"demo", "biorth", "--max-n", "30", "--output", "json"});
  json jb = json::parse(bi.out);
  CHECK(jb["all_closures_equal_line"] == true);
  CHECK(jb["tail_escapes"] == true);

  CliResult none = run_cli({"demo"});
  CHECK(none.code == 1);
}

TEST_CASE("exit codes separate usage, parse, and domain failures") {
  TempDir td;
  std::string junk = td.write("junk.json", "not json at all");
  std::string vec = td.write("e0.json", R"({"entries": [[0, "1", "0"]]})");
  std::string sub = td.write("span_e1.json",
                             R"({"generators": [{"entries": [[1, "1", "0"]]}]})");

  CHECK(run_cli({"frobnicate"}).code == 1);
  CHECK(run_cli({}).code == 1);
  CHECK(run_cli({"dist", "--vec", vec}).code == 1);  // missing required flag

  CHECK(run_cli({"dist", "--vec", junk, "--subspace", sub}).code == 3);
  CHECK(run_cli({"dist", "--vec", td.dir.string() + "/absent.json",
                 "--subspace", sub}).code == 3);

  /* countable presentation: well-formed file, but no exact finite distance */
  std::string countable = td.write("countable.json", R"({
    "generators": [{"entries": [[0, "1", "0"]]}],
    "tail_bound": {"scale": "1", "ratio": "1/2"}})");
  CHECK(run_cli({"dist", "--vec", vec, "--subspace", countable}).code == 2);

  CliResult help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("specval") != std::string::npos);
}

TEST_CASE("the config file behind QLATTICE_CONFIG steers defaults") {
  TempDir td;
  std::string cfg = td.write("cfg.json", R"({"output_format": "json", "default_fuel": 3})");
  std::string e1 = td.write("e1.json", R"({"entries": [[1, "1", "0"]]})");
  std::string sub = td.write("span_e1.json",
                             R"({"generators": [{"entries": [[1, "1", "0"]]}]})");

  ::setenv("QLATTICE_CONFIG", cfg.c_str(), 1);
  CliResult r = run_cli({"notmember", "--vec", e1, "--subspace", sub});
  CliResult flag_wins = run_cli({"notmember", "--vec", e1, "--subspace", sub,
                                 "--output", "text"});
  CliResult broken = [&] {
    ::setenv("QLATTICE_CONFIG", (td.dir.string() + "/absent.json").c_str(), 1);
    return run_cli({"demo", "join"});
  }();
  ::unsetenv("QLATTICE_CONFIG");

  CHECK(r.code == 0);
  json j = json::parse(r.out);  // configured format json, configured fuel 3
  CHECK(j["verdict"] == "unknown");
  CHECK(j["fuel"] == 3);
  CHECK(flag_wins.out == "unknown at fuel 3\n");
  CHECK(broken.code == 3);
}
