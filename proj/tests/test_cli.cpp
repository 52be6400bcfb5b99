#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "ffgamma/app.hpp"
#include "ffgamma/errors.hpp"
#include "ffgamma/gammaeval.hpp"
#include "ffgamma/parse.hpp"

using namespace ffgamma;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
  std::vector<json> records() const {
    std::vector<json> r;
    std::istringstream in(out);
    std::string line;
    while (std::getline(in, line)) r.push_back(json::parse(line));
    return r;
  }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("rank and decide at level T^2-T") {
  const Run r = run({"rank", "--q", "3", "--f", "T^2-T"});
  REQUIRE(r.code == 0);
  const auto recs = r.records();
  REQUIRE(recs.size() == 1);
  CHECK(recs[0]["result"]["rank"] == 3);
  CHECK(recs[0]["result"]["nu_f"] == 3);
  CHECK(recs[0]["op"] == "rank");
  CHECK(recs[0]["q"] == 3);

  const Run d = run({"decide", "--q", "3", "--f", "T^2-T", "1/(T^2-T)", "1/T"});
  REQUIRE(d.code == 0);
  const json v = d.records().at(0)["result"];
  CHECK(v["verdict"] == "dependent-pair");
  CHECK(v["classes"] == json::parse("[[0,1]]"));
  CHECK(v["witnesses"][0]["lattice_agrees"] == true);

  const Run three = run({"decide", "--f", "T^2-T", "1/(T^2-T)", "(T+1)/(T^2-T)", "1/T"});
  CHECK(three.records().at(0)["result"]["classes"] == json::parse("[[0,1,2]]"));
  const Run ind = run({"decide", "--f", "T^2", "1/T^2", "1/T"});
  CHECK(ind.records().at(0)["result"]["verdict"] == "independent");
}

TEST_CASE("exit codes") {
  CHECK(run({"nonsense"}).code == 3);
  CHECK(run({}).code == 3);
  CHECK(run({"rank", "--bogus-flag"}).code == 3);
  CHECK(run({"rank"}).code == 3);
  CHECK(run({"pi", "--x", "1/(T"}).code == 3);
  CHECK(run({"rank", "--q", "6", "--f", "T"}).code == 3);
  CHECK(run({"rank", "--prec", "8", "--f", "T"}).code == 3);
  CHECK(run({"pi", "--x", "-T-1"}).code == 1);
  CHECK(run({"rank", "--f", "T^7"}).code == 1);
  CHECK(run({"rank", "--f", "T^3", "--deg-f-cap", "2"}).code == 1);
  CHECK(run({"motive-verify", "--f", "T^2", "--x", "1/T^2", "--ell-cap", "4"}).code == 1);
  CHECK(run({"equiv", "--f", "T^2", "[1/T]", "[1/T^3]"}).code == 1);
  CHECK(run({"pi", "--x", "1/T", "--prec", "32"}).code == 0);
  // An unreachable tolerance turns a verification into a failure.
  CHECK(run({"verify-fe", "--x", "1/T^2", "--prec", "32", "--tol", "1000"}).code == 2);
  CHECK(run({"verify-fe", "--x", "1/T^2", "--prec", "32"}).code == 0);
}

TEST_CASE("config file and flag precedence") {
  const std::string path = "test_cli_config.txt";
  {
    std::ofstream f(path);
    f << "# sample\nq = 2\nprec=40\ntrunc-t = 16\n\n";
  }
  auto rec = run({"pi", "--config", path, "--x", "1/T"}).records().at(0);
  CHECK(rec["q"] == 2);
  CHECK(rec["prec"] == 40);
  rec = run({"pi", "--config", path, "--x", "1/T", "--prec", "24"}).records().at(0);
  CHECK(rec["q"] == 2);
  CHECK(rec["prec"] == 24);
  // Default precision follows q.
  CHECK(run({"period", "--q", "2"}).records().at(0)["prec"] == 128);
  {
    std::ofstream f(path);
    f << "colour=blue\n";
  }
  CHECK(run({"period", "--config", path}).code == 3);
  CHECK(run({"period", "--config", "no/such/file"}).code == 3);
  std::remove(path.c_str());

  Config c;
  c.apply_text("q=5\nseed=7\n", {"q"});
  CHECK(c.q == 3);
  CHECK(c.seed == 7);
  CHECK_THROWS_AS(c.apply_text("prec=abc"), UsageError);
}

TEST_CASE("output is deterministic and summaries respect --json") {
  const std::vector<std::string> args = {"coleman-verify", "--x", "(T+1)/T^2", "--N", "2", "--prec", "64"};
  const Run a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
  CHECK(!a.err.empty());
  std::vector<std::string> quiet = args;
  quiet.push_back("--json");
  const Run c = run(quiet);
  CHECK(c.out == a.out);
  CHECK(c.err.empty());
}

TEST_CASE("Laurent JSON round trip") {
  const GaloisField& F = GaloisField::get(3);
  for (const char* x : {"1/T", "(T+1)/T^2", "1/(T^2-T)"}) {
    const auto rec = run({"pi", "--x", x, "--prec", "48"}).records().at(0);
    const LaurentNum v = laurent_from_json(rec["result"]);
    CHECK(laurent_to_json(v) == rec["result"]);
    CHECK(v.residual(pi_value(parse_elem(x, F), 48)) >= 48);
  }
  const LaurentNum z = LaurentNum::zero(F, 20);
  CHECK(laurent_from_json(laurent_to_json(z)).residual(z) >= 20);
  CHECK_THROWS_AS(laurent_from_json(json::parse(R"({"q":3,"val":0,"prec":4,"coeffs":[7]})")), UsageError);
  CHECK_THROWS_AS(laurent_from_json(json::parse(R"({"q":3})")), UsageError);
  for (const std::string& op : {"period", "e", "estar", "gamma", "exp"}) {
    const auto rec = run({op, "--x", "1/T^2", "--prec", "40"}).records().at(0);
    CHECK(laurent_to_json(laurent_from_json(rec["result"])) == rec["result"]);
  }
}

TEST_CASE("cycle text") {
  const GaloisField& F = GaloisField::get(3);
  const Poly f = parse_poly("T^2", F);
  const CycleElement c = parse_cycle("2*[1/T] - [1/T^2] + [ (T+1)/T^2 ]", f);
  CHECK(c.coeff(parse_elem("1/T", F)) == 2);
  CHECK(c.coeff(parse_elem("1/T^2", F)) == -1);
  CHECK(c.coeff(parse_elem("(T+1)/T^2", F)) == 1);
  CHECK(parse_cycle("1/T", f) == CycleElement::symbol(f, parse_elem("1/T", F)));
  CHECK_THROWS_AS(parse_cycle("[1/T", f), ParseError);
  CHECK_THROWS_AS(parse_cycle("2[1/T]", f), ParseError);
  CHECK_THROWS_AS(parse_cycle("[1/T] [1/T]", f), ParseError);
  CHECK_THROWS_AS(parse_cycle("[1/T^3]", f), DomainError);
  const Run b = run({"bracket", "--f", "T^2", "2*[1/T] + [1/T^2]"});
  CHECK(b.records().at(0)["result"] == 3);
}

TEST_CASE("remaining verbs produce records") {
  for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
           {"omega-at", "--prec", "32"},
           {"psi", "--x", "1/T^2", "--N", "2", "--prec", "32"},
           {"divpoly", "--a", "T^2"},
           {"adjpoly", "--f", "T^2"},
           {"cyclo", "--f", "T"},
           {"bracket", "--x", "1/T"},
           {"bracket-vec", "--f", "T", "[1/T]"},
           {"equiv", "--f", "T^2", "[1/T]", "[2/T]"},
           {"basis", "--f", "T^2"},
           {"motive-verify", "--x", "1/T", "--trunc-t", "32", "--prec", "64"},
           {"selftest"}}) {
    const Run r = run(args);
    INFO(args[0]);
    CHECK(r.code == 0);
    CHECK(!r.records().empty());
  }
  CHECK(run({"psi", "--x", "1/T^2", "--N", "2", "--prec", "32"}).records().size() == 3);
  CHECK(run({"selftest"}).records().size() == 11);
}
