#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qck_cli/commands.hpp"
#include "qck_cli/formats.hpp"

using namespace qck;
using namespace qck::cli;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("qck_cli_test_" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  fs::path file(const std::string& name, const std::string& content) const {
    const auto p = path / name;
    std::ofstream(p) << content;
    return p;
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run_args(std::vector<std::string> args, std::string* out_text = nullptr, std::string* err_text = nullptr) {
  args.insert(args.begin(), "qck");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

}  // namespace

TEST_SUITE("formats") {
  TEST_CASE("format_real is shortest round-trip") {
    CHECK(format_real(0.1) == "0.1");
    CHECK(format_real(-0.5) == "-0.5");
    CHECK(format_real(1.0 / 3.0) == "0.3333333333333333");
    CHECK(std::stod(format_real(1.0 / 3.0)) == 1.0 / 3.0);
  }

  TEST_CASE("matrix document round trip") {
    ComplexMatrix m(2, 2);
    m << Complex(0.25, 0), Complex(0.1, -0.2), Complex(0.1, 0.2), Complex(0.75, 0);
    const Json doc = matrix_to_json(m);
    CHECK(doc["dim"] == 2);
    CHECK(doc["entries"].size() == 4);
    CHECK(matrix_from_json(parse_json(dump(doc), "mem")) == m);
  }

  TEST_CASE("matrix document errors carry the field position") {
    const auto bad = [](const std::string& text) {
      try {
        matrix_from_json(parse_json(text, "doc.json"), "doc.json");
      } catch (const FormatError& e) {
        return std::string(e.what());
      }
      return std::string();
    };
    CHECK(bad(R"({"entries": []})").find("missing field 'dim'") != std::string::npos);
    CHECK(bad(R"({"dim": 2, "entries": [[1,0],[0,0],[0,0]]})").find("/entries") != std::string::npos);
    CHECK(bad(R"({"dim": 1, "entries": [[1,"x"]]})").find("/entries/0/1") != std::string::npos);
    CHECK(bad(R"({"dim": 1, "entries": [[1,0)").find("parse error at byte") != std::string::npos);
  }

  TEST_CASE("bloch document") {
    BlochVector tau = bloch_origin(2);
    tau.tau << 0.1, 0.2, 0.3;
    const auto back = bloch_from_json(bloch_to_json(tau));
    CHECK(back.d == 2);
    CHECK(back.tau == tau.tau);
    CHECK_THROWS_AS(bloch_from_json(parse_json(R"({"d": 3, "tau": [0, 0]})", "t")), FormatError);
  }

  TEST_CASE("csv layouts") {
    const auto samples = spin1::sample_physical(3, 1);
    const std::string csv = spin1_samples_csv(samples.states);
    CHECK(csv.rfind("a,b,c,f_re,f_im,g_re,g_im,h_re,h_im,det\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
    CHECK(csv.back() == '\n');
  }
}

TEST_SUITE("cli") {
  TEST_CASE("validate exit codes") {
    TempDir dir;
    const auto good = dir.file("good.json", R"({"dim": 2, "entries": [[0.5,0],[0,0],[0,0],[0.5,0]]})");
    const auto indefinite = dir.file("bad.json", R"({"dim": 2, "entries": [[0.5,0],[0.6,0],[0.6,0],[0.5,0]]})");
    const auto truncated = dir.file("trunc.json", R"({"dim": 2, "entries": [[0.5,0],[0,0])");
    std::string out;
    CHECK(run_args({"validate", good.string()}, &out) == kSuccess);
    CHECK(out.find("\"density_matrix\": true") != std::string::npos);
    CHECK(run_args({"validate", indefinite.string()}, &out) == kDomainError);
    CHECK(out.find("\"psd\": false") != std::string::npos);
    CHECK(run_args({"validate", truncated.string()}) == kIoError);
    CHECK(run_args({"validate", (dir.path / "missing.json").string()}) == kIoError);
    CHECK(run_args({"validate", good.string(), "--tol", "-1"}) == kDomainError);
  }

  TEST_CASE("tolerance override from the environment") {
    TempDir dir;
    const auto slightly_off = dir.file("m.json", R"({"dim": 2, "entries": [[0.5,0],[0,0],[0,0],[0.5000001,0]]})");
    CHECK(run_args({"validate", slightly_off.string()}) == kDomainError);
    setenv("QCK_DEFAULT_TOL", "1e-6", 1);
    CHECK(run_args({"validate", slightly_off.string()}) == kSuccess);
    setenv("QCK_DEFAULT_TOL", "garbage", 1);
    CHECK(run_args({"validate", slightly_off.string()}) == kIoError);
    unsetenv("QCK_DEFAULT_TOL");
  }

  TEST_CASE("ggm") {
    std::string out;
    CHECK(run_args({"ggm", "--d", "3"}, &out) == kSuccess);
    const Json doc = parse_json(out, "stdout");
    REQUIRE(doc["matrices"].size() == 8);
    const auto b = ggm_basis(3);
    for (std::size_t i = 0; i < 8; ++i) {
      CHECK(doc["matrices"][i]["label"] == b.labels()[i].name());
      CHECK(matrix_from_json(doc["matrices"][i]) == b[i]);
    }
    std::string again;
    run_args({"ggm", "--d", "3"}, &again);
    CHECK(out == again);
    CHECK(run_args({"ggm", "--d", "1"}) == kDomainError);
  }

  TEST_CASE("bloch to and from") {
    TempDir dir;
    const auto m = dir.file("m.json", R"({"dim": 2, "entries": [[1,0],[0,0],[0,0],[0,0]]})");
    const auto tau_path = dir.path / "tau.json";
    CHECK(run_args({"bloch", "to", m.string(), "--out", tau_path.string()}) == kSuccess);
    const auto tau = bloch_from_json(read_json_file(tau_path));
    CHECK(tau.tau(2) == 0.5);
    std::string out, err;
    CHECK(run_args({"bloch", "from", tau_path.string()}, &out) == kSuccess);
    CHECK(matrix_from_json(parse_json(out, "stdout"))(0, 0) == Complex(1.0, 0.0));
    const auto outside = dir.file("o.json", R"({"d": 2, "tau": [0, 0, 1]})");
    CHECK(run_args({"bloch", "from", outside.string()}, &out, &err) == kSuccess);
    CHECK(err.find("not positive semidefinite") != std::string::npos);
  }

  TEST_CASE("spin1-sample rows revalidate as density matrices") {
    TempDir dir;
    const auto csv_path = dir.path / "s.csv";
    std::string summary;
    CHECK(run_args({"spin1-sample", "--count", "1000", "--seed", "42", "--out", csv_path.string()}, &summary) ==
          kSuccess);
    CHECK(summary.find("acceptance_rate") != std::string::npos);
    std::ifstream in(csv_path);
    std::string line;
    std::getline(in, line);
    int rows = 0;
    while (std::getline(in, line)) {
      std::vector<double> v;
      std::stringstream ss(line);
      std::string cell;
      while (std::getline(ss, cell, ',')) v.push_back(std::stod(cell));
      REQUIRE(v.size() == 10);
      spin1::Params p;
      p.a = v[0];
      p.b = v[1];
      p.c = v[2];
      p.f = {v[3], v[4]};
      p.g = {v[5], v[6]};
      p.h = {v[7], v[8]};
      const auto m = dir.file("row.json", dump(matrix_to_json(p.matrix())));
      REQUIRE(run_args({"validate", m.string()}) == kSuccess);
      ++rows;
    }
    CHECK(rows == 1000);
    CHECK(run_args({"spin1-sample", "--count", "0"}) == kDomainError);
    CHECK(run_args({"spin1-sample", "--count", "5", "--out", (dir.path / "no/such/dir.csv").string()}) == kIoError);
  }

  TEST_CASE("sector") {
    std::string out;
    CHECK(run_args({"sector", "--sites", "2"}, &out) == kSuccess);
    const Json doc = parse_json(out, "stdout");
    CHECK(doc["total_states"] == 36);
    CHECK(doc["naive_qubits"] == 6);
    CHECK(doc["headline"]["reduced_qubits"] == 2);
    CHECK(doc["sectors"].size() == 3);
    CHECK(run_args({"sector", "--sites", "3"}) == kDomainError);

    TempDir dir;
    const auto csv = dir.path / "states.csv";
    CHECK(run_args({"sector", "--sites", "2", "--csv", csv.string()}) == kSuccess);
    const std::string text = slurp(csv);
    CHECK(std::count(text.begin(), text.end(), '\n') == 11);
  }

  TEST_CASE("optimize") {
    TempDir dir;
    const auto z = dir.file("z.json", R"({"dim": 2, "entries": [[1,0],[0,0],[0,0],[-1,0]]})");
    std::string out;
    const auto traj = dir.path / "t.csv";
    CHECK(run_args({"optimize", "--d", "2", "--hamiltonian", z.string(), "--out", traj.string()}, &out) == kSuccess);
    const Json summary = parse_json(out, "stdout");
    CHECK(summary["final_objective"].get<double>() == doctest::Approx(-1.0).epsilon(1e-5));
    CHECK(summary["min_eigenvalue"].get<double>() == doctest::Approx(-1.0));

    const auto third = dir.file("i3.json", R"({"dim": 3, "entries": [[0.3333333333333333,0],[0,0],[0,0],[0,0],[0.3333333333333333,0],[0,0],[0,0],[0,0],[0.3333333333333333,0]]})");
    CHECK(run_args({"optimize", "--d", "3", "--hamiltonian", third.string()}, &out) == kSuccess);
    CHECK(out == "iter,objective,projected,tau_1,tau_2,tau_3,tau_4,tau_5,tau_6,tau_7,tau_8\n0,0.3333333333333333,0,0,0,0,0,0,0,0,0\n");

    const auto skew = dir.file("skew.json", R"({"dim": 2, "entries": [[0,0],[1,0],[0,0],[0,0]]})");
    CHECK(run_args({"optimize", "--d", "2", "--hamiltonian", skew.string()}) == kDomainError);
    CHECK(run_args({"optimize", "--d", "3", "--hamiltonian", z.string()}) == kDomainError);
    CHECK(run_args({"optimize", "--d", "2", "--hamiltonian", z.string(), "--init", "bogus"}) == kDomainError);
  }

  TEST_CASE("usage errors") {
    CHECK(run_args({}) == kIoError);
    CHECK(run_args({"frobnicate"}) == kIoError);
    CHECK(run_args({"--help"}) == kSuccess);
  }
}
