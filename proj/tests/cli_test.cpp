// End-to-end checks of the command-line tool. The binary path arrives via
// ORTHOGUARD_BIN; work happens in a scratch directory under /tmp.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cerr << "FAIL: " << what << '\n';
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
}

struct Runner {
  std::string bin;
  std::string dir;

  int run(const std::string& args, const std::string& out_file = "") const {
    std::string cmd = bin + " " + args;
    if (!out_file.empty()) cmd += " > " + out_file;
    cmd += " 2> " + dir + "/stderr.txt";
    const int rc = std::system(cmd.c_str());
    return rc < 0 ? rc : WEXITSTATUS(rc);
  }
};

}  // namespace

int main() {
  const char* bin = std::getenv("ORTHOGUARD_BIN");
  if (!bin) {
    std::cerr << "ORTHOGUARD_BIN not set\n";
    return 1;
  }
  std::string dir = "/tmp/orthoguard_cli_XXXXXX";
  if (!mkdtemp(dir.data())) {
    std::cerr << "cannot create scratch dir\n";
    return 1;
  }
  const Runner r{bin, dir};
  const std::string valley = dir + "/valley.json";
  spit(valley, R"({"version":1,"vertices":[[0,2],[1,2],[1,0],[3,0],[3,2],[4,2]]})");

  // gen: determinism, the stairs fixture, usage errors
  expect(r.run("gen --pattern ascending_stairs --steps 3 --max-rise 1 -o " + dir +
               "/stairs.json") == 0,
         "gen stairs");
  expect(slurp(dir + "/stairs.json") ==
             R"({"version":1,"vertices":[[0,0],[1,0],[1,1],[2,1],[2,2],[3,2]]})",
         "stairs fixture bytes");
  expect(r.run("gen --seed 7 --steps 40 -o " + dir + "/a.json") == 0, "gen a");
  expect(r.run("gen --seed 7 --steps 40 -o " + dir + "/b.json") == 0, "gen b");
  expect(slurp(dir + "/a.json") == slurp(dir + "/b.json"), "gen determinism");
  expect(r.run("gen --steps 0") == 2, "gen steps=0 is a usage error");
  expect(r.run("gen") == 2, "gen without steps is a usage error");
  expect(r.run("frobnicate") == 2, "unknown subcommand");

  // solve
  expect(r.run("solve " + valley + " --side right -o " + dir + "/right.json") == 0,
         "solve right");
  expect(slurp(dir + "/right.json").find("\"guards\":[2]") != std::string::npos,
         "valley right guards [2]");
  expect(r.run("solve " + valley + " --side full -o " + dir + "/full.json") == 0,
         "solve full");
  expect(slurp(dir + "/full.json").find("\"guards\":[2,5]") != std::string::npos,
         "valley full guards [2,5]");
  expect(r.run("solve " + dir + "/missing.json") == 3, "missing terrain file");
  spit(dir + "/bad.json", "{broken");
  expect(r.run("solve " + dir + "/bad.json") == 3, "malformed terrain document");

  // check
  expect(r.run("check " + valley + " " + dir + "/full.json") == 0, "check full solution");
  spit(dir + "/weak.json", R"({"side":"full","guards":[1]})");
  expect(r.run("check " + valley + " " + dir + "/weak.json", dir + "/check.out") == 1,
         "incomplete coverage exits 1");
  expect(slurp(dir + "/check.out").find("unguarded: 3 4") != std::string::npos,
         "unguarded vertices listed 1-based");

  // oracle
  expect(r.run("oracle " + valley + " --side full", dir + "/oracle.out") == 0, "oracle");
  expect(slurp(dir + "/oracle.out").find("optimum 1") != std::string::npos,
         "valley optimum 1");
  expect(r.run("oracle " + valley + " --side full --cap 1") == 4,
         "budget exhaustion exits 4");

  // verify
  expect(r.run("verify " + dir + "/stairs.json --exhaustive", dir + "/verify.out") == 0,
         "verify stairs");
  expect(slurp(dir + "/verify.out").find("violations 0") != std::string::npos,
         "verify prints counters");

  // render
  expect(r.run("render " + valley + " --solution " + dir + "/full.json -o " + dir +
               "/v.svg") == 0,
         "render");
  const std::string svg = slurp(dir + "/v.svg");
  expect(svg.find("<svg") != std::string::npos, "svg emitted");
  expect(r.run("render " + valley + " --solution " + dir + "/full.json -o " + dir +
               "/v2.svg") == 0,
         "render again");
  expect(slurp(dir + "/v2.svg") == svg, "render determinism");

  // bench (tiny) + CSV determinism of everything but the time column
  expect(r.run("bench --sizes 1e2,200 --seeds-per-size 2 --csv " + dir + "/b1.csv",
               dir + "/bench.out") == 0,
         "bench");
  expect(r.run("bench --sizes 1e2,200 --seeds-per-size 2 --csv " + dir + "/b2.csv") == 0,
         "bench again");
  auto strip_time = [](const std::string& csv) {
    std::istringstream in(csv);
    std::string line, out;
    while (std::getline(in, line)) {
      const size_t comma = line.rfind(',');
      out += line.substr(0, comma);
      out += '\n';
    }
    return out;
  };
  expect(strip_time(slurp(dir + "/b1.csv")) == strip_time(slurp(dir + "/b2.csv")),
         "bench rows deterministic up to the time column");
  expect(slurp(dir + "/b1.csv").rfind("n,seed,guards,visits,visits_per_n,micros", 0) == 0,
         "bench csv header");
  expect(r.run("bench --sizes 7") == 2, "odd size is a usage error");

  if (failures == 0) std::cout << "cli tests passed\n";
  return failures == 0 ? 0 : 1;
}
