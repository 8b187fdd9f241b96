// End-to-end checks of the installed CLI binary.  argv[1] is the binary path.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
    std::cout << (ok ? "ok: " : "FAILED: ") << what << "\n";
    if (!ok) ++failures;
}

int run(const std::string& cmd) {
    const int rc = std::system(cmd.c_str());
    if (rc == -1) return -1;
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

void write(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_integration <binary>\n";
        return 2;
    }
    const std::string bin = argv[1];
    const std::string dir = "cli_itest_tmp";
    run("rm -rf " + dir);
    run("mkdir -p " + dir);

    // T annihilates the arcsine density: image coefficients are all zero.
    write(dir + "/arcsine.json", R"({"weight":"inv_sqrt","coeffs":[1.0]})");
    check(run(bin + " transform " + dir + "/arcsine.json --output " + dir + "/t1.json") == 0,
          "transform exits 0 on spectral input");
    {
        const std::string out = slurp(dir + "/t1.json");
        check(out.find("\"flat_u\"") != std::string::npos, "image lands in the flat class");
        check(out.find("1.0") == std::string::npos && out.find("0.0") != std::string::npos,
              "arcsine density maps to the zero series");
    }

    // T-hat of the constant U_0 is the mean-zero T_1/w series [0, 1].
    write(dir + "/one.json", R"({"weight":"flat_u","coeffs":[1.0]})");
    check(run(bin + " transform " + dir + "/one.json --hat --output " + dir + "/h1.json") == 0,
          "transform --hat exits 0");
    {
        const std::string out = slurp(dir + "/h1.json");
        check(out.find("\"inv_sqrt\"") != std::string::npos, "hat image is an inv_sqrt series");
        check(out.find("0.0") < out.find("1.0"), "hat image coefficients are [0, 1]");
    }

    // norm: the constant profile has L log L norm exactly 4.
    write(dir + "/const_grid.csv", "node,value\n-0.9,1.0\n0.0,1.0\n0.9,1.0\n");
    check(run(bin + " norm " + dir + "/const_grid.csv --space llogl --output " + dir +
              "/n1.json") == 0,
          "norm exits 0 on CSV input");
    {
        const std::string out = slurp(dir + "/n1.json");
        const auto pos = out.find("\"llogl\": ");
        double v = -1.0;
        if (pos != std::string::npos) v = std::stod(out.substr(pos + 9));
        check(std::abs(v - 4.0) < 1e-9, "llogl of the constant is 4");
    }

    // invert: spectral path residual is reported and tiny.
    write(dir + "/g.json", R"({"weight":"flat_u","coeffs":[0.0,-0.5]})");
    check(run(bin + " invert " + dir + "/g.json --c 2.0 --output " + dir + "/inv.json") == 0,
          "invert exits 0");
    {
        const std::string out = slurp(dir + "/inv.json");
        check(out.find("\"c\": 2.0") != std::string::npos, "invert reports c");
        check(out.find("\"residual_l1\"") != std::string::npos, "invert reports the residual");
    }

    // csv output path for a quadrature transform
    check(run(bin + " --format csv transform " + dir + "/one.json --method quadrature"
              " --points 9 --output " + dir + "/t2.csv") == 0,
          "quadrature transform with csv output exits 0");
    check(slurp(dir + "/t2.csv").rfind("node,value", 0) == 0, "csv output has the header");

    // verify: determinism of the report bytes across runs
    check(run(bin + " verify --suite parseval --seed 7 --report " + dir + "/r1.json > " + dir +
              "/v1.txt") == 0,
          "verify parseval exits 0");
    check(run(bin + " verify --suite parseval --seed 7 --report " + dir + "/r2.json > " + dir +
              "/v2.txt") == 0,
          "verify parseval exits 0 (second run)");
    check(!slurp(dir + "/r1.json").empty() && slurp(dir + "/r1.json") == slurp(dir + "/r2.json"),
          "verify reports are byte-identical across runs");
    check(slurp(dir + "/v1.txt").find("suite parseval:") != std::string::npos,
          "verify prints a per-suite summary line");

    // error paths: exit code 2
    write(dir + "/broken.json", "{not json");
    check(run(bin + " transform " + dir + "/broken.json 2>/dev/null") == 2,
          "malformed input exits 2");
    check(run(bin + " verify --suite no-such-suite 2>/dev/null") == 2, "unknown suite exits 2");
    check(run(bin + " 2>/dev/null >/dev/null") == 2, "missing subcommand exits 2");

    run("rm -rf " + dir);
    std::cout << (failures == 0 ? "ALL OK\n" : "FAILURES: " + std::to_string(failures) + "\n");
    return failures == 0 ? 0 : 1;
}
