// Golden-file and exit-code checks for the command-line tool.
// argv: <vdual-binary> <corpus-dir> <golden-dir>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
    if (ok) {
        std::cout << "ok: " << what << "\n";
    } else {
        ++failures;
        std::cout << "FAIL: " << what << "\n";
    }
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run(const std::string& cmd) { return std::system(cmd.c_str()); }

} // namespace

int main(int argc, char** argv) {
    if (argc < 4) {
        std::cerr << "usage: test_cli <vdual> <corpus-dir> <golden-dir>\n";
        return 1;
    }
    std::string vdual = argv[1];
    std::string corpus = argv[2];
    std::string golden = argv[3];
    std::string tmp = "cli_test_tmp";

    const std::vector<std::string> cases = {"quadric_cone_3", "quadric_cone_4", "cusp_curve",
                                            "nonnormal_surface", "artinian_socle"};
    for (const auto& name : cases) {
        std::string out = tmp + "_" + name + ".json";
        int rc = run(vdual + " report --input " + corpus + "/" + name + ".prob --json" +
                     " --no-timings > " + out);
        check(rc == 0, name + " exits 0");
        check(slurp(out) == slurp(golden + "/" + name + ".json"), name + " matches golden bytes");
        std::remove(out.c_str());
    }

    // exit-code contract: 1 on analysis errors, 2 on parse errors
    {
        std::string bad = tmp + "_analysis.prob";
        std::ofstream f(bad);
        f << "ring: x y\nideal I: x^2 + y\nanalyze resolve ideal=I\n";
        f.close();
        int rc = run(vdual + " report --input " + bad + " > /dev/null");
        check(WEXITSTATUS(rc) == 1, "analysis error exits 1");
        std::remove(bad.c_str());
    }
    {
        std::string bad = tmp + "_parse.prob";
        std::ofstream f(bad);
        f << "ring: x x\n";
        f.close();
        int rc = run(vdual + " report --input " + bad + " 2> /dev/null");
        check(WEXITSTATUS(rc) == 2, "parse error exits 2");
        std::remove(bad.c_str());
        rc = run(vdual + " report --input does_not_exist.prob 2> /dev/null");
        check(WEXITSTATUS(rc) == 2, "missing file exits 2");
    }

    // subcommands agree with the report runner
    {
        std::string out = tmp + "_gb.json";
        int rc = run(vdual + " gb --input " + corpus + "/nonnormal_surface.prob --json" +
                     " --no-timings > " + out);
        check(rc == 0, "gb subcommand exits 0");
        check(slurp(out).find("z2*z3 - z1*z4") != std::string::npos,
              "gb output contains the surface relation");
        std::remove(out.c_str());
    }
    {
        int rc = run(vdual + " duality --input " + corpus +
                     "/quadric_cone_3.prob --tuple f1 > /dev/null");
        check(rc == 0, "duality --tuple exits 0");
        rc = run(vdual + " counterexample --input " + corpus +
                 "/quadric_cone_3.prob --q 2 > /dev/null");
        check(rc == 0, "counterexample --q exits 0");
    }

    // a full report (timings included) replays through a fresh process
    {
        std::string out = tmp + "_replay.json";
        run(vdual + " report --input " + corpus + "/quadric_cone_4.prob --json > " + out);
        int rc = run(vdual + " replay --input " + out + " > /dev/null");
        check(rc == 0, "replay of a fresh report exits 0");
        std::remove(out.c_str());
    }

    std::cout << (failures == 0 ? "all cli checks passed\n" : "cli checks FAILED\n");
    return failures == 0 ? 0 : 1;
}
