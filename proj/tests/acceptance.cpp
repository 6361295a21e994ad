// One pass/fail line per acceptance criterion. Criteria 1-9 run in process;
// criterion 10 drives the installed CLI end to end.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "helly/errors.hpp"
#include "helly_tools/verify.hpp"

namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kSeed = 42;
constexpr double kEndToEndBudget = 300.0;

struct Run {
    int exit_code = -1;
    std::string out;
    double seconds = 0.0;
};

Run run_cli(const std::string& cli, const fs::path& out_file) {
    const std::string cmd = cli + " verify-paper --suite all --seed " + std::to_string(kSeed) + " >" +
                            out_file.string() + " 2>/dev/null";
    auto t0 = std::chrono::steady_clock::now();
    int status = std::system(cmd.c_str());
    Run r;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    return r;
}

helly::verify::CriterionResult end_to_end(const std::string& cli) {
    helly::verify::CriterionResult res{10, "verify-paper all, exit 0, rerun identical", false, "", 0.0, kEndToEndBudget};
    const fs::path dir = fs::temp_directory_path() / ("helly_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    Run a = run_cli(cli, dir / "first.txt");
    Run b = run_cli(cli, dir / "second.txt");
    fs::remove_all(dir);
    const bool identical = a.out == b.out && !a.out.empty();
    res.seconds = std::max(a.seconds, b.seconds);
    res.passed = a.exit_code == 0 && b.exit_code == 0 && identical && res.seconds <= kEndToEndBudget;
    char buf[160];
    std::snprintf(buf, sizeof buf, "exit %d/%d, stdout %s, slowest run %.1f s", a.exit_code, b.exit_code,
                  identical ? "identical" : "DIFFERS", res.seconds);
    res.detail = buf;
    return res;
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "helly";
    int failed = 0;
    for (int id = 1; id <= 9; ++id) {
        helly::verify::CriterionResult r;
        try {
            r = helly::verify::run_criterion(id, kSeed);
        } catch (const std::exception& e) {
            r = {id, "criterion " + std::to_string(id), false, std::string("error: ") + e.what(), 0.0, 0.0};
        }
        std::puts(helly::verify::format_row(r).c_str());
        std::fflush(stdout);
        failed += !r.passed;
    }
    auto r10 = end_to_end(cli);
    std::puts(helly::verify::format_row(r10).c_str());
    failed += !r10.passed;
    std::printf("%s\n", failed ? "acceptance FAILED" : "acceptance passed");
    return failed ? 1 : 0;
}
