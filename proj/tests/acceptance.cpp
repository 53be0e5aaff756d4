// Acceptance gate: one line per criterion, nonzero exit on any failure.
// Criteria 1-8 are the library-level property corpora shared with the
// `selftest` subcommand; criterion 9 drives the installed binary itself.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sys/wait.h>
#include <sstream>
#include <string>
#include <vector>

#include "loewner/matrix_io.hpp"
#include "loewner/selfcheck.hpp"

namespace {

using loewner::ComplexMatrix;

bool report(int index, const std::string& name, bool passed, int cases,
            const std::string& details) {
    std::printf("criterion %d (%s): %s (%d cases)%s%s\n", index, name.c_str(),
                passed ? "PASS" : "FAIL", cases, details.empty() ? "" : " ",
                details.c_str());
    return passed;
}

std::string slurp(const std::string& path, bool& ok) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        ok = false;
        return "";
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int spawn(const std::string& command) {
    const int status = std::system(command.c_str());
    if (status == -1) return -1;
#if defined(WIFEXITED) && defined(WEXITSTATUS)
    if (WIFEXITED(status)) return WEXITSTATUS(status);
    return -1;
#else
    return status;
#endif
}

bool check_cli_conformance(int& cases, std::string& details) {
    const std::string dir = LOEWNER_FIXTURE_DIR;
    const std::string bin = LOEWNER_CLI_PATH;
    cases = 0;

    // Bit-exact print-then-parse round-trip over every parseable fixture.
    const char* fixtures[] = {"id2.json",    "scalar2.json",     "diag_a.json",
                              "diag_b.json", "pair_a.txt",       "pair_b.txt",
                              "complex_herm.txt", "psd3.txt",    "commuting_b.txt",
                              "nonherm.txt", "indef.txt",        "psd8.txt"};
    for (const char* name : fixtures) {
        bool ok = true;
        const std::string text = slurp(dir + "/" + name, ok);
        if (!ok) {
            details = std::string("unreadable fixture ") + name;
            return false;
        }
        try {
            const ComplexMatrix m = loewner::parse_matrix(text);
            const ComplexMatrix back = loewner::parse_matrix(loewner::format_matrix_grid(m));
            if (back.dim() != m.dim() || back.entries() != m.entries()) {
                details = std::string("round-trip drift in ") + name;
                return false;
            }
            const ComplexMatrix via_json =
                loewner::matrix_from_json(loewner::matrix_to_json(m));
            if (via_json.entries() != m.entries()) {
                details = std::string("json round-trip drift in ") + name;
                return false;
            }
        } catch (const std::exception& e) {
            details = std::string("fixture ") + name + " failed to parse: " + e.what();
            return false;
        }
        ++cases;
    }

    // Every documented exit code, through the real binary.
    const struct {
        int want;
        std::string args;
    } probes[] = {
        {0, "sqrtm \"" + dir + "/id2.json\""},
        {2, "sqrtm \"" + dir + "/indef.txt\""},
        {3, "sqrtm \"" + dir + "/malformed_count.json\""},
        {4, "--max-sweeps 1 sqrtm \"" + dir + "/psd8.txt\""},
    };
    for (const auto& probe : probes) {
        const int got = spawn("\"" + bin + "\" " + probe.args + " >/dev/null 2>&1");
        if (got != probe.want) {
            details = "expected exit " + std::to_string(probe.want) + " from `" +
                      probe.args + "`, got " + std::to_string(got);
            return false;
        }
        ++cases;
    }

    // End-to-end selftest from a single seed through the environment.
    const int selftest = spawn("LOEWNER_SEED=3405691582 \"" + bin +
                               "\" selftest >/dev/null 2>&1");
    if (selftest != 0) {
        details = "selftest exited " + std::to_string(selftest);
        return false;
    }
    ++cases;
    return true;
}

} // namespace

int main() {
    bool all = true;

    const std::vector<loewner::selfcheck::CheckResult> results =
        loewner::selfcheck::run_all(loewner::selfcheck::kDefaultSeed);
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        all = report(static_cast<int>(i) + 1, r.name, r.passed, r.cases, r.details) && all;
    }

    int cli_cases = 0;
    std::string cli_details;
    const bool cli_ok = check_cli_conformance(cli_cases, cli_details);
    all = report(9, "CLI conformance", cli_ok, cli_cases, cli_details) && all;

    std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
    return all ? 0 : 1;
}
