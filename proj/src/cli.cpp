#include "loewner/cli.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "loewner/complex_matrix.hpp"
#include "loewner/congruence.hpp"
#include "loewner/eigen.hpp"
#include "loewner/errors.hpp"
#include "loewner/hermitian_matrix.hpp"
#include "loewner/matrix_io.hpp"
#include "loewner/order.hpp"
#include "loewner/selfcheck.hpp"
#include "loewner/sqrtm.hpp"
#include "loewner/tolerance.hpp"

namespace loewner::cli {
namespace {

/// Command-line problem detected outside CLI11 (unreadable file, bad
/// tolerance override); maps to the usage exit code.
struct UsageFailure {
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageFailure{"cannot read file: " + path};
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ComplexMatrix load_complex(const std::string& path) {
    return parse_matrix(read_file(path));
}

HermitianMatrix load_hermitian(const std::string& path, const ToleranceConfig& cfg) {
    return HermitianMatrix(parse_matrix(read_file(path)), cfg.hermitian);
}

std::string verdict_name(Verdict v) {
    return v == Verdict::GEQ ? "GEQ" : "NOT_GEQ";
}

std::string vector_tokens(const Vector& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) {
            s += ' ';
        }
        s += format_complex_token(v[i]);
    }
    return s;
}

/// Text form of a certificate. `head` is the key carrying the verdict;
/// `prefix` qualifies the remaining keys so both order directions coexist.
void emit_certificate_text(std::ostream& out, const std::string& head,
                           const std::string& prefix, const OrderCertificate& cert) {
    out << head << ": " << verdict_name(cert.verdict) << "\n";
    out << prefix << "min_eig: " << format_double(cert.min_eig) << "\n";
    if (cert.witness) {
        out << prefix << "witness_eigenvalue: " << format_double(cert.witness->value)
            << "\n";
        out << prefix << "witness_vector: " << vector_tokens(cert.witness->vector)
            << "\n";
    }
}

nlohmann::json pairs_from_vector(const Vector& v) {
    nlohmann::json rows = nlohmann::json::array();
    for (const Complex& z : v) {
        rows.push_back({z.real(), z.imag()});
    }
    return rows;
}

nlohmann::json certificate_to_json(const OrderCertificate& cert) {
    nlohmann::json j;
    j["verdict"] = verdict_name(cert.verdict);
    j["min_eig"] = cert.min_eig;
    if (cert.witness) {
        j["witness"] = {{"eigenvalue", cert.witness->value},
                        {"vector", pairs_from_vector(cert.witness->vector)}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

void emit_json(std::ostream& out, const nlohmann::json& j) {
    out << j.dump(2) << "\n";
}

void emit_real_list(std::ostream& out, const std::string& key,
                    const std::vector<double>& values) {
    out << key << ":";
    for (double v : values) {
        out << ' ' << format_double(v);
    }
    out << "\n";
}

std::string format_seed(std::uint64_t seed) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(seed));
    return buf;
}

void run_sqrtm(const std::string& path, const ToleranceConfig& cfg, bool as_json,
               std::ostream& out) {
    const HermitianMatrix a = load_hermitian(path, cfg);
    const SqrtResult result = psd_sqrt(a, cfg);
    const ComplexMatrix& root = result.root.matrix();
    const double residual = (root * root - a.matrix()).frobenius_norm();
    if (as_json) {
        nlohmann::json j;
        j["root"] = matrix_to_json(root);
        j["residual"] = residual;
        j["clipped_mass"] = result.clipped_mass;
        emit_json(out, j);
        return;
    }
    out << "residual: " << format_double(residual) << "\n";
    out << "clipped_mass: " << format_double(result.clipped_mass) << "\n";
    out << "root:\n" << format_matrix_grid(root);
}

void run_check_psd(const std::string& path, const ToleranceConfig& cfg, bool as_json,
                   std::ostream& out) {
    const HermitianMatrix a = load_hermitian(path, cfg);
    const OrderCertificate cert = is_psd(a, cfg);
    if (as_json) {
        emit_json(out, certificate_to_json(cert));
        return;
    }
    emit_certificate_text(out, "verdict", "", cert);
}

void run_order(const std::string& path_a, const std::string& path_b,
               const ToleranceConfig& cfg, bool as_json, std::ostream& out) {
    const HermitianMatrix a = load_hermitian(path_a, cfg);
    const HermitianMatrix b = load_hermitian(path_b, cfg);
    const OrderCertificate ab = loewner_geq(a, b, cfg);
    const OrderCertificate ba = loewner_geq(b, a, cfg);
    const bool a_geq = ab.verdict == Verdict::GEQ;
    const bool b_geq = ba.verdict == Verdict::GEQ;
    const std::string relation = a_geq && b_geq ? "equivalent"
                                 : a_geq        ? "A>=B"
                                 : b_geq        ? "B>=A"
                                                : "incomparable";
    if (as_json) {
        nlohmann::json j;
        j["a_geq_b"] = certificate_to_json(ab);
        j["b_geq_a"] = certificate_to_json(ba);
        j["relation"] = relation;
        emit_json(out, j);
        return;
    }
    emit_certificate_text(out, "a_geq_b", "a_geq_b_", ab);
    emit_certificate_text(out, "b_geq_a", "b_geq_a_", ba);
    out << "relation: " << relation << "\n";
}

void run_commute(const std::string& path_a, const std::string& path_b,
                 const ToleranceConfig& cfg, bool as_json, std::ostream& out) {
    const HermitianMatrix a = load_hermitian(path_a, cfg);
    const ComplexMatrix b = load_complex(path_b);
    const double before = commutator_norm(a.matrix(), b);
    const double after = sqrt_commutes(a, b, cfg);
    if (as_json) {
        nlohmann::json j;
        j["commutator_a_b"] = before;
        j["commutator_sqrt_a_b"] = after;
        emit_json(out, j);
        return;
    }
    out << "commutator_a_b: " << format_double(before) << "\n";
    out << "commutator_sqrt_a_b: " << format_double(after) << "\n";
}

void run_congruence(const std::string& path_a, const std::string& path_b,
                    const ToleranceConfig& cfg, bool as_json, std::ostream& out) {
    const HermitianMatrix a = load_hermitian(path_a, cfg);
    const HermitianMatrix b = load_hermitian(path_b, cfg);
    const CongruenceResult result = congruence_diag(a, b, cfg);
    if (as_json) {
        nlohmann::json j;
        j["p"] = matrix_to_json(result.p);
        j["d1"] = result.d1;
        j["d2"] = result.d2;
        j["cond_estimate"] = result.cond_estimate;
        emit_json(out, j);
        return;
    }
    emit_real_list(out, "d1", result.d1);
    emit_real_list(out, "d2", result.d2);
    out << "cond_estimate: " << format_double(result.cond_estimate) << "\n";
    out << "p:\n" << format_matrix_grid(result.p);
}

void run_report(const std::string& path_a, const std::string& path_b,
                const ToleranceConfig& cfg, bool as_json, std::ostream& out) {
    const HermitianMatrix a = load_hermitian(path_a, cfg);
    const HermitianMatrix b = load_hermitian(path_b, cfg);
    const MonotonicityReport report = monotonicity_report(a, b, cfg);
    if (as_json) {
        nlohmann::json j;
        j["rank_a"] = report.rank_a;
        j["rank_b"] = report.rank_b;
        j["det_a"] = report.det_a;
        j["det_b"] = report.det_b;
        j["trace_a"] = report.trace_a;
        j["trace_b"] = report.trace_b;
        j["trace_equality_implies_same"] = report.trace_equality_implies_same;
        if (report.inverse_reversed) {
            j["inverse_reversed"] = *report.inverse_reversed;
        } else {
            j["inverse_reversed"] = nullptr;
        }
        j["sqrt_order"] = certificate_to_json(report.sqrt_order);
        emit_json(out, j);
        return;
    }
    out << "rank_a: " << report.rank_a << "\n";
    out << "rank_b: " << report.rank_b << "\n";
    out << "det_a: " << format_double(report.det_a) << "\n";
    out << "det_b: " << format_double(report.det_b) << "\n";
    out << "trace_a: " << format_double(report.trace_a) << "\n";
    out << "trace_b: " << format_double(report.trace_b) << "\n";
    out << "trace_equality_implies_same: "
        << (report.trace_equality_implies_same ? "true" : "false") << "\n";
    if (report.inverse_reversed) {
        out << "inverse_reversed: " << (*report.inverse_reversed ? "true" : "false")
            << "\n";
    } else {
        out << "inverse_reversed: absent\n";
    }
    emit_certificate_text(out, "sqrt_order", "sqrt_order_", report.sqrt_order);
}

int run_selftest(std::uint64_t seed, bool as_json, std::ostream& out) {
    const std::vector<selfcheck::CheckResult> results = selfcheck::run_all(seed);
    bool all_passed = true;
    for (const selfcheck::CheckResult& r : results) {
        all_passed = all_passed && r.passed;
    }
    if (as_json) {
        nlohmann::json checks = nlohmann::json::array();
        for (const selfcheck::CheckResult& r : results) {
            checks.push_back({{"name", r.name},
                              {"passed", r.passed},
                              {"cases", r.cases},
                              {"details", r.details}});
        }
        nlohmann::json j;
        j["seed"] = format_seed(seed);
        j["checks"] = checks;
        j["passed"] = all_passed;
        emit_json(out, j);
    } else {
        out << "seed: " << format_seed(seed) << "\n";
        for (const selfcheck::CheckResult& r : results) {
            out << r.name << ": " << (r.passed ? "PASS" : "FAIL") << " (" << r.cases
                << " cases)";
            if (!r.passed) {
                out << " " << r.details;
            }
            out << "\n";
        }
        out << "overall: " << (all_passed ? "PASS" : "FAIL") << "\n";
    }
    return all_passed ? kExitOk : kExitNumerical;
}

void emit_witness_text(std::ostream& err, const EigenPair& witness) {
    err << "witness_eigenvalue: " << format_double(witness.value) << "\n";
    err << "witness_vector: " << vector_tokens(witness.vector) << "\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Loewner-order toolkit for Hermitian PSD matrices"};
    app.require_subcommand(1);

    bool as_json = false;
    ToleranceConfig cfg;
    app.add_flag("--json", as_json, "emit reports as structured text");
    app.add_option("--tau-psd", cfg.psd, "relative eigenvalue floor for PSD verdicts");
    app.add_option("--tau-eq", cfg.equality, "relative matrix equality tolerance");
    app.add_option("--tau-conv", cfg.convergence, "iteration convergence tolerance");
    app.add_option("--max-sweeps", cfg.max_sweeps, "iteration sweep cap");

    std::string file_a;
    std::string file_b;
    std::uint64_t seed = selfcheck::kDefaultSeed;

    CLI::App* sqrtm_cmd =
        app.add_subcommand("sqrtm", "PSD square root with squaring residual");
    sqrtm_cmd->add_option("file", file_a, "Hermitian PSD matrix file")->required();

    CLI::App* check_psd_cmd =
        app.add_subcommand("check-psd", "positive semidefiniteness certificate");
    check_psd_cmd->add_option("file", file_a, "Hermitian matrix file")->required();

    CLI::App* order_cmd =
        app.add_subcommand("order", "Loewner comparison in both directions");
    order_cmd->add_option("file_a", file_a, "Hermitian matrix file")->required();
    order_cmd->add_option("file_b", file_b, "Hermitian matrix file")->required();

    CLI::App* commute_cmd = app.add_subcommand(
        "commute", "commutator norms of (A, B) and (sqrt(A), B)");
    commute_cmd->add_option("file_a", file_a, "Hermitian PSD matrix file")->required();
    commute_cmd->add_option("file_b", file_b, "matrix file")->required();

    CLI::App* congruence_cmd = app.add_subcommand(
        "congruence", "simultaneous congruence diagonalization of a PSD pair");
    congruence_cmd->add_option("file_a", file_a, "Hermitian PSD matrix file")->required();
    congruence_cmd->add_option("file_b", file_b, "Hermitian PSD matrix file")->required();

    CLI::App* report_cmd = app.add_subcommand(
        "report", "order corollaries and square-root monotonicity for A >= B >= 0");
    report_cmd->add_option("file_a", file_a, "Hermitian matrix file")->required();
    report_cmd->add_option("file_b", file_b, "Hermitian matrix file")->required();

    CLI::App* selftest_cmd =
        app.add_subcommand("selftest", "run the seeded property corpora");
    selftest_cmd->group(""); // hidden from help
    selftest_cmd->add_option("--seed", seed, "corpus seed")->envname("LOEWNER_SEED");

    for (CLI::App* sub : {sqrtm_cmd, check_psd_cmd, order_cmd, commute_cmd,
                          congruence_cmd, report_cmd, selftest_cmd}) {
        sub->fallthrough();
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        try {
            cfg.validate();
        } catch (const Error& e) {
            throw UsageFailure{e.what()};
        }
        if (sqrtm_cmd->parsed()) {
            run_sqrtm(file_a, cfg, as_json, out);
        } else if (check_psd_cmd->parsed()) {
            run_check_psd(file_a, cfg, as_json, out);
        } else if (order_cmd->parsed()) {
            run_order(file_a, file_b, cfg, as_json, out);
        } else if (commute_cmd->parsed()) {
            run_commute(file_a, file_b, cfg, as_json, out);
        } else if (congruence_cmd->parsed()) {
            run_congruence(file_a, file_b, cfg, as_json, out);
        } else if (report_cmd->parsed()) {
            run_report(file_a, file_b, cfg, as_json, out);
        } else if (selftest_cmd->parsed()) {
            return run_selftest(seed, as_json, out);
        }
        return kExitOk;
    } catch (const NotHermitian& e) {
        err << "hypothesis violated: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const NotPsd& e) {
        err << "hypothesis violated: " << e.what() << "\n";
        emit_witness_text(err, e.witness);
        return kExitHypothesis;
    } catch (const NotCommuting& e) {
        err << "hypothesis violated: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const HypothesisViolated& e) {
        err << "hypothesis violated: " << e.what() << "\n";
        if (e.witness) {
            emit_witness_text(err, *e.witness);
        }
        return kExitHypothesis;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DimensionError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DimensionTooLarge& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageFailure& e) {
        err << "usage error: " << e.message << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
}

} // namespace loewner::cli
