#include "loewner/selfcheck.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

#include "loewner/congruence.hpp"
#include "loewner/oracles.hpp"
#include "loewner/order.hpp"

namespace loewner::selfcheck {

namespace {

constexpr double kTauEq = ToleranceConfig{}.equality;
constexpr double kTauPsd = ToleranceConfig{}.psd;

/// First failure wins; later cases still run so `cases` counts the corpus.
struct Recorder {
    bool failed = false;
    std::string details;

    void fail(int index, std::uint64_t case_seed, int n, const std::string& what) {
        if (failed) return;
        failed = true;
        char head[96];
        std::snprintf(head, sizeof(head), "case %d (seed 0x%llx, n=%d): ", index,
                      static_cast<unsigned long long>(case_seed), n);
        details = head + what;
    }
};

std::string num(double value) {
    char buffer[48];
    std::snprintf(buffer, sizeof(buffer), "%.6g", value);
    return buffer;
}

std::uint64_t case_seed(std::uint64_t seed, std::uint64_t criterion, std::uint64_t i) {
    return mix_seed(mix_seed(seed, criterion), i);
}

HermitianMatrix gen_hermitian(std::uint64_t seed, int n) {
    SplitMix64 stream(seed);
    ComplexMatrix h(n);
    for (int i = 0; i < n; ++i) {
        h(i, i) = Complex(stream.pseudo_normal(), 0.0);
        for (int j = i + 1; j < n; ++j) {
            h(i, j) = Complex(stream.pseudo_normal(), stream.pseudo_normal());
            h(j, i) = std::conj(h(i, j));
        }
    }
    return HermitianMatrix(std::move(h));
}

HermitianMatrix add_scaled_identity(const HermitianMatrix& a, double shift) {
    ComplexMatrix m = a.matrix();
    for (int i = 0; i < m.dim(); ++i) m(i, i) += shift;
    return HermitianMatrix(std::move(m));
}

double root_residual(const HermitianMatrix& root, const HermitianMatrix& a) {
    return (root.matrix() * root.matrix() - a.matrix()).frobenius_norm();
}

ComplexMatrix reconstruct_eigen(const EigenDecomposition& d) {
    const int n = d.u.dim();
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Complex sum(0.0, 0.0);
            for (int k = 0; k < n; ++k)
                sum += d.u(i, k) * d.lambdas[k] * std::conj(d.u(j, k));
            out(i, j) = sum;
        }
    return out;
}

double unitarity_defect(const ComplexMatrix& u) {
    const int n = u.dim();
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Complex g(0.0, 0.0);
            for (int k = 0; k < n; ++k) g += std::conj(u(k, i)) * u(k, j);
            if (i == j) g -= 1.0;
            sum += std::norm(g);
        }
    return std::sqrt(sum);
}

} // namespace

CheckResult check_sqrt_correctness(std::uint64_t seed) {
    CheckResult result{"sqrt correctness", true, 0, ""};
    Recorder rec;
    const int cases = 500;
    for (int i = 0; i < cases; ++i) {
        const int n = 2 + (i % 31);
        const std::uint64_t cs = case_seed(seed, 1, static_cast<std::uint64_t>(i));
        const HermitianMatrix a = gen_psd({cs, n});
        const SqrtResult root = psd_sqrt(a);
        const double residual = root_residual(root.root, a);
        const double bound = 100.0 * kTauEq * std::max(1.0, a.frobenius_norm());
        if (residual > bound) {
            rec.fail(i, cs, n,
                     "residual " + num(residual) + " > bound " + num(bound));
        }
    }
    result.cases = cases;
    result.passed = !rec.failed;
    result.details = rec.details;
    return result;
}

CheckResult check_sqrt_uniqueness(std::uint64_t seed) {
    CheckResult result{"sqrt uniqueness (two-oracle agreement)", true, 0, ""};
    Recorder rec;
    const int nonsingular = 200;
    for (int i = 0; i < nonsingular; ++i) {
        const int n = 2 + (i % 15);
        const std::uint64_t cs = case_seed(seed, 2, static_cast<std::uint64_t>(i));
        const HermitianMatrix a = add_scaled_identity(gen_psd({cs, n}), 0.1);
        if (denman_beavers_shift(a) != 0.0) {
            rec.fail(i, cs, n, "unexpected shift on a nonsingular matrix");
            continue;
        }
        const SqrtResult spectral = psd_sqrt(a);
        const HermitianMatrix iterative = denman_beavers_sqrt(a);
        if (!matrix_equal(spectral.root.matrix(), iterative.matrix(), 100.0 * kTauEq)) {
            const double gap =
                (spectral.root.matrix() - iterative.matrix()).frobenius_norm();
            rec.fail(i, cs, n, "oracles disagree by " + num(gap));
        }
    }
    const int singular = 50;
    for (int i = 0; i < singular; ++i) {
        const int n = 2 + (i % 15);
        const std::uint64_t cs =
            case_seed(seed, 2, 1000 + static_cast<std::uint64_t>(i));
        const int rank = (i % 2 == 0) ? n - 1 : std::max(1, n / 2);
        const HermitianMatrix a = gen_psd({cs, n}, rank);
        const double delta = denman_beavers_shift(a);
        if (delta <= 0.0) {
            rec.fail(i, cs, n, "shift did not engage on a singular matrix");
            continue;
        }
        const SqrtResult spectral = psd_sqrt(a);
        const HermitianMatrix iterative = denman_beavers_sqrt(a);
        const double tolerance = 2.0 * std::sqrt(delta) + 100.0 * kTauEq;
        if (!matrix_equal(spectral.root.matrix(), iterative.matrix(), tolerance)) {
            const double gap =
                (spectral.root.matrix() - iterative.matrix()).frobenius_norm();
            rec.fail(i, cs, n, "shifted oracles disagree by " + num(gap));
        }
    }
    result.cases = nonsingular + singular;
    result.passed = !rec.failed;
    result.details = rec.details;
    return result;
}

CheckResult check_commutation_propagation(std::uint64_t seed) {
    CheckResult result{"commutation propagation", true, 0, ""};
    Recorder rec;
    const int cases = 500;
    for (int i = 0; i < cases; ++i) {
        const int n = 2 + (i % 31);
        const std::uint64_t cs = case_seed(seed, 3, static_cast<std::uint64_t>(i));
        const auto [a, b] = gen_commuting_pair({cs, n});
        const double value = sqrt_commutes(a, b);
        const double bound =
            100.0 * kTauEq *
            std::max(1.0, std::sqrt(a.frobenius_norm()) * b.frobenius_norm());
        if (value > bound) {
            rec.fail(i, cs, n,
                     "commutator " + num(value) + " > bound " + num(bound));
        }
    }
    result.cases = cases;
    result.passed = !rec.failed;
    result.details = rec.details;
    return result;
}

CheckResult check_sqrt_monotonicity(std::uint64_t seed) {
    CheckResult result{"sqrt monotonicity", true, 0, ""};
    Recorder rec;
    const int cases = 1000;
    for (int i = 0; i < cases; ++i) {
        const int n = 2 + (i % 15);
        const std::uint64_t cs = case_seed(seed, 4, static_cast<std::uint64_t>(i));
        const auto [a, b] = gen_dominated_pair({cs, n});
        const OrderCertificate cert = sqrt_monotone_check(a, b);

        const HermitianMatrix diff = psd_sqrt(a).root - psd_sqrt(b).root;
        const double floor = -1e-8 * std::max(1.0, spectral_norm(diff));
        if (cert.verdict != Verdict::GEQ) {
            // The counterexample witness must still satisfy the
            // Cauchy-Schwarz chain; a violation of that would mean the
            // certificate itself is broken, not just the order.
            const Vector& x = cert.witness->vector;
            const double qa = quadratic_form(a, x);
            const double qb = quadratic_form(b, x);
            const Vector w = psd_sqrt(a).root.matrix() *
                             (psd_sqrt(b).root.matrix() * x);
            const double mixed = std::abs(inner_product(w, x));
            const double lhs =
                std::sqrt(std::max(qa, 0.0)) * std::sqrt(std::max(qb, 0.0));
            const double slack =
                100.0 * kTauEq *
                std::max(1.0, std::max(a.frobenius_norm(), b.frobenius_norm()));
            const bool chain_holds = lhs + slack >= mixed;
            rec.fail(i, cs, n,
                     "verdict NOT_GEQ with min_eig " + num(cert.min_eig) +
                         (chain_holds ? " (witness satisfies the Cauchy-Schwarz chain)"
                                      : " (witness BREAKS the Cauchy-Schwarz chain)"));
        } else if (cert.min_eig < floor) {
            rec.fail(i, cs, n,
                     "min_eig " + num(cert.min_eig) + " below floor " + num(floor));
        }
    }
    result.cases = cases;
    result.passed = !rec.failed;
    result.details = rec.details;
    return result;
}

CheckResult check_order_corollaries(std::uint64_t seed) {
    CheckResult result{"order corollaries", true, 0, ""};
    Recorder rec;
    const int cases = 1000;
    for (int i = 0; i < cases; ++i) {
        const int n = 2 + (i % 15);
        const std::uint64_t cs = case_seed(seed, 4, static_cast<std::uint64_t>(i));
        const auto [a, b] = gen_dominated_pair({cs, n});
        const MonotonicityReport report = monotonicity_report(a, b);
        if (report.rank_a < report.rank_b) {
            rec.fail(i, cs, n,
                     "rank " + std::to_string(report.rank_a) + " < " +
                         std::to_string(report.rank_b));
        } else if (report.det_a <
                   report.det_b - 1e-9 * std::max(1.0, std::abs(report.det_a))) {
            rec.fail(i, cs, n,
                     "det " + num(report.det_a) + " < " + num(report.det_b));
        } else if (report.trace_a < report.trace_b -
                                        1e-12 * std::max(1.0, std::abs(report.trace_a))) {
            rec.fail(i, cs, n,
                     "trace " + num(report.trace_a) + " < " + num(report.trace_b));
        } else if (!report.trace_equality_implies_same) {
            rec.fail(i, cs, n, "equal traces on unequal matrices");
        } else if (report.sqrt_order.verdict != Verdict::GEQ) {
            rec.fail(i, cs, n, "square-root order verdict NOT_GEQ");
        }
    }
    const int nonsingular = 200;
    for (int i = 0; i < nonsingular; ++i) {
        const int n = 2 + (i % 15);
        const std::uint64_t cs =
            case_seed(seed, 5, static_cast<std::uint64_t>(i));
        const HermitianMatrix b = add_scaled_identity(gen_psd({cs, n}), 0.1);
        const HermitianMatrix a = b + gen_psd({mix_seed(cs, 1), n});
        const MonotonicityReport report = monotonicity_report(a, b);
        if (!report.inverse_reversed.has_value()) {
            rec.fail(i, cs, n, "inverse comparison absent on a nonsingular pair");
        } else if (!*report.inverse_reversed) {
            rec.fail(i, cs, n, "inverse order not reversed");
        }
    }
    result.cases = cases + nonsingular;
    result.passed = !rec.failed;
    result.details = rec.details;
    return result;
}

CheckResult check_congruence(std::uint64_t seed) {
    CheckResult result{"congruence diagonalization", true, 0, ""};
    Recorder rec;
    const int cases = 200;
    for (int i = 0; i < cases; ++i) {
        const int n = 2 + (i % 15);
        const std::uint64_t cs = case_seed(seed, 6, static_cast<std::uint64_t>(i));
        const int deficient_a = (i % 4 == 1 || i % 4 == 3) ? n - 1 : n;
        const int deficient_b = (i % 4 >= 2) ? std::max(1, n / 2) : n;

        HermitianMatrix a = gen_psd({cs, n}, deficient_a);
        HermitianMatrix b = gen_psd({mix_seed(cs, 1), n}, deficient_b);
        if (i % 7 == 0) {
            // Shared-kernel pair: exercises the common-kernel columns.
            b = 0.5 * a;
        } else if (i % 3 == 0) {
            // Dominated pair: exercises the GEQ branch of the equivalence.
            a = b + gen_psd({mix_seed(cs, 2), n}, deficient_a);
        }

        const CongruenceResult cd = congruence_diag(a, b);
        const double cond_sq = cd.cond_estimate * cd.cond_estimate;

        const ComplexMatrix pa = cd.p.adjoint() * a.matrix() * cd.p;
        const ComplexMatrix pb = cd.p.adjoint() * b.matrix() * cd.p;
        double off_a = 0.0;
        double off_b = 0.0;
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                const Complex da = r == c ? pa(r, c) - cd.d1[r] : pa(r, c);
                const Complex db = r == c ? pb(r, c) - cd.d2[r] : pb(r, c);
                off_a += std::norm(da);
                off_b += std::norm(db);
            }
        off_a = std::sqrt(off_a);
        off_b = std::sqrt(off_b);
        const double bound_a =
            100.0 * kTauEq * std::max(1.0, a.frobenius_norm() * cond_sq);
        const double bound_b =
            100.0 * kTauEq * std::max(1.0, b.frobenius_norm() * cond_sq);
        if (off_a > bound_a || off_b > bound_b) {
            rec.fail(i, cs, n,
                     "diagonalization residual " + num(std::max(off_a, off_b)) +
                         " > bound " + num(std::max(bound_a, bound_b)));
            continue;
        }

        const HermitianMatrix ra = reconstruct(cd, Side::A);
        const HermitianMatrix rb = reconstruct(cd, Side::B);
        if (!matrix_equal(ra.matrix(), a.matrix(), 100.0 * kTauEq * cond_sq) ||
            !matrix_equal(rb.matrix(), b.matrix(), 100.0 * kTauEq * cond_sq)) {
            rec.fail(i, cs, n, "round-trip reconstruction off");
            continue;
        }

        const bool by_diagonals = order_via_diagonals(cd);
        const bool by_eigen = loewner_geq(a, b).verdict == Verdict::GEQ;
        if (by_diagonals != by_eigen) {
            rec.fail(i, cs, n,
                     std::string("order disagreement: diagonals say ") +
                         (by_diagonals ? "true" : "false") + ", eigenvalues say " +
                         (by_eigen ? "GEQ" : "NOT_GEQ"));
        }
    }
    result.cases = cases;
    result.passed = !rec.failed;
    result.details = rec.details;
    return result;
}

CheckResult check_minors_oracle(std::uint64_t seed) {
    CheckResult result{"principal-minors agreement", true, 0, ""};
    Recorder rec;
    const int cases = 300;
    for (int i = 0; i < cases; ++i) {
        const int n = 2 + (i % 7);
        const std::uint64_t cs = case_seed(seed, 7, static_cast<std::uint64_t>(i));
        HermitianMatrix a = gen_psd({cs, n});
        if (i % 2 == 1) {
            // Definitely indefinite: rank-deficient base minus a shift that
            // dwarfs every tolerance, spanning several magnitudes.
            const HermitianMatrix base = gen_psd({cs, n}, n - 1);
            const double eps = std::pow(10.0, -(i % 5));
            const double shift = eps * (1.0 + spectral_norm(base));
            a = add_scaled_identity(base, -shift);
        } else if (i % 6 == 0) {
            // Boundary: exactly singular by construction.
            a = gen_psd({cs, n}, std::max(1, n / 2));
        }
        const bool by_eigen = is_psd(a).verdict == Verdict::GEQ;
        const bool by_minors = psd_by_minors(a);
        if (by_eigen != by_minors) {
            rec.fail(i, cs, n,
                     std::string("eigenvalues say ") + (by_eigen ? "PSD" : "not PSD") +
                         ", minors say " + (by_minors ? "PSD" : "not PSD"));
        }
    }
    result.cases = cases;
    result.passed = !rec.failed;
    result.details = rec.details;
    return result;
}

CheckResult check_eigen_invariants(std::uint64_t seed) {
    CheckResult result{"eigensolver invariants", true, 0, ""};
    Recorder rec;
    const int cases = 1000;
    for (int i = 0; i < cases; ++i) {
        const int n = 2 + (i % 31);
        const std::uint64_t cs = case_seed(seed, 8, static_cast<std::uint64_t>(i));
        const HermitianMatrix a = gen_hermitian(cs, n);
        const EigenDecomposition d = eigh(a);

        const double recon =
            (a.matrix() - reconstruct_eigen(d)).frobenius_norm();
        const double recon_bound = 10.0 * kTauEq * std::max(1.0, a.frobenius_norm());
        const double unitary = unitarity_defect(d.u);
        const double unitary_bound = 10.0 * kTauEq * n;

        double lambda_sum = 0.0;
        double lambda_sq = 0.0;
        bool sorted = true;
        for (std::size_t k = 0; k < d.lambdas.size(); ++k) {
            lambda_sum += d.lambdas[k];
            lambda_sq += d.lambdas[k] * d.lambdas[k];
            if (k > 0 && d.lambdas[k] > d.lambdas[k - 1]) sorted = false;
        }
        const double trace_gap = std::abs(lambda_sum - a.trace_real());
        const double trace_bound = kTauEq * std::max(1.0, std::abs(a.trace_real()));
        const double fro_sq = a.frobenius_norm() * a.frobenius_norm();
        const double fro_gap = std::abs(lambda_sq - fro_sq);
        const double fro_bound = kTauEq * std::max(1.0, fro_sq);

        if (recon > recon_bound) {
            rec.fail(i, cs, n, "reconstruction " + num(recon) + " > " + num(recon_bound));
        } else if (unitary > unitary_bound) {
            rec.fail(i, cs, n, "unitarity " + num(unitary) + " > " + num(unitary_bound));
        } else if (!sorted) {
            rec.fail(i, cs, n, "eigenvalues not sorted descending");
        } else if (trace_gap > trace_bound) {
            rec.fail(i, cs, n, "trace drift " + num(trace_gap));
        } else if (fro_gap > fro_bound) {
            rec.fail(i, cs, n, "norm drift " + num(fro_gap));
        }
    }
    // Every dimension up to 64 must converge at the default configuration.
    for (int n = 33; n <= 64; ++n) {
        const std::uint64_t cs = case_seed(seed, 8, 10000 + static_cast<std::uint64_t>(n));
        try {
            eigh(gen_hermitian(cs, n));
        } catch (const NonConvergence& e) {
            rec.fail(n, cs, n, std::string("eigensolver gave up: ") + e.what());
        }
    }
    result.cases = cases + 32;
    result.passed = !rec.failed;
    result.details = rec.details;
    return result;
}

std::vector<CheckResult> run_all(std::uint64_t seed) {
    return {
        check_sqrt_correctness(seed),    check_sqrt_uniqueness(seed),
        check_commutation_propagation(seed), check_sqrt_monotonicity(seed),
        check_order_corollaries(seed),   check_congruence(seed),
        check_minors_oracle(seed),       check_eigen_invariants(seed),
    };
}

} // namespace loewner::selfcheck
