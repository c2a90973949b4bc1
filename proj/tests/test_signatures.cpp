#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "symclass/sampling.hpp"
#include "symclass/signatures.hpp"

using namespace symclass;
using namespace symclass::testing;

namespace {
const double kPi = std::acos(-1.0);
}

TEST_CASE("b_signature on the doubly elliptic normal forms") {
    // B = diag(-sin th1, -sin th2): both eigenvalues B-negative
    const auto both_neg = b_signature(e2_form(2.0, 1.0, '-', '-'));
    REQUIRE(both_neg.size() == 2);
    CHECK(both_neg[0].mu < both_neg[1].mu);
    CHECK(both_neg[0].sign == BSign::Negative);
    CHECK(both_neg[1].sign == BSign::Negative);

    const auto mixed = b_signature(e2_form(2.0, 1.0, '+', '-'));
    CHECK(mixed[0].sign == BSign::Positive);
    CHECK(mixed[1].sign == BSign::Negative);

    std::mt19937_64 rng(31);
    CHECK_THROWS_AS(b_signature(random_triple(StratumLabel::N, rng)),
                    ComplexEigenvalues);
}

TEST_CASE("b_signature is invariant under the group action") {
    std::mt19937_64 rng(32);
    const StratumLabel strata[] = {StratumLabel::E2, StratumLabel::EHp,
                                   StratumLabel::EHm, StratumLabel::Hpp,
                                   StratumLabel::Hmm, StratumLabel::Hmp};
    for (int i = 0; i < 120; ++i) {
        const WonenburgerTriple t = random_triple(strata[i % 6], rng);
        const auto sig = b_signature(t);
        const auto moved = b_signature(gl_action(random_gl(rng), t));
        REQUIRE(sig.size() == moved.size());
        for (size_t k = 0; k < sig.size(); ++k) {
            CHECK(sig[k].sign == moved[k].sign);
            CHECK(sig[k].mu == doctest::Approx(moved[k].mu).epsilon(1e-7));
        }
    }
}

TEST_CASE("b_signature zero flag over the GIT classes on the walls") {
    const auto wall = b_signature(g12_form(1.2, '-'));
    REQUIRE(wall.size() == 2);
    // increasing mu: cos(1.2) < 1
    CHECK(wall[0].mu == doctest::Approx(std::cos(1.2)));
    CHECK(wall[0].sign == BSign::Negative);
    CHECK(wall[1].mu == doctest::Approx(1.0));
    CHECK(wall[1].sign == BSign::Zero);

    // Jordan block over the parabola: caller must collapse first
    std::mt19937_64 rng(33);
    const WonenburgerTriple jt = jordan_parabola_seed(StratumLabel::Gd2, rng);
    CHECK_THROWS_AS(b_signature(jt), NonDiagonalizable);
}

TEST_CASE("krein_signature closed 2x2 cases") {
    const double th = 0.8;
    const Mat rot = Mat::rotation(th);
    const cd lambda(std::cos(th), std::sin(th));

    const auto [p, q] = krein_signature(rot, lambda);
    CHECK(p == 0);
    CHECK(q == 1);

    const auto [pc, qc] = krein_signature(rot, std::conj(lambda));
    CHECK(pc == 1);
    CHECK(qc == 0);

    const auto [pi, qi] = krein_signature(Mat::identity(2), cd(1, 0));
    CHECK(pi == 1);
    CHECK(qi == 1);

    CHECK_THROWS_AS(krein_signature(rot, cd(2, 0)), NotOnUnitCircle);
    CHECK_THROWS_AS(krein_signature(rot, cd(std::cos(0.3), std::sin(0.3))),
                    NotAnEigenvalue);
}

TEST_CASE("krein signature of double elliptic eigenvalues on the parabola") {
    const double th = 1.0;
    const cd lambda(std::cos(th), std::sin(th));
    const auto [pp, pq] = krein_signature(assemble(gd2_form(th, "++")), lambda);
    CHECK(pp == 2);
    CHECK(pq == 0);
    const auto [mp, mq] = krein_signature(assemble(gd2_form(th, "+-")), lambda);
    CHECK(mp == 1);
    CHECK(mq == 1);
    const auto [np, nq] = krein_signature(assemble(gd2_form(th, "--")), lambda);
    CHECK(np == 0);
    CHECK(nq == 2);
}

TEST_CASE("B-positivity matches Krein positivity for elliptic eigenvalues") {
    std::mt19937_64 rng(34);
    const StratumLabel strata[] = {StratumLabel::E2, StratumLabel::EHp,
                                   StratumLabel::EHm};
    for (int i = 0; i < 150; ++i) {
        const WonenburgerTriple t = random_triple(strata[i % 3], rng);
        const Mat m = assemble(t);
        for (const KreinEntry& k : krein_from_btype(t)) {
            const auto [p, q] = krein_signature(m, k.lambda, 1e-9);
            CHECK(p == k.p);
            CHECK(q == k.q);
            // conjugate symmetry
            const auto [cp, cq] = krein_signature(m, std::conj(k.lambda), 1e-9);
            CHECK(cp == q);
            CHECK(cq == p);
        }
    }
}

TEST_CASE("hyperbolic eigenspaces are G-isotropic") {
    // EH+ form: lambda = mu2 + sqrt(mu2^2-1) real; G vanishes on E_lambda.
    const WonenburgerTriple t =
        seed_triple(StratumLabel::EHp, {1.0, 0.9}, "+-");
    const Mat m = assemble(t);
    const double mu2 = std::cosh(0.9);
    const double lambda = mu2 + std::sqrt(mu2 * mu2 - 1.0);
    const auto basis = CMat::from_real(m).shifted(cd(lambda, 0)).nullspace(1e-9);
    REQUIRE(basis.size() == 1);
    // G(v,v) = <-iJ v, v>
    const Mat j = Mat::symplectic_j(4);
    CVec jv(4);
    for (int r = 0; r < 4; ++r) {
        cd s(0, 0);
        for (int c = 0; c < 4; ++c) s += cd(j(r, c), 0) * basis[0][c];
        jv[r] = cd(0, -1) * s;
    }
    CHECK(std::abs(jv.inner(basis[0])) < 1e-9);
}

TEST_CASE("stability_check verdicts") {
    // distinct rotation pair: strongly stable
    CHECK(stability_check(assemble(e2_form(2.0, 1.0, '-', '-'))).kind ==
          StabilityKind::StronglyStable);
    CHECK(stability_check(assemble(e2_form(2.1, 0.7, '+', '-'))).kind ==
          StabilityKind::StronglyStable);

    CHECK(stability_check(Mat(2, {1, 1, 0, 1})).kind == StabilityKind::Unstable);
    CHECK(stability_check(Mat::diag({2.0, 0.5})).kind == StabilityKind::Unstable);

    // mixed branch over the parabola: stable but not strongly
    const StabilityVerdict mixed = stability_check(assemble(gd2_form(1.1, "+-")));
    CHECK(mixed.kind == StabilityKind::StableNotStrong);

    // definite branches over the parabola stay strongly stable
    CHECK(stability_check(assemble(gd2_form(1.1, "++"))).kind ==
          StabilityKind::StronglyStable);
    CHECK(stability_check(assemble(gd2_form(1.1, "--"))).kind ==
          StabilityKind::StronglyStable);

    // +-1 in the spectrum is never strongly stable
    CHECK(stability_check(Mat::identity(4)).kind ==
          StabilityKind::StableNotStrong);
    CHECK(stability_check(assemble(g12_form(0.9, '+'))).kind ==
          StabilityKind::StableNotStrong);

    CHECK_THROWS_AS(stability_check(Mat::diag({2.0, 2.0})), NotSymplectic);
}

TEST_CASE("Krein-Moser in the small: robustness and destabilization") {
    std::mt19937_64 rng(35);
    const Mat strong = assemble(e2_form(2.0, 1.0, '-', '-'));
    for (int i = 0; i < 40; ++i) {
        const Mat p = random_symplectic_perturbation(strong, 1e-4, rng);
        CHECK(stability_check(p).stable());
    }

    Mat witness(4);
    CHECK(find_destabilizer(assemble(gd2_form(1.1, "+-")), 1e-3, &witness));
    CHECK((witness - assemble(gd2_form(1.1, "+-"))).max_norm() <= 1e-3);
    CHECK(find_destabilizer(Mat::identity(4), 1e-3, nullptr));
    CHECK(find_destabilizer(assemble(g12_form(0.9, '+')), 1e-3, nullptr));
}

TEST_CASE("floquet monodromy closed forms") {
    const Mat j2 = Mat::symplectic_j(2);

    PeriodicHamiltonian constant{kPi / 2, [](double) { return Mat::identity(2); }};
    CHECK((floquet_monodromy(constant, 1024) - j2).max_norm() < 1e-10);

    PeriodicHamiltonian full{2 * kPi, [](double) { return Mat::identity(2); }};
    CHECK((floquet_monodromy(full, 1024) - Mat::identity(2)).max_norm() < 1e-9);

    PeriodicHamiltonian zero{1.0, [](double) { return Mat(2); }};
    CHECK((floquet_monodromy(zero, 64) - Mat::identity(2)).max_norm() == 0.0);

    PeriodicHamiltonian skew{1.0, [](double) { return Mat(2, {0, 1, 0, 0}); }};
    CHECK_THROWS_AS(floquet_monodromy(skew, 64), NonSymmetricA);

    CHECK_THROWS_AS(floquet_monodromy(zero, 8), InvalidInput);

    // time-dependent coefficient against the exact commuting solution:
    // A(t) = f(t) I  =>  R(T) = exp(F(T) J) with F the antiderivative.
    PeriodicHamiltonian pulse{
        1.0, [](double t) {
            return Mat::identity(2) * (1.0 + std::cos(2 * kPi * t));
        }};
    const Mat r = floquet_monodromy(pulse, 1024);
    const Mat expected = mat_exp(j2 * 1.0);  // integral of f over [0,1] is 1
    CHECK((r - expected).max_norm() < 1e-9);

    // output is symplectic after re-symplectization
    CHECK(symplectic_check(r, 1e-8));
}

TEST_CASE("floquet monodromy matches mat_exp for constant 4x4 coefficients") {
    std::mt19937_64 rng(36);
    std::uniform_real_distribution<double> d(-0.8, 0.8);
    for (int i = 0; i < 10; ++i) {
        Mat a(4);
        for (int r = 0; r < 4; ++r)
            for (int c = r; c < 4; ++c) a(r, c) = a(c, r) = d(rng);
        const double period = 1.3;
        PeriodicHamiltonian h{period, [a](double) { return a; }};
        const Mat flo = floquet_monodromy(h, 1024);
        const Mat exact = mat_exp(Mat::symplectic_j(4) * a * period);
        CHECK((flo - exact).max_norm() < 1e-8 * (1 + exact.max_norm()));
    }
}
