#include <catch2/catch.hpp>

#include <random>
#include <sstream>

#include "mqga/gate_matrices.hpp"
#include "test_util.hpp"

using namespace mqga;

TEST_CASE("catalog matrices are unitary", "[oracle]") {
    for (const char* name : {"X", "Y", "Z", "H", "S", "T", "CNOT", "CPHASE", "SWAP"})
        CHECK(gate_matrix(name).is_unitary(1e-12));
    CHECK(gate_matrix("RTHETA", {{"theta", 1.234}}).is_unitary(1e-12));
    CHECK(gate_matrix("S3POW", {{"alpha", -0.377}}).is_unitary(1e-12));

    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int rep = 0; rep < 50; ++rep) {
        CHECK(gate_matrix("DEUTSCH", {{"gamma", u(rng)}}).is_unitary(1e-12));
        CHECK(gate_matrix("BARENCO", {{"phi", u(rng)}, {"alpha", u(rng)}, {"theta", u(rng)}})
                  .is_unitary(1e-12));
    }

    CHECK_THROWS_AS(gate_matrix("FOO"), std::invalid_argument);
    CHECK_THROWS_AS(gate_matrix("RTHETA"), std::invalid_argument);
}

TEST_CASE("special gate values", "[oracle]") {
    // T is the quarter power of the phase flip
    auto t = gate_matrix("T");
    CHECK(std::abs(t.at(1, 1) - std::polar(1.0, kPi / 4.0)) < 1e-15);
    CHECK(max_entry_diff(gate_matrix("S3POW", {{"alpha", 0.25}}), t) < 1e-15);

    // Deutsch at gamma=1 degenerates to a doubly controlled NOT
    auto d = gate_matrix("DEUTSCH", {{"gamma", 1.0}});
    CHECK(std::abs(d.at(6, 6)) < 1e-15);
    CHECK(std::abs(d.at(6, 7) - 1.0) < 1e-15);
    CHECK(std::abs(d.at(7, 6) - 1.0) < 1e-15);
    CHECK(std::abs(d.at(7, 7)) < 1e-15);
    for (int i = 0; i < 6; ++i) CHECK(std::abs(d.at(i, i) - 1.0) < 1e-15);

    // Barenco at the origin is the identity
    CHECK(max_entry_diff(gate_matrix("BARENCO", {{"phi", 0.0}, {"alpha", 0.0}, {"theta", 0.0}}),
                         ComplexMatrix::identity(4)) < 1e-15);
}

TEST_CASE("hermitian eigenvalues via Jacobi", "[oracle]") {
    // Pauli X has eigenvalues -1, +1
    auto ev = hermitian_eigenvalues(gate_matrix("X"));
    REQUIRE(ev.size() == 2);
    CHECK(ev[0] == Approx(-1.0).margin(1e-12));
    CHECK(ev[1] == Approx(+1.0).margin(1e-12));

    // random Hermitian: eigenvalue sum equals the trace, sum of squares the
    // squared Frobenius norm
    std::mt19937 rng(17);
    for (int dim : {2, 3, 4, 8}) {
        ComplexMatrix b(dim, dim);
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) b.at(r, c) = testutil::random_cplx(rng);
        ComplexMatrix h = b + b.adjoint();
        auto evs = hermitian_eigenvalues(h);
        double sum = 0.0, sq = 0.0;
        for (double e : evs) {
            sum += e;
            sq += e * e;
        }
        double fro = 0.0;
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) fro += std::norm(h.at(r, c));
        CHECK(sum == Approx(h.trace().real()).margin(1e-10));
        CHECK(sq == Approx(fro).margin(1e-9));
    }
}

TEST_CASE("approximation error", "[oracle]") {
    auto id = ComplexMatrix::identity(2);
    auto z = gate_matrix("Z");

    CHECK(approximation_error(z, z) == Approx(0.0).margin(1e-12));
    CHECK(approximation_error(id, -1.0 * id) == Approx(2.0).margin(1e-12));
    CHECK(phase_insensitive_error(id, -1.0 * id) == Approx(0.0).margin(1e-12));
    CHECK(approximation_error(id, z) == Approx(2.0).margin(1e-12));

    SECTION("metric behaviour on random unitaries") {
        std::mt19937 rng(23);
        for (int rep = 0; rep < 10; ++rep) {
            auto a = testutil::random_unitary(2, rng);
            auto b = testutil::random_unitary(2, rng);
            auto c = testutil::random_unitary(2, rng);
            double ab = approximation_error(a, b);
            CHECK(ab == Approx(approximation_error(b, a)).margin(1e-10));
            CHECK(ab >= 0.0);
            CHECK(ab <= approximation_error(a, c) + approximation_error(c, b) + 1e-10);
            CHECK(phase_insensitive_error(a, b) <= ab + 1e-12);
        }
    }
}

TEST_CASE("principal matrix powers", "[oracle]") {
    auto h = gate_matrix("H");
    auto z = gate_matrix("Z");

    CHECK(max_entry_diff(matrix_power(h, 1.0), h) < 1e-12);

    // quarter power of the phase flip is the pi/8 gate
    CHECK(max_entry_diff(matrix_power(z, 0.25), gate_matrix("T")) < 1e-12);

    auto hroot = matrix_power(h, 0.5);
    CHECK(max_entry_diff(hroot * hroot, h) < 1e-12);

    SECTION("power round-trips on random unitaries") {
        std::mt19937 rng(41);
        for (int rep = 0; rep < 20; ++rep) {
            auto u = testutil::random_unitary(2, rng);
            for (double p : {0.5, 0.25}) {
                auto up = matrix_power(u, p);
                CHECK(up.is_unitary(1e-10));
                CHECK(max_entry_diff(matrix_power(up, 1.0 / p), u) < 1e-10);
            }
            // principal branches commute and add for small exponents
            auto a = matrix_power(u, 0.3);
            auto b = matrix_power(u, 0.2);
            CHECK(max_entry_diff(a * b, matrix_power(u, 0.5)) < 1e-10);
        }
    }

    CHECK_THROWS_AS(matrix_power(2.0 * ComplexMatrix::identity(2), 0.5),
                    std::invalid_argument);
}

TEST_CASE("phase normalization", "[oracle]") {
    auto h = gate_matrix("H");
    auto hn = normalize_phase(h);  // det(H) = -1, principal root is i
    CHECK(max_entry_diff(hn, cplx(0.0, -1.0) * h) < 1e-14);

    std::mt19937 rng(43);
    for (int rep = 0; rep < 10; ++rep) {
        auto u = testutil::random_unitary(2, rng);
        auto un = normalize_phase(u);
        cplx det = un.at(0, 0) * un.at(1, 1) - un.at(0, 1) * un.at(1, 0);
        CHECK(std::abs(det - 1.0) < 1e-10);
    }
}

TEST_CASE("state application and embedding", "[oracle]") {
    SECTION("CNOT leaves |01> alone (control clear)") {
        auto v = ComplexStateVector::basis(2, "01");
        auto w = apply(gate_matrix("CNOT"), v);
        CHECK(max_amplitude_deviation(w, v) < 1e-15);
    }

    SECTION("H on qubit 2 of |00>") {
        auto v = ComplexStateVector::basis(2, "00");
        auto w = apply_on(gate_matrix("H"), {2}, v);
        double r = 1.0 / std::sqrt(2.0);
        CHECK(std::abs(w.amp(0) - r) < 1e-15);
        CHECK(std::abs(w.amp(1) - r) < 1e-15);
        CHECK(std::abs(w.amp(2)) < 1e-15);
        CHECK(std::abs(w.amp(3)) < 1e-15);
    }

    SECTION("identity acts trivially") {
        auto v = ComplexStateVector::basis(3, "101");
        auto w = apply(ComplexMatrix::identity(8), v);
        CHECK(max_amplitude_deviation(w, v) == 0.0);
    }

    SECTION("direct application matches the embedded matrix") {
        std::mt19937 rng(47);
        for (int rep = 0; rep < 20; ++rep) {
            int n = 3;
            auto v = testutil::random_state(n, rng);
            std::uniform_int_distribution<int> pick(1, n);
            int q1 = pick(rng), q2 = pick(rng);
            while (q2 == q1) q2 = pick(rng);
            auto g2 = testutil::random_unitary(4, rng);
            auto direct = apply_on(g2, {q1, q2}, v);
            auto embedded = apply(tensor_embed(g2, {q1, q2}, n), v);
            CHECK(max_amplitude_deviation(direct, embedded) < 1e-12);

            auto g1 = testutil::random_unitary(2, rng);
            CHECK(max_amplitude_deviation(
                      apply_on(g1, {q1}, v), apply(tensor_embed(g1, {q1}, n), v)) < 1e-12);
        }
    }

    SECTION("embedding with reversed target order transposes the gate index") {
        // SWAP is symmetric under target order; CNOT is not
        auto cnot12 = tensor_embed(gate_matrix("CNOT"), {1, 2}, 2);
        auto cnot21 = tensor_embed(gate_matrix("CNOT"), {2, 1}, 2);
        auto v = ComplexStateVector::basis(2, "01");  // qubit 2 set
        auto w = apply(cnot21, v);                    // control = qubit 2
        CHECK(std::abs(w.amp(3) - 1.0) < 1e-15);      // flips qubit 1: |11>
        CHECK(max_entry_diff(cnot12, cnot21) > 0.5);
    }
}

TEST_CASE("state vector io", "[oracle]") {
    auto v = ComplexStateVector::basis(2, "10");
    v.amp(0) = cplx(0.25, -0.5);
    v.amp(2) = cplx(0.5, 0.125);
    v.amp(3) = cplx(-0.625, 0.0);
    std::stringstream ss;
    v.save(ss);
    auto w = ComplexStateVector::load(ss, 2);
    CHECK(max_amplitude_deviation(v, w) == 0.0);

    std::stringstream bad("0 0\n1 0\n");
    CHECK_THROWS_AS(ComplexStateVector::load(bad, 2), std::invalid_argument);

    std::stringstream junk("0 0\n1 x\n0 0\n0 0\n");
    CHECK_THROWS_AS(ComplexStateVector::load(junk, 2), std::invalid_argument);

    CHECK(v.bits_of(2) == "10");
    CHECK_THROWS_AS(ComplexStateVector::basis(2, "012"), std::invalid_argument);
}
