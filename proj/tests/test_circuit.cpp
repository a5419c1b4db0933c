#include <catch2/catch.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <random>

#include "mqga/circuit.hpp"
#include "test_util.hpp"

using namespace mqga;

TEST_CASE("circuit parsing", "[circuit]") {
    SECTION("two-qubit Bell circuit") {
        auto c = parse_circuit("qubits 2\ngate H 1\ngate CNOT 1 2\n");
        REQUIRE(c.n == 2);
        REQUIRE(c.ops.size() == 2);
        CHECK(c.ops[0].name == "H");
        CHECK(c.ops[0].qubits == std::vector<int>{1});
        CHECK(c.ops[1].name == "CNOT");
        CHECK(c.ops[1].qubits == std::vector<int>{1, 2});
        CHECK(c.init_bits.empty());
    }

    SECTION("comments, blank lines, parameters, init") {
        auto c = parse_circuit(
            "# preamble\n"
            "qubits 3\n"
            "\n"
            "init 101   # MSB first\n"
            "gate RTHETA theta=0.25 2\n"
            "gate DEUTSCH gamma=1 1 2 3\n");
        CHECK(c.init_bits == "101");
        REQUIRE(c.ops.size() == 2);
        CHECK(c.ops[0].params.at("theta") == 0.25);
        CHECK(c.ops[1].qubits == std::vector<int>{1, 2, 3});
        CHECK(c.ops[1].line == 6);
    }

    SECTION("empty gate list is the identity circuit") {
        auto c = parse_circuit("qubits 2\n");
        CHECK(c.ops.empty());
        auto v = run_matrix(c);
        CHECK(std::abs(v.amp(0) - 1.0) == 0.0);
    }

    SECTION("rejections carry line numbers") {
        CHECK_THROWS_AS(parse_circuit("qubits 2\ngate CNOT 1 1\n"), ParseError);
        CHECK_THROWS_WITH(parse_circuit("qubits 2\ngate CNOT 1 1\n"),
                          Catch::Contains("line 2") && Catch::Contains("distinct"));
        CHECK_THROWS_WITH(parse_circuit("qubits 1\ngate FOO 1\n"),
                          Catch::Contains("unknown gate"));
        CHECK_THROWS_WITH(parse_circuit("qubits 2\ngate CNOT 1\n"),
                          Catch::Contains("expects 2"));
        CHECK_THROWS_WITH(parse_circuit("qubits 1\ngate RTHETA 1\n"),
                          Catch::Contains("requires parameter theta"));
        CHECK_THROWS_WITH(parse_circuit("qubits 1\ngate H theta=1 1\n"),
                          Catch::Contains("no parameter"));
        CHECK_THROWS_WITH(parse_circuit("qubits 1\ngate H 2\n"),
                          Catch::Contains("out of range"));
        CHECK_THROWS_WITH(parse_circuit("gate H 1\n"),
                          Catch::Contains("qubits statement must come first"));
        CHECK_THROWS_WITH(parse_circuit("qubits 2\ngate H 1\ninit 00\n"),
                          Catch::Contains("init must precede"));
        CHECK_THROWS_WITH(parse_circuit("qubits 2\ninit 0\n"),
                          Catch::Contains("length"));
        CHECK_THROWS_WITH(parse_circuit("qubits 0\n"), Catch::Contains("1..10"));
        CHECK_THROWS_WITH(parse_circuit("# nothing\n"), Catch::Contains("missing qubits"));
        CHECK_THROWS_WITH(parse_circuit("qubits 1\ngate RTHETA theta=abc 1\n"),
                          Catch::Contains("real number"));
    }
}

TEST_CASE("circuit rendering round-trips", "[circuit]") {
    SECTION("fixed example") {
        std::string text =
            "qubits 2\n"
            "init 10\n"
            "gate BARENCO phi=0.5 alpha=1.25 theta=-0.75 2 1\n"
            "gate SWAP 1 2\n";
        auto c = parse_circuit(text);
        CHECK(render_circuit(c) == text);
        CHECK(circuits_equal(parse_circuit(render_circuit(c)), c));
    }

    SECTION("random circuits") {
        std::mt19937 rng(211);
        std::uniform_real_distribution<double> par(-3.0, 3.0);
        std::vector<std::string> names;
        for (const auto& [name, spec] : gate_table()) names.push_back(name);

        for (int rep = 0; rep < 30; ++rep) {
            Circuit c;
            c.n = 3 + static_cast<int>(rng() % 3);
            int depth = 1 + static_cast<int>(rng() % 12);
            for (int d = 0; d < depth; ++d) {
                GateOp op;
                op.name = names[rng() % names.size()];
                const auto& spec = gate_table().at(op.name);
                for (const auto& key : spec.params) op.params[key] = par(rng);
                while (static_cast<int>(op.qubits.size()) < spec.arity) {
                    int q = 1 + static_cast<int>(rng() % c.n);
                    if (std::find(op.qubits.begin(), op.qubits.end(), q) == op.qubits.end())
                        op.qubits.push_back(q);
                }
                c.ops.push_back(std::move(op));
            }
            auto back = parse_circuit(render_circuit(c));
            CHECK(circuits_equal(back, c));
            CHECK(render_circuit(back) == render_circuit(c));
        }
    }
}

TEST_CASE("backend agreement", "[circuit]") {
    SECTION("Bell circuit on both backends") {
        auto c = parse_circuit("qubits 2\ngate H 1\ngate CNOT 1 2\n");
        auto mv = run_matrix(c);
        auto ga = run_ga(c);
        CHECK(max_amplitude_deviation(decode(ga), mv) < 1e-12);
        CHECK(max_coeff_diff(ga, bell_states()[0]) < 1e-12);
    }

    SECTION("identity circuit echoes the initial state") {
        auto c = parse_circuit("qubits 2\ninit 01\n");
        auto mv = run_matrix(c);
        CHECK(std::abs(mv.amp(1) - 1.0) == 0.0);
        CHECK(max_amplitude_deviation(decode(run_ga(c)), mv) < 1e-12);
    }

    SECTION("matrix-only gates are rejected by the GA backend only") {
        auto c = parse_circuit("qubits 3\ngate DEUTSCH gamma=1 1 2 3\n");
        CHECK_THROWS_WITH(run_ga(c), Catch::Contains("matrix-only"));
        auto mv = run_matrix(c);  // Toffoli at gamma=1: |000> is fixed
        CHECK(std::abs(mv.amp(0) - 1.0) < 1e-12);

        auto c2 = parse_circuit("qubits 3\ninit 110\ngate DEUTSCH gamma=1 1 2 3\n");
        auto mv2 = run_matrix(c2);
        CHECK(std::abs(mv2.amp(7) - 1.0) < 1e-12);
    }

    SECTION("amplitude file initialization") {
        namespace fs = std::filesystem;
        auto path = fs::temp_directory_path() / "mqga_init_test.txt";
        {
            std::ofstream out(path);
            double r = 1.0 / std::sqrt(2.0);
            out << std::setprecision(17) << r << " 0\n0 0\n0 0\n0 " << -r << "\n";
        }
        auto c = parse_circuit("qubits 2\ninit file " + path.string() + "\n");
        auto mv = run_matrix(c);
        CHECK(std::abs(mv.amp(0).real() - 1.0 / std::sqrt(2.0)) < 1e-15);
        CHECK(std::abs(mv.amp(3).imag() + 1.0 / std::sqrt(2.0)) < 1e-15);
        CHECK(max_amplitude_deviation(decode(run_ga(c)), mv) < 1e-12);
        fs::remove(path);
    }

    SECTION("random catalog circuits agree to 1e-10") {
        std::mt19937 rng(223);
        std::uniform_real_distribution<double> par(-3.0, 3.0);
        const std::vector<std::string> names = {"X",    "Y",     "Z",    "H",    "S",
                                                "T",    "RTHETA", "S3POW", "CNOT", "CPHASE",
                                                "SWAP"};
        for (int rep = 0; rep < 20; ++rep) {
            Circuit c;
            c.n = 1 + static_cast<int>(rng() % 3);
            int depth = 1 + static_cast<int>(rng() % 20);
            for (int d = 0; d < depth; ++d) {
                GateOp op;
                do {
                    op.name = names[rng() % names.size()];
                } while (gate_table().at(op.name).arity > c.n);
                const auto& spec = gate_table().at(op.name);
                for (const auto& key : spec.params) op.params[key] = par(rng);
                while (static_cast<int>(op.qubits.size()) < spec.arity) {
                    int q = 1 + static_cast<int>(rng() % c.n);
                    if (std::find(op.qubits.begin(), op.qubits.end(), q) == op.qubits.end())
                        op.qubits.push_back(q);
                }
                c.ops.push_back(std::move(op));
            }
            CHECK(max_amplitude_deviation(decode(run_ga(c)), run_matrix(c)) < 1e-10);
        }
    }
}
