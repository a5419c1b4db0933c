// Command-line front end: run circuit files on the geometric-algebra and
// complex-matrix backends and compare them, plus the {H, T} universality
// demos (canonical word data, Euler decomposition, word synthesis).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mqga/circuit.hpp"
#include "mqga/universality.hpp"

namespace {

using namespace mqga;

std::string fmt(double x, int precision) { return format_real(x, precision); }

std::string fmt_vec(const Vec3& v, int precision) {
    return "(" + fmt(v[0], precision) + ", " + fmt(v[1], precision) + ", " +
           fmt(v[2], precision) + ")";
}

void print_amplitudes(const ComplexStateVector& v, int precision) {
    for (size_t idx = 0; idx < v.dim(); ++idx)
        std::cout << "  |" << v.bits_of(idx) << ">  " << fmt(v.amp(idx).real(), precision)
                  << " " << fmt(v.amp(idx).imag(), precision) << "\n";
}

Vec3 parse_axis(const std::string& text) {
    Vec3 v{};
    char extra;
    if (std::sscanf(text.c_str(), "%lf,%lf,%lf%c", &v[0], &v[1], &v[2], &extra) != 3)
        throw std::invalid_argument("axis must be three comma-separated reals, e.g. 0,0,1");
    double len = length(v);
    if (!(len > 0.0))
        throw std::invalid_argument("axis must be non-zero");
    for (auto& c : v) c /= len;
    return v;
}

// The --axis/--angle pair names the unitary exp(-i*angle*(n.sigma)); with
// this sign the usual gate identifications hold (angle pi/4 about z is S up
// to phase, pi/8 is T).
Rotor target_rotor(const Vec3& axis, double angle) {
    return rotor_exp({axis, -angle});
}

int cmd_run(const std::string& path, const std::string& backend, double tolerance,
            bool dump, int precision) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        return 2;
    }
    std::ostringstream text;
    text << in.rdbuf();
    Circuit c = parse_circuit(text.str());

    ComplexStateVector via_matrix(c.n);
    Multivector via_ga(c.n);
    if (backend != "ga") via_matrix = run_matrix(c);
    if (backend != "matrix") via_ga = run_ga(c);

    if (backend != "matrix") {
        std::cout << "backend: ga (decoded amplitudes, MSB first)\n";
        print_amplitudes(decode(via_ga), precision);
        if (dump) std::cout << "  multivector: " << render(via_ga, precision) << "\n";
    }
    if (backend != "ga") {
        std::cout << "backend: matrix\n";
        print_amplitudes(via_matrix, precision);
    }
    if (backend == "both") {
        double dev = max_amplitude_deviation(decode(via_ga), via_matrix);
        std::cout << "max amplitude deviation = " << fmt(dev, precision) << "\n";
        if (dev > tolerance) {
            std::cout << "FAIL (tolerance " << fmt(tolerance, precision) << ")\n";
            return 1;
        }
        std::cout << "PASS (tolerance " << fmt(tolerance, precision) << ")\n";
    }
    return 0;
}

int cmd_boykin(int precision) {
    BoykinData bd = boykin_construct();
    double clp = std::cos(bd.lambda * kPi);
    std::cout << "common angle lambda = " << fmt(bd.lambda, precision) << "\n"
              << "cos(lambda*pi)      = " << fmt(clp, precision) << "\n"
              << "axis n1             = " << fmt_vec(bd.n1, precision) << "\n"
              << "axis n2             = " << fmt_vec(bd.n2, precision) << "\n"
              << "rotor R1 = " << render(bd.r1.to_multivector(), precision) << "\n"
              << "rotor R2 = " << render(bd.r2.to_multivector(), precision) << "\n"
              << "checks:\n"
              << "  |cos(lambda*pi) - (2+sqrt(2))/4| = "
              << fmt(std::abs(clp - (2.0 + std::sqrt(2.0)) / 4.0), 3) << "  (<= 1e-12)\n"
              << "  n1 . n2 = " << fmt(dot(bd.n1, bd.n2), 3) << "  (|.| <= 1e-12)\n"
              << "  | |n1| - 1 | = " << fmt(std::abs(length(bd.n1) - 1.0), 3)
              << ", | |n2| - 1 | = " << fmt(std::abs(length(bd.n2) - 1.0), 3) << "\n"
              << "all invariants hold\n";
    return 0;
}

int cmd_euler(const std::string& axis_text, double angle, int precision) {
    Rotor target = target_rotor(parse_axis(axis_text), angle);
    BoykinData bd = boykin_construct();
    EulerAngles e = euler_decompose(target, bd.n1, bd.n2);
    double err = rotor_error(euler_recompose(e, bd.n1, bd.n2), target);
    std::cout << "alpha = " << fmt(e.alpha, precision) << "\n"
              << "beta  = " << fmt(e.beta, precision) << "\n"
              << "gamma = " << fmt(e.gamma, precision) << "\n"
              << "recomposition error = " << fmt(err, precision) << "\n";
    return 0;
}

int cmd_synth(const std::string& axis_text, double angle, int max_len, int precision) {
    Rotor target = target_rotor(parse_axis(axis_text), angle);
    SynthesisResult best = synthesize_word(target, max_len);
    std::cout << "word  = " << (best.word.empty() ? "(identity)" : best.word) << "\n"
              << "length = " << best.word.size() << "\n"
              << "error = " << fmt(best.error, precision) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Quantum circuits in the real geometric algebra of n qubits, checked "
        "against a complex-matrix simulator.\n"
        "Convention: bitstrings, amplitude files and printed amplitudes are MSB "
        "first; qubit 1 is the leftmost (most significant) bit."};
    app.require_subcommand(1);
    int precision = 12;
    app.add_option("--precision", precision, "significant digits in printed numbers")
        ->capture_default_str();

    auto* run = app.add_subcommand("run", "run a circuit file and compare backends");
    run->fallthrough();
    std::string file;
    run->add_option("file", file, "circuit file")->required();
    std::string backend = "both";
    run->add_option("--backend", backend, "ga, matrix, or both")
        ->capture_default_str()
        ->check(CLI::IsMember({"ga", "matrix", "both"}));
    double tolerance = 1e-10;
    run->add_option("--tolerance", tolerance, "max allowed amplitude deviation in both mode")
        ->capture_default_str();
    bool dump = false;
    run->add_flag("--dump-multivector", dump, "also print the final GA spinor");

    auto* boykin = app.add_subcommand(
        "boykin", "canonical {H, T} word data: common angle and orthogonal axes");
    boykin->fallthrough();

    auto* euler = app.add_subcommand(
        "euler", "Euler-decompose a rotation about the two canonical axes");
    euler->fallthrough();
    std::string axis = "0,0,1";
    double angle = 0.0;
    euler->add_option("--axis", axis, "rotation axis x,y,z (normalized)")
        ->capture_default_str();
    euler->add_option("--angle", angle, "rotation angle in radians")->required();

    auto* synth = app.add_subcommand(
        "synth", "approximate a rotation by a word over the H and T gates");
    synth->fallthrough();
    std::string saxis = "0,0,1";
    double sangle = 0.0;
    int max_len = 10;
    synth->add_option("--axis", saxis, "rotation axis x,y,z (normalized)")
        ->capture_default_str();
    synth->add_option("--angle", sangle, "rotation angle in radians")->required();
    synth->add_option("--max-len", max_len, "longest word length searched")
        ->capture_default_str()
        ->check(CLI::Range(1, 16));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage problems are exit 2; --help stays 0
    }

    try {
        if (run->parsed()) return cmd_run(file, backend, tolerance, dump, precision);
        if (boykin->parsed()) return cmd_boykin(precision);
        if (euler->parsed()) return cmd_euler(axis, angle, precision);
        return cmd_synth(saxis, sangle, max_len, precision);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
