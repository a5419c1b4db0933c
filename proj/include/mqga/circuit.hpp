#pragma once

// Plain-text circuit files and the two execution backends.
//
// Grammar, one statement per line, `#` starts a comment:
//
//   qubits <n>
//   init <bitstring>            (MSB first: qubit 1 is the leftmost bit)
//   init file <path>            (one "re im" amplitude pair per line)
//   gate <NAME> [k=<real>...] <q1> [<q2> [<q3>]]
//
// `qubits` must come first; `init` is optional and must precede any gate.
// Qubit indices are 1-based and must be distinct within a gate.

#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mqga/format.hpp"
#include "mqga/gate_matrices.hpp"
#include "mqga/gates.hpp"
#include "mqga/spinor.hpp"
#include "mqga/state_vector.hpp"

namespace mqga {

struct GateSpec {
    int arity;
    std::vector<std::string> params;  // required keys, in canonical order
    bool matrix_only;                 // no geometric-algebra form available
};

inline const std::map<std::string, GateSpec>& gate_table() {
    static const std::map<std::string, GateSpec> table = {
        {"X", {1, {}, false}},
        {"Y", {1, {}, false}},
        {"Z", {1, {}, false}},
        {"H", {1, {}, false}},
        {"S", {1, {}, false}},
        {"T", {1, {}, false}},
        {"RTHETA", {1, {"theta"}, false}},
        {"S3POW", {1, {"alpha"}, false}},
        {"CNOT", {2, {}, false}},
        {"CPHASE", {2, {}, false}},
        {"SWAP", {2, {}, false}},
        {"DEUTSCH", {3, {"gamma"}, true}},
        {"BARENCO", {2, {"phi", "alpha", "theta"}, true}},
    };
    return table;
}

struct GateOp {
    std::string name;
    std::map<std::string, double> params;
    std::vector<int> qubits;  // 1-based
    int line = 0;             // source line, kept for diagnostics only
};

struct Circuit {
    int n = 0;
    std::string init_bits;  // empty means |00...0> unless init_file is set
    std::string init_file;
    std::vector<GateOp> ops;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

namespace detail {

inline double parse_real(const std::string& tok, int line, const std::string& what) {
    try {
        size_t pos = 0;
        double v = std::stod(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, what + ": expected a real number, got '" + tok + "'");
    }
}

inline int parse_int(const std::string& tok, int line, const std::string& what) {
    try {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, what + ": expected an integer, got '" + tok + "'");
    }
}

}  // namespace detail

inline Circuit parse_circuit(const std::string& text) {
    Circuit c;
    bool have_qubits = false, have_init = false, have_gate = false;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);

        std::istringstream ls(raw);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;

        const std::string& kw = tok[0];
        if (kw == "qubits") {
            if (have_qubits) throw ParseError(lineno, "duplicate qubits statement");
            if (tok.size() != 2) throw ParseError(lineno, "usage: qubits <n>");
            c.n = detail::parse_int(tok[1], lineno, "qubits");
            if (c.n < 1 || c.n > 10)
                throw ParseError(lineno, "qubit count must be in 1..10");
            have_qubits = true;
            continue;
        }
        if (!have_qubits)
            throw ParseError(lineno, "qubits statement must come first");

        if (kw == "init") {
            if (have_init) throw ParseError(lineno, "duplicate init statement");
            if (have_gate) throw ParseError(lineno, "init must precede all gates");
            if (tok.size() == 3 && tok[1] == "file") {
                c.init_file = tok[2];
            } else if (tok.size() == 2) {
                if (static_cast<int>(tok[1].size()) != c.n)
                    throw ParseError(lineno, "init bitstring length must equal qubit count");
                for (char ch : tok[1])
                    if (ch != '0' && ch != '1')
                        throw ParseError(lineno, "init bitstring must be over {0,1}");
                c.init_bits = tok[1];
            } else {
                throw ParseError(lineno, "usage: init <bitstring> | init file <path>");
            }
            have_init = true;
            continue;
        }

        if (kw != "gate")
            throw ParseError(lineno, "unknown statement '" + kw + "'");
        if (tok.size() < 2) throw ParseError(lineno, "usage: gate <NAME> [k=<real>...] <q>...");

        GateOp op;
        op.name = tok[1];
        op.line = lineno;
        auto it = gate_table().find(op.name);
        if (it == gate_table().end())
            throw ParseError(lineno, "unknown gate '" + op.name + "'");
        const GateSpec& spec = it->second;

        size_t pos = 2;
        for (; pos < tok.size() && tok[pos].find('=') != std::string::npos; ++pos) {
            auto eq = tok[pos].find('=');
            std::string key = tok[pos].substr(0, eq);
            bool known = false;
            for (const auto& p : spec.params) known = known || p == key;
            if (!known)
                throw ParseError(lineno, op.name + " takes no parameter '" + key + "'");
            if (op.params.count(key))
                throw ParseError(lineno, "duplicate parameter '" + key + "'");
            op.params[key] =
                detail::parse_real(tok[pos].substr(eq + 1), lineno, "parameter " + key);
        }
        for (const auto& p : spec.params)
            if (!op.params.count(p))
                throw ParseError(lineno, op.name + " requires parameter " + p + "=<real>");

        for (; pos < tok.size(); ++pos)
            op.qubits.push_back(detail::parse_int(tok[pos], lineno, "qubit index"));
        if (static_cast<int>(op.qubits.size()) != spec.arity)
            throw ParseError(lineno, op.name + " expects " + std::to_string(spec.arity) +
                                         " qubit index(es), got " +
                                         std::to_string(op.qubits.size()));
        for (int q : op.qubits)
            if (q < 1 || q > c.n)
                throw ParseError(lineno, "qubit index " + std::to_string(q) +
                                             " out of range 1.." + std::to_string(c.n));
        for (size_t a = 0; a < op.qubits.size(); ++a)
            for (size_t b = a + 1; b < op.qubits.size(); ++b)
                if (op.qubits[a] == op.qubits[b])
                    throw ParseError(lineno, op.name + ": qubit indices must be distinct");

        have_gate = true;
        c.ops.push_back(std::move(op));
    }
    if (!have_qubits) throw ParseError(lineno + 1, "missing qubits statement");
    return c;
}

// Canonical text form.  Parameters are printed with 17 significant digits so
// that render -> parse reproduces the doubles bit for bit.
inline std::string render_circuit(const Circuit& c) {
    std::string out = "qubits " + std::to_string(c.n) + "\n";
    if (!c.init_file.empty())
        out += "init file " + c.init_file + "\n";
    else if (!c.init_bits.empty())
        out += "init " + c.init_bits + "\n";
    for (const auto& op : c.ops) {
        out += "gate " + op.name;
        for (const auto& key : gate_table().at(op.name).params)
            out += " " + key + "=" + format_real(op.params.at(key), 17);
        for (int q : op.qubits) out += " " + std::to_string(q);
        out += "\n";
    }
    return out;
}

inline bool circuits_equal(const Circuit& a, const Circuit& b) {
    if (a.n != b.n || a.init_bits != b.init_bits || a.init_file != b.init_file ||
        a.ops.size() != b.ops.size())
        return false;
    for (size_t k = 0; k < a.ops.size(); ++k) {
        const GateOp &x = a.ops[k], &y = b.ops[k];
        if (x.name != y.name || x.qubits != y.qubits || x.params != y.params) return false;
    }
    return true;
}

inline ComplexStateVector initial_state(const Circuit& c) {
    if (!c.init_file.empty()) return ComplexStateVector::load_file(c.init_file, c.n);
    if (!c.init_bits.empty()) return ComplexStateVector::basis(c.n, c.init_bits);
    return ComplexStateVector(c.n);
}

inline ComplexStateVector run_matrix(const Circuit& c) {
    ComplexStateVector v = initial_state(c);
    for (const auto& op : c.ops)
        v = apply_on(gate_matrix(op.name, op.params), op.qubits, v);
    return v;
}

// Evolve the encoded spinor by left/right multiplication throughout; gate
// actions are derived once per op from the catalog matrix.
inline Multivector run_ga(const Circuit& c) {
    for (const auto& op : c.ops)
        if (gate_table().at(op.name).matrix_only)
            throw std::invalid_argument("gate " + op.name +
                                        " is matrix-only; the ga backend cannot run it");
    Multivector s = encode(initial_state(c));
    for (const auto& op : c.ops)
        s = apply_gate(gate_from_matrix(op.name, gate_matrix(op.name, op.params), op.qubits),
                       s);
    return s;
}

}  // namespace mqga
