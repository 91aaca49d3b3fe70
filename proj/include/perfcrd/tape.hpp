#pragma once
#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "perfcrd/errors.hpp"

namespace perfcrd::ad {

enum class OpCode : std::uint8_t {
    Leaf,
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    AddConst,
    MulConst,
    RsubConst,  // c - x
    Log,
    Exp,
    Sigmoid,
    Tanh,
    Clamp,
};

const char* op_name(OpCode op);

struct Var {
    std::int32_t id = -1;
    bool valid() const { return id >= 0; }
};

// Append-only record of scalar primitives with local partials. Reverse
// sweeps visit each node exactly once; node order is topological by
// construction. One tape per rollout; not thread-safe.
class Tape {
public:
    struct Node {
        double val;
        std::array<double, 2> partial;
        std::array<std::int32_t, 2> parent;
        OpCode op;
    };

    std::vector<Node> nodes;  // exposed for diagnostics and fault-injection tests

    std::size_t size() const { return nodes.size(); }
    void reserve(std::size_t n) { nodes.reserve(n); }
    double val(Var v) const { return nodes[v.id].val; }

    Var leaf(double v) { return push(v, OpCode::Leaf, -1, 0.0, -1, 0.0); }
    Var constant(double v) { return leaf(v); }

    Var add(Var a, Var b) { return push(val(a) + val(b), OpCode::Add, a.id, 1.0, b.id, 1.0); }
    Var sub(Var a, Var b) { return push(val(a) - val(b), OpCode::Sub, a.id, 1.0, b.id, -1.0); }
    Var mul(Var a, Var b) {
        return push(val(a) * val(b), OpCode::Mul, a.id, val(b), b.id, val(a));
    }
    Var div(Var a, Var b) {
        const double bv = val(b);
        const double v = val(a) / bv;
        return push(v, OpCode::Div, a.id, 1.0 / bv, b.id, -v / bv);
    }
    Var neg(Var a) { return push(-val(a), OpCode::Neg, a.id, -1.0, -1, 0.0); }
    Var add_const(Var a, double c) { return push(val(a) + c, OpCode::AddConst, a.id, 1.0, -1, 0.0); }
    Var mul_const(Var a, double c) { return push(val(a) * c, OpCode::MulConst, a.id, c, -1, 0.0); }
    Var rsub_const(double c, Var a) {
        return push(c - val(a), OpCode::RsubConst, a.id, -1.0, -1, 0.0);
    }
    Var log(Var a) { return push(std::log(val(a)), OpCode::Log, a.id, 1.0 / val(a), -1, 0.0); }
    Var exp(Var a) {
        const double v = std::exp(val(a));
        return push(v, OpCode::Exp, a.id, v, -1, 0.0);
    }
    Var sigmoid(Var a) {
        const double v = 1.0 / (1.0 + std::exp(-val(a)));
        return push(v, OpCode::Sigmoid, a.id, v * (1.0 - v), -1, 0.0);
    }
    Var tanh(Var a) {
        const double v = std::tanh(val(a));
        return push(v, OpCode::Tanh, a.id, 1.0 - v * v, -1, 0.0);
    }
    Var clamp(Var a, double lo, double hi) {
        const double x = val(a);
        const bool clipped = x < lo || x > hi;
        const double v = clipped ? (x < lo ? lo : hi) : x;
        return push(v, OpCode::Clamp, a.id, clipped ? 0.0 : 1.0, -1, 0.0);
    }

    // Accumulates adjoints from explicit (node, weight) seeds. `adjoint` is
    // resized and zeroed internally.
    void backward_seeded(std::span<const std::pair<Var, double>> seeds,
                         std::vector<double>& adjoint) const;
    void backward(Var root, std::vector<double>& adjoint) const;

    // Gradient of `root` with respect to the given leaves.
    std::vector<double> grad(Var root, std::span<const Var> wrt) const;

private:
    Var push(double v, OpCode op, std::int32_t p0, double d0, std::int32_t p1, double d1) {
        if (!std::isfinite(v))
            throw NumericError(op_name(op), std::string("tape: non-finite value from primitive '") +
                                                op_name(op) + "'");
        nodes.push_back(Node{v, {d0, d1}, {p0, p1}, op});
        return Var{static_cast<std::int32_t>(nodes.size() - 1)};
    }
};

}  // namespace perfcrd::ad
