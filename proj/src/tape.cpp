#include "perfcrd/tape.hpp"

namespace perfcrd::ad {

const char* op_name(OpCode op) {
    switch (op) {
        case OpCode::Leaf: return "leaf";
        case OpCode::Add: return "add";
        case OpCode::Sub: return "sub";
        case OpCode::Mul: return "mul";
        case OpCode::Div: return "div";
        case OpCode::Neg: return "neg";
        case OpCode::AddConst: return "add_const";
        case OpCode::MulConst: return "mul_const";
        case OpCode::RsubConst: return "rsub_const";
        case OpCode::Log: return "log";
        case OpCode::Exp: return "exp";
        case OpCode::Sigmoid: return "sigmoid";
        case OpCode::Tanh: return "tanh";
        case OpCode::Clamp: return "clamp";
    }
    return "unknown";
}

void Tape::backward_seeded(std::span<const std::pair<Var, double>> seeds,
                           std::vector<double>& adjoint) const {
    adjoint.assign(nodes.size(), 0.0);
    std::int32_t top = -1;
    for (const auto& [v, w] : seeds) {
        adjoint[v.id] += w;
        if (v.id > top) top = v.id;
    }
    for (std::int32_t k = top; k >= 0; --k) {
        const double a = adjoint[k];
        if (a == 0.0) continue;
        const Node& n = nodes[k];
        if (n.parent[0] >= 0) adjoint[n.parent[0]] += a * n.partial[0];
        if (n.parent[1] >= 0) adjoint[n.parent[1]] += a * n.partial[1];
    }
}

void Tape::backward(Var root, std::vector<double>& adjoint) const {
    const std::pair<Var, double> seed{root, 1.0};
    backward_seeded({&seed, 1}, adjoint);
}

std::vector<double> Tape::grad(Var root, std::span<const Var> wrt) const {
    std::vector<double> adjoint;
    backward(root, adjoint);
    std::vector<double> out(wrt.size());
    for (std::size_t k = 0; k < wrt.size(); ++k) out[k] = adjoint[wrt[k].id];
    return out;
}

}  // namespace perfcrd::ad
