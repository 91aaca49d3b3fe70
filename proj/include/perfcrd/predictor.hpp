#pragma once
#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "perfcrd/graph.hpp"
#include "perfcrd/numeric_ops.hpp"

namespace perfcrd {

enum class Architecture { StaticBinary, Mlp, Gnn, GnnMlp, GnnLinear };

Architecture architecture_from_string(const std::string& s);
std::string architecture_to_string(Architecture a);

struct ModelShape {
    Architecture arch = Architecture::Mlp;
    int nodes = 0;
    int mlp_hidden = 64;
    int gnn_layers = 2;
    int gnn_hidden = 16;

    bool operator==(const ModelShape&) const = default;
};

// One contiguous run of parameters: a weight matrix (fan_in set) or a bias
// block. Layout order is shared by count/init/forward.
struct ParamSegment {
    long count = 0;
    int fan_in = 0;
    bool bias = false;
};

std::vector<ParamSegment> param_layout(const ModelShape& shape);
long count_params(const ModelShape& shape);
long trainable_params(const ModelShape& shape);  // 0 for static-binary

struct PredictorModel {
    ModelShape shape;
    PopulationGraph graph;
    std::vector<double> params;
};

// Fresh model with 1/sqrt(fan_in)-scaled normal weights and zero biases,
// deterministic per seed.
PredictorModel make_predictor(const ModelShape& shape, const PopulationGraph& g,
                              std::uint64_t init_seed);
void init_params(PredictorModel& model, std::uint64_t seed);

// Constant predictor that always announces the given binary vector.
PredictorModel make_static_binary(const PopulationGraph& g, const std::vector<std::uint8_t>& bits);

// Per-node input: one-hot over (defect, cooperate, initial-token); soft mode
// uses (1-a, a, 0). Channels always sum to 1.
struct ActionEmbedding {
    std::vector<std::array<double, 3>> rows;
};

ActionEmbedding initial_embedding(int nodes);
ActionEmbedding embedding_from_actions(std::span<const double> actions);

// Forward pass over any numeric backend. `params` length must match
// count_params(shape); embedding row count must match the bound graph.
template <class Ops>
std::vector<typename Ops::Value> predictor_forward_t(
    Ops& ops, const ModelShape& shape, const PopulationGraph& g,
    std::span<const typename Ops::Value> params,
    std::span<const std::array<typename Ops::Value, 3>> embedding);

std::vector<double> predictor_forward(const PredictorModel& model, const ActionEmbedding& input);

// JSON checkpoint with hex-float parameter encoding (bit-exact round trip).
std::string save_checkpoint(const PredictorModel& model);
PredictorModel load_checkpoint(const std::string& json_text, const PopulationGraph& g);

// --- template implementation -------------------------------------------------

namespace detail {

// y = W^T x + b, reading W[in][out] then b[out] at params[off...].
template <class Ops>
std::vector<typename Ops::Value> affine(Ops& ops, std::span<const typename Ops::Value> params,
                                        long& off, std::span<const typename Ops::Value> x,
                                        int in, int out) {
    using V = typename Ops::Value;
    std::vector<V> y(out);
    const long bias_base = off + static_cast<long>(in) * out;
    for (int o = 0; o < out; ++o) {
        V acc = params[bias_base + o];
        for (int idx = 0; idx < in; ++idx)
            acc = ops.add(acc, ops.mul(x[idx], params[off + static_cast<long>(idx) * out + o]));
        y[o] = acc;
    }
    off = bias_base + out;
    return y;
}

template <class Ops>
std::vector<std::vector<typename Ops::Value>> gnn_embed(
    Ops& ops, const ModelShape& shape, const PopulationGraph& g,
    std::span<const typename Ops::Value> params, long& off,
    std::span<const std::array<typename Ops::Value, 3>> embedding) {
    using V = typename Ops::Value;
    const int n = g.node_count();
    std::vector<std::vector<V>> h(n);
    for (int i = 0; i < n; ++i) h[i] = {embedding[i][0], embedding[i][1], embedding[i][2]};
    int in_dim = 3;
    for (int layer = 0; layer < shape.gnn_layers; ++layer) {
        const int out_dim = shape.gnn_hidden;
        const long w_self = off;
        const long w_nbr = off + static_cast<long>(in_dim) * out_dim;
        const long bias = w_nbr + static_cast<long>(in_dim) * out_dim;
        std::vector<std::vector<V>> next(n);
        for (int i = 0; i < n; ++i) {
            const auto& nb = g.neighbors(i);
            std::vector<V> mean;
            if (!nb.empty()) {
                mean = h[nb[0]];
                for (std::size_t k = 1; k < nb.size(); ++k)
                    for (int d = 0; d < in_dim; ++d) mean[d] = ops.add(mean[d], h[nb[k]][d]);
                const double inv = 1.0 / static_cast<double>(nb.size());
                for (int d = 0; d < in_dim; ++d) mean[d] = ops.mul_const(mean[d], inv);
            }
            next[i].resize(out_dim);
            for (int o = 0; o < out_dim; ++o) {
                V acc = params[bias + o];
                for (int d = 0; d < in_dim; ++d) {
                    acc = ops.add(acc,
                                  ops.mul(h[i][d], params[w_self + static_cast<long>(d) * out_dim + o]));
                    if (!mean.empty())
                        acc = ops.add(acc,
                                      ops.mul(mean[d], params[w_nbr + static_cast<long>(d) * out_dim + o]));
                }
                next[i][o] = ops.tanh(acc);
            }
        }
        h = std::move(next);
        off = bias + out_dim;
        in_dim = out_dim;
    }
    return h;
}

}  // namespace detail

template <class Ops>
std::vector<typename Ops::Value> predictor_forward_t(
    Ops& ops, const ModelShape& shape, const PopulationGraph& g,
    std::span<const typename Ops::Value> params,
    std::span<const std::array<typename Ops::Value, 3>> embedding) {
    using V = typename Ops::Value;
    const int n = g.node_count();
    if (shape.nodes != n) throw std::invalid_argument("predictor: shape bound to different graph");
    if (static_cast<int>(embedding.size()) != n)
        throw std::invalid_argument("predictor: embedding size != node count");
    if (static_cast<long>(params.size()) != count_params(shape))
        throw std::invalid_argument("predictor: parameter count mismatch");

    if (shape.arch == Architecture::StaticBinary)
        return std::vector<V>(params.begin(), params.end());

    long off = 0;
    if (shape.arch == Architecture::Mlp) {
        std::vector<V> x;
        x.reserve(3 * n);
        for (int i = 0; i < n; ++i)
            for (int c = 0; c < 3; ++c) x.push_back(embedding[i][c]);
        auto hidden = detail::affine(ops, params, off, x, 3 * n, shape.mlp_hidden);
        for (auto& v : hidden) v = ops.tanh(v);
        auto out = detail::affine(ops, params, off, hidden, shape.mlp_hidden, n);
        for (auto& v : out) v = ops.sigmoid(v);
        return out;
    }

    auto h = detail::gnn_embed(ops, shape, g, params, off, embedding);
    const int hd = shape.gnn_hidden;
    if (shape.arch == Architecture::Gnn) {
        // Shared per-node head keeps the model permutation-equivariant.
        const long w = off;
        const long b = off + hd;
        std::vector<V> out(n);
        for (int i = 0; i < n; ++i) {
            V acc = params[b];
            for (int d = 0; d < hd; ++d) acc = ops.add(acc, ops.mul(h[i][d], params[w + d]));
            out[i] = ops.sigmoid(acc);
        }
        return out;
    }
    std::vector<V> z;
    z.reserve(static_cast<std::size_t>(n) * hd);
    for (int i = 0; i < n; ++i)
        for (int d = 0; d < hd; ++d) z.push_back(h[i][d]);
    if (shape.arch == Architecture::GnnLinear) {
        auto out = detail::affine(ops, params, off, z, n * hd, n);
        for (auto& v : out) v = ops.sigmoid(v);
        return out;
    }
    // GnnMlp
    auto hidden = detail::affine(ops, params, off, z, n * hd, shape.mlp_hidden);
    for (auto& v : hidden) v = ops.tanh(v);
    auto out = detail::affine(ops, params, off, hidden, shape.mlp_hidden, n);
    for (auto& v : out) v = ops.sigmoid(v);
    return out;
}

}  // namespace perfcrd
