#include "perfcrd/predictor.hpp"

#include <charconv>
#include <cmath>

#include <json.hpp>

#include "perfcrd/errors.hpp"
#include "perfcrd/rng.hpp"

namespace perfcrd {

Architecture architecture_from_string(const std::string& s) {
    if (s == "static-binary") return Architecture::StaticBinary;
    if (s == "mlp") return Architecture::Mlp;
    if (s == "gnn") return Architecture::Gnn;
    if (s == "gnn+mlp") return Architecture::GnnMlp;
    if (s == "gnn+linear") return Architecture::GnnLinear;
    throw ConfigError("unknown architecture '" + s + "'");
}

std::string architecture_to_string(Architecture a) {
    switch (a) {
        case Architecture::StaticBinary: return "static-binary";
        case Architecture::Mlp: return "mlp";
        case Architecture::Gnn: return "gnn";
        case Architecture::GnnMlp: return "gnn+mlp";
        case Architecture::GnnLinear: return "gnn+linear";
    }
    return "?";
}

std::vector<ParamSegment> param_layout(const ModelShape& s) {
    if (s.nodes < 1) throw std::invalid_argument("predictor: shape has no nodes");
    const long n = s.nodes;
    std::vector<ParamSegment> segs;
    auto matrix = [&](long in, long out) { segs.push_back({in * out, static_cast<int>(in), false}); };
    auto bias = [&](long count) { segs.push_back({count, 0, true}); };
    switch (s.arch) {
        case Architecture::StaticBinary:
            bias(n);
            break;
        case Architecture::Mlp:
            matrix(3 * n, s.mlp_hidden);
            bias(s.mlp_hidden);
            matrix(s.mlp_hidden, n);
            bias(n);
            break;
        case Architecture::Gnn:
        case Architecture::GnnMlp:
        case Architecture::GnnLinear: {
            int in = 3;
            for (int l = 0; l < s.gnn_layers; ++l) {
                matrix(in, s.gnn_hidden);  // self weights
                matrix(in, s.gnn_hidden);  // neighbor weights
                bias(s.gnn_hidden);
                in = s.gnn_hidden;
            }
            if (s.arch == Architecture::Gnn) {
                matrix(s.gnn_hidden, 1);
                bias(1);
            } else if (s.arch == Architecture::GnnLinear) {
                matrix(s.gnn_hidden * n, n);
                bias(n);
            } else {
                matrix(s.gnn_hidden * n, s.mlp_hidden);
                bias(s.mlp_hidden);
                matrix(s.mlp_hidden, n);
                bias(n);
            }
            break;
        }
    }
    return segs;
}

long count_params(const ModelShape& s) {
    long total = 0;
    for (const auto& seg : param_layout(s)) total += seg.count;
    return total;
}

long trainable_params(const ModelShape& s) {
    return s.arch == Architecture::StaticBinary ? 0 : count_params(s);
}

void init_params(PredictorModel& model, std::uint64_t seed) {
    model.params.assign(count_params(model.shape), 0.0);
    if (model.shape.arch == Architecture::StaticBinary) return;
    Rng rng(Rng::derive(seed, 0x70726564));  // independent stream per model
    long off = 0;
    for (const auto& seg : param_layout(model.shape)) {
        if (!seg.bias) {
            const double scale = 1.0 / std::sqrt(static_cast<double>(seg.fan_in));
            for (long k = 0; k < seg.count; ++k) model.params[off + k] = scale * rng.normal();
        }
        off += seg.count;
    }
}

PredictorModel make_predictor(const ModelShape& shape, const PopulationGraph& g,
                              std::uint64_t init_seed) {
    if (shape.nodes != g.node_count())
        throw std::invalid_argument("predictor: shape node count != graph node count");
    PredictorModel m{shape, g, {}};
    init_params(m, init_seed);
    return m;
}

PredictorModel make_static_binary(const PopulationGraph& g,
                                  const std::vector<std::uint8_t>& bits) {
    if (static_cast<int>(bits.size()) != g.node_count())
        throw std::invalid_argument("predictor: bit vector length != node count");
    ModelShape shape;
    shape.arch = Architecture::StaticBinary;
    shape.nodes = g.node_count();
    PredictorModel m{shape, g, {}};
    m.params.reserve(bits.size());
    for (auto b : bits) m.params.push_back(b ? 1.0 : 0.0);
    return m;
}

ActionEmbedding initial_embedding(int nodes) {
    ActionEmbedding e;
    e.rows.assign(nodes, {0.0, 0.0, 1.0});
    return e;
}

ActionEmbedding embedding_from_actions(std::span<const double> actions) {
    ActionEmbedding e;
    e.rows.reserve(actions.size());
    for (double a : actions) e.rows.push_back({1.0 - a, a, 0.0});
    return e;
}

std::vector<double> predictor_forward(const PredictorModel& model, const ActionEmbedding& input) {
    DoubleOps ops;
    return predictor_forward_t(ops, model.shape, model.graph,
                               std::span<const double>(model.params), input.rows);
}

namespace {

std::string double_to_hex(double v) {
    char buf[48];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::hex);
    return std::string(buf, res.ptr);
}

double hex_to_double(const std::string& s) {
    double v = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v, std::chars_format::hex);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw ConfigError("checkpoint: bad hex-float '" + s + "'");
    return v;
}

}  // namespace

std::string save_checkpoint(const PredictorModel& model) {
    nlohmann::json j;
    j["architecture"] = architecture_to_string(model.shape.arch);
    j["shape"] = {{"nodes", model.shape.nodes},
                  {"mlp_hidden", model.shape.mlp_hidden},
                  {"gnn_layers", model.shape.gnn_layers},
                  {"gnn_hidden", model.shape.gnn_hidden}};
    j["params_format"] = "hexfloat";
    nlohmann::json params = nlohmann::json::array();
    for (double v : model.params) params.push_back(double_to_hex(v));
    j["params"] = std::move(params);
    return j.dump(2);
}

PredictorModel load_checkpoint(const std::string& json_text, const PopulationGraph& g) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("checkpoint: ") + e.what());
    }
    try {
        ModelShape shape;
        shape.arch = architecture_from_string(j.at("architecture").get<std::string>());
        const auto& js = j.at("shape");
        shape.nodes = js.at("nodes").get<int>();
        shape.mlp_hidden = js.value("mlp_hidden", 64);
        shape.gnn_layers = js.value("gnn_layers", 2);
        shape.gnn_hidden = js.value("gnn_hidden", 16);
        if (shape.nodes != g.node_count())
            throw ConfigError("checkpoint: node count does not match graph");
        PredictorModel m{shape, g, {}};
        for (const auto& p : j.at("params")) m.params.push_back(hex_to_double(p.get<std::string>()));
        if (static_cast<long>(m.params.size()) != count_params(shape))
            throw ConfigError("checkpoint: parameter count does not match shape");
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("checkpoint: ") + e.what());
    }
}

}  // namespace perfcrd
