#include "perfcrd/agents.hpp"

#include <cmath>

namespace perfcrd {

std::vector<AgentState> make_agent_states(const PopulationGraph& g, double tau0, double alpha) {
    if (tau0 < 0.0 || tau0 > 1.0) throw std::invalid_argument("agents: tau0 must be in [0,1]");
    if (alpha < 0.0 || alpha > 1.0) throw std::invalid_argument("agents: alpha must be in [0,1]");
    std::vector<AgentState> out(g.node_count());
    for (int i = 0; i < g.node_count(); ++i) {
        out[i].trust = tau0;
        out[i].alpha.assign(g.neighbors(i).size(), alpha);
    }
    return out;
}

double poisson_binomial_pmf(std::span<const double> probs, int m) {
    for (double p : probs)
        if (p < 0.0 || p > 1.0)
            throw std::invalid_argument("poisson_binomial: probabilities must be in [0,1]");
    DoubleOps ops;
    return poisson_binomial_pmf_t(ops, probs, m);
}

double g_threshold(std::span<const double> probs, int M, const Fraction& T) {
    DoubleOps ops;
    return g_threshold_t(ops, probs, M, T);
}

namespace {

double pivotal_mix(int i, const Prediction& pred, const AgentState& state,
                   const GameParams& p, const PopulationGraph& g) {
    const auto& nb = g.neighbors(i);
    if (static_cast<int>(pred.size()) != g.node_count())
        throw std::invalid_argument("agents: prediction length != node count");
    if (state.alpha.size() != nb.size())
        throw std::invalid_argument("agents: alpha length != neighbor count");
    std::vector<double> theta(nb.size());
    for (std::size_t k = 0; k < nb.size(); ++k) theta[k] = pred[nb[k]];
    const int M = g.group_size(i);
    const double g_pred = g_threshold(theta, M, p.threshold);
    const double g_int = g_threshold(state.alpha, M, p.threshold);
    return state.trust * g_pred + (1.0 - state.trust) * g_int;
}

}  // namespace

double decision_margin(int i, const Prediction& pred, const AgentState& state,
                       const GameParams& p, const PopulationGraph& g) {
    return p.risk * pivotal_mix(i, pred, state, p, g) - p.cost;
}

int best_response(int i, const Prediction& pred, const AgentState& state, const GameParams& p,
                  const PopulationGraph& g) {
    return decision_margin(i, pred, state, p, g) > 0.0 ? 1 : 0;
}

bool is_indifferent(int i, const Prediction& pred, const AgentState& state, const GameParams& p,
                    const PopulationGraph& g) {
    return decision_margin(i, pred, state, p, g) == 0.0;
}

double soft_action(int i, const Prediction& pred, const AgentState& state, const GameParams& p,
                   const PopulationGraph& g, double temp) {
    if (!(temp > 0.0)) throw std::invalid_argument("soft_action: temp must be > 0");
    return sigmoid(temp * p.endowment * decision_margin(i, pred, state, p, g));
}

double trust_update(const AgentState& state, const Prediction& pred,
                    std::span<const double> realized, int i, const PopulationGraph& g) {
    const auto& nb = g.neighbors(i);
    if (realized.size() != static_cast<std::size_t>(g.node_count()))
        throw std::invalid_argument("trust_update: realized length != node count");
    if (state.alpha.size() != nb.size())
        throw std::invalid_argument("trust_update: alpha length != neighbor count");
    double lik_pred = 1.0;
    double lik_int = 1.0;
    for (std::size_t k = 0; k < nb.size(); ++k) {
        const int j = nb[k];
        const double a = realized[j];
        const double theta = std::clamp(pred[j], kProbClamp, 1.0 - kProbClamp);
        const double alpha = std::clamp(state.alpha[k], kProbClamp, 1.0 - kProbClamp);
        if (a == 0.0) {
            lik_pred *= 1.0 - theta;
            lik_int *= 1.0 - alpha;
        } else if (a == 1.0) {
            lik_pred *= theta;
            lik_int *= alpha;
        } else {
            lik_pred *= std::exp(a * std::log(theta) + (1.0 - a) * std::log(1.0 - theta));
            lik_int *= std::exp(a * std::log(alpha) + (1.0 - a) * std::log(1.0 - alpha));
        }
    }
    const double tau = state.trust;
    const double denom = tau * lik_pred + (1.0 - tau) * lik_int;
    if (denom == 0.0) return tau;  // unreachable after clamping; keep the prior
    return tau * lik_pred / denom;
}

}  // namespace perfcrd
