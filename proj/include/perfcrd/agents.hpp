#pragma once
#include <span>
#include <stdexcept>
#include <vector>

#include "perfcrd/fraction.hpp"
#include "perfcrd/game.hpp"
#include "perfcrd/graph.hpp"
#include "perfcrd/numeric_ops.hpp"

namespace perfcrd {

// Probabilities below this distance from {0,1} are clamped before entering
// likelihood exponents, so binary predictions never produce 0/0 posteriors.
inline constexpr double kProbClamp = 1e-6;

// Per-agent behavioral state. trust is the posterior probability that the
// external predictor explains the neighbors' behavior better than the fixed
// internal expectations; alpha is aligned with the graph's neighbor order
// and never changes during a rollout.
struct AgentState {
    double trust = 0.5;
    std::vector<double> alpha;
};

// Per-node cooperation probabilities announced by the predictor.
using Prediction = std::vector<double>;

std::vector<AgentState> make_agent_states(const PopulationGraph& g, double tau0, double alpha);

// P(exactly m successes) of independent Bernoulli trials, by the dynamic
// programming convolution. Truncates the table at m since higher counts
// never feed back into lower ones.
template <class Ops>
typename Ops::Value poisson_binomial_pmf_t(Ops& ops,
                                           std::span<const typename Ops::Value> probs, int m) {
    using V = typename Ops::Value;
    const int n = static_cast<int>(probs.size());
    if (m < 0 || m > n) throw std::invalid_argument("poisson_binomial: m out of range");
    std::vector<V> dp(static_cast<std::size_t>(m) + 1);
    dp[0] = ops.one();
    for (int j = 0; j < n; ++j) {
        const V p = probs[j];
        const V q = ops.rsub_const(1.0, p);
        const int hi = std::min(j + 1, m);
        for (int k = hi; k >= 1; --k) {
            V keep = ops.mul(dp[k - 1], p);
            if (k <= j) keep = ops.add(ops.mul(dp[k], q), keep);
            dp[k] = keep;
        }
        dp[0] = ops.mul(dp[0], q);
    }
    return dp[m];
}

double poisson_binomial_pmf(std::span<const double> probs, int m);

// Probability that exactly ceil(T*M)-1 of the M-1 neighbors cooperate: the
// pivotal event that makes cooperation rational. Zero when that count is
// infeasible (T=0, or required above group size).
template <class Ops>
typename Ops::Value g_threshold_t(Ops& ops, std::span<const typename Ops::Value> probs, int M,
                                  const Fraction& T) {
    if (static_cast<int>(probs.size()) != M - 1)
        throw std::invalid_argument("g_threshold: need M-1 neighbor probabilities");
    const std::int64_t pivot = ceil_mul(T, M) - 1;
    if (pivot < 0 || pivot > M - 1) return ops.zero();
    return poisson_binomial_pmf_t(ops, probs, static_cast<int>(pivot));
}

double g_threshold(std::span<const double> probs, int M, const Fraction& T);

// r*(tau*g(theta_N) + (1-tau)*g(alpha_N)) - c, in units of B=1. Cooperation
// is the strict best response iff this is > 0; exact zero is indifference.
double decision_margin(int i, const Prediction& pred, const AgentState& state,
                       const GameParams& p, const PopulationGraph& g);

// Hard best response; ties resolve to defect.
int best_response(int i, const Prediction& pred, const AgentState& state, const GameParams& p,
                  const PopulationGraph& g);

bool is_indifferent(int i, const Prediction& pred, const AgentState& state, const GameParams& p,
                    const PopulationGraph& g);

// sigmoid(temp * (rB*mix - cB)): differentiable stand-in for best_response.
double soft_action(int i, const Prediction& pred, const AgentState& state, const GameParams& p,
                   const PopulationGraph& g, double temp);

// One Bayesian trust step for agent i after observing its neighbors' realized
// actions. Actions may be fractional (soft rollouts); probabilities are
// clamped before exponentiation. tau=0 and tau=1 are absorbing.
double trust_update(const AgentState& state, const Prediction& pred,
                    std::span<const double> realized, int i, const PopulationGraph& g);

}  // namespace perfcrd
