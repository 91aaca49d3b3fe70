#include "perfcrd/game.hpp"

#include <stdexcept>
#include <string>

namespace perfcrd {

void GameParams::validate() const {
    if (!(endowment > 0.0)) throw std::invalid_argument("game: endowment B must be > 0");
    if (cost < 0.0 || cost > 1.0) throw std::invalid_argument("game: cost c must be in [0,1]");
    if (risk < 0.0 || risk > 1.0) throw std::invalid_argument("game: risk r must be in [0,1]");
    if (threshold.num > threshold.den)
        throw std::invalid_argument("game: threshold T must be in [0,1]");
}

namespace {

void check_count(int k, int M) {
    if (M < 1) throw std::invalid_argument("game: group size must be >= 1");
    if (k < 0 || k > M)
        throw std::invalid_argument("game: cooperator count " + std::to_string(k) +
                                    " out of range for group of " + std::to_string(M));
}

}  // namespace

GroupObservation observe_group(int k, int M, const GameParams& p) {
    check_count(k, M);
    return {M, k, p.required_cooperators(M)};
}

bool group_success(int k, int M, const Fraction& T) {
    check_count(k, M);
    return k >= ceil_mul(T, M);
}

double defector_payoff(int k, int M, const GameParams& p) {
    check_count(k, M);
    return group_success(k, M, p.threshold) ? p.endowment : p.endowment * (1.0 - p.risk);
}

double cooperator_payoff(int k, int M, const GameParams& p) {
    if (k < 1) throw std::invalid_argument("game: a cooperator's group has k >= 1");
    return defector_payoff(k, M, p) - p.cost * p.endowment;
}

double social_welfare(std::span<const std::uint8_t> actions, const PopulationGraph& g,
                      const GameParams& p) {
    if (static_cast<int>(actions.size()) != g.node_count())
        throw std::invalid_argument("social_welfare: actions length != node count");
    double acc = 0.0;
    for (int i = 0; i < g.node_count(); ++i) {
        int k = actions[i] ? 1 : 0;
        for (int j : g.neighbors(i)) k += actions[j] ? 1 : 0;
        if (group_success(k, g.group_size(i), p.threshold)) acc += p.risk;
        if (actions[i]) acc -= p.cost;
    }
    return p.endowment * acc;
}

double soft_success(double k_soft, int M, const Fraction& T, double temp) {
    if (M < 1) throw std::invalid_argument("soft_success: group size must be >= 1");
    if (!(temp > 0.0)) throw std::invalid_argument("soft_success: temp must be > 0");
    return sigmoid(temp * (k_soft / static_cast<double>(M) - T.value()));
}

}  // namespace perfcrd
