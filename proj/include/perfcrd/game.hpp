#pragma once
#include <cmath>
#include <cstdint>
#include <span>

#include "perfcrd/fraction.hpp"
#include "perfcrd/graph.hpp"

namespace perfcrd {

// Collective Risk Dilemma parameters. A group of size M succeeds when it has
// at least ceil(T*M) cooperators; on failure every member loses the
// endowment B with probability r (payoffs are expected values, the loss is
// never sampled). Cooperating costs c*B.
struct GameParams {
    double endowment = 1.0;      // B > 0
    double cost = 0.2;           // c in [0, 1]
    double risk = 0.4;           // r in [0, 1]
    Fraction threshold{1, 2};    // T in [0, 1], exact

    void validate() const;       // throws std::invalid_argument on bad ranges
    // Cooperation can be a best response only when c < r.
    bool rational_cooperation() const { return cost < risk; }
    int required_cooperators(int group_size) const {
        return static_cast<int>(ceil_mul(threshold, group_size));
    }
};

// One agent's view of its group for payoff evaluation.
struct GroupObservation {
    int group_size = 1;        // M_i
    int cooperator_count = 0;  // k_i, includes the focal agent
    int required = 0;          // ceil(T * M_i)
};

GroupObservation observe_group(int k, int M, const GameParams& p);

bool group_success(int k, int M, const Fraction& T);

double defector_payoff(int k, int M, const GameParams& p);
// Requires k >= 1: a cooperator counts itself.
double cooperator_payoff(int k, int M, const GameParams& p);

// One time-step of population welfare: B * sum_i (1[success_i]*r - a_i*c).
double social_welfare(std::span<const std::uint8_t> actions, const PopulationGraph& g,
                      const GameParams& p);

// Differentiable group-success surrogate: sigmoid(temp * (k_soft/M - T)).
double soft_success(double k_soft, int M, const Fraction& T, double temp);

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

}  // namespace perfcrd
