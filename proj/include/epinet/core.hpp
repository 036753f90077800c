#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "epinet/rng.hpp"

namespace epinet {

enum class Arm : std::uint8_t { A, B };

/// Which theory a study result leans toward. Arm-A studies and exact ties
/// (successes == trials/2) lean toward neither.
enum class Leaning : std::uint8_t { A, B, Neutral };

/// Gap between the success rates of the two arms. Arm A pays off with
/// probability 0.5; arm B with 0.5 + epsilon (truth) or 0.5 - epsilon (the
/// rival hypothesis).
class EffectSize {
  public:
    explicit EffectSize(double epsilon);

    double epsilon() const { return epsilon_; }
    double p_good() const { return 0.5 + epsilon_; }
    double p_bad() const { return 0.5 - epsilon_; }

    /// ln((0.5+eps)/(0.5-eps)): log-odds contribution of one net success.
    double log_step() const;

  private:
    double epsilon_;
};

/// Probability that theory B is correct, stored as log-odds so that long
/// update chains cannot underflow near 0 or 1. Exact 0 and 1 map to -inf and
/// +inf and are absorbing under updates.
class Credence {
  public:
    Credence() : log_odds_(0.0) {}

    static Credence from_probability(double p);
    static Credence from_log_odds(double lo);

    double probability() const;
    double log_odds() const { return log_odds_; }

    Credence shifted(double delta_log_odds) const;

    bool operator==(const Credence&) const = default;

  private:
    double log_odds_;
};

/// One experiment: `trials` pulls of an arm, `successes` of which paid off.
struct StudyResult {
    Arm arm = Arm::B;
    int trials = 0;
    int successes = 0;

    bool well_formed() const {
        return trials >= 1 && successes >= 0 && successes <= trials;
    }
};

/// P(data | p_B = 0.5+eps) / P(data | p_B = 0.5-eps). Binomial coefficients
/// cancel, leaving ((0.5+eps)/(0.5-eps))^(2s-n). Arm-A results carry no
/// information about the hypothesis: their ratio is exactly 1.
double likelihood_ratio(const StudyResult& result, EffectSize effect);

/// ln of the above; 0 for arm-A results and exact ties.
double log_likelihood_ratio(const StudyResult& result, EffectSize effect);

/// Bayes update on a batch of results. Order-independent; a prior of exactly
/// 0 or 1 is absorbing.
Credence update_credence(Credence prior, std::span<const StudyResult> results,
                         EffectSize effect);

/// Binomial draw from the chosen arm. Arm B pays with p_good (truth is
/// fixed); arm A with 0.5. Throws if trials < 1.
StudyResult draw_study(Arm arm, int trials, EffectSize effect, Rng& rng);

/// A iff successes < trials/2, B iff successes > trials/2, Neutral on the
/// exact tie (even trials only) and for arm-A results.
Leaning favors(const StudyResult& result);

enum class NetworkKind : std::uint8_t { cycle, complete };

/// Scientist communication graph: ring or complete. Ids run 0..K-1.
class NetworkTopology {
  public:
    /// Cycle requires K >= 3. Complete requires K >= 2 (a two-scientist
    /// complete network is a single edge; a two-node cycle is not a ring).
    static NetworkTopology build(NetworkKind kind, int num_scientists);

    NetworkKind kind() const { return kind_; }
    int num_scientists() const { return num_scientists_; }
    const std::vector<int>& neighbors_of(int id) const {
        return neighbors_[static_cast<std::size_t>(id)];
    }

  private:
    NetworkTopology(NetworkKind kind, int num_scientists,
                    std::vector<std::vector<int>> neighbors)
        : kind_(kind),
          num_scientists_(num_scientists),
          neighbors_(std::move(neighbors)) {}

    NetworkKind kind_;
    int num_scientists_;
    std::vector<std::vector<int>> neighbors_;
};

}  // namespace epinet
