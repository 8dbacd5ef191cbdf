// Minimal end-to-end example: sample snapshots from a hidden matching
// system, learn a consistent hypothesis, and measure its exact error.

#include <cstdio>

#include "syds/evaluation.hpp"
#include "syds/io.hpp"
#include "syds/learners.hpp"

int main() {
    using namespace syds;

    ThresholdSystem hidden(Graph::undirected(6, {{0, 3}, {1, 5}, {2, 4}}), {1, 2, 3, 2, 0, 1});
    auto dist = ConfigDistribution::uniform(6);
    auto obs = sample_training_set(hidden, dist, 40, 2024);

    auto outcome = learn_matching(6, obs);
    if (!outcome.learned()) {
        std::printf("refused: %s\n", to_string(outcome.refusal->reason));
        return 1;
    }
    std::printf("learned system:\n%s", to_text(*outcome.system).c_str());
    std::printf("consistent with all %d observations: %s\n", obs.size(),
                is_consistent(*outcome.system, obs) ? "yes" : "no");
    std::printf("true error vs hidden system: %.4f\n", true_error_exact(*outcome.system, hidden, dist));
    return 0;
}
