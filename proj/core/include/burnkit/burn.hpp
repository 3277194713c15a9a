#ifndef BURNKIT_BURN_HPP
#define BURNKIT_BURN_HPP

#include <optional>
#include <string>
#include <vector>

#include "burnkit/graph.hpp"

namespace burnkit {

// Ordered source sequence (x_1, ..., x_k). Source x_i is lit in round i, so
// by round k its fire reaches everything within distance k-i: the sequence
// is a witness that the graph burns in k rounds iff the balls
// N_{k-1}(x_1), ..., N_0(x_k) cover the vertex set.
struct BurningSchedule {
  std::vector<int> sources;
  int rounds() const { return static_cast<int>(sources.size()); }
};

// true iff the schedule's balls cover every vertex;
// throws std::out_of_range on a bad source index
bool verify_schedule(const Graph& g, const BurningSchedule& s);

// Why burning_number - 1 is infeasible.
enum class LowerBoundProof {
  kTrivialOne,      // k = 1
  kCoverageBound,   // sum of the k-1 largest possible ball sizes < n
  kExhaustedSearch  // the k-1 decision search ran to exhaustion
};

std::string to_string(LowerBoundProof p);

struct ExactResult {
  int burning_number = 0;
  BurningSchedule witness;
  LowerBoundProof lower_bound_proof = LowerBoundProof::kTrivialOne;
};

struct ExactOutcome {
  // unset when every k <= budget was exhausted without a schedule
  // (so b > budget), never silently wrong
  std::optional<ExactResult> result;
  int budget_exhausted = 0;  // meaningful when !result

  bool solved() const { return result.has_value(); }
};

// Decision form: does some k-round schedule exist? A yes at k implies a yes
// at every larger k (prefix any vertex), which the searches below exploit.
bool burnable_within(const Graph& g, int k);

// Iterative deepening from a coverage lower bound; depth-first source
// assignment, largest radius first, candidates ordered by marginal new
// coverage (ties toward the lowest index), dominated candidates dropped.
// Requires a connected graph.
ExactOutcome burning_number_exact(const Graph& g,
                                  std::optional<int> budget = std::nullopt);

// Exhaustive oracle: simulates the round process literally over every source
// sequence, k ascending. Independent of the ball-cover solver path.
// Throws std::invalid_argument for n > 10.
int burning_number_bruteforce(const Graph& g);

struct WellBurnableResult {
  bool well_burnable = false;
  int ceil_sqrt_n = 0;
  ExactOutcome outcome;  // exact number + witness when well-burnable
};

// b(g) <= ceil(sqrt(n))? Runs the exact search with budget ceil(sqrt(n)).
WellBurnableResult is_well_burnable(const Graph& g);

// Minimum of burning_number_exact over all spanning trees, enumerated by
// contraction/deletion. Consistency oracle for the reduction to trees; not a
// production path. Throws std::runtime_error past tree_cap trees.
int spanning_tree_oracle(const Graph& g, long long tree_cap = 100000);

}  // namespace burnkit

#endif
