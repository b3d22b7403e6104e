#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "arith/structures.hpp"

namespace arith {

struct EnumerationBudget {
    Int r_max = 64;                     // cap on the largest r entry
    long long node_limit = 10'000'000;  // cap on search nodes
};

struct Enumeration {
    std::vector<ArithmeticalStructure> structures;  // sorted by d, lexicographic
    // True only when the engine provably produced all structures (star
    // enumerator); budgeted engines are complete up to r_max.
    bool full = false;
    EnumerationBudget budget;
};

// Node budget ran out; `partial` holds everything found up to that point.
struct BudgetExhausted : std::runtime_error {
    explicit BudgetExhausted(Enumeration p)
        : std::runtime_error("enumeration node limit exceeded"), partial(std::move(p)) {}
    Enumeration partial;
};

// Exhaustive search over r in [1, r_max]^V with gcd 1, accepting whenever
// every divisibility r_v | sum_u m_uv r_u holds. Complete for max r <= r_max.
// node_limit is split evenly over the first-vertex branches, which makes the
// output (partial output included) identical for every thread count.
Enumeration brute_force(const Multigraph& g, const EnumerationBudget& budget,
                        int threads = 1);

// Terminating and complete enumeration on a star: leaf values are the unit
// fraction decompositions of each integer center value, r is lcm-derived.
Enumeration enumerate_star(const Multigraph& g,
                           std::optional<Int> center_cap = std::nullopt);
// Same, on the standard m-leaf star.
Enumeration enumerate_star(int m, std::optional<Int> center_cap = std::nullopt);

// Depth-first search over subtree contributions c_v = r_v / r_parent with
// c_v = 1/(d_v - sum of children contributions); complete up to r_max.
Enumeration enumerate_tree(const Multigraph& g, const EnumerationBudget& budget);

enum class Engine { Auto, Brute, Star, Tree };

// Auto picks star > tree > brute force.
Enumeration enumerate_structures(const Multigraph& g, const EnumerationBudget& budget,
                                 Engine engine = Engine::Auto, int threads = 1);

struct CountResult {
    Int count;
    bool complete;  // true when a terminating enumerator was used
};

CountResult count_structures(const Multigraph& g, const EnumerationBudget& budget);

bool is_tree(const Multigraph& g);
// Center index of a star (tree with at most one internal vertex).
std::optional<int> star_center(const Multigraph& g);

}  // namespace arith
