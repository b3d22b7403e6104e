#include "arith/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "arith/errors.hpp"
#include "arith/families.hpp"

namespace arith {

namespace {

bool d_lex_less(const ArithmeticalStructure& a, const ArithmeticalStructure& b) {
    return lex_compare(a.d, b.d) < 0;
}

void canonical_sort(std::vector<ArithmeticalStructure>& v) {
    std::sort(v.begin(), v.end(), d_lex_less);
}

}  // namespace

bool is_tree(const Multigraph& g) {
    if (!is_connected(g)) return false;
    for (const auto& e : g.edge_list())
        if (e.multiplicity > 1) return false;
    return g.edge_count() == g.size() - 1;
}

std::optional<int> star_center(const Multigraph& g) {
    if (!is_tree(g)) return std::nullopt;
    int n = g.size();
    if (n < 2) return std::nullopt;
    if (n == 2) return 0;
    int center = -1;
    for (int i = 0; i < n; ++i) {
        if (g.degree(i) == 1) continue;
        if (center >= 0) return std::nullopt;  // two internal vertices
        center = i;
    }
    return center;
}

// ---------------------------------------------------------------------------
// Brute force

namespace {

struct BruteContext {
    const Multigraph* g;
    Int r_max;
    long long branch_node_limit;
    // Vertices whose whole neighborhood is assigned once index k is set.
    std::vector<std::vector<int>> checks_at;
};

// Divisibility test at vertex j once all its neighbors have values.
bool row_accepts(const BruteContext& ctx, const std::vector<Int>& r, int j) {
    Int total(0);
    for (int u : ctx.g->neighbors(j)) total += Int(ctx.g->multiplicity(u, j)) * r[u];
    if (total <= 0) return false;
    return total % r[j] == 0;
}

// A node is an accepted partial assignment; the value trials inside it are
// bounded by r_max.
void brute_branch(const BruteContext& ctx, std::vector<Int>& r, int depth,
                  long long& nodes, bool& exhausted,
                  std::vector<ArithmeticalStructure>& out) {
    int n = ctx.g->size();
    if (depth == n) {
        IntVector rv(n);
        for (int i = 0; i < n; ++i) rv(i) = r[i];
        if (vector_gcd(rv) != 1) return;
        if (auto d = d_from_r(*ctx.g, rv)) out.push_back({std::move(*d), std::move(rv)});
        return;
    }
    for (Int v(1); v <= ctx.r_max; ++v) {
        r[depth] = v;
        bool ok = true;
        for (int j : ctx.checks_at[depth])
            if (!row_accepts(ctx, r, j)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        if (++nodes > ctx.branch_node_limit) {
            exhausted = true;
            return;
        }
        brute_branch(ctx, r, depth + 1, nodes, exhausted, out);
        if (exhausted) return;
    }
}

}  // namespace

Enumeration brute_force(const Multigraph& g, const EnumerationBudget& budget, int threads) {
    if (!is_connected(g)) throw InvalidInput("enumeration requires a connected graph");
    if (budget.r_max < 1 || budget.node_limit < 1)
        throw InvalidInput("enumeration budget must be positive");
    if (budget.r_max > 1'000'000)
        throw InvalidInput("brute force r_max capped at 1000000; use the star or tree engine");

    int n = g.size();
    Enumeration result;
    result.budget = budget;
    if (n == 0) return result;

    BruteContext ctx;
    ctx.g = &g;
    ctx.r_max = budget.r_max;

    long long branches = budget.r_max.get_si();
    ctx.branch_node_limit = std::max(1LL, budget.node_limit / branches);
    ctx.checks_at.assign(n, {});
    for (int j = 0; j < n; ++j) {
        int last = j;
        for (int u : g.neighbors(j)) last = std::max(last, u);
        ctx.checks_at[last].push_back(j);
    }

    std::vector<std::vector<ArithmeticalStructure>> found(static_cast<size_t>(branches));
    std::vector<char> tripped(static_cast<size_t>(branches), 0);
    std::atomic<long long> next{0};

    auto worker = [&] {
        std::vector<Int> r(static_cast<size_t>(n));
        for (;;) {
            long long b = next.fetch_add(1);
            if (b >= branches) return;
            long long nodes = 1;
            bool exhausted = false;
            r[0] = Int(static_cast<long>(b) + 1);
            bool ok = true;
            for (int j : ctx.checks_at[0])
                if (!row_accepts(ctx, r, j)) {
                    ok = false;
                    break;
                }
            // A single vertex has no positive structure, so n == 1 adds nothing.
            if (ok && n > 1)
                brute_branch(ctx, r, 1, nodes, exhausted, found[static_cast<size_t>(b)]);
            tripped[static_cast<size_t>(b)] = exhausted ? 1 : 0;
        }
    };

    int pool = std::max(1, std::min<int>(threads, static_cast<int>(branches)));
    if (pool == 1) {
        worker();
    } else {
        std::vector<std::thread> ts;
        for (int i = 0; i < pool; ++i) ts.emplace_back(worker);
        for (auto& t : ts) t.join();
    }

    bool exhausted = false;
    for (long long b = 0; b < branches; ++b) {
        exhausted = exhausted || tripped[static_cast<size_t>(b)];
        for (auto& s : found[static_cast<size_t>(b)]) result.structures.push_back(std::move(s));
    }
    canonical_sort(result.structures);
    if (exhausted) throw BudgetExhausted(std::move(result));
    return result;
}

// ---------------------------------------------------------------------------
// Star enumerator

namespace {

// Nondecreasing a_1 <= ... <= a_k with sum of 1/a_i = rem; with k slots the
// next value lies in [max(prev, ceil(1/rem)), floor(k/rem)].
void star_multisets(int slots, const Rat& rem, const Int& min_value, std::vector<Int>& acc,
                    std::vector<std::vector<Int>>& out) {
    if (slots == 0) {
        if (rem.is_zero()) out.push_back(acc);
        return;
    }
    if (!rem.is_positive()) return;
    Int lo = rem.reciprocal().ceil();
    if (lo < min_value) lo = min_value;
    Int hi = (Rat(slots) / rem).floor();
    for (Int a = lo; a <= hi; ++a) {
        acc.push_back(a);
        star_multisets(slots - 1, rem - Rat(Int(1), a), a, acc, out);
        acc.pop_back();
    }
}

}  // namespace

Enumeration enumerate_star(const Multigraph& g, std::optional<Int> center_cap) {
    auto center = star_center(g);
    if (!center) throw InvalidInput("enumerate_star requires a star graph");
    int n = g.size();
    int m = n - 1;
    std::vector<int> leaves;
    for (int i = 0; i < n; ++i)
        if (i != *center) leaves.push_back(i);

    Int top(m);
    if (center_cap && *center_cap < top) top = *center_cap;

    Enumeration result;
    result.full = !center_cap || *center_cap >= Int(m);
    for (Int target(1); target <= top; ++target) {
        std::vector<std::vector<Int>> multisets;
        std::vector<Int> acc;
        star_multisets(m, Rat(target), Int(1), acc, multisets);
        for (auto values : multisets) {
            // Each distinct leaf labelling is its own structure.
            std::sort(values.begin(), values.end());
            do {
                Int rc(1);
                for (const Int& a : values) rc = lcm(rc, a);
                IntVector d(n), r(n);
                d(*center) = target;
                r(*center) = rc;
                for (int i = 0; i < m; ++i) {
                    d(leaves[static_cast<size_t>(i)]) = values[static_cast<size_t>(i)];
                    r(leaves[static_cast<size_t>(i)]) = rc / values[static_cast<size_t>(i)];
                }
                result.structures.push_back({std::move(d), std::move(r)});
            } while (std::next_permutation(values.begin(), values.end()));
        }
    }
    canonical_sort(result.structures);
    return result;
}

Enumeration enumerate_star(int m, std::optional<Int> center_cap) {
    if (m < 1) throw InvalidInput("a star needs at least one leaf");
    return enumerate_star(star_graph(m), std::move(center_cap));
}

// ---------------------------------------------------------------------------
// Tree enumerator

namespace {

struct TreeState {
    Rat c;                                  // r_v / r_parent
    std::vector<std::pair<int, Rat>> ratio;  // vertex -> r_u / r_v over the subtree
    std::vector<std::pair<int, Int>> dval;   // chosen d over the subtree (root's added later)
};

struct TreeSearch {
    const Multigraph* g;
    Int r_max;
    long long node_limit;
    long long nodes = 0;
    std::vector<std::vector<int>> children;
    std::vector<ArithmeticalStructure> emitted;

    void spend() {
        if (++nodes > node_limit) {
            Enumeration partial;
            partial.structures = emitted;
            canonical_sort(partial.structures);
            throw BudgetExhausted(std::move(partial));
        }
    }

    // Smallest integral realization of the ratios; empty when some entry
    // must already exceed r_max.
    bool fits(const std::vector<std::pair<int, Rat>>& ratio) const {
        Int scale(1);
        for (const auto& [u, q] : ratio) scale = lcm(scale, q.den());
        if (scale > r_max) return false;
        for (const auto& [u, q] : ratio)
            if (q.num() * (scale / q.den()) > r_max) return false;
        return true;
    }

    std::vector<TreeState> states(int v) {
        std::vector<TreeState> combos(1);
        combos[0].ratio.push_back({v, Rat(1)});
        for (int w : children[v]) {
            std::vector<TreeState> child_states = states(w);
            std::vector<TreeState> merged;
            for (const auto& partial : combos) {
                for (const auto& cs : child_states) {
                    spend();
                    TreeState next = partial;
                    next.c += cs.c;  // c doubles as the children-contribution sum
                    for (const auto& [u, q] : cs.ratio) next.ratio.push_back({u, q * cs.c});
                    for (const auto& dv : cs.dval) next.dval.push_back(dv);
                    if (fits(next.ratio)) merged.push_back(std::move(next));
                }
            }
            combos = std::move(merged);
        }
        // combos[i].c currently holds s = sum of children contributions.
        std::vector<TreeState> out;
        for (const auto& partial : combos) {
            const Rat& s = partial.c;
            Int p = s.num(), q = s.den();
            // c_v = 1/(d - s) = q / (d q - p); the parent's r is a multiple
            // of d q - p, which bounds d.
            for (Int d = s.floor() + 1; d * q - p <= r_max; ++d) {
                spend();
                TreeState cand;
                cand.c = Rat(q, d * q - p);
                cand.dval = partial.dval;
                cand.dval.push_back({v, d});
                cand.ratio.reserve(partial.ratio.size());
                for (const auto& [u, ratio_to_v] : partial.ratio)
                    cand.ratio.push_back({u, ratio_to_v});
                // Extend by the parent slot before the fit check.
                std::vector<std::pair<int, Rat>> with_parent;
                with_parent.reserve(cand.ratio.size() + 1);
                with_parent.push_back({-1, cand.c.reciprocal()});  // parent relative to v
                for (const auto& e : cand.ratio) with_parent.push_back(e);
                if (fits(with_parent)) out.push_back(std::move(cand));
            }
        }
        return out;
    }

    void run(int root) {
        std::vector<TreeState> combos(1);
        combos[0].ratio.push_back({root, Rat(1)});
        for (int w : children[root]) {
            std::vector<TreeState> child_states = states(w);
            std::vector<TreeState> merged;
            for (const auto& partial : combos) {
                for (const auto& cs : child_states) {
                    spend();
                    TreeState next = partial;
                    next.c += cs.c;
                    for (const auto& [u, q] : cs.ratio) next.ratio.push_back({u, q * cs.c});
                    for (const auto& dv : cs.dval) next.dval.push_back(dv);
                    if (fits(next.ratio)) merged.push_back(std::move(next));
                }
            }
            combos = std::move(merged);
        }
        int n = g->size();
        for (const auto& partial : combos) {
            const Rat& s = partial.c;
            if (!s.is_positive() || !s.is_integer()) continue;
            Int scale(1);
            for (const auto& [u, q] : partial.ratio) scale = lcm(scale, q.den());
            IntVector r(n), d(n);
            bool ok = true;
            for (const auto& [u, q] : partial.ratio) {
                r(u) = q.num() * (scale / q.den());
                if (r(u) > r_max) ok = false;
            }
            if (!ok) continue;
            for (const auto& [u, val] : partial.dval) d(u) = val;
            d(root) = s.num();
            if (vector_gcd(r) != 1) throw InternalError("tree search produced imprimitive r");
            emitted.push_back({std::move(d), std::move(r)});
        }
    }
};

}  // namespace

Enumeration enumerate_tree(const Multigraph& g, const EnumerationBudget& budget) {
    if (!is_tree(g)) throw InvalidInput("enumerate_tree requires a tree");
    if (budget.r_max < 1 || budget.node_limit < 1)
        throw InvalidInput("enumeration budget must be positive");

    Enumeration result;
    result.budget = budget;
    int n = g.size();
    if (n <= 1) return result;

    // Root at the internal vertex touching the most leaves.
    int root = 0, best = -1;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) < 2 && n > 2) continue;
        int leaves = 0;
        for (int u : g.neighbors(v))
            if (g.degree(u) == 1) ++leaves;
        if (leaves > best) {
            best = leaves;
            root = v;
        }
    }

    TreeSearch search;
    search.g = &g;
    search.r_max = budget.r_max;
    search.node_limit = budget.node_limit;
    search.children.assign(static_cast<size_t>(n), {});
    std::vector<int> order{root}, parent(static_cast<size_t>(n), -1);
    std::vector<bool> seen(static_cast<size_t>(n), false);
    seen[static_cast<size_t>(root)] = true;
    for (size_t head = 0; head < order.size(); ++head) {
        int v = order[head];
        for (int w : g.neighbors(v)) {
            if (seen[static_cast<size_t>(w)]) continue;
            seen[static_cast<size_t>(w)] = true;
            parent[static_cast<size_t>(w)] = v;
            search.children[static_cast<size_t>(v)].push_back(w);
            order.push_back(w);
        }
    }

    search.run(root);
    result.structures = std::move(search.emitted);
    canonical_sort(result.structures);
    return result;
}

// ---------------------------------------------------------------------------

Enumeration enumerate_structures(const Multigraph& g, const EnumerationBudget& budget,
                                 Engine engine, int threads) {
    switch (engine) {
        case Engine::Brute: return brute_force(g, budget, threads);
        case Engine::Star: return enumerate_star(g);
        case Engine::Tree: return enumerate_tree(g, budget);
        case Engine::Auto:
            if (star_center(g)) return enumerate_star(g);
            if (is_tree(g)) return enumerate_tree(g, budget);
            return brute_force(g, budget, threads);
    }
    throw InvalidInput("unknown enumeration engine");
}

CountResult count_structures(const Multigraph& g, const EnumerationBudget& budget) {
    Enumeration e = enumerate_structures(g, budget);
    return CountResult{Int(static_cast<long>(e.structures.size())), e.full};
}

}  // namespace arith
