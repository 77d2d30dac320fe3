"""
Constraints: penalties and gates
================================

Constraints enter the cost two ways. A penalty adds eps * C_k to the
score, nudging the search toward subsets a fuzzy predicate likes. A
gate is harsher: predicates are min-composed into a membership degree,
and any subset below the gate threshold has no score at all.
"""
from critset import (
    CostSpec,
    InfeasibleSearchError,
    SubsetEvaluator,
    exhaustive_search,
    fuzzy_small_subset,
    same_component,
)
from critset.datasets import DEMO_SHORTLIST_GATED, demo_graph

g = demo_graph()

# The constraint registry names predicates by what they check; a
# CostSpec carries the string id so it stays serializable.
#   same-component          crisp: all seeds in one weak component
#   cardinality:<lo>:<hi>   crisp: lo <= n <= hi
#   require:<id,...>        crisp: all listed nodes present
#   forbid:<id,...>         crisp: none of the listed nodes present
#   fuzzy-small:<scale>     graded: 1 at n=0 falling to 0 at n=scale
print("same_component({1,4}) =", same_component(g, frozenset({"1", "4"})))
print("same_component({1,6}) =", same_component(g, frozenset({"1", "6"})))
small = fuzzy_small_subset(6)
print("fuzzy_small_subset(6) at n=2:", small.evaluate(g, frozenset({"1", "6"})))
print()

# Gate the basic cost on same-component membership. Mixed-component
# subsets from the shortlist score as undefined; single-component ones
# keep their basic cost.
gated = SubsetEvaluator(g, CostSpec(gates=(("same-component", 1.0),)))
print(f"{'subset':<9} {'gate':>4}  score")
for seeds in DEMO_SHORTLIST_GATED:
    score = gated.evaluate(seeds)
    shown = f"{score.value:.4f}" if score.defined else "-"
    print(f"{','.join(sorted(seeds)):<9} {score.gate_degree:>4.2f}  {shown}")
print()

# The optimizers simply never see undefined subsets, so the gated
# optimum is the best single-component subset: {1} soils 4/7 of the
# graph on its own.
result = exhaustive_search(g, CostSpec(gates=(("same-component", 1.0),)))
print("gated optimum:", result.best.sorted_seeds, f"score = {result.best.score.value:.4f}")
print()

# A penalty reshapes the ranking instead of truncating it.
penalized = exhaustive_search(g, CostSpec(penalties=((0.5, "fuzzy-small:6"),)))
print("with 0.5 * fuzzy-small:6 penalty:", penalized.best.sorted_seeds,
      f"score = {penalized.best.score.value:.4f}")
print()

# Gates can rule out everything. forbid all seven nodes and no nonempty
# subset is feasible; the search refuses rather than inventing a result.
try:
    exhaustive_search(g, CostSpec(gates=(("forbid:1,2,3,4,5,6,7", 1.0),)))
except InfeasibleSearchError as exc:
    print("all-forbidden search:", exc)
