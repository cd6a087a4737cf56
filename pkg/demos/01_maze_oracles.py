"""The maze by enumeration, and what an agent that merges x1 with x2 would learn.

Run: python3 demos/01_maze_oracles.py
"""
import itertools

import numpy as np

from aliaslab.envs import maze

print("Every two-step episode from x3 on the base maze:")
for seq in itertools.product((maze.RIGHT, maze.LEFT), repeat=2):
    names = ", ".join(maze.ACTION_NAMES[a] for a in seq)
    print(f"  {names:<12} return {maze.rollout_return(seq, 'base'):+.1f}")

value, policy = maze.maze_optimal_return("base")
print(f"\nOptimal: {[maze.ACTION_NAMES[a] for a in policy]} with return {value:.1f}")

# If x1 and x2 share a representation, the second action is chosen once for both.
# Whatever the mix of visits, "right" wins in the merged state, and the best first
# move given that is also "right": the agent settles on a return of 0.2.
print("\nMerged state x1+x2, for a few visitation mixes:")
for p1 in np.linspace(0.0, 1.0, 5):
    pol = maze.aliased_value_oracle(p1, 1.0 - p1)
    q = ", ".join(f"{maze.ACTION_NAMES[a]} {v:+.2f}" for a, v in pol.q_merged.items())
    print(f"  P(x1)={p1:.2f}: {q} -> policy {[maze.ACTION_NAMES[a] for a in pol.actions]}, "
          f"return {pol.value:.1f}")
