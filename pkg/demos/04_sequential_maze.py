"""Two-token actions: aliasing bites when x1 and x2 share their best first token.

R1 gives x1 and x2 different optimal pairs, R2 the same pair, and R3 pairs
that share only the first token.

Run: python3 demos/04_sequential_maze.py [n_seeds]
"""
import sys

from aliaslab import lab
from aliaslab.envs import maze

n_seeds = int(sys.argv[1]) if len(sys.argv) > 1 else 20

for fn in ("R1", "R2", "R3"):
    value, pairs = maze.maze_optimal_return(fn)
    config = lab.parse_config(f"id = seq\nenvironment = maze\narchitecture = seq2seq\n"
                              f"reward = {fn}\nseeds = {n_seeds}\n")
    result = lab.run_experiment(config)
    print(f"{fn}: optimum {pairs} ({value:.1f}); {result.failures}/{n_seeds} runs fall short")
