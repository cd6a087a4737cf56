"""Train plain-REINFORCE GRUs on the maze and watch the two hidden states.

A run that fails ends with h(x3,x1) and h(x3,x2) almost on top of each other;
the GRU no longer tells the two rooms apart and plays right twice.

Run: python3 demos/02_gru_aliasing.py [n_seeds]
"""
import sys

from aliaslab import lab

n_seeds = int(sys.argv[1]) if len(sys.argv) > 1 else 10
config = lab.parse_config(f"""
id = demo_gru
environment = maze
architecture = gru
seeds = {n_seeds}
diagnostics = distance, p_optimal
""")

result = lab.run_experiment(config)
print(f"{'seed':>4}  {'greedy':>8}  {'return':>6}  {'distance @1':>11}  {'@500':>8}  {'final':>8}")
for run in result.runs:
    d = run.series["distance"]
    acts = "".join(a[0] for a in result.summary()["runs"][run.seed_index]["greedy_actions"])
    flag = "  <- aliased" if run.failed else ""
    print(f"{run.seed_index:>4}  {acts:>8}  {run.greedy_return:+6.1f}  {d[0]:11.4f}  {d[499]:8.4f}  "
          f"{d[-1]:8.4f}{flag}")
print(f"\n{result.failures}/{len(result.runs)} runs converged to the aliased policy")
