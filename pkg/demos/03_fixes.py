"""Entropy, a separate baseline and DQN against plain REINFORCE, on the same seeds.

Run: python3 demos/03_fixes.py [n_seeds]
"""
import sys

from aliaslab import lab

n_seeds = int(sys.argv[1]) if len(sys.argv) > 1 else 20

VARIANTS = {
    "plain REINFORCE": "",
    "entropy bonus": "entropy_weight = 0.1",
    "unshared baseline": "baseline = unshared",
    "DQN": "head = q",
}

for label, extra in VARIANTS.items():
    config = lab.parse_config(f"id = fix\nenvironment = maze\narchitecture = gru\n"
                              f"seeds = {n_seeds}\n{extra}\n")
    result = lab.run_experiment(config)
    print(f"{label:<18} {result.failures:>3}/{n_seeds} failures")
