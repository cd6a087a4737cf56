"""The two-room text game: the canonical solution, then a short training run.

The full agent (embeddings of width 256, LSTMs of width 128) takes about
45 seconds per 500-episode run on one core. The probe follows the canonical
actions and reports the gap between the two "go west" history states and the
probability of going east at the last step.

Run: python3 demos/05_text_game.py [episodes]
"""
import sys

import numpy as np

from aliaslab import agents as A
from aliaslab import grad as G
from aliaslab import lab
from aliaslab import train as T
from aliaslab.envs import textgame

episodes = int(sys.argv[1]) if len(sys.argv) > 1 else 300

steps, _ = textgame.play()
for obs_hash, action, reward in steps:
    print(f"  {action:<50} {reward:+.0f}")

config = lab.parse_config("id = demo_text\nenvironment = textgame\nbaseline = shared\n"
                          "entropy_weight = 0.5\n")
rng = np.random.default_rng(lab.seed_for("demo_text", 0))
agent = A.build_agent(config.agent, rng)
learner = T.Learner(agent, config.train)
ctx = T.TextEpisodeContext.default()
scores = []
for episode in range(1, episodes + 1):
    with G.Tape():
        traj = T.textgame_rollout(agent, ctx, rng)
        T.reinforce_update(learner, traj)
    scores.append(traj.total_reward)
    if episode % 50 == 0:
        distance, p_east = lab.textgame_probe(agent, ctx)
        print(f"episode {episode:4d}: mean score {np.mean(scores[-50:]):+5.2f}, "
              f"go-west distance {distance:7.3f}, P(go east at the end) {p_east:.3f}")

with G.no_record():
    greedy = T.textgame_rollout(agent, ctx, mode="greedy")
print("\ngreedy play:", ", ".join(greedy.actions))
print(f"score {greedy.total_reward:+.0f}")
