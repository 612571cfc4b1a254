"""A first match: two random agents play tic-tac-toe locally.

The whole lifecycle is five calls: make, reset, get_observation, step,
close.  The prompt wrapper renders each observation as plain text with
one [GAME] / [Player k] line per visible message.
"""

import parlor
from parlor.agents import RandomAgent
from parlor.wrappers import wrap_prompt

env = parlor.make("TicTacToe-v0", rng_seed=7)
env = wrap_prompt(env)

agents = {0: RandomAgent(env, seed=1), 1: RandomAgent(env, seed=2)}

env.reset(num_players=len(agents))
done = False
while not done:
    player_id, observation = env.get_observation()
    action = agents[player_id](observation)
    done, info = env.step(action)

rewards = env.close()
print(observation)
print(f"\nterminal info: {info}")
print(f"rewards: {rewards}")

# The same seed and actions replay byte-identically; try rerunning.
