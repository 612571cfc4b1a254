"""Tour of the 17 environments: rules prompt and a rendered mid-game view."""

import parlor
from parlor.agents import RandomAgent

for env_id in parlor.env_ids():
    rules = parlor.registry()[env_id].rules
    env = parlor.make(env_id, rng_seed=42)
    n = rules.min_players
    agents = {p: RandomAgent(env, seed=p) for p in range(n)}
    env.reset(num_players=n)

    # Play a few random plies so the board shows something.
    for _ in range(4):
        player_id, _ = env.get_observation()
        done, _ = env.step(agents[player_id](""))
        if done:
            break

    print("=" * 72)
    print(f"{env_id}  (players {rules.min_players}-{rules.max_players}, "
          f"turn limit {rules.turn_limit})")
    print(f"skills: {', '.join(parlor.games.skills_for(env_id))}")
    print("-" * 72)
    print(env.game.rules_text(0))
    print()
    print(env.game.render(0))
    print()
