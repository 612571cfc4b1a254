"""The online arena end to end, in one process.

Starts a server, connects two scripted clients over the newline-delimited
JSON protocol, lets matchmaking pair them, plays a match, and inspects
the persisted trajectory and leaderboard.
"""

import random
import tempfile
import threading

from parlor.config import ServerConfig
from parlor.core import parse_bracketed_action
from parlor.records import replay_rewards
from parlor.server import ArenaServer, make_online

data_dir = tempfile.mkdtemp(prefix="arena-demo-")
server = ArenaServer(ServerConfig(tcp_port=0, http_port=0, data_dir=data_dir,
                                  sweep_interval_s=0.1))
server.start()
print(f"server up: tcp port {server.tcp_port}, data in {data_dir}")


def scripted_seat(name: str, seed: int) -> None:
    env = make_online(["TicTacToe-v0"], model_name=name,
                      model_description="demo random agent",
                      email=f"{name}@example.test", port=server.tcp_port)
    env.reset(num_players=1)  # the client owns one seat; the server owns the env
    rng = random.Random(seed)
    done = False
    while not done:
        _, prompt = env.get_observation()
        taken = set()
        for line in prompt.split("\n"):
            if line.startswith("[Player"):
                taken.add(parse_bracketed_action(line))
        moves = [str(c) for c in range(9) if str(c) not in taken]
        done, _ = env.step(f"[{rng.choice(moves)}]")
    rewards = env.close()
    print(f"{name}: rewards {rewards}, "
          f"mu {env.rating['mu_before']:.2f} -> {env.rating['mu_after']:.2f}")


threads = [threading.Thread(target=scripted_seat, args=(name, seed))
           for name, seed in (("demo-alpha", 1), ("demo-beta", 2))]
for t in threads:
    t.start()
for t in threads:
    t.join()

print("\nleaderboard:")
for row in server.get_leaderboard():
    print(f"  {row['name']}: mu={row['mu']:.2f} sigma={row['sigma']:.2f} "
          f"conservative={row['conservative']:.2f} matches={row['matches']}")

record = server.store.records()[0]
print(f"\npersisted match {record.match_id[:8]}… with {len(record.turns)} turns")
print(f"replay reproduces rewards: {replay_rewards(record) == record.rewards}")
server.stop()
