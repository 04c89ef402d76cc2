"""Compare the compiled decision kernel with the pure-Python simulator loop.

Both backends run the same random-policy episodes; the script checks that
their trajectories agree bit for bit and reports time per decision.

    python benchmarks/bench_kernels.py [--episodes 200]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from rpfcross import _backend, env
from rpfcross.sim import SimConfig


def rollout(seed: int, cfg: SimConfig, compiled: bool) -> list:
    saved = _backend.core
    if not compiled:
        _backend.core = None
    try:
        rng = np.random.default_rng(seed)
        state, _ = env.episode_reset(seed, cfg)
        traj = []
        while True:
            mask = env.action_mask(state)
            action = int(rng.choice(np.flatnonzero(mask))) if rng.random() > 0.1 else int(env.Action.FALLBACK)
            state, tr = env.step_decision(state, action, cfg)
            traj.append((state, tr.reward, tr.terminal))
            if tr.done:
                return traj
    finally:
        _backend.core = saved


def timed(episodes: int, cfg: SimConfig, compiled: bool) -> tuple[float, list]:
    t0 = time.perf_counter()
    trajs = [rollout(s, cfg, compiled) for s in range(episodes)]
    dt = time.perf_counter() - t0
    return dt / sum(len(t) for t in trajs), trajs


def main(argv=None) -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--episodes", type=int, default=200)
    args = p.parse_args(argv)
    cfg = SimConfig()
    if _backend.core is None:
        print("compiled kernel not available (pure-Python install or RPFCROSS_PURE_PYTHON set)")
        per, _ = timed(args.episodes, cfg, False)
        print(f"python : {per * 1e6:8.1f} us/decision")
        return
    per_py, ref = timed(args.episodes, cfg, False)
    per_c, fast = timed(args.episodes, cfg, True)
    mismatches = sum(a != b for a, b in zip(ref, fast))
    print(f"episodes: {args.episodes}, decisions: {sum(len(t) for t in ref)}")
    print(f"python : {per_py * 1e6:8.1f} us/decision")
    print(f"cython : {per_c * 1e6:8.1f} us/decision  (x{per_py / per_c:.1f})")
    print(f"trajectory mismatches: {mismatches}")


if __name__ == "__main__":
    main()
