#!/usr/bin/env python3
"""Regenerates tests/golden/prng_seed*.json from an independent LCG implementation."""
import json
import math
import pathlib

A = 6364136223846793005
C = 1442695040888963407
MASK = (1 << 64) - 1


def draws(seed, count):
    state = seed & MASK
    for _ in range(count):
        state = (A * state + C) & MASK
        yield state, (state >> 11) * 2.0 ** -53


def modes(dimension, n_max):
    for n in range(n_max + 1):
        if dimension == 2:
            for m in ([0] if n == 0 else [-1, 1]):
                yield n, m
        else:
            for m in range(-n, n + 1):
                yield n, m


def golden(seed, dimension, n_max, decay):
    idx = list(modes(dimension, n_max))
    rows = []
    for (n, m), (raw, u) in zip(idx, draws(seed, len(idx))):
        rows.append({"n": n, "m": m, "raw": str(raw), "unit": u,
                     "value": (2.0 * u - 1.0) * math.pow(1.0 + n, -decay)})
    return {"seed": seed, "dimension": dimension, "n_max": n_max, "decay": decay, "draws": rows}


if __name__ == "__main__":
    out = pathlib.Path(__file__).resolve().parents[2] / "tests" / "golden"
    out.mkdir(parents=True, exist_ok=True)
    for seed, dimension, n_max, decay in [(1, 2, 8, 1.0), (42, 3, 4, 0.5), (20261014, 2, 16, 1.5)]:
        path = out / f"prng_seed{seed}.json"
        path.write_text(json.dumps(golden(seed, dimension, n_max, decay), indent=1) + "\n")
        print("wrote", path)
