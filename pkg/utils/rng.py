"""
Counter-based random streams keyed by (seed, stream) so scans split across
workers draw the same numbers as a single-worker run.

@Time ： 2026-10-18
"""
import numpy as np


def stream(seed, *keys):
    """
    :param seed: user seed (u64)
    :param keys: extra integers selecting an independent substream
    """
    key = [int(seed) & 0xFFFFFFFFFFFFFFFF]
    key.extend(int(k) & 0xFFFFFFFFFFFFFFFF for k in keys)
    seed_sequence = np.random.SeedSequence(key)
    return np.random.Generator(np.random.Philox(seed_sequence))
