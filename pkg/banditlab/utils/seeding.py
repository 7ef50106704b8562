"""
Seed derivation.
Every random stream of a run is keyed by (seed, stream, ...) so that streams
never interact: differing policy choices cannot desynchronize arm generation.
"""
from enum import IntEnum

import numpy as np

class Stream(IntEnum):
    EXPLOITATION_NET = 1
    EXPLORATION_NET = 2
    PROJECTOR = 3
    POLICY = 4
    ARMS = 10
    NOISE = 11
    HIDDEN_PARAM = 12
    EPOCH = 13

def derive_seed(seed: int, *keys: int) -> int:
    """ Returns a 64-bit seed derived from the run seed and the given keys """
    sequence = np.random.SeedSequence([int(seed), *[int(k) for k in keys]])
    return int(sequence.generate_state(1, dtype=np.uint64)[0])

def keyed_rng(seed: int, *keys: int) -> np.random.Generator:
    """ A generator fully determined by (seed, keys) """
    return np.random.default_rng(np.random.SeedSequence([int(seed), *[int(k) for k in keys]]))
