from typing import List

import numpy as np


def spawn_generators(seed: int, count: int) -> List[np.random.Generator]:
    """Independent generators split deterministically from one 64-bit seed."""
    children = np.random.SeedSequence(seed).spawn(count)
    return [np.random.default_rng(child) for child in children]


def child_seed(seed: int, index: int) -> int:
    """Stable 64-bit integer seed of sub-task ``index``."""
    state = np.random.SeedSequence(seed).spawn(index + 1)[index].generate_state(2, dtype=np.uint32)
    return int(state[0]) << 32 | int(state[1])
