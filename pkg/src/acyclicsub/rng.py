"""Deterministic seeding helpers.

Every randomized operation in this package takes an explicit 64-bit seed.
Independent trials derive child seeds with a splitmix64-style mixer, so a
trial's stream depends only on (seed, key path) and never on how many other
trials ran before it.  The generators themselves are stdlib ``random.Random``
(Mersenne Twister) instances, whose sequences are stable across Python
versions for a fixed seed.
"""

import hashlib
import random

_MASK64 = (1 << 64) - 1


def _mix64(x: int) -> int:
    # splitmix64 finalizer
    z = (x + 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return (z ^ (z >> 31)) & _MASK64


def _key_to_int(key) -> int:
    if isinstance(key, int):
        return key & _MASK64
    digest = hashlib.blake2b(str(key).encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "big")


def derive_seed(seed: int, *keys) -> int:
    """Derive an independent child seed from ``seed`` and a key path.

    Keys may be ints or strings; strings are hashed with a fixed digest so
    the result does not depend on interpreter hash randomization.
    """
    state = _mix64(seed & _MASK64)
    for key in keys:
        state = _mix64(state ^ _key_to_int(key))
    return state


def make_rng(seed: int, *keys) -> random.Random:
    """A fresh ``random.Random`` seeded from ``derive_seed(seed, *keys)``."""
    return random.Random(derive_seed(seed, *keys))
