"""Named deterministic random substreams.

Every consumer of randomness gets its own stream, derived from the base
seed plus a tuple of name parts (never Python's builtin hash, which is
randomized per process).  Streams with different names are independent, so
adding agents or reordering evaluation never perturbs the draws of an
existing stream.
"""

from __future__ import annotations

import hashlib
import random

MAX_SEED = 2**64 - 1


def substream(seed: int, *scope: str) -> random.Random:
    """A deterministic RNG for the (seed, scope) pair.

    The scope parts are hashed with explicit separators, so ("a", "bc")
    and ("ab", "c") yield unrelated streams.
    """
    if not 0 <= seed <= MAX_SEED:
        raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
    digest = hashlib.blake2b(digest_size=8)
    digest.update(seed.to_bytes(8, "big"))
    for part in scope:
        digest.update(b"\x1f")
        digest.update(part.encode("utf-8"))
    return random.Random(int.from_bytes(digest.digest(), "big"))
