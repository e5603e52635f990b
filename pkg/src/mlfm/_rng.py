"""Named deterministic random streams.

Every random draw in the package comes from a Philox counter-based
generator keyed by (seed, fnv1a64(stream name)).  Philox is stable across
platforms and numpy versions, and deriving the key from the stream name
makes each draw independent of program order: initializing parameters or
datasets in a different sequence cannot change their values.
"""

import numpy as np

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3
_MASK = (1 << 64) - 1


def fnv1a64(text):
    h = _FNV_OFFSET
    for byte in text.encode("utf-8"):
        h = ((h ^ byte) * _FNV_PRIME) & _MASK
    return h


def stream(seed, name):
    """Independent Generator for (seed, name)."""
    key = np.array([seed & _MASK, fnv1a64(name)], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))
