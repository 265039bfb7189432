"""Counter-keyed random streams.

Every random draw in the package comes from a fresh numpy ``Generator``
seeded by ``SeedSequence(entropy=seed, spawn_key=key)``. A draw is therefore
a pure function of its key (stream tag, owner, counter). Interleaving
events differently, or adding draws on one stream, never shifts another
stream.

Keys must be non-negative; callers shift signed identifiers (the requester
is node ``-1``) with :func:`node_key`.
"""

from __future__ import annotations

from typing import Final

import numpy as np

STREAM_ADAPTER: Final[int] = 1
STREAM_NETWORK: Final[int] = 2
STREAM_BYZANTINE: Final[int] = 3
STREAM_POLICY: Final[int] = 4


def keyed_generator(seed: int, *key: int) -> np.random.Generator:
    """Return the generator for ``(seed, key)``.

    Examples
    --------
    >>> a = keyed_generator(7, STREAM_ADAPTER, 0, 3).random()
    >>> b = keyed_generator(7, STREAM_ADAPTER, 0, 3).random()
    >>> a == b
    True
    >>> a == keyed_generator(7, STREAM_ADAPTER, 0, 4).random()
    False
    """

    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=key))


def node_key(node_id: int) -> int:
    """Map a node id (``-1`` for the requester) onto a non-negative key component."""

    return node_id + 1


def pick_index(seed: int, draw: int, count: int) -> int:
    """Seeded uniform choice of an index in ``range(count)`` for draw number *draw*.

    Examples
    --------
    >>> 0 <= pick_index(1, 0, 3) < 3
    True
    >>> pick_index(1, 0, 3) == pick_index(1, 0, 3)
    True
    """

    return int(keyed_generator(seed, STREAM_POLICY, draw).integers(count))
