"""Deterministic random streams for reproducible augmentation.

Every sampling operation in this package draws from a ``numpy.random.Generator``
backed by the PCG64 bit generator, pinned here so that a given seed reproduces
the same draw sequence on every run and platform. A stream is single-owner:
never share one generator between concurrent callers; derive one per work item
with :func:`split_seed` instead.
"""

from __future__ import annotations

import os

import numpy as np

DEFAULT_SEED = 0x5EED
SEED_ENV_VAR = "FILTERAUG_SEED"


def stream(seed: int | None = None) -> np.random.Generator:
    """Create the pinned deterministic generator for ``seed``.

    ``None`` selects :data:`DEFAULT_SEED`.
    """
    return np.random.Generator(np.random.PCG64(DEFAULT_SEED if seed is None else seed))


def split_seed(master_seed: int, index: int) -> int:
    """Derive an independent per-item seed from ``(master_seed, index)``.

    Uses numpy's ``SeedSequence`` spawn-key mixing reduced to one u64, so the
    result depends only on the pair: batch items can be processed in any order
    or in parallel and still receive identical streams.
    """
    ss = np.random.SeedSequence(master_seed, spawn_key=(index,))
    return int(ss.generate_state(1, np.uint64)[0])


def default_seed() -> int:
    """Resolve the default seed, honoring the FILTERAUG_SEED environment variable."""
    raw = os.environ.get(SEED_ENV_VAR)
    return DEFAULT_SEED if raw is None else int(raw)
