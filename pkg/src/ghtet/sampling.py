"""Rejection sampling of admissible configurations for each type signature."""

import itertools
import math

import numpy as np

from .errors import SamplingError
from .kernels import TYPE_NAMES, check_vertex_type
from .tetra import TetConfig, is_admissible

LOG_RANGE = (math.log(0.2), math.log(3.0))
ATTEMPT_BUDGET = 10_000

#: The 15 type signatures, as non-increasing 4-tuples.
SIGNATURES = tuple(itertools.combinations_with_replacement((1, 0, -1), 4))


def signature_name(types):
    return ",".join(TYPE_NAMES[t] for t in types)


def sample_one(types, rng, budget=ATTEMPT_BUDGET):
    types = tuple(check_vertex_type(t) for t in types)
    for _ in range(budget):
        cfg = TetConfig(types, np.exp(rng.uniform(*LOG_RANGE, size=6)))
        if is_admissible(cfg):
            return cfg
    raise SamplingError(f"sampling budget exhausted for signature {signature_name(types)}")


def document_rngs(seed, count):
    """One independent generator per document, so each is reproducible on its own."""
    return [np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(count)]


def sample(types, count, seed=0, budget=ATTEMPT_BUDGET):
    if count < 1:
        raise ValueError("count must be at least 1")
    return [sample_one(types, rng, budget) for rng in document_rngs(seed, count)]


def sample_corpus(per_signature, seed=0):
    """``per_signature`` configurations for each of the 15 signatures."""
    out = []
    for n, sig in enumerate(SIGNATURES):
        out.extend(sample(sig, per_signature, seed=(seed, n)))
    return out
