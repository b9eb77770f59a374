"""Seeded, splittable random streams."""

import numpy as np
from pydantic import BaseModel, ConfigDict, Field


class RngStream(BaseModel):
    """A (seed, stream) pair naming an independent random stream.

    Identical pairs reproduce identical draws. Distinct stream indices are
    spawned children of the same ``SeedSequence`` and are statistically
    independent. Each worker builds its own generator; generators are never
    shared across threads.
    """

    model_config = ConfigDict(frozen=True)

    seed: int = Field(ge=0, le=2**64 - 1)
    stream: int = Field(default=0, ge=0)

    def generator(self) -> np.random.Generator:
        sequence = np.random.SeedSequence(self.seed, spawn_key=(self.stream,))
        return np.random.Generator(np.random.PCG64(sequence))

    def block_generator(self, block: int) -> np.random.Generator:
        """Generator for one fixed-size block of a sharded Monte Carlo run.

        Blocks are keyed by index, so the merged result does not depend on
        which worker drew which block.
        """
        sequence = np.random.SeedSequence(self.seed, spawn_key=(self.stream, block))
        return np.random.Generator(np.random.PCG64(sequence))
