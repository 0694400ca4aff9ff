"""Decision results shared by the locality, inclusion and infix-freeness checks."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .automata import Word, format_word


@dataclass(frozen=True)
class CartesianWitness:
    """A violation of the letter-Cartesian property.

    ``alpha + (pivot,) + beta`` and ``gamma + (pivot,) + delta`` are in the
    language while ``alpha + (pivot,) + delta`` is not.
    """

    pivot: str
    alpha: Word
    beta: Word
    gamma: Word
    delta: Word

    @property
    def first_word(self) -> Word:
        return self.alpha + (self.pivot,) + self.beta

    @property
    def second_word(self) -> Word:
        return self.gamma + (self.pivot,) + self.delta

    @property
    def crossed_word(self) -> Word:
        return self.alpha + (self.pivot,) + self.delta

    def to_json(self) -> dict:
        return {"pivot": self.pivot, "alpha": list(self.alpha), "beta": list(self.beta),
                "gamma": list(self.gamma), "delta": list(self.delta)}

    def __str__(self):
        return (f"pivot {self.pivot}: {format_word(self.first_word)} and "
                f"{format_word(self.second_word)} accepted, "
                f"{format_word(self.crossed_word)} rejected")


@dataclass(frozen=True)
class CheckReport:
    verdict: bool
    witness: Optional[Union[Word, CartesianWitness]] = None
    explored: int = 0
    elapsed: float = 0.0

    @property
    def stats(self) -> dict:
        return {"explored": self.explored, "elapsed": self.elapsed}

    def witness_json(self):
        if self.witness is None:
            return None
        if isinstance(self.witness, CartesianWitness):
            return self.witness.to_json()
        return list(self.witness)
