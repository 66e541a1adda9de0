# src/semantics/refuter.py

"""
IPC through the box translation, semantic consequence, and the two-channel QHC refuter.

A QHC theorem has an S4-valid box image and an IPC-valid negneg image, so a
countermodel to either image certifies that the formula is not a theorem. Silence
of both channels proves nothing.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import reduce
from typing import Sequence

from logic.errors import NonPropositionalInput, SortClash
from logic.formula import (
    And, Box, Formula, Imp, Nabla, Oc, Sort, Wn, is_propositional, subformulas, top,
)
from logic.printer import format_formula
from semantics.kripke import KripkeModel
from semantics.tableau import Countermodel, Valid, decide_s4
from translate.translate import box_translate, negneg_translate

logger = logging.getLogger(__name__)

CHANNELS = ("Box", "NegNeg")


@dataclass(frozen=True)
class Invalid:
    """An IPC non-theorem: countermodel falsifies the box image `translated` at world."""
    translated: Formula
    countermodel: KripkeModel
    world: int

    @property
    def valid(self) -> bool:
        return False


@dataclass(frozen=True)
class Refutation:
    """
    Args:
        channel (str): Box or NegNeg.
        translated (Formula): the image of the refuted formula under the channel's translation.
        countermodel (KripkeModel): falsifies modal_image at world.
        world (int): the falsifying world.
    """
    channel: str
    translated: Formula
    countermodel: KripkeModel
    world: int

    @property
    def modal_image(self) -> Formula:
        """The S4 formula the countermodel falsifies."""
        return self.translated if self.channel == "Box" else box_translate(self.translated)

    def to_dict(self) -> dict:
        return {
            "status": "refuted",
            "channel": self.channel,
            "translated": format_formula(self.translated),
            "modal_image": format_formula(self.modal_image),
            "countermodel": self.countermodel.to_json(),
            "world": self.world,
        }


@dataclass(frozen=True)
class Unknown:
    def to_dict(self) -> dict:
        return {"status": "unknown"}


def _require_propositional(f: Formula):
    if not is_propositional(f):
        raise NonPropositionalInput(f"{f} is not propositional; refutation handles quantifier-free "
                                    f"formulas over 0-ary atoms only.")


def decide_ipc(f: Formula, max_worlds: int = 3) -> Valid | Invalid:
    """
    Decides a propositional problem built from &, |, ->, bot.

    Raises:
        NonPropositionalInput, SortClash
    """
    _require_propositional(f)
    for g in subformulas(f):
        if g.sort is not Sort.PROBLEM or isinstance(g, (Wn, Oc, Box, Nabla)):
            raise SortClash(f"{g} is outside the propositional QH language.")
    image = box_translate(f)
    verdict = decide_s4(image, max_worlds=max_worlds)
    if isinstance(verdict, Valid):
        return verdict
    return Invalid(image, verdict.model, verdict.world)


def _conjunction(formulas: Sequence[Formula], sort: Sort) -> Formula:
    if not formulas:
        return top(sort)
    return reduce(And, formulas)


def entails_s4(premises: Sequence[Formula], conclusion: Formula) -> bool:
    """Global consequence: conclusion holds wherever the premises hold everywhere."""
    if not premises:
        return isinstance(decide_s4(conclusion, minimise=False), Valid)
    antecedent = Box(_conjunction(premises, Sort.PROPOSITION))
    return isinstance(decide_s4(Imp(antecedent, conclusion), minimise=False), Valid)


def entails_ipc(premises: Sequence[Formula], conclusion: Formula) -> bool:
    if not premises:
        return isinstance(decide_ipc(conclusion), Valid)
    return isinstance(decide_ipc(Imp(_conjunction(premises, Sort.PROBLEM), conclusion)), Valid)


def _box_channel(f: Formula, max_worlds: int) -> Refutation | None:
    image = box_translate(f)
    verdict = decide_s4(image, max_worlds=max_worlds)
    if isinstance(verdict, Countermodel):
        return Refutation("Box", image, verdict.model, verdict.world)
    return None


def _negneg_channel(f: Formula, max_worlds: int) -> Refutation | None:
    image = negneg_translate(f)
    verdict = decide_ipc(image, max_worlds=max_worlds)
    if isinstance(verdict, Invalid):
        return Refutation("NegNeg", image, verdict.countermodel, verdict.world)
    return None


def all_channels(f: Formula, max_worlds: int = 3) -> list[Refutation]:
    """Every channel that refutes f, Box first."""
    _require_propositional(f)
    found = [r for r in (_box_channel(f, max_worlds), _negneg_channel(f, max_worlds)) if r is not None]
    logger.debug("%d channel(s) refute %s", len(found), f)
    return found


def refute_qhc(f: Formula, max_worlds: int = 3) -> Refutation | Unknown:
    """
    A certified refutation of f as a QHC theorem, or Unknown.

    Raises:
        NonPropositionalInput
    """
    _require_propositional(f)
    for channel in (_box_channel, _negneg_channel):
        found = channel(f, max_worlds)
        if found is not None:
            return found
    return Unknown()
