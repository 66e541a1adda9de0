# src/corpus/theories.py

"""
Extensions of QHC by the principles discussed alongside it, read from the theory
files in data/theories and registered with the calculus registry on import so
corpus entries can name them.

    HNIP  Hilbert's no-ignorabimus principle: every problem is semi-decidable
    KSP   Kolmogorov's stability principle: every proposition is stable
    EDR   exclusive disjunction rule
    WLEM  weak excluded middle
    DN    decidability of every problem of the form !?A
    DP    decidability of every proposition
    SDP   semi-decidability of every proposition
    NN    !?A and ~~A coincide
"""

from pathlib import Path

from calculi.calculi import register_theory
from utils.utils import load_directory

THEORY_DIR = Path(__file__).resolve().parents[2] / "data" / "theories"

# extensions of QHC first, then the extensions of those
THEORIES = sorted(load_directory(THEORY_DIR, ".json").values(),
                  key=lambda spec: (spec["base"] != "QHC", spec["name"]))

for _theory in THEORIES:
    register_theory(_theory)
