from src.funcalc.atoms import BandLimited, ExponentialFamily, FejerFamily
from src.funcalc.calculus import apply_f_AB, apply_f_UV, schur_multiplier
from src.funcalc.functions import (
    CallableFunction,
    CallableFunction1D,
    Function1D,
    Function2D,
    SeparableSum,
    TrigPoly,
    TrigPoly1D,
)

__all__ = [
    "BandLimited",
    "CallableFunction",
    "CallableFunction1D",
    "ExponentialFamily",
    "FejerFamily",
    "Function1D",
    "Function2D",
    "SeparableSum",
    "TrigPoly",
    "TrigPoly1D",
    "apply_f_AB",
    "apply_f_UV",
    "schur_multiplier",
]
