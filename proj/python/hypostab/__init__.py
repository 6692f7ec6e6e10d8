"""Hypocoercivity indices and strong-stability checks for explicit Runge-Kutta schemes.

Matrices are nested lists whose entries are rational strings ("-1/6"),
ints, fractions.Fraction, or {"re": ..., "im": ...} dicts. Results are
plain dicts mirroring the command-line JSON output.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction
from typing import Any, Iterable, Optional, Sequence

from . import _hypostab
from ._hypostab import HypostabError

__all__ = [
    "HypostabError",
    "DEFAULT_PRECISION_BITS",
    "closed_form_c",
    "decay_fit",
    "det_leading",
    "hc_index",
    "lasm_check",
    "reproduce",
    "stability_function",
    "staircase",
    "sweep",
    "verdict",
]

DEFAULT_PRECISION_BITS: int = _hypostab.DEFAULT_PRECISION_BITS


def _precision(bits: Optional[int]) -> int:
    if bits is not None:
        return int(bits)
    env = os.environ.get("HYPOSTAB_PRECISION_BITS")
    return int(env) if env else DEFAULT_PRECISION_BITS


def _entry(x: Any) -> Any:
    if isinstance(x, bool):
        raise TypeError("matrix entries must be rational, not bool")
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, dict):
        return {k: _entry(v) for k, v in x.items()}
    if isinstance(x, complex):
        raise TypeError("use {'re': ..., 'im': ...} for complex entries")
    return x


def _matrix(m: Sequence[Sequence[Any]]) -> str:
    return json.dumps([[_entry(x) for x in row] for row in m])


def _tableau(t: Optional[dict]) -> Optional[str]:
    if t is None:
        return None
    return json.dumps({"s": t["s"], "a": [[_entry(x) for x in row] for row in t["a"]],
                       "b": [_entry(x) for x in t["b"]]})


def _kind(err: HypostabError) -> str:
    return err.args[1] if len(err.args) > 1 else ""


HypostabError.kind = property(_kind)


def hc_index(matrix) -> dict:
    """Hypocoercivity report: index, rank bounds, stability and the T_m chain."""
    return json.loads(_hypostab.hc_index(_matrix(matrix)))


def det_leading(p: int) -> dict:
    """Leading term of det(I - R(tL)* R(tL)) for the staircase of size 1 + p/2."""
    return json.loads(_hypostab.det_leading(p))


def closed_form_c(p: int) -> Fraction:
    return Fraction(_hypostab.closed_form_c(p))


def stability_function(p: Optional[int] = None, tableau: Optional[dict] = None) -> dict:
    return json.loads(_hypostab.stability_function(p, _tableau(tableau)))


def sweep(p: Optional[int] = None, epsilon: str | Fraction = "0.304", grid: int = 1024,
          precision_bits: Optional[int] = None, matrix=None, tableau: Optional[dict] = None,
          keep_curve: bool = False) -> dict:
    """Largest ||R(tau L)||_2 - 1 for tau in [0, epsilon]."""
    eps = f"{epsilon.numerator}/{epsilon.denominator}" if isinstance(epsilon, Fraction) else str(epsilon)
    return json.loads(_hypostab.sweep(p, eps, grid, _precision(precision_bits),
                                      None if matrix is None else _matrix(matrix),
                                      _tableau(tableau), keep_curve))


def verdict(p: Optional[int] = None, tableau: Optional[dict] = None, matrices: Iterable = (),
            family: bool = False, precision_bits: Optional[int] = None, grid: int = 64,
            rounds: int = 8) -> dict:
    mats = [_matrix(m) for m in matrices]
    return json.loads(_hypostab.verdict(p, _tableau(tableau), mats, family or not mats,
                                        _precision(precision_bits), grid, rounds))


def decay_fit(matrix, precision_bits: Optional[int] = None, log2_t_min: int = -30,
              log2_t_max: int = -10, points: int = 21) -> dict:
    """Least-squares slope of log(1 - ||e^{tL}||) against log t."""
    return json.loads(_hypostab.decay_fit(_matrix(matrix), _precision(precision_bits),
                                          log2_t_min, log2_t_max, points))


def lasm_check(p: int, m: int, samples: int = 20, seed: int = 20240101, extra: Iterable = (),
               precision_bits: Optional[int] = None) -> dict:
    return json.loads(_hypostab.lasm_check(p, m, samples, seed, [_matrix(x) for x in extra],
                                           _precision(precision_bits)))


def staircase(n: int) -> list:
    return json.loads(_hypostab.staircase(n))


def reproduce(precision_bits: Optional[int] = None, seed: int = 20240101, grid: int = 1024,
              lasm_samples: int = 20) -> list:
    return json.loads(_hypostab.reproduce(_precision(precision_bits), seed, grid, lasm_samples))
