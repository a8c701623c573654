"""Static data for compact Lie groups.

A group is identified by a :class:`LieGroup` value: a family name plus, for
the classical families, a parameter.  ``rational_type`` gives the degrees of
the exterior generators of the rational cohomology, from which rank and
dimension follow.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .errors import DomainError

CLASSICAL = ("SU", "Sp", "Spin", "U", "SO")
EXCEPTIONAL = ("G2", "F4", "E6", "E7", "E8")
SIMPLY_CONNECTED = ("SU", "Sp", "Spin") + EXCEPTIONAL

_MIN_PARAM = {"SU": 2, "U": 2, "Sp": 1, "Spin": 3, "SO": 3}

_EXCEPTIONAL_DEGREES = {
    "G2": (3, 11),
    "F4": (3, 11, 15, 23),
    "E6": (3, 9, 11, 15, 17, 23),
    "E7": (3, 11, 15, 19, 23, 27, 35),
    "E8": (3, 15, 23, 27, 35, 39, 47, 59),
}

_EXCEPTIONAL_DIM = {"G2": 14, "F4": 52, "E6": 78, "E7": 133, "E8": 248}

_NAME_RE = re.compile(r"^\s*(SU|Sp|Spin|SO|U)\s*\(?\s*(\d+)\s*\)?\s*$", re.IGNORECASE)
_CANONICAL = {name.lower(): name for name in CLASSICAL + EXCEPTIONAL}


@dataclass(frozen=True, order=True)
class LieGroup:
    family: str
    n: Optional[int] = None

    def __post_init__(self):
        if self.family in EXCEPTIONAL:
            if self.n is not None:
                raise DomainError(f"{self.family} takes no parameter")
        elif self.family in CLASSICAL:
            if not isinstance(self.n, int) or isinstance(self.n, bool):
                raise DomainError(f"{self.family} needs an integer parameter")
            lo = _MIN_PARAM[self.family]
            if self.n < lo:
                raise DomainError(f"{self.family}({self.n}) requires n >= {lo}")
        else:
            raise DomainError(f"unknown Lie group family {self.family!r}")

    def __str__(self):
        return self.family if self.n is None else f"{self.family}({self.n})"

    @property
    def label(self) -> str:
        """Compact CLI spelling, e.g. ``SU3`` or ``G2``."""
        return self.family if self.n is None else f"{self.family}{self.n}"

    @property
    def is_exceptional(self) -> bool:
        return self.family in EXCEPTIONAL

    @property
    def is_simply_connected(self) -> bool:
        return self.family in SIMPLY_CONNECTED

    def is_spin_4k(self) -> bool:
        return self.family == "Spin" and self.n % 4 == 0


def SU(n):
    return LieGroup("SU", n)


def Sp(n):
    return LieGroup("Sp", n)


def Spin(n):
    return LieGroup("Spin", n)


def U(n):
    return LieGroup("U", n)


def SO(n):
    return LieGroup("SO", n)


G2 = LieGroup("G2")
F4 = LieGroup("F4")
E6 = LieGroup("E6")
E7 = LieGroup("E7")
E8 = LieGroup("E8")


def parse_group(text: str) -> LieGroup:
    """Parse ``SU3``, ``SU(3)``, ``spin8``, ``G2`` and friends."""
    key = text.strip()
    if key.lower() in _CANONICAL and _CANONICAL[key.lower()] in EXCEPTIONAL:
        return LieGroup(_CANONICAL[key.lower()])
    m = _NAME_RE.match(key)
    if not m:
        raise DomainError(f"cannot parse group name {text!r}")
    return LieGroup(_CANONICAL[m.group(1).lower()], int(m.group(2)))


def rational_type(g: LieGroup) -> tuple[int, ...]:
    """Degrees n_1 <= ... <= n_r of the exterior generators of H*(g; Q).

    Repeated degrees (Spin(4k)) are kept.
    """
    fam, n = g.family, g.n
    if fam in EXCEPTIONAL:
        return _EXCEPTIONAL_DEGREES[fam]
    if fam == "SU":
        return tuple(range(3, 2 * n, 2))
    if fam == "U":
        return tuple(range(1, 2 * n, 2))
    if fam == "Sp":
        return tuple(4 * k - 1 for k in range(1, n + 1))
    # Spin and SO share a rational type
    half = n // 2
    if n % 2:
        return tuple(4 * k - 1 for k in range(1, half + 1))
    return tuple(sorted([4 * k - 5 for k in range(2, half + 1)] + [n - 1]))


def dimension(g: LieGroup) -> int:
    fam, n = g.family, g.n
    if fam in EXCEPTIONAL:
        return _EXCEPTIONAL_DIM[fam]
    if fam == "SU":
        return n * n - 1
    if fam == "U":
        return n * n
    if fam == "Sp":
        return n * (2 * n + 1)
    return n * (n - 1) // 2


def rank(g: LieGroup) -> int:
    return len(rational_type(g))


def top_degree(g: LieGroup) -> int:
    return rational_type(g)[-1]
