"""Arithmetic in the class-2 nilpotent groups Psi(m, n).

Psi(m, n) is generated by x, y, z with z central, z^m = 1 and [x, y] = z^n,
where ``[g, h] = g^-1 h^-1 g h``.  Every element has a unique normal form
x^a y^b z^c with a, b integers and c taken mod m; it is stored as the
:class:`PsiElement` triple ``(a, b, c)``.

Moving y^b past x^a' costs ``y^b x^a' = x^a' y^b z^(-n a' b)``, which gives

    (a, b, c) * (a', b', c') = (a + a', b + b', c + c' - n a' b)   (mod m in c).

Changing the commutator convention to ``g h g^-1 h^-1`` only replaces n by -n,
giving an isomorphic group.

[SU(3), SU(3)] is Psi(12, 1), [Sp(2), Sp(2)] is Psi(120, 12) and [G2, G2]
maps onto Psi(2, 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Union

from .abelian import AbelianGroup
from .errors import DomainError

INFINITE = math.inf


class PsiElement(NamedTuple):
    a: int
    b: int
    c: int


@dataclass(frozen=True)
class Presentation:
    """A non-abelian group recorded by name only, e.g. ``Psi(12,1)`` or ``[G2,G2]``."""

    name: str
    local: object = None

    def __str__(self):
        return self.name if self.local is None else f"{self.name}_({self.local})"

    def to_json(self) -> dict:
        return {"kind": "presentation", "name": self.name, "local": self.local, "text": str(self)}

    @classmethod
    def from_json(cls, data: dict) -> "Presentation":
        return cls(data["name"], data["local"])


@dataclass(frozen=True)
class NamedSubgroup:
    name: str
    contains: Callable[[PsiElement], bool]
    structure: Union[AbelianGroup, Presentation]


class PsiGroup:
    def __init__(self, m: int, n: int):
        if m < 1:
            raise DomainError(f"Psi(m, n) needs m >= 1, got m={m}")
        self.m = m
        self.n = n % m

    def __repr__(self):
        return f"PsiGroup({self.m}, {self.n})"

    def __str__(self):
        return f"Psi({self.m},{self.n})"

    def __eq__(self, other):
        return isinstance(other, PsiGroup) and (self.m, self.n) == (other.m, other.n)

    def __hash__(self):
        return hash((self.m, self.n))

    # generators

    def element(self, a: int = 0, b: int = 0, c: int = 0) -> PsiElement:
        return PsiElement(a, b, c % self.m)

    @property
    def identity(self) -> PsiElement:
        return PsiElement(0, 0, 0)

    @property
    def x(self) -> PsiElement:
        return self.element(1, 0, 0)

    @property
    def y(self) -> PsiElement:
        return self.element(0, 1, 0)

    @property
    def z(self) -> PsiElement:
        return self.element(0, 0, 1)

    # group law

    def mul(self, g: PsiElement, h: PsiElement) -> PsiElement:
        return PsiElement(g.a + h.a, g.b + h.b, (g.c + h.c - self.n * h.a * g.b) % self.m)

    def inv(self, g: PsiElement) -> PsiElement:
        return PsiElement(-g.a, -g.b, (-g.c - self.n * g.a * g.b) % self.m)

    def pow(self, g: PsiElement, k: int) -> PsiElement:
        if k < 0:
            g, k = self.inv(g), -k
        out = self.identity
        while k:
            if k & 1:
                out = self.mul(out, g)
            g = self.mul(g, g)
            k >>= 1
        return out

    def commutator(self, g: PsiElement, h: PsiElement) -> PsiElement:
        """``g^-1 h^-1 g h``; always central."""
        return self.mul(self.mul(self.inv(g), self.inv(h)), self.mul(g, h))

    def order(self, g: PsiElement) -> Union[int, float]:
        """Order of ``g``, or :data:`INFINITE`.  Only central powers of z have finite order."""
        if g.a or g.b:
            return INFINITE
        return self.m // math.gcd(g.c, self.m)

    def is_central(self, g: PsiElement) -> bool:
        return (self.n * g.a) % self.m == 0 and (self.n * g.b) % self.m == 0

    def named_subgroup(self, name: str) -> NamedSubgroup:
        """``Full``, ``XZ`` (generated by x and z) or ``Z`` (generated by z)."""
        if name == "Full":
            return NamedSubgroup(name, lambda g: True, Presentation(str(self)))
        if name == "XZ":
            return NamedSubgroup(name, lambda g: g.b == 0, AbelianGroup.of(0, self.m))
        if name == "Z":
            return NamedSubgroup(name, lambda g: g.a == 0 and g.b == 0, AbelianGroup.of(self.m))
        raise DomainError(f"unknown subgroup {name!r}; expected Full, XZ or Z")

    # words

    def evaluate(self, word: str) -> PsiElement:
        """Multiply out a word over x, y, z (lowercase) and their inverses X, Y, Z."""
        letters = {"x": self.x, "y": self.y, "z": self.z}
        out = self.identity
        for ch in word:
            if ch in letters:
                out = self.mul(out, letters[ch])
            elif ch.lower() in letters:
                out = self.mul(out, self.inv(letters[ch.lower()]))
            else:
                raise DomainError(f"bad letter {ch!r} in word {word!r}")
        return out

    def render(self, g: PsiElement) -> str:
        parts = [f"{s}^{e}" for s, e in zip("xyz", (g.a, g.b, g.c % self.m)) if e]
        return " ".join(parts) if parts else "1"
