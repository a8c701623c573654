"""Finitely generated abelian groups in invariant-factor form.

An :class:`AbelianGroup` is ``Z^r + Z/d1 + ... + Z/dk`` with ``d1 | d2 | ... | dk``
over a coefficient ring recorded in ``local``:

* ``None``  -- the integers,
* a prime ``p`` -- the integers localized at ``p`` (torsion is p-primary),
* ``0``  -- the rationals (no torsion),
* ``"odd"`` -- the integers with every odd prime kept and 2 inverted.

Because the invariant-factor chain is unique, ``==`` decides isomorphism.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from math import prod
from typing import Iterable, Optional, Union

from sympy import factorint, isprime

from .errors import DomainError

Local = Optional[Union[int, str]]


def _check_marker(local):
    if local is None or local == 0 or local == "odd":
        return
    if isinstance(local, int) and not isinstance(local, bool) and isprime(local):
        return
    raise DomainError(f"bad coefficient marker {local!r}")


def _keeps_prime(local, q: int) -> bool:
    if local is None:
        return True
    if local == 0:
        return False
    if local == "odd":
        return q != 2
    return q == local


def invariant_factors(orders: Iterable[int]) -> tuple[int, ...]:
    """Invariant-factor chain of the direct sum of cyclic groups of the given orders."""
    powers = defaultdict(list)
    for d in orders:
        if d < 1:
            raise DomainError(f"cyclic order must be positive, got {d}")
        for q, e in factorint(d).items():
            powers[q].append(q**e)
    if not powers:
        return ()
    length = max(len(v) for v in powers.values())
    for v in powers.values():
        v.sort(reverse=True)
        v.extend([1] * (length - len(v)))
    # the k-th largest power of every prime goes into the k-th largest factor
    chain = [prod(v[k] for v in powers.values()) for k in range(length)]
    return tuple(reversed(chain))


def primary_decomposition(torsion: Iterable[int]) -> dict[int, tuple[int, ...]]:
    """Map each prime to the ascending list of prime-power cyclic orders."""
    out = defaultdict(list)
    for d in torsion:
        for q, e in factorint(d).items():
            out[q].append(q**e)
    return {q: tuple(sorted(v)) for q, v in sorted(out.items())}


@dataclass(frozen=True)
class AbelianGroup:
    free_rank: int = 0
    torsion: tuple[int, ...] = ()
    local: Local = None

    def __post_init__(self):
        _check_marker(self.local)
        if self.free_rank < 0:
            raise DomainError("free rank must be nonnegative")
        chain = invariant_factors(self.torsion)
        if self.local is not None and chain:
            chain = invariant_factors(
                q**e for d in chain for q, e in factorint(d).items() if _keeps_prime(self.local, q)
            )
        object.__setattr__(self, "torsion", chain)

    @classmethod
    def cyclic(cls, order: int = 0, local: Local = None) -> "AbelianGroup":
        """``Z/order``; ``order=0`` gives the infinite cyclic group."""
        if order == 0:
            return cls(1, (), local)
        return cls(0, (order,), local)

    @classmethod
    def of(cls, *orders: int, local: Local = None) -> "AbelianGroup":
        """Direct sum of cyclic groups, ``0`` standing for a free summand: ``of(0, 12)`` is Z + Z/12."""
        return cls(sum(1 for d in orders if d == 0), tuple(d for d in orders if d != 0), local)

    @classmethod
    def trivial(cls, local: Local = None) -> "AbelianGroup":
        return cls(0, (), local)

    @property
    def torsion_order(self) -> int:
        return prod(self.torsion)

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    def primary_decomposition(self) -> dict[int, tuple[int, ...]]:
        return primary_decomposition(self.torsion)

    def __add__(self, other):
        if not isinstance(other, AbelianGroup):
            return NotImplemented
        return direct_sum(self, other)

    def __str__(self):
        return render(self)

    def to_json(self) -> dict:
        return {
            "kind": "abelian",
            "free_rank": self.free_rank,
            "torsion": list(self.torsion),
            "local": self.local,
            "text": render(self),
        }

    @classmethod
    def from_json(cls, data: dict) -> "AbelianGroup":
        return cls(data["free_rank"], tuple(data["torsion"]), data["local"])


def direct_sum(a: AbelianGroup, b: AbelianGroup) -> AbelianGroup:
    if a.local != b.local:
        raise DomainError(f"coefficient mismatch: {a.local!r} vs {b.local!r}")
    return AbelianGroup(a.free_rank + b.free_rank, a.torsion + b.torsion, a.local)


def p_primary_part(a: AbelianGroup, p: int, torsion_only: bool = True) -> AbelianGroup:
    """Subgroup of elements of p-power order (the free part is kept when ``torsion_only`` is false)."""
    if not isprime(p):
        raise DomainError(f"{p} is not prime")
    parts = a.primary_decomposition().get(p, ())
    return AbelianGroup(0 if torsion_only else a.free_rank, parts, a.local)


def localize(a: AbelianGroup, p: Union[int, str]) -> AbelianGroup:
    """Localize an integral group at the prime ``p``.

    ``p=0`` rationalizes and ``p="odd"`` inverts only 2.
    """
    if a.local is not None:
        if a.local == p:
            return a
        raise DomainError(f"group is already localized at {a.local!r}")
    if p != 0 and p != "odd" and not (isinstance(p, int) and isprime(p)):
        raise DomainError(f"cannot localize at {p!r}")
    return AbelianGroup(a.free_rank, a.torsion, p)


def odd_part(a: AbelianGroup) -> AbelianGroup:
    return localize(a, "odd")


def render(a: AbelianGroup) -> str:
    if a.local is None:
        free = "Z"
    elif a.local == 0:
        free = "Q"
    else:
        free = f"Z_({a.local})"
    terms = []
    if a.free_rank == 1:
        terms.append(free)
    elif a.free_rank > 1:
        terms.append(f"{free}^{a.free_rank}")
    terms.extend(f"Z/{d}" for d in a.torsion)
    return " + ".join(terms) if terms else "0"
