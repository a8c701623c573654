"""p-regularity, quasi p-regularity and p-local product decompositions.

At a quasi-regular odd prime p, G_p splits as a product of p-local odd
spheres and bundles B_n(p), where B_n(p) is the S^{2n+1}-bundle over
S^{2n+2p-1} classified by alpha_1.  Rationally B_n(p) carries generators in
degrees 2n+1 and 2n+2p-1, so a decomposition is determined by pairing the
degrees of the rational type that differ by 2(p-1).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Union

from sympy import isprime

from .catalog import LieGroup, Sp, Spin, SU, rational_type
from .errors import DomainError, NotCovered, UnsupportedGroup


@dataclass(frozen=True)
class Sphere:
    dim: int

    @property
    def degrees(self) -> tuple[int, ...]:
        return (self.dim,)

    def __str__(self):
        return f"S{self.dim}"

    def to_json(self) -> dict:
        return {"type": "sphere", "dim": self.dim}


@dataclass(frozen=True)
class Bundle:
    n: int
    p: int

    @property
    def degrees(self) -> tuple[int, ...]:
        return (2 * self.n + 1, 2 * self.n + 2 * self.p - 1)

    def __str__(self):
        return f"B{self.n}({self.p})"

    def to_json(self) -> dict:
        return {"type": "bundle", "n": self.n, "p": self.p}


Factor = Union[Sphere, Bundle]


def factor_from_json(data: dict) -> Factor:
    if data["type"] == "sphere":
        return Sphere(data["dim"])
    if data["type"] == "bundle":
        return Bundle(data["n"], data["p"])
    raise DomainError(f"unknown factor type {data['type']!r}")


@dataclass(frozen=True)
class Decomposition:
    group: LieGroup
    p: int
    factors: tuple[Factor, ...]

    def degrees(self) -> tuple[int, ...]:
        return tuple(sorted(d for f in self.factors for d in f.degrees))

    @property
    def bundles(self) -> tuple[Bundle, ...]:
        return tuple(f for f in self.factors if isinstance(f, Bundle))

    def __str__(self):
        return " x ".join(str(f) for f in self.factors)

    def to_json(self) -> dict:
        return {
            "kind": "decomposition",
            "group": self.group.label,
            "p": self.p,
            "factors": [f.to_json() for f in self.factors],
            "text": str(self),
        }

    @classmethod
    def from_json(cls, data: dict) -> "Decomposition":
        from .catalog import parse_group

        factors = tuple(factor_from_json(f) for f in data["factors"])
        return cls(parse_group(data["group"]), data["p"], factors)


@dataclass(frozen=True)
class CircleTimes:
    """The product S^1 x G, used for U(n) = S^1 x SU(n)."""

    group: LieGroup

    def __str__(self):
        return f"S1 x {self.group}"


def _check_prime(p):
    if not isinstance(p, int) or isinstance(p, bool) or not isprime(p):
        raise DomainError(f"{p!r} is not a prime")


def _require_simply_connected(g: LieGroup):
    if not g.is_simply_connected:
        raise UnsupportedGroup(f"{g} is not simply connected; apply covering_reduction first")


def is_quasi_p_regular(g: LieGroup, p: int) -> bool:
    _check_prime(p)
    _require_simply_connected(g)
    if p == 2:
        return False
    fam, n = g.family, g.n
    if fam == "Sp":
        return p > n
    if fam == "SU":
        return 2 * p > n
    if fam == "Spin":
        return 2 * p > n - 1
    if fam in ("G2", "F4", "E6"):
        return p >= 5
    return p >= 11


def regularity_bound(g: LieGroup) -> int:
    """The integer B with g p-regular exactly for odd primes p > B.

    This equals (n_r - 1) / 2, i.e. 2(p-1) exceeds the spread n_r - 3 of the
    rational type, so no two degrees can be joined by a bundle.
    """
    _require_simply_connected(g)
    fam, n = g.family, g.n
    if fam == "SU":
        return n - 1
    if fam == "Sp":
        return 2 * n - 1
    if fam == "Spin":
        # Spin(2k-1) and Spin(2k) both have bound 2k-3
        return n - 2 if n % 2 else n - 3
    return {"G2": 5, "F4": 11, "E6": 11, "E7": 17, "E8": 29}[fam]


def is_p_regular(g: LieGroup, p: int) -> bool:
    _check_prime(p)
    return p != 2 and p > regularity_bound(g)


def _pair_degrees(degrees, p: int) -> list[Factor]:
    """Greedy ascending pairing of d with d + 2(p-1); leftovers become spheres."""
    gap = 2 * (p - 1)
    unused = Counter(degrees)
    factors = []
    for d in sorted(degrees):
        if unused[d] == 0:
            continue
        unused[d] -= 1
        if unused[d + gap] > 0:
            unused[d + gap] -= 1
            factors.append(Bundle((d - 1) // 2, p))
        else:
            factors.append(Sphere(d))
    return factors


def _first_degree(f: Factor) -> int:
    return f.degrees[0]


def decompose(g: LieGroup, p: int) -> Decomposition:
    """Factor G_p into odd spheres and bundles B_n(p).

    Spin groups are first reduced: Spin(2n+1)_p = Sp(n)_p and
    Spin(2n)_p = Spin(2n-1)_p x S^{2n-1}_p.
    """
    _check_prime(p)
    if not is_quasi_p_regular(g, p):
        raise NotCovered(f"{g} is not quasi {p}-regular")
    if g.family == "Spin":
        if g.n % 2:
            core = Sp((g.n - 1) // 2)
            factors = _pair_degrees(rational_type(core), p)
        else:
            factors = list(decompose(Spin(g.n - 1), p).factors) + [Sphere(g.n - 1)]
    else:
        factors = _pair_degrees(rational_type(g), p)
    dec = Decomposition(g, p, tuple(sorted(factors, key=_first_degree)))
    if dec.degrees() != rational_type(g):
        raise AssertionError(f"degree mismatch decomposing {g} at {p}: {dec.degrees()}")
    return dec


def covering_reduction(g: LieGroup, p: int) -> Union[LieGroup, CircleTimes]:
    """Replace SO(n) by Spin(n) (odd p) and U(n) by S^1 x SU(n); other groups pass through."""
    _check_prime(p)
    if g.family == "SO":
        if p == 2:
            raise UnsupportedGroup("SO(n) and Spin(n) agree only at odd primes")
        return Spin(g.n)
    if g.family == "U":
        return CircleTimes(SU(g.n))
    return g

