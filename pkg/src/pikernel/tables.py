"""Tabular summaries: per (group, prime) invariants and the p-regularity threshold table."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from sympy import isprime, nextprime

from .catalog import EXCEPTIONAL, LieGroup, Spin, Sp, SU
from .errors import DomainError, PiKernelError
from .invariants import sz_lz, z_infty_finite
from .localization import (
    CircleTimes,
    covering_reduction,
    decompose,
    is_p_regular,
    is_quasi_p_regular,
    regularity_bound,
)

MISSING = "—"
COLUMNS = ("quasi", "regular", "decomposition", "sz", "lz", "finite")
FAMILIES = ("SU", "Sp", "Spin", "U", "SO") + EXCEPTIONAL + ("exceptional",)


def format_table(header: Sequence[str], rows: Iterable[Sequence[str]]) -> str:
    rows = [list(r) for r in rows]
    widths = [max(len(str(c)) for c in col) for col in zip(header, *rows)]
    lines = []
    for row in [list(header)] + rows:
        cells = [str(c).ljust(w) for c, w in zip(row, widths)]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def _groups(family: str, params: Iterable[int]) -> list[LieGroup]:
    if family == "exceptional":
        return [LieGroup(name) for name in EXCEPTIONAL]
    if family in EXCEPTIONAL:
        return [LieGroup(family)]
    out = []
    for n in params:
        try:
            out.append(LieGroup(family, n))
        except PiKernelError:
            continue
    return out


def _yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def _cell(g: LieGroup, p: int, column: str) -> str:
    try:
        core = covering_reduction(g, p)
    except PiKernelError:
        return MISSING
    circle = isinstance(core, CircleTimes)
    if circle:
        core = core.group
    try:
        if column == "quasi":
            return _yes_no(is_quasi_p_regular(core, p))
        if column == "regular":
            return _yes_no(is_p_regular(core, p))
        if column == "decomposition":
            text = str(decompose(core, p))
            return f"S1 x {text}" if circle else text
        if column == "sz":
            return str(sz_lz(g, p).sz)
        if column == "lz":
            return str(sz_lz(g, p).lz)
        if column == "finite":
            return _yes_no(z_infty_finite(g))
    except PiKernelError:
        return MISSING
    raise ValueError(f"unknown column {column!r}")


def family_rows(
    family: str, params: Iterable[int], primes: Iterable[int], columns: Sequence[str]
) -> list[list[str]]:
    groups = _groups(family, params)
    primes = [p for p in primes if isprime(p)]
    return [[str(g), str(p)] + [_cell(g, p, c) for c in columns] for g in groups for p in primes]


def family_table(family: str, params, primes, columns: Sequence[str]) -> str:
    return format_table(["group", "p"] + list(columns), family_rows(family, params, primes, columns))


# regularity thresholds


def _linear(a: int, b: int) -> str:
    if a == 0:
        return str(b)
    head = "n" if a == 1 else f"{a}n"
    if b == 0:
        return head
    return f"{head}{b:+d}"


def _fit(f: Callable[[int], int], samples: Sequence[int]) -> str:
    """Render f as an integer-linear expression in n, after checking every sample."""
    n0, n1 = samples[0], samples[1]
    a, rem = divmod(f(n1) - f(n0), n1 - n0)
    if rem:
        raise ArithmeticError("not an integer-linear function")
    b = f(n0) - a * n0
    for n in samples:
        if f(n) != a * n + b:
            raise ArithmeticError(f"not linear at n={n}")
    return _linear(a, b)


def _first_regular_prime(g: LieGroup) -> int:
    return int(nextprime(max(regularity_bound(g), 2)))


def _local(g: LieGroup):
    return sz_lz(g, _first_regular_prime(g))


@dataclass(frozen=True)
class _FamilyRow:
    label: str
    make: Callable[[int], LieGroup]
    samples: Sequence[int]


@dataclass(frozen=True)
class _FixedRow:
    label: str
    groups: Sequence[LieGroup]


THRESHOLD_ROWS = (
    _FamilyRow("SU(n)", SU, range(2, 16)),
    _FamilyRow("Sp(n)", Sp, range(1, 16)),
    _FamilyRow("Spin(2n-1)", lambda n: Spin(2 * n - 1), range(2, 16)),
    _FamilyRow("Spin(2n), n odd", lambda n: Spin(2 * n), range(3, 31, 2)),
    _FamilyRow("Spin(2n), n even", lambda n: Spin(2 * n), range(2, 31, 2)),
    _FixedRow("G2", (LieGroup("G2"),)),
    _FixedRow("F4, E6", (LieGroup("F4"), LieGroup("E6"))),
    _FixedRow("E7", (LieGroup("E7"),)),
    _FixedRow("E8", (LieGroup("E8"),)),
)


def threshold_rows() -> list[list[str]]:
    """One row per family: the regularity threshold and sz_p, lz_p above it.

    Every entry is recomputed from :func:`regularity_bound` and :func:`sz_lz`;
    family rows are fitted to a linear expression in n and checked on all samples.
    """
    rows = []
    for row in THRESHOLD_ROWS:
        if isinstance(row, _FamilyRow):
            bound = _fit(lambda n: regularity_bound(row.make(n)), row.samples)
            sz = _fit(lambda n: _local(row.make(n)).sz, row.samples)
            lz = _fit(lambda n: _local(row.make(n)).lz, row.samples)
        else:
            bounds = {regularity_bound(g) for g in row.groups}
            if len(bounds) != 1:
                raise ArithmeticError(f"groups in row {row.label} disagree on the threshold")
            bound = str(bounds.pop())
            sz = ", ".join(str(_local(g).sz) for g in row.groups)
            lz = ", ".join(str(_local(g).lz) for g in row.groups)
        rows.append([row.label, f"p > {bound}", sz, lz])
    return rows


def threshold_table() -> str:
    return format_table(["group", "p-regular when", "sz_p", "lz_p"], threshold_rows())


def parse_range(text: Optional[str]) -> range:
    """``"2..8"`` -> range(2, 9); ``"7"`` -> range(7, 8); an empty or reversed range is allowed."""
    if text is None:
        return range(0)
    lo, _, hi = text.partition("..")
    try:
        return range(int(lo), int(hi or lo) + 1)
    except ValueError:
        raise DomainError(f"bad range {text!r}; expected a..b") from None
