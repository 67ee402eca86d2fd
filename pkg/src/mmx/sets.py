"""Descriptions of subsets of the real line.

Every value a multifunction can take is one of five shapes: the empty
set, a single point, an interval with independently open or closed
endpoints, a half-line ``[lo, +inf)`` or ``(lo, +inf)``, or a finite
disjoint union of those.  :func:`normalize` sorts parts, merges anything
that overlaps or touches, and collapses degenerate shapes, so structural
equality of normalized values is set equality.

Half-lines are unbounded above only.  Sets unbounded below do not occur
in this problem class (action sets live in the nonnegative reals and
parameter domains are bounded), and the constructors reject them.

Distances deliberately ignore open/closed endpoint bookkeeping: ``dist``
measures to the closure.  Sequence-based diagnostics only ever see
closures, so this is the semantics they need.  Membership is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .errors import EmptySetError

__all__ = [
    "SetDesc",
    "Empty",
    "Singleton",
    "Interval",
    "HalfLine",
    "FiniteUnion",
    "EMPTY",
    "normalize",
    "member",
    "dist",
    "truncate",
    "intersect",
    "union_of",
    "is_subset",
    "hull",
    "set_inf",
    "set_sup",
    "closure",
    "sample_points",
    "to_jsonable",
]

# One contiguous piece: (lo, lo_closed, hi, hi_closed); hi == inf means a
# half-line and forces hi_closed == False.
_Atom = tuple[float, bool, float, bool]

_MAX_SAMPLE_POINTS = 2_000_000


class SetDesc:
    """Base class for set descriptions.  Instances are immutable."""

    @property
    def is_empty(self) -> bool:
        return not self._atoms()

    @property
    def is_bounded(self) -> bool:
        return all(math.isfinite(hi) for (_, _, hi, _) in self._atoms())

    def _atoms(self) -> tuple[_Atom, ...]:
        raise NotImplementedError

    def __contains__(self, v: float) -> bool:
        return member(self, v)


@dataclass(frozen=True, slots=True)
class Empty(SetDesc):
    def _atoms(self) -> tuple[_Atom, ...]:
        return ()

    def __str__(self) -> str:
        return "{}"


@dataclass(frozen=True, slots=True)
class Singleton(SetDesc):
    value: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.value):
            raise ValueError("singleton value must be finite")
        object.__setattr__(self, "value", float(self.value))

    def _atoms(self) -> tuple[_Atom, ...]:
        return ((self.value, True, self.value, True),)

    def __str__(self) -> str:
        return f"{{{_fmt(self.value)}}}"


@dataclass(frozen=True, slots=True)
class Interval(SetDesc):
    lo: float
    hi: float
    lo_closed: bool = True
    hi_closed: bool = True

    def __post_init__(self) -> None:
        lo, hi = float(self.lo), float(self.hi)
        if not (math.isfinite(lo) and math.isfinite(hi)):
            raise ValueError("interval endpoints must be finite; use HalfLine for unbounded sets")
        if lo > hi:
            raise ValueError(f"interval needs lo <= hi, got [{lo}, {hi}]")
        if lo == hi and not (self.lo_closed and self.hi_closed):
            raise ValueError("degenerate interval must be closed at both ends")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def _atoms(self) -> tuple[_Atom, ...]:
        return ((self.lo, self.lo_closed, self.hi, self.hi_closed),)

    def __str__(self) -> str:
        l = "[" if self.lo_closed else "("
        r = "]" if self.hi_closed else ")"
        return f"{l}{_fmt(self.lo)}, {_fmt(self.hi)}{r}"


@dataclass(frozen=True, slots=True)
class HalfLine(SetDesc):
    """``[lo, +inf)`` when closed (the default), ``(lo, +inf)`` otherwise."""

    lo: float
    lo_closed: bool = True

    def __post_init__(self) -> None:
        if not math.isfinite(self.lo):
            raise ValueError("half-line base point must be finite")
        object.__setattr__(self, "lo", float(self.lo))

    def _atoms(self) -> tuple[_Atom, ...]:
        return ((self.lo, self.lo_closed, math.inf, False),)

    def __str__(self) -> str:
        l = "[" if self.lo_closed else "("
        return f"{l}{_fmt(self.lo)}, +inf)"


@dataclass(frozen=True, slots=True)
class FiniteUnion(SetDesc):
    """Disjoint, sorted, non-adjacent parts.  Build via :func:`union_of`."""

    parts: tuple[SetDesc, ...]

    def __post_init__(self) -> None:
        if len(self.parts) < 2:
            raise ValueError("a union needs at least two parts; use the part directly")
        atoms = [a for p in self.parts for a in p._atoms()]
        for p in self.parts:
            if isinstance(p, (Empty, FiniteUnion)):
                raise ValueError("union parts must be nonempty and flat")
        for (_, _, hi, hc), (lo, lc, _, _) in zip(atoms, atoms[1:]):
            if lo < hi or (lo == hi and (hc or lc)):
                raise ValueError("union parts must be disjoint, sorted, and non-adjacent")

    def _atoms(self) -> tuple[_Atom, ...]:
        return tuple(a for p in self.parts for a in p._atoms())

    def __str__(self) -> str:
        return " U ".join(str(p) for p in self.parts)


EMPTY = Empty()


def _fmt(v: float) -> str:
    return repr(int(v)) if v == int(v) and abs(v) < 1e15 else repr(v)


def _atom_is_empty(a: _Atom) -> bool:
    lo, lc, hi, hc = a
    return lo > hi or (lo == hi and not (lc and hc))


def _merge_atoms(atoms: Iterable[_Atom]) -> list[_Atom]:
    """Sort atoms and merge overlapping or touching neighbours."""
    live = sorted((a for a in atoms if not _atom_is_empty(a)), key=lambda a: (a[0], not a[1]))
    merged: list[_Atom] = []
    for lo, lc, hi, hc in live:
        if merged:
            plo, plc, phi, phc = merged[-1]
            touches = lo < phi or (lo == phi and (lc or phc))
            if touches:
                if (hi, hc) > (phi, phc) or (hi == phi and hc and not phc):
                    new_hi, new_hc = (hi, hc) if hi > phi or (hi == phi and hc) else (phi, phc)
                    merged[-1] = (plo, plc, new_hi, new_hc)
                continue
        merged.append((lo, lc, hi, hc))
    return merged


def _from_atoms(atoms: Iterable[_Atom]) -> SetDesc:
    merged = _merge_atoms(atoms)
    parts: list[SetDesc] = []
    for lo, lc, hi, hc in merged:
        if hi == math.inf:
            parts.append(HalfLine(lo, lc))
        elif lo == hi:
            parts.append(Singleton(lo))
        else:
            parts.append(Interval(lo, hi, lc, hc))
    if not parts:
        return EMPTY
    if len(parts) == 1:
        return parts[0]
    return FiniteUnion(tuple(parts))


def normalize(s: SetDesc) -> SetDesc:
    """Canonical form: sorted disjoint parts, degenerate shapes collapsed.

    Idempotent: ``normalize(normalize(s)) == normalize(s)``.
    """
    return _from_atoms(s._atoms())


def member(s: SetDesc, v: float) -> bool:
    """True iff ``v`` lies in ``s``, respecting open/closed endpoints."""
    for lo, lc, hi, hc in s._atoms():
        if (v > lo or (v == lo and lc)) and (v < hi or (v == hi and hc)):
            return True
    return False


def dist(s: SetDesc, v: float) -> float:
    """Distance from ``v`` to the closure of ``s``; ``inf`` for the empty set."""
    best = math.inf
    for lo, _, hi, _ in s._atoms():
        if v < lo:
            d = lo - v
        elif v > hi:
            d = v - hi
        else:
            d = 0.0
        if d < best:
            best = d
            if best == 0.0:
                break
    return best


def truncate(s: SetDesc, radius: float) -> SetDesc:
    """``s`` intersected with ``[-radius, +radius]``; may be empty."""
    if radius <= 0:
        raise ValueError("truncation radius must be positive")
    return intersect(s, Interval(-radius, radius))


def intersect(s: SetDesc, t: SetDesc) -> SetDesc:
    out: list[_Atom] = []
    for alo, alc, ahi, ahc in s._atoms():
        for blo, blc, bhi, bhc in t._atoms():
            # tighter bound wins; on endpoint ties, open beats closed
            if alo > blo:
                lo, lc = alo, alc
            elif blo > alo:
                lo, lc = blo, blc
            else:
                lo, lc = alo, alc and blc
            if ahi < bhi:
                hi, hc = ahi, ahc
            elif bhi < ahi:
                hi, hc = bhi, bhc
            else:
                hi, hc = ahi, ahc and bhc
            a = (lo, lc, hi, hc)
            if not _atom_is_empty(a):
                out.append(a)
    return _from_atoms(out)


def union_of(*sets: SetDesc) -> SetDesc:
    return _from_atoms(a for s in sets for a in s._atoms())


def is_subset(s: SetDesc, t: SetDesc) -> bool:
    """True iff ``s`` is contained in ``t`` (exact endpoint semantics)."""
    return intersect(s, t) == normalize(s)


def hull(s: SetDesc) -> SetDesc:
    """Smallest interval or half-line containing ``s``; empty stays empty."""
    atoms = s._atoms()
    if not atoms:
        return EMPTY
    lo, lc = atoms[0][0], atoms[0][1]
    hi, hc = atoms[-1][2], atoms[-1][3]
    return _from_atoms([(lo, lc, hi, hc)])


def set_inf(s: SetDesc) -> float:
    """Infimum of ``s``.  Raises on the empty set."""
    atoms = s._atoms()
    if not atoms:
        raise EmptySetError("infimum of the empty set")
    return atoms[0][0]


def set_sup(s: SetDesc) -> float:
    """Supremum of ``s`` (``inf`` for a half-line).  Raises on the empty set."""
    atoms = s._atoms()
    if not atoms:
        raise EmptySetError("supremum of the empty set")
    return max(a[2] for a in atoms)


def closure(s: SetDesc) -> SetDesc:
    return _from_atoms((lo, True, hi, math.isfinite(hi) and True, ) if False else (lo, True, hi, math.isfinite(hi)) for (lo, _, hi, _) in s._atoms())


def sample_points(s: SetDesc, step: float) -> list[float]:
    """Deterministic grid over a bounded set with spacing at most ``step``.

    Includes every part's endpoints; open endpoints are nudged inward so
    all returned points are members of ``s``.  Unbounded sets must be
    truncated first.
    """
    if step <= 0:
        raise ValueError("step must be positive")
    pts: list[float] = []
    for lo, lc, hi, hc in s._atoms():
        if not math.isfinite(hi):
            raise ValueError("cannot sample an unbounded set; truncate it first")
        span = hi - lo
        if span == 0.0:
            pts.append(lo)
            continue
        inset = min(span, step) * 1e-9
        a = lo if lc else lo + inset
        b = hi if hc else hi - inset
        n = max(1, math.ceil((b - a) / step))
        if n + 1 > _MAX_SAMPLE_POINTS:
            raise ValueError(f"sample of {n + 1} points exceeds the safety cap")
        w = b - a
        pts.extend(a + w * i / n for i in range(n))
        pts.append(b)
    out = sorted(set(pts))
    return out


def to_jsonable(s: SetDesc) -> dict | list | None:
    """Structured JSON form used by reports."""
    if isinstance(s, Empty):
        return {"kind": "empty"}
    if isinstance(s, Singleton):
        return {"kind": "point", "value": s.value}
    if isinstance(s, Interval):
        return {
            "kind": "interval",
            "lo": s.lo,
            "hi": s.hi,
            "lo_closed": s.lo_closed,
            "hi_closed": s.hi_closed,
        }
    if isinstance(s, HalfLine):
        return {"kind": "halfline", "lo": s.lo, "lo_closed": s.lo_closed}
    if isinstance(s, FiniteUnion):
        return {"kind": "union", "parts": [to_jsonable(p) for p in s.parts]}
    raise TypeError(f"not a SetDesc: {s!r}")
