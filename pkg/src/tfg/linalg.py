"""Incremental exact row reduction over Q(i) on sparse vectors."""

from __future__ import annotations

from typing import Hashable, Mapping

from .scalars import ZERO, GaussRational

Vector = dict  # Hashable coordinate -> nonzero GaussRational


def _axpy(v: Vector, a: GaussRational, w: Mapping) -> None:
    """v += a * w, in place, dropping zeros."""
    for key, c in w.items():
        s = v.get(key, ZERO) + a * c
        if s:
            v[key] = s
        else:
            v.pop(key, None)


class EchelonSpan:
    """Span of sparse vectors kept in echelon form, in insertion order.

    With ``track`` on, each stored row remembers the combination of inserted
    vectors it came from, so membership tests can also return coefficients.
    Pure membership work can switch it off.
    """

    def __init__(self, track: bool = True):
        self.track = track
        self._rows: list[tuple[Hashable, Vector, Vector]] = []  # (pivot, row, combo)
        self._count = 0

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def dimension(self) -> int:
        return len(self._rows)

    def _reduce(self, v: Mapping) -> tuple[Vector, Vector]:
        res = {k: c for k, c in v.items() if c}
        combo: Vector = {}
        for pivot, row, rcombo in self._rows:
            a = res.get(pivot)
            if a:
                _axpy(res, -a, row)
                if self.track:
                    _axpy(combo, a, rcombo)
        return res, combo

    def add(self, v: Mapping) -> bool:
        """Insert ``v``; True iff it was independent of the current span."""
        tag = self._count
        self._count += 1
        res, combo = self._reduce(v)
        if not res:
            return False
        pivot = min(res) if _sortable(res) else min(res, key=repr)
        inv = res[pivot].reciprocal()
        row = {k: c * inv for k, c in res.items()}
        if self.track:
            combo = {k: -c for k, c in combo.items()}
            combo[tag] = combo.get(tag, ZERO) + 1
            combo = {k: c * inv for k, c in combo.items() if c}
        self._rows.append((pivot, row, combo))
        return True

    def __contains__(self, v: Mapping) -> bool:
        res, _ = self._reduce(v)
        return not res

    def solve(self, v: Mapping) -> dict[int, GaussRational] | None:
        """Coefficients over insertion indices expressing ``v``, or None."""
        if not self.track:
            raise ValueError("span was built without combination tracking")
        res, combo = self._reduce(v)
        if res:
            return None
        return combo


def _sortable(v: Mapping) -> bool:
    try:
        min(v)
    except TypeError:
        return False
    return True
