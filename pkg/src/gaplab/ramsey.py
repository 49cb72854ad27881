"""Ramsey numbers R(3, l) with partial knowledge, and what follows from them.

Values are carried as :class:`PartialValue` intervals.  Quantities that
depend on several uncertain table entries at once (alpha(n), epsilon(n),
gap2(n)) are evaluated over every table completion that is consistent with
the consecutive-difference rules, which keeps correlated unknowns from
widening the answer; past a scenario budget plain interval arithmetic is
used instead.
"""

from __future__ import annotations

import json
from functools import lru_cache
from dataclasses import dataclass, field
from typing import Callable, Iterable


class InconsistencyError(RuntimeError):
    """Two independent routes to the same quantity disagree."""


@dataclass(frozen=True)
class PartialValue:
    """An integer known exactly, within bounds, or not at all.

    ``None`` for a bound means unbounded on that side.
    """

    lo: int | None = None
    hi: int | None = None

    def __post_init__(self) -> None:
        if self.lo is not None and self.hi is not None and self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def exact(cls, v: int) -> PartialValue:
        return cls(v, v)

    @classmethod
    def unknown(cls) -> PartialValue:
        return cls(None, None)

    @property
    def is_exact(self) -> bool:
        return self.lo is not None and self.lo == self.hi

    @property
    def is_unknown(self) -> bool:
        return self.lo is None and self.hi is None

    @property
    def value(self) -> int:
        if not self.is_exact:
            raise ValueError(f"{self} is not exact")
        return self.lo  # type: ignore[return-value]

    def contains(self, v: int) -> bool:
        return (self.lo is None or self.lo <= v) and (self.hi is None or v <= self.hi)

    def may_equal(self, v: int) -> bool:
        return self.contains(v)

    def hull(self, other: PartialValue) -> PartialValue:
        lo = None if self.lo is None or other.lo is None else min(self.lo, other.lo)
        hi = None if self.hi is None or other.hi is None else max(self.hi, other.hi)
        return PartialValue(lo, hi)

    def meet(self, other: PartialValue) -> PartialValue:
        los = [x for x in (self.lo, other.lo) if x is not None]
        his = [x for x in (self.hi, other.hi) if x is not None]
        return PartialValue(max(los) if los else None, min(his) if his else None)

    def __add__(self, other: PartialValue | int) -> PartialValue:
        o = _lift(other)
        return PartialValue(_add(self.lo, o.lo), _add(self.hi, o.hi))

    __radd__ = __add__

    def __neg__(self) -> PartialValue:
        return PartialValue(None if self.hi is None else -self.hi,
                            None if self.lo is None else -self.lo)

    def __sub__(self, other: PartialValue | int) -> PartialValue:
        return self + (-_lift(other))

    def __rsub__(self, other: int) -> PartialValue:
        return _lift(other) + (-self)

    def to_json(self) -> dict:
        return {"lo": self.lo, "hi": self.hi}

    def verdict(self) -> str:
        """Reading of a 0/1 value as yes / no / unknown."""
        if self.is_exact:
            return "yes" if self.lo else "no"
        return "unknown"

    def __str__(self) -> str:
        if self.is_exact:
            return str(self.lo)
        lo = "-inf" if self.lo is None else str(self.lo)
        hi = "inf" if self.hi is None else str(self.hi)
        return f"[{lo}, {hi}]"


def _lift(x: PartialValue | int) -> PartialValue:
    return x if isinstance(x, PartialValue) else PartialValue.exact(x)


def _add(a: int | None, b: int | None) -> int | None:
    return None if a is None or b is None else a + b


YES = PartialValue.exact(1)
NO = PartialValue.exact(0)
MAYBE = PartialValue(0, 1)


# -- the table ------------------------------------------------------------

@dataclass(frozen=True)
class RamseyTable:
    """Knowledge of R(3, l) for l = 1..max_l, plus R(4, 4)."""

    r3: tuple[PartialValue, ...]
    r44: PartialValue = field(default_factory=PartialValue.unknown)

    def __post_init__(self) -> None:
        for l, v in enumerate(self.r3, 1):
            if v.lo is None:
                raise ValueError(f"R(3,{l}) needs a lower bound")

    @property
    def max_l(self) -> int:
        return len(self.r3)

    def r(self, l: int) -> PartialValue:
        if 1 <= l <= self.max_l:
            return self.r3[l - 1]
        return PartialValue.unknown()

    def lo(self, l: int) -> int:
        return self.r3[l - 1].lo  # type: ignore[return-value]

    def hi(self, l: int) -> int | None:
        return self.r3[l - 1].hi

    def with_entry(self, l: int, value: PartialValue) -> RamseyTable:
        rows = list(self.r3)
        while len(rows) < l:
            rows.append(PartialValue.unknown())
        rows[l - 1] = value
        return RamseyTable(tuple(rows), self.r44)

    def to_json(self) -> dict:
        rows = []
        for l, v in enumerate(self.r3, 1):
            row = {"l": l, "lo": v.lo}
            if v.hi is not None:
                row["hi"] = v.hi
            rows.append(row)
        out: dict = {"r3": rows}
        if not self.r44.is_unknown:
            out["r44"] = {"lo": self.r44.lo, "hi": self.r44.hi}
        return out


_EXACT = {1: 1, 2: 3, 3: 6, 4: 9, 5: 14, 6: 18, 7: 23, 8: 28, 9: 36}
_BOUNDED = {10: (40, 43), 11: (46, 51), 12: (52, 59), 13: (59, 69), 14: (66, 78), 15: (73, 88)}
_LOWER = {16: 79, 17: 92, 18: 99, 19: 106, 20: 111, 21: 122, 22: 125, 23: 136,
          24: 143, 25: 153, 26: 159, 27: 167, 28: 172, 29: 182}


def default_table() -> RamseyTable:
    rows = []
    for l in range(1, 30):
        if l in _EXACT:
            rows.append(PartialValue.exact(_EXACT[l]))
        elif l in _BOUNDED:
            rows.append(PartialValue(*_BOUNDED[l]))
        else:
            rows.append(PartialValue(_LOWER[l], None))
    return RamseyTable(tuple(rows), PartialValue.exact(18))


def table_from_json(obj: dict) -> RamseyTable:
    entries = {}
    for row in obj["r3"]:
        entries[int(row["l"])] = PartialValue(int(row["lo"]), None if row.get("hi") is None else int(row["hi"]))
    if not entries:
        raise ValueError("table has no R(3,l) entries")
    top = max(entries)
    missing = [l for l in range(1, top + 1) if l not in entries]
    if missing:
        raise ValueError(f"table lacks entries for l = {missing}")
    r44 = PartialValue.unknown()
    if "r44" in obj:
        r = obj["r44"]
        r44 = PartialValue(r.get("lo"), r.get("hi"))
    return RamseyTable(tuple(entries[l] for l in range(1, top + 1)), r44)


def load_table(path: str) -> RamseyTable:
    with open(path, encoding="utf-8") as fh:
        return table_from_json(json.load(fh))


# -- validation -----------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    rule: str
    detail: str


def _diff_exceeds(t: RamseyTable, a: int, b: int, c: int) -> bool:
    """Provably R(3,a) - R(3,b) > c."""
    return t.lo(a) - (t.hi(b) if t.hi(b) is not None else 10**9) > c


def _diff_below(t: RamseyTable, a: int, b: int, c: int) -> bool:
    """Provably R(3,a) - R(3,b) < c."""
    ha = t.hi(a)
    return ha is not None and ha - t.lo(b) < c


# right-hand sides of the fixed-k difference rules: (k, least alpha, bound)
_SPAN_RULES = [(2, 3, 7), (3, 2, 11), (4, 3, 17), (5, 3, 22), (6, 3, 28), (7, 3, 34),
               (8, 4, 43), (9, 4, 48), (10, 4, 55), (11, 4, 62), (12, 4, 70), (13, 4, 78),
               (14, 3, 86)]


def validate_table(t: RamseyTable) -> list[Violation]:
    """Inequalities that the table provably breaks (empty when consistent)."""
    out: list[Violation] = []
    L = t.max_l
    for l in range(1, L):
        a = l  # R(3, a+1) - R(3, a)
        if t.hi(a + 1) is not None and t.hi(a + 1) <= t.lo(a):
            out.append(Violation("increasing", f"R(3,{a + 1}) <= R(3,{a})"))
        ra, rb = t.r(a), t.r(a + 1)
        both_even = ra.is_exact and rb.is_exact and ra.value % 2 == 0 and rb.value % 2 == 0
        cap = a if both_even else a + 1
        if _diff_exceeds(t, a + 1, a, cap):
            out.append(Violation("consecutive-upper",
                                 f"R(3,{a + 1}) - R(3,{a}) exceeds {cap} at alpha={a}"))
        if a >= 2:
            floor = 4 if both_even else 3
            if _diff_below(t, a + 1, a, floor):
                out.append(Violation("consecutive-lower",
                                     f"R(3,{a + 1}) - R(3,{a}) below {floor} at alpha={a}"))
    for k, least, bound in _SPAN_RULES:
        for a in range(least, L - k + 1):
            if _diff_below(t, a + k, a, bound):
                out.append(Violation(f"span-{k}", f"R(3,{a + k}) - R(3,{a}) below {bound} at alpha={a}"))
    for k in range(2, L):
        for a in range(k + 1, L - k + 1):
            rhs = t.lo(k + 1) + k - 1
            if _diff_below(t, a + k, a, rhs):
                out.append(Violation("span-general",
                                     f"R(3,{a + k}) - R(3,{a}) below R(3,{k + 1})+{k - 1} at alpha={a}"))
    for p in range(2, L + 1):
        for q in range(2, L + 2 - p):
            top = p + q - 1
            if top > L:
                continue
            rhs = t.lo(p) + t.lo(q) + min(p, q) - 2
            h = t.hi(top)
            if h is not None and h < rhs:
                out.append(Violation("superadditive",
                                     f"R(3,{top}) below R(3,{p}) + R(3,{q}) + {min(p, q) - 2}"))
    return out


def find_twins(t: RamseyTable, up_to: int | None = None) -> list[tuple[int, int]]:
    """Consecutive exact values R(3,l), R(3,l+1) at distance exactly 3."""
    top = t.max_l if up_to is None else min(up_to, t.max_l)
    out = []
    for l in range(1, top):
        a, b = t.r(l), t.r(l + 1)
        if a.is_exact and b.is_exact and b.value - a.value == 3:
            out.append((a.value, b.value))
    return out


# -- scenarios --------------------------------------------------------------

class Scenario:
    """One completion of the table up to a horizon.

    ``values[l-1]`` is R(3,l) when it is at most the horizon, else None.
    """

    __slots__ = ("values", "horizon", "_alpha")

    def __init__(self, values: tuple[int | None, ...], horizon: int) -> None:
        self.values = values
        self.horizon = horizon
        self._alpha: dict[int, int] = {}

    def alpha(self, m: int) -> int:
        if m > self.horizon:
            raise ValueError("beyond scenario horizon")
        a = self._alpha.get(m)
        if a is None:
            a = sum(1 for v in self.values if v is not None and v <= m)
            self._alpha[m] = a
        return a

    def is_ramsey(self, m: int) -> bool:
        return m in self.values

    def perfect_split(self, n: int) -> tuple[int, int] | None:
        if n % 2 or n < 10 or self.is_ramsey(n):
            return None
        an = self.alpha(n)
        for n1 in range(5, n // 2 + 1, 2):
            if self.alpha(n1) + self.alpha(n - n1) == an:
                return n1, n - n1
        return None

    def epsilon(self, n: int) -> int:
        if n % 2 == 0 and self.is_ramsey(n):
            return 1
        return 1 if self.perfect_split(n) else 0


SCENARIO_LIMIT = 20000


@lru_cache(maxsize=4096)
def scenarios(t: RamseyTable, horizon: int, limit: int = SCENARIO_LIMIT) -> tuple[Scenario, ...] | None:
    """All table completions visible below ``horizon``; None past the budget.

    Also None when the table may end at or below the horizon, since then
    R(3, max_l + 1) would matter and is not recorded.
    """
    L = t.max_l
    if t.lo(L) <= horizon:
        return None
    choices: list[list[int | None]] = []
    for l in range(1, L + 1):
        lo, hi = t.lo(l), t.hi(l)
        opts: list[int | None] = list(range(lo, min(hi if hi is not None else horizon, horizon) + 1))
        if hi is None or hi > horizon:
            opts.append(None)
        if not opts:
            return None
        choices.append(opts)

    out: list[Scenario] = []
    cur: list[int | None] = []

    def admissible(l: int, v: int | None) -> bool:
        if l == 1:
            return True
        prev = cur[-1]
        a = l - 1
        if prev is None:
            return v is None
        lo_d = 3 if a >= 2 else 1
        if v is None:
            lo_v = max(horizon + 1, prev + lo_d, t.lo(l))
            hi_v = prev + l
            if t.hi(l) is not None:
                hi_v = min(hi_v, t.hi(l))
            return lo_v <= hi_v
        d = v - prev
        cap = l - 1 if (v % 2 == 0 and prev % 2 == 0) else l
        floor = 4 if (a >= 2 and v % 2 == 0 and prev % 2 == 0) else lo_d
        return floor <= d <= cap

    def rec(l: int) -> bool:
        if l > L:
            out.append(Scenario(tuple(cur), horizon))
            return len(out) <= limit
        for v in choices[l - 1]:
            if admissible(l, v):
                cur.append(v)
                ok = rec(l + 1)
                cur.pop()
                if not ok:
                    return False
        return True

    if not rec(1):
        return None
    return tuple(out)


def over_scenarios(t: RamseyTable, horizon: int, fn: Callable[[Scenario], int],
                   limit: int = SCENARIO_LIMIT) -> PartialValue | None:
    scs = scenarios(t, horizon, limit)
    if not scs:
        return None
    vals = [fn(s) for s in scs]
    return PartialValue(min(vals), max(vals))


# -- alpha(n), epsilon(n) ---------------------------------------------------

def _alpha_interval(n: int, t: RamseyTable) -> PartialValue:
    lo = sum(1 for l in range(1, t.max_l + 1) if t.hi(l) is not None and t.hi(l) <= n)
    hi: int | None = sum(1 for l in range(1, t.max_l + 1) if t.lo(l) <= n)
    if t.lo(t.max_l) <= n:
        hi = None
    return PartialValue(lo, hi)


@lru_cache(maxsize=4096)
def alpha_of(n: int, t: RamseyTable) -> PartialValue:
    """Least stability number over triangle-free graphs on n vertices."""
    if n <= 0:
        return PartialValue.exact(0)
    plain = _alpha_interval(n, t)
    if plain.is_exact:
        return plain
    sc = over_scenarios(t, n, lambda s: s.alpha(n))
    return plain if sc is None else plain.meet(sc)


@lru_cache(maxsize=4096)
def is_ramsey_number(n: int, t: RamseyTable) -> PartialValue:
    """Whether n equals some R(3, l), as a 0/1 partial value."""
    maybe = False
    for l in range(1, t.max_l + 1):
        v = t.r(l)
        if v.is_exact and v.value == n:
            return YES
        if v.contains(n):
            maybe = True
    if t.lo(t.max_l) < n:
        maybe = True
    return MAYBE if maybe else NO


@lru_cache(maxsize=4096)
def epsilon_of(n: int, t: RamseyTable) -> PartialValue:
    if n <= 0:
        return NO
    if n % 2:
        return NO
    sc = over_scenarios(t, n, lambda s: s.epsilon(n))
    if sc is not None:
        return sc
    verdict, _ = is_ramsey_perfect(n, t)
    if is_ramsey_number(n, t) == YES or verdict == YES:
        return YES
    if is_ramsey_number(n, t) == NO and verdict == NO:
        return NO
    return MAYBE


# -- Ramsey-perfect numbers -------------------------------------------------

@dataclass(frozen=True)
class RamseyPerfectCertificate:
    n: int
    n1: int
    n2: int
    alpha1: int
    alpha2: int
    alpha_n: int
    ramsey_below: int  # R(3, alpha1 + alpha2), which equals n - 1

    def to_json(self) -> dict:
        return {"n": self.n, "n1": self.n1, "n2": self.n2, "alpha1": self.alpha1,
                "alpha2": self.alpha2, "alpha_n": self.alpha_n, "ramsey_below": self.ramsey_below}


def _perfect_by_ramsey_form(n: int, t: RamseyTable) -> bool:
    """n = R(3,a1+a2)+1 = (R(3,a1+1)-1) + (R(3,a2+1)-1), both R(3,ai+1) even."""
    for a1 in range(2, t.max_l):
        for a2 in range(2, a1 + 1):
            if a1 + a2 > t.max_l or a1 + 1 > t.max_l:
                continue
            r, r1, r2 = t.r(a1 + a2), t.r(a1 + 1), t.r(a2 + 1)
            if not (r.is_exact and r1.is_exact and r2.is_exact):
                continue
            if (r.value + 1 == n and r1.value - 1 + r2.value - 1 == n
                    and r1.value % 2 == 0 and r2.value % 2 == 0):
                return True
    return False


@lru_cache(maxsize=4096)
def is_ramsey_perfect(n: int, t: RamseyTable) -> tuple[PartialValue, RamseyPerfectCertificate | None]:
    """Decide Ramsey-perfectness from exact alpha values of n and its odd parts.

    Returns unknown whenever some alpha involved is not exact; the answer
    is cross-checked against the equivalent Ramsey-value form.
    """
    if n % 2 or n < 10:
        return NO, None
    ram = is_ramsey_number(n, t)
    if ram == YES:
        return NO, None
    an = alpha_of(n, t)
    parts = [(n1, alpha_of(n1, t), alpha_of(n - n1, t)) for n1 in range(5, n // 2 + 1, 2)]
    if ram != NO or not an.is_exact or not all(a.is_exact and b.is_exact for _, a, b in parts):
        return MAYBE, None
    cert = None
    for n1, a1, a2 in parts:
        if a1.value + a2.value == an.value:
            hi_part, lo_part = (n - n1, n1) if a2.value >= a1.value else (n1, n - n1)
            alpha1, alpha2 = max(a1.value, a2.value), min(a1.value, a2.value)
            below = t.r(alpha1 + alpha2)
            cert = RamseyPerfectCertificate(n, lo_part, hi_part, alpha1, alpha2, an.value,
                                            below.value if below.is_exact else -1)
            break
    by_form = _perfect_by_ramsey_form(n, t)
    if by_form != (cert is not None):
        raise InconsistencyError(f"Ramsey-perfect characterisations disagree at n={n}")
    return (YES, cert) if cert else (NO, None)


def perfect_numbers(t: RamseyTable, up_to: int) -> list[int]:
    return [n for n in range(1, up_to + 1) if is_ramsey_perfect(n, t)[0] == YES]


def exact_horizon(t: RamseyTable) -> int:
    """Largest n for which alpha(m) is exact for every m <= n."""
    n = 0
    while _alpha_interval(n + 1, t).is_exact:
        n += 1
    return n


def iter_exact_values(t: RamseyTable) -> Iterable[tuple[int, int]]:
    for l in range(1, t.max_l + 1):
        v = t.r(l)
        if v.is_exact:
            yield l, v.value


__all__ = [
    "PartialValue", "RamseyTable", "Violation", "RamseyPerfectCertificate", "Scenario",
    "InconsistencyError", "YES", "NO", "MAYBE", "default_table", "table_from_json", "load_table",
    "validate_table", "find_twins", "alpha_of", "epsilon_of", "is_ramsey_perfect",
    "is_ramsey_number", "perfect_numbers", "scenarios", "over_scenarios", "exact_horizon",
    "iter_exact_values",
]
