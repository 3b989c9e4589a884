"""Exact piecewise-linear self-maps of a compact interval.

This is the brute-force oracle behind everything else: compose and iterate
maps with exact rational breakpoints, then count solutions of f^n(x) = x and
g^n(x) = -x by enumerating sign changes segment by segment. No floats
anywhere; equality of solutions is equality of reduced fractions.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from fractions import Fraction

__all__ = [
    "PLMap",
    "PieceCapExceededError",
    "InfiniteSolutionsError",
    "DEFAULT_PIECE_CAP",
    "build_gj",
    "compose",
    "iterate",
    "fixed_point_solutions",
    "antifixed_point_solutions",
    "count_fixed",
    "count_antifixed",
    "is_odd_map",
    "parse_map_file",
    "load_map_file",
]

# Iterates of the zigzag maps grow like 3**n pieces; the cap turns runaway
# composition into a clean error at roughly n = 14 instead of an OOM.
DEFAULT_PIECE_CAP = 10_000_000


class PieceCapExceededError(RuntimeError):
    """Composition would produce more linear pieces than the configured cap."""


class InfiniteSolutionsError(ArithmeticError):
    """A linear piece coincides with the line being solved against, so the
    solution set is a whole interval rather than a finite set of points."""


class PLMap:
    """Continuous piecewise-linear self-map of [xs[0], xs[-1]].

    Stored as parallel tuples of breakpoints xs (strictly increasing
    Fractions, at least two) and values ys; linear interpolation in between.
    Every value must lie inside the domain, so any PLMap is a self-map and
    iteration is always defined. Instances are immutable.
    """

    __slots__ = ("xs", "ys")

    def __init__(self, xs, ys):
        xs = tuple(Fraction(x) for x in xs)
        ys = tuple(Fraction(y) for y in ys)
        if len(xs) != len(ys):
            raise ValueError(f"{len(xs)} breakpoints but {len(ys)} values")
        if len(xs) < 2:
            raise ValueError("a map needs at least 2 breakpoints")
        for a, b in zip(xs, xs[1:]):
            if not a < b:
                raise ValueError(f"breakpoints not strictly increasing at {a}")
        lo, hi = xs[0], xs[-1]
        for x, y in zip(xs, ys):
            if not lo <= y <= hi:
                raise ValueError(
                    f"not a self-map: value {y} at x={x} is outside [{lo}, {hi}]")
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "ys", ys)

    def __setattr__(self, name, value):
        raise AttributeError("PLMap is immutable")

    @property
    def domain(self) -> tuple[Fraction, Fraction]:
        return (self.xs[0], self.xs[-1])

    @property
    def pieces(self) -> int:
        return len(self.xs) - 1

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        xs, ys = self.xs, self.ys
        if not xs[0] <= x <= xs[-1]:
            raise ValueError(f"{x} is outside the domain [{xs[0]}, {xs[-1]}]")
        i = bisect_right(xs, x) - 1
        if i >= len(xs) - 1:
            return ys[-1]
        x0, x1 = xs[i], xs[i + 1]
        y0, y1 = ys[i], ys[i + 1]
        return y0 + (y1 - y0) * (x - x0) / (x1 - x0)

    def __eq__(self, other):
        if not isinstance(other, PLMap):
            return NotImplemented
        return self.xs == other.xs and self.ys == other.ys

    def __hash__(self):
        return hash((self.xs, self.ys))

    def __repr__(self):
        lo, hi = self.domain
        return f"<PLMap [{lo}, {hi}] with {self.pieces} pieces>"


def build_gj(j: int) -> PLMap:
    """The zigzag map of [-j, j]: x+1 on [-j, -2], -1 -> j, 1 -> -j, x-1 on
    [2, j], linear across [-2, -1], [-1, 1], [1, 2]. Odd by construction."""
    if j < 2:
        raise ValueError(f"build_gj requires j >= 2, got {j}")
    xs = list(range(-j, 0)) + list(range(1, j + 1))
    ys = []
    for x in xs:
        if x == -1:
            ys.append(j)
        elif x == 1:
            ys.append(-j)
        elif x < 0:
            ys.append(x + 1)
        else:
            ys.append(x - 1)
    return PLMap(xs, ys)


def _pruned(xs: list[Fraction], ys: list[Fraction]):
    """Drop interior nodes where three consecutive points are collinear."""
    out_x = [xs[0]]
    out_y = [ys[0]]
    for x2, y2 in zip(xs[1:], ys[1:]):
        while len(out_x) >= 2:
            x0, x1 = out_x[-2], out_x[-1]
            y0, y1 = out_y[-2], out_y[-1]
            # collinear iff slopes match: cross-multiplied to stay in integers
            if (y1 - y0) * (x2 - x1) == (y2 - y1) * (x1 - x0):
                out_x.pop()
                out_y.pop()
            else:
                break
        out_x.append(x2)
        out_y.append(y2)
    return out_x, out_y


def compose(outer: PLMap, inner: PLMap,
            piece_cap: int = DEFAULT_PIECE_CAP) -> PLMap:
    """Exact composition outer(inner(x)) on inner's domain.

    Breakpoints are inner's nodes plus, on every non-constant inner segment,
    the preimages of outer's breakpoints whose levels fall strictly between
    the segment's endpoint values. The result is linear on each cell, so
    evaluating at the nodes determines it.
    """
    lo, hi = outer.domain
    if min(inner.ys) < lo or max(inner.ys) > hi:
        raise ValueError("range of inner map exceeds domain of outer map")
    levels = outer.xs
    new_xs: list[Fraction] = [inner.xs[0]]
    for i in range(len(inner.xs) - 1):
        x0, x1 = inner.xs[i], inner.xs[i + 1]
        y0, y1 = inner.ys[i], inner.ys[i + 1]
        if y0 < y1:
            for b in levels[bisect_right(levels, y0):bisect_left(levels, y1)]:
                new_xs.append(x0 + (b - y0) * (x1 - x0) / (y1 - y0))
        elif y0 > y1:
            cut = levels[bisect_right(levels, y1):bisect_left(levels, y0)]
            for b in reversed(cut):
                new_xs.append(x0 + (b - y0) * (x1 - x0) / (y1 - y0))
        # constant segments (y0 == y1) contribute no cuts
        new_xs.append(x1)
    if len(new_xs) - 1 > piece_cap:
        raise PieceCapExceededError(
            f"composition needs {len(new_xs) - 1} pieces; cap is {piece_cap}")
    new_ys = [outer(inner(x)) for x in new_xs]
    return PLMap(*_pruned(new_xs, new_ys))


def iterate(f: PLMap, n: int, piece_cap: int = DEFAULT_PIECE_CAP) -> PLMap:
    """The n-th iterate f composed with itself, n >= 1; iterate(f, 1) is f."""
    if n < 1:
        raise ValueError(f"iterate requires n >= 1, got {n}")
    power = f
    for k in range(2, n + 1):
        try:
            power = compose(f, power, piece_cap)
        except PieceCapExceededError as exc:
            raise PieceCapExceededError(f"at iterate n={k}: {exc}") from None
    return power


def _line_solutions(f: PLMap, sign: int) -> tuple[Fraction, ...]:
    """All x with f(x) = sign*x, found segmentwise; shared-breakpoint roots
    deduplicate through the set."""
    line = "x" if sign > 0 else "-x"
    sols: set[Fraction] = set()
    xs, ys = f.xs, f.ys
    for i in range(len(xs) - 1):
        x0, x1 = xs[i], xs[i + 1]
        d0 = ys[i] - sign * x0
        d1 = ys[i + 1] - sign * x1
        if d0 == 0 and d1 == 0:
            raise InfiniteSolutionsError(
                f"segment [{x0}, {x1}] coincides with y = {line}")
        if d0 == 0:
            sols.add(x0)
        if d1 == 0:
            sols.add(x1)
        if (d0 > 0 > d1) or (d0 < 0 < d1):
            sols.add(x0 + (x1 - x0) * d0 / (d0 - d1))
    return tuple(sorted(sols))


def fixed_point_solutions(f: PLMap, n: int = 1,
                          piece_cap: int = DEFAULT_PIECE_CAP):
    """Sorted exact solutions of f^n(x) = x."""
    return _line_solutions(iterate(f, n, piece_cap), 1)


def antifixed_point_solutions(g: PLMap, n: int = 1,
                              piece_cap: int = DEFAULT_PIECE_CAP):
    """Sorted exact solutions of g^n(x) = -x; requires a domain symmetric
    about 0 so that -x stays inside it."""
    lo, hi = g.domain
    if lo != -hi:
        raise ValueError(f"domain [{lo}, {hi}] is not symmetric about 0")
    return _line_solutions(iterate(g, n, piece_cap), -1)


def count_fixed(f: PLMap, n: int = 1, piece_cap: int = DEFAULT_PIECE_CAP) -> int:
    """Number of distinct solutions of f^n(x) = x."""
    return len(fixed_point_solutions(f, n, piece_cap))


def count_antifixed(g: PLMap, n: int = 1,
                    piece_cap: int = DEFAULT_PIECE_CAP) -> int:
    """Number of distinct solutions of g^n(x) = -x."""
    return len(antifixed_point_solutions(g, n, piece_cap))


def is_odd_map(f: PLMap) -> bool:
    """True iff the domain is symmetric about 0 and f(-x) = -f(x) everywhere.

    Checking on the union of f's nodes and their negations suffices: between
    adjacent points of that set both f(x) and -f(-x) are linear, so agreement
    at the points forces agreement on the intervals.
    """
    lo, hi = f.domain
    if lo != -hi:
        return False
    nodes = sorted(set(f.xs) | {-x for x in f.xs})
    return all(f(-x) == -f(x) for x in nodes)


def parse_map_file(text: str, source: str = "<map>") -> PLMap:
    """Parse the map file format: a header line `domain lo hi`, then one
    `x y` pair per line with rationals written as p/q or plain integers,
    strictly increasing x from lo to hi. Blank lines and # comments are
    ignored."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    if not lines:
        raise ValueError(f"{source}: empty map file")

    def rational(token, lineno):
        try:
            return Fraction(token)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"{source}:{lineno}: bad rational {token!r}") from None

    headno, header = lines[0]
    parts = header.split()
    if len(parts) != 3 or parts[0] != "domain":
        raise ValueError(f"{source}:{headno}: expected header 'domain lo hi'")
    lo, hi = rational(parts[1], headno), rational(parts[2], headno)

    xs, ys = [], []
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"{source}:{lineno}: expected 'x y', got {line!r}")
        xs.append(rational(parts[0], lineno))
        ys.append(rational(parts[1], lineno))
    if not xs or xs[0] != lo or xs[-1] != hi:
        raise ValueError(
            f"{source}: node list must start at x={lo} and end at x={hi}")
    try:
        return PLMap(xs, ys)
    except ValueError as exc:
        raise ValueError(f"{source}: {exc}") from None


def load_map_file(path) -> PLMap:
    with open(path, encoding="utf-8") as fh:
        return parse_map_file(fh.read(), source=str(path))
