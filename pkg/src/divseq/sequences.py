"""Memoized integer sequences: recurrence families and divisibility-preserving
combinators.

Every sequence is defined on n >= 1, evaluates to exact Python ints, and
carries a provenance flag saying which divisibility guarantee (if any) it
inherits. Verification code uses the flags purely as report labels; it never
skips a check because of them.
"""

from __future__ import annotations

import threading

__all__ = [
    "Sequence",
    "TableRangeError",
    "make_theorem4",
    "make_theorem5_phi",
    "make_theorem5_psi",
    "constant",
    "linear_combine",
    "dilate",
    "dilate_odd",
    "product",
    "parse_table",
    "load_table",
    "MAP_DERIVED_PHI",
    "ODD_MAP_DERIVED_PSI",
    "PHI1_CLOSURE",
    "NO_GUARANTEE",
]

# Provenance flags. MAP_DERIVED_PHI marks fixed-point counts of some self-map
# (phi1 values divisible by n); ODD_MAP_DERIVED_PSI marks g^n(x) = -x counts
# of some odd self-map (phi2 values divisible by 2n); PHI1_CLOSURE marks
# sequences whose phi1 divisibility survives via linear-combination closure
# but which are not known to count anything.
MAP_DERIVED_PHI = "map-derived-phi"
ODD_MAP_DERIVED_PSI = "odd-map-derived-psi"
PHI1_CLOSURE = "phi1-closure"
NO_GUARANTEE = "no-guarantee"

_PHI1_SAFE = (MAP_DERIVED_PHI, PHI1_CLOSURE)


class TableRangeError(LookupError):
    """Evaluation past the end of an external value table."""


class Sequence:
    """Integer-valued function on n >= 1 with a memoized, append-only cache.

    Values are filled bottom-up (never by recursion on n), so recurrence
    evaluation is linear time and safe at any depth. The cache is guarded by
    a lock; concurrent eval() calls return identical values.
    """

    kind = "abstract"

    def __init__(self, seq_id: str, params: dict | None = None,
                 guarantee: str = NO_GUARANTEE):
        self.id = seq_id
        self.params = dict(params or {})
        self.guarantee = guarantee
        self._lock = threading.Lock()
        self._values: list[int] = []

    def eval(self, n: int) -> int:
        if n < 1:
            raise ValueError(f"sequence domain is n >= 1, got {n}")
        if n > len(self._values):
            with self._lock:
                while len(self._values) < n:
                    self._values.append(self._compute(len(self._values) + 1))
        return self._values[n - 1]

    def __call__(self, n: int) -> int:
        return self.eval(n)

    def _compute(self, n: int) -> int:
        """Value at n; may read self._values[:n-1], which is already filled."""
        raise NotImplementedError

    def __repr__(self):
        return f"<{type(self).__name__} {self.id}>"


class ConstantSequence(Sequence):
    kind = "constant"

    def __init__(self, value: int):
        super().__init__(f"const({value})", {"value": value}, PHI1_CLOSURE)
        self.value = value

    def _compute(self, n: int) -> int:
        return self.value


class Theorem4Sequence(Sequence):
    """The theorem4 family: m*(2**n - 1) + k seeded up to n = j, then an
    order-j sum recurrence with a constant correction -(j-1)*k."""

    kind = "theorem4"

    def __init__(self, j: int, k: int, m: int):
        if j < 2:
            raise ValueError(f"theorem4 requires j >= 2, got {j}")
        # k=0, m=1 is the plain 2**n - 1 family, which counts fixed points of
        # an interval map; any other offset is a linear-combination closure.
        guarantee = MAP_DERIVED_PHI if (k == 0 and m == 1) else PHI1_CLOSURE
        super().__init__(f"theorem4(j={j},k={k},m={m})",
                         {"j": j, "k": k, "m": m}, guarantee)
        self.j, self.k, self.m = j, k, m

    def _compute(self, n: int) -> int:
        if n <= self.j:
            return self.m * (2**n - 1) + self.k
        return sum(self._values[n - 1 - self.j : n - 1]) - (self.j - 1) * self.k


def _zigzag_coeffs(j: int) -> tuple[int, ...]:
    """Coefficients of the order-(2j-1) recurrence shared by the theorem5
    families: 2i-1 for lags i = 1..j, then 4j-2i-1 for lags i = j+1..2j-1."""
    head = [2 * i - 1 for i in range(1, j + 1)]
    tail = [4 * j - 2 * i - 1 for i in range(j + 1, 2 * j)]
    return tuple(head + tail)


class Theorem5PhiSequence(Sequence):
    """The theorem5-phi family: counts of solutions of h^n(x) = x for the
    zigzag map of [-j, j] (see divseq.interval_map.build_gj)."""

    kind = "theorem5-phi"

    def __init__(self, j: int):
        if j < 2:
            raise ValueError(f"theorem5-phi requires j >= 2, got {j}")
        super().__init__(f"theorem5phi(j={j})", {"j": j}, MAP_DERIVED_PHI)
        self.j = j
        self._coeffs = _zigzag_coeffs(j)

    def _compute(self, n: int) -> int:
        j = self.j
        if n <= j:
            return 3**n - 2
        if n <= 2 * j - 1:
            return 3**n - 2 - 4 * n * 3 ** (n - j - 1)
        return sum(c * self._values[n - 1 - i]
                   for i, c in enumerate(self._coeffs, start=1))


class Theorem5PsiSequence(Sequence):
    """The theorem5-psi family: counts of solutions of h^n(x) = -x for the
    zigzag map of [-j, j]; same recurrence coefficients as theorem5-phi."""

    kind = "theorem5-psi"

    def __init__(self, j: int):
        if j < 2:
            raise ValueError(f"theorem5-psi requires j >= 2, got {j}")
        super().__init__(f"theorem5psi(j={j})", {"j": j}, ODD_MAP_DERIVED_PSI)
        self.j = j
        self._coeffs = _zigzag_coeffs(j)

    def _compute(self, n: int) -> int:
        j = self.j
        if n <= j - 1:
            return 3**n
        if n == j:
            return 3**j - 2 * j
        if n <= 2 * j - 1:
            return 3**n - 4 * n * 3 ** (n - j - 1)
        return sum(c * self._values[n - 1 - i]
                   for i, c in enumerate(self._coeffs, start=1))


class TableSequence(Sequence):
    """Values loaded from an external table; evaluation past the end is an
    error, never an extrapolation."""

    kind = "external-table"

    def __init__(self, values, source: str = "<table>"):
        values = tuple(int(v) for v in values)
        super().__init__(f"table({source})",
                         {"source": source, "length": len(values)})
        self._table = values

    def eval(self, n: int) -> int:
        # report the requested n, not the cache-fill position it would
        # otherwise fail at
        if n > len(self._table):
            raise TableRangeError(
                f"{self.id} holds {len(self._table)} values; n={n} is out of range")
        return super().eval(n)

    def _compute(self, n: int) -> int:
        return self._table[n - 1]


class LinearCombinationSequence(Sequence):
    kind = "linear-combination"

    def __init__(self, k: int, a: Sequence, m: int, b: Sequence):
        # phi1 is linear, so phi1 divisibility survives any integer
        # combination; phi2 is not linear (its power-of-two branch subtracts
        # 1), so no psi guarantee ever propagates here.
        ok = a.guarantee in _PHI1_SAFE and b.guarantee in _PHI1_SAFE
        super().__init__(f"lin({k},{a.id},{m},{b.id})",
                         {"k": k, "m": m},
                         PHI1_CLOSURE if ok else NO_GUARANTEE)
        self.k, self.m = k, m
        self.a, self.b = a, b

    def _compute(self, n: int) -> int:
        return self.k * self.a(n) + self.m * self.b(n)


class DilationSequence(Sequence):
    """n -> seq(k*n). Divisibility transfers only from map-derived input:
    sampling a map's count sequence at multiples of k is the count sequence
    of the k-th iterate of the same map (an odd map when k is odd)."""

    kind = "dilation"

    def __init__(self, seq: Sequence, k: int, seq_id: str, guarantee: str):
        super().__init__(seq_id, {"k": k}, guarantee)
        self.base = seq
        self.k = k

    def _compute(self, n: int) -> int:
        return self.base(self.k * n)


class ProductSequence(Sequence):
    kind = "product"

    def __init__(self, seqs):
        seqs = tuple(seqs)
        if not seqs:
            raise ValueError("product requires at least one sequence")
        if len(seqs) == 1:
            guarantee = seqs[0].guarantee
        elif all(s.guarantee == MAP_DERIVED_PHI for s in seqs):
            # counts multiply: the product map on the product space has this
            # many n-periodic points
            guarantee = MAP_DERIVED_PHI
        elif all(s.guarantee == ODD_MAP_DERIVED_PSI for s in seqs):
            guarantee = ODD_MAP_DERIVED_PSI
        else:
            guarantee = NO_GUARANTEE
        super().__init__("prod(%s)" % ",".join(s.id for s in seqs),
                         {"arity": len(seqs)}, guarantee)
        self.factors = seqs

    def _compute(self, n: int) -> int:
        out = 1
        for s in self.factors:
            out *= s(n)
        return out


def make_theorem4(j: int, k: int, m: int) -> Sequence:
    """Sequence with base values m*(2**n - 1) + k for n <= j and recurrence
    sum of the previous j values minus (j-1)*k afterwards. j >= 2."""
    return Theorem4Sequence(j, k, m)


def make_theorem5_phi(j: int) -> Sequence:
    """The theorem5-phi family for j >= 2: 3**n - 2 up to n = j, a middle band
    3**n - 2 - 4n*3**(n-j-1), then the order-(2j-1) recurrence."""
    return Theorem5PhiSequence(j)


def make_theorem5_psi(j: int) -> Sequence:
    """The theorem5-psi family for j >= 2: 3**n up to n = j-1, 3**j - 2j at
    n = j, a middle band 3**n - 4n*3**(n-j-1), then the shared recurrence."""
    return Theorem5PsiSequence(j)


def constant(value: int) -> Sequence:
    return ConstantSequence(value)


def linear_combine(k: int, seq1: Sequence, m: int, seq2: Sequence) -> Sequence:
    """Pointwise k*seq1(n) + m*seq2(n)."""
    return LinearCombinationSequence(k, seq1, m, seq2)


def dilate(seq: Sequence, k: int) -> Sequence:
    """n -> seq(k*n) for k >= 1; keeps the map-derived-phi flag when present."""
    if k < 1:
        raise ValueError(f"dilate requires k >= 1, got {k}")
    guarantee = MAP_DERIVED_PHI if seq.guarantee == MAP_DERIVED_PHI else NO_GUARANTEE
    return DilationSequence(seq, k, f"dilate({seq.id},{k})", guarantee)


def dilate_odd(seq: Sequence, k: int) -> Sequence:
    """n -> seq(k*n) for odd k >= 1; keeps the odd-map-derived-psi flag when
    present (even k would break the symmetric-orbit structure)."""
    if k < 1 or k % 2 == 0:
        raise ValueError(f"dilate_odd requires odd k >= 1, got {k}")
    guarantee = (ODD_MAP_DERIVED_PSI if seq.guarantee == ODD_MAP_DERIVED_PSI
                 else NO_GUARANTEE)
    return DilationSequence(seq, k, f"dilateodd({seq.id},{k})", guarantee)


def product(seqs) -> Sequence:
    """Pointwise product of a nonempty list of sequences."""
    return ProductSequence(seqs)


def parse_table(text: str, source: str = "<table>") -> Sequence:
    """Parse an external table: one decimal signed integer per line, line i
    holding the value at n = i; blank lines and # comments are ignored."""
    values = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            values.append(int(line))
        except ValueError:
            raise ValueError(f"{source}:{lineno}: not a decimal integer: {line!r}")
    return TableSequence(values, source)


def load_table(path) -> Sequence:
    with open(path, encoding="utf-8") as fh:
        return parse_table(fh.read(), source=str(path))
