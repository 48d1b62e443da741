"""Population sequences R, R1, R2 by closed-form recursion.

R(n) is the number of nonzero cells at step n of any of the four lifts
started from the single seed; R1 and R2 count cells of value 1 and 2.
The power-of-two splitting recursions give any term in O(log n) recursive
steps with a shared memo cache, so indices around 2^60 stay cheap; this is
the fast-path counterpart of full simulation.

Cross-relations: R2(n+1) = R1(n); R(n) = R2(n) + R2(n+1);
R(n) = R1(2n) = R2(2n+1).

All arithmetic is plain Python integers, so large indices never overflow.
The memo caches are plain dicts mutated under the GIL: individual lookups
and stores are atomic and values are immutable once written, so concurrent
queries are safe (a race at worst recomputes the same value).
"""

from __future__ import annotations

import enum


class SeqId(enum.Enum):
    R = "R"
    R1 = "R1"
    R2 = "R2"


class IndexOutOfRangeError(ValueError):
    """Index below the base domain of the requested sequence."""


class RelationViolationError(AssertionError):
    """A cross-relation between R, R1, R2 failed (implementation bug)."""


def binary_weight(k: int) -> int:
    """Number of ones in the binary expansion of k."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return k.bit_count()


def linear_count(dim: str, k: int) -> int:
    """Population of the linear CA at step k from a single seed.

    'one' is the 1-D rule a_i -> a_{i-1} + a_{i+1} mod 2 ("rule 90"),
    giving 2^weight; 'two' is first-order C1 or C2, giving 4^weight.
    """
    if dim == "one":
        return 1 << binary_weight(k)
    if dim == "two":
        return 1 << (2 * binary_weight(k))
    raise ValueError(f"dim must be 'one' or 'two', got {dim!r}")


_memo_r: dict[int, int] = {0: 1}
_memo_r1: dict[int, int] = {-1: 0, 0: 1}
_memo_r2: dict[int, int] = {0: 0, 1: 1}


def clear_cache() -> None:
    """Drop memoized values (used for cold-start timing)."""
    _memo_r.clear()
    _memo_r.update({0: 1})
    _memo_r1.clear()
    _memo_r1.update({-1: 0, 0: 1})
    _memo_r2.clear()
    _memo_r2.update({0: 0, 1: 1})


def _split(n: int) -> tuple[int, int]:
    """n = 2^k + j with the largest power 2^k <= n; returns (k, j)."""
    k = n.bit_length() - 1
    return k, n - (1 << k)


def _r(n: int) -> int:
    v = _memo_r.get(n)
    if v is None:
        k, j = _split(n)  # R(2^k + j) = 4 R(j) + R(2^k - j - 1)
        v = 4 * _r(j) + _r((1 << k) - j - 1)
        _memo_r[n] = v
    return v


def _r1(n: int) -> int:
    v = _memo_r1.get(n)
    if v is None:
        k, j = _split(n)  # R1(2^k + j) = 4 R1(j) + R1(2^k - j - 2)
        v = 4 * _r1(j) + _r1((1 << k) - j - 2)
        _memo_r1[n] = v
    return v


def _r2(n: int) -> int:
    v = _memo_r2.get(n)
    if v is None:
        k, j = _split(n)
        if j == 0:  # n = 2^k: resplit as 2^{k-1} + 2^{k-1} (j = 0 is circular)
            k, j = k - 1, 1 << (k - 1)
        # R2(2^k + j) = 4 R2(j) + R2(2^k - j), 0 < j <= 2^k
        v = 4 * _r2(j) + _r2((1 << k) - j)
        _memo_r2[n] = v
    return v


def seq_value(which: SeqId, n: int) -> int:
    """Sequence term by the power-of-two splitting recursion.

    Domains: R and R2 need n >= 0; R1 allows n >= -1 (the step before the
    seed exists because the automata are reversible, and R1(-1) = 0).
    """
    if which is SeqId.R1:
        if n < -1:
            raise IndexOutOfRangeError(f"R1 needs n >= -1, got {n}")
        return _r1(n)
    if n < 0:
        raise IndexOutOfRangeError(f"{which.value} needs n >= 0, got {n}")
    return _r(n) if which is SeqId.R else _r2(n)


_memo_alt1: dict[int, int] = {0: 1, 1: 4}
_memo_alt2: dict[int, int] = {0: 0, 1: 1}


def _alt1(n: int) -> int:
    v = _memo_alt1.get(n)
    if v is None:
        if n & 1:  # R1(2m + 1) = 4 R1(m)
            v = 4 * _alt1(n >> 1)
        else:      # R1(2m + 2) = R1(m) + R1(m + 1)
            m = (n - 2) >> 1
            v = _alt1(m) + _alt1(m + 1)
        _memo_alt1[n] = v
    return v


def _alt2(n: int) -> int:
    v = _memo_alt2.get(n)
    if v is None:
        if n & 1:  # R2(2m + 1) = R2(m) + R2(m + 1)
            m = n >> 1
            v = _alt2(m) + _alt2(m + 1)
        else:      # R2(2m) = 4 R2(m)
            v = 4 * _alt2(n >> 1)
        _memo_alt2[n] = v
    return v


def seq_value_alt(which: SeqId, n: int) -> int:
    """R1 or R2 by the parity-split recursion; agrees with seq_value."""
    if n < 0:
        raise IndexOutOfRangeError(f"alt recursion needs n >= 0, got {n}")
    if which is SeqId.R1:
        return _alt1(n)
    if which is SeqId.R2:
        return _alt2(n)
    raise ValueError("alt recursion is defined for R1 and R2 only")


class SequenceTable:
    """Rows (n, R, R1, R2) for n = 0..n_max with cross-relations verified."""

    def __init__(self, rows: list[tuple[int, int, int, int]]):
        self.rows = rows

    def __len__(self) -> int:
        return len(self.rows)

    def __getitem__(self, idx: int) -> tuple[int, int, int, int]:
        return self.rows[idx]

    def to_csv(self) -> str:
        lines = ["n,R,R1,R2"]
        lines.extend(f"{n},{r},{r1},{r2}" for n, r, r1, r2 in self.rows)
        return "\n".join(lines) + "\n"

    def to_json_obj(self) -> list[dict[str, int]]:
        return [{"n": n, "R": r, "R1": r1, "R2": r2}
                for n, r, r1, r2 in self.rows]


def build_table(n_max: int) -> SequenceTable:
    """Tabulate the three sequences, asserting every cross-relation.

    Raises :class:`RelationViolationError` on any internal inconsistency;
    that never happens for a correct implementation.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    rows = []
    for n in range(n_max + 1):
        r, r1, r2 = _r(n), _r1(n), _r2(n)
        if _r2(n + 1) != r1:
            raise RelationViolationError(f"R2({n + 1}) != R1({n})")
        if r != r2 + _r2(n + 1):
            raise RelationViolationError(f"R({n}) != R2({n}) + R2({n + 1})")
        if r != _r1(2 * n) or r != _r2(2 * n + 1):
            raise RelationViolationError(f"R({n}) != R1({2 * n}) = R2({2 * n + 1})")
        rows.append((n, r, r1, r2))
    return SequenceTable(rows)
