"""Integer arrays with constant column sums used as labeling gadgets.

All builders produce entries on ``1..n*m`` (``1..2nm`` jointly for the B/C
pair); callers place a block at a label offset with :meth:`RectArray.shifted`.
Indices passed to :meth:`RectArray.at` are 1-based, matching ``a_{i,j}``.
"""

from __future__ import annotations

from dataclasses import dataclass


class RectangleError(ValueError):
    pass


@dataclass(frozen=True)
class RectArray:
    entries: tuple[tuple[int, ...], ...]
    offset: int = 0
    degenerate: bool = False

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def at(self, i: int, j: int) -> int:
        return self.entries[i - 1][j - 1]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j - 1] for row in self.entries)

    def column_sums(self) -> list[int]:
        return column_sums(self)

    def shifted(self, k: int) -> RectArray:
        return RectArray(tuple(tuple(x + k for x in row) for row in self.entries),
                         self.offset + k, self.degenerate)

    def values(self) -> list[int]:
        return [x for row in self.entries for x in row]

    def is_bijective(self) -> bool:
        lo = self.offset + 1
        return sorted(self.values()) == list(range(lo, lo + self.rows * self.cols))

    def dump(self) -> str:
        lines = [f"{self.rows} {self.cols} {self.offset}"]
        lines += [" ".join(map(str, row)) for row in self.entries]
        return "\n".join(lines) + "\n"


def column_sums(R: RectArray) -> list[int]:
    return [sum(row[j] for row in R.entries) for j in range(R.cols)]


def _from_fn(n: int, m: int, fn) -> RectArray:
    return RectArray(tuple(tuple(fn(i, j) for j in range(1, m + 1)) for i in range(1, n + 1)))


def matrix_a(n: int, m: int) -> RectArray:
    """n even: rows alternate ascending/descending runs; columns sum to n(nm+1)/2."""
    if n < 2 or n % 2:
        raise RectangleError(f"matrix A needs an even row count >= 2, got {n}")
    if m < 1:
        raise RectangleError("matrix A needs m >= 1")
    return _from_fn(n, m, lambda i, j: (i - 1) * m + j if i % 2 else i * m + 1 - j)


def _b_entry(i: int, j: int, m: int) -> int:
    if i == 1:
        return j
    if i == 2:
        return j + m
    if i == 3:
        return 4 * m - (2 * j - 2)
    if i % 2 == 0:
        return 6 * m + 2 * j - 1 + 2 * m * (i - 4)
    return 2 * i * m - (2 * j - 1)


def _c_entry(i: int, j: int, m: int) -> int:
    if i == 1:
        return 4 * m + 1 - 2 * j
    if i == 2:
        return 4 * m + j
    if i == 3:
        return 5 * m + j
    if i % 2 == 0:
        return 6 * m + 2 * j + 2 * m * (i - 4)
    return 2 * i * m - (2 * j - 2)


def _check_odd(n: int, m: int, what: str) -> None:
    if n < 3 or n % 2 == 0:
        raise RectangleError(f"{what} needs an odd row count >= 3, got {n}")
    if m < 1:
        raise RectangleError(f"{what} needs m >= 1")


def matrix_b(n: int, m: int) -> RectArray:
    """n odd; with :func:`matrix_c` covers 1..2nm.  Columns sum to mn^2 - 4m + 2."""
    _check_odd(n, m, "matrix B")
    return _from_fn(n, m, lambda i, j: _b_entry(i, j, m))


def matrix_c(n: int, m: int) -> RectArray:
    """Partner of :func:`matrix_b`.  Columns sum to mn^2 + 4m + n - 2."""
    _check_odd(n, m, "matrix C")
    return _from_fn(n, m, lambda i, j: _c_entry(i, j, m))


def b_column_sum(n: int, m: int) -> int:
    return m * n * n - 4 * m + 2


def c_column_sum(n: int, m: int) -> int:
    return m * n * n + 4 * m + n - 2


def magic_rectangle(n: int, m: int) -> RectArray:
    """Odd n x m array on 1..nm whose columns all sum to n(nm+1)/2.

    Three seed rows carry 1..3m; each further pair of rows takes the next 2m
    values as ``x`` and ``lo + hi - x``.  Row sums are not balanced.
    """
    if n < 1 or m < 1 or n % 2 == 0 or m % 2 == 0:
        raise RectangleError(f"magic rectangle needs odd dimensions, got {n}x{m}")
    if n == 1:
        # column sums are the entries themselves
        return RectArray((tuple(range(1, m + 1)),), degenerate=m > 1)
    k = (m + 1) // 2
    top = 3 * (3 * m + 1) // 2
    first = [j for j in range(1, m + 1)]
    second = [m + (j - 1 + k) % m + 1 for j in range(1, m + 1)]
    third = [top - a - b for a, b in zip(first, second)]
    rows = [first, second, third]
    lo = 3 * m + 1
    for _ in range((n - 3) // 2):
        hi = lo + 2 * m - 1
        up = list(range(lo, lo + m))
        rows += [up, [lo + hi - x for x in up]]
        lo = hi + 1
    R = RectArray(tuple(tuple(r) for r in rows))
    sums = column_sums(R)
    if not R.is_bijective() or any(s != n * (n * m + 1) // 2 for s in sums):
        raise AssertionError(f"magic rectangle construction failed for {n}x{m}")
    return R


def build(kind: str, n: int, m: int) -> RectArray:
    kinds = {"A": matrix_a, "B": matrix_b, "C": matrix_c, "magic": magic_rectangle}
    try:
        return kinds[kind](n, m)
    except KeyError:
        raise RectangleError(f"unknown rectangle kind {kind!r}") from None
