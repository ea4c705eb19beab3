"""Partitions, Young diagrams, hooks and border strips.

Partitions are plain tuples of positive integers in weakly decreasing order;
the empty tuple is the partition of 0.  Cells use (row, col) coordinates
starting at 1, with row 1 at the top of the diagram.
"""
from __future__ import annotations

from typing import Iterator, NamedTuple, Sequence

Partition = tuple[int, ...]
Multiplicity = tuple[int, ...]


class Cell(NamedTuple):
    row: int
    col: int


def is_partition(seq: Sequence[int]) -> bool:
    return all(p > 0 for p in seq) and all(
        seq[i] >= seq[i + 1] for i in range(len(seq) - 1)
    )


def normalize(seq: Sequence[int]) -> Partition:
    """Drop zeros and sort weakly decreasing."""
    if any(p < 0 for p in seq):
        raise ValueError(f"negative part in {tuple(seq)}")
    return tuple(sorted((p for p in seq if p), reverse=True))


def size(alpha: Partition) -> int:
    return sum(alpha)


def transpose(alpha: Partition) -> Partition:
    if not alpha:
        return ()
    return tuple(sum(1 for a in alpha if a >= k) for k in range(1, alpha[0] + 1))


def to_multiplicity(alpha: Partition) -> Multiplicity:
    """(3,1,1) -> (2,0,1): entry k-1 counts the parts equal to k."""
    if not alpha:
        return ()
    mult = [0] * alpha[0]
    for a in alpha:
        mult[a - 1] += 1
    return tuple(mult)


def from_multiplicity(lam: Sequence[int]) -> Partition:
    parts: list[int] = []
    for k in range(len(lam), 0, -1):
        parts.extend([k] * lam[k - 1])
    return tuple(parts)


def trim_multiplicity(lam: Sequence[int]) -> Multiplicity:
    lam = list(lam)
    while lam and lam[-1] == 0:
        lam.pop()
    return tuple(lam)


def weighted_size(lam: Multiplicity) -> int:
    return sum(k * m for k, m in enumerate(lam, start=1))


def cells(alpha: Partition) -> Iterator[Cell]:
    for i, a in enumerate(alpha, start=1):
        for j in range(1, a + 1):
            yield Cell(i, j)


def _check_cell(alpha: Partition, c: Sequence[int]) -> Cell:
    row, col = c
    if not (1 <= row <= len(alpha) and 1 <= col <= alpha[row - 1]):
        raise ValueError(f"cell {tuple(c)} is outside the diagram of {alpha}")
    return Cell(row, col)


def arm_leg(alpha: Partition, c: Sequence[int]) -> tuple[int, int]:
    row, col = _check_cell(alpha, c)
    arm = alpha[row - 1] - col
    leg = sum(1 for a in alpha[row:] if a >= col)
    return arm, leg


def hook_length(alpha: Partition, c: Sequence[int]) -> int:
    arm, leg = arm_leg(alpha, c)
    return arm + leg + 1


def hook_lengths(alpha: Partition) -> dict[Cell, int]:
    conj = transpose(alpha)
    return {
        Cell(i, j): alpha[i - 1] - j + conj[j - 1] - i + 1 for i, j in cells(alpha)
    }


def cells_with_hook(alpha: Partition, n: int) -> list[Cell]:
    """Cells whose hook has exactly n boxes, in row-major order."""
    return [c for c, h in hook_lengths(alpha).items() if h == n]


def _beta_numbers(alpha: Partition, length: int) -> list[int]:
    padded = list(alpha) + [0] * (length - len(alpha))
    return [p + length - 1 - i for i, p in enumerate(padded)]


def _from_beta(beta: Sequence[int]) -> tuple[Partition, int]:
    """Sort a set of distinct beta-numbers; return the partition and the sign."""
    ordered = sorted(beta, reverse=True)
    inversions = sum(
        1 for i in range(len(beta)) for j in range(i + 1, len(beta)) if beta[i] < beta[j]
    )
    length = len(ordered)
    parts = tuple(b - (length - 1 - i) for i, b in enumerate(ordered))
    return normalize(parts), (-1) ** inversions


def remove_hook(alpha: Partition, c: Sequence[int]) -> tuple[Partition, int]:
    """Remove the border strip of the hook at ``c``.

    Returns the collapsed partition and the sign (-1)**leg.  Works through
    beta-numbers, so hooks that disconnect the diagram need no special case.
    """
    row, _ = _check_cell(alpha, c)
    h = hook_length(alpha, c)
    beta = _beta_numbers(alpha, len(alpha))
    beta[row - 1] -= h
    return _from_beta(beta)


def add_border_strips(beta: Partition, n: int) -> list[tuple[Partition, int]]:
    """All gamma with gamma/beta a border strip of n boxes, signed by (-1)**height.

    Sorted by gamma in reverse-lexicographic order.
    """
    if n < 1:
        raise ValueError("strip size must be positive")
    length = len(beta) + n
    bn = _beta_numbers(beta, length)
    present = set(bn)
    out = []
    for i, b in enumerate(bn):
        if b + n in present:
            continue
        moved = list(bn)
        moved[i] = b + n
        out.append(_from_beta(moved))
    out.sort(reverse=True)
    return out


def partitions_of(
    d: int, max_first_part: int | None = None, max_length: int | None = None
) -> Iterator[Partition]:
    """Partitions of d in reverse-lexicographic order, optionally bounded."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    first = d if max_first_part is None else min(d, max_first_part)
    rows = d if max_length is None else max_length

    def rec(remaining: int, cap: int, slots: int) -> Iterator[Partition]:
        if remaining == 0:
            yield ()
            return
        if slots == 0 or cap * slots < remaining:
            return
        for part in range(min(cap, remaining), 0, -1):
            for rest in rec(remaining - part, part, slots - 1):
                yield (part,) + rest

    yield from rec(d, first, rows)


def partitions_up_to(d: int) -> Iterator[Partition]:
    for k in range(d + 1):
        yield from partitions_of(k)


def parse_partition(text: str) -> Partition:
    """Parse ``3,2,2``; ``-`` or an empty string is the empty partition."""
    text = text.strip()
    if text in ("", "-"):
        return ()
    try:
        parts = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise ValueError(f"not a partition: {text!r}") from None
    if not is_partition(parts):
        raise ValueError(f"not a partition: {text!r}")
    return parts


def format_partition(alpha: Partition) -> str:
    return ",".join(map(str, alpha)) if alpha else "-"
