"""Tableau families: multiset, shifted multiset, semistandard, restricted.

Rows are stored top to bottom and boxes left to right; box contents are
kept sorted.  Unshifted boxes hold positive integers, shifted boxes hold
possibly-primed entries ordered 1' < 1 < 2' < 2 < ...  Columns of an
unshifted tableau are labeled ell..1 from left to right (ell = first part
of the shape); diagonals of a shifted tableau are labeled the same way.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from itertools import combinations_with_replacement

from .partitions import (
    column_heights,
    is_partition,
    is_strict_partition,
    staircase,
)

__all__ = [
    "Entry",
    "lt_u",
    "lt_p",
    "gt_u",
    "gt_p",
    "MultisetTableau",
    "ShiftedMultisetTableau",
    "SkewFilling",
    "is_valid_mt",
    "is_valid_ssyt",
    "is_valid_smt",
    "is_valid_sst",
    "is_valid_rt",
    "is_valid_srt",
    "is_maximal_mt",
    "is_maximal_smt",
    "maximal_mt_to_rt",
    "rt_to_maximal_mt",
    "maximal_smt_to_srt",
    "srt_to_maximal_smt",
    "strip_signs",
    "enumerate_mt",
    "enumerate_ssyt",
    "enumerate_smt",
    "enumerate_sst",
    "enumerate_rt",
    "enumerate_srt",
    "enumerate_maximal_mt",
    "enumerate_maximal_smt",
]


@total_ordering
@dataclass(frozen=True)
class Entry:
    """A tableau entry: a positive integer, optionally primed."""

    value: int
    primed: bool = False

    def sort_key(self):
        return (self.value, 0 if self.primed else 1)

    def __lt__(self, other: "Entry") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return f"{self.value}'" if self.primed else str(self.value)

    def __repr__(self) -> str:
        return f"Entry({self})"

    @classmethod
    def parse(cls, token: str) -> "Entry":
        token = token.strip()
        if token.endswith("'"):
            return cls(int(token[:-1]), True)
        return cls(int(token))


def lt_u(a: Entry, z: Entry) -> bool:
    """a < z, or a = z and both are unprimed."""
    return a < z or (a == z and not a.primed)


def lt_p(a: Entry, z: Entry) -> bool:
    """a < z, or a = z and both are primed."""
    return a < z or (a == z and a.primed)


def gt_u(a: Entry, z: Entry) -> bool:
    return lt_u(z, a)


def gt_p(a: Entry, z: Entry) -> bool:
    return lt_p(z, a)


# ---------------------------------------------------------------------------
# straight-shape multiset tableaux


@dataclass(frozen=True)
class MultisetTableau:
    """Left-justified rows of boxes, each box a sorted tuple of integers."""

    rows: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def ell(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def box(self, r: int, c: int) -> tuple[int, ...]:
        return self.rows[r][c]

    def weight(self) -> tuple[int, ...]:
        counts: dict[int, int] = {}
        for row in self.rows:
            for box in row:
                for v in box:
                    counts[v] = counts.get(v, 0) + 1
        if not counts:
            return ()
        return tuple(counts.get(v, 0) for v in range(1, max(counts) + 1))

    def column_weight(self) -> tuple[int, ...]:
        """(T_1..T_ell): entries in column j minus its height c_j."""
        ell = self.ell
        heights = column_heights(self.shape)
        out = []
        for j in range(1, ell + 1):
            col = ell - j
            total = sum(len(row[col]) for row in self.rows if col < len(row))
            out.append(total - heights[j])
        return tuple(out)

    def to_text(self) -> str:
        return "\n".join(
            " | ".join(" ".join(str(v) for v in box) for box in row)
            for row in self.rows
        )

    @classmethod
    def from_text(cls, text: str) -> "MultisetTableau":
        rows = []
        for line in text.strip().splitlines():
            boxes = []
            for chunk in line.split("|"):
                vals = tuple(sorted(int(tok) for tok in chunk.split()))
                boxes.append(vals)
            rows.append(tuple(boxes))
        return cls(tuple(rows))

    def to_json_dict(self) -> dict:
        return {
            "shape": list(self.shape),
            "boxes": [[[str(v) for v in box] for box in row] for row in self.rows],
            "signed": False,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "MultisetTableau":
        rows = tuple(
            tuple(tuple(sorted(int(tok) for tok in box)) for box in row)
            for row in data["boxes"]
        )
        return cls(rows)


def is_valid_mt(t: MultisetTableau) -> bool:
    """Membership test for straight-shape multiset tableaux."""
    if not is_partition(t.shape):
        return False
    for r, row in enumerate(t.rows):
        for c, box in enumerate(row):
            if not box or any(v < 1 for v in box) or tuple(sorted(box)) != box:
                return False
            if c + 1 < len(row) and box[-1] > row[c + 1][0]:
                return False
            if r + 1 < len(t.rows) and c < len(t.rows[r + 1]):
                if box[-1] >= t.rows[r + 1][c][0]:
                    return False
    return True


def is_valid_ssyt(t: MultisetTableau) -> bool:
    return is_valid_mt(t) and all(len(b) == 1 for row in t.rows for b in row)


# ---------------------------------------------------------------------------
# shifted multiset tableaux


@dataclass(frozen=True)
class ShiftedMultisetTableau:
    """Shifted rows of boxes over the primed alphabet.

    Row i starts one column right of row i-1, so the box at within-row
    index c of row r sits on the diagonal labeled ell - c.  The `signed`
    flag records membership in the signed family (no condition on row
    minima); unsigned tableaux must have an unprimed minimum in each row.
    """

    rows: tuple[tuple[tuple[Entry, ...], ...], ...]
    signed: bool = False

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def ell(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def box(self, r: int, c: int) -> tuple[Entry, ...]:
        return self.rows[r][c]

    def weight(self) -> tuple[int, ...]:
        counts: dict[int, int] = {}
        for row in self.rows:
            for box in row:
                for e in box:
                    counts[e.value] = counts.get(e.value, 0) + 1
        if not counts:
            return ()
        return tuple(counts.get(v, 0) for v in range(1, max(counts) + 1))

    def diagonal_weight(self) -> tuple[int, ...]:
        """(T_1..T_ell): entries on diagonal j minus its box count c_j."""
        ell = self.ell
        heights = column_heights(self.shape)
        out = []
        for j in range(1, ell + 1):
            c = ell - j
            total = sum(len(row[c]) for row in self.rows if c < len(row))
            out.append(total - heights[j])
        return tuple(out)

    def row_minimum(self, r: int) -> Entry:
        return min(self.rows[r][0])

    def to_text(self) -> str:
        lines = []
        for r, row in enumerate(self.rows):
            cells = ["."] * r + [" ".join(str(e) for e in box) for box in row]
            lines.append(" | ".join(cells))
        return "\n".join(lines)

    @classmethod
    def from_text(cls, text: str, signed: bool | None = None) -> "ShiftedMultisetTableau":
        rows = []
        for r, line in enumerate(text.strip().splitlines()):
            chunks = [c.strip() for c in line.split("|")]
            pads = 0
            while pads < len(chunks) and chunks[pads] == ".":
                pads += 1
            if pads != r:
                raise ValueError(f"row {r + 1} must start with {r} placeholders")
            boxes = tuple(
                tuple(sorted((Entry.parse(tok) for tok in chunk.split()), key=Entry.sort_key))
                for chunk in chunks[pads:]
            )
            rows.append(boxes)
        t = cls(tuple(rows), signed=bool(signed))
        if signed is None:
            inferred = any(t.row_minimum(r).primed for r in range(len(rows)))
            t = cls(tuple(rows), signed=inferred)
        return t

    def to_json_dict(self) -> dict:
        return {
            "shape": list(self.shape),
            "boxes": [[[str(e) for e in box] for box in row] for row in self.rows],
            "signed": self.signed,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "ShiftedMultisetTableau":
        rows = tuple(
            tuple(
                tuple(sorted((Entry.parse(tok) for tok in box), key=Entry.sort_key))
                for box in row
            )
            for row in data["boxes"]
        )
        return cls(rows, signed=bool(data.get("signed", False)))


def _smt_box_ok(box: tuple[Entry, ...]) -> bool:
    if not box or any(e.value < 1 for e in box):
        return False
    if tuple(sorted(box, key=Entry.sort_key)) != box:
        return False
    primed_counts: dict[int, int] = {}
    for e in box:
        if e.primed:
            primed_counts[e.value] = primed_counts.get(e.value, 0) + 1
            if primed_counts[e.value] > 1:
                return False
    return True


def _smt_structure_ok(t: ShiftedMultisetTableau) -> bool:
    if not is_strict_partition(t.shape) and t.shape != ():
        return False
    for r, row in enumerate(t.rows):
        for c, box in enumerate(row):
            if not _smt_box_ok(box):
                return False
            if c + 1 < len(row):
                # every entry here must be <_u every entry to the right
                if not lt_u(box[-1], row[c + 1][0]):
                    return False
            if r + 1 < len(t.rows) and 0 <= c - 1 < len(t.rows[r + 1]):
                # some entry here must be <_p everything directly below
                if not lt_p(box[0], t.rows[r + 1][c - 1][0]):
                    return False
    return True


def is_valid_smt(t: ShiftedMultisetTableau) -> bool:
    """Membership in the signed family, plus row minima unprimed when unsigned."""
    if not _smt_structure_ok(t):
        return False
    if not t.signed:
        return all(not t.row_minimum(r).primed for r in range(len(t.rows)))
    return True


def is_valid_sst(t: ShiftedMultisetTableau) -> bool:
    return is_valid_smt(t) and all(len(b) == 1 for row in t.rows for b in row)


def strip_signs(t: ShiftedMultisetTableau) -> ShiftedMultisetTableau:
    """Canonical unsigned representative: unprime each primed row minimum."""
    rows = []
    for row in t.rows:
        first = row[0]
        m = min(first)
        if m.primed:
            rest = list(first)
            rest.remove(m)
            first = tuple(sorted(rest + [Entry(m.value)], key=Entry.sort_key))
        rows.append((first,) + row[1:])
    return ShiftedMultisetTableau(tuple(rows), signed=False)


# ---------------------------------------------------------------------------
# skew fillings (restricted tableaux)


@dataclass(frozen=True)
class SkewFilling:
    """Entries on the skew diagram outer/inner, one integer per cell.

    Row r holds the entries of absolute columns inner[r]..outer[r]-1,
    left to right.
    """

    outer: tuple[int, ...]
    inner: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]

    def weight(self, alphabet: int | None = None) -> tuple[int, ...]:
        counts: dict[int, int] = {}
        for row in self.rows:
            for v in row:
                counts[v] = counts.get(v, 0) + 1
        top = alphabet if alphabet is not None else (max(counts) if counts else 0)
        return tuple(counts.get(v, 0) for v in range(1, top + 1))

    def entry(self, r: int, col: int):
        """Entry at absolute column col of row r, or None outside the skew."""
        if r < 0 or r >= len(self.rows):
            return None
        if not self.inner[r] <= col < self.outer[r]:
            return None
        return self.rows[r][col - self.inner[r]]

    def is_empty(self) -> bool:
        return all(not row for row in self.rows)

    def to_text(self) -> str:
        lines = []
        for r, row in enumerate(self.rows):
            cells = ["."] * self.inner[r] + [str(v) for v in row]
            lines.append(" ".join(cells) if cells else "")
        return "\n".join(lines)


def _skew_semistandard_ok(f: SkewFilling) -> bool:
    if len(f.outer) != len(f.inner) or len(f.rows) != len(f.outer):
        return False
    if any(i > o for i, o in zip(f.inner, f.outer)):
        return False
    outer_ok = all(f.outer[r] >= f.outer[r + 1] for r in range(len(f.outer) - 1))
    inner_ok = all(f.inner[r] >= f.inner[r + 1] for r in range(len(f.inner) - 1))
    if not (outer_ok and inner_ok):
        return False
    for r, row in enumerate(f.rows):
        if len(row) != f.outer[r] - f.inner[r]:
            return False
        for i in range(len(row) - 1):
            if row[i] > row[i + 1]:
                return False
        if r + 1 < len(f.rows):
            for col in range(f.inner[r + 1], f.outer[r + 1]):
                above = f.entry(r, col)
                below = f.entry(r + 1, col)
                if above is not None and below is not None and above >= below:
                    return False
    return True


def _restricted_ok(f: SkewFilling, mu: tuple[int, ...]) -> bool:
    """Alphabet {1..ell} with entry i no lower than row c_i (rows 1-based)."""
    ell = mu[0] if mu else 0
    heights = column_heights(mu)
    for r, row in enumerate(f.rows):
        for v in row:
            if not 1 <= v <= ell:
                return False
            if r + 1 > heights[v]:
                return False
    return True


def is_valid_rt(f: SkewFilling) -> bool:
    """Restricted tableau on outer/mu where mu is the inner shape."""
    mu = tuple(p for p in f.inner if p)
    if not is_partition(mu):
        return False
    return _skew_semistandard_ok(f) and _restricted_ok(f, mu)


def srt_shapes(lam: tuple[int, ...], mu: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Carrier shapes (lam - delta, mu - delta) of a shifted restricted tableau."""
    m = len(mu)
    if len(lam) != m:
        raise ValueError("outer and inner shifted shapes must have equal length")
    delta = staircase(m)
    return (
        tuple(l - d for l, d in zip(lam, delta)),
        tuple(p - d for p, d in zip(mu, delta)),
    )


def is_valid_srt(f: SkewFilling, mu: tuple[int, ...]) -> bool:
    """Shifted restricted tableau; f lives on (lam-delta)/(mu-delta) for strict mu."""
    mu = tuple(mu)
    if not is_strict_partition(mu):
        return False
    m = len(mu)
    delta = staircase(m)
    if tuple(i + d for i, d in zip(f.inner, delta)) != mu:
        return False
    lam = tuple(o + d for o, d in zip(f.outer, delta))
    if not is_strict_partition(tuple(p for p in lam if p)):
        return False
    return _skew_semistandard_ok(f) and _restricted_ok(f, mu)


# ---------------------------------------------------------------------------
# maximal tableaux and the restricted correspondences


def _partial_sums_ok(size, nrows: int, ell: int, bound: int) -> bool:
    """Check sum_{j<=k} |b_(i+1)j| - |b_i(j-1)| <= bound for all i, k."""
    for i in range(1, nrows):
        running = 0
        for k in range(1, ell + 1):
            running += size(i + 1, k) - size(i, k - 1)
            if running > bound:
                return False
    return True


def _mt_size(t: MultisetTableau):
    ell = t.ell

    def size(i: int, j: int) -> int:
        r, c = i - 1, ell - j
        if j < 1 or r < 0 or r >= len(t.rows) or c >= len(t.rows[r]):
            return 0
        return len(t.rows[r][c])

    return size


def _smt_size(t: ShiftedMultisetTableau):
    ell = t.ell

    def size(i: int, j: int) -> int:
        r, c = i - 1, ell - j
        if j < 1 or r < 0 or r >= len(t.rows) or c >= len(t.rows[r]):
            return 0
        return len(t.rows[r][c])

    return size


def is_maximal_mt(t: MultisetTableau) -> bool:
    """Valid multiset tableau whose row-i boxes hold only i's, partial sums <= 1."""
    if not is_valid_mt(t):
        return False
    for r, row in enumerate(t.rows):
        for box in row:
            if any(v != r + 1 for v in box):
                return False
    return _partial_sums_ok(_mt_size(t), len(t.rows), t.ell, 1)


def is_maximal_smt(t: ShiftedMultisetTableau) -> bool:
    """Valid unsigned shifted tableau, row-i boxes only i's, partial sums <= 0."""
    if t.signed or not is_valid_smt(t):
        return False
    for r, row in enumerate(t.rows):
        for box in row:
            if any(e.value != r + 1 or e.primed for e in box):
                return False
    return _partial_sums_ok(_smt_size(t), len(t.rows), t.ell, 0)


def maximal_mt_to_rt(t: MultisetTableau) -> SkewFilling:
    """Row i of the image holds |b_ij| - 1 copies of each column label j."""
    if not is_maximal_mt(t):
        raise ValueError("input is not a maximal multiset tableau")
    lam = t.weight()
    mu = t.shape
    if not is_partition(lam):
        raise ValueError("weight of a maximal tableau must be a partition")
    ell = t.ell
    rows = []
    for r, row in enumerate(t.rows):
        entries = []
        for c, box in enumerate(row):
            entries.extend([ell - c] * (len(box) - 1))
        rows.append(tuple(sorted(entries)))
    inner = mu + (0,) * (len(lam) - len(mu))
    return SkewFilling(lam, inner, tuple(rows))


def rt_to_maximal_mt(f: SkewFilling) -> MultisetTableau:
    """Inverse of maximal_mt_to_rt."""
    mu = tuple(p for p in f.inner if p)
    ell = mu[0] if mu else 0
    rows = []
    for r, width in enumerate(mu):
        counts: dict[int, int] = {}
        for v in f.rows[r] if r < len(f.rows) else ():
            counts[v] = counts.get(v, 0) + 1
        boxes = []
        for c in range(width):
            j = ell - c
            boxes.append((r + 1,) * (1 + counts.get(j, 0)))
        rows.append(tuple(boxes))
    t = MultisetTableau(tuple(rows))
    if not is_maximal_mt(t):
        raise ValueError("filling does not encode a maximal multiset tableau")
    return t


def maximal_smt_to_srt(t: ShiftedMultisetTableau) -> SkewFilling:
    """Row i of the image holds |d_ij| - 1 copies of each diagonal label j."""
    if not is_maximal_smt(t):
        raise ValueError("input is not a maximal shifted multiset tableau")
    lam = t.weight()
    mu = t.shape
    outer, inner = srt_shapes(lam, mu)
    ell = t.ell
    rows = []
    for r, row in enumerate(t.rows):
        entries = []
        for c, box in enumerate(row):
            entries.extend([ell - c] * (len(box) - 1))
        rows.append(tuple(sorted(entries)))
    return SkewFilling(outer, inner, tuple(rows))


def srt_to_maximal_smt(f: SkewFilling) -> ShiftedMultisetTableau:
    """Inverse of maximal_smt_to_srt; inner shape determines mu."""
    m = len(f.inner)
    delta = staircase(m)
    mu = tuple(i + d for i, d in zip(f.inner, delta))
    ell = mu[0] if mu else 0
    rows = []
    for r, width in enumerate(mu):
        counts: dict[int, int] = {}
        for v in f.rows[r] if r < len(f.rows) else ():
            counts[v] = counts.get(v, 0) + 1
        boxes = []
        for c in range(width):
            j = ell - c
            boxes.append((Entry(r + 1),) * (1 + counts.get(j, 0)))
        rows.append(tuple(boxes))
    t = ShiftedMultisetTableau(tuple(rows), signed=False)
    if not is_maximal_smt(t):
        raise ValueError("filling does not encode a maximal shifted tableau")
    return t


# ---------------------------------------------------------------------------
# bounded exhaustive enumeration


def enumerate_mt(shape, max_value: int, extra_cap: int):
    """All multiset tableaux of the given shape, entries <= max_value and
    at most extra_cap entries beyond one per box, in deterministic order."""
    shape = tuple(shape)
    if not is_partition(shape):
        raise ValueError(f"not a partition: {shape}")
    cells = [(r, c) for r, width in enumerate(shape) for c in range(width)]
    rows = [[None] * width for width in shape]
    out = []

    def backtrack(idx: int, budget: int):
        if idx == len(cells):
            out.append(MultisetTableau(tuple(tuple(row) for row in rows)))
            return
        r, c = cells[idx]
        lo = 1
        if c > 0:
            lo = max(lo, rows[r][c - 1][-1])
        if r > 0:
            lo = max(lo, rows[r - 1][c][-1] + 1)
        if lo > max_value:
            return
        for size in range(1, budget + 2):
            for box in combinations_with_replacement(range(lo, max_value + 1), size):
                rows[r][c] = box
                backtrack(idx + 1, budget - (size - 1))
        rows[r][c] = None

    backtrack(0, extra_cap)
    return out


def enumerate_ssyt(shape, max_value: int):
    return enumerate_mt(shape, max_value, 0)


def _alphabet(max_value: int) -> list[Entry]:
    out = []
    for v in range(1, max_value + 1):
        out.append(Entry(v, True))
        out.append(Entry(v, False))
    return out


def _shifted_boxes(lo_pred, alphabet, size: int):
    """Sorted entry multisets of the given size with an admissible minimum
    and no repeated primed value."""
    for box in combinations_with_replacement(alphabet, size):
        if not lo_pred(box[0]):
            continue
        primed = [e.value for e in box if e.primed]
        if len(primed) != len(set(primed)):
            continue
        yield box


def enumerate_smt(shape, max_value: int, extra_cap: int, signed: bool = False):
    """All (signed) shifted multiset tableaux with the given caps."""
    shape = tuple(shape)
    if shape and not is_strict_partition(shape):
        raise ValueError(f"not a strict partition: {shape}")
    alphabet = _alphabet(max_value)
    cells = [(r, c) for r, width in enumerate(shape) for c in range(width)]
    rows = [[None] * width for width in shape]
    out = []

    def backtrack(idx: int, budget: int):
        if idx == len(cells):
            out.append(
                ShiftedMultisetTableau(tuple(tuple(row) for row in rows), signed=signed)
            )
            return
        r, c = cells[idx]
        left = rows[r][c - 1][-1] if c > 0 else None
        above = min(rows[r - 1][c + 1]) if r > 0 else None

        def ok_min(e: Entry) -> bool:
            if not signed and c == 0 and e.primed:
                return False
            if left is not None and not lt_u(left, e):
                return False
            if above is not None and not lt_p(above, e):
                return False
            return True

        for size in range(1, budget + 2):
            for box in _shifted_boxes(ok_min, alphabet, size):
                rows[r][c] = box
                backtrack(idx + 1, budget - (size - 1))
        rows[r][c] = None

    backtrack(0, extra_cap)
    return out


def enumerate_sst(shape, max_value: int, signed: bool = False):
    return enumerate_smt(shape, max_value, 0, signed=signed)


def _enumerate_restricted(outer, inner, mu):
    """Skew semistandard fillings in alphabet {1..ell}, entry v on rows <= c_v."""
    ell = mu[0] if mu else 0
    heights = column_heights(mu)
    cells = [
        (r, col)
        for r in range(len(outer))
        for col in range(inner[r], outer[r])
    ]
    rows = [[None] * (outer[r] - inner[r]) for r in range(len(outer))]
    out = []

    def entry_at(r: int, col: int):
        if r < 0 or not inner[r] <= col < outer[r]:
            return None
        return rows[r][col - inner[r]]

    def backtrack(idx: int):
        if idx == len(cells):
            out.append(
                SkewFilling(tuple(outer), tuple(inner), tuple(tuple(row) for row in rows))
            )
            return
        r, col = cells[idx]
        left = entry_at(r, col - 1)
        above = entry_at(r - 1, col)
        lo = max(1, left if left is not None else 1, (above + 1) if above is not None else 1)
        for v in range(lo, ell + 1):
            if r + 1 > heights[v]:
                continue
            rows[r][col - inner[r]] = v
            backtrack(idx + 1)
        rows[r][col - inner[r]] = None

    backtrack(0)
    return out


def enumerate_rt(outer, mu):
    """All restricted tableaux of shape outer/mu."""
    outer = tuple(outer)
    mu = tuple(mu)
    inner = mu + (0,) * (len(outer) - len(mu))
    if any(i > o for i, o in zip(inner, outer)):
        raise ValueError("inner shape must fit inside outer shape")
    return _enumerate_restricted(outer, inner, tuple(p for p in mu if p))


def enumerate_srt(lam, mu):
    """All shifted restricted tableaux of shape lam/mu (strict shapes)."""
    lam, mu = tuple(lam), tuple(mu)
    outer, inner = srt_shapes(lam, mu)
    if any(i > o for i, o in zip(inner, outer)):
        raise ValueError("inner shape must fit inside outer shape")
    return _enumerate_restricted(outer, inner, mu)


def _enumerate_size_matrices(shape, extra_cap: int, bound: int):
    """Box-size matrices for maximal tableaux: every size >= 1, total extra
    bounded, and the running-sum condition with the given bound."""
    shape = tuple(shape)
    cells = [(r, c) for r, width in enumerate(shape) for c in range(width)]
    sizes = [[1] * width for width in shape]
    out = []
    ell = shape[0] if shape else 0

    def size(i: int, j: int) -> int:
        r, c = i - 1, ell - j
        if j < 1 or r < 0 or r >= len(sizes) or c >= len(sizes[r]):
            return 0
        return sizes[r][c]

    def backtrack(idx: int, budget: int):
        if idx == len(cells):
            if _partial_sums_ok(size, len(shape), ell, bound):
                out.append([list(row) for row in sizes])
            return
        r, c = cells[idx]
        for s in range(1, budget + 2):
            sizes[r][c] = s
            backtrack(idx + 1, budget - (s - 1))
        sizes[r][c] = 1

    backtrack(0, extra_cap)
    return out


def enumerate_maximal_mt(shape, extra_cap: int):
    out = []
    for sizes in _enumerate_size_matrices(shape, extra_cap, 1):
        rows = tuple(
            tuple((r + 1,) * s for s in row) for r, row in enumerate(sizes)
        )
        t = MultisetTableau(rows)
        if is_maximal_mt(t):
            out.append(t)
    return out


def enumerate_maximal_smt(shape, extra_cap: int):
    out = []
    for sizes in _enumerate_size_matrices(shape, extra_cap, 0):
        rows = tuple(
            tuple((Entry(r + 1),) * s for s in row) for r, row in enumerate(sizes)
        )
        t = ShiftedMultisetTableau(rows, signed=False)
        if is_maximal_smt(t):
            out.append(t)
    return out
