"""Row-overlap statistics of skew shapes and the dominance order.

overlap_k(i) counts the columns shared by the k consecutive rows starting at
row i.  Because row intervals move weakly left going down, this is just
``outer[i+k-1] - inner[i]`` clipped at zero.  The depth-k row statistic is the
weakly decreasing rearrangement of these counts with zeros dropped; depth-k
column statistics are row statistics of the transpose.
"""

from dataclasses import dataclass

from skewsupport.errors import SizeMismatchError
from skewsupport.shapes import Partition, SkewShape, sort_desc


def overlap_rows(shape: SkewShape, k: int) -> Partition:
    """Sorted positive overlaps of k consecutive rows, for k >= 1."""
    if k < 1:
        raise ValueError(f"depth must be >= 1, got {k}")
    outer, inner = shape.outer, shape.inner_padded
    counts = [
        outer[i + k - 1] - inner[i] for i in range(len(outer) - k + 1)
    ]
    return sort_desc(c for c in counts if c > 0)


def overlap_cols(shape: SkewShape, k: int) -> Partition:
    return overlap_rows(shape.transpose(), k)


def rects(shape: SkewShape, k: int, l: int) -> int:
    """Number of k x l all-box rectangles inside the shape."""
    if l < 1:
        raise ValueError(f"width must be >= 1, got {l}")
    return sum(max(0, o - l + 1) for o in overlap_rows(shape, k))


@dataclass(frozen=True)
class OverlapProfile:
    """Row statistics of every depth, up to the last non-empty one."""

    rows: tuple[Partition, ...]

    @classmethod
    def of(cls, shape: SkewShape) -> "OverlapProfile":
        stats = []
        for k in range(1, shape.n_rows + 1):
            stat = overlap_rows(shape, k)
            if not stat:
                break
            stats.append(stat)
        return cls(tuple(stats))

    def row_stat(self, k: int) -> Partition:
        if k < 1:
            raise ValueError(f"depth must be >= 1, got {k}")
        return self.rows[k - 1] if k <= len(self.rows) else ()

    @property
    def depth(self) -> int:
        return len(self.rows)

    def dominated_by(self, other: "OverlapProfile") -> bool:
        return all(
            dominance_leq(stat, other.row_stat(k))
            for k, stat in enumerate(self.rows, start=1)
        )


def profile(shape: SkewShape) -> OverlapProfile:
    return OverlapProfile.of(shape)


def dominance_leq(lam: Partition, mu: Partition) -> bool:
    """Prefix-sum dominance, allowing unequal sizes and lengths.

    lam <= mu iff lam[0]+...+lam[k-1] <= mu[0]+...+mu[k-1] for every
    k = 1..len(lam), with mu padded by zeros.
    """
    total_l, total_m = 0, 0
    for i, part in enumerate(lam):
        total_l += part
        total_m += mu[i] if i < len(mu) else 0
        if total_l > total_m:
            return False
    return True


def overlaps_dominated(a: SkewShape, b: SkewShape) -> bool:
    """Whether every depth-k row statistic of a is dominated by b's.

    Only defined for shapes of equal size; the dominance order is not
    meaningful across sizes here.
    """
    if a.size != b.size:
        raise SizeMismatchError(
            f"shapes have different sizes: {a.size} vs {b.size}"
        )
    return OverlapProfile.of(a).dominated_by(OverlapProfile.of(b))


def profile_equal(a: SkewShape, b: SkewShape) -> bool:
    return OverlapProfile.of(a) == OverlapProfile.of(b)
