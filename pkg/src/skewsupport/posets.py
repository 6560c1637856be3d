"""Posets of shape classes, the support/overlap equivalence sweep, the
multiplicity-free classification, and the saturation probe.

Shapes of a fixed size are grouped into classes two ways: by equal F-support
("suppf") and by equal overlap profile ("nc").  Both sets of classes are
ordered, by support containment and by overlap dominance respectively; a
bigger support corresponds to more dominated overlaps.  The containment
direction of the correspondence is a proved theorem (checked here as a
sweep); the dominance-to-containment direction is open, so any reverse
failure is reported as a discovery rather than an error.
"""

import zlib
from dataclasses import dataclass
from multiprocessing import get_context

from skewsupport.config import default_jobs, effective_max_size
from skewsupport.errors import InvalidShapeError, SizeLimitError
from skewsupport.overlaps import OverlapProfile
from skewsupport.shapes import (
    SkewShape,
    direct_sum,
    enumerate_shapes,
    format_shape,
    parse_shape,
    scale,
)
from skewsupport.tableaux import (
    f_support_mask,
    is_f_multiplicity_free,
    schur_support,
)

# ---------------------------------------------------------------- posets


@dataclass(frozen=True)
class ShapeClassPoset:
    """Classes of same-size shapes with a strict order on class indices."""

    kind: str  # "suppf" or "nc"
    n: int
    classes: tuple[tuple[SkewShape, ...], ...]
    relation: frozenset  # pairs (above, below) of class indices

    @property
    def representatives(self) -> tuple[SkewShape, ...]:
        return tuple(cls[0] for cls in self.classes)

    def hasse_edges(self) -> list[tuple[int, int]]:
        """Covering pairs (above, below): relation minus two-step paths."""
        rel = self.relation
        edges = [
            (i, j)
            for i, j in sorted(rel)
            if not any(
                (i, k) in rel and (k, j) in rel
                for k in range(len(self.classes))
            )
        ]
        return edges

    def to_json_obj(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "class_count": len(self.classes),
            "classes": [
                {
                    "representative": format_shape(cls[0]),
                    "members": [format_shape(s) for s in cls],
                }
                for cls in self.classes
            ],
            "hasse_edges": [
                {
                    "upper": format_shape(self.classes[i][0]),
                    "lower": format_shape(self.classes[j][0]),
                }
                for i, j in self.hasse_edges()
            ],
        }

    def to_dot(self) -> str:
        lines = [f"digraph {self.kind}_{self.n} {{", "  rankdir=BT;",
                 "  node [shape=box];"]
        for cls in self.classes:
            rep = format_shape(cls[0])
            label = rep if len(cls) == 1 else f"{rep} (+{len(cls) - 1})"
            lines.append(f'  "{rep}" [label="{label}"];')
        for i, j in self.hasse_edges():
            upper = format_shape(self.classes[i][0])
            lower = format_shape(self.classes[j][0])
            lines.append(f'  "{lower}" -> "{upper}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _group(shapes, fingerprint) -> tuple[tuple[SkewShape, ...], ...]:
    groups: dict = {}
    for s in shapes:
        groups.setdefault(fingerprint(s), []).append(s)
    classes = [tuple(sorted(members)) for members in groups.values()]
    classes.sort(key=lambda cls: cls[0])
    return tuple(classes)


def build_suppf(n: int, max_size=None) -> ShapeClassPoset:
    """Classes by equal F-support, ordered by strict support containment."""
    shapes = enumerate_shapes(n, max_size)
    classes = _group(shapes, f_support_mask)
    masks = [f_support_mask(cls[0]) for cls in classes]
    relation = frozenset(
        (i, j)
        for i in range(len(classes))
        for j in range(len(classes))
        if i != j and masks[i] != masks[j] and masks[i] | masks[j] == masks[i]
    )
    return ShapeClassPoset("suppf", n, classes, relation)


def build_nc(n: int, max_size=None) -> ShapeClassPoset:
    """Classes by equal overlap profile, ordered by strict dominance.

    A class sits above another when its row statistics are dominated at
    every depth (more spread out means higher).
    """
    shapes = enumerate_shapes(n, max_size)
    classes = _group(shapes, OverlapProfile.of)
    profiles = [OverlapProfile.of(cls[0]) for cls in classes]
    relation = frozenset(
        (i, j)
        for i in range(len(classes))
        for j in range(len(classes))
        if i != j
        and profiles[i] != profiles[j]
        and profiles[i].dominated_by(profiles[j])
    )
    return ShapeClassPoset("nc", n, classes, relation)


# ------------------------------------------------- the equivalence sweep


def _shard_of(a: SkewShape, b: SkewShape, count: int) -> int:
    key = f"{format_shape(a)}|{format_shape(b)}".encode()
    return zlib.crc32(key) % count


def _fingerprint_chunk(shapes):
    return [(s, f_support_mask(s), OverlapProfile.of(s)) for s in shapes]


def _fingerprints(shapes, jobs: int):
    if jobs <= 1 or len(shapes) < 64:
        rows = _fingerprint_chunk(shapes)
    else:
        chunks = [shapes[i::jobs] for i in range(jobs)]
        with get_context("fork").Pool(jobs) as pool:
            rows = [row for part in pool.map(_fingerprint_chunk, chunks)
                    for row in part]
    masks = {s: m for s, m, _ in rows}
    profiles = {s: p for s, _, p in rows}
    return masks, profiles


def verify_conjecture(n: int, shard=(1, 1), jobs=None, max_size=None) -> dict:
    """Check "support containment <=> overlap dominance" at size n.

    Forward failures (containment without dominance) contradict a proved
    statement; reverse failures (dominance without containment) would be a
    genuine discovery.  Class partitions are compared globally; the ordered
    class pairs are distributed over `shard` = (index, count), 1-based, by a
    stable hash, so disjoint shards cover every pair exactly once.
    """
    index, count = shard
    if not (1 <= index <= count):
        raise ValueError(f"shard index {index} outside 1..{count}")
    shapes = enumerate_shapes(n, max_size)
    masks, profiles = _fingerprints(shapes, jobs or default_jobs())

    by_mask: dict = {}
    for s in shapes:
        by_mask.setdefault(masks[s], []).append(s)
    by_profile: dict = {}
    for s in shapes:
        by_profile.setdefault(profiles[s], []).append(s)

    partition_mismatches = []
    for members in by_mask.values():
        first = profiles[members[0]]
        for other in members[1:]:
            if profiles[other] != first:
                partition_mismatches.append(
                    {
                        "a": format_shape(members[0]),
                        "b": format_shape(other),
                        "kind": "equal_support_different_profile",
                    }
                )
    for members in by_profile.values():
        first = masks[members[0]]
        for other in members[1:]:
            if masks[other] != first:
                partition_mismatches.append(
                    {
                        "a": format_shape(members[0]),
                        "b": format_shape(other),
                        "kind": "equal_profile_different_support",
                    }
                )

    reps = sorted(min(members) for members in by_mask.values())
    forward, reverse = [], []
    pairs = 0
    for a in reps:
        for b in reps:
            if a == b:
                continue
            if count > 1 and _shard_of(a, b, count) != index - 1:
                continue
            pairs += 1
            contains = masks[a] != masks[b] and masks[a] | masks[b] == masks[a]
            dominated = profiles[a] != profiles[b] and profiles[a].dominated_by(
                profiles[b]
            )
            if contains and not dominated:
                forward.append(
                    {"a": format_shape(a), "b": format_shape(b)}
                )
            if dominated and not contains:
                reverse.append(
                    {"a": format_shape(a), "b": format_shape(b)}
                )
    return {
        "n": n,
        "shard": {"index": index, "count": count},
        "shape_count": len(shapes),
        "class_count_suppf": len(by_mask),
        "class_count_nc": len(by_profile),
        "pairs_checked": pairs,
        "partition_mismatches": partition_mismatches,
        "forward_violations": forward,
        "reverse_counterexamples": reverse,
        "pass_theorem": not forward
        and not any(
            m["kind"] == "equal_support_different_profile"
            for m in partition_mismatches
        ),
        "pass_conjecture": not reverse
        and not any(
            m["kind"] == "equal_profile_different_support"
            for m in partition_mismatches
        ),
    }


def merge_conjecture_reports(reports) -> dict:
    """Combine disjoint shard reports of the same sweep into one."""
    if not reports:
        raise ValueError("no reports to merge")
    first = reports[0]
    for r in reports[1:]:
        for key in ("n", "shape_count", "class_count_suppf", "class_count_nc"):
            if r[key] != first[key]:
                raise ValueError(f"reports disagree on {key}")
    def _cat(key):
        seen = []
        for r in reports:
            for item in r[key]:
                if item not in seen:
                    seen.append(item)
        return sorted(seen, key=lambda d: sorted(d.items()))
    merged = {
        "n": first["n"],
        "shard": {"index": 1, "count": 1},
        "shape_count": first["shape_count"],
        "class_count_suppf": first["class_count_suppf"],
        "class_count_nc": first["class_count_nc"],
        "pairs_checked": sum(r["pairs_checked"] for r in reports),
        "partition_mismatches": _cat("partition_mismatches"),
        "forward_violations": _cat("forward_violations"),
        "reverse_counterexamples": _cat("reverse_counterexamples"),
    }
    merged["pass_theorem"] = all(r["pass_theorem"] for r in reports)
    merged["pass_conjecture"] = all(r["pass_conjecture"] for r in reports)
    return merged


# ------------------------------------------- multiplicity-free machinery


def hook_shape(n: int, ell: int) -> SkewShape:
    if not 0 <= ell <= n - 1:
        raise InvalidShapeError(f"no hook with {n} boxes and leg {ell}")
    return SkewShape((n - ell,) + (1,) * ell)


def column_row_shape(n: int, ell: int) -> SkewShape:
    """A column of ell boxes with a disjoint row of n-ell above-right."""
    if not 1 <= ell <= n - 1:
        raise InvalidShapeError(f"no column+row split of {n} at {ell}")
    return direct_sum(SkewShape((1,) * ell), SkewShape((n - ell,)))


def _match_pattern(s: SkewShape):
    n = s.size
    outer, inner = s.outer, s.inner
    if not inner:
        if outer == (3, 3):
            return ("rect-2x3", None)
        if outer == (4, 4):
            return ("rect-2x4", None)
        if n >= 4 and outer == (n - 2, 2):
            return ("two-row", None)
        if outer and all(p == 1 for p in outer[1:]):
            return ("hook", len(outer) - 1)
    elif (
        inner == (1,)
        and len(outer) >= 2
        and outer[0] >= 2
        and all(p == 1 for p in outer[1:])
    ):
        return ("column-plus-row", len(outer) - 1)
    return None


def multfree_classify(s: SkewShape):
    """Classification tag if s is F-multiplicity-free, else None.

    The classified families are closed under transpose and half-turn
    rotation, so all four images are tried; `via` records which one matched.
    """
    for via, image in (
        ("id", s),
        ("rotate", s.rotate()),
        ("transpose", s.transpose()),
        ("rotate+transpose", s.transpose().rotate()),
    ):
        hit = _match_pattern(image)
        if hit:
            kind, ell = hit
            return {"kind": kind, "ell": ell, "via": via}
    return None


def multfree_comparable(a: SkewShape, b: SkewShape) -> bool:
    """Whether the F-support of a contains that of b, for classified shapes.

    Decided purely from the classification: equal-support pairs (b is a or
    its rotation) pass, and otherwise only the three published family
    pattern pairs do, up to rotating either side.
    """
    if a.size != b.size:
        raise InvalidShapeError(
            f"shapes have different sizes: {a.size} vs {b.size}"
        )
    if multfree_classify(a) is None or multfree_classify(b) is None:
        raise InvalidShapeError("both shapes must be multiplicity-free")
    n = a.size
    if b in (a, a.rotate()):
        return True
    for aa in {a, a.rotate()}:
        hit = _match_pattern(aa)
        if not hit or hit[0] != "column-plus-row":
            continue
        ell = hit[1]
        for bb in {b, b.rotate()}:
            if bb == hook_shape(n, ell) or (
                ell >= 1 and bb == hook_shape(n, ell - 1)
            ):
                return True
            if n >= 4 and ell == 2 and bb == SkewShape((n - 2, 2)):
                return True
            if n >= 4 and ell == n - 2 and bb == SkewShape(
                (2, 2) + (1,) * (n - 4)
            ):
                return True
    return False


def multfree_report(n: int, max_size=None) -> dict:
    """Classification vs expansion agreement, plus the class subposet.

    Checks, for every shape of size n, that the pattern classification
    matches brute-force multiplicity-freeness of the F-expansion, and that
    the published comparability rules match computed support containment on
    every ordered pair of classified shapes.  Returns the restricted
    subposet of the support poset as well.
    """
    shapes = enumerate_shapes(n, max_size)
    classification_mismatches = []
    free = []
    for s in shapes:
        tag = multfree_classify(s)
        brute = is_f_multiplicity_free(s)
        if (tag is not None) != brute:
            classification_mismatches.append(
                {
                    "shape": format_shape(s),
                    "classified": tag is not None,
                    "expansion_multfree": brute,
                }
            )
        if brute:
            free.append(s)
    comparability_mismatches = []
    masks = {s: f_support_mask(s) for s in free}
    for a in free:
        for b in free:
            predicted = multfree_comparable(a, b)
            actual = masks[a] | masks[b] == masks[a]
            if predicted != actual:
                comparability_mismatches.append(
                    {
                        "a": format_shape(a),
                        "b": format_shape(b),
                        "predicted": predicted,
                        "computed": actual,
                    }
                )
    poset = build_suppf(n, max_size)
    free_set = set(free)
    keep = [
        i
        for i, cls in enumerate(poset.classes)
        if any(s in free_set for s in cls)
    ]
    impure = [
        format_shape(poset.classes[i][0])
        for i in keep
        if not all(s in free_set for s in poset.classes[i])
    ]
    sub_classes = tuple(poset.classes[i] for i in keep)
    renumber = {old: new for new, old in enumerate(keep)}
    sub_relation = frozenset(
        (renumber[i], renumber[j])
        for i, j in poset.relation
        if i in renumber and j in renumber
    )
    sub = ShapeClassPoset("suppf", n, sub_classes, sub_relation)
    return {
        "n": n,
        "shape_count": len(shapes),
        "multfree_count": len(free),
        "classification_mismatches": classification_mismatches,
        "comparability_mismatches": comparability_mismatches,
        "classes_with_mixed_membership": impure,
        "subposet": sub,
        "pass": not classification_mismatches
        and not comparability_mismatches,
    }


# ------------------------------------------------------------ saturation

SCHUR_REGRESSION = {
    "a": "4,3,1,1/2,1",
    "b": "4,4,2,1/3,1,1",
    "witness": (6, 3, 3),
}


def schur_saturation_regression() -> dict:
    """The fixed Schur-side scaling counterexample, recomputed from scratch.

    ssupp(a) contains ssupp(b), yet after doubling both shapes the witness
    partition lies in the doubled b's support only, so containment breaks.
    """
    a = parse_shape(SCHUR_REGRESSION["a"])
    b = parse_shape(SCHUR_REGRESSION["b"])
    witness = SCHUR_REGRESSION["witness"]
    base = schur_support(a) >= schur_support(b)
    in_scaled_b = witness in schur_support(scale(b, 2))
    in_scaled_a = witness in schur_support(scale(a, 2))
    scaled = schur_support(scale(a, 2)) >= schur_support(scale(b, 2))
    return {
        "a": SCHUR_REGRESSION["a"],
        "b": SCHUR_REGRESSION["b"],
        "witness": ",".join(str(p) for p in witness),
        "base_containment": base,
        "witness_in_scaled_b": in_scaled_b,
        "witness_in_scaled_a": in_scaled_a,
        "scaled_containment": scaled,
        "confirmed": base and in_scaled_b and not in_scaled_a and not scaled,
    }


def saturation_check(n: int, factor: int, max_size=None) -> dict:
    """Probe F-support saturation: does containment survive scaling, both ways?

    Sweeps all ordered pairs of size-n shapes comparing containment before
    and after scaling by `factor`.  Disagreements in either direction are
    open-question data, reported as discoveries, never as errors.  The fixed
    Schur-side regression is recomputed alongside.
    """
    if factor < 1:
        raise ValueError(f"scale factor must be >= 1, got {factor}")
    if n * factor > effective_max_size(max_size):
        raise SizeLimitError(f"scaled size {n * factor} exceeds the limit")
    shapes = enumerate_shapes(n, max_size)
    masks = {s: f_support_mask(s) for s in shapes}
    scaled_masks = {s: f_support_mask(scale(s, factor)) for s in shapes}
    only_if, if_dir = [], []
    pairs = 0
    for a in shapes:
        for b in shapes:
            if a == b:
                continue
            pairs += 1
            before = masks[a] | masks[b] == masks[a]
            after = scaled_masks[a] | scaled_masks[b] == scaled_masks[a]
            if before and not after:
                only_if.append({"a": format_shape(a), "b": format_shape(b)})
            if after and not before:
                if_dir.append({"a": format_shape(a), "b": format_shape(b)})
    return {
        "n": n,
        "factor": factor,
        "pairs_checked": pairs,
        "containment_lost_after_scaling": only_if,
        "containment_gained_after_scaling": if_dir,
        "agreement": not only_if and not if_dir,
        "schur_regression": schur_saturation_regression(),
    }
