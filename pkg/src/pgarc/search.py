"""Orderly classification of arcs and pruned backtracking extension.

The classification builds, size by size, the exact list of equivalence
classes of arcs up to a threshold: level 4 is the single frame class and
level n+1 is obtained by extending every level-n representative by every
candidate point, canonicalizing each child and deduplicating.  Because
every (n+1)-arc contains an n-arc equivalent to some representative,
the level counts are exact class counts.

Above the threshold a depth-first extension takes over: candidates are
added in increasing point-index order (each child only considers points
greater than the last added one, so each superset is enumerated once)
and a branch is cut at the size bound.  Isomorph rejection at the first
extension level assigns each child to the representative owning the
least class index among the child's threshold-size sub-arcs; a complete
arc is then still found under the minimal class it contains, so the
union over all branches remains exhaustive.
"""

from __future__ import annotations

import functools
import json
import math
import os
import sys
from dataclasses import dataclass, field as dfield
from pathlib import Path

from . import scheduler
from .arcs import candidate_mask, iter_bits
from .collineation import GROUPS, PGL, canonicalize, standard_frame
from .gf import build_field, factor_prime_power
from .plane import Plane, build_plane


class MemoryBudgetExceededError(RuntimeError):
    """A classification level outgrew the configured class budget."""


@dataclass
class SearchConfig:
    """Knobs of a classification + extension run."""

    q: int
    group: str = PGL
    classification_threshold: int = 8
    target_bound: int = 13
    worker_count: int = 1
    proportions: tuple[int, ...] | None = None
    stealing: bool = False
    checkpoint_dir: str | None = None
    max_level_classes: int | None = None

    def __post_init__(self):
        if self.group not in GROUPS:
            raise ValueError(f"group must be one of {GROUPS}")
        if not 4 <= self.classification_threshold <= self.target_bound:
            raise ValueError(
                "need 4 <= classification_threshold <= target_bound, got "
                f"{self.classification_threshold} / {self.target_bound}"
            )
        factor_prime_power(self.q)  # raises for non prime powers
        if self.proportions is not None:
            self.proportions = tuple(int(p) for p in self.proportions)
            if len(self.proportions) != self.worker_count:
                raise ValueError("need one proportion per worker")


@dataclass
class ClassificationLevel:
    size: int
    representatives: list[tuple[int, ...]]
    count: int = dfield(init=False)

    def __post_init__(self):
        self.count = len(self.representatives)


@dataclass
class MinCompleteResult:
    q: int
    group: str
    size: int
    class_count: int
    representatives: list[tuple[int, ...]]


def lower_bound(q: int) -> int:
    """Smallest size not excluded by the known strict lower bounds:
    t > sqrt(2q) + 1 for all q, and t > sqrt(3q) + 1/2 for q = p^h with
    h in {1, 2, 3}.  Exact integer arithmetic throughout."""
    _, h = factor_prime_power(q)
    bound = math.isqrt(2 * q) + 2  # floor(sqrt(2q) + 1) + 1
    if h in (1, 2, 3):
        r = math.isqrt(3 * q)
        # floor(sqrt(3q) + 1/2): bump when sqrt(3q) >= r + 1/2
        if 12 * q >= (2 * r + 1) ** 2:
            r += 1
        bound = max(bound, r + 1)
    return bound


@functools.lru_cache(maxsize=None)
def default_field(q: int):
    p, h = factor_prime_power(q)
    return build_field(p, h, "auto")


@functools.lru_cache(maxsize=None)
def default_plane(q: int) -> Plane:
    return build_plane(default_field(q))


# ---------------------------------------------------------------------------
# classification


def _children_of(plane: Plane, group: str, rep: tuple[int, ...]) -> set:
    out = set()
    for x in iter_bits(candidate_mask(plane, rep)):
        out.add(canonicalize(plane, rep + (x,), group).canon)
    return out


def _classify_job(i: int, q: int, group: str, reps) -> frozenset:
    return frozenset(_children_of(default_plane(q), group, reps[i]))


def _level_filename(q: int, group: str, size: int) -> str:
    return f"q{q}_{group}_level{size}.txt"


def save_level(directory, q: int, group: str, level: ClassificationLevel) -> Path:
    path = Path(directory) / _level_filename(q, group, level.size)
    header = {"q": q, "group": group, "size": level.size, "count": level.count}
    tmp = path.with_suffix(".tmp")
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(json.dumps(header) + "\n")
        for rep in level.representatives:
            fh.write(" ".join(map(str, rep)) + "\n")
    os.replace(tmp, path)
    return path


def load_level(directory, q: int, group: str, size: int) -> ClassificationLevel | None:
    path = Path(directory) / _level_filename(q, group, size)
    if not path.exists():
        return None
    with open(path, encoding="utf-8") as fh:
        header = json.loads(fh.readline())
        if (header.get("q"), header.get("group"), header.get("size")) != (q, group, size):
            raise ValueError(f"checkpoint {path} does not match the requested run")
        reps = [tuple(map(int, line.split())) for line in fh if line.strip()]
    if len(reps) != header["count"]:
        raise ValueError(f"checkpoint {path} is truncated")
    return ClassificationLevel(size, reps)


def classify(config: SearchConfig, plane: Plane | None = None) -> list[ClassificationLevel]:
    """Exact class representatives of arcs for sizes 4..threshold.

    The threshold is clamped to the largest nonempty level.  With a
    checkpoint directory, completed levels are written out and a rerun
    resumes after the last complete one.
    """
    plane = plane if plane is not None else default_plane(config.q)
    group = config.group
    ckdir = config.checkpoint_dir
    if ckdir:
        Path(ckdir).mkdir(parents=True, exist_ok=True)

    frame = standard_frame(plane)
    levels = [ClassificationLevel(4, [canonicalize(plane, frame, group).canon])]
    if ckdir:
        loaded = load_level(ckdir, config.q, group, 4)
        if loaded is None:
            save_level(ckdir, config.q, group, levels[0])

    for size in range(5, config.classification_threshold + 1):
        if ckdir:
            loaded = load_level(ckdir, config.q, group, size)
            if loaded is not None:
                if not loaded.representatives:
                    break
                levels.append(loaded)
                continue
        prev = levels[-1].representatives
        canons: set = set()
        if config.worker_count > 1 and len(prev) > 1:
            props = config.proportions or scheduler.equal_proportions(config.worker_count)
            part = scheduler.partition(len(prev), props)
            job = functools.partial(
                _classify_job, q=config.q, group=group, reps=tuple(prev)
            )
            for chunk in scheduler.run_jobs(part, job, stealing=config.stealing):
                canons |= chunk
        else:
            for rep in prev:
                canons |= _children_of(plane, group, rep)
        if config.max_level_classes is not None and len(canons) > config.max_level_classes:
            raise MemoryBudgetExceededError(
                f"level {size} has {len(canons)} classes, budget {config.max_level_classes}"
            )
        level = ClassificationLevel(size, sorted(canons))
        if ckdir:
            save_level(ckdir, config.q, group, level)
        if not level.representatives:
            break
        levels.append(level)
    return levels


# ---------------------------------------------------------------------------
# extension


def extend(
    plane: Plane,
    group: str,
    rep: tuple[int, ...],
    bound: int,
    rep_index: int | None = None,
    level_map: dict | None = None,
) -> list[tuple[int, ...]]:
    """Depth-first extension of one representative's branch.

    Reports every complete arc of size <= bound reachable from rep by
    adding candidates in increasing index order.  When a level map
    {canonical form -> class index} for the representative's size is
    supplied, a first-level child is explored only if this branch owns
    it, i.e. the least class index among the child's codimension-1
    sub-arcs equals rep_index; every complete arc is then found under
    exactly the least class it contains, so nothing is lost.
    """
    root = sorted(rep)
    size0 = len(root)
    if size0 > bound:
        return []
    results: list[tuple[int, ...]] = []
    n = plane.size
    lt = plane.line_through_flat
    lm = plane.line_masks
    all_mask = plane.all_points_mask

    cand0 = candidate_mask(plane, root)
    if cand0 == 0:
        results.append(tuple(root))
        return results
    if size0 == bound:
        return results

    prune = level_map is not None and rep_index is not None

    # the root's secant block against each candidate never changes along a
    # descent, so fold those size0 mask updates into one precomputed AND
    root_block = {}
    for x in iter_bits(cand0):
        u = 0
        for m in root:
            u |= lm[lt[m * n + x]]
        root_block[x] = all_mask & ~u

    added: list[int] = []

    def descend(cand: int, last: int, size: int):
        if cand == 0:
            results.append(tuple(sorted(root + added)))
            return
        if size == bound:
            return
        for x in iter_bits(cand >> (last + 1) << (last + 1)):
            ncand = cand & root_block[x]
            for m in added:
                ncand &= ~lm[lt[m * n + x]]
            added.append(x)
            descend(ncand, x, size + 1)
            added.pop()

    for x in iter_bits(cand0):
        if prune:
            child = tuple(sorted((*root, x)))
            owner = min(
                level_map[
                    canonicalize(plane, child[:i] + child[i + 1 :], group).canon
                ]
                for i in range(len(child))
            )
            if owner != rep_index:
                continue
        added.append(x)
        descend(cand0 & root_block[x], x, size0 + 1)
        added.pop()
    return results


def _extend_job(i: int, q: int, group: str, reps, bound: int, level_map) -> list:
    return extend(default_plane(q), group, reps[i], bound, i, level_map)


def _run_extension(config: SearchConfig, plane: Plane, reps, bound: int, level_map):
    """Extend every representative; merge results in representative order."""
    if config.worker_count > 1 and len(reps) > 1:
        props = config.proportions or scheduler.equal_proportions(config.worker_count)
        part = scheduler.partition(len(reps), props)
        job = functools.partial(
            _extend_job,
            q=config.q,
            group=config.group,
            reps=tuple(reps),
            bound=bound,
            level_map=level_map,
        )
        merged: list[tuple[int, ...]] = []
        for branch in scheduler.run_jobs(part, job, stealing=config.stealing):
            merged.extend(branch)
        return merged
    merged = []
    for i, rep in enumerate(reps):
        merged.extend(extend(plane, config.group, rep, bound, i, level_map))
    return merged


def min_complete_size(config: SearchConfig, plane: Plane | None = None) -> MinCompleteResult:
    """Smallest n admitting a complete n-arc, with its exact class census.

    Classification levels are scanned first (a complete arc of size at
    most the threshold is itself a representative); beyond the threshold
    the bound grows from the arithmetic lower bound until the extension
    sweep reports something.
    """
    plane = plane if plane is not None else default_plane(config.q)
    levels = classify(config, plane)
    for lv in levels:
        complete = [r for r in lv.representatives if candidate_mask(plane, r) == 0]
        if complete:
            return MinCompleteResult(config.q, config.group, lv.size, len(complete), complete)

    top = levels[-1]
    level_map = {rep: i for i, rep in enumerate(top.representatives)}
    bound = max(lower_bound(config.q), top.size + 1)
    while bound <= config.q + 2:
        found = _run_extension(config, plane, top.representatives, bound, level_map)
        if found:
            t = min(len(a) for a in found)
            classes = sorted(
                {canonicalize(plane, a, config.group).canon for a in found if len(a) == t}
            )
            return MinCompleteResult(config.q, config.group, t, len(classes), classes)
        bound += 1
    raise RuntimeError(f"no complete arc found up to size {config.q + 2}")  # unreachable


def log(msg: str):
    print(msg, file=sys.stderr, flush=True)
