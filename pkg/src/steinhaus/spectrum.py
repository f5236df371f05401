"""Exhaustive enumeration of triangle weights over all 2^n generators.

The engine packs one generator per integer lane and evolves whole blocks of
triangles at once with vectorized shift-XOR rows, accumulating popcounts.
Work splits into contiguous lane ranges (one per worker) whose histograms
merge by elementwise addition, so results are identical for any worker count
or chunk size. A second pass collects the generators at requested weights in
ascending packed order, capped to bound memory.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .bitseq import BitSeq

DEFAULT_CEILING = 30
CEILING_ENV = "STEINHAUS_MAX_N"
DEFAULT_MEMBER_CAP = 4096
_HARD_LIMIT = 40  # lanes are 64-bit at most; 2^40 is already days of work
_CHUNK = 1 << 20


class CeilingExceeded(ValueError):
    """Requested size is above the enumeration guard."""


def enumeration_ceiling() -> int:
    """Current size guard: STEINHAUS_MAX_N if set, else the default of 30."""
    raw = os.environ.get(CEILING_ENV)
    return int(raw) if raw else DEFAULT_CEILING


def _check_size(n: int, force: bool) -> None:
    if n < 1:
        raise ValueError("enumeration needs n >= 1")
    if n > _HARD_LIMIT:
        raise CeilingExceeded(f"n={n} exceeds the engine limit of {_HARD_LIMIT}")
    ceiling = enumeration_ceiling()
    if n > ceiling and not force:
        raise CeilingExceeded(
            f"n={n} exceeds the enumeration ceiling of {ceiling}; "
            f"pass force=True (CLI --force) or raise {CEILING_ENV}"
        )


def _dtype(n: int):
    return np.uint32 if n <= 31 else np.uint64


def _lane_weights(vals: np.ndarray, n: int) -> np.ndarray:
    """Triangle weight of every lane, as uint16."""
    dt = vals.dtype.type
    cur = vals
    acc = np.bitwise_count(cur).astype(np.uint16)
    for m in range(n - 1, 0, -1):
        cur = (cur ^ (cur >> dt(1))) & dt((1 << m) - 1)
        acc += np.bitwise_count(cur)
    return acc


def _lane_rot_r(vals: np.ndarray, n: int) -> np.ndarray:
    dt = vals.dtype.type
    cur = vals
    out = np.zeros_like(vals)
    for j in range(n):
        m = n - j
        out |= ((cur >> dt(m - 1)) & dt(1)) << dt(j)
        cur = (cur ^ (cur >> dt(1))) & dt((1 << (m - 1)) - 1)
    return out


def _lane_rot_l(vals: np.ndarray, n: int) -> np.ndarray:
    dt = vals.dtype.type
    cur = vals
    out = np.zeros_like(vals)
    for k in range(n):
        out |= (cur & dt(1)) << dt(n - 1 - k)
        cur = (cur ^ (cur >> dt(1))) & dt((1 << (n - 1 - k)) - 1)
    return out


def _lane_reverse(vals: np.ndarray, n: int) -> np.ndarray:
    dt = vals.dtype.type
    out = np.zeros_like(vals)
    for j in range(n):
        out |= ((vals >> dt(j)) & dt(1)) << dt(n - 1 - j)
    return out


def _chunks(start: int, stop: int):
    pos = start
    while pos < stop:
        yield pos, min(pos + _CHUNK, stop)
        pos = stop if pos + _CHUNK >= stop else pos + _CHUNK


def _lane_range(n: int, lo: int, hi: int) -> np.ndarray:
    dt = _dtype(n)
    return np.arange(hi - lo, dtype=dt) + dt(lo)


def _hist_range(n: int, lo: int, hi: int) -> np.ndarray:
    size = n * (n + 1) // 2 + 1
    hist = np.zeros(size, dtype=np.int64)
    for a, b in _chunks(lo, hi):
        w = _lane_weights(_lane_range(n, a, b), n)
        hist += np.bincount(w, minlength=size)
    return hist


def _reduced_hist_range(n: int, lo: int, hi: int) -> np.ndarray:
    size = n * (n + 1) // 2 + 1
    hist = np.zeros(size, dtype=np.int64)
    for a, b in _chunks(lo, hi):
        vals = _lane_range(n, a, b)
        rev = _lane_reverse(vals, n)
        six = np.stack([vals, _lane_rot_r(vals, n), _lane_rot_l(vals, n),
                        rev, _lane_rot_r(rev, n), _lane_rot_l(rev, n)])
        keep = vals == six.min(axis=0)
        kept = np.sort(six[:, keep], axis=0)
        sizes = 1 + np.count_nonzero(np.diff(kept, axis=0), axis=0)
        np.add.at(hist, _lane_weights(vals[keep], n), sizes)
    return hist


def _collect_range(n: int, lo: int, hi: int, wanted: np.ndarray, cap: int):
    """Per-weight (values, exact count) for lanes in [lo, hi); values capped."""
    found: dict[int, tuple[list[int], int]] = {}
    for a, b in _chunks(lo, hi):
        vals = _lane_range(n, a, b)
        w = _lane_weights(vals, n)
        mask = wanted[w]
        for v, wt in zip(vals[mask].tolist(), w[mask].tolist()):
            values, count = found.setdefault(wt, ([], 0))
            if count < cap:
                values.append(v)
            found[wt] = (values, count + 1)
    return found


def _splits(n: int, workers: int) -> list[tuple[int, int]]:
    total = 1 << n
    parts = max(1, min(workers, total))
    edges = [total * i // parts for i in range(parts + 1)]
    return [(edges[i], edges[i + 1]) for i in range(parts)]


def _resolve_workers(workers: int | None) -> int:
    if workers is None:
        return os.cpu_count() or 1
    if workers < 1:
        raise ValueError("worker count must be positive")
    return workers


def _map_ranges(fn, parts: list[tuple[int, int]]) -> list:
    """Apply fn to every range, in order. Threads only pay off on real work;
    small jobs run serially with identical split/merge semantics."""
    if len(parts) == 1 or parts[-1][1] < (1 << 14):
        return [fn(p) for p in parts]
    with ThreadPoolExecutor(max_workers=len(parts)) as pool:
        return list(pool.map(fn, parts))


def _run_hist(n: int, workers: int | None, range_fn) -> np.ndarray:
    parts = _splits(n, _resolve_workers(workers))
    pieces = _map_ranges(lambda p: range_fn(n, *p), parts)
    total = pieces[0]
    for piece in pieces[1:]:
        total += piece
    return total


def _run_collect(n: int, weights, cap: int, workers: int | None) -> dict[int, tuple[list[int], int]]:
    size = n * (n + 1) // 2 + 1
    wanted = np.zeros(size, dtype=bool)
    for w in weights:
        wanted[w] = True
    parts = _splits(n, _resolve_workers(workers))
    results = _map_ranges(lambda p: _collect_range(n, *p, wanted, cap), parts)
    merged: dict[int, tuple[list[int], int]] = {w: ([], 0) for w in weights}
    for part in results:  # ranges are ascending, so concatenation stays sorted
        for wt, (values, count) in part.items():
            acc_values, acc_count = merged[wt]
            room = cap - len(acc_values)
            acc_values.extend(values[:room])
            merged[wt] = (acc_values, acc_count + count)
    return merged


@dataclass(frozen=True)
class WeightSpectrum:
    """Exact histogram of triangle weights over all 2^n generators."""

    n: int
    counts: tuple[int, ...]

    @property
    def levels(self) -> tuple[int, ...]:
        """Weights that occur, ascending; index i is the i-th ladder level."""
        return tuple(w for w, c in enumerate(self.counts) if c)

    @property
    def m(self) -> int:
        """Top ladder index: number of distinct nonzero weights."""
        return len(self.levels) - 1

    def count(self, weight: int) -> int:
        return self.counts[weight] if 0 <= weight < len(self.counts) else 0

    @property
    def total(self) -> int:
        return sum(self.counts)


@dataclass(frozen=True)
class LevelSet:
    """Generators achieving one ladder level, capped at ``cap`` members."""

    index: int
    weight: int
    members: tuple[BitSeq, ...]
    count: int
    truncated: bool


@dataclass(frozen=True)
class WeightSlice:
    """All generators of one exact triangle weight (members possibly capped)."""

    n: int
    weight: int
    members: tuple[BitSeq, ...]
    count: int
    truncated: bool


def _to_seqs(n: int, values: list[int]) -> tuple[BitSeq, ...]:
    return tuple(sorted((BitSeq(n, v) for v in values), key=str))


def full_spectrum(n: int, *, workers: int | None = None, force: bool = False) -> WeightSpectrum:
    """Exact weight histogram by direct enumeration of every generator."""
    _check_size(n, force)
    return WeightSpectrum(n, tuple(_run_hist(n, workers, _hist_range).tolist()))


def symmetry_reduced_spectrum(n: int, *, workers: int | None = None,
                              force: bool = False) -> WeightSpectrum:
    """Same histogram, enumerating one orbit representative and adding orbit sizes.

    A lane contributes only if it is the smallest packed value in its orbit;
    the histogram then gains the orbit's size at that weight. Output is
    identical to ``full_spectrum`` because weight is symmetry-invariant.
    """
    _check_size(n, force)
    return WeightSpectrum(n, tuple(_run_hist(n, workers, _reduced_hist_range).tolist()))


def _level_sets(n: int, indices, spectrum: WeightSpectrum, cap: int,
                workers: int | None) -> list[LevelSet]:
    levels = spectrum.levels
    targets = [levels[i] for i in indices]
    got = _run_collect(n, sorted(set(targets)), cap, workers)
    out = []
    for i, w in zip(indices, targets):
        values, count = got[w]
        assert count == spectrum.counts[w]
        out.append(LevelSet(i, w, _to_seqs(n, values), count, count > len(values)))
    return out


def level_sets_low(n: int, k: int, *, cap: int = DEFAULT_MEMBER_CAP,
                   workers: int | None = None, force: bool = False,
                   spectrum: WeightSpectrum | None = None) -> list[LevelSet]:
    """Level sets W_0 .. W_k with members, via a second collection pass.

    Pass a precomputed ``spectrum`` for the same n to skip the histogram pass.
    """
    if k < 1:
        raise ValueError("need at least one level")
    if spectrum is None:
        spectrum = full_spectrum(n, workers=workers, force=force)
    if k > spectrum.m:
        raise ValueError(f"k={k} exceeds the top level m={spectrum.m} for n={n}")
    return _level_sets(n, range(k + 1), spectrum, cap, workers)


def level_sets_high(n: int, k: int, *, cap: int = DEFAULT_MEMBER_CAP,
                    workers: int | None = None, force: bool = False,
                    spectrum: WeightSpectrum | None = None) -> list[LevelSet]:
    """Level sets W_m, W_{m-1}, ... down k levels, with members."""
    if k < 1:
        raise ValueError("need at least one level")
    if spectrum is None:
        spectrum = full_spectrum(n, workers=workers, force=force)
    if k > spectrum.m + 1:
        raise ValueError(f"k={k} exceeds the ladder height for n={n}")
    indices = [spectrum.m - off for off in range(k)]
    return _level_sets(n, indices, spectrum, cap, workers)


def members_at_weights(n: int, weights, *, cap: int = DEFAULT_MEMBER_CAP,
                       workers: int | None = None,
                       force: bool = False) -> dict[int, WeightSlice]:
    """One collection pass returning the generators at each requested weight."""
    _check_size(n, force)
    targets = sorted(set(weights))
    top = n * (n + 1) // 2
    for w in targets:
        if not 0 <= w <= top:
            raise ValueError(f"weight {w} impossible for size {n}")
    got = _run_collect(n, targets, cap, workers)
    return {w: WeightSlice(n, w, _to_seqs(n, values), count, count > len(values))
            for w, (values, count) in got.items()}


def find_weight(n: int, w: int, *, cap: int = DEFAULT_MEMBER_CAP,
                workers: int | None = None, force: bool = False) -> WeightSlice:
    """Every generator whose triangle weight is exactly w (empty is valid)."""
    return members_at_weights(n, [w], cap=cap, workers=workers, force=force)[w]
