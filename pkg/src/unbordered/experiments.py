"""Average MUF-gap and runtime experiments over random or all words.

Per-trial randomness is derived from a master seed with SplitMix64, so a run
is reproducible regardless of the order in which cells are evaluated::

    trial_seed = mix(mix(mix(master ^ sigma) ^ n) ^ trial)

where ``mix`` is the SplitMix64 finalizer.  Each trial seed drives its own
``numpy.random.Generator(PCG64)``.
"""

from __future__ import annotations

import csv
import gc
import io
import logging
import time
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import TextIO

import numpy as np

from .combinatorics import ENUMERATION_LIMIT
from .muf import MufResult, muf, muf_basic, muf_brute, muf_early_stop

log = logging.getLogger(__name__)

ALGORITHMS: dict[str, Callable[[Sequence[int]], MufResult]] = {
    "brute": muf_brute,
    "basic": muf_basic,
    "early_stop": muf_early_stop,
    "dispatch": muf,
}

MASK64 = (1 << 64) - 1


def splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


def trial_seed(master: int, sigma: int, n: int, trial: int) -> int:
    h = master & MASK64
    for v in (sigma, n, trial):
        h = splitmix64(h ^ v)
    return h


def random_word(n: int, sigma: int, seed: int) -> tuple[int, ...]:
    """Uniform word of ``A^n``, a deterministic function of its arguments."""
    if n < 1 or sigma < 2:
        raise ValueError(f"need n >= 1 and sigma >= 2, got n={n}, sigma={sigma}")
    rng = np.random.Generator(np.random.PCG64(seed))
    return tuple(rng.integers(0, sigma, size=n).tolist())


@dataclass
class ExperimentConfig:
    n_min: int = 1
    n_max: int = 100
    sigmas: tuple[int, ...] = (2, 3, 4, 5)
    mode: str = "montecarlo"
    trials: int = 10_000
    seed: int = 0
    algorithms: tuple[str, ...] = ("basic", "early_stop")
    # explicit lengths override the n_min..n_max range
    n_values: tuple[int, ...] | None = None
    # timing rounds; the median round is reported
    repeats: int = 5

    def __post_init__(self) -> None:
        self.sigmas = tuple(self.sigmas)
        self.algorithms = tuple(self.algorithms)
        if self.n_values is not None:
            self.n_values = tuple(self.n_values)
        if self.mode not in ("exhaustive", "montecarlo"):
            raise ValueError(f"mode must be 'exhaustive' or 'montecarlo', got {self.mode!r}")
        if not 1 <= self.n_min <= self.n_max:
            raise ValueError(f"need 1 <= n_min <= n_max, got {self.n_min}, {self.n_max}")
        if any(n < 1 for n in self.lengths):
            raise ValueError("lengths must be >= 1")
        if not self.sigmas or any(s < 2 for s in self.sigmas):
            raise ValueError(f"sigmas must be >= 2, got {self.sigmas}")
        unknown = set(self.algorithms) - ALGORITHMS.keys()
        if unknown:
            raise ValueError(f"unknown algorithms: {sorted(unknown)}")
        if self.repeats < 1:
            raise ValueError(f"repeats must be >= 1, got {self.repeats}")
        if self.mode == "montecarlo" and self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if self.mode == "exhaustive":
            for s in self.sigmas:
                if s ** max(self.lengths) > ENUMERATION_LIMIT:
                    raise ValueError(
                        f"exhaustive mode: {s}^{max(self.lengths)} words exceeds "
                        f"the limit of {ENUMERATION_LIMIT}"
                    )

    @property
    def lengths(self) -> tuple[int, ...]:
        if self.n_values is not None:
            return self.n_values
        return tuple(range(self.n_min, self.n_max + 1))


@dataclass
class ExperimentRow:
    sigma: int
    n: int
    trials: int
    mean_gap: float
    mean_muf: float
    # sample standard deviation of the gap; 0 for exhaustive rows
    sd_gap: float = 0.0
    times: dict[str, float] = field(default_factory=dict)


def _sample(cfg: ExperimentConfig, n: int, sigma: int) -> Iterable[tuple[int, ...]]:
    if cfg.mode == "exhaustive":
        return product(range(sigma), repeat=n)
    return (random_word(n, sigma, trial_seed(cfg.seed, sigma, n, t)) for t in range(cfg.trials))


def _exhaustive_gap(n: int, sigma: int) -> Fraction:
    # renaming letters preserves the MUF, so words starting with letter 0
    # have the same gap distribution as all of A^n
    total = 0
    count = 0
    for tail in product(range(sigma), repeat=n - 1):
        total += n - muf((0,) + tail).length
        count += 1
    return Fraction(total, count)


def gap_experiment(cfg: ExperimentConfig) -> list[ExperimentRow]:
    """Mean of ``n - b(S)`` per ``(sigma, n)``, rows sorted by ``(sigma, n)``."""
    rows = []
    for sigma in sorted(cfg.sigmas):
        for n in sorted(cfg.lengths):
            if cfg.mode == "exhaustive":
                mean = _exhaustive_gap(n, sigma)
                row = ExperimentRow(sigma, n, sigma**n, float(mean), float(n - mean))
            else:
                gaps = np.fromiter(
                    (n - muf(w).length for w in _sample(cfg, n, sigma)),
                    dtype=np.int64,
                    count=cfg.trials,
                )
                mean = float(gaps.mean())
                sd = float(gaps.std(ddof=1)) if cfg.trials > 1 else 0.0
                row = ExperimentRow(sigma, n, cfg.trials, mean, n - mean, sd)
            log.info("gap sigma=%d n=%d mean_gap=%.4f", sigma, n, row.mean_gap)
            rows.append(row)
    return rows


def _timed_pass(fn, words) -> tuple[float, list[MufResult]]:
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        t0 = time.perf_counter()
        out = [fn(w) for w in words]
        return time.perf_counter() - t0, out
    finally:
        if gc_was_enabled:
            gc.enable()


def timing_experiment(cfg: ExperimentConfig) -> list[ExperimentRow]:
    """Mean wall-clock seconds per word for each selected algorithm.

    All algorithms see the same words.  After an untimed warm-up per cell,
    ``cfg.repeats`` rounds are run; each round makes one timed pass of every
    algorithm over every ``(sigma, n)`` sample, so slow phases of the machine
    hit all cells alike.  The reported time is the median over rounds of the
    per-word mean.  MUF lengths are compared on every word; a mismatch
    raises ``RuntimeError``.
    """
    if len(cfg.algorithms) < 2:
        raise ValueError("timing needs at least two algorithms")
    cells = [(sigma, n) for sigma in sorted(cfg.sigmas) for n in sorted(cfg.lengths)]
    samples = {}
    for sigma, n in cells:
        words = list(_sample(cfg, n, sigma))
        for name in cfg.algorithms:
            for w in words[:10]:
                ALGORITHMS[name](w)
        samples[sigma, n] = words

    passes: dict[tuple[int, int, str], list[float]] = {}
    results: dict[tuple[int, int], dict[str, list[MufResult]]] = {}
    for rnd in range(cfg.repeats):
        for sigma, n in cells:
            words = samples[sigma, n]
            for name in cfg.algorithms:
                elapsed, out = _timed_pass(ALGORITHMS[name], words)
                passes.setdefault((sigma, n, name), []).append(elapsed / len(words))
                if rnd == 0:
                    results.setdefault((sigma, n), {})[name] = out
        log.info("timing round %d/%d done", rnd + 1, cfg.repeats)

    rows = []
    for sigma, n in cells:
        gaps = _cross_check(n, samples[sigma, n], results[sigma, n])
        mean = sum(gaps) / len(gaps)
        times = {name: float(np.median(passes[sigma, n, name])) for name in cfg.algorithms}
        rows.append(ExperimentRow(sigma, n, len(gaps), mean, n - mean, times=times))
        log.info(
            "timing sigma=%d n=%d %s",
            sigma,
            n,
            " ".join(f"{k}={v:.3g}s" for k, v in times.items()),
        )
    return rows


def _cross_check(n: int, words: list, results: dict[str, list[MufResult]]) -> list[int]:
    names = list(results)
    ref = names[0]
    for t, w in enumerate(words):
        expected = results[ref][t].length
        for name in names[1:]:
            got = results[name][t].length
            if got != expected:
                raise RuntimeError(
                    f"MUF length mismatch on trial {t} ({w}): "
                    f"{ref}={expected}, {name}={got}"
                )
    return [n - r.length for r in results[ref]]


def _fmt(x: float) -> str:
    return f"{x:.6g}"


def write_csv(rows: Sequence[ExperimentRow], destination: str | TextIO) -> None:
    """Write rows as ``sigma,n,trials,mean_gap,mean_muf[,time_<alg>...]``.

    ``destination`` is a path or an open text stream.  Reals carry 6
    significant digits.
    """
    if not rows:
        raise ValueError("no rows to write")
    algs: list[str] = []
    for row in rows:
        for name in row.times:
            if name not in algs:
                algs.append(name)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["sigma", "n", "trials", "mean_gap", "mean_muf"] + [f"time_{a}" for a in algs])
    for row in rows:
        writer.writerow(
            [row.sigma, row.n, row.trials, _fmt(row.mean_gap), _fmt(row.mean_muf)]
            + [_fmt(row.times[a]) if a in row.times else "" for a in algs]
        )
    if isinstance(destination, str):
        try:
            with open(destination, "w", newline="") as fh:
                fh.write(buf.getvalue())
        except OSError as exc:
            raise OSError(f"cannot write CSV to {destination}: {exc.strerror}") from exc
    else:
        destination.write(buf.getvalue())


def loglog_slope(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Least-squares slope of ``log y`` against ``log x``."""
    return float(np.polyfit(np.log(xs), np.log(ys), 1)[0])
