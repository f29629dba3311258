"""Exact simulation of the random flight; the oracle side of every formula check.

Sampling law: direction switches occur at the events of a Poisson(lam)
process; between events the particle travels straight at speed c with a
direction drawn uniformly on the unit sphere.  Conditioned on N(t) = n the
switch epochs are the order statistics of n uniforms on (0, t), which is what
the batch samplers use.

Determinism: work is split into fixed-size chunks and chunk k draws from a
counter-based Philox stream keyed by (seed, k).  Chunk results are reduced in
index order, so estimates are bit-identical for any worker count.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .errors import DomainError
from .model import FlightParams, McConfig, McEstimate, Vec3

__all__ = [
    "PathSample",
    "CfEstimate",
    "RadialHistogram",
    "sample_direction",
    "sample_position",
    "sample_position_given_n",
    "sample_positions",
    "sample_positions_given_n",
    "estimate_cf",
    "estimate_conditional_cf",
    "estimate_ball_prob",
    "radial_histogram",
]


@dataclass(frozen=True)
class PathSample:
    """One simulated endpoint with its switch count."""

    position: Vec3
    n_switches: int


class CfEstimate(NamedTuple):
    """Empirical characteristic function: real part and imaginary part."""

    real: McEstimate
    imag: McEstimate


class RadialHistogram(NamedTuple):
    """Interior radial masses plus the separately reported sphere-atom mass."""

    edges: np.ndarray
    masses: np.ndarray
    atom_fraction: float


def substream(seed: int, chunk_index: int) -> np.random.Generator:
    """Independent generator for one chunk, a pure function of (seed, index)."""
    return np.random.Generator(np.random.Philox(key=[seed, chunk_index]))


def _unit_vectors(rng: np.random.Generator, shape) -> np.ndarray:
    # uniform on S^2: cos(colatitude) uniform on [-1,1], longitude uniform
    z = rng.uniform(-1.0, 1.0, shape)
    phi = rng.uniform(0.0, 2.0 * math.pi, shape)
    s = np.sqrt(np.maximum(0.0, 1.0 - z * z))
    return np.stack([s * np.cos(phi), s * np.sin(phi), z], axis=-1)


def sample_direction(rng: np.random.Generator) -> Vec3:
    """One uniformly random unit vector."""
    v = _unit_vectors(rng, ())
    return Vec3(float(v[0]), float(v[1]), float(v[2]))


def sample_position(t: float, p: FlightParams, rng: np.random.Generator) -> PathSample:
    """One endpoint, simulated literally: exponential gaps, straight segments."""
    if t <= 0:
        raise DomainError(f"t must be > 0, got {t}")
    pos = np.zeros(3)
    elapsed = 0.0
    n = 0
    while True:
        gap = rng.exponential(1.0 / p.lam)
        direction = _unit_vectors(rng, ())
        if elapsed + gap >= t:
            pos += (t - elapsed) * direction
            break
        pos += gap * direction
        elapsed += gap
        n += 1
    pos *= p.c
    return PathSample(position=Vec3(*map(float, pos)), n_switches=n)


def sample_position_given_n(
    n: int, t: float, p: FlightParams, rng: np.random.Generator
) -> Vec3:
    """One endpoint conditioned on exactly n switches (sorted-uniform epochs)."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    if t <= 0:
        raise DomainError(f"t must be > 0, got {t}")
    if n == 0:
        v = _unit_vectors(rng, ())
        return Vec3(*(float(p.c * t * c) for c in v))
    epochs = np.sort(rng.uniform(0.0, t, n))
    durations = np.diff(np.concatenate([[0.0], epochs, [t]]))
    directions = _unit_vectors(rng, (n + 1,))
    pos = p.c * (durations @ directions)
    return Vec3(*map(float, pos))


def sample_positions_given_n(
    n: int, t: float, p: FlightParams, size: int, rng: np.random.Generator
) -> np.ndarray:
    """Batch of `size` endpoints conditioned on exactly n switches; shape (size, 3)."""
    if n == 0:
        return p.c * t * _unit_vectors(rng, size)
    epochs = np.sort(rng.uniform(0.0, t, (size, n)), axis=1)
    knots = np.concatenate(
        [np.zeros((size, 1)), epochs, np.full((size, 1), t)], axis=1
    )
    durations = np.diff(knots, axis=1)
    directions = _unit_vectors(rng, (size, n + 1))
    return p.c * np.einsum("ij,ijk->ik", durations, directions)


def sample_positions(
    t: float, p: FlightParams, size: int, rng: np.random.Generator
) -> tuple:
    """Batch of `size` unconditional endpoints.

    Returns (positions, counts) with shapes (size, 3) and (size,).  Counts are
    Poisson(lam t); epochs beyond each sample's count are pinned to t so the
    induced extra segments have zero duration and the pad directions are
    multiplied away.
    """
    counts = rng.poisson(p.lam * t, size)
    max_n = int(counts.max()) if size else 0
    epochs = rng.uniform(0.0, t, (size, max_n))
    epochs[np.arange(max_n) >= counts[:, None]] = t
    epochs.sort(axis=1)
    knots = np.concatenate(
        [np.zeros((size, 1)), epochs, np.full((size, 1), t)], axis=1
    )
    durations = np.diff(knots, axis=1)
    directions = _unit_vectors(rng, (size, max_n + 1))
    positions = p.c * np.einsum("ij,ijk->ik", durations, directions)
    return positions, counts


def _chunk_sizes(cfg: McConfig) -> list:
    full, rem = divmod(cfg.samples, cfg.chunk)
    sizes = [cfg.chunk] * full
    if rem:
        sizes.append(rem)
    return sizes


def _map_chunks(cfg: McConfig, fn, workers: int) -> list:
    """Apply fn(chunk_index, chunk_size) to every chunk, results in index order."""
    sizes = _chunk_sizes(cfg)
    if workers <= 1:
        return [fn(i, s) for i, s in enumerate(sizes)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, range(len(sizes)), sizes))


def _mean_with_error(sums: np.ndarray, sumsqs: np.ndarray, n: int) -> McEstimate:
    # per-chunk partial sums are combined with np.sum (pairwise) in chunk order
    s1 = float(np.sum(sums))
    s2 = float(np.sum(sumsqs))
    mean = s1 / n
    if n < 2:
        return McEstimate(mean=mean, std_error=0.0, samples=n)
    var = max(0.0, (s2 - s1 * s1 / n) / (n - 1))
    return McEstimate(mean=mean, std_error=math.sqrt(var / n), samples=n)


def _cf_from_chunks(cfg: McConfig, positions_of_chunk, alpha_norm: float, workers: int):
    def one(i: int, size: int):
        pos = positions_of_chunk(substream(cfg.seed, i), size)
        proj = alpha_norm * pos[:, 0]
        cos_v = np.cos(proj)
        sin_v = np.sin(proj)
        return (
            np.sum(cos_v),
            np.sum(cos_v * cos_v),
            np.sum(sin_v),
            np.sum(sin_v * sin_v),
        )

    parts = np.array(_map_chunks(cfg, one, workers))
    n = cfg.samples
    return CfEstimate(
        real=_mean_with_error(parts[:, 0], parts[:, 1], n),
        imag=_mean_with_error(parts[:, 2], parts[:, 3], n),
    )


def estimate_cf(
    alpha_norm: float, t: float, p: FlightParams, cfg: McConfig, workers: int = 1
) -> CfEstimate:
    """Empirical characteristic function at alpha = (alpha_norm, 0, 0).

    By radial symmetry the direction of alpha is irrelevant; the imaginary
    part is 0 in law and its estimate is returned for the symmetry check.
    """
    if cfg.samples < 10_000:
        raise DomainError("estimate_cf needs at least 1e4 samples")
    return _cf_from_chunks(
        cfg, lambda rng, size: sample_positions(t, p, size, rng)[0], alpha_norm, workers
    )


def estimate_conditional_cf(
    n: int, alpha_norm: float, t: float, p: FlightParams, cfg: McConfig, workers: int = 1
) -> CfEstimate:
    """Empirical characteristic function given exactly n switches."""
    if cfg.samples < 10_000:
        raise DomainError("estimate_conditional_cf needs at least 1e4 samples")
    return _cf_from_chunks(
        cfg,
        lambda rng, size: sample_positions_given_n(n, t, p, size, rng),
        alpha_norm,
        workers,
    )


def estimate_ball_prob(
    r: float, t: float, p: FlightParams, cfg: McConfig, workers: int = 1
) -> McEstimate:
    """Fraction of endpoints with ||X|| <= r, with its binomial standard error."""
    if r < 0:
        raise DomainError(f"r must be >= 0, got {r}")
    if r >= p.c * t:
        # whole support: exactly 1 without sampling noise at the boundary
        return McEstimate(mean=1.0, std_error=0.0, samples=cfg.samples)

    def one(i: int, size: int):
        pos, _ = sample_positions(t, p, size, substream(cfg.seed, i))
        inside = np.linalg.norm(pos, axis=1) <= r
        hits = float(np.sum(inside))
        return hits, hits  # indicator squared is the indicator

    parts = np.array(_map_chunks(cfg, one, workers))
    return _mean_with_error(parts[:, 0], parts[:, 1], cfg.samples)


def radial_histogram(
    t: float,
    p: FlightParams,
    cfg: McConfig,
    bins: int,
    condition: Optional[int] = None,
    workers: int = 1,
) -> RadialHistogram:
    """Empirical radial mass per bin on [0, ct], atom mass reported separately.

    Unconditional runs classify no-switch samples as the sphere atom and
    histogram the rest; conditioned on n the histogram covers all samples
    (for n = 0 everything is atom).  Masses are fractions of the total sample
    count, so masses.sum() + atom_fraction == 1 exactly.
    """
    if bins < 1:
        raise DomainError(f"bins must be >= 1, got {bins}")
    ct = p.c * t
    edges = np.linspace(0.0, ct, bins + 1)

    def one(i: int, size: int):
        rng = substream(cfg.seed, i)
        if condition is None:
            pos, counts = sample_positions(t, p, size, rng)
            interior = counts > 0
            radii = np.linalg.norm(pos[interior], axis=1)
            atom = size - int(np.count_nonzero(interior))
        elif condition == 0:
            return np.zeros(bins), size
        else:
            pos = sample_positions_given_n(condition, t, p, size, rng)
            radii = np.linalg.norm(pos, axis=1)
            atom = 0
        hist, _ = np.histogram(np.clip(radii, 0.0, ct), bins=edges)
        return hist.astype(float), atom

    parts = _map_chunks(cfg, one, workers)
    counts = np.sum([c for c, _ in parts], axis=0)
    atom_total = sum(a for _, a in parts)
    return RadialHistogram(
        edges=edges,
        masses=counts / cfg.samples,
        atom_fraction=atom_total / cfg.samples,
    )
