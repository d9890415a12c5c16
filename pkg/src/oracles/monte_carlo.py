"""
Monte-Carlo estimates of the fractions and of the union volume.

Samples are drawn in shards; shard s of ball i in a run with seed S uses
the generator ``default_rng((S, i, s))`` so results do not depend on how
many workers process the shards.
"""

import math
import logging
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np
import pandas as pd
from joblib import Parallel, delayed
from tqdm import tqdm

from ..complex.alpha_complex import AlphaComplex
from ..complex.ball_set import BallSet
from ..utils.config import DEFAULT_MC_SAMPLES

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MCConfig:
    """Sample count, seed and parallelism of a Monte-Carlo run."""
    samples: int = DEFAULT_MC_SAMPLES
    seed: int = 0
    shards: int = 8
    n_jobs: int = 1
    progress: bool = False

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError(f"Need at least one sample, got {self.samples}")
        if self.shards < 1:
            raise ValueError(f"Need at least one shard, got {self.shards}")

    def shard_sizes(self) -> List[int]:
        shards = min(self.shards, self.samples)
        base, extra = divmod(self.samples, shards)
        return [base + (1 if s < extra else 0) for s in range(shards)]


def _unit_vectors(rng: np.random.Generator, m: int) -> np.ndarray:
    v = rng.standard_normal((m, 3))
    return v / np.linalg.norm(v, axis=1, keepdims=True)


def _powers(points: np.ndarray, centers: np.ndarray, r2: np.ndarray) -> np.ndarray:
    diff = points[:, None, :] - centers[None, :, :]
    return np.einsum("mkc,mkc->mk", diff, diff) - r2[None, :]


def _fraction_shard(centers: np.ndarray, radii: np.ndarray, i: int, others: np.ndarray,
                    size: int, seed: Tuple[int, ...]) -> Tuple[int, int]:
    """Hits for sigma_i (sphere point outside the others) and nu_i (in Vor_i)."""
    rng = np.random.default_rng(seed)
    x_i, r_i = centers[i], radii[i]
    other_c, other_r2 = centers[others], radii[others] ** 2

    on_sphere = x_i + r_i * _unit_vectors(rng, size)
    if len(others):
        sigma_hits = int(np.sum(_powers(on_sphere, other_c, other_r2).min(axis=1) >= 0.0))
    else:
        sigma_hits = size

    radial = r_i * np.cbrt(rng.uniform(0.0, 1.0, size))
    in_ball = x_i + radial[:, None] * _unit_vectors(rng, size)
    if len(others):
        own = np.einsum("mc,mc->m", in_ball - x_i, in_ball - x_i) - r_i ** 2
        nu_hits = int(np.sum(_powers(in_ball, other_c, other_r2).min(axis=1) >= own))
    else:
        nu_hits = size
    return sigma_hits, nu_hits


def _neighbors(balls: BallSet, i: int) -> np.ndarray:
    d = np.linalg.norm(balls.centers - balls.centers[i], axis=1)
    mask = d < balls.radii + balls.radii[i]
    mask[i] = False
    return np.flatnonzero(mask)


def mc_fractions(balls: BallSet, cfg: MCConfig = MCConfig()) -> pd.DataFrame:
    """
    Estimate sigma_i and nu_i for every ball.

    Returns:
        DataFrame indexed by ball with sigma, sigma_err, nu, nu_err
        (errors are one standard deviation of the binomial estimate)
    """
    sizes = cfg.shard_sizes()
    tasks = [(i, s, size) for i in range(balls.n) for s, size in enumerate(sizes)]
    neighbors = {i: _neighbors(balls, i) for i in range(balls.n)}
    iterator = tqdm(tasks, desc="MC fractions", disable=not cfg.progress)
    results = Parallel(n_jobs=cfg.n_jobs)(
        delayed(_fraction_shard)(balls.centers, balls.radii, i, neighbors[i], size,
                                 (cfg.seed, i, s))
        for i, s, size in iterator
    )

    sigma_hits = np.zeros(balls.n)
    nu_hits = np.zeros(balls.n)
    for (i, _, _), (hs, hn) in zip(tasks, results):
        sigma_hits[i] += hs
        nu_hits[i] += hn
    total = float(sum(sizes))
    sigma = sigma_hits / total
    nu = nu_hits / total
    logger.info(f"Monte-Carlo fractions for {balls.n} balls at {int(total)} samples each")
    frame = pd.DataFrame({
        "sigma": sigma,
        "sigma_err": np.sqrt(sigma * (1.0 - sigma) / total),
        "nu": nu,
        "nu_err": np.sqrt(nu * (1.0 - nu) / total),
    })
    frame.index.name = "index"
    return frame


def mc_circle_fractions(complex_: AlphaComplex, cfg: MCConfig = MCConfig()) -> pd.DataFrame:
    """
    Estimate sigma_ij by sampling angles on every intersection circle.

    Returns:
        DataFrame with i, j, sigma, sigma_err
    """
    balls = complex_.balls
    rows = []
    for (i, j), edge in sorted(complex_.fractions.edges.items()):
        rng = np.random.default_rng((cfg.seed, i, j))
        theta = rng.uniform(0.0, 2.0 * math.pi, cfg.samples)
        e1, e2 = edge.frame
        points = (edge.pair.x_ij + edge.pair.r_ij
                  * (np.cos(theta)[:, None] * e1 + np.sin(theta)[:, None] * e2))
        others = np.array([k for k in _neighbors(balls, i) if k != j], dtype=int)
        if len(others):
            free = _powers(points, balls.centers[others], balls.radii[others] ** 2).min(axis=1) >= 0.0
            p = float(np.mean(free))
        else:
            p = 1.0
        rows.append({"i": i, "j": j, "sigma": p,
                     "sigma_err": math.sqrt(p * (1.0 - p) / cfg.samples)})
    return pd.DataFrame(rows, columns=["i", "j", "sigma", "sigma_err"])


def mc_union_volume(balls: BallSet, cfg: MCConfig = MCConfig()) -> Tuple[float, float]:
    """
    Weighted union volume by uniform sampling of the bounding box.

    A sample inside the union counts the weight of the ball whose
    Voronoi domain contains it.

    Returns:
        (estimate, standard error)
    """
    lo = (balls.centers - balls.radii[:, None]).min(axis=0)
    hi = (balls.centers + balls.radii[:, None]).max(axis=0)
    box = float(np.prod(hi - lo))
    values: List[np.ndarray] = []
    r2 = balls.radii ** 2
    for s, size in enumerate(cfg.shard_sizes()):
        rng = np.random.default_rng((cfg.seed, s))
        points = lo + (hi - lo) * rng.uniform(0.0, 1.0, (size, 3))
        powers = _powers(points, balls.centers, r2)
        owner = powers.argmin(axis=1)
        inside = powers[np.arange(size), owner] < 0.0
        values.append(np.where(inside, balls.weights[owner], 0.0))
    sample = np.concatenate(values)
    return box * float(sample.mean()), box * float(sample.std(ddof=1)) / math.sqrt(sample.size)


def compare_fractions(complex_: AlphaComplex, estimates: pd.DataFrame,
                      samples: int, sigmas: float = 3.0) -> pd.DataFrame:
    """
    Join analytic and sampled fractions with a pass flag per ball.

    A value passes when it is within ``sigmas`` standard errors of the
    estimate. An extra 3 / samples absorbs values within one hit of
    0 or 1, where the estimated error vanishes.
    """
    table = complex_.vertex_table()[["nu", "sigma"]].rename(
        columns={"nu": "nu_exact", "sigma": "sigma_exact"})
    table = table.join(estimates)
    floor = 3.0 / samples
    for name in ("sigma", "nu"):
        allowed = sigmas * table[f"{name}_err"] + floor
        table[f"{name}_ok"] = (table[f"{name}_exact"] - table[name]).abs() <= allowed
    return table
