"""Multinomial model: joint distributions, exact moments, bias and sampling.

Each item's pair of labels (C1_i, C2_i) is an independent draw with
probabilities pi_kl. Under independence of the two clusterings pi_kl equals
the product of its marginals.
"""

import math
from math import comb
from pathlib import Path

import numpy as np
from numpy.typing import ArrayLike

from concord.config import settings
from concord.constants import (
    DEFAULT_DELIMITER,
    MC_BLOCK_DRAWS,
    MC_MAX_N,
    MIN_ITEMS_PAIRS,
    MIN_ITEMS_QUADRUPLETS,
    MIN_ITEMS_VARIANCE,
    PROBABILITY_TOLERANCE,
    STUDY_SCENARIOS,
)
from concord.exceptions import InputError, InvalidDistribution, InvalidSpec, TooFewItems
from concord.helpers.files import read_matrix
from concord.helpers.seeding import mean_and_standard_error, mean_and_variance, stream
from concord.labels import factorize
from concord.models.labels import LabelVector
from concord.models.multinomial import JointDistribution, ScenarioSpec
from concord.models.reports import BiasReport, MomentReport, MonteCarloSummary


def as_distribution(pi: JointDistribution | ArrayLike) -> JointDistribution:
    """Validate a probability matrix and attach its marginals.

    Raises:
        InvalidDistribution: If pi is not a 2-D matrix of finite non-negative
            reals summing to 1 within 1e-12
    """
    if isinstance(pi, JointDistribution):
        return pi
    try:
        probs = np.array(pi, dtype=float, copy=True)
    except (TypeError, ValueError) as e:
        raise InvalidDistribution(f"InvalidDistribution: not a numeric matrix ({e})") from e
    if probs.ndim != 2 or probs.size == 0:
        raise InvalidDistribution("InvalidDistribution: pi must be a non-empty K x L matrix")
    if not np.all(np.isfinite(probs)):
        raise InvalidDistribution("InvalidDistribution: pi has non-finite entries")
    if np.any(probs < 0):
        raise InvalidDistribution("InvalidDistribution: pi has negative entries")
    total = math.fsum(probs.ravel().tolist())
    if abs(total - 1.0) > PROBABILITY_TOLERANCE:
        raise InvalidDistribution(
            f"InvalidDistribution: pi sums to {total!r}, expected 1"
        )
    probs.setflags(write=False)
    rows = probs.sum(axis=1)
    cols = probs.sum(axis=0)
    rows.setflags(write=False)
    cols.setflags(write=False)
    return JointDistribution(probs=probs, row_marginals=rows, col_marginals=cols)


def load_distribution(
    path: Path | str, delimiter: str = DEFAULT_DELIMITER, header: bool = False
) -> JointDistribution:
    """Read a delimited pi matrix (rows k, columns l) and validate it."""
    return as_distribution(read_matrix(Path(path), delimiter, header))


def independent_distribution(pi: JointDistribution | ArrayLike) -> JointDistribution:
    """Product of the marginals of pi: the independence counterpart with equal margins."""
    pi = as_distribution(pi)
    product = np.outer(pi.row_marginals, pi.col_marginals)
    return as_distribution(product / math.fsum(product.ravel().tolist()))


def random_distribution(
    num_rows: int, num_cols: int, rng: np.random.Generator
) -> JointDistribution:
    """K x L distribution from normalized independent uniform(0, 1) weights."""
    weights = rng.random((num_rows, num_cols))
    return as_distribution(weights / math.fsum(weights.ravel().tolist()))


def _fsum(values: np.ndarray) -> float:
    return math.fsum(np.ravel(values).tolist())


def _square_sums(pi: JointDistribution) -> tuple[float, float, float]:
    return (
        _fsum(pi.probs * pi.probs),
        _fsum(pi.row_marginals * pi.row_marginals),
        _fsum(pi.col_marginals * pi.col_marginals),
    )


def _cross_moment(pi: JointDistribution) -> float:
    """sum_kl pi_kl pi_k. pi_.l, the probability behind one triplet term."""
    return _fsum(pi.probs * np.outer(pi.row_marginals, pi.col_marginals))


def _require(n: int, minimum: int, quantity: str) -> None:
    if n < minimum:
        raise TooFewItems(n, minimum, quantity)


def theta(pi: JointDistribution | ArrayLike) -> float:
    """Expectation of the MRI: sum of squared cell probabilities."""
    return _square_sums(as_distribution(pi))[0]


def theta0(pi: JointDistribution | ArrayLike) -> float:
    """Expectation of the MRI under independence with the same marginals."""
    _, rows2, cols2 = _square_sums(as_distribution(pi))
    return rows2 * cols2


def theta_ri(pi: JointDistribution | ArrayLike) -> float:
    """Expectation of the RI."""
    cells2, rows2, cols2 = _square_sums(as_distribution(pi))
    return 1.0 + 2.0 * cells2 - rows2 - cols2


def theta0_ri(pi: JointDistribution | ArrayLike) -> float:
    """Expectation of the RI under independence with the same marginals."""
    _, rows2, cols2 = _square_sums(as_distribution(pi))
    return 1.0 + 2.0 * rows2 * cols2 - rows2 - cols2


def variance_mri(pi: JointDistribution | ArrayLike, n: int) -> float:
    """Exact variance of the MRI over n items.

    Raises:
        TooFewItems: If n < 3
    """
    _require(n, MIN_ITEMS_VARIANCE, "MRI variance")
    pi = as_distribution(pi)
    cells2 = _fsum(pi.probs**2)
    cells3 = _fsum(pi.probs**3)
    pairs = comb(n, 2)
    return (cells2 - cells2**2) / pairs + (n * (n - 1) * (n - 2) / pairs**2) * (
        cells3 - cells2**2
    )


def expected_theta0_hat_hubert(pi: JointDistribution | ArrayLike, n: int) -> float:
    """E[(sum_P C1)(sum_P C2)] / C(n,2)^2, the hypergeometric null estimate without its factor 2.

    Raises:
        TooFewItems: If n < 2
    """
    _require(n, MIN_ITEMS_PAIRS, "null estimate expectation")
    pi = as_distribution(pi)
    cells2, rows2, cols2 = _square_sums(pi)
    pairs = comb(n, 2)
    expected_product = (
        pairs * cells2
        + n * (n - 1) * (n - 2) * _cross_moment(pi)
        + 6 * comb(n, 4) * rows2 * cols2
    )
    return expected_product / pairs**2


def expected_ari(pi: JointDistribution | ArrayLike, n: int) -> float:
    """Expectation of the unnormalized ARI over n items under the multinomial model.

    Raises:
        TooFewItems: If n < 4
    """
    _require(n, MIN_ITEMS_QUADRUPLETS, "ARI expectation")
    pi = as_distribution(pi)
    return 2.0 * theta(pi) - 2.0 * expected_theta0_hat_hubert(pi, n)


def bias_definition(pi: JointDistribution | ArrayLike, n: int) -> float:
    """Bias of the hypergeometric null estimate as theta0 minus its expectation."""
    pi = as_distribution(pi)
    return theta0(pi) - expected_theta0_hat_hubert(pi, n)


def bias(pi: JointDistribution | ArrayLike, n: int) -> BiasReport:
    """Bias of the hypergeometric null adjustment at n items, with its 8/n bound.

    Uses the rewritten closed form; ``bias_definition`` gives the same value.

    Raises:
        TooFewItems: If n < 2
    """
    _require(n, MIN_ITEMS_PAIRS, "bias")
    pi = as_distribution(pi)
    cells2, rows2, cols2 = _square_sums(pi)
    scale = n * (n - 1)
    value = (
        (4 * n - 6) / scale * (rows2 * cols2)
        - 2 / scale * cells2
        - 4 * (n - 2) / scale * _cross_moment(pi)
    )
    return BiasReport(n=n, bias=value, bias_ari=2.0 * value, bound=8.0 / n)


def moments(pi: JointDistribution | ArrayLike, n: int | None = None) -> MomentReport:
    """All model moments; the n-dependent ones are filled when n is large enough."""
    pi = as_distribution(pi)
    sigma2 = variance_mri(pi, n) if n is not None and n >= MIN_ITEMS_VARIANCE else None
    e_ari = expected_ari(pi, n) if n is not None and n >= MIN_ITEMS_QUADRUPLETS else None
    return MomentReport(
        theta=theta(pi),
        theta0=theta0(pi),
        theta_ri=theta_ri(pi),
        theta0_ri=theta0_ri(pi),
        n=n,
        sigma2=sigma2,
        e_ari=e_ari,
    )


def scenario_distribution(spec: ScenarioSpec) -> JointDistribution:
    """Build the K x K distribution of a simulation scenario.

    Scenario 1 puts 1 - eps on the first diagonal cell and spreads eps over
    the rest of the diagonal. Scenario 2 is a (1 - eps)/K diagonal with a
    cyclic eps/K superdiagonal. Scenario 3 puts 1 - eps on the first cell and
    spreads eps over the rest of the first row and first column.

    Raises:
        InvalidSpec: If the scenario id, K or epsilon is out of range
    """
    if spec.scenario_id not in STUDY_SCENARIOS:
        raise InvalidSpec(f"InvalidSpec: unknown scenario {spec.scenario_id}")
    if spec.k < 2:
        raise InvalidSpec(f"InvalidSpec: K must be >= 2, got {spec.k}")
    if not 0.0 < spec.epsilon < 1.0:
        raise InvalidSpec(f"InvalidSpec: epsilon must lie in (0, 1), got {spec.epsilon}")

    K, eps = spec.k, spec.epsilon
    probs = np.zeros((K, K))
    diagonal = np.arange(K)
    if spec.scenario_id == 1:
        probs[diagonal, diagonal] = eps / (K - 1)
        probs[0, 0] = 1.0 - eps
    elif spec.scenario_id == 2:
        probs[diagonal, diagonal] = (1.0 - eps) / K
        probs[diagonal, (diagonal + 1) % K] = eps / K
    else:
        spread = eps / (2 * K - 2)
        probs[0, 1:] = spread
        probs[1:, 0] = spread
        probs[0, 0] = 1.0 - eps

    # last non-zero cell absorbs rounding
    nonzero = np.flatnonzero(probs.ravel())
    flat = probs.ravel()
    flat[nonzero[-1]] = 1.0 - math.fsum(flat[nonzero[:-1]].tolist())
    return as_distribution(flat.reshape(K, K))


def sample(
    pi: JointDistribution | ArrayLike, n: int, seed: int
) -> tuple[LabelVector, LabelVector]:
    """Draw n items' label pairs i.i.d. from pi by inverse CDF over the non-zero cells.

    Clusters that are never drawn do not appear in the factorized outputs.

    Raises:
        InputError: If n < 1
    """
    if n < 1:
        raise InputError("sample size must be >= 1")
    pi = as_distribution(pi)
    cells, cdf = _cell_cdf(pi)
    drawn = cells[np.searchsorted(cdf, stream(seed).random(n), side="right")]
    rows, cols = np.divmod(drawn, pi.shape[1])
    return factorize(rows), factorize(cols)


def _cell_cdf(pi: JointDistribution) -> tuple[np.ndarray, np.ndarray]:
    cells = np.flatnonzero(pi.probs.ravel() > 0)
    cdf = np.cumsum(pi.probs.ravel()[cells])
    cdf[-1] = 1.0
    return cells, cdf


def _replicate_indices(
    pi: JointDistribution, n: int, reps: int, rng: np.random.Generator
) -> dict[str, np.ndarray]:
    """Observed MRI, unnormalized ARI and MARI for ``reps`` independent samples."""
    cells, cdf = _cell_cdf(pi)
    m = cells.size
    cell_rows, cell_cols = np.divmod(cells, pi.shape[1])
    K, L = pi.shape

    drawn = np.searchsorted(cdf, rng.random((reps, n)), side="right")
    offsets = np.arange(reps, dtype=np.int64)[:, None] * m
    counts = np.bincount((drawn + offsets).ravel(), minlength=reps * m).reshape(reps, m)

    row_sizes = counts @ np.eye(K, dtype=np.int64)[cell_rows]
    col_sizes = counts @ np.eye(L, dtype=np.int64)[cell_cols]

    s_cells2 = (counts * counts).sum(axis=1)
    s_rows2 = (row_sizes * row_sizes).sum(axis=1)
    s_cols2 = (col_sizes * col_sizes).sum(axis=1)
    s_rcm = (row_sizes[:, cell_rows] * counts * col_sizes[:, cell_cols]).sum(axis=1)

    pairs = comb(n, 2)
    sum_p = (s_cells2 - n) // 2
    prod_p = ((s_rows2 - n) // 2) * ((s_cols2 - n) // 2)
    result = {
        "mri": sum_p / pairs,
        "ari_unnormalized": 2.0 * sum_p / pairs - 2.0 * prod_p / pairs**2,
    }
    if n >= MIN_ITEMS_QUADRUPLETS:
        sum_t = 2 * n + s_rcm - s_cells2 - s_rows2 - s_cols2
        sum_q = prod_p - sum_p - sum_t
        result["mari"] = sum_p / pairs - sum_q / (6 * comb(n, 4))
    return result


def monte_carlo(
    pi: JointDistribution | ArrayLike,
    n: int,
    reps: int,
    seed: int,
    cell: tuple[int, ...] = (),
    block: int | None = None,
) -> MonteCarloSummary:
    """Replicate means and standard errors of MRI, unnormalized ARI and MARI.

    Replicates run in fixed blocks of at most ``block`` replicates and
    ``MC_BLOCK_DRAWS`` uniform draws; block b draws from the stream
    ``(seed, *cell, b)``, so results do not depend on scheduling.

    Raises:
        TooFewItems: If n < 2
        InputError: If reps < 2 or n exceeds the vectorized limit
    """
    _require(n, MIN_ITEMS_PAIRS, "Monte-Carlo")
    if reps < 2:
        raise InputError("Monte-Carlo needs at least 2 replicates")
    if n > MC_MAX_N:
        raise InputError(f"Monte-Carlo supports n <= {MC_MAX_N}, got {n}")
    pi = as_distribution(pi)
    block = settings.mc_block if block is None else block
    block = max(1, min(block, MC_BLOCK_DRAWS // n))

    collected: dict[str, list[np.ndarray]] = {}
    for index, start in enumerate(range(0, reps, block)):
        size = min(block, reps - start)
        values = _replicate_indices(pi, n, size, stream(seed, *cell, index))
        for name, array in values.items():
            collected.setdefault(name, []).append(array)
    series = {name: np.concatenate(arrays) for name, arrays in collected.items()}

    mean_mri, var_mri = mean_and_variance(series["mri"])
    mean_ari, se_ari = mean_and_standard_error(series["ari_unnormalized"])
    mean_mari, se_mari = (
        mean_and_standard_error(series["mari"]) if "mari" in series else (None, None)
    )
    return MonteCarloSummary(
        n=n,
        reps=reps,
        mean_mri=mean_mri,
        var_mri=var_mri,
        se_mri=math.sqrt(var_mri / reps),
        mean_ari_unnormalized=mean_ari,
        se_ari_unnormalized=se_ari,
        mean_mari=mean_mari,
        se_mari=se_mari,
    )
