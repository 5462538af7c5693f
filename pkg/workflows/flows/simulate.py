"""Prefect workflows for the bias study over scenario grids."""

from itertools import product

from prefect import flow, get_run_logger, task
from prefect.cache_policies import NONE
from prefect.task_runners import ThreadPoolTaskRunner

from concord.helpers.seeding import cell_key
from concord.models.multinomial import ScenarioSpec
from concord.models.run_config import RunConfig, SimulationRow
from concord.multinomial import (
    bias,
    independent_distribution,
    monte_carlo,
    scenario_distribution,
)
from workflows.constants import SIMULATE_CELL_TASK, SIMULATE_FLOW


@task(name=SIMULATE_CELL_TASK, cache_policy=NONE)
def simulate_cell(
    spec: ScenarioSpec,
    n: int,
    seed: int,
    mc: int | None = None,
    independent: bool = False,
) -> SimulationRow:
    """Analytic bias and, optionally, Monte-Carlo index means for one grid cell.

    Args:
        spec: Scenario, K and epsilon of the cell
        n: Number of items
        seed: Master seed
        mc: Monte-Carlo replicate count, or None to skip sampling
        independent: Replace pi by the product of its marginals

    Returns:
        One result row
    """
    logger = get_run_logger()
    pi = scenario_distribution(spec)
    if independent:
        pi = independent_distribution(pi)

    report = bias(pi, n)
    row = {
        "scenario": spec.scenario_id,
        "k": spec.k,
        "epsilon": spec.epsilon,
        "n": n,
        "bias": report.bias,
        "abs_bias": abs(report.bias),
        "bound": report.bound,
    }
    if mc is not None:
        key = cell_key(spec.scenario_id, spec.k, spec.epsilon, n)
        summary = monte_carlo(pi, n, mc, seed, cell=key)
        row |= {
            "mc_reps": mc,
            "mc_mean_ari_unnormalized": summary.mean_ari_unnormalized,
            "mc_se_ari_unnormalized": summary.se_ari_unnormalized,
            "mc_mean_mari": summary.mean_mari,
            "mc_se_mari": summary.se_mari,
        }
    logger.info(
        f"Scenario {spec.scenario_id} K={spec.k} eps={spec.epsilon} n={n}: "
        f"bias {report.bias:.3e}"
    )
    return SimulationRow(**row)


@flow(name=SIMULATE_FLOW, persist_result=False)
def simulate_flow(config: RunConfig) -> list[SimulationRow]:
    """Evaluate every (scenario, K, epsilon, n) cell of the configured grids.

    Rows come back in grid order whatever the task runner's scheduling, and each
    cell draws from its own seeded streams, so the output does not depend on
    the number of threads.

    Args:
        config: Validated run options

    Returns:
        One row per grid cell
    """
    logger = get_run_logger()
    cells = list(
        product(config.scenarios, config.k_grid, config.epsilons, config.n_grid)
    )
    logger.info(f"Simulating {len(cells)} cells on {config.threads} thread(s)")

    futures = [
        simulate_cell.submit(
            ScenarioSpec(scenario_id=scenario, k=k, epsilon=epsilon),
            n,
            config.seed,
            config.mc,
            config.independent,
        )
        for scenario, k, epsilon, n in cells
    ]
    rows = [future.result() for future in futures]

    logger.info(f"Finished {len(rows)} cells")
    return rows


def run_simulation(config: RunConfig) -> list[SimulationRow]:
    """Run the simulation flow on a thread pool sized by ``config.threads``."""
    runner = ThreadPoolTaskRunner(max_workers=config.threads)
    return simulate_flow.with_options(task_runner=runner)(config)
