"""
Invoke tasks for development automation.

Run `invoke --list` to see all available tasks.
"""

from invoke import Context, task


@task
def run_lint(ctx: Context) -> None:
    """Run ruff to check and format the codebase."""
    ctx.run("uv run ruff format .")
    ctx.run("uv run ruff check . --fix")


@task
def run_tests(ctx: Context, slow: bool = False) -> None:
    """Run all tests with coverage, skipping the timing tests unless asked."""
    marker = "" if slow else ' -m "not slow"'
    ctx.run(f"pytest --cov=concord --cov=workflows tests/{marker}")


@task
def gen_study_data(ctx: Context, threads: int = 4, out_dir: str = "results") -> None:
    """Regenerate the bias study and timing CSVs."""
    ctx.run(f"mkdir -p {out_dir}")
    ctx.run(f"uv run concord simulate --threads {threads} --output {out_dir}/bias.csv")
    ctx.run(f"uv run concord bench --output {out_dir}/bench.csv")
    print(f"Wrote {out_dir}/bias.csv and {out_dir}/bench.csv")
