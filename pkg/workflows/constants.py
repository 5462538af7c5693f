"""Prefect-related constants."""

# Flow names
SIMULATE_FLOW = "concord-simulate"
BENCH_FLOW = "concord-bench"

# Task names
SIMULATE_CELL_TASK = "simulate-cell"
BENCH_CELL_TASK = "bench-cell"

# Benchmark settings
BENCH_WARMUP_RUNS = 1
