"""Monte-Carlo benches of protocol error and communication."""

from src.experiments.bench import (
    BenchConfig,
    BenchProtocol,
    BenchRow,
    InputMode,
    TrialOutcome,
    bench_configs,
    run_bench,
    run_trial,
    write_rows,
)

__all__ = [
    "BenchConfig",
    "BenchProtocol",
    "BenchRow",
    "InputMode",
    "TrialOutcome",
    "bench_configs",
    "run_bench",
    "run_trial",
    "write_rows",
]
