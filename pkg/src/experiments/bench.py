"""Seeded Monte-Carlo benches of the protocols' error and communication.

Trial t draws its inputs and its public coins from two streams derived
from (seed, t), so a row depends only on the configuration, never on how
trials are scheduled across worker processes.
"""

import csv
import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from functools import partial
from multiprocessing import Pool
from typing import Iterable, Sequence, TextIO

import numpy as np

from src.comm.bits import BitString
from src.comm.coins import CoinStream, derive_seed
from src.core.errors import InputError, ProtocolError
from src.core.settings import BENCH_COLUMNS, DEFAULT_SEED, DEFAULT_TRIALS, THRESHOLD_BENCH_COEFF_BITS
from src.protocols.eq import EqParams, eq_bit_bound, eq_protocol
from src.protocols.gt_baseline import baseline_bit_bound, gt_baseline
from src.protocols.gt_walk import gt_walk
from src.protocols.walk_tree import WalkParams, log2_inverse, walk_bit_bound
from src.threshold.function import ThresholdFunction, eval_threshold, value_range
from src.threshold.partition import Partition
from src.threshold.protocol import threshold_bit_bound, threshold_protocol

logger = logging.getLogger(__name__)


class BenchProtocol(Enum):
    """Protocols the bench can drive."""
    EQ = "eq"
    GT_BASELINE = "gt-baseline"
    GT_WALK = "gt-walk"
    THRESHOLD = "threshold"


class InputMode(Enum):
    """How trial inputs are drawn."""
    RANDOM = "random"
    ADVERSARIAL = "adversarial"  # inputs differ as little as possible
    EQUAL = "equal"  # x = y (for threshold: the bound sits exactly on the sum)


@dataclass(frozen=True)
class BenchConfig:
    """One bench configuration; a row of output."""
    protocol: BenchProtocol
    n: int
    epsilon: float
    trials: int = DEFAULT_TRIALS
    seed: int = DEFAULT_SEED
    adversarial: bool = False
    equal_inputs: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise InputError(f"n must be positive, got {self.n}")
        if not 0 < self.epsilon < 1:
            raise InputError(f"epsilon must lie in (0, 1), got {self.epsilon}")
        if self.trials < 1:
            raise InputError(f"trials must be positive, got {self.trials}")
        if self.adversarial and self.equal_inputs:
            raise InputError("adversarial and equal inputs are mutually exclusive")

    @property
    def mode(self) -> InputMode:
        if self.equal_inputs:
            return InputMode.EQUAL
        return InputMode.ADVERSARIAL if self.adversarial else InputMode.RANDOM


@dataclass(frozen=True)
class TrialOutcome:
    """Result of one trial."""
    failed: bool
    bits: int
    bound: int


@dataclass(frozen=True)
class BenchRow:
    """Aggregated results of one configuration."""
    protocol: str
    n: int
    epsilon: float
    trials: int
    empirical_error: float
    mean_bits: float
    max_bits: int
    bound_bits: int

    def values(self) -> tuple:
        """Values in BENCH_COLUMNS order."""
        return tuple(getattr(self, column) for column in BENCH_COLUMNS)


def _random_bits(stream: CoinStream, n: int) -> BitString:
    return BitString(stream.draw_bits(n))


def _eq_pair(n: int, mode: InputMode, stream: CoinStream) -> tuple[BitString, BitString]:
    x = _random_bits(stream, n)
    if mode is InputMode.EQUAL:
        return x, x
    if mode is InputMode.ADVERSARIAL:
        flip = stream.draw_int(n)
        return x, BitString(tuple(b ^ 1 if i == flip else b for i, b in enumerate(x.bits)))
    return x, _random_bits(stream, n)


def _gt_pair(n: int, mode: InputMode, stream: CoinStream) -> tuple[BitString, BitString]:
    if mode is InputMode.EQUAL:
        x = _random_bits(stream, n)
        return x, x
    if mode is InputMode.ADVERSARIAL:
        if n == 1:
            low, high = 0, 1
        else:
            low = stream.draw_int(2 ** n - 1)
            high = low + 1
        if stream.draw_bits(1)[0]:
            low, high = high, low
        return BitString.from_int(high, n), BitString.from_int(low, n)
    return _random_bits(stream, n), _random_bits(stream, n)


def _threshold_trial(config: BenchConfig, inputs: CoinStream, coins: CoinStream) -> TrialOutcome:
    n = config.n
    magnitude = 2 ** THRESHOLD_BENCH_COEFF_BITS - 1
    coefficients = tuple(inputs.draw_int(2 * magnitude + 1) - magnitude for _ in range(n))
    alpha = inputs.draw_bits(n)
    total = sum(a * bit for a, bit in zip(coefficients, alpha))

    if config.mode is InputMode.EQUAL:
        bound = total
    elif config.mode is InputMode.ADVERSARIAL:
        bound = total - inputs.draw_bits(1)[0]
    else:
        lo, hi = value_range(coefficients)
        bound = lo + inputs.draw_int(hi - lo + 1)

    f = ThresholdFunction(coefficients=coefficients, bound=bound)
    part = Partition.of(n, range(1, n + 1, 2))
    alpha_a, alpha_b = part.project(alpha)
    result = threshold_protocol(f, part, alpha_a, alpha_b, config.epsilon, coins)
    return TrialOutcome(failed=result.output != eval_threshold(f, alpha), bits=result.bits,
                        bound=threshold_bit_bound(f, config.epsilon))


def run_trial(config: BenchConfig, index: int) -> TrialOutcome:
    """Run trial number `index` of a configuration.

    Args:
        config: Bench configuration
        index: Trial number

    Returns:
        TrialOutcome with the failure flag, bits used and the hard bound
    """
    trial_seed = derive_seed(config.seed, index)
    inputs = CoinStream(derive_seed(trial_seed, 0))
    coins = CoinStream(derive_seed(trial_seed, 1))
    protocol, n, eps = config.protocol, config.n, config.epsilon

    if protocol is BenchProtocol.EQ:
        k = log2_inverse(eps)
        x, y = _eq_pair(n, config.mode, inputs)
        result = eq_protocol(x, y, EqParams(k), coins)
        return TrialOutcome(failed=result.output != (x == y), bits=result.bits, bound=eq_bit_bound(k))

    if protocol is BenchProtocol.GT_BASELINE:
        x, y = _gt_pair(n, config.mode, inputs)
        result = gt_baseline(x, y, eps, coins)
        return TrialOutcome(failed=result.output != (x.value > y.value), bits=result.bits,
                            bound=baseline_bit_bound(n, eps))

    if protocol is BenchProtocol.GT_WALK:
        params = WalkParams.for_error(n, eps)
        x, y = _gt_pair(n, config.mode, inputs)
        result = gt_walk(x, y, params, coins)
        return TrialOutcome(failed=result.output != (x.value > y.value), bits=result.bits,
                            bound=walk_bit_bound(params))

    return _threshold_trial(config, inputs, coins)


def run_bench(config: BenchConfig, workers: int = 1) -> BenchRow:
    """Run every trial of a configuration and aggregate.

    Args:
        config: Bench configuration
        workers: Worker processes; 1 runs trials in-process

    Returns:
        The aggregated BenchRow
    """
    if workers < 1:
        raise InputError(f"workers must be positive, got {workers}")
    trial = partial(run_trial, config)
    if workers > 1:
        with Pool(workers) as pool:
            outcomes = pool.map(trial, range(config.trials), chunksize=max(1, config.trials // (4 * workers)))
    else:
        outcomes = [trial(index) for index in range(config.trials)]

    failures = np.array([outcome.failed for outcome in outcomes], dtype=bool)
    bits = np.array([outcome.bits for outcome in outcomes], dtype=np.int64)
    bounds = np.array([outcome.bound for outcome in outcomes], dtype=np.int64)
    if np.any(bits > bounds):
        raise ProtocolError(f"{config.protocol.value}: a trial exceeded its communication bound")

    row = BenchRow(
        protocol=config.protocol.value,
        n=config.n,
        epsilon=config.epsilon,
        trials=config.trials,
        empirical_error=float(failures.mean()),
        mean_bits=float(bits.mean()),
        max_bits=int(bits.max()),
        bound_bits=int(bounds.max()),
    )
    logger.info("%s n=%d eps=%g: error %.5f, bits mean %.1f max %d (bound %d)",
                row.protocol, row.n, row.epsilon, row.empirical_error, row.mean_bits, row.max_bits, row.bound_bits)
    return row


def bench_configs(
    protocol: BenchProtocol,
    ns: Sequence[int],
    epsilons: Sequence[float],
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
    adversarial: bool = False,
    equal_inputs: bool = False,
) -> list[BenchConfig]:
    """One configuration per (n, epsilon) pair, n varying slowest."""
    return [
        BenchConfig(protocol=protocol, n=n, epsilon=eps, trials=trials, seed=seed,
                    adversarial=adversarial, equal_inputs=equal_inputs)
        for n, eps in itertools.product(ns, epsilons)
    ]


def _format_value(value) -> str:
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def write_rows(rows: Iterable[BenchRow], out: TextIO, human: bool = False) -> None:
    """Write the header and one line per row, as CSV or as aligned columns.

    Args:
        rows: Rows to write
        out: Text stream
        human: Align columns for reading instead of CSV
    """
    table = [list(BENCH_COLUMNS)] + [[_format_value(v) for v in row.values()] for row in rows]
    if not human:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerows(table)
        return
    widths = [max(len(line[i]) for line in table) for i in range(len(BENCH_COLUMNS))]
    for line in table:
        out.write("  ".join(cell.rjust(width) for cell, width in zip(line, widths)) + "\n")
