"""Pytest fixtures with real protocol inputs and bundled proofs."""

import pytest

from src.comm.coins import CoinStream
from src.data.proof_corpus import get_all_examples, get_example, load_example
from src.threshold.function import ThresholdFunction
from src.threshold.partition import Partition


@pytest.fixture
def coins():
    """Create a public-coin stream with a fixed seed for reproducibility."""
    return CoinStream(seed=12345)


@pytest.fixture
def single_example():
    """System {x >= 1, x <= 0} and its 3-line refutation."""
    return load_example("single")


@pytest.fixture
def pair_example():
    """System {x1 + x2 >= 1, x1 <= 0, x2 <= 0} and its 5-line refutation."""
    return load_example("pair")


@pytest.fixture
def halving_example():
    """System {2x1 + 2x2 <= 1, 2x1 + 2x2 >= 1} refuted with div and mul."""
    return load_example("halving")


@pytest.fixture
def triangle_example():
    """Three-variable system refuted in 8 lines."""
    return load_example("triangle")


@pytest.fixture(params=[example.id for example in get_all_examples()])
def any_example(request):
    """Every bundled (system, proof) pair."""
    return load_example(request.param)


@pytest.fixture
def mixed_threshold():
    """3x1 - 5x2 + 2x3 - x4 <= 1."""
    return ThresholdFunction(coefficients=(3, -5, 2, -1), bound=1)


@pytest.fixture
def split_even_odd():
    """Alice holds x1 and x3, Bob holds x2 and x4."""
    return Partition.of(4, [1, 3])


@pytest.fixture
def write_files(tmp_path):
    """Write a bundled example's system and proof files; returns their paths."""

    def write(example_id: str, proof_text=None):
        example = get_example(example_id)
        system_path = tmp_path / f"{example_id}.sys"
        proof_path = tmp_path / f"{example_id}.proof"
        system_path.write_text(example.system_text, encoding="utf-8")
        proof_path.write_text(proof_text if proof_text is not None else example.proof_text, encoding="utf-8")
        return str(system_path), str(proof_path)

    return write
