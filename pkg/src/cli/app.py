"""Command-line front end: verify, tree, play and bench."""

import argparse
import logging
import sys
from typing import Optional, Sequence

from src.comm.coins import CoinStream
from src.core.errors import InputError, ParseError, ProofError, ProtocolError
from src.core.settings import (
    DEFAULT_EPSILON,
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    EXIT_FAILURE,
    EXIT_OK,
    EXIT_USAGE,
    LOG_FORMAT,
)
from src.experiments.bench import BenchProtocol, bench_configs, run_bench, write_rows
from src.kwgame.builder import build_search_tree
from src.kwgame.play import kw_bit_bound, kw_play
from src.kwgame.search_tree import depth, format_search_tree
from src.proofs.proof import Proof, parse_proof
from src.proofs.system import System, parse_system
from src.proofs.verifier import verify_proof
from src.threshold.partition import parse_assignment, parse_partition

logger = logging.getLogger(__name__)


def _read(path: str) -> str:
    with open(path, "rb") as handle:
        data = handle.read()
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        line_no = data.count(b"\n", 0, exc.start) + 1
        raise ParseError(f"not valid UTF-8 (byte 0x{data[exc.start]:02x})", path, line_no) from None


def _load(args: argparse.Namespace) -> tuple[System, Proof]:
    system = parse_system(_read(args.system), source=args.system)
    proof = parse_proof(_read(args.proof), system.n, source=args.proof)
    return system, proof


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8") as handle:
        handle.write(text)


def cmd_verify(args: argparse.Namespace) -> int:
    """Check a proof; tree-likeness is enforced with --tree or a `tree-like` directive."""
    system, proof = _load(args)
    require_tree = args.tree or proof.claims_tree
    result = verify_proof(proof, system, require_tree=require_tree)
    if not result.ok:
        print(f"error: {result.violation}", file=sys.stderr)
        return EXIT_FAILURE
    shape = "tree-like" if result.tree_like else "dag"
    print(f"ok: {shape}, {result.lines} lines")
    return EXIT_OK


def cmd_tree(args: argparse.Namespace) -> int:
    """Build the search tree of a tree-like proof and serialize it."""
    system, proof = _load(args)
    tree = build_search_tree(proof, system)
    logger.info("search tree depth %d", depth(tree))
    _emit(format_search_tree(tree), args.out)
    return EXIT_OK


def cmd_play(args: argparse.Namespace) -> int:
    """Play the falsified-axiom game on one split assignment."""
    system, proof = _load(args)
    part = parse_partition(args.partition, system.n)
    alpha = parse_assignment(args.alpha, system.n)
    tree = build_search_tree(proof, system)
    alpha_a, alpha_b = part.project(alpha)

    result = kw_play(tree, part, alpha_a, alpha_b, args.epsilon, CoinStream(args.seed))
    axiom = system.axiom(result.output)
    falsified = not axiom.satisfied_by(alpha)
    bound = kw_bit_bound(tree, args.epsilon)

    lines = [
        f"axiom {result.output}: {axiom}",
        f"falsified: {'yes' if falsified else 'no'}",
        f"bits: {result.bits} (bound {bound}, depth {depth(tree)})",
    ]
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if falsified else EXIT_FAILURE


def cmd_bench(args: argparse.Namespace) -> int:
    """Run one bench row per (n, epsilon) pair and write CSV."""
    configs = bench_configs(
        BenchProtocol(args.protocol),
        args.n,
        args.epsilon,
        trials=args.trials,
        seed=args.seed,
        adversarial=args.adversarial,
        equal_inputs=args.equal_inputs,
    )
    rows = [run_bench(config, workers=args.workers) for config in configs]
    if args.out is None:
        write_rows(rows, sys.stdout, human=args.human)
    else:
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            write_rows(rows, handle, human=args.human)
    return EXIT_OK


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _epsilon(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number in (0, 1), got {text!r}") from None
    if not 0 < value < 1:
        raise argparse.ArgumentTypeError(f"epsilon must lie in (0, 1), got {text!r}")
    return value


def _seed(text: str) -> int:
    try:
        value = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer seed, got {text!r}") from None
    if not 0 <= value < 2 ** 64:
        raise argparse.ArgumentTypeError(f"seed must be a 64-bit unsigned integer, got {text!r}")
    return value


def _list_of(item_type):
    def parse(text: str) -> list:
        items = [token.strip() for token in text.split(",") if token.strip()]
        if not items:
            raise argparse.ArgumentTypeError(f"expected a comma-separated list, got {text!r}")
        return [item_type(token) for token in items]
    return parse


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with the four subcommands."""
    parser = argparse.ArgumentParser(
        prog="cpkw",
        description="Threshold-function protocols and tree-like Cutting Planes refutations.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="Log progress to stderr (-v info, -vv debug).")
    commands = parser.add_subparsers(dest="command", required=True)

    def proof_command(name: str, help_text: str) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, help=help_text)
        sub.add_argument("--system", required=True, help="System file.")
        sub.add_argument("--proof", required=True, help="Proof file.")
        return sub

    verify = proof_command("verify", "Verify a Cutting Planes proof.")
    verify.add_argument("--tree", action="store_true", help="Require the proof to be tree-like.")
    verify.set_defaults(handler=cmd_verify)

    tree = proof_command("tree", "Build and serialize the search tree of a tree-like proof.")
    tree.add_argument("--out", help="Write the tree here instead of stdout.")
    tree.set_defaults(handler=cmd_tree)

    play = proof_command("play", "Play the falsified-axiom game on one assignment.")
    play.add_argument("--partition", required=True, help='Variable split such as "1,3;2,4".')
    play.add_argument("--alpha", required=True, help='Assignment such as "0110".')
    play.add_argument("--epsilon", type=_epsilon, default=DEFAULT_EPSILON, help="Total error budget.")
    play.add_argument("--seed", type=_seed, default=DEFAULT_SEED, help="Public-coin seed.")
    play.add_argument("--out", help="Write the report here instead of stdout.")
    play.set_defaults(handler=cmd_play)

    bench = commands.add_parser("bench", help="Monte-Carlo error and communication bench.")
    bench.add_argument("--protocol", required=True, choices=[p.value for p in BenchProtocol])
    bench.add_argument("--n", type=_list_of(_positive_int), required=True,
                       help="Input length(s), comma-separated.")
    bench.add_argument("--epsilon", type=_list_of(_epsilon), default=[DEFAULT_EPSILON],
                       help="Target error(s), comma-separated.")
    bench.add_argument("--trials", type=_positive_int, default=DEFAULT_TRIALS)
    bench.add_argument("--seed", type=_seed, default=DEFAULT_SEED)
    inputs = bench.add_mutually_exclusive_group()
    inputs.add_argument("--adversarial", action="store_true", help="Inputs that differ as little as possible.")
    inputs.add_argument("--equal-inputs", action="store_true", help="Run on x = y.")
    bench.add_argument("--workers", type=_positive_int, default=1, help="Worker processes.")
    bench.add_argument("--out", help="Write rows here instead of stdout.")
    bench.add_argument("--human", action="store_true", help="Aligned columns instead of CSV.")
    bench.set_defaults(handler=cmd_bench)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the CLI.

    Args:
        argv: Arguments without the program name; defaults to sys.argv[1:]

    Returns:
        Process exit code
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)

    try:
        return args.handler(args)
    except (ParseError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc.filename or ''}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_USAGE
    except ProofError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except ProtocolError as exc:
        logger.error("bound violated: %s", exc)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE
