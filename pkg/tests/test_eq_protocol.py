"""Tests for the fingerprint EQ protocol."""

import itertools
import math
from fractions import Fraction

import pytest

from src.comm.bits import BitString
from src.comm.channel import Channel
from src.comm.coins import CoinStream, FixedCoins, derive_seed
from src.core.errors import InputError
from src.protocols.eq import EqParams, eq_bit_bound, eq_false_equal_probability, eq_protocol, run_eq


class TestEqCorrectness:
    """Equal inputs are never rejected; unequal ones rarely accepted."""

    def test_equal_inputs_always_equal(self, coins):
        """Test one-sided error: x = y always yields "equal"."""
        x = BitString.from_str("1100101011110000")
        for _ in range(100):
            assert eq_protocol(x, x, EqParams(3), coins).output is True

    def test_exact_false_equal_probability(self):
        """Test the error is exactly 2^-k for an unequal pair (n=2, k=2)."""
        x, y = BitString.from_str("10"), BitString.from_str("11")
        assert eq_false_equal_probability(x, y, 2) == Fraction(1, 4)

    def test_exact_probability_for_equal_pair(self):
        """Test that equal inputs are accepted under every coin sequence."""
        x = BitString.from_str("101")
        assert eq_false_equal_probability(x, x, 2) == Fraction(1)

    @pytest.mark.parametrize("n,k", [(n, k) for n in (1, 2, 3) for k in (1, 2, 3)])
    def test_exhaustive_error_on_every_pair(self, n, k):
        """Test every pair with n, k <= 3: probability 1 when equal, exactly 2^-k otherwise."""
        strings = [BitString(bits) for bits in itertools.product((0, 1), repeat=n)]
        for x in strings:
            for y in strings:
                expected = Fraction(1) if x == y else Fraction(1, 2 ** k)
                assert eq_false_equal_probability(x, y, k) == expected

    @pytest.mark.parametrize("a,b,k", [("01", "11", 2), ("1", "0", 1)])
    def test_worked_examples(self, a, b, k):
        """Test x=01/y=11 errs with 1/4 at k=2 and x=1/y=0 with 1/2 at k=1."""
        x, y = BitString.from_str(a), BitString.from_str(b)
        assert eq_false_equal_probability(x, y, k) == Fraction(1, 2 ** k)
        assert eq_false_equal_probability(x, x, k) == Fraction(1)

    def test_scripted_coins_expose_the_parity(self):
        """Test that a mask hitting the difference detects it.

        x xor y = 01, so mask 01 separates them and mask 10 does not.
        """
        x, y = BitString.from_str("10"), BitString.from_str("11")
        assert eq_protocol(x, y, EqParams(1), FixedCoins([0, 1])).output is False
        assert eq_protocol(x, y, EqParams(1), FixedCoins([1, 0])).output is True

    def test_empirical_error_within_target(self):
        """Test error <= eps + 3 sqrt(eps/trials) on pairs one bit apart (n=16, eps=2^-4)."""
        k, trials = 4, 2000
        epsilon = 2.0 ** -k
        inputs = CoinStream(99)
        failures = 0
        for t in range(trials):
            bits = inputs.draw_bits(16)
            flip = inputs.draw_int(16)
            x = BitString(bits)
            y = BitString(tuple(b ^ 1 if i == flip else b for i, b in enumerate(bits)))
            if eq_protocol(x, y, EqParams(k), CoinStream(derive_seed(5, t))).output:
                failures += 1
        assert failures / trials <= epsilon + 3 * math.sqrt(epsilon / trials)


class TestEqCost:
    """Tests for the exact bit cost."""

    def test_cost_is_k_bits(self, coins):
        """Test that EQ charges exactly k bits regardless of n."""
        x, y = BitString.from_str("1" * 64), BitString.from_str("0" * 64)
        result = eq_protocol(x, y, EqParams(4), coins)
        assert result.bits == 4 == eq_bit_bound(4)

    def test_announce_adds_one_bit(self, coins):
        """Test the optional result bit from Bob."""
        x = BitString.from_str("0110")
        result = eq_protocol(x, x, EqParams(3), coins, announce=True)
        assert result.bits == 4 == eq_bit_bound(3, announce=True)

    def test_empty_segments_are_free(self, coins):
        """Test run_eq on empty segments."""
        channel = Channel()
        assert run_eq((), (), 5, coins, channel) is True
        assert channel.bits == 0

    def test_shared_channel_accumulates(self, coins):
        """Test that nested calls charge one transcript."""
        channel = Channel()
        x = BitString.from_str("1010")
        eq_protocol(x, x, EqParams(2), coins, channel)
        eq_protocol(x, x, EqParams(3), coins, channel)
        assert channel.bits == 5


class TestEqValidation:
    """Tests for input validation."""

    def test_k_must_be_positive(self):
        """Test EqParams(0) is rejected."""
        with pytest.raises(InputError):
            EqParams(0)

    def test_error_property(self):
        """Test EqParams.error."""
        assert EqParams(5).error == 2.0 ** -5

    def test_length_mismatch(self, coins):
        """Test inputs of different length are rejected."""
        with pytest.raises(InputError):
            eq_protocol(BitString.from_str("10"), BitString.from_str("101"), EqParams(2), coins)
