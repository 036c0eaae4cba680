"""Test deterministic random streams"""

import numpy as np
import pytest
from scipy import stats

from qbench.core.exceptions import ValidationError
from qbench.rng import (
    InstanceKey,
    RandomStream,
    box_muller,
    fnv1a_32,
    seed_from_key,
    validate_class_name,
)


class TestFnv1a:
    """Tests for the seed hash"""

    def test_empty_string_is_offset_basis(self) -> None:
        assert fnv1a_32("") == 0x811C9DC5

    def test_reference_vectors(self) -> None:
        """Published FNV-1a test vectors"""
        assert fnv1a_32("a") == 0xE40C292C
        assert fnv1a_32("foobar") == 0xBF9CF968

    def test_seed_string_format(self) -> None:
        key = InstanceKey("7|C", 10, 0, "geo")
        assert key.seed_string == "7|C:10:0:geo"
        assert seed_from_key(key) == fnv1a_32("7|C:10:0:geo")

    def test_streams_differ(self) -> None:
        geo = seed_from_key(InstanceKey("1/J", 5, 2, "geo"))
        aff = seed_from_key(InstanceKey("1/J", 5, 2, "aff"))
        assert geo != aff


class TestClassNames:
    """Tests for class name validation"""

    @pytest.mark.parametrize("name", ["1|C", "9/J", "5/I", "4|J"])
    def test_valid(self, name: str) -> None:
        validate_class_name(name)

    @pytest.mark.parametrize(
        "name, token",
        [("0|C", "'0'"), ("7-C", "'-'"), ("7|X", "'X'"), ("7|", "<missing>"), ("7|CC", "'CC'")],
    )
    def test_invalid_names_the_token(self, name: str, token: str) -> None:
        with pytest.raises(ValidationError, match=token):
            validate_class_name(name)

    def test_key_rejects_bad_arguments(self) -> None:
        with pytest.raises(ValidationError):
            InstanceKey("7|C", 1, 0)
        with pytest.raises(ValidationError):
            InstanceKey("7|C", 10, -1)


class TestRandomStream:
    """Tests for RandomStream"""

    def test_mersenne_twister_reference_output(self) -> None:
        """First output of MT19937 seeded with 5489"""
        assert RandomStream(5489).next_uint32() == 3499211612

    def test_same_seed_same_sequence(self) -> None:
        a = RandomStream(12345)
        b = RandomStream(12345)
        assert [a.next_uniform() for _ in range(50)] == [b.next_uniform() for _ in range(50)]

    def test_uniform_uses_two_words(self) -> None:
        stream = RandomStream(7)
        words = RandomStream(7)
        a = words.next_uint32() >> 5
        b = words.next_uint32() >> 6
        assert stream.next_uniform() == (a * 67108864.0 + b) / 9007199254740992.0

    def test_uniform_range(self) -> None:
        values = RandomStream(1).next_uniforms(10_000)
        assert values.min() >= 0.0
        assert values.max() < 1.0

    def test_array_methods_match_scalar_calls(self) -> None:
        scalar = RandomStream(99)
        batch = RandomStream(99)
        expected = [scalar.next_uniform() for _ in range(7)]
        np.testing.assert_array_equal(batch.next_uniforms(7), expected)

    def test_gaussian_cache_is_consumed_first(self) -> None:
        stream = RandomStream(3)
        first = stream.next_gaussian()
        assert stream.cached_gaussian is not None
        second = stream.next_gaussian()
        assert stream.cached_gaussian is None

        replay = RandomStream(3)
        u1, u2 = replay.next_uniform(), replay.next_uniform()
        assert (first, second) == pytest.approx(box_muller(u1, u2), abs=0)

    def test_gaussian_batch_matches_scalar_calls(self) -> None:
        scalar = RandomStream(11)
        batch = RandomStream(11)
        expected = [scalar.next_gaussian() for _ in range(5)]
        np.testing.assert_allclose(batch.next_gaussians(5), expected, rtol=1e-13, atol=1e-13)
        assert batch.cached_gaussian == pytest.approx(scalar.cached_gaussian, abs=1e-13)

    def test_box_muller_zero_is_finite(self) -> None:
        z0, z1 = box_muller(0.0, 0.25)
        assert np.isfinite(z0) and np.isfinite(z1)

    def test_next_index_range(self) -> None:
        stream = RandomStream(5)
        values = {stream.next_index(4) for _ in range(200)}
        assert values == {0, 1, 2, 3}

    def test_permutation_is_permutation(self) -> None:
        perm = RandomStream(8).sample_permutation(10)
        assert sorted(perm.tolist()) == list(range(10))

    def test_permutation_of_one(self) -> None:
        assert RandomStream(8).sample_permutation(1).tolist() == [0]

    def test_truncated_gaussian_bound(self) -> None:
        values = RandomStream(21).sample_truncated_gaussian_vector(500, 0.5)
        assert np.all(np.abs(values) <= 0.5)

    def test_rejects_bad_seed(self) -> None:
        with pytest.raises(ValidationError):
            RandomStream(2**32)


@pytest.mark.slow
class TestRandomStreamStatistics:
    """Distributional checks"""

    def test_gaussians_are_standard_normal(self) -> None:
        values = RandomStream(2024).next_gaussians(100_000)
        assert stats.kstest(values, "norm").pvalue > 1e-3

    def test_gaussian_moments(self) -> None:
        values = RandomStream(31).next_gaussians(200_000)
        assert values.mean() == pytest.approx(0.0, abs=0.01)
        assert values.var() == pytest.approx(1.0, abs=0.01)

    def test_truncated_gaussian_variance(self) -> None:
        """Component variance of the normal truncated at 4.5 is just below one"""
        values = RandomStream(4242).sample_truncated_gaussian_vector(1_000_000, 4.5)
        expected = stats.truncnorm(-4.5, 4.5).var()
        assert expected == pytest.approx(0.9999, abs=5e-4)
        assert values.var() == pytest.approx(expected, abs=5e-3)
        assert np.abs(values).max() <= 4.5

    def test_permutations_are_uniform(self) -> None:
        stream = RandomStream(77)
        counts: dict[tuple[int, ...], int] = {}
        for _ in range(60_000):
            key = tuple(stream.sample_permutation(3).tolist())
            counts[key] = counts.get(key, 0) + 1
        assert len(counts) == 6
        assert stats.chisquare(list(counts.values())).pvalue > 1e-3
