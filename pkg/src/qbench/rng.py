"""Deterministic random streams for reproducible instances.

An instance is identified by the seed string
``"<class_name>:<dimension>:<index>:<stream_tag>"``. Its FNV-1a hash seeds a
32-bit Mersenne twister (canonical ``init_genrand`` seeding), and all variates
are derived from raw 32-bit words with fixed recipes so that the integer
sequence is bit-exact across implementations.
"""

import math
import re
from dataclasses import dataclass
from typing import Literal

import numpy as np

from qbench.core.exceptions import ValidationError

FNV_OFFSET_BASIS = 0x811C9DC5
FNV_PRIME = 0x01000193

CLASS_NAME_PATTERN = re.compile(r"^([1-9])([|/])([CIJ])$")

StreamTag = Literal["geo", "aff"]

_TWO_POW_26 = 67108864.0
_TWO_POW_53 = 9007199254740992.0
_SMALLEST_POSITIVE = float(np.nextafter(0.0, 1.0))


def fnv1a_32(text: str) -> int:
    """32-bit FNV-1a hash of an ASCII string"""
    value = FNV_OFFSET_BASIS
    for byte in text.encode("ascii"):
        value ^= byte
        value = (value * FNV_PRIME) & 0xFFFFFFFF
    return value


def validate_class_name(class_name: str) -> None:
    """Check the ``[1-9](|or/)(C|I|J)`` grammar, naming the offending token"""
    if CLASS_NAME_PATTERN.match(class_name):
        return
    if not class_name:
        raise ValidationError("Empty class name")
    if class_name[0] not in "123456789":
        raise ValidationError(f"Invalid case digit '{class_name[0]}' in class name '{class_name}'")
    if len(class_name) < 2 or class_name[1] not in "|/":
        token = class_name[1:2] or "<missing>"
        raise ValidationError(f"Invalid alignment token '{token}' in class name '{class_name}'")
    token = class_name[2:] or "<missing>"
    raise ValidationError(f"Invalid shape token '{token}' in class name '{class_name}'")


@dataclass(frozen=True)
class InstanceKey:
    """(class, dimension, index, stream) identity of one random stream"""

    class_name: str
    dimension: int
    index: int
    stream_tag: StreamTag = "geo"

    def __post_init__(self) -> None:
        validate_class_name(self.class_name)
        if self.dimension < 2:
            raise ValidationError(f"Dimension must be at least 2, got {self.dimension}")
        if self.index < 0:
            raise ValidationError(f"Instance index must be non-negative, got {self.index}")
        if self.stream_tag not in ("geo", "aff"):
            raise ValidationError(f"Invalid stream tag '{self.stream_tag}'")

    @property
    def seed_string(self) -> str:
        return f"{self.class_name}:{self.dimension}:{self.index}:{self.stream_tag}"


def seed_from_key(key: InstanceKey) -> int:
    """FNV-1a seed of the key's seed string"""
    return fnv1a_32(key.seed_string)


def box_muller(u1: float, u2: float) -> tuple[float, float]:
    """Basic Box-Muller transform returning the (cos, sin) pair"""
    if u1 == 0.0:
        u1 = _SMALLEST_POSITIVE
    radius = math.sqrt(-2.0 * math.log(u1))
    angle = 2.0 * math.pi * u2
    return radius * math.cos(angle), radius * math.sin(angle)


class RandomStream:
    """MT19937 stream with a cached Box-Muller spare.

    Streams are single-owner mutable state. The array methods consume the
    generator exactly like the corresponding number of scalar calls.
    """

    def __init__(self, seed: int):
        if not 0 <= seed <= 0xFFFFFFFF:
            raise ValidationError(f"Seed must be a 32-bit unsigned integer, got {seed}")
        self.seed = seed
        self._state = np.random.RandomState(seed)
        self.cached_gaussian: float | None = None

    @classmethod
    def from_key(cls, key: InstanceKey) -> "RandomStream":
        return cls(seed_from_key(key))

    def next_uint32(self) -> int:
        """Next raw 32-bit output word"""
        return int(self._state.randint(0, 2**32, dtype=np.uint32))

    def next_uint32_array(self, count: int) -> np.ndarray:
        return self._state.randint(0, 2**32, size=count, dtype=np.uint32)

    def next_uniform(self) -> float:
        """genrand_res53: uniform double in [0, 1) with 53-bit resolution"""
        a = self.next_uint32() >> 5
        b = self.next_uint32() >> 6
        return (a * _TWO_POW_26 + b) / _TWO_POW_53

    def next_uniforms(self, count: int) -> np.ndarray:
        words = self.next_uint32_array(2 * count).astype(np.uint64)
        a = (words[0::2] >> np.uint64(5)).astype(np.float64)
        b = (words[1::2] >> np.uint64(6)).astype(np.float64)
        return (a * _TWO_POW_26 + b) / _TWO_POW_53

    def next_index(self, n: int) -> int:
        """Uniform index in {0..n-1} as floor(u * n)"""
        if n < 1:
            raise ValidationError(f"Index range must be positive, got {n}")
        return min(int(self.next_uniform() * n), n - 1)

    def next_gaussian(self) -> float:
        """Standard normal variate; the sin twin is cached for the next call"""
        if self.cached_gaussian is not None:
            value = self.cached_gaussian
            self.cached_gaussian = None
            return value
        u1 = self.next_uniform()
        u2 = self.next_uniform()
        first, second = box_muller(u1, u2)
        self.cached_gaussian = second
        return first

    def next_gaussians(self, count: int) -> np.ndarray:
        out = np.empty(count)
        filled = 0
        if count > 0 and self.cached_gaussian is not None:
            out[0] = self.cached_gaussian
            self.cached_gaussian = None
            filled = 1
        pairs = (count - filled + 1) // 2
        if pairs:
            u = self.next_uniforms(2 * pairs)
            u1 = np.where(u[0::2] == 0.0, _SMALLEST_POSITIVE, u[0::2])
            radius = np.sqrt(-2.0 * np.log(u1))
            angle = 2.0 * np.pi * u[1::2]
            values = np.empty(2 * pairs)
            values[0::2] = radius * np.cos(angle)
            values[1::2] = radius * np.sin(angle)
            needed = count - filled
            out[filled:] = values[:needed]
            if needed < 2 * pairs:
                self.cached_gaussian = float(values[-1])
        return out

    def sample_permutation(self, n: int) -> np.ndarray:
        """Fisher-Yates from the last position down, uniform over all n! orders"""
        if n < 1:
            raise ValidationError(f"Permutation size must be positive, got {n}")
        perm = np.arange(n)
        for k in range(n - 1, 0, -1):
            j = min(int(self.next_uniform() * (k + 1)), k)
            perm[k], perm[j] = perm[j], perm[k]
        return perm

    def sample_truncated_gaussian_vector(self, d: int, bound: float) -> np.ndarray:
        """Componentwise rejection: redraw until |value| <= bound"""
        if bound <= 0:
            raise ValidationError(f"Truncation bound must be positive, got {bound}")
        out = np.empty(d)
        for k in range(d):
            value = self.next_gaussian()
            while abs(value) > bound:
                value = self.next_gaussian()
            out[k] = value
        return out
