"""Quantum-number bookkeeping and the bound-state spectrum.

A channel is fixed by three nonnegative integer barrier strengths
(s1, s2, s3) and the Coulomb strength gamma > 0.  Bound levels are
labelled by the principal number j = s1 + s2 + s3 + 2 k1 + 2 k2 + n
with k1, k2, n >= 0 and have energy

    E_j = -gamma^2 / (2 (j + 5/2)^2)        (hbar = m = 1)

independent of the (k1, k2, n) split.  The level degeneracy is
d (d + 1) / 2 with d = floor((j - s1 - s2 - s3) / 2) + 1, which equals
the number of admissible (k1, k2, n) triples.  The derived labels are
m = s1 + s2 + 2 k2 (azimuthal) and l = m + s3 + 2 k1 (total angular).
"""

from dataclasses import dataclass

from .errors import ConstraintError, DomainError, NoStateError

__all__ = [
    "ChannelSpec",
    "QuantumNumbers",
    "BoundState",
    "bound_energy",
    "degeneracy",
    "enumerate_states",
    "make_bound_state",
]


@dataclass(frozen=True)
class ChannelSpec:
    """Potential parameters selecting one channel."""

    s1: int
    s2: int
    s3: int
    gamma: float

    def __post_init__(self):
        for name in ("s1", "s2", "s3"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 0:
                raise DomainError(f"{name} must be a nonnegative integer, got {v!r}")
        if not self.gamma > 0.0:
            raise DomainError(f"gamma must be > 0, got {self.gamma!r}")

    @property
    def s_total(self) -> int:
        return self.s1 + self.s2 + self.s3


@dataclass(frozen=True)
class QuantumNumbers:
    """Labels of one bound state; the linear constraints are enforced."""

    j: int
    l: int
    m: int
    k1: int
    k2: int
    n: int

    def __post_init__(self):
        for name in ("j", "l", "m", "k1", "k2", "n"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 0:
                raise ConstraintError(f"{name} must be a nonnegative integer, got {v!r}")
        if self.j != self.l + self.n:
            raise ConstraintError(f"j = l + n violated: {self}")

    def check_channel(self, channel: ChannelSpec):
        if self.m != channel.s1 + channel.s2 + 2 * self.k2:
            raise ConstraintError(f"m = s1 + s2 + 2 k2 violated for {self} in {channel}")
        if self.l != self.m + channel.s3 + 2 * self.k1:
            raise ConstraintError(f"l = m + s3 + 2 k1 violated for {self} in {channel}")


@dataclass(frozen=True)
class BoundState:
    channel: ChannelSpec
    qn: QuantumNumbers
    energy: float


def bound_energy(channel: ChannelSpec, j: int) -> float:
    """Level energy -gamma^2 / (2 (j + 5/2)^2); j must admit states."""
    if not isinstance(j, int) or j < 0:
        raise DomainError(f"j must be a nonnegative integer, got {j!r}")
    if j < channel.s_total:
        raise NoStateError(f"no state at j = {j} in channel with sum(s) = {channel.s_total}")
    half_ladder = j + 2.5
    return -channel.gamma**2 / (2.0 * half_ladder * half_ladder)


def degeneracy(channel: ChannelSpec, j: int) -> int:
    """Number of states at level j: d (d + 1) / 2, d = floor(q/2) + 1."""
    if not isinstance(j, int) or j < 0:
        raise DomainError(f"j must be a nonnegative integer, got {j!r}")
    q = j - channel.s_total
    if q < 0:
        raise NoStateError(f"no state at j = {j} in channel with sum(s) = {channel.s_total}")
    d = q // 2 + 1
    return d * (d + 1) // 2


def enumerate_states(channel: ChannelSpec, j: int) -> list:
    """All quantum numbers at level j, sorted by (l, m, n)."""
    q = j - channel.s_total
    if not isinstance(j, int) or j < 0:
        raise DomainError(f"j must be a nonnegative integer, got {j!r}")
    if q < 0:
        raise NoStateError(f"no state at j = {j} in channel with sum(s) = {channel.s_total}")
    states = []
    for k1 in range(q // 2 + 1):
        for k2 in range(q // 2 - k1 + 1):
            n = q - 2 * k1 - 2 * k2
            m = channel.s1 + channel.s2 + 2 * k2
            l = m + channel.s3 + 2 * k1
            states.append(QuantumNumbers(j=j, l=l, m=m, k1=k1, k2=k2, n=n))
    states.sort(key=lambda s: (s.l, s.m, s.n))
    return states


def make_bound_state(channel: ChannelSpec, qn: QuantumNumbers) -> BoundState:
    qn.check_channel(channel)
    return BoundState(channel=channel, qn=qn, energy=bound_energy(channel, qn.j))
