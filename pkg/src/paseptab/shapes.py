"""Site configurations, Young diagrams with expanse, and the boundary path
bijection tying them together.

A configuration is a 0/1 tuple recording which of the n sites are occupied.
Its diagram lambda(tau) is read off a lattice path of south and west steps:
the path starts with a south step, then takes a south step for every
occupied site and a west step for every empty one; row i of the diagram is
the number of west steps after the i-th south step.  Trailing zero rows are
significant, so (2,1) and (2,1,0) are different diagrams.  The expanse
(rows plus columns) of lambda(tau) is always len(tau) + 1, and the map is a
bijection onto diagrams of that expanse.

The diagram order on configurations with equal length and equal particle
count is componentwise containment of diagrams; it is the order in which
the stationary weights grow q-monotonically.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product


class ComparisonError(ValueError):
    """Raised when two configurations are not comparable by contract."""


@dataclass(frozen=True)
class Diagram:
    """Weakly decreasing row lengths, possibly ending in zero rows."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise ValueError("a diagram has at least one row")
        if any(p < 0 for p in parts):
            raise ValueError("row lengths must be nonnegative")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("row lengths must be weakly decreasing")

    @property
    def rows(self):
        return len(self.parts)

    @property
    def cols(self):
        return self.parts[0]

    @property
    def expanse(self):
        return self.rows + self.cols

    @property
    def size(self):
        return sum(self.parts)

    def __str__(self):
        return ",".join(str(p) for p in self.parts)


def parse_diagram(text):
    """Inverse of str(Diagram): comma-separated row lengths."""
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ValueError(f"bad diagram text {text!r}") from None
    return Diagram(parts)


def config_str(tau):
    return "".join(str(t) for t in tau)


def parse_config(text):
    """Inverse of config_str; the empty string is the empty configuration."""
    if any(ch not in "01" for ch in text):
        raise ValueError(f"bad configuration text {text!r}")
    return tuple(int(ch) for ch in text)


def configurations(n):
    """All 0/1 tuples of length n, in binary order (first site = high bit)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return product((0, 1), repeat=n)


def boundary_path(diagram):
    """South/west boundary path of the diagram, as a string over S, W.

    Starts with the south step along the top-right edge of row 1; between
    consecutive south steps come as many west steps as the rows differ in
    length, and the last row's full length trails at the end.
    """
    parts = diagram.parts
    steps = []
    for i, p in enumerate(parts):
        nxt = parts[i + 1] if i + 1 < len(parts) else 0
        steps.append("S")
        steps.append("W" * (p - nxt))
    return "".join(steps)


def lambda_of_tau(tau):
    """Diagram of a configuration: row i counts empties after the i-th
    south step of the path S . (S if occupied else W for each site)."""
    path = [1] + [1 if t else 0 for t in tau]
    parts = []
    wests_after = 0
    for step in reversed(path):
        if step:
            parts.append(wests_after)
        else:
            wests_after += 1
    return Diagram(tuple(reversed(parts)))


def phi(diagram):
    """Inverse of lambda_of_tau: configuration of a diagram of expanse n+1."""
    path = boundary_path(diagram)
    return tuple(1 if s == "S" else 0 for s in path[1:])


def shapes_of_expanse(n):
    """All diagrams of expanse n >= 1, ordered by their configuration."""
    if n < 1:
        raise ValueError("expanse must be at least 1")
    for tau in configurations(n - 1):
        yield lambda_of_tau(tau)


def corners(diagram):
    """1-based rows ending strictly right of the next row (removable boxes)."""
    parts = diagram.parts
    out = []
    for i, p in enumerate(parts):
        nxt = parts[i + 1] if i + 1 < len(parts) else 0
        if p > nxt:
            out.append(i + 1)
    return out


def wexc_set(tau):
    """Weak excedence positions carried by a configuration: always 1, plus
    i+1 for every occupied site i."""
    return frozenset([1]) | frozenset(i + 2 for i, t in enumerate(tau) if t)


def descent_set(tau):
    """Descent positions carried by a configuration: the occupied sites."""
    return frozenset(i + 1 for i, t in enumerate(tau) if t)


def precedes(tau, tau2):
    """Diagram containment lambda(tau) <= lambda(tau2), componentwise.

    Only configurations of equal length and equal particle count are
    comparable; anything else raises ComparisonError.
    """
    tau = tuple(tau)
    tau2 = tuple(tau2)
    if len(tau) != len(tau2):
        raise ComparisonError("configurations have different lengths")
    if sum(tau) != sum(tau2):
        raise ComparisonError("configurations have different particle counts")
    la = lambda_of_tau(tau).parts
    lb = lambda_of_tau(tau2).parts
    return all(x <= y for x, y in zip(la, lb))


def hasse_cover(tau, tau2):
    """True when tau2 covers tau: containment with exactly one extra box."""
    if not precedes(tau, tau2):
        return False
    return lambda_of_tau(tau2).size - lambda_of_tau(tau).size == 1
