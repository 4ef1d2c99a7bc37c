"""Bicolored Motzkin paths typed by a configuration.

Steps: N up, S down, and two level colours E and F.  A path of type tau
takes N or E exactly at the occupied positions and S or F at the empty
ones, never dips below height 0, and ends back at height 0.  A step ending
at height h weighs the q-integer [h+1]; the path weight is the product of
its step weights.  Summing weights over all paths of type tau reproduces
the stationary weight of tau at alpha = beta = 1, which is how the MOTZKIN
transfer matrices are cross-checked.

Swapping an adjacent (empty, occupied) pair of tau into (occupied, empty)
lifts every path of the old type to one of the new type by switching the
two steps; the weight never goes down, step by step, which is the path
explanation of the q-monotonicity along the diagram order.
"""

from __future__ import annotations

from .ansatz import qint
from .poly import Poly

STEPS = "NSEF"
_UP_STEPS = "NE"  # allowed at occupied positions
_DOWN_STEPS = "SF"  # allowed at empty positions


class PathError(ValueError):
    """Not a valid bicolored Motzkin path."""


class SwapPatternError(ValueError):
    """Step pair is not one of the swappable patterns."""


def heights(path):
    """Ending height after each step; raises PathError when the path dips
    below 0, ends off 0, or uses an unknown step."""
    h = 0
    out = []
    for i, step in enumerate(path):
        if step == "N":
            h += 1
        elif step == "S":
            h -= 1
        elif step not in ("E", "F"):
            raise PathError(f"unknown step {step!r} at position {i + 1}")
        if h < 0:
            raise PathError(f"path dips below 0 at position {i + 1}")
        out.append(h)
    if h != 0:
        raise PathError(f"path ends at height {h}, not 0")
    return out


def is_valid_path(path):
    try:
        heights(path)
    except PathError:
        return False
    return True


def path_type(path):
    """Configuration a path belongs to: 1 at N/E steps, 0 at S/F steps."""
    heights(path)
    return tuple(1 if s in _UP_STEPS else 0 for s in path)


def weight(path):
    """Product over steps of [ending height + 1]."""
    total = Poly.one()
    for h in heights(path):
        total = total * qint(h + 1)
    return total


def enumerate_type(tau):
    """All paths of type tau, depth first with N before E and S before F.

    Prefix pruning: the height may never exceed the number of empty sites
    still ahead, since only they can step down.
    """
    tau = tuple(int(t) for t in tau)
    n = len(tau)
    zeros_after = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        zeros_after[i] = zeros_after[i + 1] + (0 if tau[i] else 1)
    steps = []

    def walk(i, h):
        if i == n:
            if h == 0:
                yield "".join(steps)
            return
        if tau[i]:
            candidates = (("N", h + 1), ("E", h))
        else:
            candidates = (("S", h - 1), ("F", h))
        for step, nh in candidates:
            if nh < 0 or nh > zeros_after[i + 1]:
                continue
            steps.append(step)
            yield from walk(i + 1, nh)
            steps.pop()

    yield from walk(0, 0)


def genfun_type(tau):
    """Sum of path weights over the type; a q-polynomial."""
    total = Poly.zero()
    for path in enumerate_type(tau):
        total = total + weight(path)
    return total


def mono_step_compare(path, i):
    """Swap steps i and i+1 (1-based), which must form one of the patterns
    SN, SE, FN, FE; returns the swapped path and the coefficientwise
    nonnegative weight gain."""
    if not (1 <= i < len(path)):
        raise SwapPatternError(f"no step pair starts at position {i}")
    first, second = path[i - 1], path[i]
    if first not in _DOWN_STEPS or second not in _UP_STEPS:
        raise SwapPatternError(
            f"pattern {first}{second} at position {i} is not swappable"
        )
    heights(path)
    swapped = path[: i - 1] + second + first + path[i + 1 :]
    return swapped, weight(swapped) - weight(path)
