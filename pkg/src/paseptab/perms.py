"""Permutation statistics mirrored by the tableau statistics.

A permutation of {1..m} is stored one-line as a tuple of images.  Weak
excedences (pi(i) >= i) match tableau rows; crossings (i < j <= pi(i) <
pi(j) read cyclically, see below) match the superfluous-1 count wt.  On
the descent side, occurrences of the dashed pattern 2-31 play the role of
crossings.  The generating functions here are deliberately brute force
over S_m: they are oracles for the tableau and transfer-matrix routes.

The q-Eulerian polynomial Ehat_{k,n}(q) is the closed form for the total
crossing weight of the permutations of S_n with k weak excedences; its
evaluation passes through a q^(k-k^2) prefactor whose negative powers must
cancel, and the implementation asserts that they do.
"""

from __future__ import annotations

from itertools import permutations as _lex_permutations
from math import comb

from .poly import Poly
from .shapes import configurations, descent_set as _tau_descent_set, wexc_set as _tau_wexc_set


def perms_of(m):
    """S_m in lexicographic order."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return _lex_permutations(range(1, m + 1))


def weak_excedence_set(pi):
    """Positions i with pi(i) >= i."""
    return frozenset(i + 1 for i, v in enumerate(pi) if v >= i + 1)


def descent_set(pi):
    """Positions i with pi(i) > pi(i+1)."""
    return frozenset(i + 1 for i in range(len(pi) - 1) if pi[i] > pi[i + 1])


def crossings(pi):
    """Pairs i < j with i < j <= pi(i) < pi(j), plus pairs i < j with
    pi(i) < pi(j) < i < j (the two ways arcs cross in the cycle picture)."""
    m = len(pi)
    count = 0
    for i in range(1, m + 1):
        p_i = pi[i - 1]
        for j in range(i + 1, m + 1):
            p_j = pi[j - 1]
            if j <= p_i < p_j:
                count += 1
            if p_i < p_j < i:
                count += 1
    return count


def count_2_31(pi):
    """Occurrences of the dashed pattern 2-31: i < j with
    pi(j+1) < pi(i) < pi(j)."""
    m = len(pi)
    count = 0
    for j in range(1, m):
        hi = pi[j - 1]
        lo = pi[j]
        if hi > lo:
            for i in range(1, j):
                if lo < pi[i - 1] < hi:
                    count += 1
    return count


def count_31_2(pi):
    """Occurrences of the dashed pattern 31-2: adjacent descent before a
    middle value, i.e. j > i+1 with pi(i+1) < pi(j) < pi(i)."""
    m = len(pi)
    count = 0
    for i in range(1, m):
        hi = pi[i - 1]
        lo = pi[i]
        if hi > lo:
            for j in range(i + 2, m + 1):
                if lo < pi[j - 1] < hi:
                    count += 1
    return count


def genfun_wexc_class(tau):
    """Crossing generating function over the permutations of S_(n+1) whose
    weak excedence set is the one carried by tau."""
    tau = tuple(int(t) for t in tau)
    target = _tau_wexc_set(tau)
    m = len(tau) + 1
    total = Poly.zero()
    for pi in perms_of(m):
        if weak_excedence_set(pi) == target:
            total = total + Poly.monomial(1, crossings(pi), 0, 0)
    return total


def genfun_descent_class(dset, m, pattern_counter=count_2_31):
    """Pattern generating function over the permutations of S_m with the
    given descent set."""
    target = frozenset(dset)
    if not all(1 <= d < m for d in target):
        raise ValueError(f"descent set {sorted(target)} out of range for m={m}")
    total = Poly.zero()
    for pi in perms_of(m):
        if descent_set(pi) == target:
            total = total + Poly.monomial(1, pattern_counter(pi), 0, 0)
    return total


def crossing_distribution_by_wexc(m):
    """Map: number of weak excedences -> crossing generating function."""
    out = {}
    for pi in perms_of(m):
        k = len(weak_excedence_set(pi))
        out[k] = out.get(k, Poly.zero()) + Poly.monomial(1, crossings(pi), 0, 0)
    return out


def pattern_distribution_by_descents(m, pattern_counter=count_2_31):
    """Map: number of descents -> pattern generating function."""
    out = {}
    for pi in perms_of(m):
        k = len(descent_set(pi))
        out[k] = out.get(k, Poly.zero()) + Poly.monomial(1, pattern_counter(pi), 0, 0)
    return out


def q_eulerian(k, n):
    """Closed form Ehat_{k,n}(q) for the crossing weight of S_n with k weak
    excedences:

        q^(k-k^2) sum_{i=0}^{k-1} (-1)^i [k-i]^n q^(ki-k)
                  (C(n,i) q^(k-i) + C(n,i-1)),

    with C(n,-1) = 0.  The prefactor makes intermediate exponents negative;
    they must cancel, and an assertion guards the cancellation.
    """
    if not (1 <= k <= n):
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    from .ansatz import qint

    total = Poly.zero()
    for i in range(k):
        inner = Poly.monomial(comb(n, i), k - i, 0, 0)
        if i >= 1:
            inner = inner + Poly.const(comb(n, i - 1))
        term = qint(k - i) ** n * Poly.monomial(1, k * i - k, 0, 0) * inner
        total = total + (term if i % 2 == 0 else -term)
    total = Poly.monomial(1, k - k * k, 0, 0) * total
    assert total.is_polynomial(), (
        f"negative q-powers failed to cancel in Ehat_({k},{n})"
    )
    return total


_TRANSFORMS = {
    "identity": lambda tau: tau,
    "reverse": lambda tau: tau[::-1],
    "complement": lambda tau: tuple(1 - t for t in tau),
    "reverse-complement": lambda tau: tuple(1 - t for t in tau[::-1]),
}

_PATTERNS = {"2-31": count_2_31, "31-2": count_31_2}


def descent_convention_report(max_m):
    """Search which (pattern, tau-transform) convention, if any, makes the
    descent-class generating function match the weak-excedence-class one
    for every tau with len(tau)+1 <= max_m.

    Returns {(pattern, transform): (matches_all, first_mismatch)} where
    first_mismatch is (tau, wexc_side, descent_side) serialized or None.
    """
    report = {}
    for pname, counter in _PATTERNS.items():
        for tname, tf in _TRANSFORMS.items():
            ok = True
            witness = None
            for m in range(1, max_m + 1):
                for tau in configurations(m - 1):
                    lhs = genfun_wexc_class(tau)
                    sigma = tf(tau)
                    rhs = genfun_descent_class(_tau_descent_set(sigma), m, counter)
                    if lhs != rhs:
                        ok = False
                        witness = (tau, lhs.serialize(), rhs.serialize())
                        break
                if not ok:
                    break
            report[(pname, tname)] = (ok, witness)
    return report
