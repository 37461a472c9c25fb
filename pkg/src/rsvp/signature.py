"""Vertex signatures, graph certificates, and certificate comparison.

Every quantity here is an exact rational (`fractions.Fraction`): signature
equality has to be decidable, and products of prime powers overflow floats
long before interesting graph sizes. Hop counts are encoded injectively into
odd primes, so equal signature elements mean equal hop/count structure up to
the averaged parent distances.

A certificate is the sorted multiset of vertex signatures. Relabeling a graph
permutes the multiset, so certificates of isomorphic graphs are equal; the
converse does not hold, which is why an equal-certificates verdict carries a
candidate mapping rather than an isomorphism claim.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .distances import DistanceMatrix, distance_matrix
from .graphs import Graph, Permutation
from .reachability import Group, aggregate_hp

Signature = tuple[Fraction, ...]

_odd_primes = [3, 5, 7, 11, 13]
_prime_lock = threading.Lock()


def hop_prime(h: int) -> int:
    """The h-th odd prime: 1 -> 3, 2 -> 5, 3 -> 7, 4 -> 11, ...

    The table grows on demand (trial division by the cached primes, which is
    plenty for hop counts bounded by graph diameters).
    """
    if h < 1:
        raise ValueError("hop values start at 1")
    if h > len(_odd_primes):
        with _prime_lock:
            candidate = _odd_primes[-1]
            while len(_odd_primes) < h:
                candidate += 2
                if all(candidate % p for p in _odd_primes if p * p <= candidate):
                    _odd_primes.append(candidate)
    return _odd_primes[h - 1]


def avpd(parents, dist: DistanceMatrix) -> Fraction:
    """Average pairwise distance inside a parent list.

    Distances come from the original graph's matrix, not the vertex-deleted
    graph. An unreachable pair counts as distance 0; a singleton list is the
    multiplicative identity 1.
    """
    pl = list(parents)
    k = len(pl)
    if k == 0:
        raise ValueError("empty parent list")
    if k == 1:
        return Fraction(1)
    total = 0
    for u, w in combinations(pl, 2):
        d = dist[u][w]
        if d is not None:
            total += d
    return Fraction(total, comb(k, 2))


def signature_element(groups: tuple[Group, ...], dist: DistanceMatrix) -> Fraction:
    """Product over groups of avpd(parents) * prime(hop)**count.

    An empty group list (unreachable target, or the vertex itself) maps to 0.
    """
    if not groups:
        return Fraction(0)
    acc = Fraction(1)
    for group in groups:
        acc *= avpd(group.parents, dist) * hop_prime(group.hop) ** group.count
    return acc


def vertex_signature(g: Graph, v: int, dist: DistanceMatrix) -> Signature:
    """Sorted sequence of the n signature elements of ``v``.

    ``dist`` must be the distance matrix of ``g`` itself. The element for
    ``v`` is always 0, so every signature has length exactly n and contains 0.
    """
    index = aggregate_hp(g, v)
    elements = [signature_element(index.groups[t], dist) for t in range(g.n)]
    elements.sort()
    return tuple(elements)


@dataclass(frozen=True)
class Certificate:
    """All n vertex signatures, sorted lexicographically."""

    signatures: tuple[Signature, ...]

    def serialize(self) -> str:
        """Bit-exact text form: one signature per line, elements ascending as
        ``<num>/<den>`` in lowest terms, lines sorted, newline-terminated."""
        lines = [
            ",".join(f"{e.numerator}/{e.denominator}" for e in sig)
            for sig in self.signatures
        ]
        return "".join(line + "\n" for line in sorted(lines))


def certificate(g: Graph) -> Certificate:
    """Certificate of ``g``; equal for isomorphic graphs, one-sided otherwise."""
    dist = distance_matrix(g)
    return Certificate(tuple(sorted(vertex_signature(g, v, dist) for v in range(g.n))))


@dataclass(frozen=True)
class NonIsomorphic:
    reason: str = ""


@dataclass(frozen=True)
class CertificatesEqual:
    """Signature multisets matched; ``mapping`` pairs equal-signature vertices
    and is only a candidate isomorphism until verify_mapping confirms it."""

    mapping: Permutation


Verdict = NonIsomorphic | CertificatesEqual


def rsvp_compare(g1: Graph, g2: Graph) -> Verdict:
    """Compare certificates; never calls truly isomorphic graphs non-isomorphic.

    Differing vertex or edge counts short-circuit. Otherwise vertices are
    matched greedily by equal signature; any unmatched signature means the
    graphs are non-isomorphic, a full matching yields CertificatesEqual with
    the induced candidate mapping.
    """
    if g1.n != g2.n:
        return NonIsomorphic("vertex counts differ")
    if g1.m != g2.m:
        return NonIsomorphic("edge counts differ")
    d1, d2 = distance_matrix(g1), distance_matrix(g2)
    by_sig1 = sorted((vertex_signature(g1, v, d1), v) for v in range(g1.n))
    by_sig2 = sorted((vertex_signature(g2, v, d2), v) for v in range(g2.n))
    mapping = [0] * g1.n
    for (sig1, v1), (sig2, v2) in zip(by_sig1, by_sig2):
        if sig1 != sig2:
            return NonIsomorphic("certificates differ")
        mapping[v1] = v2
    return CertificatesEqual(Permutation(tuple(mapping)))


def verify_mapping(g1: Graph, g2: Graph, f: Permutation) -> bool:
    """True iff ``f`` maps edges to edges and non-edges to non-edges."""
    if len(f) != g1.n or g1.n != g2.n:
        raise ValueError("mapping size does not match the graphs")
    if g1.m != g2.m:
        return False
    edges2 = {(u, w) for u, w in g2.edges()}
    for u, w in g1.edges():
        fu, fw = f[u], f[w]
        if ((fu, fw) if fu < fw else (fw, fu)) not in edges2:
            return False
    return True
