"""Finitely generated abelian groups of group-like elements.

Elements of Z^r x prod Z/m_j are exponent tuples (free coordinates first).
The group algebra of such a group has polynomial growth of degree r, which
is what the coradical contributes to every bound.
"""

import itertools
import math

from .intmat import integer_kernel, integer_rank
from .scalars import INFINITE


class GroupData:
    """Z^free_rank x prod Z/m_j with componentwise addition."""

    def __init__(self, free_rank=0, torsion=()):
        if free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        torsion = tuple(int(m) for m in torsion)
        if any(m < 2 for m in torsion):
            raise ValueError("torsion orders must be >= 2")
        self.free_rank = free_rank
        self.torsion = torsion
        self.ngens = free_rank + len(torsion)

    # -- elements ------------------------------------------------------
    def identity(self):
        return (0,) * self.ngens

    def reduce(self, elt):
        elt = tuple(elt)
        if len(elt) != self.ngens:
            raise ValueError("element of wrong length for %r" % (self,))
        r = self.free_rank
        return elt[:r] + tuple(x % m for x, m in zip(elt[r:], self.torsion))

    def mul(self, a, b):
        return self.reduce(tuple(x + y for x, y in zip(a, b)))

    def inv(self, a):
        return self.reduce(tuple(-x for x in a))

    def power(self, a, n):
        return self.reduce(tuple(n * x for x in a))

    def generator(self, i):
        if not 0 <= i < self.ngens:
            raise IndexError("no group generator %d" % i)
        e = [0] * self.ngens
        e[i] = 1
        return tuple(e)

    def generators(self):
        return [self.generator(i) for i in range(self.ngens)]

    def is_identity(self, a):
        return not any(self.reduce(a))

    def word_length(self, a):
        a = self.reduce(a)
        r = self.free_rank
        total = sum(abs(x) for x in a[:r])
        total += sum(min(x, m - x) for x, m in zip(a[r:], self.torsion))
        return total

    def element_order(self, a):
        a = self.reduce(a)
        if any(a[:self.free_rank]):
            return INFINITE
        order = 1
        for x, m in zip(a[self.free_rank:], self.torsion):
            if x:
                order = math.lcm(order, m // math.gcd(x, m))
        return order

    def ball(self, radius):
        """All elements of word length <= radius, in sorted order."""
        ranges = [range(-radius, radius + 1)] * self.free_rank
        ranges += [range(m) for m in self.torsion]
        out = [e for e in itertools.product(*ranges)
               if self.word_length(e) <= radius]
        out.sort()
        return out

    def gk_dimension(self):
        """GK-dimension of the group algebra: the free rank."""
        return self.free_rank

    # -- subgroup analysis ---------------------------------------------
    def subgroup_free_rank(self, gens):
        rows = [list(self.reduce(g)[:self.free_rank]) for g in gens]
        rows = [r for r in rows if any(r)]
        if not rows:
            return 0
        return integer_rank(rows)

    def subgroup_is_torsionfree(self, gens):
        """Whether the subgroup generated by gens has no nonzero torsion.

        A torsion element of the subgroup is an integer combination whose
        free part vanishes; the kernel lattice of the free-part matrix is
        computed exactly, and each kernel basis vector must map to zero in
        the torsion coordinates.
        """
        gens = [self.reduce(g) for g in gens if not self.is_identity(g)]
        if not gens:
            return True
        r = self.free_rank
        if not self.torsion:
            return True
        free_rows = [list(g[:r]) for g in gens]
        if r == 0:
            kernel = [[1 if i == j else 0 for j in range(len(gens))]
                      for i in range(len(gens))]
        else:
            kernel = integer_kernel(free_rows)
        for vec in kernel:
            tors = [sum(c * g[r + j] for c, g in zip(vec, gens)) % m
                    for j, m in enumerate(self.torsion)]
            if any(tors):
                return False
        return True

    def format_element(self, a, names=None):
        a = self.reduce(a)
        if not any(a):
            return "1"
        bits = []
        for i, x in enumerate(a):
            if x:
                name = names[i] if names else "g%d" % (i + 1)
                bits.append(name if x == 1 else "%s^%d" % (name, x))
        return " ".join(bits)

    def __eq__(self, other):
        return (isinstance(other, GroupData)
                and other.free_rank == self.free_rank
                and other.torsion == self.torsion)

    def __hash__(self):
        return hash((self.free_rank, self.torsion))

    def __repr__(self):
        parts = ["Z"] * self.free_rank + ["Z/%d" % m for m in self.torsion]
        return "GroupData(%s)" % (" x ".join(parts) if parts else "trivial")


def _primitive_vector(v):
    g = 0
    for x in v:
        g = math.gcd(g, abs(x))
    if g == 0:
        return None, 0
    prim = tuple(x // g for x in v)
    for x in prim:
        if x != 0:
            if x < 0:
                prim = tuple(-y for y in prim)
                g = -g
            break
    return prim, g


def cyclic_support(group, a, b):
    """Common cyclic support of two group elements.

    Returns (x, d1, d2) with a = x^d1 and b = x^d2 when the subgroup
    generated by a and b is visibly cyclic (both torsion-free, or both
    supported on a single torsion factor); otherwise None.
    """
    a = group.reduce(a)
    b = group.reduce(b)
    r = group.free_rank
    a_free, a_tors = a[:r], a[r:]
    b_free, b_tors = b[:r], b[r:]
    if not any(a) and not any(b):
        return None
    if not any(a_tors) and not any(b_tors):
        if not any(a):
            x, d2 = _primitive_vector(b_free)
            return (x + (0,) * len(group.torsion), 0, d2)
        if not any(b):
            x, d1 = _primitive_vector(a_free)
            return (x + (0,) * len(group.torsion), d1, 0)
        x, d1 = _primitive_vector(a_free)
        # b must be an integer multiple of the same primitive direction
        xb, d2 = _primitive_vector(b_free)
        if xb != x and xb != tuple(-c for c in x):
            return None
        if xb != x:
            d2 = -d2
        return (x + (0,) * len(group.torsion), d1, d2)
    if not any(a_free) and not any(b_free):
        support = {j for j, t in enumerate(a_tors) if t}
        support |= {j for j, t in enumerate(b_tors) if t}
        if len(support) != 1:
            return None
        j = support.pop()
        m = group.torsion[j]
        g = math.gcd(math.gcd(a_tors[j], b_tors[j]), m)
        x = [0] * group.ngens
        x[r + j] = g
        return (tuple(x), a_tors[j] // g, b_tors[j] // g)
    return None
