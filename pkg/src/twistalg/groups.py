"""Finite groups as dense multiplication tables.

Elements are indices 0..order-1 with the identity at index 0.  Orders are
capped so exhaustive (all-triples) checks stay cheap.
"""
from __future__ import annotations

import numpy as np

MAX_ORDER = 4096


class GroupTable:
    def __init__(self, mul, labels=None):
        mul = np.asarray(mul, dtype=np.int64)
        if mul.ndim != 2 or mul.shape[0] != mul.shape[1]:
            raise ValueError("mul must be a square table")
        n = mul.shape[0]
        if n < 1:
            raise ValueError("empty group")
        if n > MAX_ORDER:
            raise ValueError(f"group order {n} exceeds cap {MAX_ORDER}")
        self.order = n
        self.mul = mul
        self.identity = 0
        self.labels = list(labels) if labels is not None else [str(i) for i in range(n)]
        if len(self.labels) != n:
            raise ValueError("label count mismatch")
        self.inv = self._compute_inv()
        self.check()

    def _compute_inv(self):
        inv = np.full(self.order, -1, dtype=np.int64)
        for a in range(self.order):
            hits = np.nonzero(self.mul[a] == self.identity)[0]
            if len(hits) != 1 or self.mul[hits[0], a] != self.identity:
                raise ValueError(f"element {a} has no two-sided inverse")
            inv[a] = hits[0]
        return inv

    def check(self):
        """Exhaustive associativity / unit / inverse verification."""
        n = self.order
        if np.any(self.mul < 0) or np.any(self.mul >= n):
            raise ValueError("mul entries out of range")
        if (np.any(self.mul[self.identity] != np.arange(n))
                or np.any(self.mul[:, self.identity] != np.arange(n))):
            raise ValueError("index 0 is not a two-sided identity")
        # (ab)c == a(bc), fully vectorized
        ab_c = self.mul[self.mul]                     # [a,b,c] -> (ab)c
        a_bc = self.mul[:, self.mul]                  # [a,b,c] -> a(bc)
        if np.any(ab_c != a_bc):
            raise ValueError("mul is not associative")

    def op(self, a: int, b: int) -> int:
        return int(self.mul[a, b])

    def inverse(self, a: int) -> int:
        return int(self.inv[a])

    def power(self, t: int, k: int) -> int:
        if k < 0:
            return self.power(self.inverse(t), -k)
        acc = self.identity
        for _ in range(k):
            acc = self.op(acc, t)
        return acc

    def index_of(self, label: str) -> int:
        return self.labels.index(label)

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"GroupTable(order={self.order})"


def make_cyclic(n: int) -> GroupTable:
    if n < 1:
        raise ValueError("cyclic group needs n >= 1")
    idx = np.arange(n)
    mul = (idx[:, None] + idx[None, :]) % n
    return GroupTable(mul, labels=[str(i) for i in range(n)])


def direct_product(g: GroupTable, h: GroupTable) -> GroupTable:
    """Componentwise product; indexing is row-major (g-index major)."""
    ng, nh = g.order, h.order
    if ng * nh > MAX_ORDER:
        raise ValueError("product order exceeds cap")
    mul = np.empty((ng * nh, ng * nh), dtype=np.int64)
    # (a1,b1)(a2,b2) = (a1 a2, b1 b2); index (a,b) -> a*nh + b
    ga = g.mul[:, None, :, None] * nh
    hb = h.mul[None, :, None, :]
    mul = (ga + hb).reshape(ng * nh, ng * nh)
    labels = [f"({la},{lb})" for la in g.labels for lb in h.labels]
    out = GroupTable(mul, labels=labels)
    out.factor_orders = (ng, nh)
    return out


def product_index(g: GroupTable, h: GroupTable, a: int, b: int) -> int:
    return a * h.order + b


class SubsetGroup(GroupTable):
    """All subsets of a totally ordered label list under symmetric
    difference.  Element index == bitmask; bit i <-> base_set[i]."""

    def __init__(self, base_set):
        base_set = list(base_set)
        if len(set(map(str, base_set))) != len(base_set):
            raise ValueError("duplicate labels in base set")
        n = len(base_set)
        if 2 ** n > MAX_ORDER:
            raise ValueError("subset group order exceeds cap")
        self.base_set = base_set
        idx = np.arange(2 ** n)
        mul = idx[:, None] ^ idx[None, :]
        labels = [self._mask_label(m) for m in range(2 ** n)]
        super().__init__(mul, labels=labels)

    def _mask_label(self, mask: int) -> str:
        items = [str(self.base_set[i]) for i in range(len(self.base_set))
                 if mask >> i & 1]
        return "{" + ",".join(items) + "}"

    def mask_of(self, element: int) -> int:
        return element

    def element_of_labels(self, subset) -> int:
        mask = 0
        for lbl in subset:
            mask |= 1 << self.base_set.index(lbl)
        return mask

    def card(self, element: int) -> int:
        return int(element).bit_count()


def make_subset_group(base_set) -> SubsetGroup:
    return SubsetGroup(base_set)
