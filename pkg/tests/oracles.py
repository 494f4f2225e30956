"""Brute-force reference implementations used as independent test oracles.

Everything here works on frozensets and follows the textbook definitions
directly, sharing no code with the package.
"""

from itertools import chain, combinations


def set_partitions(items):
    """All partitions of ``items`` by inserting the first item into each block."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for smaller in set_partitions(rest):
        for k in range(len(smaller)):
            yield smaller[:k] + [smaller[k] | {first}] + smaller[k + 1:]
        yield [frozenset({first})] + smaller


def stirling2(n, k):
    table = [[0] * (k + 1) for _ in range(n + 1)]
    table[0][0] = 1
    for i in range(1, n + 1):
        for j in range(1, k + 1):
            table[i][j] = j * table[i - 1][j] + table[i - 1][j - 1]
    return table[n][k]


def bell(n):
    return sum(stirling2(n, k) for k in range(n + 1))


def all_ecs(n):
    """Every embedded coalition with non-empty active set, as (S, P) of frozensets."""
    out = []
    for p in set_partitions(range(n)):
        fp = frozenset(p)
        for s in p:
            out.append((s, fp))
    return out


def ec_leq(a, b):
    s, p = a
    t, q = b
    if not s <= t:
        return False
    return all(any(tb <= sb for sb in p) for tb in q if tb != t)


def subsets(n):
    return [frozenset(c) for c in chain.from_iterable(combinations(range(n), k)
                                                      for k in range(n + 1))]


def plurality_wins(s, p, weights, votes, rule):
    if not s:
        return False
    ws = sum(weights[i] for i in s)
    for t in p:
        if t == s:
            continue
        wt = sum(weights[i] for i in t)
        if rule == "ties_all_win":
            if wt > ws:
                return False
        elif rule == "ties_lose":
            if wt >= ws:
                return False
        else:
            if wt > ws:
                return False
            if wt == ws and sum(votes[i] for i in t) >= sum(votes[i] for i in s):
                return False
    return True


def mwec_oracle(n, wins):
    """Winning ECs such that no other winning EC lies properly below, checked over all ECs."""
    ecs = all_ecs(n)
    out = set()
    for a in ecs:
        if not wins(a):
            continue
        if any(b != a and ec_leq(b, a) and wins(b) for b in ecs):
            continue
        out.add(a)
    return out


def mwc_oracle(n, wins):
    subs = subsets(n)
    return {s for s in subs if wins(s) and not any(t < s and wins(t) for t in subs)}


def to_sets(ec):
    """Package embedded coalition -> (frozenset, frozenset of frozensets)."""
    def fs(mask):
        return frozenset(i for i in range(ec.partition.n) if mask >> i & 1)
    return fs(ec.active), frozenset(fs(b) for b in ec.partition.blocks)


def mask_to_set(mask):
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)
