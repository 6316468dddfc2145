"""Small shared utilities: portable PRNG, SCC, union-find."""

from __future__ import annotations

from collections.abc import Callable, Iterator

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """Portable 64-bit PRNG with the splitmix update.

    state += 0x9E3779B97F4A7C15
    z = state; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9
    z = (z ^ z>>27) * 0x94D049BB133111EB; output z ^ z>>31

    Used wherever reproducibility across runs and implementations matters
    (random automaton generation, sampled batches, seeded play).
    """

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform-enough integer in [0, bound) by modulo reduction."""
        return self.next_u64() % bound


class UnionFind:
    """Union-find over 0..n-1 with path halving and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True

    def class_ids(self) -> list[int]:
        """Map each element to a dense class id, numbered by least member."""
        ids: dict[int, int] = {}
        out = []
        for x in range(len(self.parent)):
            r = self.find(x)
            if r not in ids:
                ids[r] = len(ids)
            out.append(ids[r])
        return out


def tarjan_scc(n: int, successors: Callable[[int], Iterator[int]]) -> list[int]:
    """Strongly connected components of a digraph on 0..n-1.

    Returns a component id per node. Ids are dense; components are numbered
    in the (reverse-topological) order Tarjan pops them, then remapped so
    that the component of the least node gets the least id, keeping results
    independent of traversal order.

    Iterative to survive graphs far deeper than Python's recursion limit.
    """
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    comp = [-1] * n
    stack: list[int] = []
    counter = 0
    n_comps = 0

    for root in range(n):
        if index[root] != -1:
            continue
        # Each work entry is (node, iterator over its successors).
        work = [(root, iter(successors(root)))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, iter(successors(w))))
                    advanced = True
                    break
                elif on_stack[w]:
                    if index[w] < low[v]:
                        low[v] = index[w]
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = n_comps
                    if w == v:
                        break
                n_comps += 1

    # Renumber by least member for stable, order-independent ids.
    remap: dict[int, int] = {}
    out = []
    for x in range(n):
        c = comp[x]
        if c not in remap:
            remap[c] = len(remap)
        out.append(remap[c])
    return out


def popcount(mask: int) -> int:
    return mask.bit_count()
