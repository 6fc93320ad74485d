#!/usr/bin/env python3
"""Generate all 3-connected planar graphs with 4..N vertices up to isomorphism.

Every 3-connected graph arises from a wheel by edge additions and vertex
splits (Tutte's wheel theorem), and planarity is closed under the inverse
operations, so closing the wheels under both operations inside the planar
3-connected graphs reaches every polyhedral graph.

Output: one graph per line, "n u-v u-v ...", vertices numbered from 1.
"""
import argparse
import itertools
import sys

import networkx as nx


def ok(g):
    return nx.check_planarity(g)[0] and nx.node_connectivity(g) >= 3


class Pool:
    def __init__(self):
        self.by_hash = {}
        self.items = []

    def add(self, g):
        h = (g.number_of_edges(), nx.weisfeiler_lehman_graph_hash(g, iterations=3))
        bucket = self.by_hash.setdefault(h, [])
        for other in bucket:
            if nx.is_isomorphic(g, other):
                return False
        bucket.append(g)
        self.items.append(g)
        return True


def wheel(n):
    g = nx.cycle_graph(range(1, n))
    g.add_edges_from((0, i) for i in range(1, n))
    return g


def splits(g):
    nxt = max(g.nodes) + 1
    for v in list(g.nodes):
        nb = sorted(g[v])
        if len(nb) < 4:
            continue
        first, rest = nb[0], nb[1:]
        # v keeps `keep`, the new vertex takes the others
        for r in range(1, len(rest) + 1):
            for sub in itertools.combinations(rest, r):
                keep = {first, *sub}
                give = set(nb) - keep
                if len(keep) < 2 or len(give) < 2:
                    continue
                h = g.copy()
                h.remove_edges_from((v, w) for w in give)
                h.add_edges_from((nxt, w) for w in give)
                h.add_edge(v, nxt)
                if ok(h):
                    yield nx.convert_node_labels_to_integers(h)


def additions(g):
    for u, v in itertools.combinations(sorted(g.nodes), 2):
        if not g.has_edge(u, v):
            h = g.copy()
            h.add_edge(u, v)
            if nx.check_planarity(h)[0]:
                yield h


def generate(nmax):
    levels = {}
    for n in range(4, nmax + 1):
        pool = Pool()
        frontier = [g for g in [wheel(n)] if pool.add(g)]
        for g in levels.get(n - 1, []):
            for h in splits(g):
                if pool.add(h):
                    frontier.append(h)
        while frontier:
            new = []
            for g in frontier:
                for h in additions(g):
                    if pool.add(h):
                        new.append(h)
            frontier = new
        levels[n] = pool.items
        print(f"n={n}: {len(pool.items)}", file=sys.stderr)
    return levels


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=9)
    ap.add_argument("-o", "--output", default="-")
    args = ap.parse_args()
    levels = generate(args.max_n)
    out = sys.stdout if args.output == "-" else open(args.output, "w")
    for n in sorted(levels):
        lines = []
        for g in levels[n]:
            edges = sorted((min(u, v) + 1, max(u, v) + 1) for u, v in g.edges)
            lines.append(f"{n} " + " ".join(f"{u}-{v}" for u, v in edges))
        out.write("\n".join(sorted(lines)) + "\n")
    if out is not sys.stdout:
        out.close()


if __name__ == "__main__":
    main()
