"""Regenerate large.curve: python tests/fixtures/make_large.py > tests/fixtures/large.curve"""

import random

rng = random.Random(20261019)
pairs = [(2, 1), (3, 1), (4, 1), (5, 1)]
lines = ["# generated by make_large.py", "graph large"]
nodes = []
for i in range(44):
    genus = rng.choice([0, 0, 0, 1, 2])
    pair = rng.choice(pairs)
    sw = ",".join(str(rng.randrange(0, 5)) for _ in range(2 * genus))
    rec = f"vertex n{i} type=node m=1 pair={pair[0]},{pair[1]} genus={genus}"
    if sw:
        rec += f" switches={sw}"
    lines.append(rec)
    nodes.append((f"n{i}", pair))
for i in range(8):
    lines.append(f"vertex h{i} type=arrow m=1")
# a covering with two sheets and a pair of tori with nontrivial switches
lines += [
    "vertex p0 type=node m=4 pair=6,1 genus=0",
    "vertex p1 type=node m=4 pair=2,1 genus=0",
    "vertex t0 type=node m=6 pair=12,1 genus=1 switches=2,0",
    "vertex t1 type=node m=6 pair=18,1 genus=1 switches=3,0",
]
edges = []
seen = set()
while len(edges) < 84:
    (u, pu), (v, pv) = rng.sample(nodes, 2)
    key = tuple(sorted((u, v)))
    sign = "-" if pu == pv else "+"
    extra = ""
    if rng.random() < 0.2:
        extra = f" count={rng.randint(2, 3)}"
    edges.append(f"{u} {v} sign={sign}{extra}")
for i in range(8):
    edges.append(f"n{rng.randrange(44)} h{i} sign=+")
edges += ["p0 p1 sign=+", "t0 t1 sign=+ attach=1,2"]
for j, e in enumerate(edges):
    lines.append(f"edge e{j} {e}")
print("\n".join(lines))
