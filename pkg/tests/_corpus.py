"""The shared test corpus of named graphs."""

from __future__ import annotations

from fracpow.generators import complete, cycle, erdos_renyi, hypercube, paley, path, random_regular
from fracpow.graph import Graph


def corpus() -> list[tuple[str, Graph]]:
    out = [(f"complete:{k}", complete(k)) for k in range(1, 9)]
    out += [(f"cycle:{n}", cycle(n)) for n in range(3, 31)]
    out += [(f"path:{n}", path(n)) for n in range(1, 31)]
    out += [(f"hypercube:{d}", hypercube(d)) for d in range(2, 6)]
    out += [(f"paley:{q}", paley(q)) for q in (5, 13, 17, 29)]
    out += [("edgeless:7", Graph(7))]
    for n in range(10, 101, 10):
        for d in (3, 4, 6, 8, 10):
            if d < n and n * d % 2 == 0:
                for seed in (1, 2):
                    out.append((f"random_regular:{n}:{d}@{seed}", random_regular(n, d, seed)))
    for n in range(10, 101, 10):
        for p in (0.05, 0.1, 0.2, 0.3):
            out.append((f"erdos_renyi:{n}:{p}@{n}", erdos_renyi(n, p, n)))
    return out
