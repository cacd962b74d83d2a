#!/usr/bin/env python3
"""Generate the desk-scale benchmark data under data/.

Produces TTP instances derived from the classic eil51 and berlin52 TSPlib
coordinate sets with 5 items per node (bounded strongly correlated weights,
competition-style header) plus good reference tours for the underlying TSP
(nearest neighbor + 2-opt).
"""
import math
import random
from pathlib import Path

EIL51 = [
    (37, 52), (49, 49), (52, 64), (20, 26), (40, 30), (21, 47), (17, 63),
    (31, 62), (52, 33), (51, 21), (42, 41), (31, 32), (5, 25), (12, 42),
    (36, 16), (52, 41), (27, 23), (17, 33), (13, 13), (57, 58), (62, 42),
    (42, 57), (16, 57), (8, 52), (7, 38), (27, 68), (30, 48), (43, 67),
    (58, 48), (58, 27), (37, 69), (38, 46), (46, 10), (61, 33), (62, 63),
    (63, 69), (32, 22), (45, 35), (59, 15), (5, 6), (10, 17), (21, 10),
    (5, 64), (30, 15), (39, 10), (32, 39), (25, 32), (25, 55), (48, 28),
    (56, 37), (30, 40),
]

BERLIN52 = [
    (565, 575), (25, 185), (345, 750), (945, 685), (845, 655), (880, 660),
    (25, 230), (525, 1000), (580, 1175), (650, 1130), (1605, 620), (1220, 580),
    (1465, 200), (1530, 5), (845, 680), (725, 370), (145, 665), (415, 635),
    (510, 875), (560, 365), (300, 465), (520, 585), (480, 415), (835, 625),
    (975, 580), (1215, 245), (1320, 315), (1250, 400), (660, 180), (410, 250),
    (420, 555), (575, 665), (1150, 1160), (700, 580), (685, 595), (685, 610),
    (770, 610), (795, 645), (720, 635), (760, 650), (475, 960), (95, 260),
    (875, 920), (700, 500), (555, 815), (830, 485), (1170, 65), (830, 610),
    (605, 625), (595, 360), (1340, 725), (1740, 245),
]

IPN = 5


def write_instance(name, coords, out_path, seed):
    rng = random.Random(seed)
    n = len(coords)
    items = []
    for city in range(2, n + 1):
        for _ in range(IPN):
            w = rng.randint(1, 1000)
            items.append((w + 100, w, city))
    total_w = sum(w for _, w, _ in items)
    lines = [
        f"PROBLEM NAME: {name}",
        "KNAPSACK DATA TYPE: bounded strongly corr",
        f"DIMENSION: {n}",
        f"NUMBER OF ITEMS: {len(items)}",
        f"CAPACITY OF KNAPSACK: {total_w // 2}",
        "MIN SPEED: 0.1",
        "MAX SPEED: 1",
        "RENTING RATIO: 0.5",
        "EDGE_WEIGHT_TYPE: CEIL_2D",
        "NODE_COORD_SECTION	(INDEX, X, Y):",
    ]
    for i, (x, y) in enumerate(coords, 1):
        lines.append(f"{i} {x} {y}")
    lines.append("ITEMS SECTION	(INDEX, PROFIT, WEIGHT, ASSIGNED NODE NUMBER):")
    for i, (p, w, city) in enumerate(items, 1):
        lines.append(f"{i} {p} {w} {city}")
    out_path.write_text("\n".join(lines) + "\n")


def dist(a, b):
    return math.ceil(math.dist(a, b))


def tour_length(coords, tour):
    return sum(dist(coords[tour[i]], coords[tour[(i + 1) % len(tour)]])
               for i in range(len(tour)))


def two_opt_tour(coords, seed, restarts=20):
    best = None
    for r in range(restarts):
        cand = _two_opt_once(coords, seed + r)
        if best is None or tour_length(coords, cand) < tour_length(coords, best):
            best = cand
    return [c + 1 for c in best]


def _two_opt_once(coords, seed):
    n = len(coords)
    rng = random.Random(seed)
    tour = [0] + rng.sample(range(1, n), n - 1)
    # 2-opt until no improvement
    improved = True
    while improved:
        improved = False
        for i in range(1, n - 1):
            for j in range(i + 1, n):
                a, b = tour[i - 1], tour[i]
                c, d = tour[j], tour[(j + 1) % n]
                if a == c or b == d:
                    continue
                delta = (dist(coords[a], coords[c]) + dist(coords[b], coords[d])
                         - dist(coords[a], coords[b]) - dist(coords[c], coords[d]))
                if delta < 0:
                    tour[i:j + 1] = reversed(tour[i:j + 1])
                    improved = True
    return tour


def write_tour(name, coords, out_path, seed):
    tour = two_opt_tour(coords, seed)
    length = sum(dist(coords[tour[i] - 1], coords[tour[(i + 1) % len(tour)] - 1])
                 for i in range(len(tour)))
    lines = [f"NAME: {name}", "TYPE: TOUR", f"COMMENT: length {length}",
             f"DIMENSION: {len(tour)}", "TOUR_SECTION"]
    lines += [str(c) for c in tour]
    lines += ["-1", "EOF"]
    out_path.write_text("\n".join(lines) + "\n")
    print(f"{name}: length {length}")


def main():
    data = Path(__file__).resolve().parent.parent / "data"
    data.mkdir(exist_ok=True)
    write_instance("eil51-ttp", EIL51,
                   data / "eil51_n250_bounded-strongly-corr_05.ttp", seed=51)
    write_instance("berlin52-ttp", BERLIN52,
                   data / "berlin52_n255_bounded-strongly-corr_05.ttp", seed=52)
    write_tour("eil51.opt.tour", EIL51, data / "eil51.opt.tour", seed=51)
    write_tour("berlin52.opt.tour", BERLIN52, data / "berlin52.opt.tour", seed=52)


if __name__ == "__main__":
    main()
