"""Independent reference implementations the tests check the package against.

Everything here deliberately avoids the code paths under test: the walk
oracle consumes the generator's door log instead of Maze door masks, the
distance oracle is Dijkstra rather than BFS, and success probabilities come
from the two-dimensional rotation closed form.
"""

import heapq
import math

# Own movement table so the package's coordinate convention is also checked:
# row 0 at the top, N decreases the row, E increases the column.
STEP = {"N": (-1, 0), "E": (0, 1), "S": (1, 0), "W": (0, -1)}
CODE = {"N": 0, "E": 1, "S": 2, "W": 3}
NAME = {v: k for k, v in CODE.items()}


class UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        """Returns False when a and b were already joined (a cycle)."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True

    def component_count(self):
        return sum(1 for i, p in enumerate(self.parent) if self.find(i) == i)


def open_pairs_from_events(events):
    """Set of unordered room pairs opened by the generator's log."""
    pairs = set()
    for room, direction in events:
        r, c = room
        dr, dc = STEP[NAME[int(direction)]]
        pairs.add(frozenset({(r, c), (r + dr, c + dc)}))
    return pairs


def replay_walk(open_pairs, start, end, steps):
    """Straight-line walk interpreter over a door-pair set.

    Returns (final_room, steps_taken, reached_end) with the same stopping
    rules the package documents: halt at the first closed move, stop on
    arrival, start == end never moves.
    """
    cur = tuple(start)
    end = tuple(end)
    if cur == end:
        return cur, 0, True
    taken = 0
    for step in steps:
        dr, dc = STEP[NAME[int(step)]]
        nxt = (cur[0] + dr, cur[1] + dc)
        if frozenset({cur, nxt}) not in open_pairs:
            return cur, taken, False
        cur = nxt
        taken += 1
        if cur == end:
            return cur, taken, True
    return cur, taken, False


def score(final_room, end, m):
    """Fitness formula, restated: ceiling minus squared distance to end."""
    dr = end[0] - final_room[0]
    dc = end[1] - final_room[1]
    return 2 * (m - 1) ** 2 - (dr * dr + dc * dc)


def grover_success_probability(num_states, marked, r):
    """Marked-set probability after r oracle+diffusion rounds from uniform."""
    theta = math.asin(math.sqrt(marked / num_states))
    return math.sin((2 * r + 1) * theta) ** 2


def dijkstra_distance(maze, start, end):
    """Unit-weight Dijkstra over open doors; independent of the BFS code."""
    from qmaze import is_open  # shared primitive, itself tested against the log

    dist = {tuple(start): 0}
    heap = [(0, tuple(start))]
    while heap:
        d, room = heapq.heappop(heap)
        if room == tuple(end):
            return d
        if d > dist.get(room, math.inf):
            continue
        for name, (dr, dc) in STEP.items():
            if not is_open(maze, room, CODE[name]):
                continue
            nxt = (room[0] + dr, room[1] + dc)
            if d + 1 < dist.get(nxt, math.inf):
                dist[nxt] = d + 1
                heapq.heappush(heap, (d + 1, nxt))
    raise AssertionError("no route found")
