import itertools
from collections import Counter

import pytest

from randembed.embed import face_permutation_at
from randembed.graph import rotation_at, trace_faces
from randembed.perm import Permutation, compose, num_cycles


def brute_cycle_counts(n):
    """Counter of cycle counts over all of S_n (independent Stirling oracle)."""
    return Counter(num_cycles(p) for p in itertools.permutations(range(n)))


def brute_cycle_types(n):
    return Counter(tuple(sorted((len(c) for c in Permutation(p).cycles()), reverse=True))
                   for p in itertools.permutations(range(n)))


def partition_count(n):
    """Number of partitions of n by the coin-change recurrence."""
    ways = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            ways[total] += ways[total - part]
    return ways[n]


def class_product_histogram(lam):
    """Cycle counts of (0 1 ... n-1) * tau over all tau of type lam, by direct enumeration."""
    n = sum(lam)
    full = Permutation([(i + 1) % n for i in range(n)])
    want = tuple(sorted(lam, reverse=True))
    hist = Counter()
    for images in itertools.permutations(range(n)):
        tau = Permutation(images)
        if tuple(sorted((len(c) for c in tau.cycles()), reverse=True)) == want:
            hist[num_cycles(compose(tau, full).images)] += 1
    return dict(hist)


def faces_at(G, rot, v):
    """Faces through v, each restricted to v's darts, as canonical cyclic tuples."""
    vd = set(G.darts_at(v))
    out = []
    for f in trace_faces(G, rot).faces:
        seq = [d for d in f if d in vd]
        if seq:
            i = seq.index(min(seq))
            out.append(tuple(seq[i:] + seq[:i]))
    return sorted(out)


def product_cycles(G, rot, v):
    darts = sorted(rot[v])
    phi = face_permutation_at(G, rot, v)
    prod = compose(phi, rotation_at(G, rot, v))
    return sorted(tuple(darts[i] for i in c) for c in prod.cycles())


@pytest.fixture(scope="session")
def oracle():
    class O:
        cycle_counts = staticmethod(brute_cycle_counts)
        cycle_types = staticmethod(brute_cycle_types)
        partitions = staticmethod(partition_count)
        class_product = staticmethod(class_product_histogram)
    return O


ACCEPTANCE_LINES = {}


def acceptance_line(number, ok, detail):
    """Record and print one acceptance verdict."""
    line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES[number] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
