"""Independent brute-force oracles, kept deliberately naive."""

from itertools import product


def all_vectors(ctx, n):
    for vals in product(range(ctx.q), repeat=n):
        yield ctx.vector(vals)


def hamming(u, v):
    return sum(1 for a, b in zip(u, v) if a != b)


def weight(v):
    return sum(1 for a in v if a.value != 0)


def brute_codewords(code):
    """Codeword set via direct span enumeration (independent of kernels)."""
    return {tuple(e.value for e in c) for c in code.codewords()}


def brute_min_distance(code):
    return min(weight(c) for c in code.codewords()
               if any(e.value for e in c))


def brute_distance_to_code(code, v):
    return min(hamming(v, c) for c in code.codewords())


def brute_covering_radius(code):
    """Definitional maximum of distance-to-code over the whole space."""
    words = list(code.codewords())
    best = 0
    for v in all_vectors(code.ctx, code.n):
        d = min(hamming(v, c) for c in words)
        if d > best:
            best = d
    return best


def brute_deep_holes(code):
    """All vectors at maximal distance from the code."""
    words = list(code.codewords())
    dist = {}
    for v in all_vectors(code.ctx, code.n):
        dist[tuple(e.value for e in v)] = min(hamming(v, c) for c in words)
    rho = max(dist.values())
    return rho, {v for v, d in dist.items() if d == rho}
