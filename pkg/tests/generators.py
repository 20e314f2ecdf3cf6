"""Random presentations for property tests (seeded, deterministic)."""

import random

from hlyforge import GF, hom_lie, verify_hom_lie, verify_multiplicative


def random_skew(rng, field, dim, density=0.35):
    t = field.zeros((dim, dim, dim))
    for i in range(dim):
        for j in range(i + 1, dim):
            for k in range(dim):
                if rng.random() < density:
                    c = rng.randrange(1, field.p)
                    t[i, j, k] = c
                    t[j, i, k] = (-c) % field.p
    return t


def random_alpha(rng, field, dim):
    a = field.zeros((dim, dim))
    if rng.random() < 0.5:
        for i in range(dim):
            a[i, i] = rng.randrange(field.p)
        return a
    for i in range(dim):
        for j in range(dim):
            if i == j or rng.random() < 0.3:
                a[i, j] = rng.randrange(field.p)
    return a


def random_multiplicative_hom_lie(count, p=5, seed=0, max_dim=3, max_tries=200000):
    """``count`` distinct multiplicative Hom-Lie algebras of dim <= max_dim with nonzero bracket."""
    rng = random.Random(seed)
    f = GF(p)
    out, seen = [], set()
    for _ in range(max_tries):
        if len(out) == count:
            break
        dim = rng.randint(2, max_dim)
        L = hom_lie(random_alpha(rng, f, dim), random_skew(rng, f, dim), f)
        if not f.nonzero(L.bracket).any():
            continue
        key = (dim, tuple(L.alpha.reshape(-1)), tuple(L.bracket.reshape(-1)))
        if key in seen:
            continue
        if verify_hom_lie(L).ok and verify_multiplicative(L).ok:
            seen.add(key)
            out.append(L)
    return out
