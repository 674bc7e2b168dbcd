"""Brute-force oracles and generators used to certify the library.

Everything here deliberately avoids the code paths it is used to check:
group orders come from coset BFS over HNF-reduced representatives, subgroup
and span questions from additive closure over coordinate tuples.
"""

from itertools import product

from modcyclic.intlinalg import IntMatrix, det, hnf, snf


def check_snf(m):
    """Assert every SnfResult invariant exactly; returns the result."""
    res = snf(m)
    assert res.u @ m @ res.v == res.d
    assert abs(det(res.u)) == 1 and abs(det(res.v)) == 1
    diag = res.d.diagonal_entries()
    for i, x in enumerate(diag):
        assert x >= 0
        if i and diag[i - 1]:
            assert x % diag[i - 1] == 0 or x == 0
        if i and diag[i - 1] == 0:
            assert x == 0
    for i in range(res.d.rows):
        for j in range(res.d.cols):
            if i != j:
                assert res.d.entry(i, j) == 0
    return res


def check_hnf(m):
    """Assert the row-HNF contract exactly; returns (h, t)."""
    h, t = hnf(m)
    assert t @ m == h
    assert abs(det(t)) == 1
    last = -1
    seen_zero = False
    for row in h.data:
        piv = next((j for j, x in enumerate(row) if x), None)
        if piv is None:
            seen_zero = True
            continue
        assert not seen_zero, "nonzero row below a zero row"
        assert piv > last
        last = piv
        assert row[piv] > 0
    for i, row in enumerate(h.data):
        piv = next((j for j, x in enumerate(row) if x), None)
        if piv is None:
            continue
        for k in range(i):
            assert 0 <= h.entry(k, piv) < row[piv]
    return h, t


def hnf_reduce(rows, v):
    """Unique representative of v modulo a full-rank upper-triangular HNF
    basis (pivots on the diagonal).

    Row i only touches coordinates >= i, so reducing i in increasing order
    leaves every earlier coordinate inside its fundamental range.
    """
    v = list(v)
    for i in range(len(v)):
        q = v[i] // rows[i][i]
        if q:
            for j in range(i, len(v)):
                v[j] -= q * rows[i][j]
    return tuple(v)


def group_order_by_enumeration(relation_rows, k):
    """|Z^k / L| by BFS over canonical coset representatives."""
    h, _ = hnf(IntMatrix.from_rows([list(r) for r in relation_rows], cols=k))
    rows = [list(r) for r in h.data if any(r)]
    assert len(rows) == k, "presentation is not finite"
    start = hnf_reduce(rows, [0] * k)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(k):
                w = list(v)
                w[i] += 1
                w = hnf_reduce(rows, w)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return len(seen)


def additive_closure(coords_list, factors):
    """All sums of the given canonical coordinate tuples, as a set."""
    zero = tuple(0 for _ in factors)
    gens = [tuple(c) for c in coords_list]
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                w = tuple((a + b) % d for a, b, d in zip(v, g, factors))
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return seen


def span_coords(ring, module, y):
    """R*y as a set of coordinate tuples, via additive closure of the
    generator actions."""
    images = [module.gen_action(i, y).coords for i in range(ring.group.rank)]
    return additive_closure(images, module.group.invariant_factors)


def brute_cyclic(ring, module):
    """(is_cyclic, first generator coords in lex order)."""
    size = module.order
    for coords in product(*(range(d) for d in module.group.invariant_factors)):
        y = module.group.element(coords)
        if len(span_coords(ring, module, y)) == size:
            return True, coords
    return False, None


def subgroup_coords(sub):
    """Element coordinates of a subgroup by brute enumeration."""
    return {x.coords for x in sub.elements()}


def random_matrix(rng, rows, cols, lo=-100, hi=100):
    return IntMatrix(rows, cols,
                     [[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)])


def random_finite_presentation(rng, max_order=1000, max_gens=3):
    """A scrambled presentation of a group of known order.

    Starts from diag(d_1..d_k), appends redundant lattice rows, then applies
    random row operations (lattice preserved) and column operations (basis
    change); both leave the group order equal to prod(d_i).
    """
    k = rng.randint(1, max_gens)
    factors = []
    order = 1
    for _ in range(k):
        d = rng.randint(1, max(1, min(12, max_order // order)))
        factors.append(d)
        order *= d
    rows = [[factors[i] if j == i else 0 for j in range(k)] for i in range(k)]
    for _ in range(rng.randint(0, 2)):
        coeffs = [rng.randint(-2, 2) for _ in range(k)]
        rows.append([sum(c * rows[i][j] for i, c in enumerate(coeffs))
                     for j in range(k)])
    for _ in range(rng.randint(0, 6)):
        i, t = rng.randrange(len(rows)), rng.randrange(len(rows))
        if i != t:
            q = rng.randint(-3, 3)
            rows[i] = [a + q * b for a, b in zip(rows[i], rows[t])]
    for _ in range(rng.randint(0, 6)):
        i, t = rng.randrange(k), rng.randrange(k)
        if i != t:
            q = rng.randint(-3, 3)
            for row in rows:
                row[i] += q * row[t]
    return k, rows, order


def permute_module_gens(doc, perm):
    """Re-encode an instance with module generators permuted: new generator
    j is old generator perm[j]."""
    m = doc["module"]["num_gens"]
    assert sorted(perm) == list(range(m))

    def pvec(v):
        return [v[perm[t]] for t in range(m)]

    out = {
        "ring": {key: doc["ring"][key] for key in doc["ring"]},
        "module": {
            "num_gens": m,
            "relations": [pvec(row) for row in doc["module"]["relations"]],
            "action": [[pvec(doc["module"]["action"][i][perm[j]]) for j in range(m)]
                       for i in range(doc["ring"]["num_gens"])],
        },
    }
    return out
