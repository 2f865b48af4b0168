"""Finite-dimensional coalgebras by structure constants.

Coalgebras are given by a basis label list, the comultiplication as a
dict ``label -> {(label, label): coeff}`` and the counit as a dict.
Vectors are sparse dicts ``label -> coeff``.

Provides dual group coalgebras k^G, matrix coalgebras, direct sums,
group-like computation, the skew-primitive solver used to pin down the
deformation parameters, matrix-coefficient subcoalgebras of k^G, and the
coalgebra-filtration certificate.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as _itproduct

from .groups import Perm, identity
from .linalg import nullspace, rank
from .scalars import OMEGA, Cyclotomic3


class CoalgError(ValueError):
    pass


# -- sparse vectors over a label set ----------------------------------------

def vec_add(u: dict, v: dict) -> dict:
    out = dict(u)
    for k, c in v.items():
        s = out.get(k, 0) + c
        if s:
            out[k] = s
        elif k in out:
            del out[k]
    return out


def vec_scale(c, v: dict) -> dict:
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


def vec_tensor(u: dict, v: dict) -> dict:
    return {(a, b): ca * cb for a, ca in u.items() for b, cb in v.items()}


class FinCoalgebra:
    def __init__(self, labels, comult: dict, counit: dict):
        self.labels = list(labels)
        self.comult = comult
        self.counit = counit

    @property
    def dim(self) -> int:
        return len(self.labels)

    def delta(self, v: dict) -> dict:
        """Comultiplication applied to a vector; result over pair labels."""
        out: dict = {}
        for label, c in v.items():
            for pair, d in self.comult[label].items():
                s = out.get(pair, 0) + c * d
                if s:
                    out[pair] = s
                elif pair in out:
                    del out[pair]
        return out

    def eps(self, v: dict):
        return sum((c * self.counit[label] for label, c in v.items()), 0)

    def check_coassociative(self) -> bool:
        for label in self.labels:
            left: dict = {}
            right: dict = {}
            for (a, b), c in self.comult[label].items():
                for (p, q), d in self.comult[a].items():
                    key = (p, q, b)
                    left[key] = left.get(key, 0) + c * d
                for (p, q), d in self.comult[b].items():
                    key = (a, p, q)
                    right[key] = right.get(key, 0) + c * d
            diff = dict(left)
            for k, c in right.items():
                s = diff.get(k, 0) - c
                if s:
                    diff[k] = s
                elif k in diff:
                    del diff[k]
            if any(diff.values()):
                return False
        return True

    def check_counit(self) -> bool:
        for label in self.labels:
            left: dict = {}
            right: dict = {}
            for (a, b), c in self.comult[label].items():
                left[b] = left.get(b, 0) + c * self.counit[a]
                right[a] = right.get(a, 0) + c * self.counit[b]
            want = {label: 1}
            if {k: v for k, v in left.items() if v} != want:
                return False
            if {k: v for k, v in right.items() if v} != want:
                return False
        return True


class MatrixCoalgebra(FinCoalgebra):
    """Basis e_ij with Delta(e_ij) = sum_k e_ik (x) e_kj, eps(e_ij) = [i==j]."""

    def __init__(self, n: int, prefix: str = "e"):
        self.rank_n = n
        self.prefix = prefix
        labels = [(prefix, i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
        comult = {(prefix, i, j): {((prefix, i, k), (prefix, k, j)): 1
                                   for k in range(1, n + 1)}
                  for i in range(1, n + 1) for j in range(1, n + 1)}
        counit = {(prefix, i, j): 1 if i == j else 0
                  for i in range(1, n + 1) for j in range(1, n + 1)}
        super().__init__(labels, comult, counit)

    def e(self, i: int, j: int):
        return (self.prefix, i, j)


class DualGroupCoalgebra(FinCoalgebra):
    """k^G on the Dirac basis; also carries the algebra/antipode structure."""

    def __init__(self, elems):
        self.elems = sorted(elems)
        comult = {h: {(t, t.inv() * h): 1 for t in self.elems} for h in self.elems}
        counit = {h: 1 if h.is_identity() else 0 for h in self.elems}
        super().__init__(self.elems, comult, counit)

    def unit(self) -> dict:
        return {g: 1 for g in self.elems}

    def mult(self, u: dict, v: dict) -> dict:
        out = {g: u[g] * v[g] for g in u if g in v}
        return {g: c for g, c in out.items() if c}

    def antipode(self, v: dict) -> dict:
        return {g.inv(): c for g, c in v.items()}


def direct_sum(C: FinCoalgebra, D: FinCoalgebra) -> FinCoalgebra:
    clash = set(C.labels) & set(D.labels)
    if clash:
        raise CoalgError(f"label clash in direct sum: {sorted(map(str, clash))}")
    out = FinCoalgebra(C.labels + D.labels,
                       {**C.comult, **D.comult},
                       {**C.counit, **D.counit})
    out.summands = list(getattr(C, "summands", [C])) + list(getattr(D, "summands", [D]))
    return out


def grouplike_coalgebra(label) -> FinCoalgebra:
    """The rank-1 matrix coalgebra k*g on a single group-like."""
    return FinCoalgebra([label], {label: {(label, label): 1}}, {label: 1})


# -- group-likes ------------------------------------------------------------

_SIXTH_ROOTS = (Fraction(1), Fraction(-1), OMEGA, OMEGA * OMEGA,
                -OMEGA, -(OMEGA * OMEGA))


def multiplicative_characters(elems, values=_SIXTH_ROOTS) -> list:
    """All maps chi: G -> k^x with chi(g)chi(h) = chi(gh), values drawn from
    the given root-of-unity pool.  Brute force; fine for |G| <= 6."""
    elems = sorted(elems)
    chars = []
    for combo in _itproduct(values, repeat=len(elems)):
        chi = dict(zip(elems, combo))
        e = next(g for g in elems if g.is_identity())
        if chi[e] != 1:
            continue
        if all(chi[g] * chi[h] == chi[g * h] for g in elems for h in elems):
            chars.append(chi)
    return chars


def _canonical_root(x):
    if isinstance(x, Cyclotomic3) and x.q == 0:
        return x.p
    return x


def group_likes(C: FinCoalgebra) -> list:
    """All x != 0 with Delta(x) = x (x) x and eps(x) = 1.

    Closed forms per coalgebra shape: for k^G the group-likes are the
    multiplicative characters sum chi(g) delta_g; a simple matrix coalgebra
    of rank >= 2 has none (a group-like would span a rank-1 subcoalgebra of
    a simple coalgebra); direct sums take the union of their summands.
    """
    if isinstance(C, DualGroupCoalgebra):
        out = []
        for chi in multiplicative_characters(C.elems):
            out.append({g: _canonical_root(chi[g]) for g in C.elems})
        return out
    if isinstance(C, MatrixCoalgebra):
        if C.rank_n == 1:
            return [{C.e(1, 1): 1}]
        return []
    summands = getattr(C, "summands", None)
    if summands is not None:
        out = []
        for S in summands:
            out.extend(group_likes(S))
        return out
    raise CoalgError("group-like search unsupported for this coalgebra shape")


# -- the skew-primitive solver ----------------------------------------------

def skew_primitive_space(g_label, E: MatrixCoalgebra):
    """Solve Delta(x_i) = x_i (x) g + sum_j e_ij (x) x_j in kg + E.

    Returns (ambient coalgebra, basis of the solution space).  Each basis
    element is a tuple (x_1, ..., x_n) of vectors over the ambient labels,
    found by exact nullspace computation of the full linear system.
    """
    n = E.rank_n
    ambient = direct_sum(grouplike_coalgebra(g_label), E)
    labels = ambient.labels
    nlab = len(labels)
    lab_index = {l: k for k, l in enumerate(labels)}
    pair_index = {}
    for a in labels:
        for b in labels:
            pair_index.setdefault((a, b), len(pair_index))

    # unknown u[i][b]: coordinate of x_i at ambient basis label b
    nunk = n * nlab
    rows_by_eq: dict = {}

    def bump(eq_key, col, coeff):
        row = rows_by_eq.setdefault(eq_key, [0] * nunk)
        row[col] += coeff

    for i in range(n):
        for b in labels:
            col = i * nlab + lab_index[b]
            # + Delta(b) contribution
            for pair, c in ambient.comult[b].items():
                bump((i, pair), col, c)
            # - x_i (x) g
            bump((i, (b, g_label)), col, -1)
        # - sum_j e_ij (x) x_j
        for j in range(n):
            eij = E.e(i + 1, j + 1)
            for b in labels:
                col = j * nlab + lab_index[b]
                bump((i, (eij, b)), col, -1)

    basis = nullspace(list(rows_by_eq.values()), nunk)
    tuples = []
    for v in basis:
        xs = []
        for i in range(n):
            xs.append({labels[k]: Fraction(v[i * nlab + k])
                       for k in range(nlab) if v[i * nlab + k]})
        tuples.append(tuple(xs))
    return ambient, tuples


def skew_primitive_closed_form(g_label, E: MatrixCoalgebra, a) -> tuple:
    """The tuple x_i = a_i g - sum_j a_j e_ij for given coefficients a."""
    n = E.rank_n
    xs = []
    for i in range(n):
        x = {g_label: a[i]} if a[i] else {}
        for j in range(n):
            if a[j]:
                x = vec_add(x, {E.e(i + 1, j + 1): -a[j]})
        xs.append(x)
    return tuple(xs)


# -- matrix-coefficient subcoalgebras of k^G --------------------------------

def matrix_coefficients(irrep) -> dict:
    """f_ij(g) = (i, j) entry of rho(g), as vectors over the Dirac basis."""
    d = irrep.dim
    return {(i, j): {g: irrep(g)[i - 1][j - 1]
                     for g in irrep.elems if irrep(g)[i - 1][j - 1]}
            for i in range(1, d + 1) for j in range(1, d + 1)}


def simple_subcoalgebras_of_dual_group(elems, irreps) -> list:
    """The decomposition of k^G into matrix coalgebras spanned by the
    matrix coefficients of the irreps.  Verifies Delta(f_ij) =
    sum_k f_ik (x) f_kj, independence, and the dimension count."""
    elems = sorted(elems)
    if sum(r.dim ** 2 for r in irreps) != len(elems):
        raise CoalgError("irrep list incomplete: dimension count mismatch")
    kG = DualGroupCoalgebra(elems)
    out = []
    all_vectors = []
    for r in irreps:
        fs = matrix_coefficients(r)
        d = r.dim
        for i in range(1, d + 1):
            for j in range(1, d + 1):
                want: dict = {}
                for k in range(1, d + 1):
                    want = vec_add(want, vec_tensor(fs[(i, k)], fs[(k, j)]))
                if kG.delta(fs[(i, j)]) != want:
                    raise CoalgError(
                        f"matrix coefficients of {r.name} are not coalgebraic")
        out.append((r.name, d, fs))
        all_vectors.extend(fs.values())
    dense = [[v.get(g, 0) for g in elems] for v in all_vectors]
    if rank(dense) != len(elems):
        raise CoalgError("matrix coefficients do not span k^G")
    return out


def dual_basis_e(fs: dict, elems) -> dict:
    """e_ij = S(f_ji) on k^G (S(delta_g) = delta_{g^-1}; involutive here)."""
    out = {}
    d = max(i for i, _ in fs)
    for i in range(1, d + 1):
        for j in range(1, d + 1):
            out[(i, j)] = {g.inv(): c for g, c in fs[(j, i)].items()}
    return out


# -- filtration certificate -------------------------------------------------

def verify_coalgebra_filtration(C: FinCoalgebra, subspaces) -> tuple:
    """Check Delta(F_n) subset of sum_i F_i (x) F_{n-i} for an increasing
    filtration given by spanning sets of vectors.

    Fast path for the common case where every spanning vector is a basis
    vector (then spans are support sets).  Returns (ok, message).
    """
    for n in range(1, len(subspaces)):
        prev = {frozenset(v.items()) for v in map(dict, subspaces[n - 1])}
        # nesting check via span membership (basis-vector fast path)
        if not _span_contains_all(subspaces[n], subspaces[n - 1], C):
            return False, f"F_{n - 1} not contained in F_{n}"
    if not _span_contains_all(subspaces[-1], [{l: 1} for l in C.labels], C):
        return False, "filtration does not exhaust the coalgebra"
    for n, F in enumerate(subspaces):
        allowed = set()
        basis_only = True
        for i in range(n + 1):
            for u in subspaces[i]:
                for v in subspaces[n - i]:
                    if len(u) == 1 and len(v) == 1:
                        (a, ca), = u.items()
                        (b, cb), = v.items()
                        allowed.add((a, b))
                    else:
                        basis_only = False
        if not basis_only:
            raise CoalgError("general spanning sets not supported in the "
                             "tensor step; pass basis vectors")
        for v in F:
            img = C.delta(v)
            bad = [p for p in img if p not in allowed]
            if bad:
                return False, (f"Delta(F_{n}) leaves the allowed span at "
                               f"{bad[0]}")
    return True, "filtration certificate passed"


def _span_contains_all(spanning, vectors, C: FinCoalgebra) -> bool:
    simple = all(len(v) == 1 and next(iter(v.values())) == 1 for v in spanning)
    if simple:
        support = {next(iter(v)) for v in spanning}
        return all(set(v) <= support for v in vectors)
    idx = {l: k for k, l in enumerate(C.labels)}
    dense_span = [[0] * C.dim for _ in spanning]
    for r, v in enumerate(spanning):
        for l, c in v.items():
            dense_span[r][idx[l]] = c
    base = rank(dense_span)
    for v in vectors:
        row = [0] * C.dim
        for l, c in v.items():
            row[idx[l]] = c
        if rank(dense_span + [row]) != base:
            return False
    return True
