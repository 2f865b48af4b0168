"""Parameter classification under the scaling-and-relabeling group.

Gamma = k^x times S3 acts on the parameter plane on the right; two
parameter pairs give isomorphic algebras exactly when they lie in the
same orbit.  The action is defined on the two generating letters and
extended along a fixed factorization of each group element; the
relations certifying well-definedness are part of the test suite, not
assumed.

The explicit candidate isomorphism Theta_{mu,theta} sends delta_g to
delta_{theta g theta^-1} and x_ij to mu x_{theta(ij)theta^-1}; its
verification reduces the transported defining relations in the target
algebra symbolically over Q[a1, a2, mu].
"""

from __future__ import annotations

from fractions import Fraction

from .groups import Perm, conjugate, parse_perm, symmetric_group
from .rewrite import (RuleSystem, _add_into, default_rules, smash_mult)
from .scalars import PolyRing

T12 = parse_perm("(12)", 3)
T123 = parse_perm("(123)", 3)

# each element of S3 as a word in the two generating letters, applied
# left to right; theta equals the right-to-left composition of the word
FACTORIZATION = {
    "e": [],
    "(12)": [T12],
    "(123)": [T123],
    "(132)": [T123, T123],
    "(13)": [T123, T12],
    "(23)": [T12, T123],
}


def _letter_act(a, letter: Perm):
    a1, a2 = a
    if letter == T12:
        return (a2, a1)
    if letter == T123:
        return (-a2, -(a2 - a1))
    raise ValueError(f"not a generating letter: {letter}")


def act(a, gamma):
    """Right action of (mu, theta) on a parameter pair."""
    mu, theta = gamma
    if not mu:
        raise ZeroDivisionError("mu must be nonzero")
    if isinstance(theta, str):
        theta = parse_perm(theta, 3)
    word = FACTORIZATION[str(theta)]
    # sanity: the table entry really factors theta
    prod = parse_perm("e", 3)
    for letter in word:
        prod = prod * letter
    assert prod == theta
    for letter in word:
        a = _letter_act(a, letter)
    return (mu * a[0], mu * a[1])


def _proportional(u, v) -> bool:
    """v = lambda u for some nonzero lambda (field algebraically closed,
    so any nonzero ratio is admissible)."""
    zeros_u = tuple(x == 0 for x in u)
    zeros_v = tuple(x == 0 for x in v)
    if zeros_u != zeros_v:
        return False
    return u[0] * v[1] == u[1] * v[0]


def orbit_eq(a, b) -> bool:
    a = (Fraction(a[0]), Fraction(a[1]))
    b = (Fraction(b[0]), Fraction(b[1]))
    a_zero = a == (0, 0)
    b_zero = b == (0, 0)
    if a_zero or b_zero:
        return a_zero and b_zero
    for theta in symmetric_group(3):
        if _proportional(act(a, (Fraction(1), theta)), b):
            return True
    return False


def canonical_rep(a):
    """Orbit label: lexicographically least among the six images with the
    first nonzero coordinate normalized to 1."""
    a = (Fraction(a[0]), Fraction(a[1]))
    if a == (0, 0):
        return (Fraction(0), Fraction(0))
    candidates = []
    for theta in symmetric_group(3):
        u = act(a, (Fraction(1), theta))
        lead = u[0] if u[0] else u[1]
        candidates.append((u[0] / lead, u[1] / lead))
    return min(candidates)


def parse_pair(text: str):
    parts = text.replace("(", "").replace(")", "").split(",")
    if len(parts) != 2:
        raise ValueError(f"expected 'p/q, r/s': {text!r}")
    return (Fraction(parts[0].strip()), Fraction(parts[1].strip()))


def format_pair(a) -> str:
    return f"{a[0]}, {a[1]}"


# -- the explicit isomorphisms ----------------------------------------------

def theta_morphism(mu, theta: Perm):
    """Generator images as a map on SmashElt: w delta_g goes to
    mu^len(w) (theta w theta^-1) delta_{theta g theta^-1}."""
    if isinstance(theta, str):
        theta = parse_perm(theta, 3)

    def apply(x: dict) -> dict:
        out: dict = {}
        for (w, g), c in x.items():
            w2 = tuple(conjugate(t, theta) for t in w)
            scale = c
            for _ in w:
                scale = scale * mu
            _add_into(out, (w2, conjugate(g, theta)), scale)
        return out

    return apply


def verify_iso(theta, ring: PolyRing = None) -> dict:
    """Certificate for the isomorphism claim: with b = a <| (mu^2, theta),
    the Theta_{mu,theta}-images of the defining relations of the algebra
    at b reduce to zero under the rules of the algebra at a, symbolically
    over Q[a1, a2, mu]."""
    from .hopf72 import relation_elements

    if ring is None:
        ring = PolyRing("a1", "a2", "mu")
    a1, a2, mu = ring.gens()
    if isinstance(theta, str):
        theta = parse_perm(theta, 3)
    b = act((a1, a2), (mu * mu, theta))
    rules_a = default_rules(a1, a2)
    Theta = theta_morphism(mu, theta)
    failures = []
    for name, rel in relation_elements(b[0], b[1]):
        image = Theta(rel)
        reduced = rules_a.reduce(image)
        if reduced:
            failures.append(name)
    return {"theta": str(theta), "orientation": "images of I_{a <| (mu^2, theta)}"
                                                " vanish in A_a",
            "failures": failures, "ok": not failures}


def orbit_report(pairs) -> dict:
    """Batch classification: canonical label per pair plus orbit grouping."""
    labels = [canonical_rep(p) for p in pairs]
    groups: dict = {}
    for p, lab in zip(pairs, labels):
        groups.setdefault(lab, []).append(p)
    return {"labels": labels, "groups": groups}
