"""Noncommutative rewriting over x-words with dual-group tails.

Elements are finite sums of w * delta_g with w a word in the generators
x12, x13, x23 (stored as the corresponding transpositions) and g in S3.
The delta-commutation delta_g x_t = x_t delta_{t g} is built into this
representation, so the only oriented rules are the eight x-word rules;
a rule applied under a tail keeps exactly the rhs terms whose own tail
matches after shifting past the suffix.

No monomial order is assumed to terminate reduction.  Instead the system
is certified three ways: fuel-bounded termination, resolution of every
overlap ambiguity, and exhaustive associativity of the resulting
multiplication table.  Every rule here maps a word to terms with the
same permutation image sigma(w); that invariant is asserted and is what
makes the structural zero-filter in the associativity sweep rigorous.
"""

from __future__ import annotations

from fractions import Fraction

from .groups import Perm, identity, parse_perm, symmetric_group, transposition

FUEL_DEFAULT = 10 ** 6
WORD_CAP = 8

X12 = transposition(3, 1, 2)
X13 = transposition(3, 1, 3)
X23 = transposition(3, 2, 3)
GENERATORS = (X12, X13, X23)

S3 = symmetric_group(3)
E3 = identity(3)

_LETTER_KEY = {X12: 0, X13: 1, X23: 2}


def word_key(w: tuple):
    """Deglex with x12 < x13 < x23 (falls back to string order off S3)."""
    return (len(w), tuple(_LETTER_KEY.get(t, str(t)) for t in w))


def sigma(word: tuple, n: int = 3) -> Perm:
    """sigma(x_{t1}...x_{tn}) = t_n o ... o t_1."""
    g = identity(word[0].n if word else n)
    for t in word:
        g = t * g
    return g


class NonterminationError(RuntimeError):
    def __init__(self, msg, trace=None):
        super().__init__(msg)
        self.trace = trace or []


class GrowthError(RuntimeError):
    pass


# -- SmashElt helpers (plain dicts {(word, g): coeff}) ----------------------

def _add_into(acc: dict, key, coeff):
    s = acc.get(key, 0) + coeff
    if s:
        acc[key] = s
    elif key in acc:
        del acc[key]


def smash_of(word, g: Perm, coeff=1) -> dict:
    word = tuple(word)
    return {(word, g): coeff} if coeff else {}


def smash_add(x: dict, y: dict) -> dict:
    out = dict(x)
    for k, c in y.items():
        _add_into(out, k, c)
    return out


def smash_scale(x: dict, s) -> dict:
    if not s:
        return {}
    return {k: s * c for k, c in x.items()}


def smash_unit() -> dict:
    """1 = sum_g (empty word) delta_g."""
    return {((), g): 1 for g in S3}


def smash_sorted_items(x: dict):
    return sorted(x.items(), key=lambda kv: (word_key(kv[0][0]), kv[0][1]))


def format_smash(x: dict) -> str:
    if not x:
        return "0"
    parts = []
    for (w, g), c in smash_sorted_items(x):
        wtxt = "".join(_gen_name(t) for t in w) or "1"
        parts.append(f"({c})*{wtxt}.d{g}")
    return " + ".join(parts)


def _gen_name(t: Perm) -> str:
    pts = sorted(i for i in range(1, t.n + 1) if t(i) != i)
    return "x" + "".join(str(p) for p in pts)


def shift_tail(kappa: dict, word) -> dict:
    """kappa * w = w * kappa' with kappa'[sigma(w) s] = kappa[s]."""
    word = tuple(word)
    return {sigma(word, g.n) * g: c for g, c in kappa.items()}


def smash_mult(x: dict, y: dict, rules=None) -> dict:
    """(w dg)(w' dh) = [sigma(w') g == h] (ww') dh, bilinearly; reduced
    to normal form when a rule system is supplied."""
    out: dict = {}
    for (w1, g), c1 in x.items():
        for (w2, h), c2 in y.items():
            if sigma(w2, g.n) * g != h:
                continue
            w = w1 + w2
            coeff = c1 * c2
            if rules is None:
                if len(w) > WORD_CAP:
                    raise GrowthError(f"word length {len(w)} exceeds cap")
                _add_into(out, (w, h), coeff)
            else:
                for k, c in rules.reduce_term(w, h).items():
                    _add_into(out, k, coeff * c)
    return out


# -- rules ------------------------------------------------------------------

class Rule:
    __slots__ = ("lhs", "rhs", "sigma_preserving")

    def __init__(self, lhs, rhs: dict):
        self.lhs = tuple(lhs)
        self.rhs = {k: c for k, c in rhs.items() if c}
        n = self.lhs[0].n
        s = sigma(self.lhs, n)
        self.sigma_preserving = all(sigma(w, n) == s for (w, _g) in self.rhs)

    def __repr__(self):
        return f"Rule({''.join(_gen_name(t) for t in self.lhs)} -> {format_smash(self.rhs)})"


class RuleSystem:
    def __init__(self, rules, fuel: int = FUEL_DEFAULT):
        self.rules = list(rules)
        self.fuel = fuel
        self._memo: dict = {}
        lhss = [r.lhs for r in self.rules]
        for i, a in enumerate(lhss):
            for j, b in enumerate(lhss):
                if i != j and _contains(b, a):
                    raise ValueError(
                        f"inclusion ambiguity: lhs {a} inside lhs {b}")
        for r in self.rules:
            for (w, _g) in r.rhs:
                if len(w) > len(r.lhs):
                    raise ValueError(f"rhs word longer than lhs in {r!r}")
                if len(w) == len(r.lhs) and self._find_redex(w) is not None:
                    raise ValueError(f"reducible same-length rhs word in {r!r}")

    @property
    def sigma_preserving(self) -> bool:
        return all(r.sigma_preserving for r in self.rules)

    def _find_redex(self, word):
        """Leftmost position where some lhs occurs; rule order breaks ties."""
        for p in range(len(word)):
            for ri, rule in enumerate(self.rules):
                L = len(rule.lhs)
                if word[p:p + L] == rule.lhs:
                    return p, ri
        return None

    def apply_rule_at(self, word, g: Perm, pos: int, rule_index: int) -> dict:
        """One elementary rewrite of w dg at the given redex."""
        rule = self.rules[rule_index]
        L = len(rule.lhs)
        assert word[pos:pos + L] == rule.lhs
        u, v = word[:pos], word[pos + L:]
        target = sigma(v, g.n).inv() * g
        out: dict = {}
        for (wi, hi), c in rule.rhs.items():
            if hi == target:
                _add_into(out, (u + wi + v, g), c)
        return out

    def reduce_term(self, word, g: Perm) -> dict:
        """Normal form of w dg; memoized per system."""
        word = tuple(word)
        key = (word, g)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        acc: dict = {}
        stack = [(word, g, 1)]
        fuel = self.fuel
        trace = []
        while stack:
            w, h, coeff = stack.pop()
            hit = self._memo.get((w, h))
            if hit is not None:
                for k, c in hit.items():
                    _add_into(acc, k, coeff * c)
                continue
            redex = self._find_redex(w)
            if redex is None:
                _add_into(acc, (w, h), coeff)
                self._memo[(w, h)] = {(w, h): 1}
                continue
            fuel -= 1
            if fuel <= 0:
                raise NonterminationError(
                    f"fuel exhausted reducing {format_smash({key: 1})}",
                    trace[-50:])
            pos, ri = redex
            trace.append((pos, ri, w))
            for k, c in self.apply_rule_at(w, h, pos, ri).items():
                nc = coeff * c
                if nc:
                    stack.append((k[0], k[1], nc))
        acc = {k: c for k, c in acc.items() if c}
        self._memo[key] = acc
        return acc

    def reduce(self, x: dict, fuel=None) -> dict:
        if fuel is not None and fuel != self.fuel:
            sys = RuleSystem(self.rules, fuel=fuel)
            return sys.reduce(x)
        out: dict = {}
        for (w, g), c in x.items():
            for k, c2 in self.reduce_term(w, g).items():
                _add_into(out, k, c * c2)
        return out


def _contains(haystack, needle) -> bool:
    n = len(needle)
    return any(haystack[i:i + n] == needle for i in range(len(haystack) - n + 1))


def _full_tail(word, coeff) -> dict:
    return {(tuple(word), g): coeff for g in S3}


def default_rules(a1, a2, fuel: int = FUEL_DEFAULT) -> RuleSystem:
    """The eight oriented rules presenting the 72-dimensional algebra with
    parameters (a1, a2); scalars may be numbers or polynomial generators."""
    g = {s: parse_perm(s, 3) for s in ("e", "(12)", "(13)", "(23)", "(123)", "(132)")}

    def tails(word, spec: dict) -> dict:
        return {(tuple(word), g[name]): c for name, c in spec.items() if c}

    omega = {"(12)": a2 - a1, "e": a1 - a2, "(13)": a1, "(132)": -a1,
             "(23)": -a2, "(123)": a2}

    rules = [
        Rule((X13, X13), tails((), {"(12)": a1 - a2, "(123)": a1 - a2,
                                    "(23)": a1, "(132)": a1})),
        Rule((X23, X23), tails((), {"(13)": a2, "(123)": a2,
                                    "(12)": a2 - a1, "(132)": a2 - a1})),
        Rule((X12, X12), tails((), {"(23)": -a1, "(123)": -a1,
                                    "(13)": -a2, "(132)": -a2})),
        Rule((X13, X23), smash_add(_full_tail((X23, X12), -1),
                                   _full_tail((X12, X13), -1))),
        Rule((X23, X13), smash_add(_full_tail((X12, X23), -1),
                                   _full_tail((X13, X12), -1))),
        Rule((X12, X13, X12), smash_add(_full_tail((X13, X12, X13), 1),
                                        smash_scale(_full_tail((X23,), 1), a1))),
        Rule((X23, X12, X23), smash_add(_full_tail((X12, X23, X12), 1),
                                        smash_scale(_full_tail((X13,), 1), -a2))),
        Rule((X23, X12, X13), smash_add(_full_tail((X13, X12, X23), 1),
                                        tails((X12,), omega))),
    ]
    return RuleSystem(rules, fuel=fuel)


# -- enumeration and ambiguities --------------------------------------------

def irreducible_words(rules: RuleSystem, maxlen: int = WORD_CAP,
                      letters=None) -> list:
    """All words avoiding every lhs, by breadth-first extension.  Raises
    GrowthError if irreducible words still appear at maxlen."""
    if letters is None:
        letters = sorted({t for r in rules.rules for t in r.lhs}, key=str)
    out = [()]
    layer = [()]
    for _ in range(maxlen):
        nxt = []
        for w in layer:
            for t in letters:
                cand = w + (t,)
                if rules._find_redex(cand) is None:
                    nxt.append(cand)
        out.extend(nxt)
        layer = nxt
        if not layer:
            break
    if layer:
        raise GrowthError(
            f"irreducible words still appearing at length {maxlen}; "
            "possibly infinite")
    return sorted(out, key=word_key)


def overlap_ambiguities(rules: RuleSystem) -> list:
    """All proper overlaps: (i, j, word) with lhs_i = XY a prefix of word,
    lhs_j = YZ a suffix, X, Y, Z nonempty."""
    out = []
    for i, r1 in enumerate(rules.rules):
        for j, r2 in enumerate(rules.rules):
            L1, L2 = r1.lhs, r2.lhs
            for k in range(1, min(len(L1), len(L2))):
                if L1[len(L1) - k:] == L2[:k]:
                    out.append((i, j, L1 + L2[k:]))
    return out


def resolve_ambiguity(amb, rules: RuleSystem, fuel=None):
    """Reduce the overlap word both ways (left redex first, right redex
    first) under every tail; returns (resolved, trace)."""
    i, j, word = amb
    sys = rules if fuel is None else RuleSystem(rules.rules, fuel=fuel)
    trace = []
    ok = True
    for g in S3:
        left = sys.reduce(sys.apply_rule_at(word, g, 0, i))
        right_pos = len(word) - len(sys.rules[j].lhs)
        right = sys.reduce(sys.apply_rule_at(word, g, right_pos, j))
        if left != right:
            ok = False
            diff = smash_add(left, smash_scale(right, -1))
            trace.append((g, format_smash(left), format_smash(right),
                          format_smash(diff)))
    return ok, trace


# -- the multiplication table -----------------------------------------------

class MultTable:
    """Structure constants of the 72-dimensional algebra over the rule
    system's scalars.  Basis labels are (word, g) pairs ordered deglex
    then by group element."""

    def __init__(self, rules: RuleSystem, words=None):
        if not rules.sigma_preserving:
            raise ValueError("rules must preserve sigma for the table "
                             "zero-filter to be valid")
        self.rules = rules
        self.words = list(words) if words is not None else irreducible_words(rules)
        self.labels = [(w, g) for w in self.words for g in S3]
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        self.dim = len(self.labels)
        self._word_sigma = {w: sigma(w) for w in self.words}
        self._pair_cache: dict = {}
        # products keyed (w1, w2, h): reduce(w1 w2, h); tails follow by
        # the smash constraint g2 = sigma(w2) g1
        self.products = {}
        for w1 in self.words:
            for w2 in self.words:
                s12 = sigma(w1 + w2)
                for h in S3:
                    nf = rules.reduce_term(w1 + w2, h)
                    for (w, g) in nf:
                        if (w, g) not in self.index:
                            raise ValueError(
                                f"normal form leaves the basis: {w}, {g}")
                        assert g == h and sigma(w) == s12
                    self.products[(w1, w2, h)] = nf

    def mult_basis(self, i: int, k: int) -> dict:
        """Product of basis elements i and k as {index: coeff}."""
        cached = self._pair_cache.get((i, k))
        if cached is not None:
            return cached
        (w1, g1), (w2, g2) = self.labels[i], self.labels[k]
        if self._word_sigma[w2] * g1 != g2:
            out = {}
        else:
            nf = self.products[(w1, w2, g2)]
            out = {self.index[lab]: c for lab, c in nf.items()}
        self._pair_cache[(i, k)] = out
        return out

    def mult(self, x: dict, y: dict) -> dict:
        """Product of {index: coeff} vectors."""
        out: dict = {}
        for i, c1 in x.items():
            for k, c2 in y.items():
                for l, c in self.mult_basis(i, k).items():
                    _add_into(out, l, c1 * c2 * c)
        return out

    def unit_vector(self) -> dict:
        return {self.index[((), g)]: 1 for g in S3}

    def compatible_followers(self, i: int) -> list:
        """Indices k with a structurally nonzero product i * k."""
        (_w1, g1) = self.labels[i]
        return [self.index[(w2, self._word_sigma[w2] * g1)]
                for w2 in self.words]


def structure_constants(rules: RuleSystem) -> MultTable:
    return MultTable(rules)


def check_associativity(table: MultTable, mode: str = "exhaustive",
                        seed: int = 0, count: int = 1000) -> dict:
    """(xy)z == x(yz) over basis triples, exact.  Exhaustive mode sweeps
    all 72^3 triples; triples whose tails make both sides structurally
    zero are skipped, which is sound because every rule preserves sigma."""
    failures = []
    checked = 0
    if mode == "exhaustive":
        triples = ((i, j, k)
                   for i in range(table.dim)
                   for j in table.compatible_followers(i)
                   for k in table.compatible_followers(j))
    elif mode == "sampled":
        import random
        rng = random.Random(seed)
        triples = ((rng.randrange(table.dim), rng.randrange(table.dim),
                    rng.randrange(table.dim)) for _ in range(count))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    for (i, j, k) in triples:
        xy = table.mult_basis(i, j)
        lhs: dict = {}
        for l, c in xy.items():
            for m, c2 in table.mult_basis(l, k).items():
                _add_into(lhs, m, c * c2)
        yz = table.mult_basis(j, k)
        rhs: dict = {}
        for l, c in yz.items():
            for m, c2 in table.mult_basis(i, l).items():
                _add_into(rhs, m, c * c2)
        checked += 1
        if lhs != rhs:
            failures.append((i, j, k))
    return {"mode": mode, "checked": checked, "failures": failures,
            "ok": not failures}


def hilbert_series(words) -> list:
    """Counts of basis words per length, as a list indexed by degree."""
    if not words:
        return []
    top = max(len(w) for w in words)
    out = [0] * (top + 1)
    for w in words:
        out[len(w)] += 1
    return out


# -- completion (numeric coefficients, tail-uniform rules) ------------------

def uniform_rule(lhs, word_rhs: dict) -> Rule:
    """A rule whose rhs has the same word combination under every tail."""
    lhs = tuple(lhs)
    group = symmetric_group(lhs[0].n)
    rhs: dict = {}
    for w, c in word_rhs.items():
        for g in group:
            rhs[(tuple(w), g)] = c
    return Rule(lhs, rhs)


def _is_uniform(rule: Rule):
    by_word: dict = {}
    for (w, g), c in rule.rhs.items():
        by_word.setdefault(w, {})[g] = c
    order = len(symmetric_group(rule.lhs[0].n))
    words = {}
    for w, tails in by_word.items():
        cs = set(tails.values())
        if len(tails) != order and tails:
            return None
        if len(cs) != 1:
            return None
        words[w] = cs.pop()
    return words


class _WordRules:
    """Mutable word-level reduction for tail-uniform systems over a field.

    Rules can be added and removed during completion; the normal-form
    memo survives additions (entries whose result became reducible are
    purged, the rest are still valid normal forms)."""

    def __init__(self, rules: dict, letters):
        # rules: lhs word -> {word: coeff}
        self.rules = dict(rules)
        self.letters = letters
        self._by_len: dict = {}
        for lhs in self.rules:
            self._by_len.setdefault(len(lhs), set()).add(lhs)
        self._memo: dict = {}

    def find_redex(self, word):
        for p in range(len(word)):
            for L in self._by_len:
                cand = word[p:p + L]
                if len(cand) == L and cand in self._by_len[L]:
                    return p, cand
        return None

    def add_rule(self, lhs, rhs: dict):
        self.rules[lhs] = rhs
        self._by_len.setdefault(len(lhs), set()).add(lhs)
        # memoized normal forms mentioning the new lead are stale now
        stale = [w for w, nf in self._memo.items()
                 if any(_contains(k, lhs) for k in nf)]
        for w in stale:
            del self._memo[w]

    def remove_rule(self, lhs):
        del self.rules[lhs]
        self._by_len[len(lhs)].discard(lhs)
        if not self._by_len[len(lhs)]:
            del self._by_len[len(lhs)]
        # removal can only make reducible words irreducible; memoized
        # normal forms stay irreducible, so the memo remains valid

    def reduce(self, x: dict, fuel: int) -> dict:
        out: dict = {}
        stack = [(w, c) for w, c in x.items()]
        while stack:
            w, coeff = stack.pop()
            hit = self._memo.get(w)
            if hit is not None:
                for k, c in hit.items():
                    _add_into(out, k, coeff * c)
                continue
            redex = self.find_redex(w)
            if redex is None:
                _add_into(out, w, coeff)
                self._memo[w] = {w: 1}
                continue
            fuel -= 1
            if fuel <= 0:
                raise NonterminationError("completion fuel exhausted")
            p, lhs = redex
            u, v = w[:p], w[p + len(lhs):]
            for wi, c in self.rules[lhs].items():
                stack.append((u + wi + v, coeff * c))
        return {k: c for k, c in out.items() if c}


def complete(rules: RuleSystem, maxdeg: int = 8, fuel: int = FUEL_DEFAULT,
             letters=None):
    """Buchberger-style completion for tail-uniform numeric systems:
    insert deglex-oriented normal-form differences of unresolved overlaps,
    smallest overlap first, until the pair queue drains.  Rules whose lhs
    becomes reducible are reduced and re-inserted, never discarded.
    Returns a RuleSystem."""
    import heapq

    word_rules = {}
    for r in rules.rules:
        words = _is_uniform(r)
        if words is None:
            raise ValueError("completion needs tail-uniform rules")
        word_rules[r.lhs] = words
    if letters is None:
        letters = sorted({t for r in rules.rules for t in r.lhs}, key=str)
    homog = all(len(w) == len(lhs)
                for lhs, rhs in word_rules.items() for w in rhs)

    def deglex(w):
        return (len(w), [str(t) for t in w])

    wr = _WordRules(word_rules, letters)
    pairs = []          # heap of (overlap length, tiebreak, L1, L2, k)
    counter = 0

    def push_overlaps(L1, L2):
        nonlocal counter
        for k in range(1, min(len(L1), len(L2))):
            if L1[len(L1) - k:] != L2[:k]:
                continue
            n = len(L1) + len(L2) - k
            if n > maxdeg:
                if not homog:
                    raise GrowthError("overlap exceeds maxdeg")
                # safe to skip when homogeneous: the difference lives in
                # degree > maxdeg, and the final check below certifies no
                # irreducible words survive there
                continue
            counter += 1
            heapq.heappush(pairs, (n, counter, L1, L2, k))

    def insert(elt: dict):
        """Reduce an element and turn it into a rule if nonzero."""
        elt = wr.reduce(elt, fuel)
        if not elt:
            return
        lead = max(elt, key=deglex)
        if len(lead) > maxdeg:
            raise GrowthError("new rule exceeds maxdeg")
        inv = Fraction(1) / Fraction(elt[lead])
        wr.add_rule(lead, {w: -c * inv for w, c in elt.items() if w != lead})
        # rules with a now-reducible lhs get reduced back in
        for old in list(wr.rules):
            if old != lead and _contains(old, lead):
                old_rhs = wr.rules[old]
                wr.remove_rule(old)
                resurrect = {old: 1}
                for w, c in old_rhs.items():
                    _add_into(resurrect, w, -c)
                insert(resurrect)
        for other in list(wr.rules):
            push_overlaps(lead, other)
            if other != lead:
                push_overlaps(other, lead)

    for L1 in list(wr.rules):
        for L2 in list(wr.rules):
            push_overlaps(L1, L2)
    while pairs:
        _n, _c, L1, L2, k = heapq.heappop(pairs)
        if L1 not in wr.rules or L2 not in wr.rules:
            continue
        left = wr.reduce({wi + L2[k:]: c
                          for wi, c in wr.rules[L1].items()}, fuel)
        right = wr.reduce({L1[:len(L1) - k] + wi: c
                           for wi, c in wr.rules[L2].items()}, fuel)
        diff = dict(left)
        for w, c in right.items():
            _add_into(diff, w, -c)
        insert(diff)

    # interreduce: later rules may have made earlier right-hand sides
    # reducible
    final = {lhs: wr.reduce(dict(rhs), fuel)
             for lhs, rhs in wr.rules.items()}
    done = RuleSystem([uniform_rule(lhs, rhs)
                       for lhs, rhs in final.items()], fuel=fuel)
    # skipped overlaps above resolve only if nothing irreducible remains
    # at length maxdeg; irreducible_words raises GrowthError otherwise
    irreducible_words(done, maxlen=maxdeg)
    return done
