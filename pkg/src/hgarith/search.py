"""Automatic search for non-trivial elements of the highest root groups.

Strategy, working in the basis given by P (so a = P^-1 A P, b = P^-1 B P):

1. Enumerate freely reduced words in a, a^-1, b, b^-1 up to ``max_word_length``
   (depth-first, fixed generator order) and collect the non-trivial unipotent
   ones.  Entry-size pruning is applied to the integer matrices in the
   original basis.
2. Take a few unipotent seeds with distinct log lines and conjugate them by
   all words up to ``conjugator_length``.  A conjugate whose log has zero
   lower-triangular part lies in the upper unipotent group U.  Conjugates
   whose lower parts are proportional are combined as x^i y^j to cancel that
   part, which yields further elements of U.
3. Commutators of elements of U lie in U_{>=2}, the product of the root
   groups of height >= 2; ``commutator_rounds`` rounds are taken.
4. ``reduce_to_pattern`` finishes with exact integer elimination: U_{>=2} is
   abelian here (Sp4 and O5), so logs add and integer combinations can clear
   the unwanted root coordinate.

Every element is tracked as an expression over a and b and exported as a
straight-line program; every reported witness is re-checked through the
certificate verifier.
"""

import itertools
import logging
import time
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .certificate import BASE_SYMBOLS, Certificate, Claim, verify_certificate
from .cyclo import ParameterPair
from .exact import QMatrix, nilpotent_exp, nilpotent_log
from .slp import SLP, format_word, parse_word
from .standard import (
    Membership,
    apply_basis_change,
    format_root,
    root_coordinates,
    root_group_membership,
    root_group_pattern,
    root_system,
)

log = logging.getLogger(__name__)

GEN_NAMES = ("a", "b")
# generator order for expansion: a, a^-1, b, b^-1
GENERATORS = (("a", 1), ("a", -1), ("b", 1), ("b", -1))
INVERSE_INDEX = (1, 0, 3, 2)


@dataclass
class SearchConfig:
    max_word_length: int = 12
    max_entry_bits: int = 256
    commutator_rounds: int = 2
    target_patterns: list = None  # root labels or exponent pairs; default: highest and second highest
    seed_elements: list = None  # word strings in a, b to use as extra seeds
    conjugator_length: int = None  # default: max_word_length // 2 + 1
    max_seeds: int = 4
    max_pool: int = 64
    max_bucket_pairs: int = 20000
    max_witnesses: int = 4  # verified witnesses kept per root

    def __post_init__(self):
        for name in ("max_word_length", "max_entry_bits", "commutator_rounds", "max_seeds", "max_pool"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")

    def effective_conjugator_length(self):
        if self.conjugator_length is not None:
            return min(self.conjugator_length, self.max_word_length)
        return min(self.max_word_length // 2 + 1, self.max_word_length)


@dataclass
class Witness:
    root: str
    name: str
    slp: SLP
    matrix: QMatrix


@dataclass
class SearchResult:
    found: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)
    candidates: list = field(default_factory=list)  # unipotent words found in stage 1, shortlex order
    parameters: ParameterPair = None
    P: QMatrix = None
    targets: list = field(default_factory=list)  # root labels searched for, in order

    def roots_found(self):
        return list(dict.fromkeys(w.root for w in self.found))

    def best(self, root):
        """Witness for ``root`` with the shortest straight-line program."""
        options = [w for w in self.found if w.root == root]
        return min(options, key=lambda w: (len(w.slp), w.name)) if options else None

    def certificate(self, roots=None):
        """One certificate claiming the best witness for each requested root.

        Definitions are merged and renumbered E1, E2, ... in evaluation order.
        """
        roots = roots or [r for r in self.targets if self.best(r) is not None] or self.roots_found()
        chosen = [self.best(r) for r in roots if self.best(r) is not None]
        if not chosen or self.parameters is None:
            return None
        defs = {}
        for w in chosen:
            for name, word in w.slp.definitions:
                defs.setdefault(name, word)
        names = sorted(defs, key=_node_index)
        rename = {"a": "a", "b": "b"}
        for name in names:
            if name not in rename:
                rename[name] = f"E{len(rename) - 1}"
        fixed = {"P", "A", "B"}
        definitions = tuple(
            (rename[n], tuple((sym if sym in fixed else rename[sym], e) for sym, e in defs[n])) for n in names
        )
        slp = SLP(BASE_SYMBOLS, definitions)
        claims = tuple(Claim(rename[w.name], w.root, w.matrix) for w in chosen)
        stats = ", ".join(f"{k}={v}" for k, v in sorted(self.stats.items()) if k != "seconds")
        comments = (
            f"Found by automatic search ({stats}).",
            "a and b are the generators conjugated by P; every other name is a word in a and b.",
        )
        return Certificate(self.parameters, self.P, slp, claims, comments)


def _node_index(name):
    if name in ("a", "b"):
        return -1
    digits = "".join(ch for ch in name if ch.isdigit())
    return int(digits) if digits else 0


# --------------------------------------------------------------- integer kernels


def _sparse_columns(G):
    n = len(G)
    return tuple(tuple((k, G[k][j]) for k in range(n) if G[k][j]) for j in range(n))


def _right_mul(W, cols):
    return tuple(tuple(sum(row[k] * v for k, v in col) for col in cols) for row in W)


def _int_mm(X, Y):
    Yt = tuple(zip(*Y))
    return tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in Yt) for r in X)


def _int_rows(M):
    if not M.is_integral():
        raise ValueError("expected an integer matrix")
    return tuple(tuple(int(x) for x in M.row(i)) for i in range(M.n))


def _is_unipotent_int(M, n):
    if sum(M[i][i] for i in range(n)) != n:
        return False
    N = tuple(tuple(M[i][j] - (i == j) for j in range(n)) for i in range(n))
    if not any(any(r) for r in N):
        return False
    X = N
    for _ in range(n - 1):
        X = _int_mm(X, N)
    return not any(any(r) for r in X)


def _bits(M):
    return max(abs(x) for r in M for x in r).bit_length()


def _projective_key(values):
    g = 0
    for x in values:
        g = gcd(g, x)
    if g == 0:
        return None
    first = next(x for x in values if x)
    if first < 0:
        g = -g
    return tuple(x // g for x in values)


def _scaled(M):
    d = M.common_denominator()
    return d, tuple(tuple(int(x * d) for x in M.row(i)) for i in range(M.n))


# --------------------------------------------------------------- expressions


class _Registry:
    """Expression nodes over a and b, named E1, E2, ... in creation order."""

    def __init__(self):
        self.nodes = []  # (name, kind, payload)
        self.by_key = {}

    def _add(self, key, word):
        if key in self.by_key:
            return self.by_key[key]
        name = f"E{len(self.nodes) + 1}"
        self.nodes.append((name, word))
        self.by_key[key] = name
        return name

    def word(self, gens):
        return self._add(("w", gens), _collapse(gens))

    def conj(self, w_gens, seed_name):
        if not w_gens:
            return seed_name
        w = _collapse(w_gens)
        inv = _collapse(tuple(INVERSE_INDEX[g] for g in reversed(w_gens)))
        return self._add(("c", w_gens, seed_name), w + ((seed_name, 1),) + inv)

    def product(self, factors):
        factors = tuple((n, e) for n, e in factors if e)
        if len(factors) == 1 and factors[0][1] == 1:
            return factors[0][0]
        return self._add(("p", factors), factors)

    def commutator(self, x, y):
        return self._add(("k", x, y), ((x, 1), (y, 1), (x, -1), (y, -1)))

    def slp_for(self, name):
        """Definitions (a, b first) needed to evaluate ``name``."""
        table = dict(self.nodes)
        needed = set()
        stack = [name]
        while stack:
            cur = stack.pop()
            if cur in needed or cur not in table:
                continue
            needed.add(cur)
            stack.extend(sym for sym, _ in table[cur])
        defs = [("a", parse_word("P^-1 A P")), ("b", parse_word("P^-1 B P"))]
        defs += [(n, w) for n, w in self.nodes if n in needed]
        return SLP(BASE_SYMBOLS, tuple(defs))


def _collapse(gens):
    """Generator index sequence -> word with runs merged, e.g. a a b^-1 -> a^2 b^-1."""
    out = []
    for g in gens:
        name, e = GENERATORS[g]
        if out and out[-1][0] == name:
            out[-1] = (name, out[-1][1] + e)
            if out[-1][1] == 0:
                out.pop()
        else:
            out.append((name, e))
    return tuple(out)


def word_string(gens):
    return format_word(_collapse(gens))


# --------------------------------------------------------------- unipotent algebra


def _unipotent_inverse(E):
    n = E.n
    N = E - QMatrix.identity(n)
    out = QMatrix.identity(n)
    term = QMatrix.identity(n)
    for _ in range(n):
        term = -(term @ N)
        if term.is_zero():
            break
        out = out + term
    return out


def _power(E, k, inverse=None):
    if k < 0:
        return _power(inverse if inverse is not None else _unipotent_inverse(E), -k)
    return E**k


def _commutator(x, y):
    return x @ y @ _unipotent_inverse(x) @ _unipotent_inverse(y)


def _integer_ratio(p, q):
    """Coprime integers (i, j), j > 0, with i * q + j * p = 0 ... i.e. i/j = -p/q."""
    r = Fraction(-p) / Fraction(q)
    return r.numerator, r.denominator


# --------------------------------------------------------------- the search


def _resolve_targets(cfg, system):
    targets = cfg.target_patterns
    if targets is None:
        return [system.highest_root, system.second_highest_root]
    from .standard import parse_root

    out = []
    for t in targets:
        if hasattr(t, "root"):
            t = t.root
        out.append(parse_root(t) if isinstance(t, str) else tuple(t))
    return out


def search_root_unipotents(pres, P, cfg=None, parameters=None, progress=None):
    """Search P^-1 <A, B> P for non-trivial elements of the target root groups."""
    from .group import solve_invariant_form

    cfg = cfg or SearchConfig()
    started = time.perf_counter()
    form = solve_invariant_form(pres)
    std = apply_basis_change(P, form)
    system = root_system(std)
    targets = _resolve_targets(cfg, system)
    n = pres.n
    stats = {"nodes": 0, "pruned": 0, "unipotent_words": 0, "seeds": 0, "conjugates": 0,
             "elements_in_U": 0, "pool": 0, "witnesses": 0}
    result = SearchResult(stats=stats, parameters=parameters, P=P, targets=[format_root(t) for t in targets])
    say = progress or (lambda msg: log.info(msg))
    if cfg.max_word_length == 0:
        stats["seconds"] = round(time.perf_counter() - started, 3)
        return result

    gens = (pres.A, pres.A.inverse(), pres.B, pres.B.inverse())
    int_gens = tuple(_int_rows(g) for g in gens)
    cols = tuple(_sparse_columns(g) for g in int_gens)
    identity = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))

    def dfs(max_len, visit, track_inverse=False):
        stack = [(identity, identity, -1, ())]
        while stack:
            W, Wi, last, w = stack.pop()
            stats["nodes"] += 1
            visit(W, Wi, w)
            if len(w) >= max_len:
                continue
            # push in reverse so that a, a^-1, b, b^-1 are expanded in that order
            for g in (3, 2, 1, 0):
                if last >= 0 and g == INVERSE_INDEX[last]:
                    continue
                X = _right_mul(W, cols[g])
                if _bits(X) > cfg.max_entry_bits:
                    stats["pruned"] += 1
                    continue
                Xi = _int_mm(int_gens[INVERSE_INDEX[g]], Wi) if track_inverse else None
                stack.append((X, Xi, g, w + (g,)))

    # stage 1: unipotent words
    unipotent = {}

    def collect(W, _Wi, w):
        if w and _is_unipotent_int(W, n):
            old = unipotent.get(W)
            if old is None or (len(w), w) < (len(old), old):
                unipotent[W] = w

    dfs(cfg.max_word_length, collect)
    ordered = sorted(unipotent.items(), key=lambda kv: (len(kv[1]), kv[1]))
    stats["unipotent_words"] = len(ordered)
    result.candidates = [word_string(w) for _, w in ordered]
    say(f"stage 1: {stats['nodes']} nodes, {len(ordered)} unipotent words")

    reg = _Registry()
    Pinv = P.inverse()
    dP, P_s = _scaled(P)
    dPi, Pinv_s = _scaled(Pinv)

    def to_std(M_int):
        return Pinv @ QMatrix(M_int) @ P

    # seeds: distinct projective log lines, shortest words first
    seed_list = []
    seen_lines = set()
    extra = []
    for text in cfg.seed_elements or []:
        word = parse_word(text)
        gens_seq = []
        for sym, e in word:
            if sym not in GEN_NAMES:
                raise ValueError(f"seed words may only use a and b, got {sym!r}")
            g = GEN_NAMES.index(sym) * 2
            gens_seq.extend([g if e > 0 else g + 1] * abs(e))
        M = identity
        for g in gens_seq:
            M = _right_mul(M, cols[g])
        extra.append((M, tuple(gens_seq)))
    for M, w in extra + ordered:
        if not _is_unipotent_int(M, n):
            continue
        L = nilpotent_log(QMatrix(M))
        _, L_s = _scaled(L)
        key = _projective_key([x for r in L_s for x in r])
        if key in seen_lines:
            continue
        seen_lines.add(key)
        seed_list.append((M, w, L_s, _scaled(L)[0]))
        if len(seed_list) >= cfg.max_seeds + len(extra):
            break
    stats["seeds"] = len(seed_list)
    seed_names = [reg.word(w) for _, w, _, _ in seed_list]

    in_U = {}  # matrix (std basis) -> node name

    def add_U(E, name):
        if E.is_identity():
            return
        if E not in in_U:
            in_U[E] = name

    for M, w in ordered:
        E = to_std(M)
        if _upper_unitriangular(E):
            add_U(E, reg.word(w))

    # stage 2: conjugates, bucketed by the lower part of their log.
    # X below is the integer matrix scale[si] * log(P^-1 w s w^-1 P).
    lower = [(i, j) for i in range(n) for j in range(i + 1)]
    buckets = defaultdict(list)
    scale = [dPi * dP * d_L for _, _, _, d_L in seed_list]

    def conjugate(W, Wi, w):
        if Wi is None:
            return
        left = _int_mm(Pinv_s, W)
        right = _int_mm(Wi, P_s)
        for si, (_M, _w, L_s, _d) in enumerate(seed_list):
            X = _int_mm(_int_mm(left, L_s), right)
            stats["conjugates"] += 1
            key = _projective_key([X[i][j] for i, j in lower])
            buckets["U" if key is None else key].append((w, si, X))

    if seed_list:
        dfs(cfg.effective_conjugator_length(), conjugate, track_inverse=True)
    say(f"stage 2: {stats['conjugates']} conjugates in {len(buckets)} buckets")

    def true_log(X, si):
        return QMatrix(X).scale(Fraction(1, scale[si]))

    for w, si, X in sorted(buckets.get("U", []), key=lambda t: (len(t[0]), t[0], t[1])):
        add_U(nilpotent_exp(true_log(X, si)), reg.conj(w, seed_names[si]))

    # two commuting conjugates with proportional lower parts: x^j y^i with the
    # lower parts cancelling lies in U, and its log is j log x + i log y
    pair_budget = cfg.max_bucket_pairs
    for key in sorted(k for k in buckets if k != "U"):
        if pair_budget <= 0:
            break
        members = buckets[key]
        if len(members) < 2:
            continue
        by_line = {}
        for w, si, X in sorted(members, key=lambda t: (len(t[0]), t[0], t[1])):
            line = _projective_key([x for r in X for x in r])
            by_line.setdefault(line, (w, si, X))
        for (w1, s1, X1), (w2, s2, X2) in itertools.combinations(list(by_line.values()), 2):
            if pair_budget <= 0:
                break
            pair_budget -= 1
            if _int_mm(X1, X2) != _int_mm(X2, X1):
                continue
            L1, L2 = true_log(X1, s1), true_log(X2, s2)
            i0, j0 = next((i, j) for i, j in lower if L1[i, j] != 0)
            i, j = _integer_ratio(L1[i0, j0], L2[i0, j0])
            E = nilpotent_exp(L1.scale(j) + L2.scale(i))
            n1, n2 = reg.conj(w1, seed_names[s1]), reg.conj(w2, seed_names[s2])
            add_U(E, reg.product(((n1, j), (n2, i))))
    stats["elements_in_U"] = len(in_U)
    say(f"stage 2: {len(in_U)} elements of U")

    # stage 3: commutator rounds
    pool = _trim_pool(in_U, cfg.max_pool)
    for _ in range(cfg.commutator_rounds):
        new = {}
        items = list(pool.items())
        for (x, nx), (y, ny) in itertools.combinations(items, 2):
            z = _commutator(x, y)
            if z.is_identity() or z in pool or z in new:
                continue
            new[z] = reg.commutator(nx, ny)
        merged = dict(pool)
        merged.update(new)
        pool = _trim_pool(merged, cfg.max_pool)
    stats["pool"] = len(pool)
    say(f"stage 3: pool of {len(pool)} elements")

    # stage 4: reduce to the target patterns and re-verify
    candidates = [(E, name) for E, name in pool.items()]
    for root in targets:
        pattern = root_group_pattern(std, root)
        verified = 0
        for E, name in reduce_to_pattern(candidates, pattern, std, system, registry=reg):
            if verified >= cfg.max_witnesses:
                break
            slp = reg.slp_for(name)
            if parameters is not None:
                cert = Certificate(parameters, P, slp, (Claim(name, format_root(root)),))
                verdict = verify_certificate(cert)
                ok = bool(verdict.claims) and verdict.claims[0].ok
            else:
                ok = root_group_membership(E, std, pattern) is Membership.NONTRIVIAL_MEMBER
            if ok:
                verified += 1
                result.found.append(Witness(format_root(root), name, slp, E))
    order = {label: k for k, label in enumerate(result.targets)}
    result.found.sort(key=lambda w: (order[w.root], len(w.slp), _node_index(w.name)))
    stats["witnesses"] = len(result.found)
    stats["seconds"] = round(time.perf_counter() - started, 3)
    say(f"done: {len(result.found)} witnesses ({', '.join(result.roots_found()) or 'none'})")
    return result


def _upper_unitriangular(E):
    n = E.n
    return all(E[i, j] == (1 if i == j else 0) for i in range(n) for j in range(i + 1))


def _trim_pool(elements, cap):
    """Keep at most ``cap`` elements, smallest entries first (deterministic)."""
    ranked = sorted(elements.items(), key=lambda kv: (kv[0].max_entry_bits(), _node_index(kv[1]), kv[1]))
    return dict(ranked[:cap])


def reduce_to_pattern(candidates, pattern, form, system=None, registry=None, limit=24):
    """Combine elements of U into non-trivial elements of one root group.

    ``candidates`` is a list of ``(matrix, name)`` with matrices in the upper
    unipotent group U of the standard-shape ``form``.  Returns a list of
    ``(matrix, name)`` members of ``pattern``'s root group, smallest entries
    first.  New elements (products, commutators) are named through
    ``registry``; without a registry only candidates already in the pattern
    are returned.  ``limit`` caps the intermediate lists.
    """
    system = system or root_system(form)
    target = tuple(pattern.root)
    out = {}

    def emit(E, name):
        if E not in out and root_group_membership(E, form, pattern) is Membership.NONTRIVIAL_MEMBER:
            out[E] = name

    def finish():
        ranked = sorted(out.items(), key=lambda kv: (kv[0].max_entry_bits(), _node_index(kv[1])))
        return [(E, name) for E, name in ranked]

    coords = []
    for E, name in candidates:
        c = root_coordinates(E, form, system)
        if c is None:
            continue
        coords.append((E, name, c))
        emit(E, name)
    simple = list(system.simple_roots)
    upper = [r for r in system.positive_roots() if r not in simple]  # height >= 2; abelian for Sp4, O5
    if registry is None or target not in upper or len(upper) != 2:
        return finish()
    other = next(r for r in upper if r != target)
    generators = {r: root_group_pattern(form, r).generator for r in upper}

    def from_coords(c):
        L = QMatrix.zero(form.n)
        for r in upper:
            if c[r]:
                L = L + generators[r].scale(c[r])
        return nilpotent_exp(L)

    high = {}

    def add_high(E, name, c):
        key = _projective_key_fraction([c[r] for r in upper])
        if key is None:
            return
        old = high.get(key)
        if old is None or E.max_entry_bits() < old[0].max_entry_bits():
            high[key] = (E, name, c)

    movers = []
    for E, name, c in coords:
        if all(c[r] == 0 for r in simple):
            add_high(E, name, c)
        else:
            movers.append((E, name, c))
    movers.sort(key=lambda t: (t[0].max_entry_bits(), _node_index(t[1])))
    movers = movers[: 2 * limit]

    # products of movers whose simple coordinates cancel land in U_{>=2}
    groups = defaultdict(list)
    for item in movers:
        groups[_projective_key_fraction([item[2][r] for r in simple])].append(item)
    for key in sorted(groups):
        group = groups[key]
        E1, n1, c1 = group[0]
        k = next(idx for idx, r in enumerate(simple) if c1[r] != 0)
        for E2, n2, c2 in group[1 : limit + 1]:
            i, j = _integer_ratio(c1[simple[k]], c2[simple[k]])
            E = _power(E1, j) @ _power(E2, i)
            c = root_coordinates(E, form, system)
            if c is not None and all(c[r] == 0 for r in simple):
                add_high(E, registry.product(((n1, j), (n2, i))), c)

    highs = sorted(high.values(), key=lambda t: (t[0].max_entry_bits(), _node_index(t[1])))[:limit]
    for E, name, _ in highs:
        emit(E, name)
    if target == system.highest_root:
        # [U, U_{>=2}] lies in the top root group
        for (E1, n1, _), (E2, n2, _) in itertools.product(movers[:12], highs[:12]):
            z = _commutator(E1, E2)
            if not z.is_identity():
                emit(z, registry.commutator(n1, n2))

    # integer elimination of the other coordinate inside the abelian group U_{>=2}
    for (E1, n1, c1), (E2, n2, c2) in itertools.combinations(highs, 2):
        if c1[other] == 0 or c2[other] == 0:
            continue
        i, j = _integer_ratio(c1[other], c2[other])
        t = j * c1[target] + i * c2[target]
        if t == 0:
            continue
        c = {r: (t if r == target else Fraction(0)) for r in upper}
        emit(from_coords(c), registry.product(((n1, j), (n2, i))))
    return finish()


def _projective_key_fraction(values):
    if not any(values):
        return None
    den = 1
    for x in values:
        den = den * x.denominator // gcd(den, x.denominator)
    return _projective_key([int(x * den) for x in values])
