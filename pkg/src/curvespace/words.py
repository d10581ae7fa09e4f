"""Exact arithmetic in surface fundamental groups.

Normal forms by regime:

* free (punctured surfaces): free reduction;
* torus: exponent vector, spelled ``a1^p b1^q``;
* Klein bottle: semidirect coordinates ``g^k h^l`` with ``g = c1 c2``
  (orientation preserving) and ``h = c2^-1`` (orientation reversing),
  multiplied with ``h g = g^-1 h``; spelled back in the crosscap letters;
* closed hyperbolic (orientable genus >= 2, nonorientable genus >= 3):
  free reduction, Dehn shortening of subwords longer than half a cyclically
  rotated relator, and replacement of exactly-half subwords by their
  lexicographically smaller complements.  Together these rewrite every word
  of the one-relator surface presentations to a unique shortlex-minimal form.

The rewriting rules carry a fiber exponent so that the tangent-bundle module
can reuse them: the surface relator equals ``f**chi`` upstairs, so removing a
rotated copy shifts the fiber by ``chi`` times the orientation character of
the rotation prefix, twisted by the character of everything to the right of
the replacement.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache

from .surfaces import (
    Presentation,
    Regime,
    euler_characteristic,
    regime,
)


class AmbientMismatchError(ValueError):
    """Operands live over different presentations."""


class TrivialWordError(ValueError):
    """Operation undefined for the identity element."""


class WordParseError(ValueError):
    pass


class SearchExhausted(RuntimeError):
    """A bounded search hit its cap before deciding."""


Letters = tuple[int, ...]


@dataclass(frozen=True)
class Word:
    """A group element over ``ambient``, stored as its normal-form letters."""

    ambient: Presentation
    letters: Letters

    def __str__(self) -> str:
        return self.ambient.spell(self.letters)

    def __len__(self) -> int:
        return len(self.letters)


@dataclass(frozen=True)
class CyclicWord:
    """A conjugacy-class representative: letters up to rotation.

    Stored at the lexicographically least rotation so equal classes of
    freely-cyclically-reduced words compare equal in the free regimes.
    """

    ambient: Presentation
    letters: Letters

    @classmethod
    def of(cls, word: Word) -> "CyclicWord":
        _, core = cyclic_free_reduce(word.letters)
        return cls(word.ambient, min_rotation(core))

    def __str__(self) -> str:
        return self.ambient.spell(self.letters)


# ---------------------------------------------------------------------------
# letter-sequence primitives


def free_reduce(letters) -> Letters:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def invert_letters(letters) -> Letters:
    return tuple(-x for x in reversed(letters))


def cyclic_free_reduce(letters) -> tuple[Letters, Letters]:
    """Split ``w = p * core * p^-1`` with ``core`` cyclically freely reduced."""
    w = free_reduce(letters)
    i, j = 0, len(w)
    while j - i >= 2 and w[i] == -w[j - 1]:
        i += 1
        j -= 1
    return w[:i], w[i:j]


def min_rotation(letters) -> Letters:
    if not letters:
        return ()
    rots = [letters[i:] + letters[:i] for i in range(len(letters))]
    return min(rots, key=_lex_key)


def _lex_key(letters) -> tuple:
    return tuple((abs(x), 0 if x > 0 else 1) for x in letters)


# ---------------------------------------------------------------------------
# regime dispatch


def _strategy(pres: Presentation) -> Regime:
    if pres.surface is None:
        # ad-hoc presentations (used by tests/oracle): free reduction only
        return Regime.PUNCTURED
    return regime(pres.surface)


def _require_base(pres: Presentation):
    if pres.lifted:
        raise ValueError("tangent-bundle words are handled by the stbundle module")


# ---------------------------------------------------------------------------
# torus and Klein-bottle exponent engines


def torus_exponents(letters) -> tuple[int, int]:
    p = q = 0
    for x in letters:
        if abs(x) == 1:
            p += 1 if x > 0 else -1
        else:
            q += 1 if x > 0 else -1
    return p, q


def spell_torus(p: int, q: int) -> Letters:
    sa = (1,) if p >= 0 else (-1,)
    sb = (2,) if q >= 0 else (-2,)
    return sa * abs(p) + sb * abs(q)


# Klein coordinates: elements are g^k h^l with g = c1 c2, h = c2^-1 and the
# exchange law h g = g^-1 h, i.e. (k1,l1)*(k2,l2) = (k1 + (-1)^l1 k2, l1+l2).

_KLEIN_LETTER = {1: (1, 1), -1: (1, -1), 2: (0, -1), -2: (0, 1)}


def klein_product(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    k1, l1 = a
    k2, l2 = b
    return k1 + (k2 if l1 % 2 == 0 else -k2), l1 + l2


def klein_coordinates(letters) -> tuple[int, int]:
    acc = (0, 0)
    for x in letters:
        acc = klein_product(acc, _KLEIN_LETTER[x])
    return acc


def spell_klein(k: int, l: int) -> Letters:
    glide = (1, 2) if k >= 0 else (-2, -1)
    vert = (-2,) if l >= 0 else (2,)
    return free_reduce(glide * abs(k) + vert * abs(l))


# ---------------------------------------------------------------------------
# Dehn rewriting for closed hyperbolic regimes


@lru_cache(maxsize=None)
def dehn_rules(pres: Presentation) -> dict[Letters, tuple[Letters, int, int]]:
    """Strictly shortening rewriting rules from the (single) surface relator.

    Maps LHS -> (RHS, lifted fiber exponent of the rotated relator variant,
    orientation character of the RHS).  LHS runs over all prefixes of all
    rotations of the relator and its inverse that are strictly longer than
    half the relator.
    """
    relator = pres.relators[0]
    chi = euler_characteristic(pres.surface)
    L = len(relator)
    rules: dict[Letters, tuple[Letters, int, int]] = {}
    for delta, base in ((1, relator), (-1, invert_letters(relator))):
        for rot in range(L):
            variant = base[rot:] + base[:rot]
            e = delta * chi * pres.word_character(base[:rot])
            for cut in range(L, L // 2, -1):
                lhs, tail = variant[:cut], variant[cut:]
                rhs = invert_letters(tail)
                if lhs in rules:
                    continue
                rules[lhs] = (rhs, e, pres.word_character(rhs))
    return rules


@lru_cache(maxsize=None)
def half_swaps(pres: Presentation) -> dict[Letters, tuple[tuple[Letters, int, int], ...]]:
    """Length-preserving relator replacements (both directions, with fiber
    data).  Maps each half-relator LHS to (RHS, variant fiber, RHS character)
    alternatives; inverse rotations supply the reverse direction, and both
    halves of a relator share the same orientation character, so a swap
    followed by its reverse restores the fiber exactly."""
    relator = pres.relators[0]
    chi = euler_characteristic(pres.surface)
    L = len(relator)
    out: dict[Letters, list] = {}
    if L % 2:
        return {}
    for delta, base in ((1, relator), (-1, invert_letters(relator))):
        for rot in range(L):
            variant = base[rot:] + base[:rot]
            e = delta * chi * pres.word_character(base[:rot])
            lhs, tail = variant[: L // 2], variant[L // 2 :]
            rhs = invert_letters(tail)
            if lhs != rhs:
                entry = (rhs, e, pres.word_character(rhs))
                if entry not in out.setdefault(lhs, []):
                    out[lhs].append(entry)
    return {k: tuple(v) for k, v in out.items()}


# cap on the fixed-length swap orbit explored per normalization; generous for
# desk-scale words, loud (SearchExhausted) rather than silently wrong beyond
_SWAP_ORBIT_CAP = 4096


def _find_shortening(w: Letters, rules, L: int) -> tuple[int, int] | None:
    lo = L // 2 + 1
    n = len(w)
    for i in range(n):
        top = min(L, n - i)
        for size in range(top, lo - 1, -1):
            if w[i : i + size] in rules:
                return i, size
    return None


def _dehn_normalize(letters, pres: Presentation) -> tuple[Letters, int]:
    """Normal form plus the accumulated fiber shift.

    Free reduction and Dehn shortening run to a fixpoint; then the orbit of
    the word under half-relator swaps is explored and the shortlex-least
    member is taken (restarting whenever a swap exposes a further
    shortening).  Equal-length spellings of one element are connected by
    such swaps in the one-relator surface presentations, which makes the
    result a canonical form; the randomized associativity suites and the
    brute-force oracle cross-check this.
    """
    rules = dehn_rules(pres)
    swaps = half_swaps(pres)
    L = len(pres.relators[0])
    half = L // 2
    w = free_reduce(letters)
    shift = 0
    while True:
        # phase 1: shorten to a Dehn-irreducible word, leftmost-longest
        while True:
            hit = _find_shortening(w, rules, L)
            if hit is None:
                break
            i, size = hit
            rhs, e, eps_rhs = rules[w[i : i + size]]
            shift += e * eps_rhs * pres.word_character(w[i + size :])
            w = free_reduce(w[:i] + rhs + w[i + size :])
        if not swaps:
            return w, shift
        # phase 2: canonicalize across the fixed-length swap orbit
        seen: dict[Letters, int] = {w: shift}
        stack = [w]
        restart = None
        while stack and restart is None:
            s = stack.pop()
            fs = seen[s]
            n = len(s)
            for i in range(n - half + 1):
                seg = s[i : i + half]
                for rhs, e, eps_rhs in swaps.get(seg, ()):
                    cand_shift = fs + e * eps_rhs * pres.word_character(s[i + half :])
                    cand = s[:i] + rhs + s[i + half :]
                    reduced = free_reduce(cand)
                    if len(reduced) < len(cand) or _find_shortening(reduced, rules, L):
                        restart = (reduced, cand_shift)
                        break
                    if cand in seen:
                        if seen[cand] != cand_shift:
                            raise AssertionError("inconsistent fiber bookkeeping")
                        continue
                    if len(seen) >= _SWAP_ORBIT_CAP:
                        raise SearchExhausted("half-relator swap orbit exceeded its cap")
                    seen[cand] = cand_shift
                    stack.append(cand)
                if restart is not None:
                    break
        if restart is not None:
            w, shift = restart
            continue
        best = min(seen, key=_lex_key)
        return best, seen[best]


def normalize_with_fiber(letters, pres: Presentation) -> tuple[Letters, int]:
    """Normal-form letters and the fiber exponent picked up by relator moves.

    The shift is zero away from the closed hyperbolic regimes: free reduction
    is exact, and the torus/Klein relators lift without any fiber twist
    (their Euler characteristic vanishes).
    """
    strat = _strategy(pres)
    if strat is Regime.TORUS:
        return spell_torus(*torus_exponents(letters)), 0
    if strat is Regime.KLEIN:
        return spell_klein(*klein_coordinates(letters)), 0
    if strat in (
        Regime.CLOSED_ORIENTABLE_HYPERBOLIC,
        Regime.CLOSED_NONORIENTABLE_HYPERBOLIC,
    ):
        return _dehn_normalize(letters, pres)
    if strat is Regime.RP2:
        exp = sum(1 if x > 0 else -1 for x in letters)
        return ((1,) if exp % 2 else ()), 0
    if strat is Regime.SPHERE:
        return (), 0
    return free_reduce(letters), 0


# ---------------------------------------------------------------------------
# public word operations


def word(pres: Presentation, letters) -> Word:
    """Normal-form word over ``pres`` from raw letters."""
    for x in letters:
        if x == 0 or abs(x) > len(pres.generators):
            raise WordParseError(f"letter {x} outside the generator range")
    nf, _ = normalize_with_fiber(tuple(letters), pres)
    return Word(pres, nf)


def identity(pres: Presentation) -> Word:
    return Word(pres, ())


def normal_form(u: Word) -> Word:
    return word(u.ambient, u.letters)


def multiply(u: Word, v: Word) -> Word:
    if u.ambient != v.ambient:
        raise AmbientMismatchError("cannot multiply words over different presentations")
    return word(u.ambient, u.letters + v.letters)


def invert(u: Word) -> Word:
    return word(u.ambient, invert_letters(u.letters))


def is_trivial(u: Word) -> bool:
    nf, _ = normalize_with_fiber(u.letters, u.ambient)
    return nf == ()


def orientation_character(u: Word) -> int:
    return u.ambient.word_character(u.letters)


# -- conjugacy --------------------------------------------------------------


def is_conjugate(u: Word, v: Word) -> bool:
    return conjugating_element(u, v) is not None


def conjugating_element(u: Word, v: Word) -> Word | None:
    """Some ``t`` with ``t u t^-1 = v``, or None if not conjugate."""
    if u.ambient != v.ambient:
        raise AmbientMismatchError("conjugacy needs a common presentation")
    pres = u.ambient
    _require_base(pres)
    strat = _strategy(pres)
    un, vn = normal_form(u), normal_form(v)
    if strat in (Regime.TORUS, Regime.RP2, Regime.SPHERE):
        return identity(pres) if un.letters == vn.letters else None
    if strat is Regime.KLEIN:
        return _klein_conjugator(pres, un.letters, vn.letters)
    if strat is Regime.PUNCTURED:
        return _free_conjugator(pres, un.letters, vn.letters)
    return _dehn_conjugator(pres, un.letters, vn.letters)


def _free_conjugator(pres, lu, lv) -> Word | None:
    pu, su = cyclic_free_reduce(lu)
    pv, sv = cyclic_free_reduce(lv)
    if len(su) != len(sv):
        return None
    if not su:
        return identity(pres)
    doubled = su + su
    for r in range(len(su)):
        if doubled[r : r + len(su)] == sv:
            # v = pv * rot_r(su) * pv^-1 and rot_r(su) = su[:r]^-1 su su[:r]
            t = pv + invert_letters(su[:r]) + invert_letters(pu)
            return word(pres, t)
    return None


def _klein_conjugator(pres, lu, lv) -> Word | None:
    k1, l1 = klein_coordinates(lu)
    k2, l2 = klein_coordinates(lv)
    if l1 != l2:
        return None
    if l1 % 2 == 0:
        if (k2, l2) == (k1, l1):
            return identity(pres)
        if k2 == -k1:
            return word(pres, spell_klein(0, 1))  # conjugate by h
        return None
    if (k2 - k1) % 2 != 0:
        return None
    return word(pres, spell_klein((k2 - k1) // 2, 0))  # conjugate by g^t


# closed hyperbolic conjugacy: breadth-first search over the cyclic forms
# reachable by rotations, Dehn shortenings and half-relator swaps.  States
# carry the conjugator needed to recover the original element.

_ORBIT_CAP = 20000


def _cyclic_orbit(pres, letters, cap=_ORBIT_CAP) -> dict[Letters, Letters]:
    """All reachable cyclic spellings ``s`` with conjugators ``c``:
    the input element equals ``c s c^-1``."""
    rules = dehn_rules(pres)
    swaps = half_swaps(pres)
    L = len(pres.relators[0])
    half = L // 2
    p0, s0 = cyclic_free_reduce(letters)
    seen: dict[Letters, Letters] = {s0: p0}
    queue = [s0]
    while queue:
        s = queue.pop()
        c = seen[s]
        n = len(s)
        nexts: list[tuple[Letters, Letters]] = []
        if n:
            rot = s[1:] + s[:1]
            nexts.append((rot, c + s[:1]))
        for i in range(n):
            top = min(L, n - i)
            for size in range(top, half - 1, -1):
                seg = s[i : i + size]
                rule = rules.get(seg)
                if rule is not None:
                    repl = free_reduce(s[:i] + rule[0] + s[i + size :])
                    extra, core = cyclic_free_reduce(repl)
                    nexts.append((core, c + extra))
                if size == half:
                    for rhs, _, _ in swaps.get(seg, ()):
                        repl = free_reduce(s[:i] + rhs + s[i + size :])
                        extra, core = cyclic_free_reduce(repl)
                        nexts.append((core, c + extra))
        for core, conj in nexts:
            if core not in seen:
                if len(seen) >= cap:
                    raise SearchExhausted("conjugacy orbit exceeded its cap")
                seen[core] = conj
                queue.append(core)
    return seen


def _dehn_conjugator(pres, lu, lv) -> Word | None:
    # abelianized certificate first: exponent vectors must agree modulo the
    # relator row (zero for commutator relators, (2,...,2) for crosscaps)
    if not _abelian_conjugacy_possible(pres, lu, lv):
        return None
    orbit_u = _cyclic_orbit(pres, lu)
    orbit_v = _cyclic_orbit(pres, lv)
    for s, cv in orbit_v.items():
        cu = orbit_u.get(s)
        if cu is not None:
            return word(pres, cv + invert_letters(cu))
    return None


def _abelian_conjugacy_possible(pres, lu, lv) -> bool:
    n = len(pres.generators)
    eu = [0] * n
    for x in lu:
        eu[abs(x) - 1] += 1 if x > 0 else -1
    for x in lv:
        eu[abs(x) - 1] -= 1 if x > 0 else -1
    if pres.surface is not None and not pres.surface.orientable:
        # difference must be an integer multiple of (2, 2, ..., 2)
        t = eu[0]
        return all(d == t for d in eu) and t % 2 == 0
    return all(d == 0 for d in eu)


# -- primitive roots ---------------------------------------------------------


def primitive_root(u: Word) -> tuple[Word, int]:
    """(root, exponent) with ``root**exponent == u`` and the exponent maximal.

    The root generates the maximal cyclic subgroup containing ``u`` wherever
    that subgroup is unique (free and closed hyperbolic regimes, the torus,
    and most of the Klein bottle); for pure even powers of the Klein
    orientation-reversing side the choice ``h`` is fixed by convention.
    """
    pres = u.ambient
    _require_base(pres)
    strat = _strategy(pres)
    if strat in (Regime.SPHERE, Regime.RP2):
        raise ValueError("primitive roots are undefined on finite fundamental groups")
    un = normal_form(u)
    if not un.letters:
        raise TrivialWordError("the identity has no primitive root")
    if strat is Regime.TORUS:
        p, q = torus_exponents(un.letters)
        d = math.gcd(abs(p), abs(q))
        return word(pres, spell_torus(p // d, q // d)), d
    if strat is Regime.KLEIN:
        return _klein_root(pres, un.letters)
    if strat is Regime.PUNCTURED:
        return _free_root(pres, un.letters)
    return _dehn_root(pres, un.letters)


def _free_root(pres, letters) -> tuple[Word, int]:
    prefix, core = cyclic_free_reduce(letters)
    n = len(core)
    for d in range(1, n + 1):
        if n % d == 0 and core == core[:d] * (n // d):
            root = free_reduce(prefix + core[:d] + invert_letters(prefix))
            return Word(pres, root), n // d
    raise AssertionError("unreachable")


def _klein_root(pres, letters) -> tuple[Word, int]:
    k, l = klein_coordinates(letters)
    if l % 2 != 0:
        # (g^k h^s)^|l| = g^k h^l for s = sign(l)
        s = 1 if l > 0 else -1
        return word(pres, spell_klein(k, s)), abs(l)
    if k == 0:
        # pure even power of h; every g^a h generates a cyclic group through
        # it, so the root is only canonical by convention
        s = 1 if l > 0 else -1
        return word(pres, spell_klein(0, s)), abs(l)
    d = math.gcd(abs(k), abs(l) // 2)
    return word(pres, spell_klein(k // d, l // d)), d


def _dehn_root(pres, letters) -> tuple[Word, int]:
    orbit = _cyclic_orbit(pres, letters)
    best: tuple[int, Letters, Letters] | None = None  # (exponent, root, conj)
    for s, c in orbit.items():
        n = len(s)
        if n == 0:
            raise TrivialWordError("the identity has no primitive root")
        for d in range(1, n + 1):
            if n % d == 0 and s == s[:d] * (n // d):
                if best is None or n // d > best[0]:
                    best = (n // d, s[:d], c)
                break
    assert best is not None
    e, seed, c = best
    root = word(pres, c + seed + invert_letters(c))
    # sanity: root^e really is u
    power = word(pres, root.letters * e)
    target = word(pres, letters)
    if power.letters != target.letters:
        raise AssertionError("primitive root verification failed")
    return root, e


# ---------------------------------------------------------------------------
# text form


_TOKEN = re.compile(r"([A-Za-z]+[0-9]*)(?:\^(-?[0-9]+))?$")


def parse_letters(text: str, names: tuple[str, ...]) -> Letters:
    """Parse the word grammar over the given generator names.

    Lowercase names, uppercase = inverse, ``^`` powers, juxtaposition with
    spaces, and ``1`` for the empty word.
    """
    out: list[int] = []
    for token in text.split():
        if token == "1":
            continue
        m = _TOKEN.fullmatch(token)
        if not m:
            raise WordParseError(f"bad token {token!r}")
        name, power = m.group(1), int(m.group(2) or 1)
        sign = 1
        if name[0].isupper():
            sign = -1
            name = name.lower()
        try:
            idx = names.index(name) + 1
        except ValueError:
            raise WordParseError(f"unknown generator {name!r}") from None
        total = sign * power
        if total:
            out += [idx if total > 0 else -idx] * abs(total)
    return tuple(out)


def parse_word(text: str, pres: Presentation) -> Word:
    return word(pres, parse_letters(text, pres.names()))


def word_text(u: Word) -> str:
    return u.ambient.spell(u.letters)
