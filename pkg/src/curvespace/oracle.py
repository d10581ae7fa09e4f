"""Independent brute-force verifiers.

Nothing here trusts the normal-form engines: triviality is re-derived by
breadth-first insertion of relator conjugates, centralizers by exhaustive
enumeration of a bounded box of elements, and classifications by comparing
the enumerated centralizer against products of the emitted witnesses.
Results are deterministic: fixed enumeration order, fixed tie-breaks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .surfaces import Presentation, Regime, SurfaceSpec, presentation, regime
from .words import Word, free_reduce, invert_letters
from . import stbundle
from .stbundle import STWord, st_multiply, st_word


@dataclass(frozen=True)
class SearchBound:
    """Caps for the brute-force searches.

    ``max_word_length`` bounds enumerated base words, ``max_fiber`` the fiber
    exponents, ``max_depth`` the BFS depth for relator insertions (and the
    witness-product depth in classification checks).
    """

    max_word_length: int = 8
    max_fiber: int = 4
    max_depth: int = 6

    def __post_init__(self):
        if self.max_word_length < 1 or self.max_depth < 1 or self.max_fiber < 0:
            raise ValueError("bounds must be positive (fiber may be zero)")


#: default bounds for :func:`verify_classification`, sized so that the full
#: acceptance battery stays well under a minute
VERIFY_BOUND = SearchBound(max_word_length=4, max_fiber=3, max_depth=4)

UNDECIDED = stbundle.UNDECIDED

# hard cap on BFS states, independent of the requested bounds
_STATE_CAP = 120_000


@lru_cache(maxsize=None)
def _relator_variants(pres: Presentation) -> tuple[tuple[int, ...], ...]:
    variants = set()
    for rel in pres.relators:
        for base in (rel, invert_letters(rel)):
            for i in range(len(base)):
                variants.add(base[i:] + base[:i])
    return tuple(sorted(variants))


def _exponent_vector(pres: Presentation, letters) -> tuple[int, ...]:
    v = [0] * len(pres.generators)
    for x in letters:
        v[abs(x) - 1] += 1 if x > 0 else -1
    return tuple(v)


def _lattice_member(rows: list[tuple[int, ...]], vec: tuple[int, ...]) -> bool:
    """Is ``vec`` an integer combination of ``rows``?  Small exact HNF-style
    elimination."""
    work = [list(r) for r in rows]
    target = list(vec)
    n = len(vec)
    used: list[list[int]] = []
    col = 0
    for col in range(n):
        pivot = None
        for row in work:
            if row[col] != 0:
                if pivot is None or abs(row[col]) < abs(pivot[col]):
                    pivot = row
        if pivot is None:
            continue
        # reduce every other row against the pivot by gcd steps
        changed = True
        while changed:
            changed = False
            for row in work:
                if row is pivot or row[col] == 0:
                    continue
                q = row[col] // pivot[col]
                for j in range(n):
                    row[j] -= q * pivot[j]
                if row[col] != 0:
                    pivot, row = row, pivot
                    changed = True
        work = [r for r in work if r is not pivot and any(r)]
        used.append(pivot)
    for pivot in used:
        col = next(j for j in range(n) if pivot[j] != 0)
        if target[col] % pivot[col] != 0:
            return False
        q = target[col] // pivot[col]
        for j in range(n):
            target[j] -= q * pivot[j]
    return not any(target)


def _abelian_certificate_nontrivial(u: Word) -> bool:
    """True if the abelianization already shows ``u != 1``."""
    pres = u.ambient
    rows = [_exponent_vector(pres, rel) for rel in pres.relators]
    return not _lattice_member(rows, _exponent_vector(pres, u.letters))


def bounded_is_trivial(u: Word, bound: SearchBound = SearchBound()):
    """True / False / ``UNDECIDED``.

    BFS over free reduction plus insertion of rotated relator copies.  True
    when the empty word is reached; a definite False needs an abelianization
    certificate; otherwise the verdict is undecided at this bound.  Never
    answers False for a word that is actually trivial.
    """
    start = free_reduce(u.letters)
    if not start:
        return True
    pres = u.ambient
    variants = _relator_variants(pres)
    if not variants:
        return False  # free group: free reduction is a complete decision
    cap_len = bound.max_word_length + max(len(v) for v in variants)
    seen = {start}
    frontier = [start]
    for _ in range(bound.max_depth):
        nxt = []
        for w in frontier:
            for var in variants:
                for i in range(len(w) + 1):
                    cand = free_reduce(w[:i] + var + w[i:])
                    if not cand:
                        return True
                    if len(cand) <= cap_len and cand not in seen:
                        if len(seen) >= _STATE_CAP:
                            break
                        seen.add(cand)
                        nxt.append(cand)
        if not nxt:
            break
        frontier = nxt
    if _abelian_certificate_nontrivial(u):
        return False
    return UNDECIDED


# ---------------------------------------------------------------------------
# bounded element boxes and centralizers


def _reduced_words(names_count: int, max_len: int):
    """All freely reduced letter tuples up to ``max_len``, shortest first."""
    yield ()
    layer: list[tuple[int, ...]] = [()]
    alphabet = [i for i in range(1, names_count + 1)] + [
        -i for i in range(1, names_count + 1)
    ]
    alphabet.sort(key=lambda x: (abs(x), 0 if x > 0 else 1))
    for _ in range(max_len):
        nxt = []
        for w in layer:
            for a in alphabet:
                if w and w[-1] == -a:
                    continue
                nxt.append(w + (a,))
        yield from nxt
        layer = nxt


def _sort_key(el: STWord):
    if el.residue is not None:
        return (0, el.residue, 0)
    return (len(el.base.letters), str(el.base), el.fiber)


@lru_cache(maxsize=None)
def bounded_elements(surface: SurfaceSpec, bound: SearchBound) -> tuple[STWord, ...]:
    """Every normal-form element with base length and |fiber| inside the box,
    in (length, spelling, fiber) order."""
    reg = regime(surface)
    if reg in (Regime.SPHERE, Regime.RP2):
        order = 2 if reg is Regime.SPHERE else 4
        return tuple(STWord(surface, None, None, r) for r in range(order))
    pres = presentation(surface)
    bases = {}
    for letters in _reduced_words(len(pres.generators), bound.max_word_length):
        el = st_word(surface, letters, 0)
        if el.base.letters == letters:  # keep normal forms only
            bases.setdefault(letters, el.base)
    out = []
    for letters, base in bases.items():
        for m in range(-bound.max_fiber, bound.max_fiber + 1):
            out.append(STWord(surface, base, m, None))
    out.sort(key=_sort_key)
    return tuple(out)


def bounded_centralizer(
    surface: SurfaceSpec, xi: STWord, bound: SearchBound = SearchBound()
) -> tuple[STWord, ...]:
    """All bounded elements commuting with ``xi``, deterministically ordered."""
    out = []
    for el in bounded_elements(surface, bound):
        if st_multiply(el, xi) == st_multiply(xi, el):
            out.append(el)
    return tuple(out)


# ---------------------------------------------------------------------------
# classification verification


@dataclass(frozen=True)
class VerificationOutcome:
    passed: bool
    detail: str
    counterexample: STWord | None = None

    def __bool__(self) -> bool:
        return self.passed


def _witness_products(witnesses, bound: SearchBound):
    """Products w1^e1 ... wd^ed over the witness tuple, exponents capped so
    that everything inside the enumeration box is reachable."""
    emax = bound.max_word_length + bound.max_fiber
    if not witnesses:
        return []
    surface = witnesses[0].surface
    products = [stbundle.st_identity(surface)]
    for w in witnesses[: bound.max_depth]:
        powers = {0: stbundle.st_identity(surface)}
        for e in range(1, emax + 1):
            powers[e] = st_multiply(powers[e - 1], w)
            powers[-e] = stbundle.st_invert(powers[e])
        products = [st_multiply(p, powers[e]) for p in products for e in range(-emax, emax + 1)]
    return products


def verify_classification(
    surface: SurfaceSpec, xi: STWord, bound: SearchBound | None = None
) -> VerificationOutcome:
    """Check an emitted classification against the enumerated centralizer.

    Full-group answers must match the whole box, the index-two subgroup
    answer must match its membership predicate, and the finitely generated
    answers must (i) commute and (ii) cover every enumerated centralizer
    element by a bounded witness product.
    """
    from .classify import Kind, classify_pi1  # local import; classify uses us in tests

    bound = bound or VERIFY_BOUND
    report = classify_pi1(surface, xi)
    kind = report.group.kind
    xi = report.element
    cent = bounded_centralizer(surface, xi, bound)
    box = bounded_elements(surface, bound)

    if kind in (Kind.FULL_ST_GROUP, Kind.Z2, Kind.Z4):
        if len(cent) != len(box):
            missing = next(el for el in box if el not in set(cent))
            return VerificationOutcome(
                False, "an element of the box fails to commute", missing
            )
        return VerificationOutcome(True, f"whole box of {len(box)} elements commutes")

    if kind is Kind.ORIENTATION_PRESERVING_SUBGROUP:
        expected = tuple(el for el in box if stbundle.base_character(el) == +1)
        if set(cent) != set(expected):
            bad = set(cent).symmetric_difference(expected)
            return VerificationOutcome(
                False, "centralizer differs from the orientation-preserving box", sorted(bad, key=_sort_key)[0]
            )
        return VerificationOutcome(
            True, f"centralizer equals the orientation-preserving half ({len(cent)} elements)"
        )

    witnesses = report.group.witnesses
    products = _witness_products(witnesses, bound)
    for p in products:
        if st_multiply(p, xi) != st_multiply(xi, p):
            return VerificationOutcome(False, "a witness product fails to commute", p)
    product_set = set(products)
    for el in cent:
        if el not in product_set:
            return VerificationOutcome(
                False, "a centralizer element is not a witness product", el
            )
    if kind is Kind.KLEIN_BOTTLE_GROUP:
        x, y = witnesses
        rel = st_multiply(st_multiply(st_multiply(x, y), stbundle.st_invert(x)), y)
        if not stbundle.st_is_trivial(rel):
            return VerificationOutcome(False, "witnesses fail the Klein-bottle relation", rel)
    return VerificationOutcome(
        True,
        f"{len(cent)} centralizer elements covered by {len(witnesses)} witnesses",
    )
