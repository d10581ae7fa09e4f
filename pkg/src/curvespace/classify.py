"""The classification decision tree.

``classify_pi1`` answers "what is the fundamental group of the space of
immersed closed curves, based at this curve?" by computing the centralizer
of the curve's tangent lift inside the tangent-bundle group.  Every answer
carries explicit generator witnesses (or, for the whole-group and index-two
answers, a presentation / membership predicate), so the brute-force oracle
can check it.  ``classify_pin`` answers the same question for the higher
homotopy groups, which only the sphere and the projective plane make
nontrivial.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .surfaces import (
    Generator,
    Presentation,
    Regime,
    SurfaceSpec,
    regime,
    st_presentation,
)
from .words import klein_coordinates, spell_klein
from .stbundle import (
    STWord,
    base_character,
    decompose,
    fiber_generator,
    generator_lift,
    st_is_conjugate,
    st_is_trivial,
    st_power,
    st_text,
    st_word,
)


class Kind(Enum):
    Z2 = "Z2"
    Z4 = "Z4"
    Z = "Z"
    ZXZ = "ZxZ"
    ZXZXZ = "ZxZxZ"
    KLEIN_BOTTLE_GROUP = "KleinBottleGroup"
    FULL_ST_GROUP = "FullSTGroup"
    ORIENTATION_PRESERVING_SUBGROUP = "OrientationPreservingSubgroup"
    SYMBOLIC_SPHERE_SUM = "SymbolicSphereSum"
    TRIVIAL_GROUP = "TrivialGroup"


_RANK = {Kind.Z: 1, Kind.ZXZ: 2, Kind.KLEIN_BOTTLE_GROUP: 2, Kind.ZXZXZ: 3}

KLEIN_BOTTLE_PRESENTATION = Presentation(
    (Generator("x", -1), Generator("y", +1)), ((1, 2, -1, 2),)
)

ORIENTATION_PRESERVING_PREDICATE = (
    "elements whose base projection preserves orientation (character +1)"
)


@dataclass(frozen=True)
class GroupDescription:
    """A named group with generator witnesses living in the tangent-bundle
    group of the classified surface."""

    kind: Kind
    witnesses: tuple[STWord, ...] = ()
    presentation: Presentation | None = None
    membership: str | None = None
    sphere_sum_degree: int | None = None

    def __post_init__(self):
        # rank check applies when witnesses are supplied at all (the higher
        # homotopy answers reuse the kinds without pi_1 witnesses)
        want = _RANK.get(self.kind)
        if want is not None and self.witnesses and len(self.witnesses) != want:
            raise ValueError(f"{self.kind.value} needs {want} witnesses")

    def label(self) -> str:
        if self.kind is Kind.SYMBOLIC_SPHERE_SUM:
            return f"SymbolicSphereSum({self.sphere_sum_degree})"
        return self.kind.value

    def describe(self) -> str:
        k = self.kind
        if k is Kind.Z2:
            return "Z/2"
        if k is Kind.Z4:
            return "Z/4"
        if k is Kind.Z:
            return "Z"
        if k is Kind.ZXZ:
            return "Z x Z"
        if k is Kind.ZXZXZ:
            return "Z x Z x Z"
        if k is Kind.KLEIN_BOTTLE_GROUP:
            return "Klein bottle group <x, y | x y x^-1 y>"
        if k is Kind.FULL_ST_GROUP:
            return "the whole tangent-bundle fundamental group"
        if k is Kind.ORIENTATION_PRESERVING_SUBGROUP:
            return "index-two subgroup of the tangent-bundle group: " + self.membership
        if k is Kind.TRIVIAL_GROUP:
            return "0"
        n = self.sphere_sum_degree
        first = "Z" if n == 3 else f"pi_{n}(S^2)"
        return f"{first} (+) pi_{n + 1}(S^2)"


@dataclass(frozen=True)
class ClassificationReport:
    surface: SurfaceSpec
    source: str
    element: STWord
    case: str
    group: GroupDescription
    decomposition: tuple[int, int] | None = None

    def text(self) -> str:
        lines = [
            f"surface:        {self.surface}",
            f"input:          {self.source}",
            f"tangent lift:   {st_text(self.element)}",
        ]
        if self.decomposition is not None:
            k, l = self.decomposition
            lines.append(f"decomposition:  root^{k} * f^{l}")
        lines.append(f"case:           {self.case}")
        lines.append(f"pi_1 of curve space: {self.group.describe()}")
        for i, w in enumerate(self.group.witnesses, start=1):
            lines.append(f"  generator {i}:  {st_text(w)}")
        if self.group.membership:
            lines.append(f"  membership:   {self.group.membership}")
        return "\n".join(lines)

    def structured(self) -> str:
        lines = [f"case={self.case}", f"kind={self.group.label()}"]
        for i, w in enumerate(self.group.witnesses, start=1):
            lines.append(f"witness.{i}={st_text(w)}")
        return "\n".join(lines)


def _full_group(surface: SurfaceSpec) -> GroupDescription:
    pres = st_presentation(surface)
    reg = regime(surface)
    witnesses = []
    if reg not in (Regime.SPHERE, Regime.RP2):
        base = pres.generators[:-1]
        witnesses = [generator_lift(surface, g.name) for g in base]
    witnesses.append(fiber_generator(surface))
    return GroupDescription(Kind.FULL_ST_GROUP, tuple(witnesses), presentation=pres)


def classify_pi1(surface: SurfaceSpec, xi: STWord) -> ClassificationReport:
    """Centralizer of the tangent lift, as a named group with witnesses."""
    if xi.surface != surface:
        raise ValueError("element does not live over the given surface")
    reg = regime(surface)
    source = st_text(xi)

    def report(case, group, dec=None):
        return ClassificationReport(surface, source, xi, case, group, dec)

    if reg is Regime.SPHERE:
        group = GroupDescription(
            Kind.Z2, (fiber_generator(surface),), presentation=st_presentation(surface)
        )
        return report("Thm 1", group)

    if reg is Regime.RP2:
        group = GroupDescription(
            Kind.Z4,
            (st_word(surface, (1,), 0),),  # the crosscap lift generates
            presentation=st_presentation(surface),
        )
        return report("Thm 4", group)

    if reg is Regime.TORUS:
        if st_is_trivial(xi):
            return report("Thm 2", _full_group(surface))
        group = GroupDescription(
            Kind.ZXZXZ,
            (
                generator_lift(surface, "a1"),
                generator_lift(surface, "b1"),
                fiber_generator(surface),
            ),
        )
        return report("Thm 2", group)

    if reg is Regime.KLEIN:
        k, l = klein_coordinates(xi.base.letters)
        m = xi.fiber
        if l % 2 != 0:
            # xi = g^k h^(2l'+1) f^m; the centralizer is generated by
            # alpha = g^k h f^m, and xi = alpha^(2l'+1)
            alpha = st_word(surface, spell_klein(k, 1), m)
            return report("Thm 5 II", GroupDescription(Kind.Z, (alpha,)))
        if k == 0 and m == 0:
            return report("Thm 5 I a", _full_group(surface))
        group = GroupDescription(
            Kind.ZXZXZ,
            (
                st_word(surface, spell_klein(1, 0), 0),
                st_word(surface, spell_klein(0, 2), 0),
                fiber_generator(surface),
            ),
        )
        return report("Thm 5 I b", group)

    base_trivial = not xi.base.letters

    if surface.orientable:
        if base_trivial:
            return report("Thm 3 II", _full_group(surface))
        dec = decompose(xi)
        group = GroupDescription(
            Kind.ZXZ, (dec.root_lift, fiber_generator(surface))
        )
        return report("Thm 3 I", group, (dec.k, dec.l))

    if base_trivial:
        if xi.fiber != 0:
            group = GroupDescription(
                Kind.ORIENTATION_PRESERVING_SUBGROUP,
                (),
                presentation=st_presentation(surface),
                membership=ORIENTATION_PRESERVING_PREDICATE,
            )
            return report("Thm 6 III a", group)
        return report("Thm 6 III b", _full_group(surface))

    dec = decompose(xi)
    root = dec.root_lift
    if base_character(xi) == -1:
        witness = st_word(surface, root.base.letters, dec.l)
        return report("Thm 6 I", GroupDescription(Kind.Z, (witness,)), (dec.k, dec.l))
    if base_character(root) == +1:
        group = GroupDescription(Kind.ZXZ, (root, fiber_generator(surface)))
        return report("Thm 6 II a", group, (dec.k, dec.l))
    if dec.l != 0:
        group = GroupDescription(
            Kind.ZXZ, (st_power(root, 2), fiber_generator(surface))
        )
        return report("Thm 6 II a", group, (dec.k, dec.l))
    group = GroupDescription(
        Kind.KLEIN_BOTTLE_GROUP,
        (root, fiber_generator(surface)),
        presentation=KLEIN_BOTTLE_PRESENTATION,
    )
    return report("Thm 6 II b", group, (dec.k, dec.l))


def classify_pin(surface: SurfaceSpec, n: int) -> GroupDescription:
    """Higher homotopy of the space of curves; nontrivial only over the
    sphere and the projective plane."""
    if n < 2:
        raise ValueError("classify_pin needs n >= 2")
    if regime(surface) in (Regime.SPHERE, Regime.RP2):
        if n == 2:
            return GroupDescription(Kind.Z)
        return GroupDescription(Kind.SYMBOLIC_SPHERE_SUM, sphere_sum_degree=n)
    return GroupDescription(Kind.TRIVIAL_GROUP)


def regular_homotopy_equivalent(surface: SurfaceSpec, u: STWord, v: STWord):
    """Are two tangent lifts freely homotopic in the tangent bundle?
    True / False / ``UNDECIDED``."""
    if u.surface != surface or v.surface != surface:
        raise ValueError("elements do not live over the given surface")
    return st_is_conjugate(u, v)
