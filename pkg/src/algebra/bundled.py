"""The bundled example algebras and the two negative controls."""
from src.algebra.algebra import Algebra, build_algebra
from src.algebra.quiver import Arrow, Presentation, Quiver
from src.linalg.field import FieldSpec

Q = FieldSpec.rationals()


def field_presentation(field: FieldSpec = Q) -> Presentation:
    """K: one vertex, no arrows."""
    return Presentation(Quiver(1), (), field)


def a2_presentation(field: FieldSpec = Q) -> Presentation:
    """A₂: 1 --a--> 2."""
    return Presentation(Quiver(2, (Arrow("a", 0, 1),)), (), field)


def a3_relation_presentation(field: FieldSpec = Q) -> Presentation:
    """A₃R: 1 --a--> 2 --b--> 3 with ab = 0."""
    quiver = Quiver(3, (Arrow("a", 0, 1), Arrow("b", 1, 2)))
    p = Presentation(quiver, (), field)
    return Presentation(quiver, (p.relation((1, ["a", "b"])),), field)


def kronecker_presentation(field: FieldSpec = Q) -> Presentation:
    """KR: two arrows x, y from 1 to 2."""
    return Presentation(Quiver(2, (Arrow("x", 0, 1), Arrow("y", 0, 1))), (), field)


def loop_presentation(field: FieldSpec = Q) -> Presentation:
    """One loop x with x² = 0; admissible but of infinite global dimension."""
    quiver = Quiver(1, (Arrow("x", 0, 0),))
    p = Presentation(quiver, (), field)
    return Presentation(quiver, (p.relation((1, ["x", "x"])),), field)


def oriented_cycle_presentation(field: FieldSpec = Q) -> Presentation:
    """1 --a--> 2 --b--> 1 with no relations; not admissible."""
    return Presentation(Quiver(2, (Arrow("a", 0, 1), Arrow("b", 1, 0))), (), field)


BUNDLED = {
    "K": field_presentation,
    "A2": a2_presentation,
    "A3R": a3_relation_presentation,
    "KR": kronecker_presentation,
}


def bundled_algebra(name: str, field: FieldSpec = Q) -> Algebra:
    return build_algebra(BUNDLED[name](field))
