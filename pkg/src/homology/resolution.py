"""Projective covers, minimal projective resolutions and lifts of module maps."""
import threading
from collections import OrderedDict
from dataclasses import dataclass
from typing import Optional

import numpy as np
import pandas as pd

from src.algebra.algebra import Algebra
from src.core.config import settings
from src.core.errors import CapExceeded, InvariantViolation
from src.core.logging import logger
from src.linalg.elimination import rref, solve_left
from src.linalg.matrix import Matrix
from src.modules.operations import kernel
from src.modules.projective import GeneratorMap, ProjectiveSum, projective_sum, simple_module
from src.modules.representation import ModuleMorphism, Representation


def projective_cover(m: Representation) -> tuple[ProjectiveSum, GeneratorMap]:
    """P ↠ M with P/P·rad ≅ M/M·rad; the generators are lifts of a basis of the top."""
    a = m.algebra
    tops, images = [], []
    for j in range(a.n):
        if m.dims[j] == 0:
            continue
        incoming = [
            m.actions[k]
            for k, arrow in enumerate(a.quiver.arrows)
            if arrow.target == j and m.dims[arrow.source] > 0
        ]
        pivots: tuple[int, ...] = ()
        if incoming:
            _, pivots, _ = rref(incoming[0].vstack(*incoming[1:]))
        for c in range(m.dims[j]):
            if c not in pivots:
                tops.append(j)
                images.append(Matrix.unit_row(m.dims[j], c, m.field))
    p = projective_sum(a, tops)
    return p, p.map_to(m, images)


@dataclass(frozen=True, eq=False)
class ProjectiveComplex:
    """Cochain complex of projective sums with generator-image differentials."""

    terms: dict[int, ProjectiveSum]
    deltas: dict[int, GeneratorMap]

    @property
    def lo(self) -> int:
        return min(self.terms)

    @property
    def hi(self) -> int:
        return max(self.terms)

    def term(self, p: int, algebra: Algebra) -> ProjectiveSum:
        t = self.terms.get(p)
        return projective_sum(algebra, ()) if t is None else t


@dataclass(frozen=True, eq=False)
class Resolution:
    """… → P_1 → P_0 → M → 0 with d_l: P_l → P_{l-1} stored as generator maps."""

    module: Representation
    terms: tuple[ProjectiveSum, ...]
    differentials: tuple[GeneratorMap, ...]
    augmentation: GeneratorMap
    minimal: bool = True

    @property
    def length(self) -> int:
        return len(self.terms) - 1

    def multiplicity(self, l: int, i: int) -> int:
        if l > self.length:
            return 0
        return self.terms[l].tops.count(i)

    def multiplicities(self) -> list[tuple[int, ...]]:
        return [t.multiplicities() for t in self.terms]

    def as_complex(self) -> ProjectiveComplex:
        """P_l placed in cohomological degree -l."""
        return ProjectiveComplex(
            {-l: t for l, t in enumerate(self.terms)},
            {-l: d for l, d in enumerate(self.differentials, start=1)},
        )

    def is_exact(self) -> bool:
        """Rank check of exactness at M and at every P_l, plus d∘d = 0."""
        ranks = [self.augmentation.morphism.rank()] + [d.morphism.rank() for d in self.differentials] + [0]
        if ranks[0] != self.module.total_dim:
            return False
        for l, t in enumerate(self.terms):
            if t.total_dim != ranks[l] + ranks[l + 1]:
                return False
        maps = [self.augmentation] + list(self.differentials)
        for upper, lower in zip(maps[1:], maps):
            if not upper.then(lower).morphism.is_zero():
                return False
        return True

    def is_radical(self) -> bool:
        return all(d.is_radical() for d in self.differentials)


def minimal_projective_resolution(m: Representation, cap: Optional[int] = None) -> Resolution:
    """Iterated projective covers of syzygies; CapExceeded past length `cap`."""
    cap = settings.max_resolution_length if cap is None else cap
    p0, augmentation = projective_cover(m)
    terms, differentials = [p0], []
    syzygy, inclusion = kernel(augmentation.morphism)
    while not syzygy.is_zero():
        if len(terms) > cap:
            raise CapExceeded(cap)
        p, cover = projective_cover(syzygy)
        differentials.append(cover.then(inclusion))
        terms.append(p)
        syzygy, inclusion = kernel(cover.morphism)
    logger.debug(f"resolution of dims {m.dims}: length {len(terms) - 1}")
    return Resolution(m, tuple(terms), tuple(differentials), augmentation)


def lift_module_map(phi: ModuleMorphism, source: Resolution, target: Resolution) -> list[GeneratorMap]:
    """Chain map φ̃_l: P_l → Q_l over φ: M → M', one linear solve per generator."""
    a = phi.algebra
    lifts: list[GeneratorMap] = []
    for l, p in enumerate(source.terms):
        q = target.terms[l] if l <= target.length else projective_sum(a, ())
        if l == 0:
            down = target.augmentation.morphism
            wanted = [
                source.augmentation.images[g] @ phi.maps[i] for g, i in enumerate(p.tops)
            ]
        else:
            down = target.differentials[l - 1].morphism if l <= target.length else None
            prev = lifts[l - 1].morphism
            wanted = [
                source.differentials[l - 1].images[g] @ prev.maps[i] for g, i in enumerate(p.tops)
            ]
        images = []
        for g, i in enumerate(p.tops):
            if down is None:
                if not wanted[g].is_zero():
                    raise InvariantViolation(f"cannot lift into a zero term at degree {l}")
                images.append(Matrix.zeros(1, 0, a.field))
                continue
            z = solve_left(down.maps[i], wanted[g])
            if z is None:
                raise InvariantViolation(f"lifting failed at degree {l}, generator {g}")
            images.append(z)
        lifts.append(p.map_to(q, images))
    return lifts


def perturbed_lift(res: Resolution, lifts: list[GeneratorMap], seed: int) -> list[GeneratorMap]:
    """Another lift of the same map: φ̃_l + d_{l+1}s_l + s_{l-1}d_l for random s_l: P_l → P_{l+1}."""
    rng = np.random.default_rng(seed)
    a = res.module.algebra
    homotopies = []
    for l, p in enumerate(res.terms):
        if l + 1 > res.length:
            homotopies.append(None)
            continue
        up = res.terms[l + 1]
        rows = [
            Matrix.row_vector([int(v) for v in rng.integers(-2, 3, size=up.dims[i])], a.field)
            if up.dims[i] else Matrix.zeros(1, 0, a.field)
            for i in p.tops
        ]
        homotopies.append(p.map_to(up, rows))
    out = []
    for l, (p, f) in enumerate(zip(res.terms, lifts)):
        images = list(f.images)
        if homotopies[l] is not None:
            via_up = homotopies[l].then(res.differentials[l])
            images = [x + y for x, y in zip(images, via_up.images)]
        if l >= 1 and homotopies[l - 1] is not None:
            via_down = res.differentials[l - 1].then(homotopies[l - 1])
            images = [x + y for x, y in zip(images, via_down.images)]
        out.append(p.map_to(f.target, images))
    return out


_memo: OrderedDict[tuple, Resolution] = OrderedDict()
_memo_lock = threading.Lock()


def _memoized(key: tuple, build) -> Resolution:
    with _memo_lock:
        cached = _memo.get(key)
        if cached is not None:
            _memo.move_to_end(key)
            return cached
    res = build()
    with _memo_lock:
        res = _memo.setdefault(key, res)
        _memo.move_to_end(key)
        while len(_memo) > settings.construction_cache_size:
            _memo.popitem(last=False)
        return res


def resolution_of_simple(a: Algebra, i: int, cap: Optional[int] = None) -> Resolution:
    cap = settings.max_resolution_length if cap is None else cap
    return _memoized((a, "simple", i, cap), lambda: minimal_projective_resolution(simple_module(a, i), cap))


def resolution_of_regular_bimodule(a: Algebra, cap: Optional[int] = None) -> Resolution:
    from src.modules.bimodule import regular_bimodule

    cap = settings.max_resolution_length if cap is None else cap
    return _memoized(
        (a, "regular", cap), lambda: minimal_projective_resolution(regular_bimodule(a).module, cap)
    )


def clear_resolution_memo() -> None:
    with _memo_lock:
        _memo.clear()


def global_dimension(a: Algebra, cap: Optional[int] = None) -> int:
    """max over i of pd S_i."""
    return max(resolution_of_simple(a, i, cap).length for i in range(a.n))


def multiplicity_table(res: Resolution) -> pd.DataFrame:
    """Rows P_0, P_1, …; column i+1 counts the summands e_{i+1}A."""
    n = res.module.algebra.n
    return pd.DataFrame(
        [list(t.multiplicities()) for t in res.terms],
        index=[f"P_{l}" for l in range(len(res.terms))],
        columns=[str(i + 1) for i in range(n)],
    )


def describe_resolution(res: Resolution) -> str:
    lines = []
    for l, t in enumerate(res.terms):
        parts = [
            f"e{i + 1}A" + (f"^{c}" if c > 1 else "")
            for i, c in enumerate(t.multiplicities())
            if c
        ]
        lines.append(f"P_{l} = " + (" ⊕ ".join(parts) if parts else "0"))
    lines.append(f"length {res.length}, minimal={res.minimal and res.is_radical()}, exact={res.is_exact()}")
    return "\n".join(lines)
