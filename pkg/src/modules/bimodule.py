"""B-A-bimodules, stored as right modules over B^op ⊗ A.

The storage vertex of f_j ⊗ e_i is j*n + i (n = number of vertices of A), so
the dimension vector of the storage module is the column vectorization of the
n × m dimension matrix with entries dim f_j M e_i.
"""
from dataclasses import dataclass

from src.algebra.algebra import Algebra, TensorFactors
from src.algebra.constructions import enveloping_algebra, opposite_algebra, tensor_algebra
from src.core.errors import AlgebraMismatchError, DimensionMismatchError
from src.linalg.matrix import IntMatrix, Matrix
from src.modules.representation import ModuleMorphism, Representation


@dataclass(frozen=True, eq=False)
class BimoduleHandle:
    left: Algebra
    right: Algebra
    module: Representation

    def __post_init__(self):
        expected = tensor_algebra(opposite_algebra(self.left), self.right)
        if self.module.algebra != expected:
            raise AlgebraMismatchError("bimodule storage must be a module over B^op ⊗ A")

    @property
    def storage(self) -> Algebra:
        return self.module.algebra

    @property
    def factors(self) -> TensorFactors:
        return tensor_algebra(opposite_algebra(self.left), self.right).factors

    @property
    def total_dim(self) -> int:
        return self.module.total_dim

    def vertex(self, j: int, i: int) -> int:
        return j * self.right.n + i

    def dim(self, j: int, i: int) -> int:
        """dim f_j M e_i."""
        return self.module.dims[self.vertex(j, i)]

    def left_module_form(self) -> Representation:
        """M as a left A^e-module, i.e. a representation of (A^e)^op.

        The left vertex (j, i) carries e_i M e_j, arrows of left-multiplication
        type act through the right multiplications of M and vice versa. Only
        defined for A-A-bimodules.
        """
        if self.left != self.right:
            raise AlgebraMismatchError("the left-module form is defined for A-A-bimodules")
        n = self.right.n
        storage = self.storage
        origins = self.factors.arrow_origin
        lookup = {(o.side, o.arrow, o.vertex): k for k, o in enumerate(origins)}
        dims = tuple(self.module.dims[i * n + j] for j in range(n) for i in range(n))
        actions = []
        for o in origins:
            swapped = "right" if o.side == "left" else "left"
            actions.append(self.module.actions[lookup[(swapped, o.arrow, o.vertex)]])
        return Representation(opposite_algebra(storage), dims, tuple(actions))

    def left_endomorphism(self, phi: ModuleMorphism, form: Representation) -> ModuleMorphism:
        """φ carried over to left_module_form()."""
        n = self.right.n
        maps = tuple(phi.maps[i * n + j] for j in range(n) for i in range(n))
        return ModuleMorphism(form, form, maps)


def dim_matrix(m: BimoduleHandle) -> IntMatrix:
    """n × m matrix with entry (i, j) = dim f_j M e_i."""
    return IntMatrix.from_rows(
        [[m.dim(j, i) for j in range(m.left.n)] for i in range(m.right.n)], cols=m.left.n
    )


def trace_matrix(m: BimoduleHandle, phi: ModuleMorphism) -> Matrix:
    """Entry (i, j) is the trace of φ on f_j M e_i."""
    if not phi.is_endomorphism() or phi.source.algebra != m.storage:
        raise DimensionMismatchError("trace matrix needs an endomorphism of the bimodule")
    return Matrix.from_rows(
        [[phi.maps[m.vertex(j, i)].trace() for j in range(m.left.n)] for i in range(m.right.n)],
        m.module.field,
        cols=m.left.n,
    )


def regular_bimodule(a: Algebra) -> BimoduleHandle:
    """A as an A-A-bimodule; vertex (j, i) carries e_j A e_i."""
    env = enveloping_algebra(a)
    n = a.n
    coords = [a.peirce_component(j, i) for j in range(n) for i in range(n)]
    position = [{b: p for p, b in enumerate(c)} for c in coords]
    dims = tuple(len(c) for c in coords)
    actions = []
    for arrow, origin in zip(env.quiver.arrows, env.factors.arrow_origin):
        x = Matrix.zeros(dims[arrow.source], dims[arrow.target], a.field).to_array()
        a_arrow = a.index[a.quiver.path([a.quiver.arrows[origin.arrow].name])]
        for row, b in enumerate(coords[arrow.source]):
            if origin.side == "left":
                product = a.basis_product(a_arrow, b)
            else:
                product = a.basis_product(b, a_arrow)
            for b2, c in product.items():
                x[row, position[arrow.target][b2]] += c
        actions.append(Matrix(x, a.field))
    return BimoduleHandle(a, a, Representation(env, dims, tuple(actions)))


def outer_tensor(n_left: Representation, m: Representation) -> BimoduleHandle:
    """N ⊗_k M for a left B-module N (over B^op) and a right A-module M."""
    if n_left.field != m.field:
        raise AlgebraMismatchError("outer tensor of modules over different fields")
    b = opposite_algebra(n_left.algebra)
    a = m.algebra
    storage = tensor_algebra(opposite_algebra(b), a)
    fld = m.field
    dims = tuple(n_left.dims[j] * m.dims[i] for j in range(b.n) for i in range(a.n))
    actions = []
    for origin in storage.factors.arrow_origin:
        if origin.side == "left":
            actions.append(n_left.actions[origin.arrow].kron(Matrix.identity(m.dims[origin.vertex], fld)))
        else:
            actions.append(Matrix.identity(n_left.dims[origin.vertex], fld).kron(m.actions[origin.arrow]))
    return BimoduleHandle(b, a, Representation(storage, dims, tuple(actions)))


def outer_tensor_endomorphism(t: BimoduleHandle, psi: ModuleMorphism, phi: ModuleMorphism) -> ModuleMorphism:
    """ψ ⊗ φ on outer_tensor(N, M)."""
    maps = tuple(psi.maps[j].kron(phi.maps[i]) for j in range(t.left.n) for i in range(t.right.n))
    return ModuleMorphism(t.module, t.module, maps)


def dual_bimodule(m: BimoduleHandle) -> BimoduleHandle:
    """M* as an A-B-bimodule; dm(M*) = dm(M)ᵀ."""
    b, a = m.left, m.right
    storage = tensor_algebra(opposite_algebra(a), b)
    source = m.factors.arrow_origin
    lookup = {(o.side, o.arrow, o.vertex): k for k, o in enumerate(source)}
    dims = tuple(m.dim(j, i) for i in range(a.n) for j in range(b.n))
    actions = []
    for origin in storage.factors.arrow_origin:
        swapped = "right" if origin.side == "left" else "left"
        actions.append(m.module.actions[lookup[(swapped, origin.arrow, origin.vertex)]].T)
    return BimoduleHandle(a, b, Representation(storage, dims, tuple(actions)))


def dual_bimodule_endomorphism(m: BimoduleHandle, dual: BimoduleHandle, phi: ModuleMorphism) -> ModuleMorphism:
    maps = tuple(phi.maps[m.vertex(j, i)].T for i in range(m.right.n) for j in range(m.left.n))
    return ModuleMorphism(dual.module, dual.module, maps)


def right_slice(m: BimoduleHandle, j: int) -> Representation:
    """f_j M as a right A-module."""
    a = m.right
    lookup = {(o.arrow, o.vertex): k for k, o in enumerate(m.factors.arrow_origin) if o.side == "right"}
    dims = tuple(m.dim(j, i) for i in range(a.n))
    actions = tuple(m.module.actions[lookup[(k, j)]] for k in range(len(a.quiver.arrows)))
    return Representation(a, dims, actions)


def right_slice_endomorphism(m: BimoduleHandle, j: int, phi: ModuleMorphism, piece: Representation) -> ModuleMorphism:
    return ModuleMorphism(piece, piece, tuple(phi.maps[m.vertex(j, i)] for i in range(m.right.n)))


def left_slice(m: BimoduleHandle, i: int) -> Representation:
    """M e_i as a left B-module (a representation of B^op)."""
    b_op = opposite_algebra(m.left)
    lookup = {(o.arrow, o.vertex): k for k, o in enumerate(m.factors.arrow_origin) if o.side == "left"}
    dims = tuple(m.dim(j, i) for j in range(m.left.n))
    actions = tuple(m.module.actions[lookup[(k, i)]] for k in range(len(b_op.quiver.arrows)))
    return Representation(b_op, dims, actions)


def left_slice_endomorphism(m: BimoduleHandle, i: int, phi: ModuleMorphism, piece: Representation) -> ModuleMorphism:
    return ModuleMorphism(piece, piece, tuple(phi.maps[m.vertex(j, i)] for j in range(m.left.n)))
