"""Subquotients Z/B of row spaces and the maps they inherit."""
from src.core.errors import InvariantViolation
from src.linalg.elimination import kernel_basis, left_kernel_basis, rank, row_space_basis, solve_left
from src.linalg.field import FieldSpec
from src.linalg.matrix import Matrix


class Subquotient:
    """Z/B for row-space bases Z ⊇ B of k^d.

    `representatives` holds one row of k^d per basis class of Z/B, and
    `coordinates(v)` maps rows of Z to coordinates in that basis.
    """

    def __init__(self, z: Matrix, b: Matrix):
        self.field: FieldSpec = z.field
        self.ambient = z.cols
        self.z = row_space_basis(z) if z.rows else z
        b_in_z = solve_left(self.z, b) if b.rows else Matrix.zeros(0, self.z.rows, self.field)
        if b_in_z is None:
            raise InvariantViolation("boundary rows do not lie in the cycle space")
        if b_in_z.rows:
            self._projection = kernel_basis(b_in_z)
        else:
            self._projection = Matrix.identity(self.z.rows, self.field)
        self.dim = self._projection.cols
        section = solve_left(self._projection, Matrix.identity(self.dim, self.field))
        if section is None:
            raise InvariantViolation("quotient map has no section")
        self.representatives = section @ self.z

    def coordinates(self, v: Matrix) -> Matrix:
        """Classes of the rows of v (which must lie in Z)."""
        if v.rows == 0:
            return Matrix.zeros(0, self.dim, self.field)
        c = solve_left(self.z, v)
        if c is None:
            raise InvariantViolation("row does not lie in the cycle space")
        return c @ self._projection

    def induced(self, t: Matrix) -> Matrix:
        """Matrix of the map Z/B → Z/B induced by t (rows, preserving Z and B)."""
        return self.coordinates(self.representatives @ t)

    def induced_to(self, other: "Subquotient", t: Matrix) -> Matrix:
        """Matrix of the map self → other induced by t: k^d → k^d'."""
        return other.coordinates(self.representatives @ t)

    def trace(self, t: Matrix):
        return self.induced(t).trace()


def cohomology_dimension(incoming: Matrix, outgoing: Matrix) -> int:
    """dim ker(outgoing)/im(incoming) for row-acting maps k^a → k^d → k^e."""
    d = outgoing.rows
    return d - rank(outgoing) - rank(incoming)


def cycles(outgoing: Matrix) -> Matrix:
    """Rows spanning {v : v·outgoing = 0}."""
    return left_kernel_basis(outgoing)
