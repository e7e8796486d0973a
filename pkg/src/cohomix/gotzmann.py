"""Torus-fixed points of Hilb_k(P^2) and their Gotzmann images.

The torus acting by X_i -> t^(g^lambda_i) X_i has finitely many fixed
points on the Hilbert scheme of k points in the plane, one per triple of
partitions with total size k (monomial ideals supported at the three
coordinate points).  Since k is at least the regularity of every such
ideal, the degree-k graded piece I -> I ∩ R_k is a closed embedding into
Gr(n_k - k, R_k) with n_k = C(k+2, 2), and each image is a coordinate
subspace in the monomial basis.

The additive-group side: the derivation X_0 -> X_1 -> X_2 -> 0 acts
nilpotently on R_k; its Jordan type having a single block is what a
regular group action would force.
"""

from fractions import Fraction

from .algebra import Partition, RationalMatrix, jordan_type, partitions_in_box
from .errors import (
    ConditionViolated,
    InternalInvariantViolation,
    InvalidDegree,
)
from .grassmann import FixedSubspace, WeightSystem

_CHART_NAMES = ("X_0", "X_1", "X_2")


class MonomialBasis:
    """The ordered monomial basis of R_k, the degree-k forms in three
    variables: exponent triples (a, b, c), a + b + c = k, sorted by
    increasing a then increasing b.  For k = 2 that is X_2^2, X_2*X_1,
    X_1^2, X_2*X_0, X_1*X_0, X_0^2."""

    __slots__ = ("k", "monomials")

    def __init__(self, k):
        if k < 1:
            raise InvalidDegree("k must be at least 1, got %d" % k)
        self.k = k
        self.monomials = tuple(
            (a, b, k - a - b) for a in range(k + 1) for b in range(k - a + 1)
        )

    def __len__(self):
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

    def __getitem__(self, i):
        return self.monomials[i]

    def index(self, monomial):
        """1-based position of an exponent triple."""
        return self.monomials.index(tuple(monomial)) + 1

    def label(self, monomial):
        """Human-readable product form, e.g. 'X_1*X_0' for (1, 1, 0)."""
        a, b, c = monomial
        factors = []
        for name, e in (("X_0", a), ("X_1", b), ("X_2", c)):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append("%s^%d" % (name, e))
        return "*".join(factors) if factors else "1"

    def __repr__(self):
        return "MonomialBasis(k=%d, %d monomials)" % (self.k, len(self.monomials))


def monomial_basis(k):
    """The basis of R_k in the standard order; length C(k+2, 2)."""
    return MonomialBasis(k)


class TorusAction:
    """A one-parameter torus acting by X_i -> t^(g^lambda_i) X_i, with the
    exponents arranged so the induced weights on degree-k monomials are
    pairwise distinct and generic enough to isolate the fixed points.

    Constructed through build_torus_action, which validates the two
    genericity inequalities.
    """

    __slots__ = ("k", "g", "exponents")

    def __init__(self, k, g, exponents):
        self.k = k
        self.g = g
        self.exponents = tuple(exponents)

    @property
    def coordinate_weights(self):
        """(g^lambda_0, g^lambda_1, g^lambda_2)."""
        return tuple(self.g ** e for e in self.exponents)

    def monomial_weight(self, monomial):
        a, b, c = monomial
        wa, wb, wc = self.coordinate_weights
        return a * wa + b * wb + c * wc

    def weight_system(self, basis=None):
        """Induced WeightSystem on the monomial basis of R_k."""
        if basis is None:
            basis = monomial_basis(self.k)
        return WeightSystem(tuple(self.monomial_weight(m) for m in basis))

    def __repr__(self):
        return "TorusAction(k=%d, g=%d, exponents=%r)" % (self.k, self.g, self.exponents)


def build_torus_action(k, g=None, lam0=3, lam1=2, lam2=1):
    """Validate and build the torus action for degree k.

    Checks, in order: g^lam1 > c*g^lam2 for 0 <= c <= k; then
    g^lam0 > a*g^lam1 + b*g^lam2 for all a + b = k; then pairwise
    distinctness of the induced monomial weights.  A violated inequality
    raises ConditionViolated naming it with the offending numbers.

    The default g = k+1 with exponents (3, 2, 1) always passes: digits of a
    base-g expansion never exceed k < g.
    """
    if k < 1:
        raise InvalidDegree("k must be at least 1, got %d" % k)
    if g is None:
        g = k + 1
    if g < 2:
        raise ConditionViolated("need g > 1, got g=%d" % g)
    if min(lam0, lam1, lam2) < 1:
        raise ConditionViolated(
            "exponents must be positive, got (%d, %d, %d)" % (lam0, lam1, lam2)
        )
    wa, wb, wc = g ** lam0, g ** lam1, g ** lam2
    for c in range(k + 1):
        if not wb > c * wc:
            raise ConditionViolated(
                "condition (2) fails: g^%d > %d*g^%d is false (%d > %d*%d)"
                % (lam1, c, lam2, wb, c, wc)
            )
    for a in range(k + 1):
        b = k - a
        if not wa > a * wb + b * wc:
            raise ConditionViolated(
                "condition (1) fails: g^%d > %d*g^%d + %d*g^%d is false (%d > %d)"
                % (lam0, a, lam1, b, lam2, wa, a * wb + b * wc)
            )
    action = TorusAction(k, g, (lam0, lam1, lam2))
    weights = [action.monomial_weight(m) for m in monomial_basis(k)]
    if len(set(weights)) != len(weights):
        raise ConditionViolated("induced monomial weights are not pairwise distinct")
    return action


class PartitionTriple:
    """A torus-fixed point of Hilb_k(P^2): one partition per coordinate
    point of the plane, total size k.  The text form joins the three
    partitions with ';', e.g. '1;1;' for ((1), (1), empty)."""

    __slots__ = ("mu0", "mu1", "mu2")

    def __init__(self, mu0, mu1, mu2):
        self.mu0 = mu0 if isinstance(mu0, Partition) else Partition(mu0)
        self.mu1 = mu1 if isinstance(mu1, Partition) else Partition(mu1)
        self.mu2 = mu2 if isinstance(mu2, Partition) else Partition(mu2)

    @property
    def size(self):
        return self.mu0.size + self.mu1.size + self.mu2.size

    @property
    def parts(self):
        return (self.mu0, self.mu1, self.mu2)

    def __eq__(self, other):
        if not isinstance(other, PartitionTriple):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return "PartitionTriple(%r, %r, %r)" % (
            self.mu0.parts,
            self.mu1.parts,
            self.mu2.parts,
        )

    def __str__(self):
        return ";".join(str(mu) for mu in self.parts)

    @classmethod
    def parse(cls, text):
        pieces = text.split(";")
        if len(pieces) != 3:
            raise ValueError(
                "expected three ';'-separated partitions, got %r" % (text,)
            )
        return cls(*(Partition.parse(p) for p in pieces))


def enumerate_hilb_fixed_points(k):
    """All partition triples of total size k: the torus-fixed points of
    Hilb_k(P^2).  Deterministic order: size of mu0 ascending, then size of
    mu1 ascending, then each partition slot in descending lexicographic
    order."""
    if k < 1:
        raise InvalidDegree("k must be at least 1, got %d" % k)
    out = []
    for s0 in range(k + 1):
        for s1 in range(k - s0 + 1):
            s2 = k - s0 - s1
            for mu0 in partitions_in_box(s0, s0, s0):
                for mu1 in partitions_in_box(s1, s1, s1):
                    for mu2 in partitions_in_box(s2, s2, s2):
                        out.append(PartitionTriple(mu0, mu1, mu2))
    return out


def _in_diagram(mu, row, col):
    return row < len(mu) and col < mu[row]


def degree_k_part(triple, k):
    """The Gotzmann image of a fixed point: the coordinate subspace of R_k
    spanned by the degree-k monomials inside the monomial ideal.

    X_0^a X_1^b X_2^c lies in the ideal exactly when (b, c) avoids the
    diagram of mu0, (a, c) avoids mu1, and (a, b) avoids mu2.  Since k
    bounds the regularity the image always has dimension C(k+2,2) - k;
    anything else trips InternalInvariantViolation.
    """
    if triple.size != k:
        raise InvalidDegree(
            "triple has total size %d, expected k=%d" % (triple.size, k)
        )
    basis = monomial_basis(k)
    indices = []
    for pos, (a, b, c) in enumerate(basis):
        if (
            not _in_diagram(triple.mu0, b, c)
            and not _in_diagram(triple.mu1, a, c)
            and not _in_diagram(triple.mu2, a, b)
        ):
            indices.append(pos + 1)
    expected = len(basis) - k
    if len(indices) != expected:
        raise InternalInvariantViolation(
            "Gotzmann image of %s has %d monomials, expected %d"
            % (triple, len(indices), expected)
        )
    return FixedSubspace(tuple(indices), len(basis))


def _arm_leg(mu):
    # (row, col, arm, leg) for every box of the diagram.
    parts = tuple(mu)
    for r, width in enumerate(parts):
        for c in range(width):
            arm = width - c - 1
            leg = sum(1 for r2 in range(r + 1, len(parts)) if parts[r2] > c)
            yield r, c, arm, leg


def tangent_weights(triple, action):
    """The 2k torus weights on the tangent space of Hilb_k(P^2) at the
    fixed point.

    Chartwise: at the coordinate point carrying mu, the two local
    coordinate functions scale with weights (phi_u, phi_w), and each box
    contributes the pair

        -(leg+1)*phi_u + arm*phi_w      and      leg*phi_u - (arm+1)*phi_w.

    All weights are nonzero for a valid action, so fixed points are
    isolated.
    """
    wa, wb, wc = action.coordinate_weights
    charts = (
        (triple.mu0, wb - wa, wc - wa),
        (triple.mu1, wa - wb, wc - wb),
        (triple.mu2, wa - wc, wb - wc),
    )
    weights = []
    for mu, phi_u, phi_w in charts:
        for _r, _c, arm, leg in _arm_leg(mu):
            weights.append(-(leg + 1) * phi_u + arm * phi_w)
            weights.append(leg * phi_u - (arm + 1) * phi_w)
    if any(w == 0 for w in weights):
        raise InternalInvariantViolation(
            "zero tangent weight at %s; torus action is not generic" % (triple,)
        )
    return tuple(weights)


def hilb_minus_cell_dimension(triple, action):
    """Dimension of the cell flowing into the fixed point under t -> 0:
    the number of negative tangent weights, between 0 and 2k."""
    return sum(1 for w in tangent_weights(triple, action) if w < 0)


def nilpotent_matrix_on_Rk(k, basis_order=None):
    """Matrix of the derivation X_0 -> X_1 -> X_2 -> 0 on R_k, in the given
    basis order (default: monomial_basis(k)).

    Column j holds the image of the j-th basis monomial: by the Leibniz
    rule X_0^a X_1^b X_2^c maps to b*X_0^a X_1^(b-1) X_2^(c+1) +
    a*X_0^(a-1) X_1^(b+1) X_2^c.  The result is nilpotent since each image
    term has strictly smaller (a, b).
    """
    if basis_order is None:
        basis_order = monomial_basis(k)
    order = [tuple(m) for m in basis_order]
    expected = sorted(monomial_basis(k))
    if sorted(order) != expected:
        raise InvalidDegree("basis order is not a permutation of the degree-%d monomials" % k)
    position = {m: i for i, m in enumerate(order)}
    n = len(order)
    entries = [[Fraction(0)] * n for _ in range(n)]
    for j, (a, b, c) in enumerate(order):
        if b > 0:
            entries[position[(a, b - 1, c + 1)]][j] += b
        if a > 0:
            entries[position[(a - 1, b + 1, c)]][j] += a
    return RationalMatrix(entries)


def jordan_regularity_check(k):
    """Jordan type of the nilpotent action on R_k, and whether it consists
    of a single block.  A regular additive-group action would force a
    single block; more than one block obstructs regularity."""
    jt = jordan_type(nilpotent_matrix_on_Rk(k))
    return jt, len(jt) == 1
