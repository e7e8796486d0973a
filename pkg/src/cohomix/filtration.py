"""Betti numbers from fixed-point data.

Two realizations of the same fixed-point filtration, chosen by the kind of
point handed in:

* Grassmannian fixed subspaces: the function-theoretic route.  Schur
  polynomials evaluated at the tangent weights of the fixed points filter
  the function space on the fixed locus by partition size, and the rank
  jumps of the evaluation matrix are the Betti numbers (Carrell's basis
  theorem).

* Hilbert-scheme partition triples: the cell route.  Each fixed point
  carries an attracting cell whose dimension is the number of negative
  tangent weights, and the cell dimensions count Betti numbers directly.

On the Hilbert scheme the pure Schur rows of size p need not span the
degree-p graded piece (already for k = 2 there is a single partition of
size 1 but b_1 = 2), so the evaluation route computes a genuinely
different, smaller filtration there; select_schur_basis reports exactly
how far the pure rows get instead of silently substituting products.
"""

from .algebra import IntegerPolynomial, Partition, RowSpace, partitions_in_box, schur_evaluate
from .errors import BoxViolation, InvalidDegree
from .gotzmann import (
    PartitionTriple,
    build_torus_action,
    degree_k_part,
    enumerate_hilb_fixed_points,
    hilb_minus_cell_dimension,
)
from .grassmann import FixedSubspace

NOT_REGULAR = "NOT_REGULAR"
INCONCLUSIVE = "INCONCLUSIVE"


def _box_of(points, box):
    dims = {pt.dim for pt in points}
    ns = {pt.n for pt in points}
    if len(dims) != 1 or len(ns) != 1:
        raise BoxViolation("points live in different Grassmannians")
    n = ns.pop()
    d = dims.pop()
    inferred = (d, n - d)
    if box is None:
        return inferred
    box = (int(box[0]), int(box[1]))
    if box[0] > inferred[0] or box[1] > inferred[1]:
        raise BoxViolation("box %r exceeds the ambient box %r" % (box, inferred))
    return box


def _check_fits(mu, box):
    max_parts, max_part = box
    if len(mu) > max_parts or (len(mu) > 0 and mu[0] > max_part):
        raise BoxViolation(
            "partition %s does not fit in the %d x %d box" % (mu, max_parts, max_part)
        )


class EvaluationMatrix:
    """Schur values at fixed points: entry(mu, I) = s_mu(weights at I)."""

    __slots__ = ("row_labels", "col_labels", "entries")

    def __init__(self, row_labels, col_labels, entries):
        self.row_labels = tuple(row_labels)
        self.col_labels = tuple(col_labels)
        self.entries = tuple(tuple(row) for row in entries)

    def row(self, mu):
        mu = mu if isinstance(mu, Partition) else Partition(mu)
        return self.entries[self.row_labels.index(mu)]

    def entry(self, mu, point):
        return self.row(mu)[self.col_labels.index(point)]

    def __repr__(self):
        return "EvaluationMatrix(%d x %d)" % (len(self.row_labels), len(self.col_labels))


def evaluation_matrix(partitions, points, ws):
    """Evaluate each Schur polynomial at the weights of each fixed point.

    Every partition must fit in the (n-k) x k box of the common ambient
    Grassmannian; a partition outside it raises BoxViolation.
    """
    points = list(points)
    if not points:
        raise BoxViolation("need at least one fixed point")
    box = _box_of(points, None)
    rows = []
    labels = []
    weight_sets = [ws.at(pt.indices) for pt in points]
    for mu in partitions:
        mu = mu if isinstance(mu, Partition) else Partition(mu)
        _check_fits(mu, box)
        labels.append(mu)
        rows.append(tuple(schur_evaluate(mu, wset) for wset in weight_sets))
    return EvaluationMatrix(labels, points, rows)


class BettiTable:
    """Betti numbers b_0..b_P with their cumulative ranks.

    `basis` is an optional map p -> list of Partition attached by callers
    that also ran select_schur_basis.
    """

    __slots__ = ("betti", "cumulative", "fixed_points", "basis")

    def __init__(self, betti, fixed_points, basis=None):
        self.betti = tuple(int(b) for b in betti)
        acc, cum = 0, []
        for b in self.betti:
            acc += b
            cum.append(acc)
        self.cumulative = tuple(cum)
        self.fixed_points = int(fixed_points)
        self.basis = basis

    def poincare_q(self):
        return IntegerPolynomial(self.betti)

    def poincare_t(self):
        """Poincare polynomial in t, so b_p sits on t^(2p)."""
        return self.poincare_q().interleave_zero()

    def is_palindromic(self):
        return self.betti == self.betti[::-1]

    def total(self):
        return sum(self.betti)

    def to_json_dict(self):
        doc = {
            "betti": list(self.betti),
            "poincare_t": self.poincare_t().coefficient_list(),
            "fixed_points": self.fixed_points,
        }
        if self.basis is not None:
            doc["basis"] = {
                str(p): [str(mu) for mu in mus] for p, mus in sorted(self.basis.items())
            }
        return doc

    def __repr__(self):
        return "BettiTable(betti=%r, fixed_points=%d)" % (self.betti, self.fixed_points)


def _is_triple_list(points):
    return bool(points) and all(isinstance(pt, PartitionTriple) for pt in points)


def _is_subspace_list(points):
    return bool(points) and all(isinstance(pt, FixedSubspace) for pt in points)


def filtration_betti(points, ws=None, box=None, p_max=None, action=None):
    """Betti numbers of the variety carrying the given fixed points.

    Grassmannian fixed subspaces (with their ambient WeightSystem): r_p is
    the rank of the evaluation matrix over the box partitions of size at
    most p, and b_p = r_p - r_{p-1}.

    Hilbert-scheme partition triples: b_p counts fixed points whose
    attracting cell has dimension p, computed from the tangent weights of
    the (default or supplied) torus action; ws and box are not consulted.

    p_max defaults to the full range: k(n-k) on the Grassmannian side, 2k
    on the Hilbert-scheme side.
    """
    points = list(points)
    if _is_triple_list(points):
        return _cell_betti(points, p_max, action)
    if _is_subspace_list(points):
        if ws is None:
            raise ValueError("fixed subspaces need their ambient WeightSystem")
        return _rank_betti(points, ws, box, p_max)
    raise TypeError("points must be all FixedSubspace or all PartitionTriple")


def _cell_betti(triples, p_max, action):
    sizes = {t.size for t in triples}
    if len(sizes) != 1:
        raise InvalidDegree("triples of mixed total size: %r" % (sorted(sizes),))
    k = sizes.pop()
    if action is None:
        action = build_torus_action(k)
    if p_max is None:
        p_max = 2 * k
    if p_max < 0:
        raise InvalidDegree("p_max must be nonnegative")
    betti = [0] * (p_max + 1)
    for t in triples:
        d = hilb_minus_cell_dimension(t, action)
        if d <= p_max:
            betti[d] += 1
    return BettiTable(betti, len(triples))


def _rank_betti(points, ws, box, p_max):
    box = _box_of(points, box)
    if p_max is None:
        p_max = box[0] * box[1]
    if p_max < 0:
        raise InvalidDegree("p_max must be nonnegative")
    weight_sets = [ws.at(pt.indices) for pt in points]
    space = RowSpace(len(points))
    betti = []
    previous = 0
    for p in range(p_max + 1):
        if space.rank < len(points):
            for mu in partitions_in_box(box[0], box[1], p):
                space.add([schur_evaluate(mu, wset) for wset in weight_sets])
        betti.append(space.rank - previous)
        previous = space.rank
    return BettiTable(betti, len(points))


class SchurBasisSelection:
    """Outcome of the greedy Schur-row selection: for each size p the
    chosen partitions, plus a deficiency report against an expected Betti
    sequence when one was supplied.  Behaves as a read-only map
    p -> list of Partition."""

    __slots__ = ("by_degree", "deficiencies")

    def __init__(self, by_degree, deficiencies):
        self.by_degree = {p: tuple(mus) for p, mus in by_degree.items()}
        self.deficiencies = dict(deficiencies)

    def __getitem__(self, p):
        return self.by_degree[p]

    def __iter__(self):
        return iter(sorted(self.by_degree))

    def __len__(self):
        return len(self.by_degree)

    def items(self):
        return sorted(self.by_degree.items())

    def achieved(self, p):
        return len(self.by_degree.get(p, ()))

    def is_deficient(self):
        return bool(self.deficiencies)

    def __repr__(self):
        return "SchurBasisSelection(%r)" % (self.by_degree,)


def select_schur_basis(points, ws, box=None, p_max=None, expected_betti=None):
    """Greedily pick, for each size p, the partitions whose evaluation rows
    grow the rank past the span of all smaller sizes.

    The scan runs in descending lexicographic order within each size, so
    the outcome is deterministic.  The chosen rows always realize the full
    rank jump of the size-p block (greedy selection from a spanning family
    cannot miss an achievable jump), which on the Grassmannian equals the
    Betti number b_p.  On a restricted fixed set the jump can be smaller
    than the true Betti number; pass expected_betti to have the shortfall
    reported in `deficiencies` as {p: (achieved, expected)} rather than
    papered over.
    """
    points = list(points)
    if not _is_subspace_list(points):
        raise TypeError("select_schur_basis needs FixedSubspace points")
    box = _box_of(points, box)
    if p_max is None:
        p_max = box[0] * box[1]
    weight_sets = [ws.at(pt.indices) for pt in points]
    space = RowSpace(len(points))
    by_degree = {}
    deficiencies = {}
    for p in range(p_max + 1):
        chosen = []
        for mu in partitions_in_box(box[0], box[1], p):
            if space.add([schur_evaluate(mu, wset) for wset in weight_sets]):
                chosen.append(mu)
        by_degree[p] = chosen
        if expected_betti is not None and p < len(expected_betti):
            expected = expected_betti[p]
            if len(chosen) < expected:
                deficiencies[p] = (len(chosen), expected)
    return SchurBasisSelection(by_degree, deficiencies)


def poincare_of_hilb(k, action=None):
    """Poincare polynomial of Hilb_k(P^2) in t (even exponents only).

    Enumerates the fixed points, validates every Gotzmann image (each
    embedding must land in Gr(n_k - k, R_k) with the right dimension), and
    sums t^(2 * cell dimension).
    """
    triples = enumerate_hilb_fixed_points(k)
    for t in triples:
        degree_k_part(t, k)
    table = filtration_betti(triples, action=action)
    return table.poincare_t()


def b2_regularity_verdict(poly):
    """Root-of-unity obstruction to a regular group action.

    A variety with the relevant regular action has a Poincare polynomial
    that factors over cyclotomic polynomials and powers of the variable, so
    all roots are zero or roots of unity.  A residual factor after
    stripping those proves the action cannot exist: NOT_REGULAR.  A clean
    factorization proves nothing: INCONCLUSIVE.
    """
    p = poly if isinstance(poly, IntegerPolynomial) else IntegerPolynomial(poly)
    if p.is_zero():
        raise ValueError("verdict undefined for the zero polynomial")
    from .algebra import strip_cyclotomic_factors

    is_product, _residual = strip_cyclotomic_factors(p)
    return INCONCLUSIVE if is_product else NOT_REGULAR
