"""The split realization of o_N: generators F_ij, brackets, roots.

Indices run over {-n,...,-1,0,1,...,n} (0 dropped for even N), and
F_ij = E_ij - E_{-j,-i}, so F_ij = -F_{-j,-i} and F_{i,-i} = 0.  Exactly
one member of each {(i,j), (-j,-i)} pair is kept as the canonical
generator: the lexicographically smaller one.

Weights live in the e_1..e_n coordinates with e_{-r} = -e_r, e_0 = 0;
the generator F_ij carries the root e_i - e_j.  A root is classified as
"raising" when its coefficient tuple (e_n, ..., e_1) is lexicographically
negative; with that polarity highest weights of irreps come out
nonpositive (0 >= lam_1 >= lam_2), matching the tableau conventions used
downstream, and the Cartan-positive side consists of the pair-creation
operators of the Fock realization.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .linalg import ExactMatrix
from .scalars import ONE, Rational, rat


def index_range(n: int, odd: bool = True):
    """Valid matrix indices: {-n..n} with 0 present only for odd N."""
    if odd:
        return list(range(-n, n + 1))
    return [i for i in range(-n, n + 1) if i != 0]


class GenIndex:
    """A canonical generator F_ij of o_N (split realization)."""

    __slots__ = ("i", "j", "n")

    def __init__(self, i: int, j: int, n: int):
        if not (-n <= i <= n and -n <= j <= n):
            raise ValueError(f"index ({i},{j}) out of range for n={n}")
        if j == -i:
            raise ValueError("F_{i,-i} is identically zero")
        if (i, j) > (-j, -i):
            raise ValueError(f"({i},{j}) is not canonical; use canonicalize")
        self.i = i
        self.j = j
        self.n = n

    def key(self):
        return (self.i, self.j)

    def is_cartan(self) -> bool:
        return self.i == self.j

    def __eq__(self, other):
        return isinstance(other, GenIndex) and (self.i, self.j, self.n) == (other.i, other.j, other.n)

    def __hash__(self):
        return hash((self.i, self.j, self.n))

    def __lt__(self, other):
        return pbw_sort_key(self) < pbw_sort_key(other)

    def __repr__(self):
        return f"F[{self.i},{self.j}]"


def canonicalize(i: int, j: int, n: int):
    """Resolve F_ij to (sign, canonical GenIndex); sign 0 when j == -i."""
    if not (-n <= i <= n and -n <= j <= n):
        raise ValueError(f"index ({i},{j}) out of range for n={n}")
    if j == -i:
        return 0, None
    if (i, j) <= (-j, -i):
        return 1, GenIndex(i, j, n)
    return -1, GenIndex(-j, -i, n)


def canonical_generators(n: int):
    """All canonical generators of o_{2n+1}, in PBW order."""
    gens = []
    for i in index_range(n):
        for j in index_range(n):
            if j == -i:
                continue
            if (i, j) <= (-j, -i):
                gens.append(GenIndex(i, j, n))
    gens.sort(key=pbw_sort_key)
    return gens


class Weight:
    """A vector in the e_1..e_n weight coordinates, Rational entries."""

    __slots__ = ("comps",)

    def __init__(self, comps):
        self.comps = tuple(rat(c) for c in comps)

    @staticmethod
    def zero(n: int) -> "Weight":
        return Weight((0,) * n)

    @staticmethod
    def e(r: int, n: int) -> "Weight":
        """e_r with the conventions e_{-r} = -e_r and e_0 = 0."""
        comps = [Fraction(0)] * n
        if r > 0:
            comps[r - 1] = Fraction(1)
        elif r < 0:
            comps[-r - 1] = Fraction(-1)
        return Weight(comps)

    def __add__(self, other):
        return Weight(tuple(a + b for a, b in zip(self.comps, other.comps)))

    def __sub__(self, other):
        return Weight(tuple(a - b for a, b in zip(self.comps, other.comps)))

    def __neg__(self):
        return Weight(tuple(-a for a in self.comps))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.comps)

    def __eq__(self, other):
        return isinstance(other, Weight) and self.comps == other.comps

    def __hash__(self):
        return hash(self.comps)

    def __repr__(self):
        return "(" + ", ".join(str(c) for c in self.comps) + ")"


def root_of(g: GenIndex) -> Weight:
    """Root e_i - e_j of a generator; zero weight for Cartan elements."""
    return Weight.e(g.i, g.n) - Weight.e(g.j, g.n)


def is_raising(g: GenIndex) -> bool:
    """Raising <=> root is lex-negative on (e_n, ..., e_1) coefficients.

    With this polarity the o3-raising operator inside o5 is F_{-1,0} and
    highest weights come out nonpositive; validated against the defining
    representation in the tests.
    """
    if g.is_cartan():
        return False
    r = root_of(g).comps
    for c in reversed(r):
        if c:
            return c < 0
    return False


def is_lowering(g: GenIndex) -> bool:
    return not g.is_cartan() and not is_raising(g)


def pbw_sort_key(g: GenIndex):
    """Total order for PBW normal ordering.

    Lowering (negative-root) generators first, then Cartan F_{-n,-n}..
    F_{-1,-1}, then raising generators; within a class ordered by root
    coordinates, then by index pair.
    """
    if g.is_cartan():
        cls = 1
        sub = (g.i, g.j)
    else:
        cls = 2 if is_raising(g) else 0
        sub = tuple(root_of(g).comps) + (g.i, g.j)
    return (cls, sub)


def bracket(a: GenIndex, b: GenIndex):
    """[F_a, F_b] as a list of (Rational coeff, canonical GenIndex).

    Four-delta commutation rule:
    [F_ij, F_kl] = d_kj F_il - d_il F_kj - d_{-k,i} F_{-j,l} + d_{-l,j} F_{k,-i}
    """
    i, j, k, l = a.i, a.j, b.i, b.j
    n = a.n
    raw = []
    if k == j:
        raw.append((1, i, l))
    if i == l:
        raw.append((-1, k, j))
    if -k == i:
        raw.append((-1, -j, l))
    if -l == j:
        raw.append((1, k, -i))
    acc: dict = {}
    for c, p, q in raw:
        sgn, g = canonicalize(p, q, n)
        if sgn == 0:
            continue
        acc[g] = acc.get(g, Fraction(0)) + Fraction(c * sgn)
    return [(c, g) for g, c in sorted(acc.items(), key=lambda t: pbw_sort_key(t[0])) if c]


def defining_matrices(n: int, odd: bool = True):
    """The defining N x N representation: GenIndex -> ExactMatrix.

    Basis ordered by index (-n, ..., n); entry convention
    F_ij = E_ij - E_{-j,-i}.
    """
    idx = index_range(n, odd)
    pos = {v: t for t, v in enumerate(idx)}
    out = {}
    for g in canonical_generators(n) if odd else _even_generators(n):
        m = ExactMatrix(len(idx), len(idx))
        m.data[pos[g.i]][pos[g.j]] = m.data[pos[g.i]][pos[g.j]] + ONE
        m.data[pos[-g.j]][pos[-g.i]] = m.data[pos[-g.j]][pos[-g.i]] - ONE
        out[g] = m
    return out


def _even_generators(n: int):
    gens = []
    for i in index_range(n, odd=False):
        for j in index_range(n, odd=False):
            if j == -i:
                continue
            if (i, j) <= (-j, -i):
                gens.append(GenIndex(i, j, n))
    gens.sort(key=pbw_sort_key)
    return gens


@lru_cache(maxsize=None)
def _gen_table(n: int):
    return tuple(canonical_generators(n))


def weyl_dimension(lam1, lam2) -> int:
    """Dimension of the o5 irrep with nonpositive highest weight (lam1, lam2).

    Uses the substitution a = -lam2, b = -lam1 to bridge to the standard
    dominant B2 convention: dim = (a-b+1)(a+b+2)(2a+3)(2b+1)/6.
    """
    lam1, lam2 = rat(lam1), rat(lam2)
    if not (0 >= lam1 >= lam2):
        raise ValueError(f"invalid highest weight ({lam1},{lam2}): need 0 >= lam1 >= lam2")
    if (2 * lam1).denominator != 1 or (2 * lam2).denominator != 1:
        raise ValueError("weights must be integers or half-integers")
    if (2 * lam1 - 2 * lam2) % 2 != 0:
        raise ValueError("weights must be simultaneously integer or half-integer")
    a, b = -lam2, -lam1
    d = (a - b + 1) * (a + b + 2) * (2 * a + 3) * (2 * b + 1) / 6
    assert d.denominator == 1 and d > 0
    return int(d)


def o3_subalgebra_generators(n: int):
    """Canonical F_ij with -n < i,j < n: the embedded o_{2n-1}."""
    return [g for g in canonical_generators(n) if abs(g.i) < n and abs(g.j) < n]


def jacobi_defect(a: GenIndex, b: GenIndex, c: GenIndex):
    """[[a,b],c] + [[b,c],a] + [[c,a],b] as a coefficient map (empty if OK)."""
    acc: dict = {}

    def emit(coef: Rational, terms):
        for c2, g in terms:
            acc[g] = acc.get(g, Fraction(0)) + coef * c2

    for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
        for c1, g in bracket(x, y):
            emit(c1, bracket(g, z))
    return {g: c for g, c in acc.items() if c}
