"""Root systems, Weyl group combinatorics and representation oracles.

Weights are tuples in the fundamental-weight basis (entry i is the pairing
with the i-th simple coroot); roots are tuples in the simple-root basis.
Letters of words and indices of simple roots are 1-based, as in the usual
notation s_1, ..., s_r.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterator, Sequence

from .config import budget
from .errors import BudgetExceeded, NotARoot, NotDominant, NotReduced, UnknownType

Weight = tuple  # fundamental coordinates
RootVec = tuple  # simple-root coordinates
ReducedWord = tuple  # 1-based letters

# Which C2 simple root is long. The choice is the one under which the
# lattice points of the s1s2s1s2 string polytopes of the fundamental
# weights are counted by the Weyl dimension formula (see tests).
C2_LONG_ROOT = 2


def _chain(n: int, edges=None) -> list[list[Fraction]]:
    g = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = Fraction(2)
    for i, j in edges if edges is not None else [(k, k + 1) for k in range(n - 1)]:
        g[i][j] = g[j][i] = Fraction(-1)
    return g


def _gram(kind: str, n: int) -> list[list[Fraction]]:
    """Gram matrix of the simple roots (0-based indices)."""
    if kind == "A":
        return _chain(n)
    if kind in ("B", "C"):
        g = _chain(n)
        if n == 1:
            return g
        long_last = kind == "C"
        if kind == "C" and n == 2 and C2_LONG_ROOT == 1:
            long_last = False
        # long roots have squared length 4, short ones 2
        for i in range(n):
            last = i == n - 1
            g[i][i] = Fraction(4 if (last == long_last) else 2)
        for i in range(n - 1):
            # short-short -1, otherwise -2
            both_short = g[i][i] == g[i + 1][i + 1] == 2
            g[i][i + 1] = g[i + 1][i] = Fraction(-1 if both_short else -2)
        return g
    if kind == "D":
        edges = [(k, k + 1) for k in range(n - 2)] + [(n - 3, n - 1)]
        return _chain(n, edges)
    if kind == "E":
        if n == 6:
            # chain 5-4-3-2-6 with 1 attached to 3
            edges = [(4, 3), (3, 2), (2, 1), (1, 5), (0, 2)]
        else:
            # 1-3-4-5-6-7(-8) with 2 attached to 4
            edges = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 3)]
            if n == 8:
                edges.append((6, 7))
        return _chain(n, edges)
    if kind == "F":
        g = _chain(4)
        for i in (0, 1):
            g[i][i] = Fraction(4)
        g[0][1] = g[1][0] = Fraction(-2)
        g[1][2] = g[2][1] = Fraction(-2)
        return g
    if kind == "G":
        return [[Fraction(2), Fraction(-3)], [Fraction(-3), Fraction(6)]]
    raise UnknownType(kind)


_LEGAL = {"A": range(1, 40), "B": range(2, 40), "C": range(2, 40), "D": range(4, 40),
          "E": (6, 7, 8), "F": (4,), "G": (2,)}


def parse_type(text: str) -> tuple[str, int]:
    """``"A3"`` -> ``("A", 3)``."""
    text = text.strip().upper()
    if len(text) < 2 or text[0] not in _LEGAL or not text[1:].isdigit():
        raise UnknownType(f"cannot parse root system {text!r}")
    return text[0], int(text[1:])


@dataclass(frozen=True)
class RootSystem:
    cartan_type: str
    rank: int
    cartan: tuple = field(repr=False)  # cartan[i][j] = <alpha_j, alpha_i^vee>
    symmetrizer: tuple = field(repr=False)

    @property
    def name(self) -> str:
        return f"{self.cartan_type}{self.rank}"

    # -- basic vectors -------------------------------------------------------

    def simple_root(self, i: int) -> RootVec:
        return tuple(1 if k == i - 1 else 0 for k in range(self.rank))

    def fundamental_weight(self, i: int) -> Weight:
        return tuple(1 if k == i - 1 else 0 for k in range(self.rank))

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    @property
    def zero(self) -> Weight:
        return (0,) * self.rank

    def root_to_weight(self, beta: RootVec) -> Weight:
        """Fundamental coordinates of a root-lattice vector."""
        r = self.rank
        return tuple(sum(beta[k] * self.cartan[j][k] for k in range(r)) for j in range(r))

    def weight_to_root(self, lam: Weight) -> tuple:
        """Simple-root coordinates (rational) of a weight."""
        from .exactgeom.intlin import solve

        x = solve(self.cartan, list(lam))
        return tuple(x)

    def root_pairing(self, beta: RootVec, j: int) -> int:
        """``<beta, alpha_j^vee>`` for a root-lattice vector beta."""
        row = self.cartan[j - 1]
        return sum(b * c for b, c in zip(beta, row))

    # -- reflections -----------------------------------------------------------

    def simple_reflection(self, i: int, lam: Weight) -> Weight:
        """``s_i(lam) = lam - <lam, alpha_i^vee> alpha_i``."""
        c = lam[i - 1]
        if not c:
            return tuple(lam)
        return tuple(x - c * self.cartan[j][i - 1] for j, x in enumerate(lam))

    def reflect_root(self, i: int, beta: RootVec) -> RootVec:
        c = self.root_pairing(beta, i)
        if not c:
            return tuple(beta)
        return tuple(b - c if k == i - 1 else b for k, b in enumerate(beta))

    def apply_word(self, word: Sequence[int], lam: Weight) -> Weight:
        """``s_{w1} s_{w2} ... s_{wk} (lam)``."""
        for i in reversed(word):
            lam = self.simple_reflection(i, lam)
        return lam

    # -- roots -----------------------------------------------------------------

    @cached_property
    def positive_roots(self) -> tuple:
        roots = {self.simple_root(i) for i in range(1, self.rank + 1)}
        frontier = list(roots)
        while frontier:
            nxt = []
            for beta in frontier:
                for i in range(1, self.rank + 1):
                    g = self.reflect_root(i, beta)
                    if all(x >= 0 for x in g) and g not in roots:
                        roots.add(g)
                        nxt.append(g)
            frontier = nxt
        return tuple(sorted(roots, key=lambda b: (sum(b), b)))

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    def is_root(self, beta: RootVec) -> bool:
        beta = tuple(beta)
        return beta in set(self.positive_roots) or tuple(-x for x in beta) in set(self.positive_roots)

    def pairing(self, lam: Weight, beta: RootVec) -> Fraction:
        """``<lam, beta^vee>`` by writing beta as w(alpha_i).

        Reflections lowering the height are applied to beta and lam together
        until beta becomes simple, using ``<lam, beta^vee> = <s lam, (s beta)^vee>``.
        """
        beta = tuple(beta)
        sign = 1
        if beta and all(x <= 0 for x in beta):
            beta, sign = tuple(-x for x in beta), -1
        if not beta or any(x < 0 for x in beta) or not any(beta):
            raise NotARoot(f"{beta} is not a root")
        lam = tuple(lam)
        while sum(beta) > 1:
            for j in range(1, self.rank + 1):
                if self.root_pairing(beta, j) > 0:
                    beta = self.reflect_root(j, beta)
                    lam = self.simple_reflection(j, lam)
                    break
            else:
                raise NotARoot(f"{beta} is not a root")
            if any(x < 0 for x in beta):
                raise NotARoot("not a root")
        i = beta.index(1)
        if sum(beta) != 1:
            raise NotARoot("not a root")
        return sign * Fraction(lam[i])

    # -- words -----------------------------------------------------------------

    def beta_sequence_raw(self, word: Sequence[int]) -> list[RootVec]:
        """``beta_k = s_{i1} ... s_{i(k-1)} alpha_{ik}`` without any checks."""
        out = []
        for k, i in enumerate(word):
            beta = self.simple_root(i)
            for j in reversed(word[:k]):
                beta = self.reflect_root(j, beta)
            out.append(beta)
        return out

    def is_reduced(self, word: Sequence[int]) -> bool:
        """Whether ``word`` is a reduced word of the longest element."""
        if any(not (1 <= i <= self.rank) for i in word):
            return False
        if len(word) != self.num_positive_roots:
            return False
        betas = self.beta_sequence_raw(word)
        return all(all(x >= 0 for x in b) for b in betas) and len(set(betas)) == len(betas)

    def beta_sequence(self, word: Sequence[int]) -> list[RootVec]:
        if not self.is_reduced(word):
            raise NotReduced(f"{tuple(word)} is not a reduced word of w0 in {self.name}")
        return self.beta_sequence_raw(word)

    def all_reduced_words(self) -> Iterator[ReducedWord]:
        """Every reduced word of w0, in lexicographic order.

        A prefix u extends by the letter j iff u(alpha_j) is positive; the
        images of all simple roots under u are updated linearly.
        """
        cap = budget("words", 10**6)
        r, n = self.rank, self.num_positive_roots
        c = self.cartan
        word: list[int] = []
        count = 0

        def rec(images):
            nonlocal count
            if len(word) == n:
                count += 1
                if count > cap:
                    raise BudgetExceeded(f"more than {cap} reduced words")
                yield tuple(word)
                return
            for j in range(r):
                img = images[j]
                if any(x < 0 for x in img):
                    continue
                # u s_j (alpha_m) = u(alpha_m) - <alpha_m, alpha_j^vee> u(alpha_j)
                new = [
                    tuple(a - c[j][m] * b for a, b in zip(images[m], img)) if c[j][m] else images[m]
                    for m in range(r)
                ]
                word.append(j + 1)
                yield from rec(new)
                word.pop()

        yield from rec([self.simple_root(i) for i in range(1, r + 1)])

    @cached_property
    def w0_word(self) -> ReducedWord:
        return next(self.all_reduced_words())

    @cached_property
    def standard_word(self) -> ReducedWord:
        """(s1)(s2 s1)...(sn ... s1) in type A; the lex-first word elsewhere."""
        if self.cartan_type == "A":
            return tuple(i for b in range(1, self.rank + 1) for i in range(b, 0, -1))
        return self.w0_word

    # -- Weyl group ------------------------------------------------------------

    def dual_weight(self, lam: Weight) -> Weight:
        """``-w0(lam)``."""
        return tuple(-x for x in self.apply_word(self.w0_word, tuple(lam)))

    def weyl_orbit(self, lam: Weight) -> set:
        lam = tuple(lam)
        seen = {lam}
        frontier = [lam]
        while frontier:
            nxt = []
            for mu in frontier:
                for i in range(1, self.rank + 1):
                    nu = self.simple_reflection(i, mu)
                    if nu not in seen:
                        seen.add(nu)
                        nxt.append(nu)
            frontier = nxt
        return seen

    @cached_property
    def weyl_order(self) -> int:
        return len(self.weyl_orbit(self.rho))

    def dominant_conjugate(self, mu: Weight) -> Weight:
        mu = tuple(mu)
        while True:
            i = next((k for k, x in enumerate(mu) if x < 0), None)
            if i is None:
                return mu
            mu = self.simple_reflection(i + 1, mu)

    # -- representations -------------------------------------------------------

    def form(self, lam: Weight, mu: Weight) -> Fraction:
        """W-invariant form with ``(alpha_i, alpha_i) = 2 d_i``."""
        x = self.weight_to_root(lam)
        return sum(x[k] * self.symmetrizer[k] * Fraction(mu[k]) for k in range(self.rank))

    def weyl_dim(self, lam: Weight) -> int:
        """Dimension of V(lam) by the Weyl dimension formula."""
        if any(x < 0 for x in lam) or any(Fraction(x).denominator != 1 for x in lam):
            raise NotDominant(f"{tuple(lam)} is not dominant integral")
        shifted = tuple(x + 1 for x in lam)
        num, den = Fraction(1), Fraction(1)
        for beta in self.positive_roots:
            num *= self.pairing(shifted, beta)
            den *= self.pairing(self.rho, beta)
        val = num / den
        assert val.denominator == 1
        return int(val)

    def is_below(self, mu: Weight, lam: Weight) -> bool:
        """``lam - mu`` is a nonnegative integer combination of simple roots."""
        diff = self.weight_to_root(tuple(a - b for a, b in zip(lam, mu)))
        return all(x >= 0 and x.denominator == 1 for x in diff)

    def freudenthal_mult(self, lam: Weight, mu: Weight) -> int:
        """Multiplicity of the weight mu in V(lam), by Freudenthal's recursion."""
        lam = tuple(lam)
        if any(x < 0 for x in lam):
            raise NotDominant(f"{lam} is not dominant")
        return _Freudenthal.get(self, lam).mult(tuple(mu))

    def weight_multiplicities(self, lam: Weight) -> dict:
        """All weights of V(lam) with their multiplicities."""
        f = _Freudenthal.get(self, tuple(lam))
        out = {}
        for nu in f.dominant_weights():
            m = f.mult(nu)
            for w in self.weyl_orbit(nu):
                out[w] = m
        return out

    def minuscule_weights(self) -> set:
        t, n = self.cartan_type, self.rank
        idx = {
            "A": range(1, n + 1),
            "B": (n,),
            "C": (1,),
            "D": (1, n - 1, n),
            # the two chain ends of the E6 diagram in this labeling
            "E": (5, 6) if n == 6 else (7,) if n == 7 else (),
            "F": (),
            "G": (),
        }[t]
        return {self.fundamental_weight(i) for i in idx}

    def cominuscule_weights(self) -> set:
        t, n = self.cartan_type, self.rank
        if t == "B":
            return {self.fundamental_weight(1)}
        if t == "C":
            return {self.fundamental_weight(n)}
        return self.minuscule_weights()


class _Freudenthal:
    _cache: dict = {}

    def __init__(self, rs: RootSystem, lam: Weight):
        self.rs = rs
        self.lam = lam
        self.memo: dict = {}
        lr = tuple(x + 1 for x in lam)
        self.norm = rs.form(lr, lr)
        self.pos_weights = [rs.root_to_weight(b) for b in rs.positive_roots]

    @classmethod
    def get(cls, rs: RootSystem, lam: Weight) -> "_Freudenthal":
        key = (rs.name, rs.cartan, lam)
        if key not in cls._cache:
            cls._cache[key] = cls(rs, lam)
        return cls._cache[key]

    def mult(self, mu: Weight) -> int:
        rs = self.rs
        nu = rs.dominant_conjugate(mu)
        if nu == self.lam:
            return 1
        if not rs.is_below(nu, self.lam):
            return 0
        if nu in self.memo:
            return self.memo[nu]
        total = Fraction(0)
        for bw in self.pos_weights:
            k = 1
            while True:
                up = tuple(a + k * b for a, b in zip(nu, bw))
                m = self.mult(up)
                if not m:
                    break
                total += m * rs.form(up, bw)
                k += 1
        nr = tuple(x + 1 for x in nu)
        val = 2 * total / (self.norm - rs.form(nr, nr))
        assert val.denominator == 1
        self.memo[nu] = int(val)
        return int(val)

    def dominant_weights(self) -> list:
        """Dominant weights below lam, found by subtracting positive roots."""
        seen = {self.lam}
        frontier = [self.lam]
        while frontier:
            nxt = []
            for nu in frontier:
                for bw in self.pos_weights:
                    d = tuple(a - b for a, b in zip(nu, bw))
                    if all(x >= 0 for x in d) and d not in seen:
                        seen.add(d)
                        nxt.append(d)
            frontier = nxt
        return sorted(seen)


_SYSTEMS: dict = {}


def build_root_system(kind: str, rank: int | None = None) -> RootSystem:
    """Cartan data for ``("A", 3)`` or ``"A3"``."""
    if rank is None:
        kind, rank = parse_type(kind)
    kind = kind.upper()
    if kind not in _LEGAL or rank not in _LEGAL[kind]:
        raise UnknownType(f"no root system {kind}{rank}")
    key = (kind, rank, C2_LONG_ROOT)
    if key in _SYSTEMS:
        return _SYSTEMS[key]
    g = _gram(kind, rank)
    cartan = tuple(
        tuple(int(2 * g[i][j] / g[i][i]) for j in range(rank)) for i in range(rank)
    )
    base = min(g[i][i] for i in range(rank))
    sym = tuple(int(g[i][i] / base) for i in range(rank))
    rs = RootSystem(kind, rank, cartan, sym)
    _SYSTEMS[key] = rs
    return rs


def parse_weight(text: str, rank: int) -> Weight:
    """``"1,0,2"`` -> (1, 0, 2); fractions ``p/q`` are allowed."""
    parts = [p for p in text.replace(" ", "").split(",") if p]
    if len(parts) != rank:
        raise ValueError(f"expected {rank} coordinates, got {len(parts)}")
    vals = [Fraction(p) for p in parts]
    return tuple(int(v) if v.denominator == 1 else v for v in vals)


def parse_word(text: str) -> ReducedWord:
    return tuple(int(p) for p in text.replace(" ", "").split(",") if p)
