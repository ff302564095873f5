"""Floating-point matrix realizations and transversality experiments.

A representation is m-thick when every pair (V1, V2) of complementary
dimensions can be made transversal by some group element.  Here that search
is done by sampling: ``g`` is a product of exponentials of Chevalley
generators, and transversality is measured by the normalized wedge volume
``|det[orth(g V1) | orth(V2)]|`` (product of sines of principal angles).

Thresholds: a pair counts as complementary above ``COMPLEMENT_THRESHOLD``;
a non-thickness witness is confirmed when every sampled volume stays below
``WITNESS_THRESHOLD``.  The three decades between them are deliberate.

Witness subspaces for SO(2n) use the two rulings of maximal isotropic
subspaces: two maximal isotropics lie in the same family iff their
intersection has dimension congruent to n mod 2, group elements preserve the
family, and opposite-family isotropics meet in odd dimension (n even) while
same-family ones meet in odd dimension when n is odd.  So ``V2 = V1`` works
for odd n and ``V2 = span(x_1..x_{n-1}, y_n)`` for even n.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from itertools import combinations
from math import comb
from typing import Sequence

import numpy as np
from scipy.linalg import expm, null_space

from .character import Character, IrrepLabel, weight_system
from .classify import ProductLabel, product_character
from .poset import build_poset, is_chain, is_wmf
from .rootsystem import RootSystem, build_root_system, product_root_system

COMPLEMENT_THRESHOLD = 1e-6
WITNESS_THRESHOLD = 1e-9
CHEVALLEY_TOL = 1e-10
NORM_CAP = 1e6

REP_NAMES = ("sl-std", "so-odd", "so-even", "sp-std", "sym-sl2", "g2")


class ConstructionError(RuntimeError):
    pass


@dataclass
class MatrixRep:
    """Chevalley generators E_i, F_i, H_i acting on a weight basis."""

    name: str
    root_system: RootSystem
    E: list[np.ndarray]
    F: list[np.ndarray]
    H: list[np.ndarray]
    label: IrrepLabel | ProductLabel | None = None
    form: np.ndarray | None = None

    @property
    def dim(self) -> int:
        return self.H[0].shape[0]

    @property
    def rank(self) -> int:
        return len(self.H)

    @property
    def basis(self) -> list[tuple[int, ...]]:
        """Weight of each basis vector, read off the diagonals of H_i."""
        diag = np.array([np.diag(h) for h in self.H]).T
        return [tuple(int(round(x)) for x in row) for row in diag]

    def symbolic_character(self) -> Character:
        if isinstance(self.label, ProductLabel):
            return product_character(self.label)
        return weight_system(self.label)

    def residuals(self) -> dict[str, float]:
        A = self.root_system.cartan_matrix
        r = self.rank
        out = {"HE": 0.0, "HF": 0.0, "EF_diag": 0.0, "EF_off": 0.0, "H_diag": 0.0, "HH": 0.0, "serre": 0.0}

        def br(x, y):
            return x @ y - y @ x

        for i in range(r):
            out["H_diag"] = max(out["H_diag"], np.abs(self.H[i] - np.diag(np.diag(self.H[i]))).max())
            out["EF_diag"] = max(out["EF_diag"], np.abs(br(self.E[i], self.F[i]) - self.H[i]).max())
            for j in range(r):
                out["HE"] = max(out["HE"], np.abs(br(self.H[i], self.E[j]) - A[j][i] * self.E[j]).max())
                out["HF"] = max(out["HF"], np.abs(br(self.H[i], self.F[j]) + A[j][i] * self.F[j]).max())
                out["HH"] = max(out["HH"], np.abs(br(self.H[i], self.H[j])).max())
                if i != j:
                    out["EF_off"] = max(out["EF_off"], np.abs(br(self.E[i], self.F[j])).max())
                    for X in (self.E, self.F):
                        y = X[j]
                        for _ in range(1 - A[j][i]):
                            y = br(X[i], y)
                        out["serre"] = max(out["serre"], np.abs(y).max())
        return {k: float(v) for k, v in out.items()}

    def spectrum_matches(self) -> bool:
        """H-eigenvalues on the basis agree exactly with the Freudenthal weight system."""
        diag = np.array([np.diag(h) for h in self.H]).T
        if not np.allclose(diag, np.round(diag), atol=1e-12, rtol=0):
            return False
        got: dict = {}
        for w in self.basis:
            got[w] = got.get(w, 0) + 1
        return got == self.symbolic_character().entries

    def validate(self, tol: float = CHEVALLEY_TOL) -> None:
        res = self.residuals()
        bad = {k: v for k, v in res.items() if v >= tol}
        if bad:
            raise ConstructionError(f"{self.name}: Chevalley residuals too large: {bad}")
        if self.label is not None and not self.spectrum_matches():
            raise ConstructionError(f"{self.name}: H-spectrum differs from the weight system")


def _unit(n, i, j):
    m = np.zeros((n, n))
    m[i, j] = 1.0
    return m


# -- textbook realizations -------------------------------------------------

def sl_std(n: int) -> MatrixRep:
    """SL_n on C^n (type A_{n-1})."""
    if n < 2:
        raise ConstructionError("sl-std needs n >= 2")
    E = [_unit(n, i, i + 1) for i in range(n - 1)]
    F = [e.T.copy() for e in E]
    H = [_unit(n, i, i) - _unit(n, i + 1, i + 1) for i in range(n - 1)]
    label = IrrepLabel.of(f"A{n - 1}", *([1] + [0] * (n - 2)))
    return MatrixRep(f"sl-std-{n}", label.root_system, E, F, H, label)


def _type_bcd_common(n: int, size: int):
    # basis x_1..x_n, y_1..y_n[, z]; alpha_i = eps_i - eps_{i+1}
    E, H = [], []
    for i in range(n - 1):
        E.append(_unit(size, i, i + 1) - _unit(size, n + i + 1, n + i))
        H.append(_unit(size, i, i) - _unit(size, i + 1, i + 1)
                 - _unit(size, n + i, n + i) + _unit(size, n + i + 1, n + i + 1))
    return E, H


def so_odd_std(n: int) -> MatrixRep:
    """SO_{2n+1} on C^{2n+1} with form x.y + z^2 (type B_n)."""
    if n < 2:
        raise ConstructionError("so-odd needs n >= 2")
    size = 2 * n + 1
    z = 2 * n
    E, H = _type_bcd_common(n, size)
    x, y = n - 1, 2 * n - 1
    E.append(np.sqrt(2.0) * (_unit(size, x, z) - _unit(size, z, y)))
    H.append(2.0 * (_unit(size, x, x) - _unit(size, y, y)))
    F = [e.T.copy() for e in E]
    J = np.zeros((size, size))
    J[:n, n:2 * n] = np.eye(n)
    J[n:2 * n, :n] = np.eye(n)
    J[z, z] = 1.0
    label = IrrepLabel.of(f"B{n}", *([1] + [0] * (n - 1)))
    return MatrixRep(f"so-odd-{size}", label.root_system, E, F, H, label, J)


def so_even_std(n: int) -> MatrixRep:
    """SO_{2n} on C^{2n} with split form x.y (type D_n; n = 2 gives A1 x A1)."""
    if n < 2:
        raise ConstructionError("so-even needs n >= 2")
    size = 2 * n
    E, H = _type_bcd_common(n, size)
    E.append(_unit(size, n - 2, 2 * n - 1) - _unit(size, n - 1, 2 * n - 2))
    H.append(_unit(size, n - 2, n - 2) + _unit(size, n - 1, n - 1)
             - _unit(size, 2 * n - 2, 2 * n - 2) - _unit(size, 2 * n - 1, 2 * n - 1))
    F = [e.T.copy() for e in E]
    J = np.zeros((size, size))
    J[:n, n:] = np.eye(n)
    J[n:, :n] = np.eye(n)
    if n == 2:
        a1 = build_root_system("A1")
        label = ProductLabel([IrrepLabel(a1, (1,)), IrrepLabel(a1, (1,))])
        rs = product_root_system(a1, a1)
    else:
        label = IrrepLabel.of(f"D{n}", *([1] + [0] * (n - 1)))
        rs = label.root_system
    return MatrixRep(f"so-even-{size}", rs, E, F, H, label, J)


def sp_std(n: int) -> MatrixRep:
    """Sp_{2n} on C^{2n} with form sum x_i ^ y_i (type C_n)."""
    if n < 2:
        raise ConstructionError("sp-std needs n >= 2")
    size = 2 * n
    E, H = _type_bcd_common(n, size)
    E.append(_unit(size, n - 1, 2 * n - 1))
    H.append(_unit(size, n - 1, n - 1) - _unit(size, 2 * n - 1, 2 * n - 1))
    F = [e.T.copy() for e in E]
    J = np.zeros((size, size))
    J[:n, n:] = np.eye(n)
    J[n:, :n] = -np.eye(n)
    label = IrrepLabel.of(f"C{n}", *([1] + [0] * (n - 1)))
    return MatrixRep(f"sp-std-{size}", label.root_system, E, F, H, label, J)


def sym_sl2(m: int) -> MatrixRep:
    """S^m of the standard SL_2 module on the monomials x^(m-k) y^k."""
    if m < 1:
        raise ConstructionError("sym-sl2 needs m >= 1")
    size = m + 1
    E = np.zeros((size, size))
    F = np.zeros((size, size))
    for k in range(1, size):
        E[k - 1, k] = k
    for k in range(m):
        F[k + 1, k] = m - k
    H = np.diag([float(m - 2 * k) for k in range(size)])
    label = IrrepLabel.of("A1", m)
    return MatrixRep(f"sym{m}-sl2", label.root_system, [E], [F], [H], label)


# -- chain solver -------------------------------------------------------------

def chain_rep(label: IrrepLabel, name: str | None = None) -> MatrixRep:
    """Realize a weight multiplicity-free module whose weight poset is a chain.

    On the ordered weight basis v_1 > ... > v_n consecutive weights differ by
    one simple root alpha_(i_k).  F_(i_k) sends v_k to v_(k+1) (coefficient 1,
    fixing the basis scaling) and E_(i_k) sends v_(k+1) to a_k v_k.  The
    conditions [E_i, F_i] = H_i are linear in the a_k and are solved by least
    squares; cross relations hold by the shape of the ansatz and everything
    is checked afterwards.
    """
    rs = label.root_system
    ch = weight_system(label)
    if not (is_wmf(ch) and is_chain(build_poset(ch))):
        raise ConstructionError(f"{label} is not a weight multiplicity-free chain")
    weights = [w for w, _ in ch.sorted_items()]
    n, r = len(weights), rs.rank
    simple = rs.simple_roots
    edge = [simple.index(tuple(a - b for a, b in zip(weights[k], weights[k + 1]))) for k in range(n - 1)]

    # row (k, i): a_k [edge k is i] - a_(k-1) [edge k-1 is i] = <mu_k, alpha_i^vee>
    M = np.zeros((n * r, max(n - 1, 1)))
    rhs = np.zeros(n * r)
    for k in range(n):
        for i in range(r):
            row = k * r + i
            rhs[row] = weights[k][i]
            if k < n - 1 and edge[k] == i:
                M[row, k] += 1.0
            if k > 0 and edge[k - 1] == i:
                M[row, k - 1] -= 1.0
    a = np.ones(M.shape[1])
    if n > 1:
        a, *_ = np.linalg.lstsq(M, rhs, rcond=None)
        if np.abs(M @ a - rhs).max() > CHEVALLEY_TOL:
            raise ConstructionError(f"chain solver residual too large for {label}")

    E = [np.zeros((n, n)) for _ in range(r)]
    F = [np.zeros((n, n)) for _ in range(r)]
    for k in range(n - 1):
        i = edge[k]
        E[i][k, k + 1] = a[k]
        F[i][k + 1, k] = 1.0
    H = [np.diag([float(w[i]) for w in weights]) for i in range(r)]
    rep = MatrixRep(name or f"chain-{label}", rs, E, F, H, label)
    rep.validate()
    return rep


def g2_7dim() -> MatrixRep:
    return chain_rep(IrrepLabel.of("G2", 1, 0), name="g2-7dim")


def build_matrix_rep(label: IrrepLabel | str, n: int | None = None) -> MatrixRep:
    """Build and validate a realization.

    ``label`` is an :class:`IrrepLabel` (chain solver) or one of
    ``REP_NAMES`` with size parameter ``n``: ``sl-std`` -> SL_n,
    ``so-odd`` -> SO_{2n+1}, ``so-even`` -> SO_{2n}, ``sp-std`` -> Sp_{2n},
    ``sym-sl2`` -> S^n SL_2, ``g2`` (no parameter).
    """
    if isinstance(label, IrrepLabel):
        return chain_rep(label)
    builders = {"sl-std": sl_std, "so-odd": so_odd_std, "so-even": so_even_std,
                "sp-std": sp_std, "sym-sl2": sym_sl2}
    if label == "g2":
        return g2_7dim()
    if label not in builders:
        raise ConstructionError(f"unsupported representation {label!r}")
    if n is None:
        raise ConstructionError(f"{label} needs a size parameter")
    rep = builders[label](n)
    rep.validate()
    return rep


# -- sampling -----------------------------------------------------------------

def random_group_element(rep: MatrixRep, rng: np.random.Generator, sigma: float = 1.0,
                         rounds: int | None = None, cap: float = NORM_CAP,
                         max_attempts: int = 100) -> np.ndarray:
    """Product of exp(t E_i), exp(t F_i), exp(s H_i) with normal coefficients.

    One round applies every E_i, then every F_i, then every H_i, i.e.
    ``2 * rank`` unipotent factors and one torus factor.  More rounds give
    more generic but worse-conditioned elements.  Samples with operator norm
    above ``cap`` are redrawn.
    """
    rounds = 1 if rounds is None else rounds
    for _ in range(max_attempts):
        g = np.eye(rep.dim)
        for _ in range(rounds):
            for X in rep.E:
                g = g @ expm(rng.normal(0.0, sigma) * X)
            for X in rep.F:
                g = g @ expm(rng.normal(0.0, sigma) * X)
            for X in rep.H:
                g = g @ np.diag(np.exp(rng.normal(0.0, sigma) * np.diag(X)))
        if np.linalg.norm(g, 2) <= cap:
            return g
    raise RuntimeError("could not draw a group element below the norm cap")


@dataclass
class SubspaceSample:
    V1: np.ndarray
    V2: np.ndarray

    @property
    def m(self) -> int:
        return self.V1.shape[1]

    @property
    def n(self) -> int:
        return self.V1.shape[0]

    def __post_init__(self):
        if self.V1.shape[0] != self.V2.shape[0] or self.V1.shape[1] + self.V2.shape[1] != self.V1.shape[0]:
            raise ValueError("V1 and V2 must have complementary dimensions")


def random_subspace_pair(n: int, m: int, rng: np.random.Generator, cond_cap: float = 1e8) -> SubspaceSample:
    while True:
        V1 = rng.standard_normal((n, m))
        V2 = rng.standard_normal((n, n - m))
        if np.linalg.cond(V1) < cond_cap and np.linalg.cond(V2) < cond_cap:
            return SubspaceSample(V1, V2)


def _orth(X: np.ndarray) -> np.ndarray:
    q, _ = np.linalg.qr(X)
    return q


def wedge_volume(g: np.ndarray, s: SubspaceSample) -> float:
    """Normalized |det[g V1 | V2]|; zero exactly when g V1 and V2 fail to be complementary.

    Both blocks are orthonormalized first, so the value depends only on the
    subspaces (it is the product of the sines of their principal angles).
    """
    if g.shape != (s.n, s.n):
        raise ValueError("group element and subspaces have different dimensions")
    M = np.hstack([_orth(g @ s.V1), _orth(s.V2)])
    return float(abs(np.linalg.det(M)))


@dataclass
class EvidenceReport:
    rep: str
    m: int
    pairs: int
    retries: int
    threshold: float
    seed: int
    success_fraction: float
    min_volume: float
    median_volume: float
    failures: list[dict] = field(default_factory=list)
    note: str = "success on all sampled pairs is evidence of m-thickness, not a proof"

    def to_json(self) -> dict:
        return asdict(self)


def pair_seeds(seed: int, count: int) -> list[int]:
    """Independent per-item seeds from one master seed (order-independent)."""
    return [int(x) for x in np.random.SeedSequence(seed).generate_state(count, dtype=np.uint64)]


def sample_thickness_evidence(rep: MatrixRep, m: int, pairs: int = 200, retries_per_pair: int = 5,
                              seed: int = 0, threshold: float = COMPLEMENT_THRESHOLD) -> EvidenceReport:
    n = rep.dim
    if not 0 < m < n:
        raise ValueError(f"m={m} outside 0 < m < {n}")
    best_volumes = []
    failures = []
    for ps in pair_seeds(seed, pairs):
        rng = np.random.default_rng(ps)
        s = random_subspace_pair(n, m, rng)
        best = 0.0
        for _ in range(retries_per_pair):
            vol = wedge_volume(random_group_element(rep, rng), s)
            best = max(best, vol)
            if vol > threshold:
                break
        best_volumes.append(best)
        if best <= threshold:
            failures.append({"pair_seed": ps, "best_volume": best})
    vols = np.array(best_volumes)
    return EvidenceReport(rep.name, m, pairs, retries_per_pair, threshold, seed,
                          success_fraction=float(np.mean(vols > threshold)),
                          min_volume=float(vols.min()), median_volume=float(np.median(vols)),
                          failures=failures)


def so_even_witness(n: int) -> SubspaceSample:
    """Maximal isotropic pair in SO_{2n} that no group element makes transversal."""
    if n < 2:
        raise ValueError("witness needs n >= 2")
    size = 2 * n
    I = np.eye(size)
    V1 = I[:, :n].copy()
    if n % 2:
        V2 = V1.copy()
    else:
        V2 = np.hstack([I[:, :n - 1], I[:, [2 * n - 1]]])
    return SubspaceSample(V1, V2)


@dataclass
class WitnessReport:
    rep: str
    witness_kind: str
    trials: int
    trials_run: int
    seed: int
    max_volume: float
    threshold: float
    verdict: bool

    def to_json(self) -> dict:
        return asdict(self)


def verify_nonthick_witness(rep: MatrixRep, s: SubspaceSample, trials: int = 1000, seed: int = 0,
                            threshold: float = WITNESS_THRESHOLD, witness_kind: str = "custom",
                            stop_above: float = COMPLEMENT_THRESHOLD) -> WitnessReport:
    """Check that wedge_volume(g, s) stays below ``threshold`` for sampled g.

    Sampling stops early once a volume exceeds ``stop_above`` (a clear
    complement, so the pair is no witness).
    """
    rng = np.random.default_rng(seed)
    vmax = 0.0
    run = 0
    for _ in range(trials):
        vol = wedge_volume(random_group_element(rep, rng), s)
        run += 1
        vmax = max(vmax, vol)
        if vol > stop_above:
            break
    return WitnessReport(rep.name, witness_kind, trials, run, seed, vmax, threshold, vmax < threshold)


# -- exterior algebra ---------------------------------------------------------

def wedge_basis(n: int, k: int) -> list[tuple[int, ...]]:
    return list(combinations(range(n), k))


def _perm_sign(seq: Sequence[int]) -> int:
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def pairing_matrix(n: int, k: int) -> np.ndarray:
    """x ^ y = M[x, y] e_1 ^ ... ^ e_n for basis vectors of Lambda^k and Lambda^(n-k)."""
    rows = wedge_basis(n, k)
    cols = wedge_basis(n, n - k)
    idx = {c: j for j, c in enumerate(cols)}
    M = np.zeros((len(rows), len(cols)))
    for i, S in enumerate(rows):
        T = tuple(x for x in range(n) if x not in S)
        M[i, idx[T]] = _perm_sign(S + T)
    return M


def exterior_orth_complement(W: np.ndarray, n: int, k: int, tol: float = 1e-10) -> np.ndarray:
    """Basis (columns) of {y in Lambda^(n-k) : x ^ y = 0 for all x in span W}."""
    W = np.atleast_2d(np.asarray(W, dtype=float))
    if W.shape[0] != comb(n, k):
        raise ValueError(f"W must have {comb(n, k)} rows")
    if W.shape[1] and np.linalg.matrix_rank(W, tol=tol) < W.shape[1]:
        raise ValueError("input basis is rank deficient")
    M = pairing_matrix(n, k)
    if W.shape[1] == 0:
        return np.eye(M.shape[1])
    return null_space(W.T @ M, rcond=tol)


def exterior_action(X: np.ndarray, k: int) -> np.ndarray:
    """Matrix of the derivation induced by X on Lambda^k in the subset basis."""
    n = X.shape[0]
    basis = wedge_basis(n, k)
    idx = {S: i for i, S in enumerate(basis)}
    out = np.zeros((len(basis), len(basis)))
    for col, S in enumerate(basis):
        for pos, s in enumerate(S):
            for r in np.nonzero(X[:, s])[0]:
                if r != s and r in S:
                    continue
                T = list(S)
                T[pos] = int(r)
                out[idx[tuple(sorted(T))], col] += X[r, s] * _perm_sign(T)
    return out


def compound_matrix(g: np.ndarray, k: int) -> np.ndarray:
    """Lambda^k g: minors det g[S, T]."""
    n = g.shape[0]
    basis = wedge_basis(n, k)
    out = np.empty((len(basis), len(basis)))
    for i, S in enumerate(basis):
        for j, T in enumerate(basis):
            out[i, j] = np.linalg.det(g[np.ix_(S, T)])
    return out


def submodule_span(generators: Sequence[np.ndarray], seeds: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    """Orthonormal basis of the smallest subspace containing ``seeds`` and stable under ``generators``."""
    Q = _orth(np.atleast_2d(seeds))
    while True:
        cand = np.hstack([Q] + [X @ Q for X in generators])
        u, sv, _ = np.linalg.svd(cand, full_matrices=False)
        rank = int((sv > tol * sv[0]).sum())
        if rank == Q.shape[1]:
            return Q
        Q = u[:, :rank]
