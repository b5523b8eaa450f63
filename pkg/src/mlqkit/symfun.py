"""Exact polynomial algebra in q, x-monomial generating functions, and the
three positive expansions (Schur, Demazure atom, quasisymmetric Schur).

Every expansion is computed twice: once by the charge/recording-tableau
formula and once by exact basis elimination on the generating function.  A
disagreement raises TheoremViolationError.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from .combinat import (
    Partition,
    compress,
    conjugate,
    dominates,
    partitions_of,
    prefix_sums,
    rearrangements,
    sort_composition,
)
from .errors import SizeError, TheoremViolationError
from .mlq import MLQ, content_monomial, enumerate_mlq, maj, mlq_type, straight_mlq
from .tableaux import charge, enumerate_ssyt


class QPoly:
    """Polynomial in q with exact integer coefficients, stored sparsely."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {d: c for d, c in (coeffs or {}).items() if c != 0}

    @staticmethod
    def zero() -> "QPoly":
        return QPoly()

    @staticmethod
    def one() -> "QPoly":
        return QPoly({0: 1})

    @staticmethod
    def q_power(k: int) -> "QPoly":
        return QPoly({k: 1})

    @staticmethod
    def from_list(ascending) -> "QPoly":
        return QPoly({d: c for d, c in enumerate(ascending)})

    def to_list(self) -> list[int]:
        if not self.coeffs:
            return []
        top = max(self.coeffs)
        return [self.coeffs.get(d, 0) for d in range(top + 1)]

    def __add__(self, other: "QPoly") -> "QPoly":
        out = dict(self.coeffs)
        for d, c in other.coeffs.items():
            out[d] = out.get(d, 0) + c
        return QPoly(out)

    def __sub__(self, other: "QPoly") -> "QPoly":
        out = dict(self.coeffs)
        for d, c in other.coeffs.items():
            out[d] = out.get(d, 0) - c
        return QPoly(out)

    def __mul__(self, other: "QPoly") -> "QPoly":
        out: dict[int, int] = {}
        for d1, c1 in self.coeffs.items():
            for d2, c2 in other.coeffs.items():
                out[d1 + d2] = out.get(d1 + d2, 0) + c1 * c2
        return QPoly(out)

    def __neg__(self) -> "QPoly":
        return QPoly({d: -c for d, c in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs.values())

    def at_q0(self) -> int:
        return self.coeffs.get(0, 0)

    def at_q1(self) -> int:
        return sum(self.coeffs.values())

    def __repr__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for d in sorted(self.coeffs):
            c = self.coeffs[d]
            if d == 0:
                bits.append(str(c))
            elif d == 1:
                bits.append(f"{c}*q" if c != 1 else "q")
            else:
                bits.append(f"{c}*q^{d}" if c != 1 else f"q^{d}")
        return " + ".join(bits)


class GenFun:
    """Sparse map from length-n exponent vectors to q-polynomials."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        self.terms: dict[tuple[int, ...], QPoly] = {}
        for exps, poly in (terms or {}).items():
            if poly:
                if len(exps) != n:
                    raise ValueError(f"exponent vector {exps} is not length {n}")
                self.terms[tuple(exps)] = poly

    def add_term(self, exps, poly: QPoly):
        exps = tuple(exps)
        acc = self.terms.get(exps, QPoly.zero()) + poly
        if acc:
            self.terms[exps] = acc
        else:
            self.terms.pop(exps, None)

    def coefficient(self, exps) -> QPoly:
        return self.terms.get(tuple(exps), QPoly.zero())

    def __add__(self, other: "GenFun") -> "GenFun":
        assert self.n == other.n
        out = GenFun(self.n, dict(self.terms))
        for exps, poly in other.terms.items():
            out.add_term(exps, poly)
        return out

    def __sub__(self, other: "GenFun") -> "GenFun":
        assert self.n == other.n
        out = GenFun(self.n, dict(self.terms))
        for exps, poly in other.terms.items():
            out.add_term(exps, -poly)
        return out

    def scaled(self, poly: QPoly) -> "GenFun":
        return GenFun(self.n, {e: p * poly for e, p in self.terms.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GenFun) and self.n == other.n and self.terms == other.terms
        )

    def __bool__(self) -> bool:
        return bool(self.terms)

    def at_q0(self) -> "GenFun":
        return GenFun(
            self.n,
            {e: QPoly({0: p.at_q0()}) for e, p in self.terms.items() if p.at_q0()},
        )

    def at_x1(self) -> QPoly:
        acc = QPoly.zero()
        for poly in self.terms.values():
            acc = acc + poly
        return acc

    def is_symmetric(self) -> bool:
        for exps, poly in self.terms.items():
            rep = tuple(sorted(exps, reverse=True))
            if self.terms.get(rep, QPoly.zero()) != poly:
                return False
        return True

    def is_quasisymmetric(self) -> bool:
        packed: dict[tuple[int, ...], QPoly] = {}
        for exps, poly in self.terms.items():
            packed.setdefault(compress(exps), poly)
            if packed[compress(exps)] != poly:
                return False
        return True

    def __repr__(self):
        bits = [f"({poly})*x^{list(exps)}" for exps, poly in sorted(self.terms.items())]
        return " + ".join(bits) if bits else "0"


# ---------------------------------------------------------------------------
# generating functions from multiline queue enumeration


@lru_cache(maxsize=4096)
def _mlq_data(lam: Partition, n: int):
    """All (content, type, maj) triples over the shape-lam queues on n columns."""
    return tuple(
        (content_monomial(m), mlq_type(m), maj(m)) for m in enumerate_mlq(lam, n)
    )


def genfun_P(lam, n: int) -> GenFun:
    """q-Whittaker generating function: sum of q^maj x^content over the shape."""
    lam = tuple(lam)
    out = GenFun(n)
    for cont, _, mj in _mlq_data(lam, n):
        out.add_term(cont, QPoly.q_power(mj))
    return out


def genfun_f(alpha) -> GenFun:
    """ASEP polynomial: the type-alpha slice, in len(alpha) variables."""
    alpha = tuple(alpha)
    n = len(alpha)
    out = GenFun(n)
    for cont, typ, mj in _mlq_data(sort_composition(alpha), n):
        if typ == alpha:
            out.add_term(cont, QPoly.q_power(mj))
    return out


def genfun_G(gamma, n: int) -> GenFun:
    """Quasisymmetric slice: queues whose strong type equals gamma."""
    gamma = tuple(gamma)
    out = GenFun(n)
    for cont, typ, mj in _mlq_data(sort_composition(gamma), n):
        if compress(typ) == gamma:
            out.add_term(cont, QPoly.q_power(mj))
    return out


def genfun_schur(lam, n: int) -> GenFun:
    """Schur function as the nonwrapping (maj = 0) generating function."""
    lam = tuple(lam)
    out = GenFun(n)
    for cont, _, mj in _mlq_data(lam, n):
        if mj == 0:
            out.add_term(cont, QPoly.one())
    return out


def genfun_atom(alpha, n: int | None = None) -> GenFun:
    """Demazure atom: nonwrapping queues of type alpha."""
    alpha = tuple(alpha)
    if n is None:
        n = len(alpha)
    if n != len(alpha):
        alpha = alpha + (0,) * (n - len(alpha))
    out = GenFun(n)
    for cont, typ, mj in _mlq_data(sort_composition(alpha), n):
        if mj == 0 and typ == alpha:
            out.add_term(cont, QPoly.one())
    return out


def genfun_qschur(gamma, n: int) -> GenFun:
    """Quasisymmetric Schur function: nonwrapping queues of strong type gamma."""
    gamma = tuple(gamma)
    out = GenFun(n)
    for cont, typ, mj in _mlq_data(sort_composition(gamma), n):
        if mj == 0 and compress(typ) == gamma:
            out.add_term(cont, QPoly.one())
    return out


# ---------------------------------------------------------------------------
# Kostka–Foulkes polynomials


def kostka_foulkes(lam, mu) -> QPoly:
    """Charge generating polynomial over SSYT(lam, mu)."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise SizeError(f"|{lam}| != |{mu}|")
    out = QPoly.zero()
    for t in enumerate_ssyt(lam, mu):
        out = out + QPoly.q_power(charge(t))
    return out


def kostka_foulkes_via_mlq(lam, mu) -> QPoly:
    """Independent route: maj sums over collapse preimages of a straight queue.

    K_{lam,mu}(q) equals the maj generating function of the queues of shape
    mu' collapsing to the straight queue of content lam'.
    """
    from .collapse import collapse

    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise SizeError(f"|{lam}| != |{mu}|")
    target_alpha = conjugate(lam)
    n = max(lam[0] if lam else 0, mu[0] if mu else 0)
    if n == 0:
        return QPoly.one()
    target = straight_mlq(target_alpha, n)
    out = QPoly.zero()
    for m in enumerate_mlq(conjugate(mu), n):
        if collapse(m).nonwrap == target.trim():
            out = out + QPoly.q_power(maj(m))
    return out


# ---------------------------------------------------------------------------
# expansions


@dataclass
class Expansion:
    """Coefficients of a generating function in a positive basis."""

    basis: str  # schur | atom | qschur
    coefficients: dict[tuple[int, ...], QPoly] = field(default_factory=dict)

    def __eq__(self, other):
        return (
            isinstance(other, Expansion)
            and self.basis == other.basis
            and self.coefficients == other.coefficients
        )

    def nonneg(self) -> bool:
        return all(p.is_nonnegative() for p in self.coefficients.values())


def _pad(v, n: int) -> tuple[int, ...]:
    return tuple(v) + (0,) * (n - len(v))


def _compare(kind: str, theorem: dict, eliminated: dict, context: str) -> Expansion:
    if theorem != eliminated:
        only_t = {k: v for k, v in theorem.items() if eliminated.get(k) != v}
        only_e = {k: v for k, v in eliminated.items() if theorem.get(k) != v}
        raise TheoremViolationError(
            f"{context}: charge formula and elimination disagree; "
            f"formula-side {only_t}, elimination-side {only_e}"
        )
    return Expansion(kind, dict(theorem))


def expand_in_schur(lam, n: int) -> Expansion:
    """Schur expansion of the q-Whittaker generating function."""
    lam = tuple(lam)
    lam_c = conjugate(lam)
    if lam_c and n < lam_c[0]:
        from .errors import TooFewColumnsError

        raise TooFewColumnsError(f"need {lam_c[0]} columns, got {n}")
    k = sum(lam)

    theorem: dict[tuple[int, ...], QPoly] = {}
    for mu in partitions_of(k):
        if len(mu) > n or not dominates(lam, mu):
            continue
        coeff = QPoly.zero()
        for t in enumerate_ssyt(conjugate(mu), lam_c):
            coeff = coeff + QPoly.q_power(charge(t))
        if coeff:
            theorem[mu] = coeff

    remainder = genfun_P(lam, n)
    eliminated: dict[tuple[int, ...], QPoly] = {}
    for mu in sorted(partitions_of(k), reverse=True):
        if len(mu) > n:
            continue
        c = remainder.coefficient(_pad(mu, n))
        if c:
            eliminated[mu] = c
            remainder = remainder - genfun_schur(mu, n).scaled(c)
    if remainder:
        raise TheoremViolationError(f"schur elimination residue for {lam}: {remainder}")
    return _compare("schur", theorem, eliminated, f"expand_in_schur({lam}, n={n})")


def _prefix_key(beta, n: int) -> tuple[int, ...]:
    return prefix_sums(_pad(beta, n))


def expand_in_atoms(alpha) -> Expansion:
    """Demazure atom expansion of the ASEP polynomial, both routes compared."""
    from .collapse import CollapsePair, uncollapse

    alpha = tuple(alpha)
    n = len(alpha)
    lam = sort_composition(alpha)
    k = sum(alpha)

    theorem: dict[tuple[int, ...], QPoly] = {}
    for nu in partitions_of(k):
        if len(nu) > n or not dominates(lam, nu):
            continue
        tableaux = list(enumerate_ssyt(conjugate(nu), conjugate(lam)))
        if not tableaux:
            continue
        for beta in rearrangements(nu, n):
            m_beta = straight_mlq(beta, n)
            coeff = QPoly.zero()
            for q_tab in tableaux:
                preimage = uncollapse(CollapsePair(m_beta, q_tab))
                pre_type = _pad(mlq_type(preimage), n)
                if pre_type == alpha:
                    coeff = coeff + QPoly.q_power(charge(q_tab))
            if coeff:
                theorem[beta] = coeff

    remainder = genfun_f(alpha)
    eliminated: dict[tuple[int, ...], QPoly] = {}
    guard = 0
    while remainder:
        guard += 1
        if guard > 100000:
            raise TheoremViolationError(f"atom elimination diverged for {alpha}")
        beta = min(remainder.terms, key=lambda e: _prefix_key(e, n))
        c = remainder.coefficient(beta)
        eliminated[beta] = c
        remainder = remainder - genfun_atom(beta, n).scaled(c)
    return _compare("atom", theorem, eliminated, f"expand_in_atoms({alpha})")


def _qschur_candidates(k: int, lam: Partition, n: int):
    """Strong compositions of k sorting below lam, in elimination order."""
    from .combinat import strong_compositions_of

    cands = [
        tau
        for tau in strong_compositions_of(k)
        if len(tau) <= n and dominates(lam, sort_composition(tau))
    ]
    # bigger dominance class first, then prefix-lex ascending within a class
    return sorted(cands, key=lambda t: (tuple(-x for x in sort_composition(t)), _prefix_key(t, n)))


def expand_in_qschur(gamma, n: int) -> Expansion:
    """Quasisymmetric Schur expansion of the quasisymmetric slice."""
    from .collapse import CollapsePair, uncollapse

    gamma = tuple(gamma)
    lam = sort_composition(gamma)
    if n < len(gamma):
        from .errors import TooFewColumnsError

        raise TooFewColumnsError(f"need {len(gamma)} columns, got {n}")
    k = sum(gamma)

    def theorem_coeff(tau, cols: int) -> QPoly:
        m_tau = straight_mlq(tau, cols)
        coeff = QPoly.zero()
        for q_tab in enumerate_ssyt(conjugate(sort_composition(tau)), conjugate(lam)):
            preimage = uncollapse(CollapsePair(m_tau, q_tab))
            if compress(mlq_type(preimage)) == gamma:
                coeff = coeff + QPoly.q_power(charge(q_tab))
        return coeff

    theorem: dict[tuple[int, ...], QPoly] = {}
    for tau in _qschur_candidates(k, lam, n):
        coeff = theorem_coeff(tau, len(tau))
        again = theorem_coeff(tau, len(tau) + 1)
        if coeff != again:
            raise TheoremViolationError(
                f"qschur coefficient K_[{gamma},{tau}] depends on column count: "
                f"{coeff} vs {again}"
            )
        if coeff:
            theorem[tau] = coeff

    remainder = genfun_G(gamma, n)
    eliminated: dict[tuple[int, ...], QPoly] = {}
    for tau in _qschur_candidates(k, lam, n):
        c = remainder.coefficient(_pad(tau, n))
        if c:
            eliminated[tau] = c
            remainder = remainder - genfun_qschur(tau, n).scaled(c)
    if remainder:
        raise TheoremViolationError(f"qschur elimination residue for {gamma}: {remainder}")
    return _compare("qschur", theorem, eliminated, f"expand_in_qschur({gamma}, n={n})")
