"""
Verification suites for the Lie-algebra and group identities.
"""

import itertools
import random
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from loguru import logger

from src.exceptions import IdentityViolation
from src.services.modarith import matrix_rank_mod_p, mod_pow
from .algebra import adjoint_action, bracket, commutator
from .lifting import (
    adjustment_matrix,
    filtration_commutator,
    filtration_commutator_check,
    random_ad_element,
    random_gsp4,
    random_matrix,
    similitude_adjust,
)
from .matrices import omega, similitude
from .models import AdBasis, AdElement, BracketTableReport, LieCheckReport, RingMatrix, RootConstant

Root = Tuple[int, int]


def _bullets(p: int) -> Dict[str, Callable[[], bool]]:
    def x(delta: Root) -> AdElement:
        return AdElement.root(p, delta)

    def times(k: int, delta: Root) -> RingMatrix:
        return x(delta).matrix.scale(k)

    return {
        "[X(1,1),X(-1,-1)] = diag(1,1,-1,-1)": lambda: bracket(x((1, 1)), x((-1, -1))).matrix
        == RingMatrix.diag((1, 1, -1, -1), p),
        "[X(1,-1),X(-1,1)] = diag(1,-1,-1,1)": lambda: bracket(x((1, -1)), x((-1, 1))).matrix
        == RingMatrix.diag((1, -1, -1, 1), p),
        "[X(1,1),X(1,-1)] = -2X(2,0)": lambda: bracket(x((1, 1)), x((1, -1))).matrix == times(-2, (2, 0)),
        "[X(-1,-1),X(-1,1)] = 2X(-2,0)": lambda: bracket(x((-1, -1)), x((-1, 1))).matrix == times(2, (-2, 0)),
        "[X(1,1),X(-1,1)] = -2X(0,2)": lambda: bracket(x((1, 1)), x((-1, 1))).matrix == times(-2, (0, 2)),
        "[X(-1,-1),X(1,-1)] = 2X(0,-2)": lambda: bracket(x((-1, -1)), x((1, -1))).matrix == times(2, (0, -2)),
    }


def default_bracket_samples(p: int, extra: int, rng: random.Random) -> List[Tuple[int, int]]:
    """All (a, b) with a != b for p <= 7; otherwise fixed samples plus random ones."""
    if p <= 7:
        return [(a, b) for a in range(p) for b in range(p) if a != b]
    samples = [(1, 0), (0, 1), (1, 2), (1, p - 1)]
    while len(samples) < 4 + extra:
        a, b = rng.randrange(p), rng.randrange(p)
        if a != b:
            samples.append((a, b))
    return samples


def verify_bracket_table(p: int, samples: Optional[Iterable[Tuple[int, int]]] = None) -> BracketTableReport:
    """Check the bracket bullets and [w, X_delta] = (d1 a + d2 b) X_delta.

    Raises:
        IdentityViolation: With the failing bullet.
    """
    if samples is None:
        samples = default_bracket_samples(p, 0, random.Random(p))
    bullets: Dict[str, bool] = {}
    for name, check in _bullets(p).items():
        if not check():
            raise IdentityViolation(name, p)
        bullets[name] = True

    constants: List[RootConstant] = []
    vanishing: List[RootConstant] = []
    t1, t2 = AdElement.basis(p, "t1"), AdElement.basis(p, "t2")
    if not bracket(t1, t2).matrix.is_zero():
        raise IdentityViolation("[t1, t2] = 0", p)
    for a, b in samples:
        w = AdElement.from_coords(p, [a, b] + [0] * 8)
        for delta in AdBasis.ROOTS:
            x = AdElement.root(p, delta)
            c = (delta[0] * a + delta[1] * b) % p
            if bracket(w, x).matrix != x.matrix.scale(c):
                raise IdentityViolation(f"[w,X{delta}] = (d1 a + d2 b) X{delta} at (a,b)=({a},{b})", p)
            entry = RootConstant(a=a, b=b, delta=delta, c=c)
            constants.append(entry)
            if c == 0 and (a - b) % p and abs(delta[0]) == 1:
                vanishing.append(entry)

    if vanishing:
        logger.info(f"p={p}: {len(vanishing)} vanishing constants on X(+-1,+-1) with a != b")
    return BracketTableReport(p=p, bullets=bullets, constants=constants, vanishing=vanishing)


def eigenvalue_table_check(p: int, samples: int, rng: random.Random) -> bool:
    """adjoint_action scales X_delta by c^(d1 a + d2 b) and fixes the torus."""
    n = p - 1
    torus = [AdElement.basis(p, "t1"), AdElement.basis(p, "t2")]
    roots = {delta: AdElement.root(p, delta) for delta in AdBasis.ROOTS}
    for _ in range(samples):
        c = rng.randrange(1, p)
        alpha, beta = rng.randrange(n), rng.randrange(n)
        for t in torus:
            if adjoint_action(c, alpha, beta, t) != t:
                return False
        for (d1, d2), x in roots.items():
            eigenvalue = mod_pow(c, (d1 * alpha + d2 * beta) % n, p)
            if adjoint_action(c, alpha, beta, x).matrix != x.matrix.scale(eigenvalue):
                return False
    return True


def grading_check(p: int) -> bool:
    """[X_d, X_d'] is supported on d + d' (the torus when d' = -d)."""
    roots = AdBasis.ROOTS
    for d in roots:
        x = AdElement.root(p, d)
        for name, weight in (("t1", d[0]), ("t2", d[1])):
            if bracket(AdElement.basis(p, name), x).matrix != x.matrix.scale(weight):
                return False
        for e in roots:
            coords = bracket(x, AdElement.root(p, e)).coords
            target = (d[0] + e[0], d[1] + e[1])
            if target == (0, 0):
                allowed = {0, 1}
            elif target in roots:
                allowed = {2 + roots.index(target)}
            else:
                allowed = set()
            if any(c for i, c in enumerate(coords) if i not in allowed):
                return False
    return True


def jacobi_check(p: int) -> bool:
    """Jacobi identity on basis triples, antisymmetry on basis pairs."""
    basis = AdBasis(p=p).elements()
    for x, y in itertools.product(basis, repeat=2):
        if commutator(x, y) != -commutator(y, x):
            return False
    for x, y, z in itertools.product(basis, repeat=3):
        total = commutator(x, commutator(y, z)) + commutator(y, commutator(z, x)) + commutator(z, commutator(x, y))
        if not total.is_zero():
            return False
    return True


def basis_rank(p: int) -> int:
    return matrix_rank_mod_p([[x for row in b.entries for x in row] for b in AdBasis(p=p).elements()], p)


def omega_check(p: int) -> bool:
    """omega vanishes on sp4, omega(Id) = 2, and E12 + E21 is outside gsp4."""
    if omega(RingMatrix.identity(p)) != 2 % p:
        return False
    if any(omega(b) != 0 for b in AdBasis(p=p).elements()):
        return False
    return omega(RingMatrix.from_units([(0, 1, 1), (1, 0, 1)], p)) is None


def multiplicative_check(p: int, samples: int, rng: random.Random, max_level: int = 3) -> bool:
    """nu(MN) = nu(M) nu(N) on random GSp4 elements."""
    for _ in range(samples):
        m = rng.randint(1, max_level)
        a, b = random_gsp4(p, m, rng), random_gsp4(p, m, rng)
        nu_a, nu_b, nu_ab = similitude(a), similitude(b), similitude(a @ b)
        if None in (nu_a, nu_b, nu_ab) or nu_ab != nu_a * nu_b % (p ** m):
            return False
    return True


def filtration_trials(p: int, trials: int, rng: random.Random, max_level: int = 3) -> Tuple[bool, bool]:
    """Random rounds of the commutator congruence.

    Returns (all congruences hold, commutator independent of S and T).
    """
    congruent = independent = True
    for _ in range(trials):
        l, m = rng.randint(1, max_level), rng.randint(1, max_level)
        precision = l + m + 1
        c, d = random_ad_element(p, rng), random_ad_element(p, rng)
        S, T = random_matrix(p, precision, rng), random_matrix(p, precision, rng)
        if not filtration_commutator_check(c, d, S, T, l, m):
            congruent = False
            logger.warning(f"p={p}: congruence fails at l={l}, m={m}")
        zero = RingMatrix.zero(p, precision)
        if filtration_commutator(c, d, S, T, l, m) != filtration_commutator(c, d, zero, zero, l, m):
            independent = False
    return congruent, independent


def similitude_adjust_trials(p: int, trials: int, rng: random.Random, max_level: int = 3) -> bool:
    """similitude_adjust hits psi, preserves R mod p^m, and s is the only exponent that works."""
    for _ in range(trials):
        m = rng.randint(1, max_level)
        k = m + 1
        R = random_gsp4(p, k, rng)
        nu = similitude(R)
        psi = nu * (1 + rng.randrange(p) * p ** m) % (p ** k)
        s, adjusted = similitude_adjust(R, psi)
        if similitude(adjusted) != psi or adjusted.at_precision(m) != R.at_precision(m):
            return False
        a = adjustment_matrix(p, m)
        power = RingMatrix.identity(p, k)
        hits = []
        for candidate in range(p):
            if similitude(power @ R) == psi:
                hits.append(candidate)
            power = power @ a
        if hits != [s]:
            return False
    return True


def run_lie_suite(
    p: int,
    trials: int,
    seed: int,
    max_level: int = 3,
    eigen_samples: int = 100,
    bracket_samples: int = 50,
    adjust_trials: Optional[int] = None,
) -> LieCheckReport:
    """Every identity check for one prime, driven by one seeded generator."""
    rng = random.Random(seed)
    rank = basis_rank(p)
    table = verify_bracket_table(p, default_bracket_samples(p, bracket_samples, rng))
    eigen_ok = eigenvalue_table_check(p, eigen_samples, rng)
    grading_ok = grading_check(p)
    jacobi_ok = jacobi_check(p)
    omega_ok = omega_check(p)
    multiplicative_ok = multiplicative_check(p, min(trials, 100) or 1, rng, max_level)
    congruent, independent = filtration_trials(p, trials, rng, max_level)
    adjust_ok = similitude_adjust_trials(p, adjust_trials if adjust_trials is not None else min(trials, 100), rng, max_level)

    checks = {
        "basis_rank": rank == 10,
        "eigen_table": eigen_ok,
        "grading": grading_ok,
        "jacobi": jacobi_ok,
        "omega": omega_ok,
        "multiplicative": multiplicative_ok,
        "filtration": congruent,
        "filtration_independent": independent,
        "similitude_adjust": adjust_ok,
    }
    failures = [name for name, ok in checks.items() if not ok]
    notes = None
    if table.vanishing:
        notes = [
            f"[w, X(+-1,+-1)] constant a+b or a-b vanishes mod {p} for {len(table.vanishing)} "
            "sampled (a, b) with a != b"
        ]
    if failures:
        logger.error(f"p={p}: lie suite failures {failures}")
    else:
        logger.info(f"p={p}: lie suite passed ({trials} filtration trials)")

    return LieCheckReport(
        p=p,
        trials=trials,
        seed=seed,
        basis_rank=rank,
        bracket_table=table,
        eigen_table_passed=eigen_ok,
        grading_passed=grading_ok,
        jacobi_passed=jacobi_ok,
        omega_passed=omega_ok,
        multiplicative_passed=multiplicative_ok,
        filtration_passed=congruent,
        filtration_independent=independent,
        similitude_adjust_passed=adjust_ok,
        passed=not failures,
        failures=failures,
        notes=notes,
    )
