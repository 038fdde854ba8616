"""
Pipeline driver: Bernoulli tables -> irregularity sets -> pair search -> checks -> reports.
"""

from concurrent.futures import ProcessPoolExecutor, as_completed
from pathlib import Path
from typing import Dict, List, Optional

from loguru import logger
from sympy import primerange

from src.config import Settings, get_settings
from src.exceptions import CountBoundViolation
from src.services.irregularity import (
    IrregularityData,
    compute_sets,
    convention_notes,
    irregular_indices,
    theorem_bound_holds,
)
from src.services.irregularity.eigenspaces import REFERENCE_P, REFERENCE_P_MINUS_I, REFERENCE_PAIR
from src.services.modarith import PrimeContext, load_or_compute, require_odd_prime
from src.services.pairsearch import (
    ExponentPair,
    Lemma54Report,
    condition_123,
    condition_abc,
    count_lower_bound,
    enumerate_valid_pairs,
    find_pair,
    guard_exhaustive,
    i_set,
    line_census,
    p_minus_i,
    verify_lemma54,
)
from src.services.symplectic import LieCheckReport, run_lie_suite
from src.schemas import CountReport, IrregularRow, PairReport, Report
from src.utils.config_loader import LiftConfig

# Second couple named by the p = 37 reference example
REFERENCE_SECOND_PAIR = (1, 6)


def _irregular_row(p: int, cache_dir: Optional[str], verify: bool) -> IrregularRow:
    ctx = load_or_compute(p, cache_dir)
    agree = None
    if verify:
        agree = PrimeContext.build(p, algorithm="worpitzky").bernoulli == ctx.bernoulli
        if not agree:
            logger.error(f"p={p}: Bernoulli oracles disagree")
    irr = compute_sets(ctx)
    return IrregularRow(
        p=p,
        e_p=irr.e_p,
        E=sorted(irr.E),
        irregular_indices=irregular_indices(ctx),
        oracles_agree=agree,
    )


class PipelineOrchestrator:
    def __init__(
        self,
        settings: Optional[Settings] = None,
        config: Optional[LiftConfig] = None,
        cache_dir: Optional[Path] = None,
    ):
        self.settings = settings or get_settings()
        self.config = config or LiftConfig(self.settings.GSP4_CONFIG_PATH)
        self.cache_dir = Path(cache_dir) if cache_dir is not None else self.settings.GSP4_CACHE_DIR

    # --- irregularity ---

    def irregularity(self, p: int) -> IrregularityData:
        return compute_sets(load_or_compute(p, self.cache_dir))

    def irregular_table(self, max_p: int, verify: bool = False) -> List[IrregularRow]:
        """Rows for every odd prime p <= max_p, in increasing order."""
        if max_p < 3:
            raise ValueError(f"max_p must be at least 3, got {max_p}")
        primes = list(primerange(3, max_p + 1))
        cache_dir = str(self.cache_dir)
        workers = self.settings.GSP4_WORKERS

        if workers <= 1 or len(primes) < 2:
            return [_irregular_row(p, cache_dir, verify) for p in primes]

        logger.info(f"Tabulating {len(primes)} primes on {workers} workers")
        rows: Dict[int, IrregularRow] = {}
        with ProcessPoolExecutor(max_workers=workers) as ex:
            futures = {ex.submit(_irregular_row, p, cache_dir, verify): p for p in primes}
            for ft in as_completed(futures):
                rows[futures[ft]] = ft.result()
        return [rows[p] for p in primes]

    # --- reports ---

    def _reference_notes(self, irr: IrregularityData) -> List[str]:
        if irr.p != REFERENCE_P:
            return []
        alpha, beta = REFERENCE_PAIR
        reference = ExponentPair(alpha=alpha, beta=beta, p=irr.p)
        computed = p_minus_i(reference)
        notes = []

        valid = reference.odd and all(condition_123(reference, irr)) and all(condition_abc(reference, irr)[:2])
        enumerated = any(q.as_tuple() == REFERENCE_PAIR for q in enumerate_valid_pairs(irr.p, irr))
        notes.append(
            f"reference pair {REFERENCE_PAIR}: I = {sorted(i_set(reference).elements)}, "
            f"{'passes' if valid else 'fails'} (1)-(3) and (a),(b), "
            f"{'in' if enumerated else 'not in'} the valid-pair enumeration"
        )
        if tuple(computed) != REFERENCE_P_MINUS_I:
            extra = sorted(set(REFERENCE_P_MINUS_I) - set(computed))
            missing = sorted(set(computed) - set(REFERENCE_P_MINUS_I))
            notes.append(
                f"reference example lists p - I{REFERENCE_PAIR} as {list(REFERENCE_P_MINUS_I)}; "
                f"computed {computed} (listed {extra} vs computed {missing})"
            )
        a2, b2 = REFERENCE_SECOND_PAIR
        second = ExponentPair(alpha=a2, beta=b2, p=irr.p)
        ok = all(condition_123(second, irr)) and all(condition_abc(second, irr)[:2])
        notes.append(
            f"reference example candidate {REFERENCE_SECOND_PAIR} "
            f"{'passes' if ok else 'fails'} (a),(b) under E_bar = {sorted(irr.E_bar)}"
        )
        return notes

    def build_report(self, p: int, allow_large: bool = False, strict: Optional[bool] = None) -> Report:
        require_odd_prime(p)
        guard_exhaustive(p, allow_large)
        if strict is None:
            strict = self.config.strict_bound
        irr = self.irregularity(p)
        bound = theorem_bound_holds(irr, strict=strict)

        witness = find_pair(p, irr, allow_large=allow_large)
        census = line_census(p, irr, allow_large=allow_large)
        lemma = verify_lemma54(p, irr, allow_large=allow_large)
        lie = self.lie_check(p, trials=self.config.report_lie_trials, seed=self.config.lie_seed)

        notes = convention_notes(irr) + self._reference_notes(irr)
        if bound and witness is None:
            notes.append(f"non-strict bound holds with equality; lower bound is {census.lower_bound}")
        logger.info(f"p={p}: e={irr.e}, bound={bound}, witness={witness.as_tuple() if witness else None}")

        return Report(
            p=p,
            e_p=irr.e_p,
            e=irr.e,
            E=sorted(irr.E),
            E_star=sorted(irr.E_star),
            E_bar=sorted(irr.E_bar),
            strict_bound=strict,
            bound_holds=bound,
            witness_pair=witness.as_tuple() if witness else None,
            i_set=sorted(i_set(witness).elements) if witness else None,
            p_minus_i_set=p_minus_i(witness) if witness else None,
            valid_pair_count=census.valid_count,
            lower_bound=census.lower_bound,
            lemma54_mismatches=lemma.mismatches,
            lie_checks_passed=lie.passed,
            convention_notes=notes,
        )

    def verify_pair(self, p: int, alpha: int, beta: int) -> PairReport:
        require_odd_prime(p)
        pair = ExponentPair(alpha=alpha, beta=beta, p=p)
        irr = self.irregularity(p)
        c1, c2, c3 = condition_123(pair, irr)
        a, b, c = condition_abc(pair, irr)
        iset = i_set(pair)
        return PairReport(
            p=p,
            alpha=alpha,
            beta=beta,
            alpha_plus_beta_odd=pair.odd,
            condition_1=c1,
            condition_2=c2,
            condition_3=c3,
            condition_a=a,
            condition_b=b,
            condition_c=c,
            hypotheses_hold=pair.odd and c1 and c2 and c3,
            i_set=sorted(iset.elements),
            raw_i=list(iset.raw),
            p_minus_i_set=p_minus_i(pair),
            E=sorted(irr.E),
            E_bar=sorted(irr.E_bar),
            convention_notes=convention_notes(irr),
        )

    def count_pairs(self, p: int, allow_large: bool = False) -> CountReport:
        require_odd_prime(p)
        guard_exhaustive(p, allow_large)
        irr = self.irregularity(p)
        census = line_census(p, irr, allow_large=allow_large)
        bound = count_lower_bound(p, irr.e)
        if census.valid_count < bound:
            raise CountBoundViolation(p, census.valid_count, bound)
        return CountReport(
            p=p,
            e=irr.e,
            bound_holds=theorem_bound_holds(irr, strict=self.config.strict_bound),
            valid_pair_count=census.valid_count,
            lower_bound=census.lower_bound,
            census=census,
        )

    def lemma54(self, p: int, allow_large: bool = False) -> Lemma54Report:
        require_odd_prime(p)
        guard_exhaustive(p, allow_large)
        return verify_lemma54(p, self.irregularity(p), allow_large=allow_large)

    def lie_check(self, p: int, trials: Optional[int] = None, seed: Optional[int] = None) -> LieCheckReport:
        require_odd_prime(p)
        return run_lie_suite(
            p,
            trials=self.config.lie_trials if trials is None else trials,
            seed=self.config.lie_seed if seed is None else seed,
            max_level=self.config.max_level,
            eigen_samples=self.config.eigen_samples,
            bracket_samples=self.config.bracket_samples,
        )
