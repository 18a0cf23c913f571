"""Module: Lemma suites

Every structural fact the permutation proofs rest on, checked by enumeration
at a concrete parameter. Failures become report lines, never exceptions.
"""

import logging
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from permpoly.exceptions import PermPolyError
from permpoly.engine.perm_check import is_permutation, permutes_subset
from permpoly.families.conjectures import CONJ_PRIME, conj1_map, conj2_map
from permpoly.families.known_examples import EXAMPLES
from permpoly.families.trace_family import (
    TRACE_PRIME,
    TraceFamilyParams,
    gamma_condition_set,
    invert_trace_pp,
    trace_exponent,
    trace_field,
)
from permpoly.fields.field_ops import (
    has_root_exhaustive,
    in_subfield,
    is_square,
    is_square_many,
    norm,
    quad_discriminant_irreducible,
    sqrt,
)
from permpoly.fields.galois_field import FieldCtx, FieldElement
from permpoly.maps.dense import DensePolynomial
from permpoly.maps.trace_map import TraceMap
from permpoly.views.subgroup_view import (
    check_partition,
    check_sum_product_system,
    full_star_view,
    group_closure_failures,
    omega_split,
    square_class_split,
)

LOG = logging.getLogger(__name__)

SUITES = ("conj1", "conj2", "trace")

INVERT_FULL_LIMIT = 100
INVERT_SAMPLE = 200
INVERT_SEED = 20170601

# (label, a(c), b(c), constant, h(c)): z^2 + a z + b has discriminant constant * h^2.
# Coefficient lists are constant term first, integers mod 5.
DISCRIMINANT_IDENTITIES: Tuple[Tuple[str, Sequence[int], Sequence[int], int, Sequence[int]], ...] = (
    ("squares-case-1", (-1, -1, -2), (2, 1, -1, 2, -2), 2, (-2, -1, 1)),
    ("squares-case-2", (-1, 1, -2), (2, -1, -1, -2, -2), 2, (-2, 1, 1)),
    ("double-squares-case-1", (2, -1, 1), (-2, -2, -1, -1, 2), 3, (2, 2, 1)),
    ("double-squares-case-2", (2, 1, 1), (-2, 2, -1, 1, 2), 3, (2, -2, 1)),
)

# u^2 + a u + b with the discriminant the case analysis relies on
SUBCASE_QUADRATICS = (("u^2+u+1", 1, 1, 2), ("u^2-2u-1", -2, -1, 3))


@dataclass
class LemmaLine:
    """Data Class: one pass/fail line"""

    name: str
    passed: bool
    detail: str = ""
    count: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        """Method: JSON-ready form"""

        return {"name": self.name, "passed": self.passed, "detail": self.detail, "count": self.count}


@dataclass
class LemmaReport:
    """Data Class: structured result of one suite"""

    suite: str
    parameter: Dict[str, int]
    field: Dict[str, Any]
    lines: List[LemmaLine] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        """Method: every line passed"""

        return all(line.passed for line in self.lines)

    def add(self, name: str, passed: bool, detail: str = "", count: Optional[int] = None) -> None:
        """Method: append one checked line"""

        self.lines.append(LemmaLine(name, bool(passed), detail, count))

    def guarded(self, name: str, check: Callable[[], Tuple[bool, str]]) -> None:
        """Method: run check, turning package errors into a failed line"""

        try:
            passed, detail = check()
        except PermPolyError as error:
            passed, detail = False, f"{type(error).__name__}: {error}"
        self.add(name, passed, detail)

    def to_dict(self) -> Dict[str, Any]:
        """Method: JSON-ready form"""

        return {
            "suite": self.suite,
            "parameter": self.parameter,
            "field": self.field,
            "passed": self.passed,
            "lines": [line.to_dict() for line in self.lines],
        }


def _element(ctx: FieldCtx, number: int) -> FieldElement:
    return FieldElement(ctx, ctx.from_int(number))


def _conj2_suite(k: int) -> LemmaReport:
    q = CONJ_PRIME ** k
    gmap, mu = conj2_map(k, force=True)
    ctx = mu.ctx
    report = LemmaReport("conj2", {"k": k}, ctx.descriptor())

    two, minus_two = _element(ctx, 2), _element(ctx, -2)
    report.add("plus-minus-two-are-squares", is_square(two) and is_square(minus_two), f"in F_{ctx.order}")
    for label, value in (("2", two), ("-2", minus_two)):
        root = sqrt(value)
        in_base = root is not None and in_subfield(root, k) and in_subfield(-root, k)
        detail = f"roots {root.index}, {(-root).index}; y^{q} = y" if root is not None else "no root"
        report.add(f"sqrt({label})-in-F_q", in_base, detail)

    unit_norm = all(norm(x, k).index == 1 for x in mu)
    report.add("mu-is-norm-one-kernel", len(mu) == q + 1 and unit_norm, f"|mu| = {len(mu)}")
    conjugates = ctx.frobenius_many(mu.indices, k)
    report.add("mu-conjugate-is-inverse", bool(np.all(ctx.mul_many(conjugates, mu.indices) == 1)))
    failures = group_closure_failures(mu)
    report.add("mu-is-a-group", not failures, ", ".join(failures) or "closed under product and inverse")

    plus, minus = omega_split(mu)
    partition = check_partition((plus, minus), mu)
    half = (q + 1) // 2
    report.add(
        "omega-partition",
        partition.ok and partition.sizes == (half, half),
        f"sizes {partition.sizes[0]}/{partition.sizes[1]}, disjoint={partition.disjoint}, covers={partition.covers}",
    )

    for label, view in (("omega-plus", plus), ("omega-minus", minus)):
        def closure_check(view=view) -> Tuple[bool, str]:
            result = permutes_subset(gmap, view)
            return bool(result.closure), f"escapee {result.escapee}" if result.escapee is not None else ""

        report.guarded(f"g-maps-{label}-into-itself", closure_check)

    for label, view in (("omega-plus", plus), ("omega-minus", minus)):
        for total in (1, -1):
            count = check_sum_product_system(view, _element(ctx, total), _element(ctx, 1))
            report.add(f"no-solution-xy=1-x+y={total:+d}-in-{label}", count == 0, f"{count} solution(s)", count)

    def conjugate_roots_check() -> Tuple[bool, str]:
        roots = []
        for middle in (1, -1):
            if has_root_exhaustive(_element(ctx, middle), _element(ctx, 1)):
                values = ctx.all_indices()
                evaluated = DensePolynomial.from_ints(ctx, [1, middle, 1]).evaluate_many(values)
                roots.extend(values[evaluated == 0].tolist())
        elements = [FieldElement(ctx, r) for r in roots]
        in_base = all(in_subfield(r, k) for r in elements)
        outside_mu = not any(r in mu for r in elements)
        return in_base and outside_mu, f"{len(roots)} root(s) of u^2+-u+1, all in F_q and outside mu"

    report.guarded("roots-of-u^2+-u+1-avoid-mu", conjugate_roots_check)

    for label, view in (("omega-plus", plus), ("omega-minus", minus)):
        def permutes_check(view=view) -> Tuple[bool, str]:
            result = permutes_subset(gmap, view)
            return result.is_pp, f"witness {result.witness}" if result.witness else f"{result.evals} evaluations"

        report.guarded(f"g-permutes-{label}", permutes_check)

    def theorem_check() -> Tuple[bool, str]:
        result = is_permutation(gmap, mu)
        return result.is_pp, f"|mu| = {len(mu)}, {result.evals} evaluations"

    report.guarded("g-permutes-mu", theorem_check)
    return report


def _discriminant_identity_check(ctx: FieldCtx, identity) -> Tuple[bool, str]:
    _, a_coeffs, b_coeffs, constant, h_coeffs = identity
    cs = ctx.all_indices()
    a_values = DensePolynomial.from_ints(ctx, a_coeffs).evaluate_many(cs)
    b_values = DensePolynomial.from_ints(ctx, b_coeffs).evaluate_many(cs)
    h_values = DensePolynomial.from_ints(ctx, h_coeffs).evaluate_many(cs)
    discriminants = ctx.sub_many(ctx.mul_many(a_values, a_values), ctx.mul_many(ctx.from_int(4), b_values))
    claimed = ctx.mul_many(ctx.from_int(constant), ctx.mul_many(h_values, h_values))
    identity_holds = bool(np.array_equal(discriminants, claimed))
    generic = h_values != 0
    no_roots = not bool(np.any(is_square_many(ctx, discriminants[generic])))
    degenerate = cs[~generic]
    in_prime_field = bool(np.all(ctx.pow_many(degenerate, ctx.p) == degenerate))
    detail = (
        f"identity={identity_holds}, non-square off h=0: {no_roots}, "
        f"h roots {sorted(degenerate.tolist())} in F_{ctx.p}: {in_prime_field}"
    )
    return identity_holds and no_roots and in_prime_field, detail


def _conj1_suite(k: int) -> LemmaReport:
    fmap = conj1_map(k, force=True)
    ctx = fmap.field
    report = LemmaReport("conj1", {"k": k}, ctx.descriptor())

    report.add("two-is-non-square", not is_square(_element(ctx, 2)), f"in F_{ctx.order}")

    def denominator_check() -> Tuple[bool, str]:
        discriminant, irreducible = quad_discriminant_irreducible(_element(ctx, 1), _element(ctx, 2))
        poles = fmap.poles_on(ctx)
        return irreducible and poles.size == 0, f"discriminant {discriminant.index}, {poles.size} pole(s)"

    report.guarded("denominator-x^2+x+2-has-no-roots", denominator_check)

    for name, a, b, expected in SUBCASE_QUADRATICS:
        discriminant, irreducible = quad_discriminant_irreducible(_element(ctx, a), _element(ctx, b))
        rootless = not has_root_exhaustive(_element(ctx, a), _element(ctx, b))
        passed = discriminant.index == ctx.from_int(expected) and irreducible and rootless
        report.add(
            f"{name}-irreducible",
            passed,
            f"discriminant {discriminant.index}, criterion={irreducible}, root search={rootless}",
        )

    for identity in DISCRIMINANT_IDENTITIES:
        report.guarded(
            f"discriminant-{identity[0]}", lambda identity=identity: _discriminant_identity_check(ctx, identity)
        )

    try:
        omega_1, omega_2 = square_class_split(ctx)
    except PermPolyError as error:
        report.add("square-class-partition", False, str(error))
    else:
        partition = check_partition((omega_1, omega_2), full_star_view(ctx))
        half = (ctx.order - 1) // 2
        report.add(
            "square-class-partition",
            partition.ok and partition.sizes == (half, half),
            f"sizes {partition.sizes[0]}/{partition.sizes[1]}",
        )
        for label, view in (("omega-squares", omega_1), ("omega-double-squares", omega_2)):
            def subset_check(view=view) -> Tuple[bool, str]:
                result = permutes_subset(fmap, view)
                return bool(result.closure), f"escapee {result.escapee}" if result.escapee is not None else ""

            def bijection_check(view=view) -> Tuple[bool, str]:
                result = permutes_subset(fmap, view)
                return result.is_pp, f"witness {result.witness}" if result.witness else f"|S| = {len(view)}"

            report.guarded(f"f-maps-{label}-into-itself", subset_check)
            report.guarded(f"f-permutes-{label}", bijection_check)

    def theorem_check() -> Tuple[bool, str]:
        result = is_permutation(fmap, ctx)
        return result.is_pp, f"F_{ctx.order}, {result.evals} evaluations"

    report.guarded("f-permutes-field", theorem_check)
    return report


def _invert_sample(ctx: FieldCtx) -> List[int]:
    if ctx.order <= INVERT_FULL_LIMIT:
        return list(range(ctx.order))
    rng = random.Random(INVERT_SEED)
    return sorted(rng.sample(range(ctx.order), INVERT_SAMPLE))


def _trace_suite(r: int) -> LemmaReport:
    q = TRACE_PRIME ** r
    ctx = trace_field(r)
    k = trace_exponent(r)
    report = LemmaReport("trace", {"r": r}, ctx.descriptor())

    listed = [example for example in EXAMPLES.values() if example.p == TRACE_PRIME and example.base_degree == r and example.n == 2]
    consistent = all(k in example.ks for example in listed)
    report.add("k-formula", consistent, f"k = {k}" + (f", listed {listed[0].ks}" if listed else ""))

    gammas = gamma_condition_set(r)
    report.add("gamma-set-size", len(gammas) == (q - 3) // 2, f"{len(gammas)} value(s), expected {(q - 3) // 2}")
    report.add("gamma-in-F_q", all(ctx.pow(g, q) == g for g in gammas))
    report.add("gamma-excludes-0-and-1", 0 not in gammas and 1 not in gammas)
    if q == 9:
        values = ctx.all_indices()
        cubic = ctx.mul_many(ctx.add_many(values, 1), ctx.sub_many(ctx.sub_many(ctx.mul_many(values, values), values), 1))
        roots = sorted(values[cubic == 0].tolist())
        report.add("gamma-set-is-(g+1)(g^2-g-1)-roots", roots == sorted(gammas), f"roots {roots}")

    maps = [TraceFamilyParams(r, gamma).to_map() for gamma in gammas]
    if maps:
        first = maps[0]
        shifted = TraceMap(ctx, r, (k * q) % (q * q - 1), first.gamma)
        values = ctx.all_indices()
        report.add(
            "k-coset-invariance",
            bool(np.array_equal(first.evaluate_many(values), shifted.evaluate_many(values))),
            f"k={k} vs k*q mod (q^2-1)={shifted.k}",
        )
    verdicts = [is_permutation(tmap, ctx).is_pp for tmap in maps]
    report.add("maps-are-permutations", bool(maps) and all(verdicts), f"{sum(verdicts)}/{len(maps)}", sum(verdicts))

    sample = _invert_sample(ctx)
    failures = 0
    for tmap in maps:
        params = TraceFamilyParams(r, tmap.gamma)
        for a in sample:
            try:
                x = invert_trace_pp(params, FieldElement(ctx, a))
            except PermPolyError:
                failures += 1
                continue
            if tmap.evaluate(x.index) != a:
                failures += 1
    report.add(
        "inverter-round-trip",
        failures == 0 and bool(maps),
        f"{len(sample)} input(s) x {len(maps)} map(s), {failures} failure(s)",
        failures,
    )
    return report


def default_suite(k: Optional[int], r: Optional[int]) -> str:
    """Function: suite implied by the parity of k, or trace when r is given"""

    if r is not None:
        return "trace"
    if k is None:
        raise ValueError("either k or r is required")
    return "conj1" if k % 2 else "conj2"


def run_lemma_suite(suite: str, parameter: int) -> LemmaReport:
    """Function: run one suite ('conj1' / 'conj2' with k, 'trace' with r)"""

    runners: Dict[str, Callable[[int], LemmaReport]] = {
        "conj1": _conj1_suite,
        "conj2": _conj2_suite,
        "trace": _trace_suite,
    }
    if suite not in runners:
        raise ValueError(f"unknown lemma suite {suite!r}, expected one of {SUITES}")
    report = runners[suite](parameter)
    LOG.info(
        "Lemma suite %s(%d): %d/%d line(s) passed",
        suite,
        parameter,
        sum(line.passed for line in report.lines),
        len(report.lines),
    )
    return report
