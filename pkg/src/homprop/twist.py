"""Twisting constructions and the partial classification machinery.

The central construction: over a normal presentation whose hom-ification
covered every unit occurrence, any endomorphism ``beta`` that is a morphism
of a Hom-structure twists it into another one by

    twisted(y) = beta^{(x) q} . lam(y)        (q = out-arity of y)

for every generator, twisting generators included.  Special cases: the
derived sequence (twist repeatedly by the structure's own twisting map) and
the Yau twist (start from an ordinary algebra and an endomorphism; the
twisting generators are all interpreted as ``beta``).

Every construction re-verifies its output against the target presentation
even though the underlying theorem guarantees it; a verification failure
with satisfied preconditions aborts loudly, because it can only be a bug.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .algebra import (
    CheckReport,
    MorphismCheck,
    StructureMap,
    check_algebra,
    is_morphism,
    structure_map,
)
from .linalg import (
    LinearMap,
    char_poly,
    compose,
    is_injective,
    is_invertible,
    inverse_map,
    maps_equal,
    matrix_power,
    tensor_power,
)
from .presentation import (
    HomPlan,
    HomPresentation,
    NormalityReport,
    Presentation,
    homify_multiplicative,
    homify_typed,
    is_normal,
    theta_min,
)


class NormalityViolated(ValueError):
    def __init__(self, report: NormalityReport):
        self.report = report
        super().__init__("the underlying presentation is not normal")


class BetaNotMorphism(ValueError):
    def __init__(self, check: MorphismCheck):
        self.check = check
        super().__init__(
            f"beta is not a morphism; first failing generator: {check.witness_generator!r}"
        )


class SNotI(ValueError):
    def __init__(self) -> None:
        super().__init__(
            "the hom-ification plan left some units untouched (S != I); "
            "the twisting theorem does not apply"
        )


class NotAnAlgebra(ValueError):
    def __init__(self, report: CheckReport):
        self.report = report
        super().__init__("the given structure map does not satisfy the presentation")


class PreconditionFailed(ValueError):
    def __init__(self, message: str, difference: Optional[LinearMap] = None):
        self.difference = difference
        super().__init__(message)


@dataclass(frozen=True)
class TwistPreconditions:
    normality: NormalityReport
    beta_morphism: MorphismCheck
    covers_all_units: bool

    def all_hold(self) -> bool:
        return (
            self.normality.all_normal()
            and self.beta_morphism.holds
            and self.covers_all_units
        )


@dataclass(frozen=True)
class TwistResult:
    twisted: StructureMap
    verified: CheckReport
    preconditions: TwistPreconditions


def _twist_all_generators(lam: StructureMap, beta: LinearMap) -> StructureMap:
    new = {}
    for g in lam.symbols():
        new[g] = compose(tensor_power(beta, g.out_arity), lam[g])
    return structure_map(lam.space, new)


def _verified_result(
    twisted: StructureMap, target: Presentation, pre: TwistPreconditions
) -> TwistResult:
    verified = check_algebra(twisted, target)
    if pre.all_hold() and not verified.all_passed():
        raise AssertionError(
            "internal error: twisting preconditions hold but the twisted "
            "structure fails verification"
        )
    return TwistResult(twisted, verified, pre)


def twist(lam: StructureMap, beta: LinearMap, p_h: HomPresentation) -> TwistResult:
    """Twist a Hom-structure by an endomorphism that is a morphism of it.

    Requires: the underlying presentation is normal, the plan replaced every
    unit occurrence (refused otherwise), and ``beta`` is a morphism of
    ``lam``.  Every generator of the hom-ified presentation is twisted.
    """
    if not isinstance(p_h, HomPresentation):
        raise TypeError("twist needs a hom-ified presentation")
    if not p_h.covers_all_units():
        raise SNotI()
    normality = is_normal(p_h.base)
    if not normality.all_normal():
        raise NormalityViolated(normality)
    given = check_algebra(lam, p_h)
    if not given.all_passed():
        raise NotAnAlgebra(given)
    beta_check = is_morphism(beta, lam, lam, p_h)
    if not beta_check.holds:
        raise BetaNotMorphism(beta_check)
    pre = TwistPreconditions(normality, beta_check, True)
    return _verified_result(_twist_all_generators(lam, beta), p_h, pre)


def derived_sequence(
    lam: StructureMap, p_mh: HomPresentation, n: int
) -> TwistResult:
    """The n-th derived structure of a multiplicative Hom-algebra: generators
    twisted by the n-th power of the twisting map, which itself becomes its
    (n+1)-st power."""
    if p_mh.kind != "multiplicative":
        raise TypeError("derived sequences live over multiplicative hom-ifications")
    if n < 1:
        raise ValueError(f"derived power must be >= 1, got {n}")
    given = check_algebra(lam, p_mh)
    if not given.all_passed():
        raise NotAnAlgebra(given)
    alpha = p_mh.twisting[0]
    a = lam[alpha]
    beta = matrix_power(a, n)
    new = {}
    for g in p_mh.base.signature.generators:
        new[g] = compose(tensor_power(beta, g.out_arity), lam[g])
    new[alpha] = matrix_power(a, n + 1)
    twisted = structure_map(lam.space, new)
    normality = is_normal(p_mh.base)
    beta_check = is_morphism(beta, lam, lam, p_mh)
    pre = TwistPreconditions(normality, beta_check, True)
    return _verified_result(twisted, p_mh, pre)


def yau_twist(
    lam: StructureMap,
    beta: LinearMap,
    p: Presentation,
    plan: Union[HomPlan, str, None] = "multiplicative",
) -> tuple[TwistResult, HomPresentation]:
    """From an ordinary algebra and an endomorphism of it, produce the
    hom-structure with every generator twisted by ``beta`` and every
    twisting generator interpreted as ``beta``.

    ``plan`` is ``"multiplicative"`` (default) or a typed plan covering I.
    Returns the result together with the target hom-ified presentation.
    """
    given = check_algebra(lam, p)
    if not given.all_passed():
        raise NotAnAlgebra(given)
    normality = is_normal(p)
    if not normality.all_normal():
        raise NormalityViolated(normality)
    beta_check = is_morphism(beta, lam, lam, p)
    if not beta_check.holds:
        raise BetaNotMorphism(beta_check)
    if plan == "multiplicative" or plan is None:
        target: HomPresentation = homify_multiplicative(p)
    else:
        target = homify_typed(p, plan)
        if not target.covers_all_units():
            raise SNotI()
    new = {}
    for g in p.signature.generators:
        new[g] = compose(tensor_power(beta, g.out_arity), lam[g])
    for sym in target.twisting:
        new[sym] = beta
    twisted = structure_map(lam.space, new)
    pre = TwistPreconditions(normality, beta_check, True)
    return _verified_result(twisted, target, pre), target


def transport_morphism(
    f: LinearMap,
    lam: StructureMap,
    beta: LinearMap,
    lam2: StructureMap,
    beta2: LinearMap,
    p_h: HomPresentation,
) -> bool:
    """If f intertwines two Hom-structures and f.beta = beta'.f, then f also
    intertwines the twisted structures.  Returns that final check, which
    must come out true when the preconditions hold."""
    f_check = is_morphism(f, lam, lam2, p_h)
    if not f_check.holds:
        raise PreconditionFailed(
            f"f is not a morphism of the untwisted structures "
            f"(generator {f_check.witness_generator!r})",
            f_check.difference,
        )
    for name, b, l in (("beta", beta, lam), ("beta'", beta2, lam2)):
        c = is_morphism(b, l, l, p_h)
        if not c.holds:
            raise BetaNotMorphism(c)
    left = compose(f, beta)
    right = compose(beta2, f)
    if not maps_equal(left, right):
        raise PreconditionFailed(
            "f . beta != beta' . f", left.add(right.scale(-1))
        )
    twisted1 = _twist_all_generators(lam, beta)
    twisted2 = _twist_all_generators(lam2, beta2)
    result = is_morphism(f, twisted1, twisted2, p_h)
    if not result.holds:
        raise AssertionError(
            "internal error: morphism transport preconditions hold but the "
            "twisted morphism check failed"
        )
    return result.holds


@dataclass(frozen=True)
class IsoWitnessResult:
    is_witness: bool
    certified_equivalence: bool  # beta' injective, so witness <=> isomorphism
    gamma_morphism: MorphismCheck
    commutes: bool
    direct_twisted_check: Optional[MorphismCheck]
    direct_twisted_check_inverse: Optional[MorphismCheck]


def iso_witness_check(
    gamma: LinearMap,
    lam: StructureMap,
    beta: LinearMap,
    lam2: StructureMap,
    beta2: LinearMap,
    p: Presentation,
    plan: Optional[HomPlan] = None,
) -> IsoWitnessResult:
    """Certify that gamma witnesses an isomorphism of Yau-twisted structures.

    A witness is an invertible algebra morphism with gamma.beta = beta'.gamma.
    When beta' is injective this is equivalent to the twisted structures
    being isomorphic; otherwise the witness is only sufficient.  The twisted
    structures are additionally compared directly, and a true witness with a
    failing direct check is an internal error.
    """
    if not is_invertible(gamma):
        raise ValueError("gamma must be invertible")
    g_check = is_morphism(gamma, lam, lam2, p)
    g_inv_check = is_morphism(inverse_map(gamma), lam2, lam, p)
    commutes = maps_equal(compose(gamma, beta), compose(beta2, gamma))
    witness = g_check.holds and g_inv_check.holds and commutes
    certified = is_injective(beta2)

    the_plan = plan if plan is not None else theta_min(p.labels)
    target = homify_typed(p, the_plan)
    t1 = {g: compose(tensor_power(beta, g.out_arity), lam[g])
          for g in p.signature.generators}
    t2 = {g: compose(tensor_power(beta2, g.out_arity), lam2[g])
          for g in p.signature.generators}
    for sym in target.twisting:
        t1[sym] = beta
        t2[sym] = beta2
    twisted1 = structure_map(lam.space, t1)
    twisted2 = structure_map(lam2.space, t2)
    direct = is_morphism(gamma, twisted1, twisted2, target)
    direct_inv = is_morphism(inverse_map(gamma), twisted2, twisted1, target)
    if witness and not (direct.holds and direct_inv.holds):
        raise AssertionError(
            "internal error: an isomorphism witness fails the direct check "
            "on the twisted structures"
        )
    return IsoWitnessResult(witness, certified, g_check, commutes, direct, direct_inv)


def conjugacy_invariant(beta: LinearMap) -> tuple:
    """Characteristic polynomial coefficients (1, c_{n-1}, ..., c_0): a
    computable invariant separating conjugacy classes of automorphisms."""
    if beta.degree != 0:
        raise ValueError("conjugacy invariants are for degree-0 endomorphisms")
    return char_poly(beta)
