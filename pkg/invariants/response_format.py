"""
Respuestas estándar de la CLI: cada resultado se devuelve como un dict
{"text": ..., "json": ...} con un texto legible y una carga JSON estable.
Los racionales se serializan como cadenas ("3", "-1/2").
"""

import json
from typing import Dict, List, Sequence

from .annihilators import OperatorKind
from .discovery import DiscoveryResult, DiscoveryStatus, InvariantClassification
from .expression import format_polynomial
from .polynomial import CoeffPolynomial, GradedAnalysis
from .transforms import BinaryForm, ElementaryTransform, InvarianceVerdict, LinearTransform
from .utils import format_rational


def _rationals(values) -> List[str]:
    return [format_rational(v) for v in values]


def _matrix(transform: LinearTransform) -> List[str]:
    return _rationals(transform.entries())


def to_json(payload: Dict) -> str:
    return json.dumps(payload, ensure_ascii=False, indent=2)


def make_standard_response(text: str, payload: Dict) -> Dict:
    return {"text": text, "json": payload}


def analysis_response(poly: CoeffPolynomial, info: GradedAnalysis) -> Dict:
    payload = {
        "n": poly.n,
        "polynomial": format_polynomial(poly),
        "homogeneous": info.homogeneous,
        "degree": info.degree,
        "isobaric": info.isobaric,
        "weight": info.weight,
        "defect": info.defect,
    }
    lines = [
        f"polynomial: {payload['polynomial']}",
        f"homogeneous: {'yes' if info.homogeneous else 'no'}"
        + (f" (degree {info.degree})" if info.homogeneous else ""),
        f"isobaric: {'yes' if info.isobaric else 'no'}"
        + (f" (weight {info.weight})" if info.isobaric else ""),
    ]
    if info.defect is not None:
        lines.append(f"defect n*g - 2p: {info.defect}")
    return make_standard_response("\n".join(lines), payload)


def polynomial_response(command: str, poly: CoeffPolynomial, **extra) -> Dict:
    payload = {"command": command, "n": poly.n, "result": format_polynomial(poly), **extra}
    return make_standard_response(payload["result"], payload)


def nilpotence_response(kind: OperatorKind, poly: CoeffPolynomial, index: int) -> Dict:
    payload = {
        "n": poly.n,
        "op": OperatorKind(kind).value,
        "polynomial": format_polynomial(poly),
        "index": index,
    }
    return make_standard_response(f"{index}", payload)


def verdict_response(verdict: InvarianceVerdict) -> Dict:
    payload = {
        "passed": verdict.passed,
        "mode": verdict.mode.value,
        "n": verdict.n,
        "seed": verdict.seed,
        "trials_requested": verdict.trials_requested,
        "trials_run": verdict.trials_run,
        "degree": verdict.degree,
        "weight": verdict.weight,
        "factor": verdict.factor,
        "reason": verdict.reason,
        "counterexample": None,
    }
    lines = [
        f"{'pass' if verdict.passed else 'fail'}: {verdict.trials_run}/{verdict.trials_requested} trials "
        f"(mode {verdict.mode.value}, seed {verdict.seed}, factor {verdict.factor})"
    ]
    if verdict.reason:
        lines.append(f"reason: {verdict.reason}")
    cx = verdict.counterexample
    if cx is not None:
        payload["counterexample"] = {
            "trial": cx.trial,
            "coeffs": _rationals(cx.coeffs),
            "matrix": _matrix(cx.transform),
            "expected": format_rational(cx.expected),
            "actual": format_rational(cx.actual),
        }
        lines.append(f"counterexample (trial {cx.trial}):")
        lines.append(f"  coeffs: {','.join(_rationals(cx.coeffs))}")
        lines.append(f"  matrix: {','.join(_matrix(cx.transform))}")
        lines.append(f"  I(a') = {format_rational(cx.actual)}, expected {format_rational(cx.expected)}")
    return make_standard_response("\n".join(lines), payload)


def discovery_response(result: DiscoveryResult) -> Dict:
    payload = {
        "status": result.status.value,
        "n": result.n,
        "degree": result.degree,
        "weight": result.weight,
        "monomial_count": result.monomial_count,
        "basis": [format_polynomial(b) for b in result.basis],
    }
    if result.status is DiscoveryStatus.INFEASIBLE_ODD_NG:
        text = f"infeasible: n*g = {result.n * result.degree} is odd"
    else:
        lines = [
            f"order {result.n}, degree {result.degree}, weight {result.weight}: "
            f"dimension {result.dimension} ({result.monomial_count} monomials)"
        ]
        lines.extend(payload["basis"])
        text = "\n".join(lines)
    return make_standard_response(text, payload)


def transform_response(source: BinaryForm, transform: LinearTransform, image: BinaryForm) -> Dict:
    payload = {
        "n": source.n,
        "convention": source.convention.value,
        "coeffs": _rationals(source.coeffs),
        "matrix": _matrix(transform),
        "determinant": format_rational(transform.determinant),
        "result": _rationals(image.coeffs),
    }
    return make_standard_response(",".join(payload["result"]), payload)


def decompose_response(transform: LinearTransform, factors: Sequence[ElementaryTransform]) -> Dict:
    payload = {
        "matrix": _matrix(transform),
        "factors": [
            {
                "kind": f.kind.value,
                "alpha": format_rational(f.alpha),
                "beta": format_rational(f.beta),
                "gamma": format_rational(f.gamma),
                "delta": format_rational(f.delta),
            }
            for f in factors
        ],
    }
    text = " * ".join(str(f) for f in factors) if factors else "identity"
    return make_standard_response(text, payload)


def classification_response(poly: CoeffPolynomial, result: InvariantClassification) -> Dict:
    info = result.analysis
    payload = {
        "n": result.n,
        "polynomial": format_polynomial(poly),
        "degree": info.degree,
        "weight": info.weight,
        "defect": info.defect,
        "balanced": result.balanced,
        "d_annihilated": result.d_annihilated,
        "delta_annihilated": result.delta_annihilated,
        "is_invariant": result.is_invariant,
        "reason": result.reason,
    }
    verdict = "invariant" if result.is_invariant else f"not an invariant: {result.reason}"
    lines = [
        verdict,
        f"D P = 0: {'yes' if result.d_annihilated else 'no'}",
        f"Delta P = 0: {'yes' if result.delta_annihilated else 'no'}",
    ]
    return make_standard_response("\n".join(lines), payload)


def render(response: Dict, as_json: bool) -> str:
    return to_json(response["json"]) if as_json else response["text"]
