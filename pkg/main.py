# main.py - Línea de comandos para invariantes de formas binarias
import argparse
import sys
from typing import Dict, List, Optional, Tuple

from pydantic import ValidationError

from config import settings
from invariants.annihilators import (
    OperatorKind,
    apply_power,
    commutator_residual,
    nilpotence_index,
    power_commutator_residual,
)
from invariants.discovery import DiscoveryRequest, DiscoveryStatus, classify, discover
from invariants.errors import ExpressionError, InvariantsError
from invariants.expression import parse
from invariants.logger import logger, set_level
from invariants.polynomial import analyze
from invariants.response_format import (
    analysis_response,
    classification_response,
    decompose_response,
    discovery_response,
    nilpotence_response,
    polynomial_response,
    render,
    transform_response,
    verdict_response,
)
from invariants.transforms import (
    BinaryForm,
    Convention,
    InvarianceMode,
    LinearTransform,
    check_invariance,
    decompose,
    transform_coeffs,
)
from invariants.utils import parse_rational_list

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_EXPRESSION = 3

EXPRESSION_HELP = (
    "Expresiones: a0*a2 - a1^2, 3/2*a0*a4 - (a1 + a2)^2. "
    "El menos unario sólo va delante de literales racionales: escribe -1*a0 o 0 - a0. "
    "Si la expresión empieza por '-', sepárala con '--'. "
    "Valores negativos en --coeffs/--matrix: usa --coeffs=-1,2,3."
)

Response = Tuple[Dict, int]


def _matrix_arg(text: str) -> LinearTransform:
    alpha, beta, gamma, delta = parse_rational_list(text, expected=4)
    return LinearTransform.from_entries(alpha, beta, gamma, delta)


# --- Manejadores de subcomandos ---


def handle_analyze(args) -> Response:
    poly = parse(args.expr, args.n)
    return analysis_response(poly, analyze(poly)), EXIT_OK


def handle_apply(args) -> Response:
    poly = parse(args.expr, args.n)
    kind = OperatorKind(args.op)
    result = apply_power(kind, args.power, poly)
    return polynomial_response("apply", result, op=kind.value, power=args.power), EXIT_OK


def handle_commutator(args) -> Response:
    poly = parse(args.expr, args.n)
    if args.k is None:
        residual = commutator_residual(poly)
        extra = {"k": 1, "which": None}
    else:
        which = OperatorKind(args.which)
        residual = power_commutator_residual(which, args.k, poly)
        extra = {"k": args.k, "which": which.value}
    if not residual.is_zero:
        logger.warning(f"commutator residual is nonzero for {args.expr!r}")
    code = EXIT_OK if residual.is_zero else EXIT_FAILURE
    return polynomial_response("commutator", residual, **extra), code


def handle_verify(args) -> Response:
    poly = parse(args.expr, args.n)
    verdict = check_invariance(poly, args.n, trials=args.trials, seed=args.seed, mode=args.mode)
    return verdict_response(verdict), EXIT_OK if verdict.passed else EXIT_FAILURE


def handle_discover(args) -> Response:
    result = discover(DiscoveryRequest(n=args.n, g=args.degree))
    code = EXIT_OK if result.status is DiscoveryStatus.OK else EXIT_FAILURE
    return discovery_response(result), code


def handle_transform(args) -> Response:
    coeffs = parse_rational_list(args.coeffs, expected=args.n + 1)
    form = BinaryForm(n=args.n, convention=Convention(args.convention), coeffs=coeffs)
    transform = _matrix_arg(args.matrix)
    return transform_response(form, transform, transform_coeffs(form, transform)), EXIT_OK


def handle_decompose(args) -> Response:
    transform = _matrix_arg(args.matrix)
    return decompose_response(transform, decompose(transform)), EXIT_OK


def handle_classify(args) -> Response:
    poly = parse(args.expr, args.n)
    result = classify(poly)
    return classification_response(poly, result), EXIT_OK if result.is_invariant else EXIT_FAILURE


def handle_nilpotence(args) -> Response:
    poly = parse(args.expr, args.n)
    kind = OperatorKind(args.op)
    return nilpotence_response(kind, poly, nilpotence_index(kind, poly)), EXIT_OK


# --- Parser de argumentos ---


def _non_negative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="salida JSON en stdout")

    parser = argparse.ArgumentParser(
        prog="binary-invariants",
        description="Invariantes de formas binarias con aritmética racional exacta.",
        epilog=EXPRESSION_HELP,
    )
    parser.add_argument("--log-level", default=None, help=f"nivel de logging (por defecto {settings.LOG_LEVEL})")
    sub = parser.add_subparsers(dest="command", required=True)
    ops = [k.value for k in OperatorKind]

    p = sub.add_parser("analyze", parents=[common], help="grado, peso y defecto n*g - 2p", epilog=EXPRESSION_HELP)
    p.add_argument("--n", type=_non_negative_int, required=True)
    p.add_argument("expr")
    p.set_defaults(handler=handle_analyze)

    p = sub.add_parser("apply", parents=[common], help="aplica D o Delta (potencia k)", epilog=EXPRESSION_HELP)
    p.add_argument("--op", choices=ops, required=True)
    p.add_argument("--n", type=_non_negative_int, required=True)
    p.add_argument("--power", type=_non_negative_int, default=1)
    p.add_argument("expr")
    p.set_defaults(handler=handle_apply)

    p = sub.add_parser("commutator", parents=[common], help="residuo de las identidades de conmutación", epilog=EXPRESSION_HELP)
    p.add_argument("--n", type=_non_negative_int, required=True)
    p.add_argument("--k", type=_positive_int, default=None)
    p.add_argument("--which", choices=ops, default=OperatorKind.D.value)
    p.add_argument("expr")
    p.set_defaults(handler=handle_commutator)

    p = sub.add_parser("verify", parents=[common], help="comprobación aleatoria exacta de I(a') = d^p I(a)", epilog=EXPRESSION_HELP)
    p.add_argument("--n", type=_non_negative_int, required=True)
    p.add_argument("--trials", type=_positive_int, default=settings.DEFAULT_TRIALS)
    p.add_argument("--seed", type=int, default=settings.DEFAULT_SEED)
    p.add_argument("--mode", choices=[m.value for m in InvarianceMode], default=InvarianceMode.GENERAL.value)
    p.add_argument("expr")
    p.set_defaults(handler=handle_verify)

    p = sub.add_parser("discover", parents=[common], help="base de los invariantes de grado g")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(handler=handle_discover)

    p = sub.add_parser("transform", parents=[common], help="coeficientes tras x = ax'+by', y = cx'+dy'", epilog=EXPRESSION_HELP)
    p.add_argument("--n", type=_non_negative_int, required=True)
    p.add_argument("--convention", choices=[c.value for c in Convention], default=settings.DEFAULT_CONVENTION)
    p.add_argument("--coeffs", required=True, help="c0,...,cN")
    p.add_argument("--matrix", required=True, help="alpha,beta,gamma,delta")
    p.set_defaults(handler=handle_transform)

    p = sub.add_parser("decompose", parents=[common], help="factoriza en escalas y cizallas")
    p.add_argument("--matrix", required=True, help="alpha,beta,gamma,delta")
    p.set_defaults(handler=handle_decompose)

    p = sub.add_parser("classify", parents=[common], help="¿es invariante? (homogéneo, isobárico, ng = 2p, D I = 0)", epilog=EXPRESSION_HELP)
    p.add_argument("--n", type=_non_negative_int, required=True)
    p.add_argument("expr")
    p.set_defaults(handler=handle_classify)

    p = sub.add_parser("nilpotence", parents=[common], help="menor k con op^k P = 0", epilog=EXPRESSION_HELP)
    p.add_argument("--op", choices=ops, required=True)
    p.add_argument("--n", type=_non_negative_int, required=True)
    p.add_argument("expr")
    p.set_defaults(handler=handle_nilpotence)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.log_level:
        set_level(args.log_level)

    try:
        response, code = args.handler(args)
    except ExpressionError as e:
        logger.info(f"Expresión inválida en '{args.command}': {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_EXPRESSION
    except (InvariantsError, ValidationError, ValueError) as e:
        logger.info(f"Argumentos inválidos en '{args.command}': {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except RuntimeError as e:
        logger.error(f"Error operativo en '{args.command}': {e}", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILURE
    except Exception as e:
        logger.error(f"ERROR en '{args.command}': {e}", exc_info=True)
        print("error: internal error", file=sys.stderr)
        return EXIT_FAILURE

    print(render(response, args.json))
    return code


if __name__ == "__main__":
    sys.exit(main())
