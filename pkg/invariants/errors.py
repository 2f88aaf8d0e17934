"""
Jerarquía de excepciones de la librería.
Todas heredan de ValueError para que el código que ya captura ValueError siga funcionando.
"""


class InvariantsError(ValueError):
    """Error base de la librería de invariantes."""


class OrderMismatchError(InvariantsError):
    """Operandos o vectores con distinto orden n."""


class GradingError(InvariantsError):
    """El polinomio no es homogéneo o no es isobárico."""


class SingularTransformError(InvariantsError):
    """Transformación lineal con determinante cero."""


class ExpressionError(InvariantsError):
    """Error al interpretar una expresión; `offset` es la posición en bytes UTF-8."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.message = message
        self.offset = offset


class ExpressionSyntaxError(ExpressionError):
    pass


class VariableIndexError(ExpressionError):
    pass


class ExponentOverflowError(ExpressionError):
    pass
