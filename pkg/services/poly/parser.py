"""
Polynomial expression parser and canonical formatter.

    poly := sign? term (('+'|'-') term)*
    term := number ('*'? 't' ('^' integer)?)? ('/' number)?
          | 't' ('^' integer)? ('/' number)?

@Time ： 2026-10-18
"""
import re
from dataclasses import dataclass

from services.poly.polynomial import Polynomial
from utils.errors import PolynomialParseError

MAX_EXPONENT = 64

_TOKEN_SPEC = [
    ("NUMBER", r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"),
    ("IDENT", r"[A-Za-z_][A-Za-z_0-9]*"),
    ("OP", r"[+\-*/^]"),
    ("SKIP", r"\s+"),
    ("BAD", r"."),
]
_TOKEN_RE = re.compile("|".join(f"(?P<{name}>{pattern})" for name, pattern in _TOKEN_SPEC))


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


def tokenize(expr):
    tokens = []
    for match in _TOKEN_RE.finditer(expr):
        kind = match.lastgroup
        text = match.group()
        if kind == "SKIP":
            continue
        if kind == "BAD":
            raise PolynomialParseError(f"unexpected character {text!r}", position=match.start(), expr=expr)
        if kind == "IDENT" and text != "t":
            raise PolynomialParseError(f"unknown identifier {text!r}", position=match.start(), expr=expr)
        tokens.append(Token(kind, text, match.start()))
    tokens.append(Token("EOF", "", len(expr)))
    return tokens


class _Parser:
    def __init__(self, expr):
        self.expr = expr
        self.tokens = tokenize(expr)
        self.index = 0

    @property
    def current(self):
        return self.tokens[self.index]

    def advance(self):
        token = self.tokens[self.index]
        self.index += 1
        return token

    def accept_op(self, symbol):
        if self.current.kind == "OP" and self.current.text == symbol:
            return self.advance()
        return None

    def fail(self, message, token=None):
        token = token or self.current
        raise PolynomialParseError(message, position=token.position, expr=self.expr)

    def parse(self):
        if self.current.kind == "EOF":
            self.fail("empty expression")
        coefficients = {}
        sign = 1.0
        if self.accept_op("-"):
            sign = -1.0
        else:
            self.accept_op("+")
        while True:
            power, value = self.parse_term()
            coefficients[power] = coefficients.get(power, 0.0) + sign * value
            if self.current.kind == "EOF":
                break
            if self.accept_op("+"):
                sign = 1.0
            elif self.accept_op("-"):
                sign = -1.0
            else:
                self.fail(f"expected '+' or '-', found {self.current.text!r}")
        size = max(coefficients) + 1
        coeffs = [0.0] * size
        for power, value in coefficients.items():
            coeffs[power] = value
        return Polynomial(coeffs)

    def parse_term(self):
        coefficient = 1.0
        power = 0
        saw_number = False
        if self.current.kind == "NUMBER":
            coefficient = float(self.advance().text)
            saw_number = True
            if self.accept_op("*"):
                if self.current.kind != "IDENT":
                    self.fail("expected 't' after '*'")
        if self.current.kind == "IDENT":
            self.advance()
            power = 1
            if self.accept_op("^"):
                token = self.current
                if token.kind != "NUMBER" or not token.text.isdigit():
                    self.fail("expected a nonnegative integer exponent")
                self.advance()
                power = int(token.text)
                if power > MAX_EXPONENT:
                    self.fail(f"exponent exceeds {MAX_EXPONENT}", token)
        elif not saw_number:
            self.fail("expected a term")
        if self.accept_op("/"):
            token = self.current
            if token.kind != "NUMBER":
                self.fail("expected a number after '/'")
            self.advance()
            divisor = float(token.text)
            if divisor == 0.0:
                self.fail("division by zero", token)
            coefficient /= divisor
        return power, coefficient


def parse_poly(expr: str) -> Polynomial:
    """
    Parse text such as "t^2 - 1" or "3t - 2t + t^3" into a canonical Polynomial.
    :param expr: expression in the variable t
    :raises PolynomialParseError: with the character position of the problem
    """
    if not isinstance(expr, str):
        raise PolynomialParseError("expression must be text", position=0, expr=str(expr))
    return _Parser(expr).parse()


def _format_number(value):
    if value == int(value) and abs(value) < 1e16:
        return str(int(value))
    return repr(value)


def format_poly(q: Polynomial) -> str:
    """Canonical text form, descending powers; parse_poly(format_poly(q)) == q."""
    if q.is_zero():
        return "0"
    parts = []
    for power in range(q.degree, -1, -1):
        coefficient = q.coeffs[power]
        if coefficient == 0.0:
            continue
        magnitude = abs(coefficient)
        if power == 0:
            body = _format_number(magnitude)
        else:
            variable = "t" if power == 1 else f"t^{power}"
            body = variable if magnitude == 1.0 else f"{_format_number(magnitude)}{variable}"
        if not parts:
            parts.append(f"-{body}" if coefficient < 0 else body)
        else:
            parts.append(f"- {body}" if coefficient < 0 else f"+ {body}")
    return " ".join(parts)
