"""
Sparse integer polynomials in x, y, z, t.

Terms are kept as {exponent tuple over (x, y, z, t): coefficient}.
Substitution and rational identities go through sympy.
"""
import re
from typing import Dict, Iterable, Optional, Tuple

import sympy

VARIABLES = ("x", "y", "z", "t")
SYMBOLS = sympy.symbols(" ".join(VARIABLES))
# Term order when printing: by degree with z weighted as xy, then by the exponent of z, x, y, t.
PRINT_WEIGHTS = (1, 1, 2, 1)
PRINT_PRIORITY = (2, 0, 1, 3)

Exponent = Tuple[int, int, int, int]

_TERM = re.compile(r"([+-]?)(\d*)((?:[xyzt](?:\^\d+)?)*)")
_FACTOR = re.compile(r"([xyzt])(?:\^(\d+))?")


class CountPolynomial:
    """
    Args:
        terms: Mapping from exponent tuples (length 4, order x, y, z, t) to coefficients
        variables: Declared variables, used for display and substitution
    """

    def __init__(self, terms: Optional[Dict[Exponent, int]] = None, variables: Iterable[str] = VARIABLES):
        self.variables = tuple(v for v in VARIABLES if v in tuple(variables))
        self.terms: Dict[Exponent, int] = {}
        for exp, coeff in (terms or {}).items():
            exp = tuple(int(e) for e in exp) + (0,) * (4 - len(exp))
            if coeff:
                self.terms[exp] = self.terms.get(exp, 0) + int(coeff)
        self.terms = {e: c for e, c in self.terms.items() if c}

    @classmethod
    def monomial(cls, coeff: int = 1, variables: Iterable[str] = VARIABLES, **powers) -> "CountPolynomial":
        exp = tuple(int(powers.get(v, 0)) for v in VARIABLES)
        return cls({exp: coeff}, variables)

    @classmethod
    def parse(cls, text: str, variables: Optional[Iterable[str]] = None) -> "CountPolynomial":
        """Read strings such as "xz+4z+4y", "x^2+3x+3" or "t-1"."""
        text = text.replace(" ", "").replace("**", "^").replace("*", "")
        if text in ("", "0"):
            return cls({}, variables or VARIABLES)
        terms: Dict[Exponent, int] = {}
        used = set()
        pos = 0
        while pos < len(text):
            match = _TERM.match(text, pos)
            if not match or match.end() == pos:
                raise ValueError(f"Cannot parse polynomial {text!r} at position {pos}")
            sign, digits, factors = match.groups()
            if not digits and not factors:
                raise ValueError(f"Empty term in polynomial {text!r}")
            coeff = int(digits) if digits else 1
            if sign == "-":
                coeff = -coeff
            exp = [0, 0, 0, 0]
            for var, power in _FACTOR.findall(factors):
                exp[VARIABLES.index(var)] += int(power) if power else 1
                used.add(var)
            key = tuple(exp)
            terms[key] = terms.get(key, 0) + coeff
            pos = match.end()
        return cls(terms, variables or (used or VARIABLES))

    @classmethod
    def from_sympy(cls, expr, variables: Iterable[str] = VARIABLES) -> "CountPolynomial":
        expr = sympy.expand(expr)
        if expr == 0:
            return cls({}, variables)
        poly = sympy.Poly(expr, *SYMBOLS)
        return cls({exp: int(c) for exp, c in poly.terms()}, variables)

    def to_sympy(self):
        return sum((c * sympy.Mul(*[s ** e for s, e in zip(SYMBOLS, exp)]) for exp, c in self.terms.items()),
                   sympy.Integer(0))

    def substitute(self, variables: Iterable[str] = VARIABLES, **values) -> "CountPolynomial":
        """Substitute polynomials (sympy expressions or CountPolynomials) for variables."""
        mapping = {}
        for name, value in values.items():
            if isinstance(value, CountPolynomial):
                value = value.to_sympy()
            mapping[SYMBOLS[VARIABLES.index(name)]] = value
        return CountPolynomial.from_sympy(self.to_sympy().subs(mapping, simultaneous=True), variables)

    def __call__(self, **values):
        """Evaluate at numbers; variables left out stay symbolic."""
        mapping = {SYMBOLS[VARIABLES.index(name)]: sympy.nsimplify(value) for name, value in values.items()}
        result = self.to_sympy().subs(mapping, simultaneous=True)
        return int(result) if result.is_Integer else result

    def coefficient(self, **powers) -> int:
        exp = tuple(int(powers.get(v, 0)) for v in VARIABLES)
        return self.terms.get(exp, 0)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.terms.values())

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def __eq__(self, other) -> bool:
        if isinstance(other, str):
            other = CountPolynomial.parse(other)
        if isinstance(other, int):
            other = CountPolynomial({(0, 0, 0, 0): other})
        return isinstance(other, CountPolynomial) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "CountPolynomial") -> "CountPolynomial":
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            terms[exp] = terms.get(exp, 0) + c
        return CountPolynomial(terms, set(self.variables) | set(other.variables))

    def __str__(self) -> str:
        if not self.terms:
            return "0"

        def order(exp):
            return (-sum(w * e for w, e in zip(PRINT_WEIGHTS, exp)),) + tuple(-exp[i] for i in PRINT_PRIORITY)

        out = []
        for exp in sorted(self.terms, key=order):
            c = self.terms[exp]
            mono = "".join(v if e == 1 else f"{v}^{e}" for v, e in zip(VARIABLES, exp) if e)
            body = str(abs(c)) if not mono else (mono if abs(c) == 1 else f"{abs(c)}{mono}")
            sign = "-" if c < 0 else "+"
            out.append((sign, body))
        text = "".join(f"{s}{b}" for s, b in out)
        return text[1:] if text.startswith("+") else text

    def __repr__(self) -> str:
        return f"CountPolynomial({str(self)!r})"
