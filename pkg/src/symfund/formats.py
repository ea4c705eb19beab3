"""Text, JSON and LaTeX renderings, and the expression parser used by the CLI."""
from __future__ import annotations

import json
import re
from fractions import Fraction

from .partition import from_multiplicity, is_partition, normalize
from .splethysm import SLabeledVector
from .symfun import PowerVector, SchurVector, power_to_schur, product


class ExpressionError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def to_json_obj(v: SchurVector | SLabeledVector | PowerVector) -> dict:
    terms = []
    for key, c in v.sorted_items():
        if isinstance(v, SLabeledVector):
            alpha, label = key
            entry = {"partition": list(alpha), "num": str(c.numerator), "den": str(c.denominator), "label": label}
        elif isinstance(v, PowerVector):
            entry = {"partition": list(from_multiplicity(key)), "num": str(c.numerator), "den": str(c.denominator)}
        else:
            entry = {"partition": list(key), "num": str(c.numerator), "den": str(c.denominator)}
        terms.append(entry)
    return {"terms": terms}


def from_json_obj(obj: dict, labeled: bool | None = None) -> SchurVector | SLabeledVector:
    """Inverse of ``to_json_obj`` for Schur and labeled vectors.

    An empty term list is read as a Schur vector unless ``labeled`` says otherwise.
    """
    terms = obj["terms"]
    if labeled is None:
        labeled = any("label" in t for t in terms)
    items = []
    for t in terms:
        alpha = tuple(t["partition"])
        c = Fraction(int(t["num"]), int(t["den"]))
        items.append((((alpha, t["label"]) if labeled else alpha), c))
    return SLabeledVector(items) if labeled else SchurVector(items)


def to_json(v, **extra) -> str:
    obj = to_json_obj(v)
    obj.update(extra)
    return json.dumps(obj, sort_keys=False)


def from_json(text: str, labeled: bool | None = None):
    return from_json_obj(json.loads(text), labeled)


def _latex_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return rf"\frac{{{c.numerator}}}{{{c.denominator}}}"


def to_latex(v: SchurVector | SLabeledVector | PowerVector) -> str:
    out = []
    for key, c in v.sorted_items():
        if isinstance(v, SLabeledVector):
            alpha, label = key
            symbol = (rf"s_{{{','.join(map(str, alpha))}}} \cdot " if alpha else "") + f"{label}^s"
        elif isinstance(v, PowerVector):
            symbol = rf"p_{{{','.join(map(str, from_multiplicity(key)))}}}" if key else ""
        else:
            symbol = rf"s_{{{','.join(map(str, key))}}}" if key else ""
        mag = abs(c)
        if not symbol:
            body = _latex_coeff(mag)
        elif mag == 1:
            body = symbol
        else:
            body = f"{_latex_coeff(mag)} {symbol}"
        if not out:
            out.append(body if c > 0 else "-" + body)
        else:
            out.append((" + " if c > 0 else " - ") + body)
    return "".join(out) if out else "0"


def render(v, fmt: str = "text", **extra) -> str:
    if fmt == "json":
        return to_json(v, **extra)
    if fmt == "latex":
        return to_latex(v)
    return v.to_text()


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<basis>[sp])\[(?P<parts>[^\]]*)\]|(?P<op>[-+*/()]))")


class _Parser:
    """expr := term (('+'|'-') term)* ; term := factor ('*' factor)* ;
    factor := '-' factor | number ('/' number)? | s[..] | p[..] | '(' expr ')'"""

    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m:
                at = pos + len(text[pos:]) - len(text[pos:].lstrip())
                if text[at : at + 2] in ("s[", "p["):
                    raise ExpressionError("missing ']'", at)
                raise ExpressionError(f"unexpected character {text[at]!r}", at)
            start = pos + len(m.group(0)) - len(m.group(0).lstrip())
            if m.group("num") is not None:
                self.tokens.append(("num", m.group("num"), start))
            elif m.group("basis") is not None:
                self.tokens.append((m.group("basis"), m.group("parts"), start))
            else:
                self.tokens.append(("op", m.group("op"), start))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("end", "", len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self) -> SchurVector:
        value = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ExpressionError(f"unexpected {val!r}", pos)
        return value

    def expr(self) -> SchurVector:
        value = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            _, op, _ = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> SchurVector:
        value = self.factor()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            value = product(value, self.factor())
        return value

    def factor(self) -> SchurVector:
        kind, val, pos = self.take()
        if kind == "op" and val == "-":
            return -self.factor()
        if kind == "op" and val == "(":
            value = self.expr()
            k2, v2, p2 = self.take()
            if (k2, v2) != ("op", ")"):
                raise ExpressionError("expected ')'", p2)
            return value
        if kind == "num":
            c = Fraction(int(val))
            if self.peek()[:2] == ("op", "/"):
                self.take()
                k2, v2, p2 = self.take()
                if k2 != "num":
                    raise ExpressionError("expected a denominator", p2)
                if int(v2) == 0:
                    raise ExpressionError("division by zero", p2)
                c /= int(v2)
            return SchurVector({(): c})
        if kind in ("s", "p"):
            text = val.strip()
            try:
                parts = tuple(int(t) for t in text.split(",")) if text else ()
            except ValueError:
                raise ExpressionError(f"bad partition {val!r}", pos) from None
            if kind == "s":
                if not is_partition(parts):
                    raise ExpressionError(f"not a partition: {val!r}", pos)
                return SchurVector({parts: 1})
            if any(x < 1 for x in parts):
                raise ExpressionError(f"power-sum indices must be positive: {val!r}", pos)
            mult = [0] * (max(parts) if parts else 0)
            for x in normalize(parts):
                mult[x - 1] += 1
            return power_to_schur(PowerVector({tuple(mult): 1}))
        if kind == "end":
            raise ExpressionError("unexpected end of input", pos)
        raise ExpressionError(f"unexpected {val!r}", pos)


def parse_expression(text: str) -> SchurVector:
    """Parse e.g. ``2*s[3,1] - 1/2*p[2,1] + 1`` into a Schur vector."""
    return _Parser(text).parse()
