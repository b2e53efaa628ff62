"""The presentation language, its printer, and result serialization.

The source format is line-oriented:

    # comment
    field Q            | field GF 7
    gens x:1 y:1
    skew q(x,y)=3      (bare ``skew`` marks a skew ring with all defaults 1)
    rel x*x*y - 2*x*y*x
    adjoin t:2
    tensor {
      ...block...
    } {
      ...block...
    }

Polynomials use ``*`` for products, ``^`` for powers, ``[f,g]`` for
commutators, and integer or ``a/b`` coefficients.  Parse errors carry a
line, a column, and the set of tokens that were legal at that point.
"""

from __future__ import annotations

import json
from typing import Callable

from .errors import GalgSyntaxError, InhomogeneousRelation, UnknownGenerator
from .fields import GF, QQ, Field, Scalar
from .freealg import GeneratorSet, NcPoly, Word, deglex_key, generators
from .linalg import Subspace
from .presentations import (
    Presentation,
    SkewMatrix,
    adjoin_central,
    free_presentation,
    quotient,
    skew_ring,
    tensor,
)

# ======================================================================
# polynomial expressions
# ======================================================================


class _PolyParser:
    """Recursive-descent parser for the polynomial expression grammar."""

    def __init__(self, text: str, line: int, col0: int, gens: GeneratorSet, field: Field):
        self.text = text
        self.line = line
        self.col0 = col0
        self.gens = gens
        self.field = field
        self.pos = 0

    def error(self, message: str, expected: tuple[str, ...] = ()) -> GalgSyntaxError:
        return GalgSyntaxError(message, self.line, self.col0 + self.pos, expected)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.error(f"unexpected {self.peek()!r}" if self.peek() else "unexpected end of input", (ch,))
        self.pos += 1

    def parse(self) -> NcPoly:
        poly = self.expr()
        if self.peek():
            raise self.error(f"trailing input {self.peek()!r}", ("+", "-", "*", "^", "end of line"))
        return poly

    def expr(self) -> NcPoly:
        poly = self.term()
        while True:
            c = self.peek()
            if c == "+":
                self.pos += 1
                poly = poly + self.term()
            elif c == "-":
                self.pos += 1
                poly = poly - self.term()
            else:
                return poly

    def term(self) -> NcPoly:
        poly = self.factor()
        while self.peek() == "*":
            self.pos += 1
            poly = poly * self.factor()
        return poly

    def factor(self) -> NcPoly:
        if self.peek() == "-":
            self.pos += 1
            return -self.factor()
        poly = self.atom()
        while self.peek() == "^":
            self.pos += 1
            exp = self.integer()
            poly = poly.power(exp)
        return poly

    def atom(self) -> NcPoly:
        c = self.peek()
        if c == "(":
            self.pos += 1
            poly = self.expr()
            self.take(")")
            return poly
        if c == "[":
            self.pos += 1
            f = self.expr()
            self.take(",")
            g = self.expr()
            self.take("]")
            return f.commutator(g)
        if c.isdigit():
            value = self.scalar()
            return NcPoly.monomial(self.gens, self.field, (), value)
        if c.isalpha() or c == "_":
            name = self.name()
            try:
                idx = self.gens.index(name)
            except KeyError:
                raise UnknownGenerator(
                    f"unknown generator {name!r} at line {self.line}, column {self.col0 + self.pos}"
                ) from None
            return NcPoly.generator(self.gens, self.field, idx)
        raise self.error(
            f"unexpected {c!r}" if c else "unexpected end of input",
            ("number", "generator", "(", "[", "-"),
        )

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an integer", ("integer",))
        return int(self.text[start : self.pos])

    def scalar(self) -> Scalar:
        num = self.integer()
        if self.pos < len(self.text) and self.text[self.pos] == "/":
            self.pos += 1
            den = self.integer()
            return self.field.div(self.field.from_int(num), self.field.from_int(den))
        return self.field.from_int(num)

    def name(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        return self.text[start : self.pos]


def parse_poly(text: str, gens: GeneratorSet, field: Field, line: int = 1, col0: int = 0) -> NcPoly:
    return _PolyParser(text, line, col0, gens, field).parse()


def _scalar_literal(field: Field, value: Scalar) -> str:
    """Scalar as it appears in source text (residues are plain decimals)."""
    return str(value)


def format_poly(poly: NcPoly) -> str:
    """Render in the source grammar; powers of repeated letters are collapsed."""
    if poly.is_zero():
        return "0"
    names = poly.gens.names
    parts: list[str] = []
    for w in sorted(poly.terms, key=lambda w: deglex_key(poly.gens, w), reverse=True):
        c = poly.terms[w]
        factors = []
        i = 0
        while i < len(w):
            j = i
            while j < len(w) and w[j] == w[i]:
                j += 1
            factors.append(names[w[i]] if j - i == 1 else f"{names[w[i]]}^{j - i}")
            i = j
        word = "*".join(factors)
        negative = not poly.field.is_finite and c < 0
        mag = -c if negative else c
        coeff = _scalar_literal(poly.field, mag)
        if word:
            body = word if coeff == "1" else f"{coeff}*{word}"
        else:
            body = coeff
        if not parts:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(parts)


# ======================================================================
# presentation files
# ======================================================================


def _strip_comment(text: str) -> str:
    k = text.find("#")
    return text if k < 0 else text[:k]


def _parse_field(tokens: list[str], lineno: int) -> Field:
    if tokens == ["Q"]:
        return QQ
    if len(tokens) == 2 and tokens[0] == "GF" and tokens[1].isdigit():
        return GF(int(tokens[1]))
    raise GalgSyntaxError("malformed field declaration", lineno, 1, ("Q", "GF <prime>"))


def _find_block(lines: list[tuple[int, str]], start: int) -> tuple[list[tuple[int, str]], int, bool]:
    """Collect lines of one brace block starting after an opening line.

    Returns (block lines, index after the closing line, whether the closing
    line also opened the next block via ``} {``).
    """
    depth = 1
    block: list[tuple[int, str]] = []
    i = start
    while i < len(lines):
        lineno, text = lines[i]
        stripped = text.strip()
        if stripped in ("}", "} {"):
            depth -= 1
            if depth == 0:
                return block, i + 1, stripped == "} {"
            block.append((lineno, text))
        else:
            if stripped.endswith("{"):
                depth += 1
            block.append((lineno, text))
        i += 1
    raise GalgSyntaxError("unterminated block", lines[start - 1][0], 1, ("}",))


def _parse_lines(lines: list[tuple[int, str]], inherited_field: Field | None) -> Presentation:
    field: Field | None = None
    gens: GeneratorSet | None = None
    gens_lineno = 0
    skew_flag = False
    skew_params: list[tuple[str, str, str, int]] = []
    rels: list[tuple[int, str]] = []
    adjoins: list[tuple[str, int]] = []
    tensor_parts: tuple[Presentation, Presentation] | None = None

    i = 0
    while i < len(lines):
        lineno, text = lines[i]
        tokens = text.split()
        head = tokens[0]
        if head == "field":
            parsed = _parse_field(tokens[1:], lineno)
            if field is not None:
                raise GalgSyntaxError("duplicate field declaration", lineno, 1)
            if inherited_field is not None and parsed != inherited_field:
                raise GalgSyntaxError("block field differs from the enclosing field", lineno, 1)
            field = parsed
        elif head == "gens":
            if gens is not None:
                raise GalgSyntaxError("duplicate gens declaration", lineno, 1)
            names, degrees = [], []
            for tok in tokens[1:]:
                if ":" in tok:
                    name, _, deg = tok.partition(":")
                    if not deg.isdigit() or int(deg) < 1:
                        raise GalgSyntaxError(
                            f"bad generator degree in {tok!r}", lineno, 1, ("name:positive-degree",)
                        )
                    names.append(name)
                    degrees.append(int(deg))
                else:
                    names.append(tok)
                    degrees.append(1)
            if not names:
                raise GalgSyntaxError("gens needs at least one generator", lineno, 1)
            try:
                gens = generators(names, degrees)
            except ValueError as exc:
                raise GalgSyntaxError(str(exc), lineno, 1) from None
            gens_lineno = lineno
        elif head == "skew":
            skew_flag = True
            rest = text.split(None, 1)[1] if len(tokens) > 1 else ""
            if rest:
                # one assignment: q(a,b)=<scalar>
                try:
                    inner = rest.strip()
                    if not (inner.startswith("q(") and "=" in inner):
                        raise ValueError
                    args, _, value = inner.partition("=")
                    a, b = args[2:].rstrip(")").split(",")
                    skew_params.append((a.strip(), b.strip(), value.strip(), lineno))
                except ValueError:
                    raise GalgSyntaxError(
                        "malformed skew assignment", lineno, 1, ("q(a,b)=<scalar>",)
                    ) from None
        elif head == "rel":
            rels.append((lineno, text.split(None, 1)[1] if len(tokens) > 1 else ""))
        elif head == "adjoin":
            if len(tokens) != 2 or ":" not in tokens[1]:
                raise GalgSyntaxError("malformed adjoin", lineno, 1, ("adjoin name:count",))
            name, _, count = tokens[1].partition(":")
            if not count.isdigit():
                raise GalgSyntaxError("adjoin count must be an integer", lineno, 1)
            adjoins.append((name, int(count)))
        elif head == "tensor":
            if tensor_parts is not None:
                raise GalgSyntaxError("only one tensor construction per presentation", lineno, 1)
            if text.split()[-1] != "{":
                raise GalgSyntaxError("tensor must open a block", lineno, len(text), ("{",))
            block1, j, chained = _find_block(lines, i + 1)
            if chained:
                block2, j, _ = _find_block(lines, j)
            else:
                if j >= len(lines) or lines[j][1].strip() != "{":
                    where = lines[j - 1][0]
                    raise GalgSyntaxError("tensor needs a second block", where, 1, ("{",))
                block2, j, _ = _find_block(lines, j + 1)
            eff = field or inherited_field
            left = _parse_lines(block1, eff)
            right = _parse_lines(block2, eff)
            tensor_parts = (left, right)
            i = j
            continue
        else:
            raise GalgSyntaxError(
                f"unknown directive {head!r}",
                lineno,
                1,
                ("field", "gens", "skew", "rel", "adjoin", "tensor"),
            )
        i += 1

    effective_field = field or inherited_field
    if effective_field is None:
        raise GalgSyntaxError("no field declared", lines[0][0] if lines else 1, 1, ("field",))

    if tensor_parts is not None:
        if gens is not None or skew_flag:
            raise GalgSyntaxError(
                "a tensor presentation cannot also declare gens or skew", gens_lineno or 1, 1
            )
        pres = tensor(*tensor_parts)
    else:
        if gens is None:
            raise GalgSyntaxError("no generators declared", lines[-1][0] if lines else 1, 1, ("gens",))
        if skew_flag:
            upper: dict[tuple[int, int], Scalar] = {}
            for a, b, value_text, lineno in skew_params:
                try:
                    ia, ib = gens.index(a), gens.index(b)
                except KeyError as exc:
                    raise UnknownGenerator(f"unknown generator {exc.args[0]!r} at line {lineno}") from None
                if ia == ib:
                    raise GalgSyntaxError("skew pairs need two distinct generators", lineno, 1)
                value = _parse_scalar_literal(effective_field, value_text, lineno)
                key, val = ((ia, ib), value) if ia < ib else ((ib, ia), effective_field.inv(value))
                if key in upper:
                    raise GalgSyntaxError(f"duplicate skew assignment for pair {a},{b}", lineno, 1)
                upper[key] = val
            pres = skew_ring(
                SkewMatrix.from_upper(effective_field, len(gens), upper),
                degrees=gens.degrees,
                names=gens.names,
            )
        else:
            pres = free_presentation(effective_field, gens)

    extra = []
    for lineno, src in rels:
        if not src.strip():
            raise GalgSyntaxError("empty relation", lineno, 1, ("polynomial",))
        poly = parse_poly(src, pres.gens, effective_field, line=lineno, col0=len("rel ") + 1)
        if not poly.is_homogeneous():
            raise InhomogeneousRelation(
                f"relation at line {lineno} mixes degrees {sorted(poly.degrees())}"
            )
        extra.append(poly)
    if extra:
        pres = quotient(pres, extra)
    for name, count in adjoins:
        pres = adjoin_central(pres, count, name=name)
    return pres


def parse_presentation(source: str) -> Presentation:
    lines = []
    for lineno, raw in enumerate(source.splitlines(), start=1):
        text = _strip_comment(raw).rstrip()
        if text.strip():
            lines.append((lineno, text))
    if not lines:
        raise GalgSyntaxError("empty presentation source", 1, 1, ("field", "gens"))
    return _parse_lines(lines, None)


def _parse_scalar_literal(field: Field, text: str, lineno: int) -> Scalar:
    try:
        negative = text.startswith("-")
        body = text[1:] if negative else text
        if "/" in body:
            num, den = body.split("/", 1)
            value = field.div(field.from_int(int(num)), field.from_int(int(den)))
        else:
            value = field.from_int(int(body))
        return field.neg(value) if negative else value
    except (ValueError, ZeroDivisionError):
        raise GalgSyntaxError(f"bad scalar literal {text!r}", lineno, 1, ("integer", "a/b")) from None


def print_presentation(pres: Presentation) -> str:
    """Render a presentation back into the source grammar."""
    field = pres.field
    out = []
    out.append("field Q" if not field.is_finite else f"field GF {field.characteristic}")
    out.append("gens " + " ".join(f"{n}:{d}" for n, d in zip(pres.gens.names, pres.gens.degrees)))
    if pres.skew is not None:
        lines = []
        n = pres.skew.n
        for i in range(n):
            for j in range(i + 1, n):
                q = pres.skew[i, j]
                if q != field.one:
                    lines.append(
                        f"skew q({pres.gens.names[i]},{pres.gens.names[j]})={_scalar_literal(field, q)}"
                    )
        out.extend(lines if lines else ["skew"])
        rels = pres.extras
    else:
        rels = pres.relations
    for rel in rels:
        out.append("rel " + format_poly(rel))
    return "\n".join(out) + "\n"


# ======================================================================
# result serialization
# ======================================================================


def scalar_str(field: Field, value: Scalar) -> str:
    return field.format_scalar(value)


def subspace_rows(field: Field, space: Subspace) -> list[list[str]]:
    return [[scalar_str(field, x) for x in row] for row in space.rows]


def render_json(payload: dict) -> str:
    return json.dumps(payload, indent=2)


def _table_lines(value, indent: str = "") -> list[str]:
    lines: list[str] = []
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v and not _is_flat_list(v):
                lines.append(f"{indent}{k}:")
                lines.extend(_table_lines(v, indent + "  "))
            else:
                lines.append(f"{indent}{k}: {_flat(v)}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)) and item and not _is_flat_list(item):
                lines.append(f"{indent}-")
                lines.extend(_table_lines(item, indent + "  "))
            else:
                lines.append(f"{indent}- {_flat(item)}")
    else:
        lines.append(f"{indent}{_flat(value)}")
    return lines


def _is_flat_list(value) -> bool:
    return isinstance(value, list) and all(not isinstance(x, (dict, list)) for x in value)


def _flat(value) -> str:
    if isinstance(value, list):
        return "[" + ", ".join(_flat(x) for x in value) + "]"
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def render_table(payload: dict) -> str:
    return "\n".join(_table_lines(payload))


def emit(payload: dict, fmt: str) -> str:
    """Serialize a result record as JSON (stable key order) or a readable table."""
    if fmt == "json":
        return render_json(payload)
    if fmt == "table":
        return render_table(payload)
    raise ValueError(f"unknown format {fmt!r}")
