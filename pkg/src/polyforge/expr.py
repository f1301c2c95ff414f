"""A small expression language for building polytopes from the command line.

Grammar::

    expr   := family | call
    family := NAME [":" INT ("," INT)*] [":pyr=" INT]
    call   := OP "(" arg ("," arg)* ")"
    arg    := expr | INT | face
    face   := "handle:" NAME | "[" INT ("," INT)* "]" | "{" INT ("," INT)* "}"

Families: ``triplex:s,t``, ``gT:d,a,m``, ``sp:d,a,m``, ``pm:d``, ``pm:b,a``,
``ta:d``, ``ta:s,t``, ``z:d``, ``z:s,t``, ``sigma3``, ``wp``, ``T:d``
(simplex), ``poly:n``, and the shorthands ``seg``, ``sq``, ``pent``.  Any
family takes an optional ``:pyr=t`` suffix.

Operators: ``pyr(P)``, ``pyr(P, t)``, ``prism(P)``, ``prod(P, Q)``,
``sum(P, Q)``, ``wed(P, face)``, ``trunc(P, v)``.

Example: ``wed(pyr(sq,1), handle:bottom-base)``.
"""
from __future__ import annotations

import re

from . import constructions as C
from . import families as fam
from . import formulas as fm
from .errors import UsageError

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_INT = re.compile(r"-?\d+")
_HANDLE = re.compile(r"handle:([A-Za-z0-9_:\-]+)")


_ARITIES = {
    ("triplex", 2): fam.triplex, ("gT", 3): fam.grunbaum_T, ("sp", 3): fam.simplex_product_pyr,
    ("pm", 1): fam.pentasm, ("pm", 2): fam.pentasm_pyr, ("ta", 1): fam.ta,
    ("ta", 2): fam.ta_pyr, ("z", 1): fam.z, ("z", 2): fam.z_pyr, ("sigma3", 0): fam.sigma3,
    ("wp", 0): fam.wp, ("T", 1): C.simplex, ("poly", 1): C.polygon,
    ("seg", 0): lambda: C.simplex(1), ("sq", 0): C.square, ("pent", 0): C.pentagon,
}


def _family(name: str, params: list[int]) -> C.ConstructedPolytope:
    n = len(params)
    try:
        gen = _ARITIES[(name, n)]
    except KeyError:
        raise UsageError(f"unknown family {name!r} with {n} parameter(s)") from None
    return gen(*params)


class _Parser:
    def __init__(self, text: str):
        self.s = text
        self.i = 0

    def error(self, msg):
        raise UsageError(f"{msg} at position {self.i} in {self.s!r}")

    def ws(self):
        while self.i < len(self.s) and self.s[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.ws()
        return self.s[self.i] if self.i < len(self.s) else ""

    def expect(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.i += 1

    def match(self, rx):
        self.ws()
        m = rx.match(self.s, self.i)
        if m:
            self.i = m.end()
        return m

    def ints(self) -> list[tuple[int, int]]:
        """Comma-separated integers, each paired with the position after it."""
        m = self.match(_INT)
        if not m:
            return []
        out = [(int(m.group()), self.i)]
        while self.peek() == ",":
            save = self.i
            self.i += 1
            m = self.match(_INT)
            if not m:
                self.i = save
                break
            out.append((int(m.group()), self.i))
        return out

    def family_params(self, name: str) -> list[int]:
        # "trunc(T:3, 0)": keep the longest prefix that fits a known arity and
        # leave the rest for the enclosing call
        found = self.ints()
        for n in range(len(found), 0, -1):
            if (name, n) in _ARITIES:
                self.i = found[n - 1][1]
                return [v for v, _ in found[:n]]
        return [v for v, _ in found]

    def arg(self):
        c = self.peek()
        if c in "[{":
            close = "]" if c == "[" else "}"
            self.i += 1
            vs = [v for v, _ in self.ints()]
            self.expect(close)
            return frozenset(vs)
        m = self.match(_HANDLE)
        if m:
            return m.group(1)
        m = self.match(_INT)
        if m:
            return int(m.group())
        return self.expr()

    def expr(self):
        m = self.match(_NAME)
        if not m:
            self.error("expected a family or operator name")
        name = m.group()
        if self.peek() == "(":
            self.i += 1
            args = [self.arg()]
            while self.peek() == ",":
                self.i += 1
                args.append(self.arg())
            self.expect(")")
            return self.call(name, args)
        params: list[int] = []
        pyr = 0
        while self.s.startswith(":", self.i):
            self.i += 1
            if self.s.startswith("pyr=", self.i):
                self.i += 4
                m = _INT.match(self.s, self.i)
                if not m:
                    self.error("expected an integer after pyr=")
                pyr = int(m.group())
                self.i = m.end()
            else:
                params = self.family_params(name)
        P = _family(name, params)
        return C.kfold_pyramid(P, pyr) if pyr else P

    def call(self, op, args):
        def poly(x):
            if not isinstance(x, C.ConstructedPolytope):
                self.error(f"{op}: expected a polytope, got {x!r}")
            return x

        def integer(x):
            if not isinstance(x, int):
                self.error(f"{op}: expected an integer, got {x!r}")
            return x

        if op == "pyr" and len(args) in (1, 2):
            P = poly(args[0])
            return C.kfold_pyramid(P, integer(args[1])) if len(args) == 2 else C.pyramid(P)
        if op == "prism" and len(args) == 1:
            return C.prism(poly(args[0]))
        if op == "prod" and len(args) == 2:
            return C.product(poly(args[0]), poly(args[1]))
        if op == "sum" and len(args) == 2:
            return C.direct_sum(poly(args[0]), poly(args[1]))
        if op == "wed" and len(args) == 2:
            if not isinstance(args[1], (str, frozenset)):
                self.error("wed: second argument must be handle:NAME or a vertex list")
            return C.wedge(poly(args[0]), args[1])
        if op == "trunc" and len(args) == 2:
            return C.truncate_vertex(poly(args[0]), integer(args[1]))
        if op == "T" and len(args) == 1:
            return C.simplex(integer(args[0]))
        self.error(f"unknown operator {op}/{len(args)}")

    def parse(self):
        out = self.expr()
        if self.peek():
            self.error("trailing input")
        return out


def parse(text: str) -> C.ConstructedPolytope:
    return _Parser(text).parse()


FORMULAS = {
    "phi": (fm.phi, 3), "zeta": (fm.zeta, 3), "dplus2f": (fm.fk_dplus2_facets, 4),
    "dplus2v": (fm.fk_dplus2_vertices, 4), "pentasm": (fm.fk_pentasm, 2),
    "pentasm_pyr": (fm.fk_pentasm_pyr, 3), "Z": (fm.fk_Z, 2), "s2bound": (fm.refined_s2_bound, 3),
    "binom": (fm.binom, 2),
}


def evaluate(spec: str) -> int:
    """Evaluate ``name:a,b,...`` against the formula library, e.g. ``phi:1,4,4``."""
    name, _, rest = spec.partition(":")
    if name not in FORMULAS:
        raise UsageError(f"unknown formula {name!r}; known: {sorted(FORMULAS)}")
    fn, arity = FORMULAS[name]
    try:
        args = [int(x) for x in rest.split(",")] if rest else []
    except ValueError:
        raise UsageError(f"bad arguments in {spec!r}") from None
    if len(args) != arity:
        raise UsageError(f"{name} takes {arity} arguments, got {len(args)}")
    return fn(*args)
