"""Expression parsing/rendering and the prodmin command line: simplify,
relations, verify, eval.  Exit codes: 0 success/verified, 1 usage or parse
error, 2 validation failure, 3 verification failure."""

from __future__ import annotations

import argparse
import json
import sys

from .numbers import GaussRat
from .poly import RatFunc, X
from .drring import LaurentExpr, ProductSpec, RPiExtension, eval_product
from .pipeline import MinimalRepresentation, PipelineError, \
    minimal_representation, relation_module, input_to_alphas
from .verify import VerifyReport, check_commutes, check_kernel


class ParseError(ValueError):
    def __init__(self, msg, pos):
        super().__init__(f"{msg} (at position {pos})")
        self.pos = pos


# -- tokenizer / recursive-descent parser ------------------------------
# grammar: expr := term (('+'|'-') term)* ; term := factor (('*'|'/') factor)*
# factor := '-' factor | power ; power := atom ('^' exponent)?
# atom := INT | 'k' | 'I' | '(' expr ')' ; exponent := INT | '(' '-'? INT ')'

def _tokenize(s):
    toks = []
    i = 0
    while i < len(s):
        c = s[i]
        if c.isspace():
            i += 1
        elif c.isdigit():
            j = i
            while j < len(s) and s[j].isdigit():
                j += 1
            toks.append(("int", int(s[i:j]), i))
            i = j
        elif c in "+-*/^()":
            toks.append((c, c, i))
            i += 1
        elif c == "k" or c == "I":
            if i + 1 < len(s) and (s[i + 1].isalnum() or s[i + 1] == "_"):
                raise ParseError(f"unknown identifier starting at '{c}'", i)
            toks.append(("name", c, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {c!r}", i)
    toks.append(("end", None, len(s)))
    return toks


class _Parser:
    def __init__(self, toks):
        self.toks = toks
        self.pos = 0

    def peek(self):
        return self.toks[self.pos]

    def take(self, kind=None):
        t = self.toks[self.pos]
        if kind is not None and t[0] != kind:
            raise ParseError(f"expected {kind}, found {t[0]}", t[2])
        self.pos += 1
        return t

    def expr(self):
        v = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.factor()
        while self.peek()[0] in ("*", "/"):
            op = self.take()[0]
            w = self.factor()
            if op == "/":
                if w.is_zero():
                    raise ParseError("division by zero expression",
                                     self.peek()[2])
                v = v / w
            else:
                v = v * w
        return v

    def factor(self):
        if self.peek()[0] == "-":
            self.take()
            return -self.factor()
        return self.power()

    def power(self):
        v = self.atom()
        if self.peek()[0] == "^":
            self.take()
            e = self.exponent()
            if e < 0 and v.is_zero():
                raise ParseError("zero raised to a negative power",
                                 self.peek()[2])
            return v ** e
        return v

    def exponent(self):
        t = self.peek()
        if t[0] == "int":
            self.take()
            e = t[1]
        elif t[0] == "(":
            self.take()
            sign = 1
            if self.peek()[0] == "-":
                self.take()
                sign = -1
            e = sign * self.take("int")[1]
            self.take(")")
        else:
            raise ParseError("expected integer exponent", t[2])
        if self.peek()[0] == "^":  # right-associative integer tower
            self.take()
            f = self.exponent()
            if f < 0:
                raise ParseError("negative exponent in exponent tower",
                                 self.peek()[2])
            e = e ** f
        return e

    def atom(self):
        t = self.take()
        if t[0] == "int":
            return RatFunc.const(GaussRat(t[1]))
        if t[0] == "name":
            return RatFunc(X) if t[1] == "k" else RatFunc.const(GaussRat(0, 1))
        if t[0] == "(":
            v = self.expr()
            self.take(")")
            return v
        raise ParseError(f"unexpected token {t[0]}", t[2])


def parse_expr(s):
    """Parse an expression in the variable k into a canonical RatFunc."""
    p = _Parser(_tokenize(s))
    v = p.expr()
    p.take("end")
    return v


# -- canonical rendering (round-trips through parse_expr) ---------------

def render_gauss(c, var="k"):
    if c.is_zero():
        return "0"
    re, im, den = c.num_re, c.num_im, c.den
    if im == 0:
        s = str(re)
    elif re == 0:
        if im == 1:
            s = "I"
        elif im == -1:
            s = "-I"
        else:
            s = f"{im}*I"
    else:
        inner = f"{re}+{im}*I" if im > 0 else f"{re}-{-im}*I"
        s = f"({inner})"
    return s if den == 1 else f"{s}/{den}"


def _render_term(c, i, var):
    if i == 0:
        return render_gauss(c)
    v = var if i == 1 else f"{var}^{i}"
    if c.is_one():
        return v
    if c == GaussRat(-1):
        return f"-{v}"
    return f"{render_gauss(c)}*{v}"


def render_poly(p, var="k"):
    if p.is_zero():
        return "0"
    out = ""
    for i in range(p.degree(), -1, -1):
        c = p.coeffs[i]
        if c.is_zero():
            continue
        t = _render_term(c, i, var)
        if not out:
            out = t
        elif t.startswith("-"):
            out += "-" + t[1:]
        else:
            out += "+" + t
    return out


def render_ratfunc(f, var="k"):
    if f.is_zero():
        return "0"
    if f.num.is_one():
        numer = render_gauss(f.unit)
    elif f.unit.is_one():
        numer = render_poly(f.num, var)
    elif f.unit == GaussRat(-1):
        numer = f"-({render_poly(f.num, var)})"
    else:
        numer = f"{render_gauss(f.unit)}*({render_poly(f.num, var)})"
    if f.den.is_one():
        return numer
    if any(ch in numer for ch in "+-*/") and not (
            numer.startswith("(") and numer.endswith(")")):
        numer = f"({numer})"
    return f"{numer}/({render_poly(f.den, var)})"


# -- documents ----------------------------------------------------------

def load_input(path):
    """(ProductSpec, n_max) from an InputDocument JSON file.

    JSON/grammar problems raise ParseError; semantic problems ValueError."""
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}", 0)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON in {path}: {e}", e.pos)
    if not isinstance(doc, dict) or "products" not in doc:
        raise ParseError("input document must contain 'products'", 0)
    prods = []
    for entry in doc["products"]:
        try:
            name = entry["name"]
            mult = entry["multiplicand"]
            lower = int(entry["lower"])
        except (KeyError, TypeError) as e:
            raise ParseError(f"malformed product entry: {e}", 0)
        prods.append((name, parse_expr(mult), lower))
    options = doc.get("options", {})
    n_max = int(options.get("n_max", 50))
    return ProductSpec(prods), n_max


def _report_json(report):
    def one(c):
        d = {"first_n": c.first_n, "last_n": c.last_n, "passed": c.passed}
        if c.first_fail is not None:
            d["first_fail"] = c.first_fail
        return d

    return {"passed": report.passed,
            "products": {c.label: one(c) for c in report.products},
            "kernel_generators": [one(c) for c in report.kernel]}


def _rewritten_string(name, expr, ext):
    coef, exps, zpow = expr.terms[0]
    parts = []
    if not coef.is_one():
        parts.append(render_ratfunc(coef, var="n"))
    if zpow and ext.r_monomial is not None:
        rho = render_gauss(ext.r_monomial[0])
        p = f"({rho})^n" if zpow == 1 else f"({rho})^({zpow}*n)"
        parts.append(p)
    for i, e in enumerate(exps):
        if not e:
            continue
        alpha, lower = ext.pi_monomials[i]
        phi = render_ratfunc(alpha.shift(-1))
        p = f"Prod({phi}, k = {lower}..n)"
        if e != 1:
            p += f"^({e})" if e < 0 else f"^{e}"
        parts.append(p)
    return f"{name}(n) = " + (" * ".join(parts) if parts else "1")


def output_document(spec, rep, commutes, kernel):
    ext = rep.extension
    report = rep.report
    pi = []
    for idx, (alpha, lower) in enumerate(ext.pi_monomials):
        pi.append({"multiplicand": render_ratfunc(alpha.shift(-1)),
                   "lower": lower,
                   "kappa": render_gauss(report["kappas"][idx])})
    root = None
    if ext.r_monomial is not None:
        root = {"rho": render_gauss(ext.r_monomial[0]),
                "order": ext.r_monomial[1]}
    images = {}
    for name in spec.names:
        coef, exps, zpow = rep.images[name].terms[0]
        images[name] = {"coefficient": render_ratfunc(coef),
                        "exponents": list(exps), "z_power": zpow}
    gens = [{"exponents": list(e), "g": render_ratfunc(g)}
            for e, g in rep.kernel_gens]
    rewritten = {name: _rewritten_string(name, rep.images[name], ext)
                 for name in spec.names}
    verification = _report_json(
        VerifyReport(products=commutes.products, kernel=kernel.kernel))
    return {"rank": report["rank"],
            "divisors": list(report["divisors"]),
            "pi_monomials": pi,
            "root_of_unity": root,
            "images": images,
            "kernel_generators": gens,
            "rewritten": rewritten,
            "verification": verification}


def representation_from_document(spec, doc):
    """Rebuild extension/images/kernel generators from an OutputDocument."""
    try:
        pi = [(parse_expr(p["multiplicand"]).shift(1), int(p["lower"]))
              for p in doc["pi_monomials"]]
        root = doc.get("root_of_unity")
        r_mono = None
        if root is not None:
            rho = parse_expr(root["rho"]).const_value()
            r_mono = (rho, int(root["order"]))
        ext = RPiExtension(pi, r_mono)
        images = {}
        for name in spec.names:
            img = doc["images"][name]
            images[name] = LaurentExpr.monomial(
                parse_expr(img["coefficient"]),
                tuple(int(e) for e in img["exponents"]),
                int(img["z_power"]))
        gens = [(tuple(int(x) for x in g["exponents"]), parse_expr(g["g"]))
                for g in doc["kernel_generators"]]
    except KeyError as e:
        raise ValueError(f"representation document is missing field {e}")
    report = {"rank": doc.get("rank"), "divisors": doc.get("divisors")}
    return MinimalRepresentation(ext, images, gens, report)


def _emit(obj):
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


# -- commands -----------------------------------------------------------

def cmd_simplify(args):
    spec, n_max = load_input(args.input)
    rep = minimal_representation(spec)
    commutes = check_commutes(spec, rep, n_max)
    kernel = check_kernel(spec, rep.kernel_gens, n_max)
    _emit(output_document(spec, rep, commutes, kernel))
    return 0 if commutes.passed and kernel.passed else 3


def cmd_relations(args):
    spec, _ = load_input(args.input)
    m_lat = relation_module(input_to_alphas(spec))
    rep = minimal_representation(spec)
    gens = [{"exponents": list(e), "g": render_ratfunc(g)}
            for e, g in rep.kernel_gens]
    _emit({"m_basis": m_lat.basis.tolists(), "kernel_generators": gens})
    return 0


def cmd_verify(args):
    spec, n_max = load_input(args.input)
    if args.n_max is not None:
        n_max = args.n_max
    try:
        with open(args.rep) as fh:
            doc = json.load(fh)
    except OSError as e:
        raise ParseError(f"cannot read {args.rep}: {e}", 0)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON in {args.rep}: {e}", e.pos)
    rep = representation_from_document(spec, doc)
    commutes = check_commutes(spec, rep, n_max)
    kernel = check_kernel(spec, rep.kernel_gens, n_max)
    out = _report_json(
        VerifyReport(products=commutes.products, kernel=kernel.kernel))
    _emit(out)
    return 0 if out["passed"] else 3


def cmd_eval(args):
    spec, _ = load_input(args.input)
    values = {name: render_gauss(eval_product((f, lower), args.n))
              for name, f, lower in spec.products}
    _emit({"n": args.n, "values": values})
    return 0


class _Parser1(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(1)


def main(argv=None):
    top = _Parser1(prog="prodmin",
                   description="Minimal multiplicative representations of "
                               "hypergeometric products over Q(I)(k).")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simplify", help="compute and verify the minimal "
                       "representation")
    p.add_argument("input")
    p.set_defaults(func=cmd_simplify)

    p = sub.add_parser("relations", help="relation-lattice basis and kernel "
                       "generators")
    p.add_argument("input")
    p.set_defaults(func=cmd_relations)

    p = sub.add_parser("verify", help="check a previously emitted "
                       "representation")
    p.add_argument("input")
    p.add_argument("--rep", required=True)
    p.add_argument("--n-max", type=int, default=None, dest="n_max")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("eval", help="exact product values at one n")
    p.add_argument("input")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_eval)

    try:
        args = top.parse_args(argv)
    except SystemExit as e:
        return e.code or 0
    try:
        return args.func(args)
    except ParseError as e:
        sys.stderr.write(f"parse error: {e}\n")
        return 1
    except (ValueError, PipelineError, ArithmeticError) as e:
        sys.stderr.write(f"validation error: {e}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
