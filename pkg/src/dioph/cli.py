"""Command-line front end: ``dioph <subcommand> ...``.

Every invocation produces one document with ``status``, ``result``,
``witnesses`` and ``diagnostics``.  JSON is the default output; ``--output
text`` flattens the same document into ``key: value`` lines.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from contextlib import redirect_stdout
from fractions import Fraction

from . import formula as fl
from . import godel, mazur, model, pell
from .artin_schreier import as_solve
from .errors import DiophError
from .pheidas import DEFAULT_EXP_CAP, dp_element, dp_membership, dp_residuals
from .textio import parse_field, parse_poly, parse_ratfunc

DEFAULT_FIELD = "GF(3)"


class UsageError(Exception):
    name = "UsageError"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)

    def exit(self, status=0, message=None):
        if status:
            raise UsageError(message or "usage error")
        raise _HelpExit()


class _HelpExit(Exception):
    pass


def _doc(status="ok", result=None, witnesses=None, diagnostics=None):
    return {"status": status, "result": result if result is not None else {},
            "witnesses": witnesses or {}, "diagnostics": diagnostics or {}}


def _common(p: argparse.ArgumentParser, top: bool):
    d = None if top else argparse.SUPPRESS
    p.add_argument("--field", default=DEFAULT_FIELD if top else d,
                   help="GF(p) or GF(q;modulus in w), default GF(3)")
    p.add_argument("--output", choices=("json", "text"), default="json" if top else d)
    p.add_argument("--exp-cap", type=int, default=DEFAULT_EXP_CAP if top else d,
                   help="largest exponent p^s materialised as a rational function")


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(prog="dioph", description="Diophantine constructions over F_q(t).")
    _common(top, True)
    sub = top.add_subparsers(dest="command", parser_class=_Parser, required=True)

    def cmd(name, help_):
        p = sub.add_parser(name, help=help_)
        _common(p, False)
        return p

    cmd("as-solve", "solve u^p - u = f").add_argument("f")
    cmd("dp-member", "decide x in D_p with witnesses").add_argument("x")
    cmd("encode", "polynomial to its code").add_argument("poly")
    cmd("decode", "code to polynomial").add_argument("code", type=int)

    m = cmd("model", "the D_p model of the natural numbers")
    msub = m.add_subparsers(dest="model_cmd", parser_class=_Parser, required=True)
    for op in ("add", "mul"):
        q = msub.add_parser(op)
        _common(q, False)
        q.add_argument("s1", type=int)
        q.add_argument("s2", type=int)
    q = msub.add_parser("verify")
    _common(q, False)
    q.add_argument("--max", dest="a_max", type=int, required=True)

    pl = cmd("pell", "Pell solutions over Z[t]")
    psub = pl.add_subparsers(dest="pell_cmd", parser_class=_Parser, required=True)
    q = psub.add_parser("solve")
    _common(q, False)
    q.add_argument("n", type=int)
    q = psub.add_parser("mulrel")
    _common(q, False)
    for name in ("r", "s", "n"):
        q.add_argument(name, type=int)

    d = cmd("discretize", "interval selection on 'index value' lines from stdin")
    d.add_argument("--squares", type=int, help="use the first N rational squares instead of stdin")
    d.add_argument("--cluster-eps", type=Fraction, help="also count eps-clusters, a/b")

    f = cmd("formula", "positive-existential formulas over F_q(t)")
    fsub = f.add_subparsers(dest="formula_cmd", parser_class=_Parser, required=True)
    q = fsub.add_parser("eval")
    _common(q, False)
    q.add_argument("--bound", type=int, required=True)
    q.add_argument("--bind", action="append", default=[], metavar="VAR=TEXT")
    q.add_argument("--strategy", choices=("pruned", "naive"), default="pruned")
    q.add_argument("formula")
    q = fsub.add_parser("print")
    _common(q, False)
    q.add_argument("formula")
    return top


# -- subcommands ---------------------------------------------------------------------


def _as_solve(a, F, stdin):
    f = parse_ratfunc(a.f, F)
    r = as_solve(f)
    if r.sat:
        return _doc("ok", {"input": str(f), "sat": True}, {"u": str(r.witness)},
                    {"check": "u^p-u-f", "residual": str(r.witness.frobenius() - r.witness - f)})
    reason = r.reason
    res = {"input": str(f), "sat": False, "reason": reason.kind}
    if reason.kind == "degree":
        res["degree"] = reason.degree
    elif reason.kind == "pole-order":
        res["place"], res["order"] = str(reason.place), reason.order
    else:
        res["constant"] = str(reason.c)
    return _doc("unsat", res)


def _dp_member(a, F, stdin):
    x = parse_ratfunc(a.x, F)
    wit = dp_membership(x)
    if wit is None:
        return _doc("unsat", {"input": str(x), "member": False})
    names = {"u": wit.u, "v": wit.v, "w": wit.w, "sw": wit.sw}
    return _doc("ok", {"input": str(x), "member": True, "s": wit.s},
                {k: str(v) for k, v in names.items() if v is not None},
                {"residuals": {k: str(v) for k, v in dp_residuals(x, wit).items()}})


def _encode(a, F, stdin):
    f = parse_poly(a.poly, F)
    return _doc("ok", {"poly": str(f), "code": godel.encode(f)})


def _decode(a, F, stdin):
    if a.code < 0:
        raise UsageError("argument code: must be a natural number")
    return _doc("ok", {"code": a.code, "poly": str(godel.decode(a.code, F))})


def _element_json(e, cap):
    return {"s": e.s, "element": str(e), "exponent": e.exponent if e.fits(cap) else None}


def _model(a, F, stdin):
    cap = a.exp_cap
    if a.model_cmd == "verify":
        if a.a_max < 0:
            raise UsageError("argument --max: must be a natural number")
        rep = model.verify_model(F, a.a_max, cap)
        return _doc("ok", {"passed": rep.passed, "a_max": a.a_max, "checks": len(rep.checks),
                           "failures": [f"{c.name}{c.args}" for c in rep.failures]},
                    diagnostics={"semantic_checks": rep.count("relation"),
                                 "semantic_skipped": rep.semantic_skipped})
    if a.s1 < 0 or a.s2 < 0:
        raise UsageError("arguments s1 s2: must be natural numbers")
    x, y = dp_element(a.s1, F), dp_element(a.s2, F)
    z = (model.model_add if a.model_cmd == "add" else model.model_mul)(x, y)
    verified = (model.relation_holds(a.model_cmd, x, y, z, cap)
                if all(e.fits(cap) for e in (x, y, z)) else None)
    return _doc("ok", {"op": a.model_cmd, "x": _element_json(x, cap),
                       "y": _element_json(y, cap), "z": _element_json(z, cap)},
                diagnostics={"relation_verified": verified})


def _pell(a, F, stdin):
    if any(v < 0 for v in (getattr(a, k, 0) for k in ("n", "r", "s"))):
        raise UsageError("indices must be natural numbers")
    if a.pell_cmd == "solve":
        sol = pell.pell_solution(a.n)
        return _doc("ok", {"n": a.n, "x": str(sol.x), "y": str(sol.y)},
                    diagnostics={"pell_verify": pell.pell_verify(sol.x, sol.y),
                                 "x(1)": sol.x(1), "y(1)": sol.y(1)})
    h, rem = pell.divmod_t_minus_1(pell.pell_solution(a.n).y - pell.pell_solution(a.r).y
                                   * pell.pell_solution(a.s).y)
    res = {"r": a.r, "s": a.s, "n": a.n, "holds": rem == 0}
    diag = {"remainder": rem}
    if rem == 0:
        return _doc("ok", res, {"h": str(h)}, diag)
    return _doc("unsat", res, diagnostics=diag)


def _read_points(stdin):
    pts = []
    for lineno, line in enumerate(stdin.read().splitlines(), 1):
        if not line.strip():
            continue
        fields = line.split()
        if len(fields) != 2:
            raise UsageError(f"stdin line {lineno}: expected 'index value'")
        try:
            pts.append(mazur.IndexedPoint(int(fields[0]), Fraction(fields[1])))
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"stdin line {lineno}: {exc}") from None
    return pts


def _discretize(a, F, stdin):
    if a.squares is not None:
        if a.squares < 0:
            raise UsageError("argument --squares: must be a natural number")
        pts = mazur.squares_sequence(a.squares)
    else:
        pts = _read_points(stdin)
    z, d = mazur.discretize(pts)
    res = {"ztilde": z, "dtilde": [{"n": p.n, "value": str(p.value),
                                    "j": mazur.interval_index(p.value)} for p in d]}
    diag = {"points": len(pts)}
    if a.cluster_eps is not None:
        res["clusters"] = mazur.cluster_count([p.value for p in d], a.cluster_eps)
        diag["eps"] = str(a.cluster_eps)
    return _doc("ok", res, diagnostics=diag)


def _formula(a, F, stdin):
    f = fl.parse(a.formula)
    if a.formula_cmd == "print":
        return _doc("ok", {"formula": fl.pretty_print(f)})
    env = {}
    for b in a.bind:
        name, sep, text = b.partition("=")
        if not sep or not name.strip():
            raise UsageError(f"argument --bind: expected VAR=TEXT, got {b!r}")
        env[name.strip()] = parse_ratfunc(text, F)
    out = fl.evaluate(f, env, F, a.bound, a.strategy)
    res = {"formula": fl.pretty_print(f), "bound": a.bound,
           "bindings": {k: str(v) for k, v in sorted(env.items())}}
    if isinstance(out, fl.Sat):
        res["outcome"] = "sat"
        return _doc("ok", res, {k: str(v) for k, v in out.witness.items()},
                    {"verified": fl.check(f, env, out.witness, F)})
    res["outcome"] = "no-witness"
    return _doc("unsat", res)


_DISPATCH = {"as-solve": _as_solve, "dp-member": _dp_member, "encode": _encode,
             "decode": _decode, "model": _model, "pell": _pell,
             "discretize": _discretize, "formula": _formula}


# -- rendering -----------------------------------------------------------------------


def _flatten(prefix, value, out):
    if isinstance(value, dict):
        for k in sorted(value):
            _flatten(f"{prefix}.{k}" if prefix else k, value[k], out)
    elif isinstance(value, list) and any(isinstance(v, dict) for v in value):
        for i, v in enumerate(value):
            _flatten(f"{prefix}[{i}]", v, out)
    else:
        out.append(f"{prefix}: {json.dumps(value) if not isinstance(value, str) else value}")


def render(doc: dict, mode: str) -> str:
    if mode == "text":
        lines = [f"status: {doc['status']}"]
        for part in ("result", "witnesses", "diagnostics"):
            _flatten(part, doc[part], lines)
        return "\n".join(lines)
    return json.dumps(doc, sort_keys=True, indent=2)


def _sniff_output(argv):
    for i, a in enumerate(argv):
        if a == "--output" and i + 1 < len(argv):
            return argv[i + 1] if argv[i + 1] in ("json", "text") else "json"
        if a.startswith("--output="):
            return a.split("=", 1)[1] if a.split("=", 1)[1] in ("json", "text") else "json"
    return "json"


def run(argv: list[str], stdin=None) -> tuple[int, str]:
    """Execute one command; returns (exit code, output text)."""
    stdin = sys.stdin if stdin is None else stdin
    parser = build_parser()
    buf = io.StringIO()
    try:
        with redirect_stdout(buf):
            args = parser.parse_args(argv)
    except _HelpExit:
        return 0, buf.getvalue().rstrip("\n")
    except UsageError as exc:
        doc = _doc("error", diagnostics={"error": "UsageError", "message": str(exc).strip()})
        return 2, render(doc, _sniff_output(argv))
    try:
        F = parse_field(args.field)
        doc = _DISPATCH[args.command](args, F, stdin)
        code = 0
    except UsageError as exc:
        doc, code = _doc("error", diagnostics={"error": "UsageError", "message": str(exc)}), 2
    except DiophError as exc:
        doc, code = _doc("error", diagnostics={"error": exc.name, "message": str(exc)}), 1
    return code, render(doc, args.output)


def main(argv=None) -> int:
    code, out = run(sys.argv[1:] if argv is None else argv)
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
