"""Command-line front end (``kgraph-k``).

Exit codes: 0 success, 1 invalid input, 2 unsupported request.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import formats
from .construct import product, skew_product
from .errors import InvalidFamily, InvalidInput, Unsupported
from .intlinalg import IntMatrix, snf
from .ktheory import (
    compare,
    e2_page,
    k3_unital_rank_check,
    kgroups,
    rank_torsion_crosscheck,
    unit_class,
)
from .model import matrices_from_skeleton, validate_family


class _Failure(Exception):
    def __init__(self, code: int, kind: str, message: str, payload=None):
        super().__init__(message)
        self.code, self.kind, self.payload = code, kind, payload


# -- text rendering ------------------------------------------------------------

def _text_constraint(name: str, c: dict) -> str:
    sub = _text_group(c["sub"])
    quot = _text_group(c["quot"])
    if c["sub_quotient_unknown"]:
        sub = f"({sub})/G"
    if c["quot_subgroup_unknown"]:
        quot = f"H ⊆ {quot}"
    line = f"0 → {sub} → {name} → {quot} → 0"
    if c["order"] is not None:
        line += f" (order {c['order']})"
    return line


def _text_group(d: dict) -> str:
    parts = []
    if d["free_rank"] == 1:
        parts.append("Z")
    elif d["free_rank"] > 1:
        parts.append(f"Z^{d['free_rank']}")
    parts.extend(f"Z/{t}" for t in d["torsion"])
    return " ⊕ ".join(parts) if parts else "0"


def _text_report(d: dict) -> str:
    lines = [f"k = {d['k']}"]
    for g in ("k0", "k1"):
        label = g.upper()
        status = d["status"][g]
        if d[g] is not None:
            lines.append(f"{label} = {_text_group(d[g])}  [{status}]")
        elif d[f"{g}_constraint"] is not None:
            lines.append(f"{_text_constraint(label, d[f'{g}_constraint'])}  [{status}]")
        else:
            lines.append(f"{label}: not determined  [{status}]")
    lines.append("E2: " + ", ".join(f"H{p} = {_text_group(h)}" for p, h in enumerate(d["e2"])))
    if d["bounds"]:
        lines.append("bounds: " + ", ".join(f"{k} = {v}" for k, v in d["bounds"].items()))
    if d["notes"]:
        lines.append("notes: " + ", ".join(d["notes"]))
    return "\n".join(lines)


def _text_generic(d, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    for key, val in d.items():
        if isinstance(val, dict) and val and {"free_rank", "torsion"} == set(val):
            lines.append(f"{pad}{key}: {_text_group(val)}")
        elif isinstance(val, dict):
            lines.append(f"{pad}{key}:")
            lines.append(_text_generic(val, indent + 1))
        else:
            lines.append(f"{pad}{key}: {json.dumps(val, ensure_ascii=False)}")
    return "\n".join(lines)


# -- commands ------------------------------------------------------------------

def _family(path):
    return formats.load_family(path)


def _ensure_valid(family):
    rep = validate_family(family)
    if not rep.ok:
        raise _Failure(1, "InvalidFamily", str(InvalidFamily(rep)), formats.validation_to_json(rep))
    return family


def cmd_validate(args):
    fam = _family(args.input)
    rep = validate_family(fam)
    d = formats.validation_to_json(rep)
    if not rep.ok:
        raise _Failure(1, "InvalidFamily", str(InvalidFamily(rep)), d)
    return d, "ok: all necessary conditions hold (commuting, non-negative, no sources)"


def cmd_kgroups(args):
    d = formats.report_to_json(kgroups(_ensure_valid(_family(args.input))))
    return d, _text_report(d)


def cmd_e2(args):
    e2 = e2_page(_ensure_valid(_family(args.input)))
    d = {"e2": formats.e2_to_json(e2)}
    return d, "\n".join(f"H{p} = {_text_group(h)}" for p, h in enumerate(d["e2"]))


def cmd_unit_class(args):
    fam = _ensure_valid(_family(args.input))
    d = formats.unit_class_to_json(unit_class(fam))
    return d, _text_generic(d)


def cmd_crosscheck(args):
    fam = _ensure_valid(_family(args.input))
    if fam.k == 2:
        d = formats.crosscheck_to_json(rank_torsion_crosscheck(fam))
    elif fam.k == 3:
        d = formats.k3check_to_json(k3_unital_rank_check(fam))
    else:
        raise _Failure(2, "UnsupportedRank", f"crosscheck requires k = 2 or k = 3, got k = {fam.k}")
    return d, _text_generic(d)


def cmd_compare(args):
    a = _ensure_valid(_family(args.a))
    b = _ensure_valid(_family(args.b))
    d = formats.comparison_to_json(compare(a, b, simple=args.simple, purely_infinite=args.purely_infinite))
    return d, _text_generic(d)


def _write_pair(skeleton, out: str | None):
    fam = matrices_from_skeleton(skeleton, validate=False)
    sk_doc = formats.skeleton_to_json(skeleton)
    mat_doc = formats.family_to_json(fam)
    written = {}
    if out:
        sk_path = Path(out)
        mat_path = sk_path.with_name(sk_path.name.removesuffix(".json").removesuffix(".skeleton") + ".matrices.json")
        sk_path.write_text(formats.dumps(sk_doc))
        mat_path.write_text(formats.dumps(mat_doc))
        written = {"skeleton": str(sk_path), "matrices": str(mat_path)}
    d = {"written": written, "skeleton": sk_doc, "matrices": mat_doc}
    text = "\n".join(
        [f"wrote {v}" for v in written.values()]
        + [f"M_{i + 1} = {m}" for i, m in enumerate(mat_doc["matrices"])]
    )
    return d, text


def cmd_construct_product(args):
    factors = [formats.skeleton_from_json(formats.load_json(p)) for p in args.factors]
    return _write_pair(product(factors), args.out)


def cmd_construct_skew(args):
    skeleton = formats.skeleton_from_json(formats.load_json(args.skeleton))
    if args.group:
        group = formats.group_from_json(formats.load_json(args.group))
    else:
        group = formats.group_from_json({"orders": args.orders or []})
    labels = formats.labelling_from_json(formats.load_json(args.labels)) if args.labels else None
    return _write_pair(skew_product(skeleton, group, labels), args.out)


def _matrix_arg(args) -> IntMatrix:
    data = json.loads(args.matrix) if args.matrix else formats.load_json(args.input)
    if isinstance(data, dict):
        rows = formats._int(data.get("rows"), "rows")
        cols = formats._int(data.get("cols"), "cols")
        ents = [formats._int(x, "entry") for x in data.get("entries", [])]
        try:
            return IntMatrix(rows, cols, tuple(ents))
        except ValueError as exc:
            raise InvalidInput(str(exc)) from None
    return formats.matrix_from_json(data)


def cmd_snf(args):
    if not args.matrix and not args.input:
        raise InvalidInput("snf needs a matrix file or --matrix")
    d = formats.snf_to_json(snf(_matrix_arg(args)))
    text = "invariant factors: " + (" ".join(map(str, d["invariant_factors"])) or "(none)")
    text += "\nS = " + json.dumps(d["s"]) + "\nU = " + json.dumps(d["u"]) + "\nV = " + json.dumps(d["v"])
    return d, text


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kgraph-k", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--output", choices=("text", "json"), default="text")
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, "check necessary conditions on a family").add_argument("input")
    add("kgroups", cmd_kgroups, "K-group report").add_argument("input")
    add("e2", cmd_e2, "homology of the Koszul complex").add_argument("input")
    add("unit-class", cmd_unit_class, "position of the unit in K0 (k = 2)").add_argument("input")
    add("crosscheck", cmd_crosscheck, "closed-form rank/torsion checks (k = 2, 3)").add_argument("input")
    sp = add("compare", cmd_compare, "compare the invariants of two families")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("--simple", action="store_true", help="assert both algebras are simple")
    sp.add_argument("--purely-infinite", action="store_true", help="assert both are purely infinite")
    sp = add("construct-product", cmd_construct_product, "product of rank-1 skeletons")
    sp.add_argument("factors", nargs="+")
    sp.add_argument("--out", help="skeleton output path; matrices go beside it")
    sp = add("construct-skew", cmd_construct_skew, "skew product by a finite abelian group")
    sp.add_argument("skeleton")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--group", help='JSON file {"orders": [...]}')
    g.add_argument("--orders", type=int, nargs="*", help="cyclic factor orders")
    sp.add_argument("--labels", help="JSON map edge id -> residue array")
    sp.add_argument("--out", help="skeleton output path; matrices go beside it")
    sp = add("snf", cmd_snf, "Smith normal form of a JSON matrix")
    sp.add_argument("input", nargs="?")
    sp.add_argument("--matrix", help="inline JSON matrix")
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    as_json = args.output == "json"
    try:
        try:
            payload, text = args.func(args)
        except Unsupported as exc:
            raise _Failure(2, type(exc).__name__, str(exc)) from None
        except InvalidFamily as exc:
            raise _Failure(1, "InvalidFamily", str(exc), formats.validation_to_json(exc.report)) from None
        except InvalidInput as exc:
            raise _Failure(1, type(exc).__name__, str(exc)) from None
        except json.JSONDecodeError as exc:
            raise _Failure(1, "InvalidInput", f"not valid JSON ({exc})") from None
    except _Failure as f:
        print(f"error: {f}", file=stderr)
        if as_json:
            err = {"error": f.kind, "message": str(f)}
            if f.payload is not None:
                err["details"] = f.payload
            stdout.write(formats.dumps(err))
        return f.code
    stdout.write(formats.dumps(payload) if as_json else text + "\n")
    return 0


def main():  # pragma: no cover
    sys.exit(run())


if __name__ == "__main__":  # pragma: no cover
    main()
