"""Command-line interface.

Subcommands: enumerate, tables, classify, derive, contract, weyl,
arith, verify-all.  File outputs carry a metadata header with the tool
version and a digest of the inputs that produced them, so artifacts are
traceable to their invocation.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys

from . import __version__, arithmetic, registry, verification, weyl
from .configuration import Configuration, validate_configuration
from .contraction import blow_down
from .derivations import derive_configuration
from .enumeration import catalog, exceptional_classes, iter_named_pairs, root_classes
from .lattice import DivisorClass, SurfaceLattice


def _digest(args: dict) -> str:
    blob = json.dumps(args, sort_keys=True, default=str).encode()
    return hashlib.blake2b(blob, digest_size=8).hexdigest()


def _meta(args: dict) -> dict:
    return {"tool": "dplattice", "version": __version__, "input_digest": _digest(args)}


def _emit(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(payload, args: dict, out_path=None):
    doc = {"meta": _meta(args), "data": payload}
    _emit(json.dumps(doc, indent=1, default=str) + "\n", out_path)


def _csv_header(args: dict) -> str:
    m = _meta(args)
    return f"# tool={m['tool']} version={m['version']} input={m['input_digest']}\n"


def _load_configuration(path: str) -> Configuration:
    with open(path) as fh:
        return Configuration.from_json_dict(json.load(fh))


def _parse_orbits(spec: str):
    return [
        tuple(int(t) for t in group.split(","))
        for group in spec.split("|")
        if group
    ]


def cmd_enumerate(ns):
    lat = SurfaceLattice(ns.rank)
    classes = exceptional_classes(lat) if ns.kind == "pre1" else root_classes(lat)
    data = [list(c.coeffs) for c in classes]
    args = {"command": "enumerate", "rank": ns.rank, "kind": ns.kind}
    if ns.format == "text":
        _emit("".join(f"{tuple(c)}\n" for c in data), ns.out)
    else:
        _emit_json(data, args, ns.out)
    return 0


def cmd_tables(ns):
    cat = catalog(7)
    args = {"command": "tables"}
    lines = [_csv_header(args), "left_name,right_name,value\n"]
    for kind in ("pre-pre", "root-root", "pre-root"):
        for nx, ny, v in iter_named_pairs(cat, kind):
            lines.append(f"{nx},{ny},{v}\n")
    _emit("".join(lines), ns.out)
    return 0


def cmd_classify(ns):
    cfg = _load_configuration(ns.input)
    errors = validate_configuration(cfg)
    payload = {
        "type": cfg.type_label.display(),
        "components": [list(c) for c in cfg.components],
        "component_labels": [f"{l}{n}" for l, n in cfg.component_labels],
        "valid": not errors,
        "violations": errors,
    }
    args = {"command": "classify", "input": ns.input}
    if ns.format == "json":
        _emit_json(payload, args, ns.out)
    else:
        text = f"type: {payload['type']}\nvalid: {payload['valid']}\n"
        for e in errors:
            text += f"violation: {e}\n"
        _emit(text, ns.out)
    return 0 if not errors else 1


def _derived_payload(cfg, derived):
    cat = catalog(7)
    return {
        "type": cfg.type_label.display(),
        "roots": [list(r.coeffs) for r in cfg.simple_roots],
        "root_names": [cat.name_of(r) for r in cfg.simple_roots],
        "minimal": derived.minimal,
        "minimal_case": derived.minimal_case,
        "curves": [list(c.coeffs) for c in derived.curves],
        "curve_names": [cat.name_of(c) for c in derived.curves],
        "root_edges": derived.root_edges(),
        "curve_edges": derived.curve_edges(),
        "target_degree": derived.target_degree,
        "target_type": str(derived.target_type) if derived.target_type else None,
    }


def cmd_derive(ns):
    if ns.input:
        cfg = _load_configuration(ns.input)
    else:
        cfg = registry.representative(
            ns.type,
            ns.variant,
            orbits=_parse_orbits(ns.orbits) if ns.orbits else None,
            a2_conjugate=(0,) if ns.a2_conjugate else (),
        )
    derived = derive_configuration(cfg)
    payload = _derived_payload(cfg, derived)
    args = {
        "command": "derive",
        "type": ns.type,
        "variant": ns.variant,
        "orbits": ns.orbits,
        "input": ns.input,
    }
    if ns.dot:
        _emit(f"// {_csv_header(args)[2:-1]}\n" + derived.to_dot() + "\n", ns.dot)
    if ns.json:
        _emit_json(payload, args, ns.json)
    if ns.format == "json":
        _emit_json(payload, args, ns.out)
    elif ns.format == "dot":
        _emit(derived.to_dot() + "\n", ns.out)
    else:
        if derived.minimal:
            text = (
                f"type {payload['type']}: minimal "
                f"(exceptional case {derived.minimal_case})\n"
            )
        else:
            text = (
                f"type {payload['type']}: {len(derived.curves)} curve(s) "
                f"{payload['curve_names']} -> degree {derived.target_degree}, "
                f"type {payload['target_type']}\n"
            )
        _emit(text, ns.out)
    return 0


def cmd_contract(ns):
    spec = ns.curves
    if spec.startswith("@"):
        with open(spec[1:]) as fh:
            coeffs = json.load(fh)
    else:
        coeffs = json.loads(spec)
    lat = SurfaceLattice(ns.rank)
    curves = [DivisorClass(c) for c in coeffs]
    result = blow_down(lat, curves)
    payload = {
        "source_rank": lat.rank,
        "target_degree": result.degree,
        "target": repr(result.lattice),
        "matrix": [list(row) for row in result.matrix],
        "canonical_image": list(result.push(lat.canonical_class()).coeffs),
    }
    args = {"command": "contract", "rank": ns.rank, "curves": coeffs}
    if ns.format == "json":
        _emit_json(payload, args, ns.out)
    else:
        _emit(
            f"target: {payload['target']} (degree {payload['target_degree']})\n"
            f"matrix: {payload['matrix']}\n",
            ns.out,
        )
    return 0


def cmd_weyl(ns):
    cat = catalog(7)
    group = weyl.generate_group(cat, cache_dir=ns.cache_dir)
    args = {"command": "weyl", "action": ns.action}
    if ns.action == "order":
        payload = {"order": group.order}
        if ns.format == "json":
            _emit_json(payload, args, ns.out)
        else:
            _emit(f"{group.order}\n", ns.out)
        return 0
    d1, d2, d3 = weyl.delta_sets(cat, group, threads=ns.threads)
    if ns.action == "transitivity":
        target = {"d1": d1, "d2": d2, "d3": d3}[ns.set_name]
        result = weyl.verify_transitivity(group, target)
        payload = {"set": ns.set_name, "size": len(target), "transitive": result}
        if ns.format == "json":
            _emit_json(payload, args, ns.out)
        else:
            _emit(f"{ns.set_name}: size {len(target)}, transitive: {result}\n", ns.out)
        return 0 if result else 1
    # traces
    witness = None
    if ns.witness is not None:
        parts = tuple(int(t) for t in ns.witness.split(","))
        witness = parts[0] if len(parts) == 1 else parts
    traces = sorted(weyl.trace_set(group, ns.filter, witness=witness))
    payload = {"filter": ns.filter, "witness": witness, "traces": traces}
    if ns.format == "json":
        _emit_json(payload, args, ns.out)
    else:
        _emit(f"{ns.filter}: {traces}\n", ns.out)
    return 0


def cmd_arith(ns):
    args = {"command": "arith", "action": ns.action, "case": ns.case}
    if ns.action == "bounds":
        q = ns.q
        char2 = arithmetic.characteristic_of(q) == 2
        payload = {
            "q": q,
            "case": ns.case,
            "min_surface_points": arithmetic.min_surface_points(q, ns.case),
            "ramification_bound": str(
                arithmetic.ramification_point_bound(q, ns.case, char2)
            ),
            "off_ramification": arithmetic.off_ramification_lower_bound(
                q, ns.case, char2
            ),
            "required": arithmetic.required_point_count(ns.case),
        }
        if ns.format == "json":
            _emit_json(payload, args, ns.out)
        else:
            _emit(
                "".join(f"{k}: {v}\n" for k, v in payload.items()), ns.out
            )
        return 0
    if ns.action == "threshold":
        value = arithmetic.unirationality_threshold(ns.case)
        if ns.format == "json":
            _emit_json({"case": ns.case, "threshold": value}, args, ns.out)
        else:
            _emit(f"{value}\n", ns.out)
        return 0
    # table
    rows = []
    for q, p in arithmetic.prime_powers_up_to(ns.qmax):
        char2 = p == 2
        off = arithmetic.off_ramification_lower_bound(q, ns.case, char2)
        need = arithmetic.required_point_count(ns.case)
        rows.append(
            (
                q,
                p,
                arithmetic.min_surface_points(q, ns.case),
                arithmetic.ramification_point_bound(q, ns.case, char2).ceil(),
                off,
                need,
                off >= need,
            )
        )
    header = _csv_header(args) + "q,char,min_X,max_R,min_offR,required,ok\n"
    body = "".join(",".join(str(v) for v in row) + "\n" for row in rows)
    _emit(header + body, ns.csv or ns.out)
    return 0


def cmd_verify_all(ns):
    report = verification.verify_all(skip_weyl=ns.skip_weyl, cache_dir=ns.cache_dir)
    if ns.format == "json":
        payload = {
            "ok": report.ok,
            "seconds": report.seconds,
            "checks": [
                {
                    "name": c.name,
                    "expected": repr(c.expected),
                    "computed": repr(c.computed),
                    "ok": c.ok,
                }
                for c in report.checks
            ],
        }
        _emit_json(payload, {"command": "verify-all"}, ns.out)
    else:
        _emit("".join(line + "\n" for line in report.lines()), ns.out)
    return 0 if report.ok else 1


def _add_common_output(p, formats=("text", "json")):
    p.add_argument("--format", choices=formats, default=formats[0])
    p.add_argument("--out", help="write output to a file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dplattice",
        description="lattice checks for degree-2 weak del Pezzo surfaces",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list exceptional or root classes")
    p.add_argument("--rank", type=int, default=7)
    p.add_argument("--kind", choices=("pre1", "roots"), required=True)
    _add_common_output(p, ("json", "text"))
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("tables", help="emit the named intersection tables as CSV")
    p.add_argument("--out")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("classify", help="classify a configuration file")
    p.add_argument("--input", required=True)
    _add_common_output(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("derive", help="derive curves and contraction target")
    p.add_argument("--type", help="singularity type, e.g. 2A3")
    p.add_argument("--variant")
    p.add_argument("--orbits", help="orbit partition, e.g. '0,1|2,3'")
    p.add_argument("--a2-conjugate", action="store_true")
    p.add_argument("--input", help="configuration JSON instead of --type")
    p.add_argument("--dot", help="write the diagram in DOT format")
    p.add_argument("--json", help="write the derivation as JSON")
    _add_common_output(p, ("text", "json", "dot"))
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("contract", help="blow down explicit curve classes")
    p.add_argument("--rank", type=int, default=7)
    p.add_argument("--curves", required=True, help="JSON list or @file")
    _add_common_output(p)
    p.set_defaults(func=cmd_contract)

    p = sub.add_parser("weyl", help="group order, transitivity, trace sets")
    wsub = p.add_subparsers(dest="action", required=True)
    w = wsub.add_parser("order")
    _add_common_output(w)
    w.add_argument("--cache-dir")
    w.add_argument("--threads", type=int, default=1)
    w.set_defaults(func=cmd_weyl)
    w = wsub.add_parser("transitivity")
    w.add_argument("set_name", choices=("d1", "d2", "d3"))
    _add_common_output(w)
    w.add_argument("--cache-dir")
    w.add_argument("--threads", type=int, default=1)
    w.set_defaults(func=cmd_weyl)
    w = wsub.add_parser("traces")
    w.add_argument("filter", choices=weyl.TRACE_FILTERS)
    w.add_argument("--witness", help="root index, or comma-separated tuple")
    _add_common_output(w)
    w.add_argument("--cache-dir")
    w.add_argument("--threads", type=int, default=1)
    w.set_defaults(func=cmd_weyl)

    p = sub.add_parser("arith", help="point-count bounds and thresholds")
    asub = p.add_subparsers(dest="action", required=True)
    a = asub.add_parser("bounds")
    a.add_argument("--case", type=int, choices=(1, 2, 3), required=True)
    a.add_argument("--q", type=int, required=True)
    _add_common_output(a)
    a.set_defaults(func=cmd_arith)
    a = asub.add_parser("threshold")
    a.add_argument("--case", type=int, choices=(1, 2, 3), required=True)
    _add_common_output(a)
    a.set_defaults(func=cmd_arith)
    a = asub.add_parser("table")
    a.add_argument("--case", type=int, choices=(1, 2, 3), required=True)
    a.add_argument("--qmax", type=int, default=100)
    a.add_argument("--csv", help="output CSV path")
    a.add_argument("--out")
    a.set_defaults(func=cmd_arith)

    p = sub.add_parser("verify-all", help="run every reproduction check")
    p.add_argument("--skip-weyl", action="store_true",
                   help="skip the group enumeration pass")
    p.add_argument("--cache-dir")
    _add_common_output(p)
    p.set_defaults(func=cmd_verify_all)
    return parser


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        return ns.func(ns)
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
