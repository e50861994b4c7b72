"""Command-line front door: load instance documents, run checks, report.

Document format (JSON): top-level keys ``backend`` ("abelian" |
"pointed_set"), ``index`` ({"kind": "finite", "elements": [...], "pairs":
[...]} or {"kind": "nat"}), then either explicit ``objects`` / ``bonds``
tables (finite posets) or ``family`` + ``params`` + ``seed`` (sequences),
optional ``flags``, optional ``target`` (a nested system document) and
``morphism`` {"phi": table, "f": table}.  All integers are decimal strings
so arbitrary precision survives the round trip.

Exit codes: 0 Holds/HoldsStabilized, 1 Fails/FailsAtHorizon, 2 input or
parse error, 3 Unknown/HoldsAtHorizon.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import checkers as ck
from . import families as fam
from .categories import (
    FgAbelianMorphism,
    FgAbelianObject,
    PointedFiniteSet,
    PointedMap,
)
from .checkers import Horizon, Refutation, Verdict, WitnessRecord
from .indexsets import FiniteDirectedPoset, IndexMap, validate_poset
from .intlinalg import IntMatrix
from .oracle import OracleCapExceeded, OracleInputError, oracle_check
from .systems import (
    InverseSystem,
    SystemFlags,
    SystemMorphism,
    are_equivalent,
    compose_morphisms,
    identity_morphism,
    restrict,
    validate_morphism,
    validate_system,
)

EXIT_POSITIVE = 0
EXIT_NEGATIVE = 1
EXIT_PARSE = 2
EXIT_INCONCLUSIVE = 3


class DocumentError(ValueError):
    """Malformed instance document."""


# ---------------------------------------------------------------------------
# value codecs (integers travel as decimal strings)


def _enc_int(n: int) -> str:
    return str(int(n))


def _dec_int(s) -> int:
    try:
        return int(s)
    except (TypeError, ValueError):
        raise DocumentError(f"not a decimal integer: {s!r}") from None


def object_to_dict(obj) -> dict:
    if isinstance(obj, PointedFiniteSet):
        return {"kind": "pointed_set", "size": _enc_int(obj.size)}
    return {"kind": "abelian", "factors": [_enc_int(d) for d in obj.factors]}


def object_from_dict(d: dict):
    kind = d.get("kind")
    if kind == "pointed_set":
        return PointedFiniteSet(_dec_int(d["size"]))
    if kind == "abelian":
        return FgAbelianObject(tuple(_dec_int(x) for x in d["factors"]))
    raise DocumentError(f"unknown object kind {kind!r}")


def morphism_to_dict(m) -> dict:
    if isinstance(m, PointedMap):
        return {"kind": "pointed_map",
                "source": object_to_dict(m.source),
                "target": object_to_dict(m.target),
                "images": [_enc_int(i) for i in m.images]}
    return {"kind": "abelian_map",
            "source": object_to_dict(m.source),
            "target": object_to_dict(m.target),
            "matrix": [[_enc_int(m.matrix.at(i, j))
                        for j in range(m.matrix.cols)]
                       for i in range(m.matrix.rows)]}


def morphism_from_dict(d: dict):
    kind = d.get("kind")
    src = object_from_dict(d["source"])
    tgt = object_from_dict(d["target"])
    if kind == "pointed_map":
        return PointedMap(src, tgt, tuple(_dec_int(i) for i in d["images"]))
    if kind == "abelian_map":
        rows = [[_dec_int(x) for x in row] for row in d["matrix"]]
        if not rows:
            matrix = IntMatrix(0, src.rank, ())
        else:
            matrix = IntMatrix.from_rows(rows)
        return FgAbelianMorphism(src, tgt, matrix)
    raise DocumentError(f"unknown morphism kind {kind!r}")


# ---------------------------------------------------------------------------
# system / morphism documents


def system_from_dict(doc: dict, seed_override=None) -> InverseSystem:
    index = doc.get("index", {})
    kind = index.get("kind")
    if kind == "finite":
        poset = FiniteDirectedPoset.from_pairs(
            tuple(index["elements"]),
            [tuple(p) for p in index.get("pairs", [])])
        problems = validate_poset(poset)
        if problems:
            raise DocumentError("invalid index poset: " + "; ".join(problems))
        objects = {lam: object_from_dict(spec)
                   for lam, spec in doc["objects"].items()}
        bonds = {}
        for lo, hi, mspec in doc["bonds"]:
            bonds[(lo, hi)] = morphism_from_dict(mspec)
        for a in poset.members():
            bonds.setdefault((a, a), _identity_of(objects[a]))
            for b in poset.members():
                if a != b and poset.leq(a, b) and (a, b) not in bonds:
                    raise DocumentError(f"missing bond for pair ({a!r}, {b!r})")
        flags = _flags_from_dict(doc.get("flags", {}))
        return InverseSystem(poset, objects=objects, bonds=bonds, flags=flags,
                             name=doc.get("name", "document"))
    if kind == "nat":
        spec = fam.FamilySpec(
            doc.get("family", ""),
            tuple(sorted((k, _dec_int(v))
                         for k, v in doc.get("params", {}).items())),
            seed_override if seed_override is not None
            else _dec_int(doc.get("seed", 0)))
        built = fam.build_family(spec)
        if isinstance(built, tuple):
            raise DocumentError(
                f"family {spec.code!r} builds a morphism triple; "
                "use it at the top level, not as a bare system")
        return built
    raise DocumentError(f"unknown index kind {kind!r}")


def _identity_of(obj):
    from .categories import identity
    return identity(obj)


def _flags_from_dict(d: dict) -> SystemFlags:
    ep = d.get("eventually_periodic")
    return SystemFlags(
        all_bondings_epimorphic=bool(d.get("all_bondings_epimorphic", False)),
        eventually_periodic=tuple(_dec_int(x) for x in ep) if ep else None)


def morphism_from_doc(doc: dict, seed_override=None) -> SystemMorphism:
    """The morphism a document denotes: an explicit {phi, f} table pair, a
    family-provided morphism, or the identity of the described system."""
    index = doc.get("index", {})
    if index.get("kind") == "nat" and "family" in doc:
        spec = fam.FamilySpec(
            doc["family"],
            tuple(sorted((k, _dec_int(v))
                         for k, v in doc.get("params", {}).items())),
            seed_override if seed_override is not None
            else _dec_int(doc.get("seed", 0)))
        built = fam.build_family(spec)
        if isinstance(built, tuple):
            F, G, f = built
            select = doc.get("select", "morphism")
            if select == "morphism":
                return f
            if select == "source_system":
                return identity_morphism(F)
            if select == "target_system":
                return identity_morphism(G)
            raise DocumentError(f"unknown select value {select!r}")
        return identity_morphism(built)
    source = system_from_dict(doc, seed_override)
    if "morphism" not in doc:
        return identity_morphism(source)
    target = (system_from_dict(doc["target"], seed_override)
              if "target" in doc else source)
    mdoc = doc["morphism"]
    phi_table = {mu: lam for mu, lam in mdoc["phi"]}
    f_table = {mu: morphism_from_dict(spec) for mu, spec in mdoc["f"]}
    missing = [mu for mu in target.index.members()
               if mu not in phi_table or mu not in f_table]
    if missing:
        raise DocumentError(f"morphism tables missing indices {missing!r}")
    phi = IndexMap.from_table(target.index, source.index, phi_table)
    return SystemMorphism(source, target, phi, lambda mu: f_table[mu],
                          name=doc.get("name", "document"))


def load_document(path: str) -> dict:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as e:
        raise DocumentError(f"cannot read {path}: {e}") from None
    except json.JSONDecodeError as e:
        raise DocumentError(
            f"parse error in {path} at line {e.lineno}, column {e.colno}: "
            f"{e.msg}") from None
    if not isinstance(doc, dict):
        raise DocumentError("document root must be an object")
    return doc


# ---------------------------------------------------------------------------
# verdict serialization


def _key_to_json(k):
    return ["int", _enc_int(k)] if isinstance(k, int) else ["str", str(k)]


def _key_from_json(pair):
    tag, v = pair
    return _dec_int(v) if tag == "int" else v


def _extra_to_json(extra: dict) -> list:
    out = []
    for k, v in extra.items():
        if isinstance(v, dict):
            v = {"kind": "dict", "items": _extra_to_json(v)}
        elif isinstance(v, int):
            v = {"kind": "int", "value": _enc_int(v)}
        elif isinstance(v, (list, tuple)):
            v = {"kind": "tuple", "value": json.loads(json.dumps(
                _deep_listify(v)))}
        else:
            v = {"kind": "str", "value": str(v)}
        out.append([_key_to_json(k), v])
    return out


def _deep_listify(v):
    if isinstance(v, (list, tuple)):
        return [_deep_listify(x) for x in v]
    if isinstance(v, int):
        return _enc_int(v)
    return v


def _deep_intify(v):
    if isinstance(v, list):
        return tuple(_deep_intify(x) for x in v)
    if isinstance(v, str):
        try:
            return int(v)
        except ValueError:
            return v
    return v


def _extra_from_json(items: list) -> dict:
    out = {}
    for kpair, v in items:
        k = _key_from_json(kpair)
        kind = v["kind"]
        if kind == "dict":
            out[k] = _extra_from_json(v["items"])
        elif kind == "int":
            out[k] = _dec_int(v["value"])
        elif kind == "tuple":
            out[k] = _deep_intify(v["value"])
        else:
            out[k] = v["value"]
    return out


def verdict_to_dict(v: Verdict) -> dict:
    return {
        "property": v.property,
        "status": v.status,
        "horizon": None if v.horizon is None else {
            "mu_max": _enc_int(v.horizon.mu_max),
            "lambda_max": _enc_int(v.horizon.lambda_max),
            "muprime_max": _enc_int(v.horizon.muprime_max),
            "cone_max": _enc_int(v.horizon.cone_max)},
        "witnesses": [{
            "mu": _key_to_json(w.mu),
            "index": None if w.index is None else _key_to_json(w.index),
            "rule": w.rule,
            "witnesses": [[_key_to_json(k), morphism_to_dict(m)]
                          for k, m in w.witnesses.items()],
            "extra": _extra_to_json(w.extra),
        } for w in v.witnesses],
        "refutation": None if v.refutation is None else {
            "mu": _key_to_json(v.refutation.mu),
            "index": (None if v.refutation.index is None
                      else _key_to_json(v.refutation.index)),
            "deeper": (None if v.refutation.deeper is None
                       else _key_to_json(v.refutation.deeper)),
            "reason": v.refutation.reason},
        "notes": list(v.notes),
    }


def verdict_from_dict(d: dict) -> Verdict:
    horizon = None
    if d.get("horizon") is not None:
        hd = d["horizon"]
        horizon = Horizon(_dec_int(hd["mu_max"]), _dec_int(hd["lambda_max"]),
                          _dec_int(hd["muprime_max"]), _dec_int(hd["cone_max"]))
    witnesses = [WitnessRecord(
        mu=_key_from_json(w["mu"]),
        index=None if w["index"] is None else _key_from_json(w["index"]),
        rule=w["rule"],
        witnesses={_key_from_json(k): morphism_from_dict(m)
                   for k, m in w["witnesses"]},
        extra=_extra_from_json(w["extra"]),
    ) for w in d.get("witnesses", [])]
    refutation = None
    if d.get("refutation") is not None:
        rd = d["refutation"]
        refutation = Refutation(
            mu=_key_from_json(rd["mu"]),
            index=None if rd["index"] is None else _key_from_json(rd["index"]),
            deeper=(None if rd["deeper"] is None
                    else _key_from_json(rd["deeper"])),
            reason=rd["reason"])
    return Verdict(d["property"], d["status"], witnesses, refutation,
                   horizon, list(d.get("notes", [])))


# ---------------------------------------------------------------------------
# reporting


def format_verdict_text(v: Verdict) -> str:
    lines = [f"property: {v.property}", f"status:   {v.status}"]
    if v.horizon is not None:
        lines.append(
            f"horizon:  mu<={v.horizon.mu_max} lambda<={v.horizon.lambda_max} "
            f"mu'<={v.horizon.muprime_max} cone<={v.horizon.cone_max}")
    for w in sorted(v.witnesses, key=lambda w: _sort_key(w.mu)):
        rule = f" [{w.rule}]" if w.rule else ""
        lines.append(f"  mu={w.mu}: index={w.index}{rule}")
        for k in sorted(w.witnesses, key=_sort_key):
            lines.append(f"    witness@{k}: {_one_line_morphism(w.witnesses[k])}")
        for k in sorted(w.extra, key=_sort_key):
            lines.append(f"    {k}: {w.extra[k]}")
    if v.refutation is not None:
        r = v.refutation
        lines.append(f"  refutation: mu={r.mu} index={r.index} "
                     f"deeper={r.deeper} ({r.reason})")
    for note in v.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines)


def _sort_key(k):
    return (0, k, "") if isinstance(k, int) else (1, 0, str(k))


def _one_line_morphism(m) -> str:
    if isinstance(m, PointedMap):
        return f"images={list(m.images)}"
    return f"matrix={m.matrix.to_rows()}"


def exit_code_for(v: Verdict) -> int:
    if v.is_certified():
        return EXIT_POSITIVE
    if v.is_negative():
        return EXIT_NEGATIVE
    return EXIT_INCONCLUSIVE


def _emit(v: Verdict, fmt: str, out):
    if fmt == "structured":
        json.dump(verdict_to_dict(v), out, indent=2, sort_keys=True)
        out.write("\n")
    else:
        out.write(format_verdict_text(v) + "\n")


# ---------------------------------------------------------------------------
# commands


def _horizon_from_args(args) -> Horizon:
    return Horizon(mu_max=args.horizon_mu, lambda_max=args.horizon_lambda,
                   muprime_max=args.horizon_muprime, cone_max=args.cone_depth)


def cmd_validate(args, out) -> int:
    doc = load_document(args.input)
    f = morphism_from_doc(doc, args.seed)
    problems = validate_system(f.source)
    if f.target is not f.source:
        problems += validate_system(f.target)
    problems += validate_morphism(f)
    if problems:
        for p in problems:
            out.write(f"violation: {p}\n")
        return EXIT_NEGATIVE
    out.write("valid\n")
    return EXIT_POSITIVE


def cmd_check(args, out) -> int:
    doc = load_document(args.input)
    f = morphism_from_doc(doc, args.seed)
    if args.oracle:
        v = oracle_check(args.property, f)
    else:
        v = ck.check(args.property, f, _horizon_from_args(args))
    _emit(v, args.format, out)
    return exit_code_for(v)


def cmd_compose(args, out) -> int:
    doc = load_document(args.input)
    if "morphism2" not in doc:
        raise DocumentError("compose needs 'morphism' and 'morphism2'")
    f = morphism_from_doc(doc, args.seed)
    doc2 = dict(doc)
    doc2["morphism"] = doc["morphism2"]
    if "target2" in doc:
        doc2["target"] = doc["target2"]
    # morphism2 runs out of the first morphism's target
    if "target" in doc:
        base = dict(doc["target"])
        base["morphism"] = doc["morphism2"]
        if "target2" in doc:
            base["target"] = doc["target2"]
        doc2 = base
    g = morphism_from_doc(doc2, args.seed)
    g = SystemMorphism(f.target, g.target, g.phi, g.f, name=g.name)
    h = compose_morphisms(g, f)
    report = {
        "phi": [[_key_to_json(nu)[1], _key_to_json(h.phi(nu))[1]]
                for nu in h.target.index.members()],
        "f": [[_key_to_json(nu)[1], morphism_to_dict(h.f(nu))]
              for nu in h.target.index.members()],
    }
    if args.format == "structured":
        json.dump(report, out, indent=2, sort_keys=True)
        out.write("\n")
    else:
        for nu in h.target.index.members():
            out.write(f"nu={nu}: phi={h.phi(nu)} "
                      f"f={_one_line_morphism(h.f(nu))}\n")
    return EXIT_POSITIVE


def cmd_equiv(args, out) -> int:
    doc = load_document(args.input)
    if "morphism2" not in doc:
        raise DocumentError("equiv needs 'morphism' and 'morphism2'")
    f = morphism_from_doc(doc, args.seed)
    doc2 = dict(doc)
    doc2["morphism"] = doc["morphism2"]
    g = morphism_from_doc(doc2, args.seed)
    g = SystemMorphism(f.source, f.target, g.phi, g.f, name=g.name)
    eq = are_equivalent(f, g, mu_max=args.horizon_mu,
                        lambda_max=args.horizon_lambda)
    out.write(("equivalent" if eq else "not equivalent") + "\n")
    return EXIT_POSITIVE if eq else EXIT_NEGATIVE


def cmd_demo(args, out) -> int:
    """The worked walkthrough: one movable morphism between two systems that
    both fail movability at the horizon, plus the image-chain check."""
    F, G, f = fam.example_2_27()
    h = _horizon_from_args(args)
    verdicts = [
        ck.movable_morphism(f, h),
        ck.movable_system(F, h),
        ck.movable_system(G, h),
        ck.mittag_leffler(identity_morphism(G), h),
    ]
    labels = ["movable morphism f : (Z, x2) -> (Z/2^n)",
              "movable system (Z, x2)",
              "movable system (Z/2^n)",
              "mittag-leffler, identity of (Z/2^n)"]
    if args.format == "structured":
        json.dump([verdict_to_dict(v) for v in verdicts], out, indent=2,
                  sort_keys=True)
        out.write("\n")
    else:
        for label, v in zip(labels, verdicts):
            out.write(f"== {label} ==\n")
            _emit(v, "text", out)
            out.write("\n")
    return EXIT_POSITIVE


# ---------------------------------------------------------------------------
# argument parsing


PROPERTY_CHOICES = list(ck.PROPERTIES)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="promov",
        description="Decide movability-type properties of inverse systems "
                    "and their morphisms.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, needs_input=True):
        if needs_input:
            p.add_argument("input", help="instance document (JSON)")
        p.add_argument("--horizon-mu", type=int, default=6)
        p.add_argument("--horizon-lambda", type=int, default=12)
        p.add_argument("--horizon-muprime", type=int, default=13)
        p.add_argument("--cone-depth", type=int, default=13)
        p.add_argument("--format", choices=["text", "structured"],
                       default="text")
        p.add_argument("--seed", type=int, default=None)

    add_common(sub.add_parser("validate", help="check system/morphism axioms"))
    pc = sub.add_parser("check", help="decide a property")
    pc.add_argument("property", choices=PROPERTY_CHOICES)
    pc.add_argument("--oracle", action="store_true",
                    help="brute-force reference run (small finite inputs)")
    add_common(pc)
    add_common(sub.add_parser("compose", help="compose two morphisms"))
    add_common(sub.add_parser("equiv", help="test pro-morphism equivalence"))
    add_common(sub.add_parser("demo", help="run the worked example"),
               needs_input=False)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    commands = {"validate": cmd_validate, "check": cmd_check,
                "compose": cmd_compose, "equiv": cmd_equiv, "demo": cmd_demo}
    try:
        return commands[args.command](args, out)
    except (DocumentError, OracleInputError, OracleCapExceeded,
            ck.HorizonError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except KeyError as e:
        print(f"error: missing document key {e}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
